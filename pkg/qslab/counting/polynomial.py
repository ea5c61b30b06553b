from fractions import Fraction
from numbers import Rational
from typing import Iterable, List, Sequence, Tuple, Union

import sympy
from sympy import QQ, Poly

__all__ = ['RationalPolynomial']


Number = Union[int, Fraction]


def _to_sympy(value: Number) -> sympy.Rational:
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def _to_fraction(value: sympy.Expr) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


class RationalPolynomial:
    """
    A univariate polynomial with exact rational coefficients, backed by a sympy *Poly*
    over QQ.

    Coefficients are given in ascending degree and trailing zeros are dropped, so that the
    leading coefficient is nonzero unless the polynomial is zero.

    :param coefficients: coefficients of degree 0, 1, 2, ...
    :param variable: name of the indeterminate, used by *__str__*
    """

    __slots__ = ['_poly', '_coefficients', '_variable']

    def __init__(self, coefficients: Iterable[Number] = (), variable: str = 'p1') -> None:
        x = sympy.Symbol(variable)
        expression = sum((_to_sympy(c) * x ** i for i, c in enumerate(coefficients)),
                         sympy.Integer(0))
        self._set(Poly(expression, x, domain=QQ), variable)

    def _set(self, poly: Poly, variable: str) -> None:
        values = [_to_fraction(c) for c in reversed(poly.all_coeffs())]
        while values and values[-1] == 0:
            values.pop()
        self._poly = poly
        self._coefficients = tuple(values)  # type: Tuple[Fraction, ...]
        self._variable = variable

    @classmethod
    def _from_poly(cls, poly: Poly, variable: str) -> 'RationalPolynomial':
        polynomial = cls.__new__(cls)
        polynomial._set(poly, variable)
        return polynomial

    @property
    def poly(self) -> Poly:
        """
        The underlying sympy polynomial.
        """
        return self._poly

    @property
    def coefficients(self) -> Tuple[Fraction, ...]:
        return self._coefficients

    @property
    def variable(self) -> str:
        return self._variable

    @property
    def degree(self) -> int:
        """
        Degree of the polynomial, -1 for the zero polynomial.
        """
        return len(self._coefficients) - 1

    def __call__(self, x: Number) -> Fraction:
        if not self._coefficients:
            return Fraction(0)
        return _to_fraction(self._poly.eval(_to_sympy(x)))

    @classmethod
    def interpolate(cls, points: Sequence[Tuple[Number, Number]],
                    variable: str = 'p1') -> 'RationalPolynomial':
        """
        Return the unique polynomial of degree < len(points) going through given points.

        :param points: pairs (x, y) with pairwise distinct x
        :param variable: name of the indeterminate
        :raise ValueError: if two points share their abscissa
        """
        data = [(_to_sympy(x), _to_sympy(y)) for x, y in points]
        if len({x for x, _ in data}) != len(data):
            raise ValueError('Interpolation points must have distinct abscissas')
        if not data:
            return cls((), variable)

        symbol = sympy.Symbol(variable)
        expression = sympy.interpolate(data, symbol)
        return cls._from_poly(Poly(sympy.expand(expression), symbol, domain=QQ), variable)

    def _coerce(self, other):
        if isinstance(other, Rational):
            return RationalPolynomial((other,), self._variable)
        if isinstance(other, RationalPolynomial):
            if other._variable != self._variable:
                return RationalPolynomial(other._coefficients, self._variable)
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._from_poly(self._poly + other._poly, self._variable)

    __radd__ = __add__

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._from_poly(self._poly * other._poly, self._variable)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, RationalPolynomial):
            return self._coefficients == other._coefficients
        elif isinstance(other, Rational):
            return self._coefficients == RationalPolynomial((other,))._coefficients
        else:
            return NotImplemented

    def __hash__(self):
        return hash(self._coefficients)

    def __repr__(self):
        return '{}({!r})'.format(self.__class__.__name__, [str(c) for c in self._coefficients])

    def __str__(self):
        if not self._coefficients:
            return '0'

        terms = []  # type: List[Tuple[str, str]]
        for power in range(len(self._coefficients) - 1, -1, -1):
            c = self._coefficients[power]
            if c == 0:
                continue
            sign = '-' if c < 0 else '+'
            c = abs(c)
            if power == 0:
                monomial = str(c)
            else:
                monomial = self._variable if power == 1 else '{}^{}'.format(self._variable, power)
                if c != 1:
                    monomial = '{}*{}'.format(c, monomial)
            terms.append((sign, monomial))

        first_sign, first = terms[0]
        text = ('-' if first_sign == '-' else '') + first
        for sign, monomial in terms[1:]:
            text += ' {} {}'.format(sign, monomial)
        return text
