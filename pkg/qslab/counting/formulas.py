import logging

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import List, Tuple

import sympy
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from ..exceptions import FormulaError, IndexRangeError
from .ballot import ballot_b, ballot_g
from .polynomial import RationalPolynomial

__all__ = ['catalan', 'derangement', 'derangement_alternating', 'multiset_coeff',
           'count_q0', 'count_q1', 'count_q2', 'count_q2_closed', 'count_k_largest_ltr',
           'mpm_full', 'mpm_simple', 'ballot_collapse', 'ballot_to_catalan',
           'catalan_decomposition', 'omega_poly']

logger = logging.getLogger(__name__)


def _check_count(name: str, value: int, minimum: int = 0) -> None:
    if value < minimum:
        raise ValueError('{} must be at least {}, not {}'.format(name, minimum, value))


def catalan(n: int) -> int:
    """
    Return the n-th Catalan number, binomial(2n, n) / (n+1).
    """
    _check_count('n', n)
    return comb(2 * n, n) // (n + 1)


@lru_cache(maxsize=None)
def derangement(n: int) -> int:
    """
    Number of permutations of length n without fixed point, by the recurrence
    D(n) = (n-1) (D(n-1) + D(n-2)) with D(0) = 1 and D(1) = 0.
    """
    _check_count('n', n)
    previous, current = 1, 0
    if n == 0:
        return previous
    for m in range(2, n + 1):
        previous, current = current, (m - 1) * (current + previous)
    return current


def derangement_alternating(n: int) -> int:
    """
    Number of derangements of length n, by the alternating sum n! (1 - 1/1! + 1/2! - ...).
    Evaluated exactly with rationals, to cross-check *derangement*.
    """
    _check_count('n', n)
    total = sum(Fraction((-1) ** i, factorial(i)) for i in range(n + 1))
    value = factorial(n) * total
    if value.denominator != 1:  # pragma: no cover
        raise FormulaError('Alternating sum for D({}) is not an integer: {}'.format(n, value))
    return value.numerator


def multiset_coeff(u: int, v: int) -> int:
    """
    Number of multisets of cardinality v over a set of cardinality u, binomial(u+v-1, v).
    By convention, (u, 0) is 1 for every u, and (0, v) is 0 for v > 0.
    """
    _check_count('u', u)
    _check_count('v', v)
    if v == 0:
        return 1
    if u == 0:
        return 0
    return comb(u + v - 1, v)


def count_q0(n: int) -> int:
    """
    Number of permutations of length n without preimage, (n-1)! (n-1).
    """
    _check_count('n', n, 1)
    return factorial(n - 1) * (n - 1)


def count_q1(n: int) -> int:
    """
    Number of permutations of length n with exactly one preimage, that is D(n-1).
    """
    _check_count('n', n, 1)
    return derangement(n - 1)


def count_q2(n: int) -> int:
    """
    Number of permutations of length n with exactly two preimages, by the recurrence
    q(n+1) = (n-1) (q(n) + q(n-1)) for n >= 3, with q(0) = q(1) = q(3) = 0 and q(2) = 1.
    """
    _check_count('n', n)
    initial = (0, 0, 1, 0)
    if n < len(initial):
        return initial[n]
    previous, current = initial[2], initial[3]
    for m in range(3, n):
        previous, current = current, (m - 1) * (current + previous)
    return current


def count_q2_closed(n: int) -> int:
    """
    Closed form (n-1)! - 2 D(n-1) for the number of permutations of length n >= 2 with
    exactly two preimages.
    """
    _check_count('n', n, 2)
    return factorial(n - 1) - 2 * count_q1(n)


def count_k_largest_ltr(n: int, k: int) -> int:
    """
    Number of 321-avoiding permutations of length n+k whose k largest elements are all
    LTR maxima, given by the sum over i = 0..n-1 of multiset(n-i+1, k) b(n, i+1).

    :param n: n >= 1
    :param k: k >= 0
    """
    _check_count('n', n, 1)
    _check_count('k', k)
    return sum(multiset_coeff(n - i + 1, k) * ballot_b(n, i + 1) for i in range(n))


def _sum_or_one(terms: List[int]) -> int:
    # A summation over an empty index set counts as 1 in the full formula.
    return sum(terms) if terms else 1


def mpm_full(m1: int, p1: int, m2: int) -> int:
    """
    Number of preimages of a permutation with LTR-max decomposition M_1 P_1 M_2, where
    |M_1| = m1, |P_1| = p1 and |M_2| = m2, using the full formula with multiset coefficients
    and both b and g triangles. Every summation over an empty set of indices counts as 1.
    """
    _check_count('m1', m1, 1)
    _check_count('p1', p1, 1)
    _check_count('m2', m2, 1)

    total = 0
    for i in range(1, m2 + 1):
        for j in range(0, i):
            left = _sum_or_one([
                multiset_coeff(m1 - l, j + 1) * ballot_b(m1 - 1, l + 1)
                for l in range(0, m1 - 1)
            ])
            right = _sum_or_one([
                ballot_g(m2 - i, h) * multiset_coeff(h, p1 + i - j - 1)
                for h in range(2, m2 - i + 2)
            ])
            total += comb(i - 1, j) * left * right
    return total


def mpm_simple(m1: int, p1: int, m2: int) -> int:
    """
    Number of preimages of a permutation with LTR-max decomposition M_1 P_1 M_2, as the
    double sum over i = 1..m2 and j = 0..i-1 of binomial(i-1, j) b(m1+j+1, m1) b(m2+p1-j, m2-i+1).
    """
    _check_count('m1', m1, 1)
    _check_count('p1', p1, 1)
    _check_count('m2', m2, 1)
    return sum(
        comb(i - 1, j) * ballot_b(m1 + j + 1, m1) * ballot_b(m2 + p1 - j, m2 - i + 1)
        for i in range(1, m2 + 1)
        for j in range(0, i)
    )


def ballot_collapse(n: int, i: int) -> int:
    """
    Express b(n, i) in terms of row i-1: sum over h = 1..i-1 of binomial(n-h, n-i) b(i-1, h).

    :param n: n >= 1
    :param i: 2 <= i <= n
    :raise IndexRangeError: if (n, i) is out of range
    """
    if n < 1 or not 2 <= i <= n:
        raise IndexRangeError('({}, {}) is outside n >= 1, 2 <= i <= n'.format(n, i))
    return sum(comb(n - h, n - i) * ballot_b(i - 1, h) for h in range(1, i))


def ballot_to_catalan(m1: int, j: int) -> int:
    """
    Express b(m1+j+1, m1) as an alternating sum of Catalan numbers: sum over
    h = 1..floor((j+1)/2)+1 of (-1)^(h-1) binomial(j+2-h, h-1) C(m1+j+1-h).
    """
    _check_count('m1', m1, 1)
    _check_count('j', j)
    return sum(
        (-1) ** (h - 1) * comb(j + 2 - h, h - 1) * catalan(m1 + j + 1 - h)
        for h in range(1, (j + 1) // 2 + 2)
    )


def _solve(matrix: List[List[int]], vector: List[int]) -> List[Fraction]:
    # Exact solve over QQ.
    system = DomainMatrix.from_Matrix(sympy.Matrix(matrix)).to_field()
    rhs = DomainMatrix.from_Matrix(sympy.Matrix(vector)).to_field()
    try:
        solution = system.inv() * rhs
    except DMNonInvertibleMatrixError:
        raise FormulaError('Singular system while solving for Catalan coefficients')
    return [Fraction(int(c.p), int(c.q)) for c in solution.to_Matrix()]


@lru_cache(maxsize=256)
def _decomposition(m2: int, p1: int) -> Tuple[int, ...]:
    matrix = [[catalan(m1 + t) for t in range(m2)] for m1 in range(1, m2 + 1)]
    vector = [mpm_simple(m1, p1, m2) for m1 in range(1, m2 + 1)]
    solution = _solve(matrix, vector)

    if any(c.denominator != 1 for c in solution):
        raise FormulaError('Non integral Catalan coefficients for m2={}, p1={}: {}'.format(
            m2, p1, [str(c) for c in solution]))
    coefficients = tuple(c.numerator for c in solution)

    for m1 in range(m2 + 1, m2 + 4):
        expected = mpm_simple(m1, p1, m2)
        actual = sum(c * catalan(m1 + t) for t, c in enumerate(coefficients))
        if expected != actual:
            raise FormulaError('Catalan coefficients {} for m2={}, p1={} fail at m1={}: '
                               '{} != {}'.format(coefficients, m2, p1, m1, actual, expected))
    return coefficients


def catalan_decomposition(m2: int, p1: int) -> List[int]:
    """
    Return the coefficients (c_0, ..., c_{m2-1}) such that, for every m1 >= 1,
    mpm_simple(m1, p1, m2) = c_0 C(m1) + c_1 C(m1+1) + ... + c_{m2-1} C(m1+m2-1).

    Coefficients are obtained by solving the linear system given by m1 = 1..m2 with exact
    rationals, and are then checked for m1 = m2+1..m2+3.

    :param m2: m2 >= 1
    :param p1: p1 >= 1
    :return: list of m2 integers
    :raise FormulaError: if the system is singular, or if the coefficients are not integers
        or fail the additional checks
    """
    _check_count('m2', m2, 1)
    _check_count('p1', p1, 1)
    return list(_decomposition(m2, p1))


def omega_poly(m2: int, t: int) -> RationalPolynomial:
    """
    Return the polynomial in p1 giving the coefficient of C(m1+t) in *catalan_decomposition*
    for given m2.

    The polynomial is expected to have degree m2-t-1: it is interpolated on p1 = 1..m2-t,
    and checked against one more point.

    :param m2: m2 >= 1
    :param t: 0 <= t <= m2-1
    :return: a *RationalPolynomial* in p1
    :raise FormulaError: if the additional point does not lie on the polynomial
    """
    _check_count('m2', m2, 1)
    if not 0 <= t <= m2 - 1:
        raise IndexRangeError('t={} is outside 0..{}'.format(t, m2 - 1))

    points = [(p1, catalan_decomposition(m2, p1)[t]) for p1 in range(1, m2 - t + 1)]
    polynomial = RationalPolynomial.interpolate(points)

    extra = m2 - t + 1
    expected = catalan_decomposition(m2, extra)[t]
    if polynomial(extra) != expected:
        raise FormulaError('Coefficient of C(m1+{}) for m2={} is not of degree {}: '
                           'interpolation gives {} at p1={} instead of {}'.format(
                               t, m2, m2 - t - 1, polynomial(extra), extra, expected))
    logger.debug('omega(%d, %d) = %s', m2, t, polynomial)
    return polynomial
