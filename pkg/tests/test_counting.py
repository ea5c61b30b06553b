from fractions import Fraction

import pytest
import sympy

from qslab.counting import (BallotTable, RationalPolynomial, ballot_b, ballot_collapse, ballot_g,
                            ballot_to_catalan, catalan, catalan_decomposition, count_k_largest_ltr,
                            count_q0, count_q1, count_q2, count_q2_closed, derangement,
                            derangement_alternating, mpm_full, mpm_simple, multiset_coeff,
                            omega_poly)
from qslab.counting import formulas
from qslab.exceptions import FormulaError, IndexRangeError


class TestNumbers:
    def test_catalan(self):
        assert [catalan(n) for n in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]

    def test_derangement(self):
        expected = [1, 0, 1, 2, 9, 44, 265, 1854]
        assert [derangement(n) for n in range(8)] == expected
        assert [derangement_alternating(n) for n in range(8)] == expected

    @pytest.mark.parametrize('n', [30, 50])
    def test_derangement_large(self, n):
        assert derangement(n) == derangement_alternating(n)

    @pytest.mark.parametrize('u, v, expected', [
        (3, 2, 6),
        (2, 2, 3),
        (5, 0, 1),
        (0, 0, 1),
        (0, 3, 0),
        (1, 4, 1),
    ])
    def test_multiset_coeff(self, u, v, expected):
        assert multiset_coeff(u, v) == expected

    @pytest.mark.parametrize('function, args', [
        (catalan, (-1,)),
        (derangement, (-1,)),
        (multiset_coeff, (-1, 2)),
        (count_q0, (0,)),
        (count_q1, (0,)),
        (count_q2_closed, (1,)),
        (mpm_simple, (0, 1, 1)),
        (mpm_full, (1, 0, 1)),
    ])
    def test_invalid_arguments(self, function, args):
        with pytest.raises(ValueError):
            function(*args)


class TestCensusSequences:
    def test_q0(self):
        assert [count_q0(n) for n in range(1, 7)] == [0, 1, 4, 18, 96, 600]

    def test_q1(self):
        assert [count_q1(n) for n in range(1, 7)] == [1, 0, 1, 2, 9, 44]

    def test_q2(self):
        assert [count_q2(n) for n in range(8)] == [0, 0, 1, 0, 2, 6, 32, 190]

    @pytest.mark.parametrize('n', range(2, 16))
    def test_q2_closed_form(self, n):
        assert count_q2_closed(n) == count_q2(n)


class TestBallot:
    def test_rows(self):
        table = BallotTable()
        assert table.size == 1
        assert table.row(1) == [1]
        assert table.row(4) == [1, 3, 5, 5]
        assert table.row(5) == [1, 4, 9, 14, 14]
        assert table.size == 5

    def test_row_is_a_copy(self):
        table = BallotTable()
        table.row(3).append(42)
        assert table.row(3) == [1, 2, 2]

    @pytest.mark.parametrize('n', range(1, 12))
    def test_row_sums(self, n):
        assert sum(ballot_b(n, i) for i in range(1, n + 1)) == catalan(n)

    def test_values(self):
        assert ballot_b(4, 3) == 5
        assert ballot_b(6, 3) == 14
        assert ballot_g(4, 3) == 5
        assert ballot_g(3, 4) == 1
        assert ballot_g(3, 2) == catalan(2)

    @pytest.mark.parametrize('n', range(1, 20))
    def test_g_reflects_b(self, n):
        for i in range(2, n + 2):
            assert ballot_g(n, i) == ballot_b(n, n + 2 - i)

    @pytest.mark.parametrize('function, n, i', [
        (ballot_b, 3, 0),
        (ballot_b, 3, 4),
        (ballot_b, 0, 0),
        (ballot_g, 3, 1),
        (ballot_g, 3, 5),
        (ballot_g, 0, 2),
    ])
    def test_out_of_range(self, function, n, i):
        with pytest.raises(IndexRangeError):
            function(n, i)

    def test_missing_row(self):
        with pytest.raises(IndexRangeError):
            BallotTable().row(0)

    @pytest.mark.parametrize('n, i, expected', [(4, 2, 3), (4, 4, 5), (5, 3, 9), (6, 4, 28)])
    def test_collapse(self, n, i, expected):
        assert ballot_collapse(n, i) == expected

    @pytest.mark.parametrize('n, i', [(3, 1), (3, 4), (0, 2)])
    def test_collapse_out_of_range(self, n, i):
        with pytest.raises(IndexRangeError):
            ballot_collapse(n, i)

    @pytest.mark.parametrize('m1, j, expected', [(1, 0, 1), (4, 0, 14), (2, 1, 3), (3, 2, 14)])
    def test_to_catalan(self, m1, j, expected):
        assert ballot_to_catalan(m1, j) == expected
        assert ballot_to_catalan(m1, j) == ballot_b(m1 + j + 1, m1)

    @pytest.mark.parametrize('n, k, expected', [(2, 2, 9), (1, 0, 1), (3, 0, 5), (1, 3, 4)])
    def test_k_largest_ltr(self, n, k, expected):
        assert count_k_largest_ltr(n, k) == expected


class TestMpm:
    @pytest.mark.parametrize('shape, expected', [
        ((1, 1, 2), 4),
        ((2, 2, 2), 11),
        ((2, 1, 2), 9),
        ((2, 1, 3), 34),
        ((3, 1, 1), 5),
        ((1, 1, 1), 1),
    ])
    def test_values(self, shape, expected):
        assert mpm_simple(*shape) == expected
        assert mpm_full(*shape) == expected

    @pytest.mark.parametrize('m1', range(1, 7))
    @pytest.mark.parametrize('p1', range(1, 5))
    def test_single_last_maximum(self, m1, p1):
        assert mpm_simple(m1, p1, 1) == catalan(m1)

    def test_formulas_agree(self):
        for m1 in range(1, 7):
            for p1 in range(1, 7):
                for m2 in range(1, 7):
                    assert mpm_full(m1, p1, m2) == mpm_simple(m1, p1, m2)


class TestCatalanDecomposition:
    @pytest.mark.parametrize('p1', range(1, 6))
    def test_small_blocks(self, p1):
        assert catalan_decomposition(1, p1) == [1]
        assert catalan_decomposition(2, p1) == [p1 + 1, 1]
        assert catalan_decomposition(3, p1) == [(p1 + 1) * (p1 + 4) // 2, p1 + 1, 1]

    @pytest.mark.parametrize('m2, p1', [(3, 2), (4, 1), (4, 3), (5, 2)])
    def test_decomposition(self, m2, p1):
        coefficients = catalan_decomposition(m2, p1)
        assert len(coefficients) == m2
        for m1 in range(1, 10):
            assert sum(c * catalan(m1 + t) for t, c in enumerate(coefficients)) == \
                mpm_simple(m1, p1, m2)

    def test_inconsistent_counts(self, mocker):
        mocker.patch.object(formulas, 'mpm_simple', return_value=1)
        with pytest.raises(FormulaError):
            catalan_decomposition(2, 97)

    def test_solve(self):
        assert formulas._solve([[1, 2], [2, 5]], [1, 1]) == [3, -1]
        assert formulas._solve([[2]], [1]) == [Fraction(1, 2)]

    def test_singular_system(self):
        with pytest.raises(FormulaError):
            formulas._solve([[1, 2], [2, 4]], [1, 2])

    def test_omega(self):
        assert omega_poly(1, 0) == RationalPolynomial([1])
        assert omega_poly(2, 0) == RationalPolynomial([1, 1])
        assert omega_poly(2, 1) == 1
        assert omega_poly(3, 0) == RationalPolynomial([2, Fraction(5, 2), Fraction(1, 2)])
        assert str(omega_poly(3, 0)) == '1/2*p1^2 + 5/2*p1 + 2'

    @pytest.mark.parametrize('m2, t', [(3, 3), (3, -1), (2, 5)])
    def test_omega_out_of_range(self, m2, t):
        with pytest.raises(IndexRangeError):
            omega_poly(m2, t)


class TestRationalPolynomial:
    def test_coefficients(self):
        p = RationalPolynomial([1, 2, 0, 0])
        assert p.coefficients == (Fraction(1), Fraction(2))
        assert p.degree == 1
        assert p.variable == 'p1'
        assert RationalPolynomial().degree == -1

    def test_evaluation(self):
        p = RationalPolynomial([2, Fraction(5, 2), Fraction(1, 2)])
        assert [p(x) for x in range(1, 5)] == [5, 9, 14, 20]
        assert RationalPolynomial()(3) == 0

    def test_interpolation(self):
        p = RationalPolynomial.interpolate([(1, 5), (2, 9), (3, 14)])
        assert p == RationalPolynomial([2, Fraction(5, 2), Fraction(1, 2)])
        assert RationalPolynomial.interpolate([(4, 7)]) == 7

        with pytest.raises(ValueError):
            RationalPolynomial.interpolate([(1, 2), (1, 3)])

    def test_sympy_poly(self):
        p = RationalPolynomial.interpolate([(1, 5), (2, 9), (3, 14)])
        x = sympy.Symbol('p1')
        assert p.poly == sympy.Poly(x ** 2 / 2 + 5 * x / 2 + 2, x, domain='QQ')
        assert p(Fraction(1, 2)) == Fraction(27, 8)

    def test_arithmetic(self):
        x = RationalPolynomial([0, 1])
        assert x * x + 1 == RationalPolynomial([1, 0, 1])
        assert 2 * x == RationalPolynomial([0, 2])
        assert 1 + x == RationalPolynomial([1, 1])
        assert x + x * -1 == RationalPolynomial()
        assert hash(x * 1) == hash(x)

    @pytest.mark.parametrize('coefficients, text', [
        ([], '0'),
        ([0, 1], 'p1'),
        ([-1, 0, 2], '2*p1^2 - 1'),
        ([Fraction(1, 3)], '1/3'),
        ([0, -1], '-p1'),
        ([2, Fraction(5, 2), Fraction(1, 2)], '1/2*p1^2 + 5/2*p1 + 2'),
    ])
    def test_str(self, coefficients, text):
        assert str(RationalPolynomial(coefficients)) == text

    def test_variable(self):
        assert str(RationalPolynomial([1, 1], variable='m')) == 'm + 1'
