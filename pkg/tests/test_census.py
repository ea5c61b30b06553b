from concurrent.futures import ThreadPoolExecutor

import pytest

from qslab.census import (CensusTable, Failure, VerificationReport, canonical_mpm_perm, census,
                          classify, has_single_preimage_shape, has_two_preimage_shape,
                          image_counts, not3_family)
from qslab.census import table
from qslab.exceptions import CutoffError, ShapeError, VerificationError
from qslab.model import Permutation, ltr_decomposition, parse_word
from qslab.preimages import count_preimages
from qslab.utilities import all_permutations


def permutations(*texts):
    return [Permutation(parse_word(text)) for text in texts]


class TestCensus:
    @pytest.mark.parametrize('n, tally', [
        (0, {1: 1}),
        (1, {1: 1}),
        (2, {0: 1, 2: 1}),
        (3, {0: 4, 1: 1, 5: 1}),
        (4, {0: 18, 1: 2, 2: 2, 4: 1, 14: 1}),
    ])
    def test_small_lengths(self, n, tally):
        result = census(n)
        assert result == CensusTable(n, tally)
        assert result.tally == tally

    @pytest.mark.parametrize('n', range(0, 7))
    def test_consistency(self, n):
        assert census(n).is_consistent()

    def test_no_three_preimages(self):
        for n in range(1, 8):
            assert census(n)[3] == 0
            assert 3 not in census(n)

    def test_cutoff(self):
        with pytest.raises(CutoffError):
            census(11)
        with pytest.raises(CutoffError):
            census(5, cutoff=4)
        with pytest.raises(ValueError):
            census(-1)

    def test_workers(self, mocker):
        expected = census(5)
        mocker.patch.dict(table._images, clear=True)
        assert census(5, workers=2) == expected

    def test_concurrent_callers(self, mocker):
        mocker.patch.dict(table._images, clear=True)
        with ThreadPoolExecutor(max_workers=4) as pool:
            results = list(pool.map(image_counts, [5] * 8))
        assert all(result == results[0] for result in results)
        assert sum(results[0].values()) == 120
        assert list(table._images) == [5]

    def test_image_counts(self):
        counts = image_counts(4)
        assert counts[(1, 2, 3, 4)] == 14
        assert counts[(2, 1, 3, 4)] == 4
        assert (1, 3, 2, 4) in counts
        assert (1, 2, 4, 3) not in counts
        assert sum(counts.values()) == 24

    def test_image_counts_is_a_copy(self):
        image_counts(3).clear()
        assert len(image_counts(3)) == 2


class TestClassify:
    @pytest.mark.parametrize('n, k, expected', [
        (4, 1, ['3124', '3214']),
        (4, 2, ['1324', '2314']),
        (4, 4, ['2134']),
        (4, 14, ['1234']),
        (3, 0, ['132', '231', '312', '321']),
        (4, 3, []),
    ])
    def test_examples(self, n, k, expected):
        assert classify(n, k) == permutations(*expected)

    @pytest.mark.parametrize('n', range(1, 7))
    def test_characterizations(self, n):
        perms = [Permutation(v) for v in all_permutations(n)]
        assert [p for p in perms if has_single_preimage_shape(p)] == classify(n, 1)
        assert [p for p in perms if has_two_preimage_shape(p)] == classify(n, 2)

    def test_counts_agree(self):
        for k in [1, 2, 4, 5, 9, 14]:
            for p in classify(5, k):
                assert count_preimages(p) == k


class TestCensusTable:
    def test_table(self):
        t = CensusTable(3, {5: 1, 0: 4, 1: 1, 2: 0})
        assert t.n == 3
        assert list(t) == [0, 1, 5]
        assert t.items() == [(0, 4), (1, 1), (5, 1)]
        assert len(t) == 3
        assert t[2] == 0
        assert 2 not in t
        assert t.total() == 6
        assert t.weighted_total() == 6
        assert t.is_consistent()
        assert repr(t) == 'CensusTable(3, {0: 4, 1: 1, 5: 1})'

    def test_inconsistent(self):
        assert not CensusTable(3, {0: 5, 1: 1}).is_consistent()
        assert not CensusTable(3, {2: 6}).is_consistent()


class TestWitnesses:
    @pytest.mark.parametrize('shape, expected', [
        ((2, 1, 2), '23145'),
        ((1, 2, 1), '3124'),
        ((1, 1, 1), '213'),
    ])
    def test_canonical_mpm_perm(self, shape, expected):
        p = canonical_mpm_perm(*shape)
        assert p == Permutation(parse_word(expected))
        decomposition = ltr_decomposition(p)
        assert decomposition.m == (shape[0], shape[2])
        assert decomposition.p == (shape[1],)

    @pytest.mark.parametrize('shape', [(0, 1, 1), (1, 0, 1), (1, 1, 0)])
    def test_invalid_mpm_shape(self, shape):
        with pytest.raises(ShapeError):
            canonical_mpm_perm(*shape)

    @pytest.mark.parametrize('n, expected', [(0, '2314'), (2, '214536'), (3, '3215647')])
    def test_not3_family(self, n, expected):
        assert not3_family(n) == Permutation(parse_word(expected))

    @pytest.mark.parametrize('n', [0, 2, 3, 4, 5])
    def test_not3_family_counts(self, n):
        assert count_preimages(not3_family(n)) == n + 2

    def test_not3_family_exception(self):
        with pytest.raises(ShapeError) as e:
            not3_family(1)
        assert '13425' in str(e.value)
        with pytest.raises(ShapeError):
            not3_family(-1)


class TestReport:
    def test_failure(self):
        failure = Failure((1, 2), 3, 4)
        assert failure.input == '(1, 2)'
        assert str(failure) == '(1, 2): expected 3, got 4'
        assert failure == Failure('(1, 2)', '3', '4')
        assert Failure('a', 1, 2) < Failure('b', 1, 2)

    def test_passed(self):
        report = VerificationReport('no-three', {'seed': 1, 'max_n': 4}, 4)
        assert report.passed
        assert list(report.parameters) == ['max_n', 'seed']
        assert report.check() is report
        assert repr(report) == "VerificationReport('no-three', cases=4, failures=0)"

    def test_failed(self):
        failures = [Failure('b', 1, 2), Failure('a', 1, 2)]
        report = VerificationReport('no-three', {}, 4, failures)
        assert not report.passed
        assert report.failures == sorted(failures)
        with pytest.raises(VerificationError) as e:
            report.check()
        assert e.value.report is report

    def test_exploratory(self):
        report = VerificationReport('omega-shift', {}, 4, [Failure('a', 1, 2)], exploratory=True)
        assert not report.passed
        assert report.check() is report
        with pytest.raises(VerificationError):
            report.check(strict=True)

    def test_equality(self):
        a = VerificationReport('mpm', {'max_n': 3}, 2, notes={'x': 1})
        assert a == VerificationReport('mpm', {'max_n': 3}, 2, notes={'x': 1})
        assert a != VerificationReport('mpm', {'max_n': 3}, 2)
        assert a.notes == {'x': 1}
