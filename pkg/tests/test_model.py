import pytest

from hypothesis import given
from hypothesis.strategies import permutations

from qslab.exceptions import ShapeError, WordError
from qslab.model import (InjectiveWord, Permutation, avoids_321, contains_pattern, fixed_points,
                         foata, foata_cycles, identity, ltr_decomposition, ltr_maxima,
                         ltr_signature, parse_word, standardize, word_with_ltr_positions)


class TestWords:
    @pytest.mark.parametrize('text, values', [
        ('21543', [2, 1, 5, 4, 3]),
        ('10 2 7', [10, 2, 7]),
        ('2,1,3', [2, 1, 3]),
        (' 4, 12 ,3 ', [4, 12, 3]),
        ('5', [5]),
        ('', []),
    ])
    def test_parse_word(self, text, values):
        assert parse_word(text) == InjectiveWord(values)

    @pytest.mark.parametrize('text', ['121', '1 1', '0 1', '-1 2', '1 a', '10', '2 x3'])
    def test_parse_word_errors(self, text):
        with pytest.raises(WordError):
            parse_word(text)

    def test_word_values(self):
        word = InjectiveWord([3, 9, 4])
        assert word.values == (3, 9, 4)
        assert word.value_at(1) == 3
        assert word.value_at(3) == 4
        assert len(word) == 3
        assert list(word) == [3, 9, 4]
        assert word[1:] == (9, 4)
        assert str(word) == '3 9 4'
        assert repr(word) == 'InjectiveWord([3, 9, 4])'

        with pytest.raises(IndexError):
            word.value_at(0)
        with pytest.raises(IndexError):
            word.value_at(4)

    @pytest.mark.parametrize('values', [[1, 1], [0], [True], [1.0], ['1']])
    def test_invalid_words(self, values):
        with pytest.raises(WordError):
            InjectiveWord(values)

    def test_words_are_values(self):
        assert InjectiveWord([2, 1]) == Permutation([2, 1])
        assert hash(InjectiveWord([2, 1])) == hash(Permutation([2, 1]))
        assert sorted([InjectiveWord([2, 1]), InjectiveWord([1, 3])]) == [
            InjectiveWord([1, 3]), InjectiveWord([2, 1])]
        assert len({InjectiveWord([1, 2]), Permutation([1, 2])}) == 1

    def test_permutation(self):
        assert Permutation([2, 3, 1]).is_permutation()
        assert not InjectiveWord([2, 7]).is_permutation()
        with pytest.raises(WordError):
            Permutation([1, 3])

    def test_increasing(self):
        assert identity(4).is_increasing()
        assert InjectiveWord([2, 7, 10]).is_increasing()
        assert InjectiveWord([]).is_increasing()
        assert not InjectiveWord([2, 1]).is_increasing()

    @pytest.mark.parametrize('values, expected', [
        ([10, 2, 7], [3, 1, 2]),
        ([1, 2, 3], [1, 2, 3]),
        ([5, 4, 9], [2, 1, 3]),
    ])
    def test_standardize(self, values, expected):
        result = standardize(InjectiveWord(values))
        assert isinstance(result, Permutation)
        assert result == Permutation(expected)

    @given(permutations(list(range(1, 8))))
    def test_standardize_preserves_structure(self, values):
        p = Permutation(values)
        assert standardize(p) == p
        scaled = InjectiveWord(3 * v + 1 for v in values)
        assert ltr_maxima(scaled) == ltr_maxima(p)
        assert ltr_decomposition(scaled).m == ltr_decomposition(p).m
        assert ltr_decomposition(scaled).p == ltr_decomposition(p).p


class TestDecomposition:
    @pytest.mark.parametrize('values, positions', [
        ([2, 1, 5, 4, 3], {1, 3}),
        ([1, 2, 3], {1, 2, 3}),
        ([3, 2, 1], {1}),
        ([], set()),
    ])
    def test_ltr_maxima(self, values, positions):
        assert ltr_maxima(InjectiveWord(values)) == positions

    def test_signature(self):
        assert ltr_signature(InjectiveWord([2, 1, 5, 4, 3])) == (1, 3)
        assert ltr_signature(InjectiveWord([5, 2, 7, 9])) == ltr_signature(Permutation([2, 1, 3, 4]))

    def test_mpm_shape(self):
        d = ltr_decomposition(Permutation([2, 3, 1, 4, 5]))
        assert d.k == 2
        assert d.m == (2, 2)
        assert d.p == (1,)
        assert d.mu == (3, 5)
        assert d.blocks_values() == [(2, 3), (1,), (4, 5)]
        assert d.ltr_positions == {1, 2, 4, 5}

    def test_empty_last_block(self):
        d = ltr_decomposition(Permutation([2, 1, 5, 4, 3]))
        assert d.k == 3
        assert d.m == (1, 1, 0)
        assert d.p == (1, 2)
        assert d.mu == (2, 5, None)
        assert d.blocks_values() == [(2,), (1,), (5,), (4, 3), ()]
        assert repr(d.m_blocks[-1]) == 'M3[6:5]'

    def test_increasing(self):
        d = ltr_decomposition(identity(3))
        assert d.k == 1
        assert d.blocks_values() == [(1, 2, 3)]
        assert d.p_blocks == ()

    def test_blocks(self):
        d = ltr_decomposition(Permutation([1, 3, 2, 4]))
        assert d.block('M', 1).positions == range(1, 3)
        assert d.values(d.block('P', 1)) == (2,)
        assert d.adjacent_ltr_pairs() == [(1, 2)]
        with pytest.raises(IndexError):
            d.block('P', 2)

    def test_empty_word(self):
        with pytest.raises(ShapeError):
            ltr_decomposition(InjectiveWord([]))

    @given(permutations(list(range(1, 9))))
    def test_blocks_reproduce_word(self, values):
        p = Permutation(values)
        d = ltr_decomposition(p)
        assert tuple(v for block in d.blocks_values() for v in block) == p.values
        assert d.ltr_positions == ltr_maxima(p)
        assert all(len(b) > 0 for b in d.p_blocks)
        assert all(len(b) > 0 for b in d.m_blocks[:-1])
        for block in d.p_blocks:
            assert not set(block.positions) & ltr_maxima(p)

    @pytest.mark.parametrize('n, positions, expected', [
        (5, {1, 3, 4}, [3, 1, 4, 5, 2]),
        (3, {1, 2, 3}, [1, 2, 3]),
        (3, {1}, [3, 1, 2]),
        (0, set(), []),
    ])
    def test_word_with_ltr_positions(self, n, positions, expected):
        result = word_with_ltr_positions(n, positions)
        assert result == Permutation(expected)
        assert ltr_maxima(result) == positions

    @pytest.mark.parametrize('n, positions', [(3, {2}), (3, {1, 4}), (2, {0, 1})])
    def test_word_with_invalid_ltr_positions(self, n, positions):
        with pytest.raises(WordError):
            word_with_ltr_positions(n, positions)


class TestPatterns:
    @pytest.mark.parametrize('values, pattern, expected', [
        ([2, 1, 5, 4, 3], [3, 2, 1], True),
        ([1, 2, 3], [2, 1], False),
        ([2, 3, 1, 4], [3, 2, 1], False),
        ([1, 2], [1, 2, 3], False),
    ])
    def test_contains_pattern(self, values, pattern, expected):
        assert contains_pattern(values, pattern) == expected

    @pytest.mark.parametrize('values, expected', [
        ([2, 3, 1, 4, 5], True),
        ([3, 2, 1], False),
        (list(range(1, 10)), True),
        ([], True),
    ])
    def test_avoids_321(self, values, expected):
        assert avoids_321(values) == expected

    def test_avoids_321_agrees_with_pattern(self, symmetric_group):
        for p in symmetric_group:
            assert avoids_321(p) == (not contains_pattern(p, (3, 2, 1)))


class TestFoata:
    @pytest.mark.parametrize('values, cycles, expected', [
        ([2, 1, 5, 4, 3], [(2, 1), (5, 4, 3)], [2, 1, 5, 3, 4]),
        ([1, 2, 3], [(1,), (2,), (3,)], [1, 2, 3]),
        ([3, 1, 2], [(3, 1, 2)], [2, 3, 1]),
    ])
    def test_foata(self, values, cycles, expected):
        assert foata_cycles(values) == cycles
        assert foata(Permutation(values)) == Permutation(expected)

    def test_bijection(self, symmetric_group):
        assert len({foata(p) for p in symmetric_group}) == len(symmetric_group)

    @pytest.mark.parametrize('values, expected', [
        ([1, 2, 3], {1, 2, 3}),
        ([2, 1, 3], {3}),
        ([2, 3, 1], set()),
    ])
    def test_fixed_points(self, values, expected):
        assert fixed_points(Permutation(values)) == expected
