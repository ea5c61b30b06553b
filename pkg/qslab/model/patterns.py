from itertools import combinations
from typing import FrozenSet, Iterable, List

from .decomposition import ltr_maxima
from .words import InjectiveWord, Permutation

__all__ = ['contains_pattern', 'avoids_321', 'foata', 'foata_cycles', 'fixed_points']


def _pattern_of(values) -> tuple:
    ranks = {value: rank for rank, value in enumerate(sorted(values), start=1)}
    return tuple(ranks[v] for v in values)


def contains_pattern(word: Iterable[int], pattern: Iterable[int]) -> bool:
    """
    Holds if some subsequence of given word is order-isomorphic to given pattern.

    This is the generic (exhaustive) test; see *avoids_321* for a linear scan.

    :param word: an injective word
    :param pattern: a permutation
    :return: True if word contains pattern
    """
    word = tuple(word)
    pattern = tuple(pattern)
    if len(pattern) > len(word):
        return False
    for subsequence in combinations(word, len(pattern)):
        if _pattern_of(subsequence) == pattern:
            return True
    return False


def avoids_321(word: Iterable[int]) -> bool:
    """
    Holds if given word avoids the pattern 321, using a single left-to-right scan.

    The scan keeps the current maximum and the largest value that already has a larger value
    on its left (the best "2" of a 21 pair). A new value below the latter completes a 321.

    :param word: an injective word
    :return: True if word avoids 321
    """
    largest = 0
    middle = 0
    for value in word:
        if value < middle:
            return False
        if value > largest:
            largest = value
        else:
            middle = value
    return True


def foata_cycles(permutation: Iterable[int]) -> List[tuple]:
    """
    Cut given one-line word into cycles, opening a cycle before each LTR maximum.

    :param permutation: a permutation in one-line notation
    :return: list of cycles, as tuples
    """
    values = tuple(permutation)
    starts = sorted(ltr_maxima(values)) + [len(values) + 1]
    return [values[a - 1:b - 1] for a, b in zip(starts, starts[1:])]


def foata(permutation: Permutation) -> Permutation:
    """
    Foata's fundamental bijection: read given permutation in one-line notation, insert a
    left parenthesis before every LTR maximum, and return the permutation defined by the
    resulting cycles, in one-line notation.

    :param permutation: a *Permutation*
    :return: a *Permutation*
    """
    image = [0] * len(permutation)
    for cycle in foata_cycles(permutation):
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            image[a - 1] = b
    return Permutation._trusted(tuple(image))  # type: ignore


def fixed_points(permutation: InjectiveWord) -> FrozenSet[int]:
    """
    Positions i such that p_i = i.
    """
    return frozenset(i for i, v in enumerate(permutation, start=1) if v == i)
