import logging
import os

from functools import lru_cache
from itertools import permutations
from typing import Iterable, Iterator, List, Set, Tuple

from ..counting import catalan, mpm_simple
from ..exceptions import CutoffError, ShapeError
from ..model import (InjectiveWord, Permutation, ltr_decomposition, ltr_signature,
                     word_with_ltr_positions)
from ..sorting import run_moves

__all__ = ['PreimageSet', 'gen_av321', 'preimages', 'split_preimages', 'preimages_oracle',
           'count_preimages', 'has_preimage', 'oracle_cutoff', 'formula_applies',
           'DEFAULT_ORACLE_CUTOFF', 'ORACLE_CUTOFF_VARIABLE', 'METHODS']

logger = logging.getLogger(__name__)

DEFAULT_ORACLE_CUTOFF = 9
ORACLE_CUTOFF_VARIABLE = 'QSLAB_MAX_ORACLE'
METHODS = ('recursive', 'formula', 'oracle', 'auto')

Values = Tuple[int, ...]


class PreimageSet:
    """
    The set of preimages of a target word under Queuesort.

    Members are kept sorted lexicographically, so that iteration and textual output are
    deterministic. Two preimage sets are equal if they share their target and members.

    :param target: the target word
    :param members: an iterable of words whose image is the target
    """

    __slots__ = ['_target', '_members']

    def __init__(self, target: InjectiveWord, members: Iterable[InjectiveWord] = ()) -> None:
        self._target = target
        self._members = tuple(sorted(set(members)))

    @property
    def target(self) -> InjectiveWord:
        return self._target

    @property
    def members(self) -> Tuple[InjectiveWord, ...]:
        """
        Members, in lexicographic order.
        """
        return self._members

    def __len__(self):
        return len(self._members)

    def __iter__(self) -> Iterator[InjectiveWord]:
        return iter(self._members)

    def __contains__(self, word):
        return word in set(self._members)

    def __eq__(self, other):
        if isinstance(other, PreimageSet):
            return self._target == other._target and self._members == other._members
        else:
            return NotImplemented

    def __hash__(self):
        return hash((self._target, self._members))

    def __repr__(self):
        return '{}({!r}, {} members)'.format(
            self.__class__.__name__, self._target, len(self._members))


def oracle_cutoff(cutoff: int = None) -> int:
    """
    Return the largest length accepted by exhaustive scans over S_n.

    Given cutoff is returned if provided. Otherwise, environment variable QSLAB_MAX_ORACLE
    is used if set, and DEFAULT_ORACLE_CUTOFF if not.

    :param cutoff: an explicit cutoff, if any
    :return: the cutoff to use
    :raise CutoffError: if the environment variable does not hold a non-negative integer
    """
    if cutoff is not None:
        return cutoff
    value = os.environ.get(ORACLE_CUTOFF_VARIABLE)
    if value is None or value.strip() == '':
        return DEFAULT_ORACLE_CUTOFF
    try:
        cutoff = int(value)
    except ValueError:
        cutoff = -1
    if cutoff < 0:
        raise CutoffError(None, value)
    return cutoff


def _av321(n: int) -> Iterator[Values]:
    # A prefix extends to a 321-avoider iff each new value is either the smallest unused value,
    # or larger than every value placed so far. Candidates are tried in increasing order.
    def extend(prefix: List[int], unused: List[int], largest: int) -> Iterator[Values]:
        if not unused:
            yield tuple(prefix)
            return
        smallest = unused[0]
        for index, value in enumerate(unused):
            if value != smallest and value < largest:
                continue
            prefix.append(value)
            yield from extend(prefix, unused[:index] + unused[index + 1:], max(largest, value))
            prefix.pop()

    return extend([], list(range(1, n + 1)), 0)


def gen_av321(n: int) -> Iterator[Permutation]:
    """
    Generate the 321-avoiding permutations of length n, in lexicographic order.

    Prefixes are extended one value at a time and pruned as soon as they cannot be completed
    without creating a 321, so that only C_n permutations are ever built.

    :param n: a non-negative length
    :return: an iterator over *Permutation* instances
    """
    if n < 0:
        raise ValueError('Length must be non-negative, not {}'.format(n))
    for values in _av321(n):
        yield Permutation._trusted(values)  # type: ignore


def _is_increasing(values: Values) -> bool:
    return all(a < b for a, b in zip(values, values[1:]))


def _preimages(values: Values) -> Set[Values]:
    if not values:
        return {()}
    if values[-1] != max(values):
        return set()
    if _is_increasing(values):
        return {tuple(values[v - 1] for v in p) for p in _av321(len(values))}
    concatenated, inserted = _cases(values)
    return concatenated | inserted


def _cases(values: Values) -> Tuple[Set[Values], Set[Values]]:
    n = len(values)
    top = values[-1]
    decomposition = ltr_decomposition(InjectiveWord._trusted(values))
    last_m, previous_m = decomposition.m_blocks[-1], decomposition.m_blocks[-2]

    # Preimages of M_1 P_1 ... M_{k-1}' top, followed by mu_{k-1} P_{k-1} M_k'
    head = values[:previous_m.stop - 1]
    suffix = values[previous_m.stop - 1:n - 1]
    concatenated = {tau + suffix for tau in _preimages(head + (top,))}

    # Preimages of the word without its maximum, in which the maximum is inserted anywhere
    # to the right of the second-to-last block of LTR maxima
    inserted = set()  # type: Set[Values]
    if len(last_m) >= 2:
        for sigma in _preimages(values[:-1]):
            stop = ltr_decomposition(InjectiveWord._trusted(sigma)).m_blocks[-2].stop
            for gap in range(stop, n):
                inserted.add(sigma[:gap] + (top,) + sigma[gap:])
    return concatenated, inserted


def _wrap(target: InjectiveWord, members: Iterable[Values]) -> PreimageSet:
    return PreimageSet(target, (target.__class__._trusted(m) for m in members))


def preimages(word: InjectiveWord) -> PreimageSet:
    """
    Compute all the preimages of given word under Queuesort, recursively.

    - If the word does not end with its maximum, it has no preimage.
    - If the word is increasing, its preimages are the rearrangements of its values that are
      order-isomorphic to a 321-avoiding permutation.
    - Otherwise, with w = M_1 P_1 ... M_{k-1} P_{k-1} M_k, a preimage is either a preimage of
      M_1 P_1 ... M_{k-1}' max followed by mu_{k-1} P_{k-1} M_k', or (only if |M_k| >= 2)
      a preimage of w without its maximum, in which the maximum is inserted in any position to
      the right of the second-to-last block of LTR maxima.

    :param word: target word
    :return: a *PreimageSet*
    """
    return _wrap(word, _preimages(word.values))


def split_preimages(word: InjectiveWord) -> Tuple[PreimageSet, PreimageSet]:
    """
    Return the preimages of given word, split according to the two recursive cases: those
    ending with mu_{k-1} P_{k-1} M_k' and those obtained by inserting the maximum.

    :param word: a non-increasing word ending with its maximum
    :return: a pair of *PreimageSet*
    :raise ShapeError: if the word is increasing or has no preimage
    """
    values = word.values
    if not has_preimage(word) or _is_increasing(values):
        raise ShapeError('Recursive cases do not apply to {}'.format(word))
    concatenated, inserted = _cases(values)
    return _wrap(word, concatenated), _wrap(word, inserted)


def preimages_oracle(word: InjectiveWord, cutoff: int = None) -> PreimageSet:
    """
    Compute the preimages of given word by applying Queuesort to every rearrangement of its
    values. This is an independent (and slow) oracle for *preimages*.

    :param word: target word
    :param cutoff: largest accepted length, see *oracle_cutoff*
    :return: a *PreimageSet*
    :raise CutoffError: if the word is longer than the cutoff
    """
    cutoff = oracle_cutoff(cutoff)
    if len(word) > cutoff:
        raise CutoffError(len(word), cutoff)

    members = []
    for values in permutations(sorted(word)):
        candidate = word.__class__._trusted(values)
        if run_moves(candidate) == word:
            members.append(candidate)
    return PreimageSet(word, members)


def has_preimage(word: InjectiveWord) -> bool:
    """
    Holds if given word has at least one preimage, i.e. if it ends with its maximum.
    The empty word is its own (unique) preimage.
    """
    return len(word) == 0 or word[-1] == max(word)


def formula_applies(word: InjectiveWord) -> bool:
    """
    Holds if a closed formula gives the number of preimages of given word: the word is
    increasing, or its LTR-max decomposition is exactly M_1 P_1 M_2 with M_2 nonempty.
    """
    if word.is_increasing():
        return True
    decomposition = ltr_decomposition(word)
    return decomposition.k == 2 and decomposition.m[-1] > 0


def _formula(word: InjectiveWord) -> int:
    if word.is_increasing():
        return catalan(len(word))
    decomposition = ltr_decomposition(word)
    m1, m2 = decomposition.m
    (p1,) = decomposition.p
    return mpm_simple(m1, p1, m2)


@lru_cache(maxsize=4096)
def _count_by_signature(n: int, signature: Tuple[int, ...]) -> int:
    # Words with the same LTR positions have the same number of preimages.
    return len(_preimages(word_with_ltr_positions(n, signature).values))


def count_preimages(word: InjectiveWord, method: str = 'auto', cutoff: int = None) -> int:
    """
    Count the preimages of given word.

    :param word: target word
    :param method: one of 'recursive', 'formula', 'oracle' or 'auto'. The latter uses a
        closed formula whenever *formula_applies*, and the recursive enumeration otherwise.
    :param cutoff: oracle cutoff, see *oracle_cutoff*
    :return: the number of preimages
    :raise ShapeError: if method is 'formula' and no formula applies
    :raise CutoffError: if method is 'oracle' and the word is too long
    """
    if method not in METHODS:
        raise ValueError('Unknown method {}, expected one of {}'.format(method, METHODS))

    if method == 'oracle':
        return len(preimages_oracle(word, cutoff))

    if method == 'formula':
        if not formula_applies(word):
            raise ShapeError('No closed formula applies to {}'.format(word))
        return _formula(word)

    if not has_preimage(word):
        return 0

    if method == 'auto' and formula_applies(word):
        return _formula(word)

    logger.debug('Counting preimages of %s recursively', word)
    return _count_by_signature(len(word), ltr_signature(word))
