import logging
import threading

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from itertools import permutations
from math import factorial
from typing import Dict, Iterator, List, Mapping, Tuple

from ..exceptions import CutoffError
from ..model import Permutation, ltr_decomposition
from ..sorting import run_moves
from ..utilities import all_permutations

__all__ = ['CensusTable', 'image_counts', 'census', 'classify',
           'has_single_preimage_shape', 'has_two_preimage_shape', 'DEFAULT_CENSUS_CUTOFF']

logger = logging.getLogger(__name__)

DEFAULT_CENSUS_CUTOFF = 10

# Image tallies per length, bounded by the census cutoff and never evicted.
_images = {}  # type: Dict[int, Dict[Tuple[int, ...], int]]
_images_lock = threading.Lock()


class CensusTable:
    """
    Number of permutations of length n having exactly k preimages, for each k.

    Only nonzero entries are stored. Since every permutation has exactly one image, both the
    sum of the entries and the sum of k times the entries equal n!.

    :param n: length of the permutations
    :param tally: mapping from k to the number of permutations with k preimages
    """

    __slots__ = ['_n', '_tally']

    def __init__(self, n: int, tally: Mapping[int, int]) -> None:
        self._n = n
        self._tally = {k: v for k, v in sorted(tally.items()) if v != 0}

    @property
    def n(self) -> int:
        return self._n

    @property
    def tally(self) -> Dict[int, int]:
        """
        A copy of the underlying mapping, sorted by k.
        """
        return dict(self._tally)

    def __getitem__(self, k: int) -> int:
        return self._tally.get(k, 0)

    def __contains__(self, k):
        return k in self._tally

    def __iter__(self) -> Iterator[int]:
        return iter(self._tally)

    def __len__(self):
        return len(self._tally)

    def items(self) -> List[Tuple[int, int]]:
        return list(self._tally.items())

    def total(self) -> int:
        """
        Number of permutations accounted for, i.e. the sum of the entries.
        """
        return sum(self._tally.values())

    def weighted_total(self) -> int:
        """
        Number of preimages accounted for, i.e. the sum of k times the entries.
        """
        return sum(k * v for k, v in self._tally.items())

    def is_consistent(self) -> bool:
        """
        Holds if both totals equal n!.
        """
        expected = factorial(self._n)
        return self.total() == expected and self.weighted_total() == expected

    def __eq__(self, other):
        if isinstance(other, CensusTable):
            return self._n == other._n and self._tally == other._tally
        else:
            return NotImplemented

    def __repr__(self):
        return '{}({}, {!r})'.format(self.__class__.__name__, self._n, self._tally)


def _tally_chunk(n: int, first: int) -> Counter:
    # Images of all the permutations of length n starting with given value.
    rest = [v for v in range(1, n + 1) if v != first]
    counter = Counter()  # type: Counter
    for tail in permutations(rest):
        image = run_moves(Permutation._trusted((first,) + tail))
        counter[image.values] += 1
    return counter


def _check_cutoff(n: int, cutoff: int = None) -> None:
    cutoff = DEFAULT_CENSUS_CUTOFF if cutoff is None else cutoff
    if n < 0:
        raise ValueError('Length must be non-negative, not {}'.format(n))
    if n > cutoff:
        raise CutoffError(n, cutoff)


def image_counts(n: int, workers: int = 1, cutoff: int = None) -> Dict[Tuple[int, ...], int]:
    """
    Apply Queuesort to every permutation of length n and return, for each permutation that
    is hit, its number of preimages.

    Permutations are split into chunks according to their first value. With more than one
    worker, chunks are processed by a pool of processes and their tallies are merged.
    Results are cached per length. The cache is shared by all threads: concurrent callers
    may compute the same tally twice, but only one result is stored.

    :param n: length
    :param workers: number of worker processes
    :param cutoff: largest accepted length (defaults to DEFAULT_CENSUS_CUTOFF)
    :return: a mapping from image values to their number of preimages
    :raise CutoffError: if n exceeds the cutoff
    """
    _check_cutoff(n, cutoff)
    with _images_lock:
        cached = _images.get(n)
    if cached is not None:
        return dict(cached)

    total = Counter()  # type: Counter
    if n == 0:
        total[()] = 1
    elif workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_tally_chunk, n, first) for first in range(1, n + 1)]
            for future in futures:
                total.update(future.result())
    else:
        for first in range(1, n + 1):
            total.update(_tally_chunk(n, first))
            logger.debug('Census of S_%d: chunk %d/%d done', n, first, n)

    with _images_lock:
        stored = _images.setdefault(n, dict(total))
    return dict(stored)


def census(n: int, cutoff: int = None, workers: int = 1) -> CensusTable:
    """
    Compute how many permutations of length n have exactly k preimages, for every k.

    The census is obtained by applying Queuesort to every permutation of length n; those
    that are never reached have no preimage.

    :param n: length
    :param cutoff: largest accepted length (defaults to DEFAULT_CENSUS_CUTOFF)
    :param workers: number of worker processes, see *image_counts*
    :return: a *CensusTable*
    :raise CutoffError: if n exceeds the cutoff
    """
    counts = image_counts(n, workers, cutoff)
    tally = Counter(counts.values())
    tally[0] = factorial(n) - len(counts)
    return CensusTable(n, tally)


def classify(n: int, k: int, cutoff: int = None, workers: int = 1) -> List[Permutation]:
    """
    Return the permutations of length n having exactly k preimages, in lexicographic order.

    :param n: length
    :param k: number of preimages
    :param cutoff: largest accepted length (defaults to DEFAULT_CENSUS_CUTOFF)
    :param workers: number of worker processes, see *image_counts*
    :return: a sorted list of *Permutation*
    :raise CutoffError: if n exceeds the cutoff
    """
    counts = image_counts(n, workers, cutoff)
    if k == 0:
        return [Permutation._trusted(v) for v in all_permutations(n) if v not in counts]
    return sorted(Permutation._trusted(values) for values, c in counts.items() if c == k)


def _ends_with_maximum(permutation: Permutation) -> bool:
    return len(permutation) > 0 and permutation[-1] == max(permutation)


def has_single_preimage_shape(permutation: Permutation) -> bool:
    """
    Holds if given permutation ends with its maximum and has no two adjacent LTR maxima,
    which characterizes the permutations with exactly one preimage.
    """
    if not _ends_with_maximum(permutation):
        return False
    return not ltr_decomposition(permutation).adjacent_ltr_pairs()


def has_two_preimage_shape(permutation: Permutation) -> bool:
    """
    Holds if given permutation ends with its maximum and its only two adjacent LTR maxima
    are its first two elements, which characterizes the permutations with exactly two
    preimages.
    """
    if not _ends_with_maximum(permutation):
        return False
    return ltr_decomposition(permutation).adjacent_ltr_pairs() == [(1, 2)]
