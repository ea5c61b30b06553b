from typing import FrozenSet, Iterable, List, Optional, Tuple

from ..exceptions import ShapeError, WordError
from .words import InjectiveWord, Permutation

__all__ = ['Block', 'Decomposition', 'ltr_maxima', 'ltr_signature', 'ltr_decomposition',
           'word_with_ltr_positions']


def ltr_maxima(word: Iterable[int]) -> FrozenSet[int]:
    """
    Return the 1-based positions of the left-to-right maxima of given word, i.e. the positions
    whose value is larger than every value to its left.

    :param word: an injective word (or any sequence of distinct integers)
    :return: a (possibly empty) frozenset of positions
    """
    positions = []
    current = None
    for position, value in enumerate(word, start=1):
        if current is None or value > current:
            positions.append(position)
            current = value
    return frozenset(positions)


def ltr_signature(word: Iterable[int]) -> Tuple[int, ...]:
    """
    Sorted tuple of LTR-maximum positions. Words sharing a signature share their number
    of preimages, so this is the key used to group and memoize counts.
    """
    return tuple(sorted(ltr_maxima(word)))


def word_with_ltr_positions(n: int, positions: Iterable[int]) -> Permutation:
    """
    Return the canonical permutation of length n whose LTR maxima are exactly at given positions.

    Non-LTR positions receive 1, 2, ... from left to right, and LTR positions receive the
    remaining (larger) values from left to right.

    :param n: length of the permutation
    :param positions: 1-based positions, which must include 1 when n > 0
    :return: a *Permutation*
    :raise WordError: if positions are out of range or do not include position 1
    """
    positions = set(positions)
    if any(not 1 <= p <= n for p in positions):
        raise WordError('Positions {} out of range 1..{}'.format(sorted(positions), n))
    if n > 0 and 1 not in positions:
        raise WordError('Position 1 is always a LTR maximum')

    small = 1
    large = n - len(positions) + 1
    values = []
    for position in range(1, n + 1):
        if position in positions:
            values.append(large)
            large += 1
        else:
            values.append(small)
            small += 1
    return Permutation._trusted(tuple(values))  # type: ignore


class Block:
    """
    A contiguous block of a LTR-max decomposition, stored as a 1-based inclusive range.
    An empty block has *stop* equal to *start - 1*.

    :param kind: either 'M' (LTR maxima) or 'P' (remaining elements)
    :param index: 1-based index of the block among the blocks of the same kind
    :param start: first position of the block
    :param stop: last position of the block
    """

    __slots__ = ['kind', 'index', 'start', 'stop']

    def __init__(self, kind: str, index: int, start: int, stop: int) -> None:
        self.kind = kind
        self.index = index
        self.start = start
        self.stop = stop

    def __len__(self):
        return self.stop - self.start + 1

    @property
    def positions(self) -> range:
        """
        1-based positions covered by this block.
        """
        return range(self.start, self.stop + 1)

    @property
    def slice(self) -> slice:
        """
        A 0-based slice selecting this block in the source word.
        """
        return slice(self.start - 1, self.stop)

    def __eq__(self, other):
        if isinstance(other, Block):
            return (self.kind, self.index, self.start, self.stop) == (
                other.kind, other.index, other.start, other.stop)
        else:
            return NotImplemented

    def __hash__(self):
        return hash((self.kind, self.index, self.start, self.stop))

    def __repr__(self):
        return '{}{}[{}:{}]'.format(self.kind, self.index, self.start, self.stop)


class Decomposition:
    """
    LTR-max decomposition M_1 P_1 ... M_{k-1} P_{k-1} M_k of a nonempty word, where the M_i's are
    the maximal runs of contiguous LTR maxima and the P_i's collect the remaining elements.
    All the P_i's and all the M_i's for i < k are nonempty, M_k may be empty.

    Blocks are stored as index ranges into the source word.

    :param word: the decomposed word
    :param blocks: alternating list of M and P blocks, starting and ending with a M block
    """

    __slots__ = ['_word', '_blocks']

    def __init__(self, word: InjectiveWord, blocks: List[Block]) -> None:
        self._word = word
        self._blocks = tuple(blocks)

    @property
    def word(self) -> InjectiveWord:
        return self._word

    @property
    def blocks(self) -> Tuple[Block, ...]:
        """
        Blocks M_1, P_1, ..., P_{k-1}, M_k in order.
        """
        return self._blocks

    @property
    def k(self) -> int:
        """
        Number of M blocks (including a possibly empty M_k).
        """
        return len(self.m_blocks)

    @property
    def m_blocks(self) -> Tuple[Block, ...]:
        return tuple(b for b in self._blocks if b.kind == 'M')

    @property
    def p_blocks(self) -> Tuple[Block, ...]:
        return tuple(b for b in self._blocks if b.kind == 'P')

    @property
    def m(self) -> Tuple[int, ...]:
        """
        Lengths m_1, ..., m_k.
        """
        return tuple(len(b) for b in self.m_blocks)

    @property
    def p(self) -> Tuple[int, ...]:
        """
        Lengths p_1, ..., p_{k-1}.
        """
        return tuple(len(b) for b in self.p_blocks)

    @property
    def mu(self) -> Tuple[Optional[int], ...]:
        """
        Last value of each M block (None for an empty M_k).
        """
        return tuple(self._word[b.stop - 1] if len(b) else None for b in self.m_blocks)

    @property
    def ltr_positions(self) -> FrozenSet[int]:
        """
        The set LTR(w) of 1-based positions of the LTR maxima.
        """
        return frozenset(p for b in self.m_blocks for p in b.positions)

    def block(self, kind: str, index: int) -> Block:
        """
        Return block M_index or P_index.

        :param kind: 'M' or 'P'
        :param index: 1-based block index
        :raise IndexError: if there is no such block
        """
        for b in self._blocks:
            if b.kind == kind and b.index == index:
                return b
        raise IndexError('No block {}{}'.format(kind, index))

    def values(self, block: Block) -> Tuple[int, ...]:
        """
        Values of the source word covered by given block.
        """
        return self._word[block.slice]

    def blocks_values(self) -> List[Tuple[int, ...]]:
        """
        Values of every block, in order. Their concatenation is the source word.
        """
        return [self.values(b) for b in self._blocks]

    def adjacent_ltr_pairs(self) -> List[Tuple[int, int]]:
        """
        Pairs (i, i+1) of positions that are both LTR maxima.
        """
        return [(p, p + 1) for b in self.m_blocks for p in range(b.start, b.stop)]

    def __repr__(self):
        return '{}({!r}, {})'.format(
            self.__class__.__name__, self._word, ' '.join(repr(b) for b in self._blocks))


def ltr_decomposition(word: InjectiveWord) -> Decomposition:
    """
    Compute the LTR-max decomposition of given word.

    :param word: a nonempty injective word
    :return: a *Decomposition*
    :raise ShapeError: if the word is empty
    """
    n = len(word)
    if n == 0:
        raise ShapeError('The empty word has no LTR-max decomposition')

    ltr = ltr_maxima(word)
    blocks = []  # type: List[Block]
    position = 1
    index = 1
    while position <= n:
        start = position
        while position <= n and position in ltr:
            position += 1
        blocks.append(Block('M', index, start, position - 1))
        if position > n:
            break
        start = position
        while position <= n and position not in ltr:
            position += 1
        blocks.append(Block('P', index, start, position - 1))
        index += 1

    if blocks[-1].kind == 'P':
        blocks.append(Block('M', index, n + 1, n))
    return Decomposition(word, blocks)
