from collections import deque
from typing import List, Sequence, Tuple

from ..model import InjectiveWord, ltr_maxima
from .trace import BYPASS, INSERT, OUTPUT, OpTrace

__all__ = ['run_queue', 'run_moves', 'is_sortable', 'moved_maxima', 'move_maxima_left']


def _rebuild(word: InjectiveWord, values: Tuple[int, ...]) -> InjectiveWord:
    # Output of Queuesort is a rearrangement of its input, hence of the same kind.
    return word.__class__._trusted(values)


def run_queue(word: InjectiveWord) -> Tuple[InjectiveWord, OpTrace]:
    """
    Run Queuesort with an actual queue with bypass on given word.

    Elements are scanned from left to right. If the queue is empty or its back element is
    smaller than the current element, the current element is inserted (Q). Otherwise, front
    elements smaller than the current one are output (O), and the current element bypasses
    the queue (B). When the input is exhausted, the queue is emptied (O).

    :param word: input word
    :return: a pair (output word, trace of operations)
    """
    queue = deque()  # type: deque
    output = []  # type: List[int]
    ops = []  # type: List[str]

    for value in word:
        if not queue or queue[-1] < value:
            queue.append(value)
            ops.append(INSERT)
        else:
            while queue[0] < value:
                output.append(queue.popleft())
                ops.append(OUTPUT)
            output.append(value)
            ops.append(BYPASS)

    while queue:
        output.append(queue.popleft())
        ops.append(OUTPUT)

    return _rebuild(word, tuple(output)), OpTrace(ops)


def _moves(values: Sequence[int]) -> List[int]:
    buffer = list(values)
    n = len(buffer)
    for position in sorted(ltr_maxima(buffer), reverse=True):
        i = position - 1
        value = buffer[i]
        while i + 1 < n and buffer[i + 1] < value:
            buffer[i] = buffer[i + 1]
            i += 1
        buffer[i] = value
    return buffer


def run_moves(word: InjectiveWord) -> InjectiveWord:
    """
    Compute q(word) by moving LTR maxima directly on the word: for each LTR maximum, from
    the rightmost one to the leftmost one, repeatedly swap it with the element on its right
    until that element is larger (or the end of the word is reached).

    This is equivalent to *run_queue*, and is the version used everywhere else.

    :param word: input word (never mutated)
    :return: output word
    """
    return _rebuild(word, tuple(_moves(word)))


def is_sortable(permutation: InjectiveWord) -> bool:
    """
    Holds if Queuesort sorts given word.
    """
    return run_moves(permutation).is_increasing()


def moved_maxima(word: InjectiveWord) -> List[int]:
    """
    Values of the LTR maxima of given word that are actually moved by Queuesort, that is,
    whose position in q(word) is strictly larger than their position in word.

    :param word: input word
    :return: list of values, in their order of appearance in word
    """
    output = _moves(word)
    final = {value: i for i, value in enumerate(output, start=1)}
    return [word.value_at(p) for p in sorted(ltr_maxima(word)) if final[word.value_at(p)] > p]


def move_maxima_left(permutation: InjectiveWord,
                     sources: Sequence[int], targets: Sequence[int]) -> InjectiveWord:
    """
    Move the LTR maxima of given word from positions *sources* to positions *targets*.

    Both sequences are 1-based, strictly increasing and satisfy targets[j] < sources[j].
    Moved elements end exactly at the target positions; the other elements keep their
    relative order.

    :param permutation: input word
    :param sources: positions of LTR maxima to move
    :param targets: their new positions
    :return: the resulting word
    :raise ValueError: if positions are invalid
    """
    sources = list(sources)
    targets = list(targets)
    ltr = ltr_maxima(permutation)
    if len(sources) != len(targets):
        raise ValueError('Sources and targets must have the same length')
    if any(a >= b for a, b in zip(sources, sources[1:])) or \
            any(a >= b for a, b in zip(targets, targets[1:])):
        raise ValueError('Positions must be strictly increasing')
    if any(t < 1 or t >= s or s not in ltr for s, t in zip(sources, targets)):
        raise ValueError('Each source must be a LTR maximum moved to a smaller position')

    moved = [permutation.value_at(s) for s in sources]
    remaining = [v for i, v in enumerate(permutation, start=1) if i not in set(sources)]
    for target, value in zip(targets, moved):
        remaining.insert(target - 1, value)
    return _rebuild(permutation, tuple(remaining))

