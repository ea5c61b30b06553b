from collections import deque
from typing import Iterable, List, Tuple

__all__ = ['OpTrace', 'INSERT', 'BYPASS', 'OUTPUT']


INSERT = 'Q'
BYPASS = 'B'
OUTPUT = 'O'


class OpTrace:
    """
    Sequence of operations performed by Queuesort on an input word:

    - Q: insert the current input element into the back of the queue;
    - B: bypass the queue, i.e. output the current input element;
    - O: output the front element of the queue.

    :param ops: a string (or iterable) over the alphabet {Q, B, O}
    """

    __slots__ = ['_ops']

    def __init__(self, ops: Iterable[str] = '') -> None:
        ops = ''.join(ops)
        unknown = set(ops) - {INSERT, BYPASS, OUTPUT}
        if unknown:
            raise ValueError('Unknown operations {}'.format(sorted(unknown)))
        self._ops = ops

    @property
    def ops(self) -> str:
        return self._ops

    def count(self, op: str) -> int:
        return self._ops.count(op)

    def is_well_formed(self, n: int) -> bool:
        """
        Holds if this trace can describe a complete run on an input of length n:
        #Q + #B = n, #O = #Q and no prefix outputs more than it inserted.

        :param n: length of the input
        """
        if self.count(INSERT) + self.count(BYPASS) != n:
            return False
        if self.count(OUTPUT) != self.count(INSERT):
            return False
        balance = 0
        for op in self._ops:
            if op == INSERT:
                balance += 1
            elif op == OUTPUT:
                balance -= 1
                if balance < 0:
                    return False
        return True

    def replay(self, word: Iterable[int]) -> Tuple[int, ...]:
        """
        Replay this trace on given input and return the produced output.

        :param word: input values
        :return: output values
        :raise ValueError: if the trace cannot be applied to this input
        """
        source = deque(word)
        queue = deque()  # type: deque
        output = []  # type: List[int]
        try:
            for op in self._ops:
                if op == INSERT:
                    queue.append(source.popleft())
                elif op == BYPASS:
                    output.append(source.popleft())
                else:
                    output.append(queue.popleft())
        except IndexError as e:
            raise ValueError('Trace {} does not apply to given input'.format(self._ops)) from e
        if source or queue:
            raise ValueError('Trace {} does not consume the whole input'.format(self._ops))
        return tuple(output)

    def __len__(self):
        return len(self._ops)

    def __eq__(self, other):
        if isinstance(other, OpTrace):
            return self._ops == other._ops
        else:
            return NotImplemented

    def __hash__(self):
        return hash(self._ops)

    def __repr__(self):
        return '{}({!r})'.format(self.__class__.__name__, self._ops)

    def __str__(self):
        return self._ops
