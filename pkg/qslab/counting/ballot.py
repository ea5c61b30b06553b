import threading

from math import comb
from typing import Dict, List, Tuple

from ..exceptions import IndexRangeError

__all__ = ['BallotTable', 'ballot_b', 'ballot_g', 'default_table']


class BallotTable:
    """
    Memoized triangles of ballot numbers.

    Entry b(n, i), for 1 <= i <= n, is the number of 321-avoiding permutations of length n
    whose maximum is at position i. Rows are grown on demand by the row-sum recurrence
    b(n+1, i) = b(n, 1) + ... + b(n, i), starting from b(1, 1) = 1 (and b(n, n+1) = 0).

    Entry g(n, i), for 2 <= i <= n+1, is the number of 321-avoiding permutations of length n
    whose first element that is not a LTR maximum is at position i (i = n+1 stands for the
    identity). It is computed by its closed form, and equals b(n, n+2-i).

    A table can be shared between threads: growth is serialized, and rows are never
    modified once they are built.
    """

    def __init__(self) -> None:
        self._rows = [[1]]  # type: List[List[int]]
        self._g = {}  # type: Dict[Tuple[int, int], int]
        self._lock = threading.Lock()

    @property
    def size(self) -> int:
        """
        Number of rows computed so far.
        """
        return len(self._rows)

    def _grow(self, n: int) -> None:
        with self._lock:
            while len(self._rows) < n:
                previous = self._rows[-1]
                row = []
                total = 0
                for value in previous + [0]:
                    total += value
                    row.append(total)
                self._rows.append(row)

    def row(self, n: int) -> List[int]:
        """
        Return row n of the b triangle, as a list (b(n, 1), ..., b(n, n)).

        :param n: a positive row index
        :raise IndexRangeError: if n < 1
        """
        if n < 1:
            raise IndexRangeError('Row {} does not exist'.format(n))
        if n > len(self._rows):
            self._grow(n)
        return list(self._rows[n - 1])

    def b(self, n: int, i: int) -> int:
        """
        :param n: length, n >= 1
        :param i: position of the maximum, 1 <= i <= n
        :return: ballot number b(n, i)
        :raise IndexRangeError: if (n, i) is outside the triangle
        """
        if not 1 <= i <= n:
            raise IndexRangeError('b({}, {}) is outside 1 <= i <= n'.format(n, i))
        if n > len(self._rows):
            self._grow(n)
        return self._rows[n - 1][i - 1]

    def g(self, n: int, i: int) -> int:
        """
        :param n: length, n >= 1
        :param i: position of the first non LTR maximum, 2 <= i <= n+1
        :return: g(n, i) = binomial(2n-i+1, n) (i-1) / (2n-i+1)
        :raise IndexRangeError: if (n, i) is outside the triangle
        """
        if n < 1 or not 2 <= i <= n + 1:
            raise IndexRangeError('g({}, {}) is outside n >= 1, 2 <= i <= n+1'.format(n, i))
        key = (n, i)
        value = self._g.get(key)
        if value is None:
            value = comb(2 * n - i + 1, n) * (i - 1) // (2 * n - i + 1)
            self._g[key] = value
        return value


default_table = BallotTable()


def ballot_b(n: int, i: int) -> int:
    """
    Ballot number b(n, i) from the shared table, see *BallotTable.b*.
    """
    return default_table.b(n, i)


def ballot_g(n: int, i: int) -> int:
    """
    Number g(n, i) from the shared table, see *BallotTable.g*.
    """
    return default_table.g(n, i)
