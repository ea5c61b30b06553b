import re

from typing import Iterable, Iterator, Tuple, Union, overload

from ..exceptions import WordError

__all__ = ['InjectiveWord', 'Permutation', 'parse_word', 'standardize', 'identity']


_SEPARATORS = re.compile(r'[\s,]+')


class InjectiveWord:
    """
    A finite sequence of pairwise distinct positive integers.

    Words are immutable values: they can be hashed, compared (lexicographically) and shared
    between threads. Positions are 1-based in every public operation, while the usual
    0-based sequence protocol (indexing, slicing, iteration) is available for convenience.

    :param values: an iterable of distinct positive integers
    :raise WordError: if a value is repeated, not an integer, or not positive
    """

    __slots__ = ['_values']

    def __init__(self, values: Iterable[int] = ()) -> None:
        values = tuple(values)
        seen = set()
        for value in values:
            if not isinstance(value, int) or isinstance(value, bool):
                raise WordError('Value {!r} is not an integer'.format(value))
            if value < 1:
                raise WordError('Value {} is not positive'.format(value))
            if value in seen:
                raise WordError('Duplicate value {}'.format(value))
            seen.add(value)
        self._values = values  # type: Tuple[int, ...]

    @classmethod
    def _trusted(cls, values: Tuple[int, ...]) -> 'InjectiveWord':
        # Skip validation for values produced by internal algorithms.
        word = cls.__new__(cls)
        word._values = values
        return word

    @property
    def values(self) -> Tuple[int, ...]:
        """
        Underlying tuple of values.
        """
        return self._values

    def value_at(self, position: int) -> int:
        """
        Return the value at given 1-based position.

        :param position: a position between 1 and len(self)
        :return: the value at that position
        """
        if not 1 <= position <= len(self._values):
            raise IndexError('Position {} is out of range'.format(position))
        return self._values[position - 1]

    def is_increasing(self) -> bool:
        """
        Holds if the word equals its sorted copy.
        """
        return all(a < b for a, b in zip(self._values, self._values[1:]))

    def is_permutation(self) -> bool:
        """
        Holds if the value set is exactly 1..n.
        """
        return set(self._values) == set(range(1, len(self._values) + 1))

    def __len__(self):
        return len(self._values)

    def __iter__(self) -> Iterator[int]:
        return iter(self._values)

    @overload
    def __getitem__(self, index: int) -> int: ...  # pragma: no cover

    @overload
    def __getitem__(self, index: slice) -> Tuple[int, ...]: ...  # pragma: no cover

    def __getitem__(self, index: Union[int, slice]):
        return self._values[index]

    def __eq__(self, other):
        if isinstance(other, InjectiveWord):
            return self._values == other._values
        else:
            return NotImplemented

    def __lt__(self, other):
        if isinstance(other, InjectiveWord):
            return self._values < other._values
        else:
            return NotImplemented

    def __hash__(self):
        return hash(self._values)

    def __repr__(self):
        return '{}({!r})'.format(self.__class__.__name__, list(self._values))

    def __str__(self):
        return ' '.join(str(v) for v in self._values)


class Permutation(InjectiveWord):
    """
    An injective word whose value set is exactly 1..n.

    :param values: an iterable containing each of 1..n exactly once
    :raise WordError: if values do not form a permutation
    """

    __slots__ = []  # type: ignore

    def __init__(self, values: Iterable[int] = ()) -> None:
        super().__init__(values)
        if not self.is_permutation():
            raise WordError('{} is not a permutation of 1..{}'.format(
                list(self._values), len(self._values)))


def parse_word(text: str) -> InjectiveWord:
    """
    Parse a word from its textual representation.

    Two forms are accepted: whitespace and/or comma separated integers ("10 2 7", "2,1,3"),
    or a contiguous string of digits ("21543") read one digit per element.
    The latter form cannot contain 0.

    :param text: textual representation
    :return: an *InjectiveWord*
    :raise WordError: if the text does not describe a valid injective word
    """
    text = text.strip()
    tokens = [token for token in _SEPARATORS.split(text) if token]

    if len(tokens) == 1 and len(tokens[0]) > 1 and tokens[0].isdigit():
        if '0' in tokens[0]:
            raise WordError('Digit string {} contains 0'.format(tokens[0]))
        return InjectiveWord(int(c) for c in tokens[0])

    values = []
    for token in tokens:
        try:
            value = int(token)
        except ValueError as e:
            raise WordError('Token {!r} is not numeric'.format(token)) from e
        values.append(value)
    return InjectiveWord(values)


def standardize(word: InjectiveWord) -> Permutation:
    """
    Return the permutation that is order-isomorphic to given word.

    :param word: an injective word
    :return: a *Permutation* with the same relative order
    """
    ranks = {value: rank for rank, value in enumerate(sorted(word), start=1)}
    return Permutation._trusted(tuple(ranks[v] for v in word))  # type: ignore


def identity(n: int) -> Permutation:
    """
    Return the identity permutation 1 2 ... n.
    """
    return Permutation._trusted(tuple(range(1, n + 1)))  # type: ignore
