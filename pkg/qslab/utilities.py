from collections import defaultdict
from itertools import permutations
from typing import Callable, Dict, Hashable, Iterable, Iterator, List, Tuple, TypeVar

T = TypeVar('T')


def sorted_groupby(iterable: Iterable[T], key: Callable[[T], Hashable],
                   value: Callable[[T], object] = None) -> Dict[Hashable, List]:
    """
    Group items by key(item), keeping value(item) (or the item itself) in each group.

    :param iterable: items to group
    :param key: function giving the label of an item
    :param value: optional projection applied to each grouped item
    :return: a dict mapping labels to groups, with labels in increasing order
    """
    groups = defaultdict(list)  # type: Dict[Hashable, List]
    for item in iterable:
        groups[key(item)].append(item if value is None else value(item))
    return {label: groups[label] for label in sorted(groups)}


def all_permutations(n: int) -> Iterator[Tuple[int, ...]]:
    """
    Yield the tuples of S_n in lexicographic order.
    """
    return permutations(range(1, n + 1))
