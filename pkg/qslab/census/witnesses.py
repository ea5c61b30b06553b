from ..exceptions import ShapeError
from ..model import Permutation

__all__ = ['canonical_mpm_perm', 'not3_family']


def canonical_mpm_perm(m1: int, p1: int, m2: int) -> Permutation:
    """
    Return the permutation (p1+1, ..., p1+m1) (1, ..., p1) (p1+m1+1, ..., p1+m1+m2), whose
    LTR-max decomposition is M_1 P_1 M_2 with given block lengths.

    Any permutation with the same LTR positions has the same number of preimages, so this
    permutation stands for its whole shape.

    :param m1: length of M_1, at least 1
    :param p1: length of P_1, at least 1
    :param m2: length of M_2, at least 1
    :raise ShapeError: if a length is smaller than 1
    """
    if min(m1, p1, m2) < 1:
        raise ShapeError('Block lengths must be positive, got ({}, {}, {})'.format(m1, p1, m2))
    values = list(range(p1 + 1, p1 + m1 + 1)) + list(range(1, p1 + 1)) + \
        list(range(p1 + m1 + 1, p1 + m1 + m2 + 1))
    return Permutation._trusted(tuple(values))  # type: ignore


def not3_family(n: int) -> Permutation:
    """
    Return n (n-1) ... 2 1 (n+2) (n+3) (n+1) (n+4), a permutation of length n+4 with
    exactly n+2 preimages.

    The family starts at n = 2 and is extended to n = 0, where it gives 2314 (2 preimages).
    It does not hold for n = 1, since 13425 has 5 preimages.

    :param n: n = 0 or n >= 2
    :raise ShapeError: if n is 1 or negative
    """
    if n == 1:
        raise ShapeError('The family does not hold for n=1: 13425 has 5 preimages, not 3')
    if n < 0:
        raise ShapeError('n must be non-negative, not {}'.format(n))
    values = list(range(n, 0, -1)) + [n + 2, n + 3, n + 1, n + 4]
    return Permutation._trusted(tuple(values))  # type: ignore
