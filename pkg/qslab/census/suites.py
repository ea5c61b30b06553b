import logging
import random

from collections import OrderedDict
from fractions import Fraction
from math import factorial
from typing import Any, Callable, Dict, List, Mapping, Optional, Set, Tuple

from ..counting import (ballot_b, ballot_collapse, ballot_g, ballot_to_catalan, catalan,
                        catalan_decomposition, count_k_largest_ltr, count_q0, count_q1,
                        count_q2, count_q2_closed, derangement, derangement_alternating,
                        mpm_full, mpm_simple, omega_poly, RationalPolynomial)
from ..exceptions import BoundsError, FormulaError, ShapeError, UnknownSuiteError
from ..model import (Permutation, avoids_321, contains_pattern, fixed_points,
                     foata, identity, ltr_decomposition, ltr_maxima, ltr_signature,
                     word_with_ltr_positions)
from ..preimages import (count_preimages, gen_av321, has_preimage, preimages,
                         preimages_oracle, split_preimages)
from ..sorting import is_sortable, move_maxima_left, moved_maxima, run_moves, run_queue
from ..utilities import all_permutations, sorted_groupby
from .table import (census, classify, has_single_preimage_shape, has_two_preimage_shape,
                     image_counts)
from .report import Failure, VerificationReport
from .witnesses import canonical_mpm_perm, not3_family

__all__ = ['Suite', 'Cases', 'verify_suite', 'list_suites', 'get_suite', 'DEFAULT_SEED', 'ALL']

logger = logging.getLogger(__name__)

DEFAULT_SEED = 20200101
ALL = 'all'


class Cases:
    """
    Collector for the cases checked by a suite.
    """

    def __init__(self) -> None:
        self.count = 0
        self.failures = []  # type: List[Failure]

    def expect(self, input: Any, expected: Any, actual: Any) -> bool:
        """
        Record a case whose outcome is *actual*, and a failure if it differs from *expected*.
        """
        self.count += 1
        if expected != actual:
            self.failures.append(Failure(input, expected, actual))
            return False
        return True

    def holds(self, input: Any, condition: bool, description: str) -> bool:
        """
        Record a case that passes if *condition* holds.
        """
        return self.expect(input, description, description if condition else 'not ' + description)


SuiteFunction = Callable[[Cases, Dict[str, int], random.Random], Optional[Dict[str, Any]]]


class Suite:
    """
    A named verification suite.

    :param name: name of the suite
    :param function: callable receiving a *Cases* collector, the bounds and a random generator,
        and returning optional notes
    :param bounds: default bounds
    :param exploratory: True if the suite checks a conjecture
    """

    def __init__(self, name: str, function: SuiteFunction, bounds: Mapping[str, int],
                 exploratory: bool = False) -> None:
        self.name = name
        self.function = function
        self.bounds = dict(bounds)
        self.exploratory = exploratory

    @property
    def description(self) -> str:
        doc = (self.function.__doc__ or '').strip()
        return doc.splitlines()[0] if doc else ''

    def __repr__(self):
        return '{}({!r})'.format(self.__class__.__name__, self.name)


_SUITES = OrderedDict()  # type: Dict[str, Suite]


def suite(name: str, exploratory: bool = False, **bounds: int):
    """
    Register decorated function as a verification suite with given default bounds.
    """
    def decorator(function: SuiteFunction) -> SuiteFunction:
        _SUITES[name] = Suite(name, function, bounds, exploratory)
        return function
    return decorator


def list_suites() -> List[str]:
    """
    Names of the registered suites, in registration order, followed by *ALL*.
    """
    return list(_SUITES) + [ALL]


def get_suite(name: str) -> Suite:
    """
    :raise UnknownSuiteError: if there is no such suite
    """
    try:
        return _SUITES[name]
    except KeyError:
        raise UnknownSuiteError(name) from None


def _merge_bounds(target: Suite, bounds: Mapping[str, int]) -> Dict[str, int]:
    unknown = set(bounds) - set(target.bounds)
    if unknown:
        raise BoundsError('Unknown bounds {} for suite {}, expected some of {}'.format(
            sorted(unknown), target.name, sorted(target.bounds)))
    for key, value in bounds.items():
        if not isinstance(value, int) or isinstance(value, bool) or value < 0:
            raise BoundsError('Bound {} must be a non-negative integer, not {!r}'.format(
                key, value))
    merged = dict(target.bounds)
    merged.update(bounds)
    return merged


def _run(target: Suite, bounds: Mapping[str, int], seed: int) -> VerificationReport:
    merged = _merge_bounds(target, bounds)
    cases = Cases()
    logger.debug('Running suite %s with %s', target.name, merged)
    notes = target.function(cases, merged, random.Random(seed)) or {}
    logger.debug('Suite %s: %d cases, %d failures', target.name, cases.count, len(cases.failures))

    parameters = dict(merged)
    parameters['seed'] = seed
    return VerificationReport(target.name, parameters, cases.count, cases.failures,
                              exploratory=target.exploratory, notes=notes)


def verify_suite(name: str, bounds: Mapping[str, int] = None,
                 seed: int = DEFAULT_SEED) -> VerificationReport:
    """
    Run the named verification suite and return its report.

    Suites are deterministic given their bounds and seed. The pseudo suite *ALL* runs every
    non exploratory suite with its default bounds, possibly overridden by the given ones
    (a bound is then applied to every suite declaring it).

    :param name: name of the suite, see *list_suites*
    :param bounds: bounds overriding the defaults of the suite
    :param seed: seed for the random generator of the suite
    :return: a *VerificationReport*
    :raise UnknownSuiteError: if there is no such suite
    :raise BoundsError: if a bound is unknown for this suite or invalid
    """
    bounds = dict(bounds or {})
    if name != ALL:
        return _run(get_suite(name), bounds, seed)

    targets = [s for s in _SUITES.values() if not s.exploratory]
    unknown = set(bounds) - {key for s in targets for key in s.bounds}
    if unknown:
        raise BoundsError('Unknown bounds {} for suite {}'.format(sorted(unknown), ALL))

    count = 0
    failures = []  # type: List[Failure]
    notes = {}  # type: Dict[str, Any]
    for target in targets:
        own = {k: v for k, v in bounds.items() if k in target.bounds}
        report = _run(target, own, seed)
        count += report.cases
        failures.extend(Failure('{}: {}'.format(target.name, f.input), f.expected, f.actual)
                        for f in report.failures)
        notes[target.name] = report.cases

    parameters = dict(bounds)
    parameters['seed'] = seed
    return VerificationReport(ALL, parameters, count, failures, notes=notes)


def _random_permutation(rng: random.Random, n: int) -> Permutation:
    values = list(range(1, n + 1))
    rng.shuffle(values)
    return Permutation._trusted(tuple(values))  # type: ignore


def _av321(n: int) -> List[Permutation]:
    return list(gen_av321(n))


def _class_counts(n: int) -> Dict[Tuple[int, ...], List[int]]:
    # Number of preimages of each permutation of length n, grouped by LTR positions.
    counts = image_counts(n)
    return sorted_groupby(all_permutations(n), key=ltr_signature, value=lambda p: counts.get(p, 0))


@suite('equivalence', max_n=8, random_max_n=12, samples=2500)
def _equivalence(cases: Cases, bounds: Dict[str, int], rng: random.Random):
    """
    The queue machine and the moving rule compute the same map.
    """
    def check(p: Permutation) -> None:
        output, trace = run_queue(p)
        moved = run_moves(p)
        cases.expect(p, output, moved)
        cases.holds(p, trace.is_well_formed(len(p)), 'well formed trace')
        cases.expect(p, output.values, trace.replay(p))
        if len(p):
            cases.expect(p, len(p), moved[-1])
        ltr = ltr_maxima(p)
        others = [v for i, v in enumerate(p, start=1) if i not in ltr]
        cases.expect(p, others, [v for v in moved if v in set(others)])

    for n in range(0, bounds['max_n'] + 1):
        for values in all_permutations(n):
            check(Permutation._trusted(values))
    for n in range(bounds['max_n'] + 1, bounds['random_max_n'] + 1):
        for _ in range(bounds['samples']):
            check(_random_permutation(rng, n))


@suite('sortable-321', max_n=8, pattern_max_n=7)
def _sortable_321(cases: Cases, bounds: Dict[str, int], rng: random.Random):
    """
    A permutation is sortable iff it avoids 321, and 321-avoiders are generated exactly.
    """
    pattern = (3, 2, 1)
    for n in range(0, bounds['max_n'] + 1):
        avoiders = []
        for values in all_permutations(n):
            p = Permutation._trusted(values)
            cases.expect(p, avoids_321(p), is_sortable(p))
            if n <= bounds['pattern_max_n']:
                cases.expect(p, not contains_pattern(p, pattern), avoids_321(p))
            if avoids_321(p):
                avoiders.append(p)
        cases.expect('Av_{}(321)'.format(n), avoiders, _av321(n))
        cases.expect('|Av_{}(321)|'.format(n), catalan(n), len(avoiders))


@suite('census-formulas', max_n=8, closed_max_n=20)
def _census_formulas(cases: Cases, bounds: Dict[str, int], rng: random.Random):
    """
    Census entries for 0, 1, 2 and C_n preimages match their formulas and characterizations.
    """
    for n in range(1, bounds['max_n'] + 1):
        table = census(n)
        cases.holds('census({})'.format(n), table.is_consistent(), 'both totals equal n!')
        cases.expect('q0({})'.format(n), count_q0(n), table[0])
        cases.expect('q1({})'.format(n), count_q1(n), table[1])
        cases.expect('q2({})'.format(n), count_q2(n), table[2])
        cases.holds('id_{}'.format(n), identity(n) in classify(n, catalan(n)),
                    'identity has C_n preimages')

        permutations = [Permutation._trusted(v) for v in all_permutations(n)]
        cases.expect('Q_{}^(1)'.format(n),
                     [p for p in permutations if has_single_preimage_shape(p)], classify(n, 1))
        cases.expect('Q_{}^(2)'.format(n), [p for p in permutations if has_two_preimage_shape(p)],
                     classify(n, 2))

    for n in range(0, bounds['closed_max_n'] + 1):
        cases.expect('D({})'.format(n), derangement(n), derangement_alternating(n))
        if n >= 2:
            cases.expect('q2({}) closed form'.format(n), count_q2(n), count_q2_closed(n))


@suite('no-three', max_n=8)
def _no_three(cases: Cases, bounds: Dict[str, int], rng: random.Random):
    """
    No permutation has exactly three preimages.
    """
    for n in range(1, bounds['max_n'] + 1):
        cases.expect('q3({})'.format(n), 0, census(n)[3])
    return {'largest_n': bounds['max_n']}


@suite('mpm', max_n=9, recursive_max_n=10, full_max_n=12, closed_m1=7, closed_p1=5)
def _mpm(cases: Cases, bounds: Dict[str, int], rng: random.Random):
    """
    Both formulas for M_1 P_1 M_2 shapes agree with each other and with actual counts.
    """
    def shapes(size: int):
        for total in range(3, size + 1):
            for m1 in range(1, total - 1):
                for p1 in range(1, total - m1):
                    yield m1, p1, total - m1 - p1

    for m1, p1, m2 in shapes(bounds['full_max_n']):
        cases.expect((m1, p1, m2), mpm_simple(m1, p1, m2), mpm_full(m1, p1, m2))

    for m1, p1, m2 in shapes(bounds['max_n']):
        witness = canonical_mpm_perm(m1, p1, m2)
        actual = image_counts(len(witness), cutoff=bounds['max_n']).get(witness.values, 0)
        cases.expect(witness, mpm_simple(m1, p1, m2), actual)

    for m1, p1, m2 in shapes(bounds['recursive_max_n']):
        witness = canonical_mpm_perm(m1, p1, m2)
        cases.expect(witness, mpm_simple(m1, p1, m2), count_preimages(witness, 'recursive'))

    for m1 in range(1, bounds['closed_m1'] + 1):
        for p1 in range(1, bounds['closed_p1'] + 1):
            c0, c1, c2 = catalan(m1), catalan(m1 + 1), catalan(m1 + 2)
            cases.expect((m1, p1, 1), c0, mpm_simple(m1, p1, 1))
            cases.expect((m1, p1, 2), c1 + (p1 + 1) * c0, mpm_simple(m1, p1, 2))
            cases.expect((m1, p1, 3), c2 + (p1 + 1) * c1 + (p1 + 1) * (p1 + 4) // 2 * c0,
                         mpm_simple(m1, p1, 3))


@suite('g-closed-form', max_n=10, triangle_max_n=30)
def _g_closed_form(cases: Cases, bounds: Dict[str, int], rng: random.Random):
    """
    Both ballot triangles count what they claim to count, and are related by a reflection.
    """
    for n in range(1, bounds['max_n'] + 1):
        by_max = [0] * (n + 2)
        by_last = [0] * (n + 2)
        by_first_non_ltr = [0] * (n + 2)
        for p in gen_av321(n):
            by_max[p.values.index(n) + 1] += 1
            by_last[p[-1]] += 1
            ltr = ltr_maxima(p)
            by_first_non_ltr[next((i for i in range(1, n + 1) if i not in ltr), n + 1)] += 1
        for i in range(1, n + 1):
            cases.expect('b({}, {})'.format(n, i), by_max[i], ballot_b(n, i))
            cases.expect('inverse({}, {})'.format(n, i), by_max[i], by_last[i])
        for i in range(2, n + 2):
            cases.expect('g({}, {})'.format(n, i), by_first_non_ltr[i], ballot_g(n, i))

    for n in range(1, bounds['triangle_max_n'] + 1):
        for i in range(2, n + 2):
            cases.expect('g({}, {})'.format(n, i), ballot_b(n, n + 2 - i), ballot_g(n, i))
        for i in range(3, n):
            cases.expect('g({}, {}) recurrence'.format(n, i),
                         ballot_g(n - 1, i - 1) + ballot_g(n, i + 1), ballot_g(n, i))
        cases.expect('g({}, {})'.format(n, n + 1), 1, ballot_g(n, n + 1))
        cases.expect('g({}, 2)'.format(n), catalan(n - 1), ballot_g(n, 2))
        if n >= 2:
            cases.expect('g({}, {})'.format(n, n), n - 1, ballot_g(n, n))


def _b(n: int, i: int) -> int:
    # Ballot number, extended by 0 outside of the triangle.
    return ballot_b(n, i) if 1 <= i <= n else 0


@suite('ballot-identities', max_n=30, catalan_max=10)
def _ballot_identities(cases: Cases, bounds: Dict[str, int], rng: random.Random):
    """
    Recurrences and identities of the b triangle.
    """
    size = bounds['max_n']
    for n in range(1, size + 1):
        cases.expect('row {}'.format(n), catalan(n), sum(_b(n, i) for i in range(1, n + 1)))
        for i in range(1, n + 1):
            if n < size:
                cases.expect('b({}, {}) row sum'.format(n + 1, i),
                             sum(_b(n, j) for j in range(1, i + 1)), ballot_b(n + 1, i))
            if i < n:
                cases.expect('b({}, {}) two terms'.format(n, i + 1),
                             _b(n, i) + _b(n - 1, i + 1), ballot_b(n, i + 1))
                cases.expect('b({}, {}) column sum'.format(n, i + 1),
                             sum(_b(m, i) for m in range(i + 1, n + 1)), ballot_b(n, i + 1))
            if i >= 2:
                cases.expect('b({}, {}) collapse'.format(n, i),
                             ballot_b(n, i), ballot_collapse(n, i))

    for m1 in range(1, bounds['catalan_max'] + 1):
        for j in range(0, bounds['catalan_max'] + 1):
            cases.expect('b({}, {}) catalan'.format(m1 + j + 1, m1),
                         ballot_b(m1 + j + 1, m1), ballot_to_catalan(m1, j))


@suite('k-largest-ltr', max_n=10)
def _k_largest_ltr(cases: Cases, bounds: Dict[str, int], rng: random.Random):
    """
    Counting 321-avoiders whose k largest elements are LTR maxima.
    """
    for size in range(1, bounds['max_n'] + 1):
        avoiders = [(p, {p[i - 1] for i in ltr_maxima(p)}) for p in gen_av321(size)]
        for k in range(0, size):
            n = size - k
            largest = set(range(n + 1, size + 1))
            expected = sum(1 for _, values in avoiders if largest <= values)
            cases.expect((n, k), expected, count_k_largest_ltr(n, k))


@suite('ltr-invariance', max_n=7)
def _ltr_invariance(cases: Cases, bounds: Dict[str, int], rng: random.Random):
    """
    Permutations with the same LTR positions have the same number of preimages.
    """
    for n in range(1, bounds['max_n'] + 1):
        for signature, group in _class_counts(n).items():
            counts = set(group)
            cases.expect(signature, 1, len(counts))
            canonical = word_with_ltr_positions(n, signature)
            cases.expect(canonical, min(counts), count_preimages(canonical))


@suite('ltr-monotonicity', max_n=6)
def _ltr_monotonicity(cases: Cases, bounds: Dict[str, int], rng: random.Random):
    """
    Adding LTR positions never decreases the number of preimages.
    """
    for n in range(1, bounds['max_n'] + 1):
        classes = {s: group[0] for s, group in _class_counts(n).items()}
        for small, small_count in classes.items():
            for large, large_count in classes.items():
                if small != large and set(small) <= set(large):
                    cases.holds('{} <= {}'.format(small, large), small_count <= large_count,
                                'at most as many preimages')


@suite('isolated-ltr', max_n=7)
def _isolated_ltr(cases: Cases, bounds: Dict[str, int], rng: random.Random):
    """
    Removing an isolated inner LTR maximum does not change the number of preimages.
    """
    for n in range(1, bounds['max_n'] + 1):
        classes = {s: group[0] for s, group in _class_counts(n).items()}
        for signature, count in classes.items():
            decomposition = ltr_decomposition(word_with_ltr_positions(n, signature))
            blocks = decomposition.m_blocks
            for block in blocks[1:-1]:
                if len(block) == 1:
                    reduced = tuple(p for p in signature if p != block.start)
                    cases.expect('{} without {}'.format(signature, block.start), count,
                                 classes[reduced])


@suite('foata-q1', max_n=7)
def _foata_q1(cases: Cases, bounds: Dict[str, int], rng: random.Random):
    """
    Foata's bijection maps permutations with one preimage to those whose only fixed point is n.
    """
    for n in range(1, bounds['max_n'] + 1):
        permutations = [Permutation._trusted(v) for v in all_permutations(n)]
        images = {foata(p) for p in permutations}
        cases.expect('foata on S_{}'.format(n), factorial(n), len(images))

        expected = sorted(p for p in permutations if fixed_points(p) == {n})
        cases.expect('foata(Q_{}^(1))'.format(n),
                     expected, sorted(foata(p) for p in classify(n, 1)))


_OMEGA = {
    (1, 0): RationalPolynomial([1]),
    (2, 0): RationalPolynomial([1, 1]),
    (2, 1): RationalPolynomial([1]),
    (3, 0): RationalPolynomial([2, Fraction(5, 2), Fraction(1, 2)]),
    (3, 1): RationalPolynomial([1, 1]),
    (3, 2): RationalPolynomial([1]),
}


@suite('catalan-decomposition', max_n=5, max_p1=5)
def _catalan_decomposition(cases: Cases, bounds: Dict[str, int], rng: random.Random):
    """
    Preimage counts of M_1 P_1 M_2 shapes as combinations of Catalan numbers.
    """
    for m2 in range(1, bounds['max_n'] + 1):
        for p1 in range(1, bounds['max_p1'] + 1):
            try:
                coefficients = catalan_decomposition(m2, p1)
            except FormulaError as e:
                cases.expect((m2, p1), 'integral coefficients', str(e))
                continue
            for m1 in range(1, m2 + 4):
                combination = sum(c * catalan(m1 + t) for t, c in enumerate(coefficients))
                cases.expect((m1, p1, m2), mpm_simple(m1, p1, m2), combination)

    for (m2, t), expected in _OMEGA.items():
        if m2 <= bounds['max_n']:
            cases.expect('omega({}, {})'.format(m2, t), expected, omega_poly(m2, t))


@suite('omega-shift', exploratory=True, max_n=5)
def _omega_shift(cases: Cases, bounds: Dict[str, int], rng: random.Random):
    """
    Coefficient polynomials are invariant under a simultaneous shift of m2 and t (conjecture).
    """
    for m2 in range(1, bounds['max_n']):
        for t in range(0, m2):
            try:
                cases.expect('omega({}, {})'.format(m2, t), omega_poly(m2, t),
                             omega_poly(m2 + 1, t + 1))
            except FormulaError as e:
                cases.expect('omega({}, {})'.format(m2, t), 'a polynomial', str(e))


@suite('not3-family', max_n=8)
def _not3_family(cases: Cases, bounds: Dict[str, int], rng: random.Random):
    """
    A family of permutations with n+2 preimages, for every n except 1.
    """
    for n in [0] + list(range(2, bounds['max_n'] + 1)):
        cases.expect(not3_family(n), n + 2, count_preimages(not3_family(n)))

    exception = Permutation([1, 3, 4, 2, 5])
    cases.expect(exception, 5, count_preimages(exception))
    try:
        not3_family(1)
    except ShapeError:
        cases.expect('not3_family(1)', 'rejected', 'rejected')
    else:
        cases.expect('not3_family(1)', 'rejected', 'accepted')


@suite('identity-preimages', max_n=8)
def _identity_preimages(cases: Cases, bounds: Dict[str, int], rng: random.Random):
    """
    Preimages of the identity are exactly the 321-avoiders.
    """
    for n in range(0, bounds['max_n'] + 1):
        members = list(preimages(identity(n)))
        cases.expect('|q^-1(id_{})|'.format(n), catalan(n), len(members))
        avoiders = [Permutation._trusted(v) for v in all_permutations(n) if avoids_321(v)]
        cases.expect('q^-1(id_{})'.format(n), avoiders, members)


def _inverse_images(n: int) -> Dict[Tuple[int, ...], Set[Tuple[int, ...]]]:
    inverse = {}  # type: Dict[Tuple[int, ...], Set[Tuple[int, ...]]]
    for values in all_permutations(n):
        image = run_moves(Permutation._trusted(values)).values
        inverse.setdefault(image, set()).add(values)
    return inverse


def _check_preimages(cases: Cases, p: Permutation, expected: Set[Tuple[int, ...]]) -> int:
    found = preimages(p)
    members = {m.values for m in found}
    cases.expect(p, sorted(expected), sorted(members))
    cases.expect(p, not has_preimage(p), len(found) == 0)

    for sigma in found:
        cases.expect(sigma, p, run_moves(sigma))

    if not has_preimage(p) or p.is_increasing():
        return len(found)

    concatenated, inserted = split_preimages(p)
    cases.holds(p, not set(concatenated) & set(inserted), 'disjoint recursive cases')

    decomposition = ltr_decomposition(p)
    ltr_values = {p.value_at(i) for i in decomposition.ltr_positions}
    blocked = {p.value_at(i) for i in decomposition.ltr_positions
               if i < len(p) and i + 1 not in decomposition.ltr_positions}
    last_block = set(decomposition.values(decomposition.m_blocks[-1]))
    tails = list(decomposition.mu[:-1])

    for sigma in found:
        sigma_ltr = {sigma.value_at(i) for i in ltr_maxima(sigma)}
        cases.holds(sigma, sigma_ltr <= ltr_values, 'LTR maxima of preimage are LTR maxima')
        cases.holds(sigma, not sigma_ltr & blocked, 'blocked LTR maxima stay in place')

        position = {v: i for i, v in enumerate(sigma)}
        target = {v: i for i, v in enumerate(p)}
        for mu in tails:
            crossing = any(position[v] < position[mu] and target[v] > target[mu]
                           for v in ltr_values)
            cases.holds((sigma, mu), crossing, 'some LTR maximum crosses mu')

        moved = moved_maxima(sigma)
        if moved:
            cases.holds(sigma, max(moved) in last_block, 'largest moved element in M_k')
    return len(found)


@suite('preimages-oracle', max_n=6, random_max_n=8, samples=200)
def _preimages_oracle(cases: Cases, bounds: Dict[str, int], rng: random.Random):
    """
    Recursive enumeration agrees with the forward map and preimages have the expected structure.
    """
    for n in range(0, bounds['max_n'] + 1):
        inverse = _inverse_images(n)
        total = 0
        for values in all_permutations(n):
            total += _check_preimages(cases, Permutation._trusted(values),
                                      inverse.get(values, set()))
        cases.expect('sum over S_{}'.format(n), factorial(n), total)

    for n in range(bounds['max_n'] + 1, bounds['random_max_n'] + 1):
        inverse = _inverse_images(n)
        for _ in range(bounds['samples']):
            # Permutations not ending with n are covered by the exhaustive part.
            head = list(_random_permutation(rng, n - 1))
            p = Permutation._trusted(tuple(head + [n]))
            _check_preimages(cases, p, inverse.get(p.values, set()))

    for word, size in [([2, 3, 1, 4], 2), ([1, 3, 4, 2, 5], 5), ([1, 2, 3], 5)]:
        p = Permutation(word)
        cases.expect(p, size, len(preimages_oracle(p)))


@suite('moved-maxima', max_n=8, samples=200)
def _moved_maxima(cases: Cases, bounds: Dict[str, int], rng: random.Random):
    """
    LTR maxima moved to the left end up at least at their original position after sorting.
    """
    for n in range(2, bounds['max_n'] + 1):
        for _ in range(bounds['samples']):
            p = _random_permutation(rng, n)
            candidates = sorted(ltr_maxima(p) - {1})
            if not candidates:
                continue
            sources = sorted(rng.sample(candidates, rng.randint(1, len(candidates))))
            targets = []  # type: List[int]
            for source in sources:
                targets.append(rng.randint((targets[-1] if targets else 0) + 1, source - 1))

            sigma = move_maxima_left(p, sources, targets)
            output = run_moves(sigma)
            for source, target in zip(sources, targets):
                value = sigma.value_at(target)
                final = output.values.index(value) + 1
                cases.holds((p, source, target), final >= source, 'ends at or after its source')
