import pytest

from qslab.census import ALL, DEFAULT_SEED, get_suite, list_suites, verify_suite
from qslab.census import suites
from qslab.exceptions import BoundsError, UnknownSuiteError, VerificationError


SUITES = [
    ('equivalence', {'max_n': 5, 'random_max_n': 7, 'samples': 20}),
    ('sortable-321', {'max_n': 6, 'pattern_max_n': 5}),
    ('census-formulas', {'max_n': 6, 'closed_max_n': 12}),
    ('no-three', {'max_n': 7}),
    ('mpm', {'max_n': 7, 'recursive_max_n': 8, 'full_max_n': 10, 'closed_m1': 4, 'closed_p1': 3}),
    ('g-closed-form', {'max_n': 7, 'triangle_max_n': 15}),
    ('ballot-identities', {'max_n': 15, 'catalan_max': 6}),
    ('k-largest-ltr', {'max_n': 7}),
    ('ltr-invariance', {'max_n': 6}),
    ('ltr-monotonicity', {'max_n': 5}),
    ('isolated-ltr', {'max_n': 6}),
    ('foata-q1', {'max_n': 6}),
    ('catalan-decomposition', {'max_n': 4, 'max_p1': 4}),
    ('not3-family', {'max_n': 5}),
    ('identity-preimages', {'max_n': 6}),
    ('preimages-oracle', {'max_n': 5, 'random_max_n': 6, 'samples': 20}),
    ('moved-maxima', {'max_n': 6, 'samples': 30}),
]


class TestRegistry:
    def test_list_suites(self):
        names = list_suites()
        assert names[-1] == ALL
        assert set(names) == {name for name, _ in SUITES} | {'omega-shift', ALL}

    def test_get_suite(self):
        target = get_suite('no-three')
        assert target.name == 'no-three'
        assert target.bounds == {'max_n': 8}
        assert not target.exploratory
        assert target.description == 'No permutation has exactly three preimages.'
        assert get_suite('omega-shift').exploratory

    def test_unknown_suite(self):
        with pytest.raises(UnknownSuiteError) as e:
            verify_suite('bogus')
        assert 'bogus' in str(e.value)

    @pytest.mark.parametrize('name, bounds', [
        ('no-three', {'samples': 3}),
        ('no-three', {'max_n': -1}),
        ('no-three', {'max_n': '4'}),
        ('no-three', {'max_n': True}),
        (ALL, {'unknown': 3}),
    ])
    def test_invalid_bounds(self, name, bounds):
        with pytest.raises(BoundsError):
            verify_suite(name, bounds)


class TestSuites:
    @pytest.mark.parametrize('name, bounds', SUITES, ids=[name for name, _ in SUITES])
    def test_suite_passes(self, name, bounds):
        report = verify_suite(name, bounds)
        assert report.suite == name
        assert report.cases > 0
        assert report.failures == []
        assert report.passed
        assert report.parameters == dict(bounds, seed=DEFAULT_SEED)
        report.check()

    def test_deterministic(self):
        bounds = {'max_n': 4, 'random_max_n': 6, 'samples': 10}
        assert verify_suite('equivalence', bounds, seed=7) == \
            verify_suite('equivalence', bounds, seed=7)

    def test_notes(self):
        report = verify_suite('no-three', {'max_n': 5})
        assert report.cases == 5
        assert report.notes == {'largest_n': 5}

    def test_exploratory_suite(self):
        report = verify_suite('omega-shift', {'max_n': 4})
        assert report.exploratory
        assert report.cases > 0
        assert report.check() is report

    def test_failures_are_reported(self, mocker):
        mocker.patch('qslab.census.suites.census', return_value={3: 1})
        report = verify_suite('no-three', {'max_n': 2})
        assert not report.passed
        assert [str(f) for f in report.failures] == [
            'q3(1): expected 0, got 1', 'q3(2): expected 0, got 1']
        with pytest.raises(VerificationError):
            report.check()

    def test_all(self):
        bounds = {name: 0 for name in ['max_n', 'random_max_n', 'samples', 'pattern_max_n',
                                       'closed_max_n', 'recursive_max_n', 'full_max_n',
                                       'closed_m1', 'closed_p1', 'triangle_max_n',
                                       'catalan_max', 'max_p1']}
        report = verify_suite(ALL, bounds)
        assert report.suite == ALL
        assert report.passed
        assert 'omega-shift' not in report.notes
        assert set(report.notes) == {name for name, _ in SUITES}
        assert report.cases == sum(report.notes.values())


class TestDefaultBounds:
    @pytest.mark.parametrize('name', [name for name, _ in SUITES])
    def test_suite_passes_at_default_bounds(self, name):
        target = get_suite(name)
        report = verify_suite(name)
        assert report.parameters == dict(target.bounds, seed=DEFAULT_SEED)
        assert report.failures == []
        assert report.passed

    @pytest.mark.slow
    def test_no_three_up_to_ten(self):
        report = verify_suite('no-three', {'max_n': 10})
        assert report.passed
        assert report.notes == {'largest_n': 10}


def test_class_counts_groups_counts_by_ltr_positions():
    classes = suites._class_counts(3)
    assert classes == {(1,): [0, 0], (1, 2): [0, 0], (1, 3): [1], (1, 2, 3): [5]}
