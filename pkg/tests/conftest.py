import os

import pytest

from qslab.model import Permutation
from qslab.utilities import all_permutations


DATA = os.path.join(os.path.dirname(__file__), 'data')


@pytest.fixture(autouse=True)
def default_oracle_cutoff(monkeypatch):
    monkeypatch.delenv('QSLAB_MAX_ORACLE', raising=False)


@pytest.fixture
def data_path():
    def path(filename):
        return os.path.join(DATA, filename)
    return path


@pytest.fixture(params=[0, 1, 2, 3, 4, 5], ids=lambda n: 'S_{}'.format(n))
def symmetric_group(request):
    return [Permutation(values) for values in all_permutations(request.param)]
