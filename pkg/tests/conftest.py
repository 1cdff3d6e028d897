import os
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / 'code'))

from forms import orthonormal_space, witt_basis_space  # noqa: E402

settings.register_profile('default', max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile('acceptance', max_examples=500, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get('HYPOTHESIS_PROFILE', 'default'))

GOLDEN = Path(__file__).resolve().parent / 'golden'


@pytest.fixture
def golden():
    def read(name: str) -> str:
        return (GOLDEN / name).read_text()
    return read


@pytest.fixture
def plane():
    """ V0 = R^2 with identity Gram, no V1. """
    return orthonormal_space(2)


@pytest.fixture
def euclid3():
    return orthonormal_space(3)


@pytest.fixture
def symplectic2():
    """ V1 with x1, x1^ and w(x1, x1^) = 1. """
    return witt_basis_space(0, False, 1)


@pytest.fixture
def witt11():
    return witt_basis_space(1, False, 1)


@pytest.fixture
def witt22():
    return witt_basis_space(2, False, 2)
