import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from plancherel.grid import GridSpec
from plancherel.hermite import build_basis
from plancherel.mellin import default_log_grid

settings.register_profile(
    "default",
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture],
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def grid():
    return GridSpec.self_dual(1024)


@pytest.fixture(scope="session")
def basis(grid):
    return build_basis(grid, 48)


@pytest.fixture(scope="session")
def log_grid():
    return default_log_grid()


@pytest.fixture
def rng():
    return np.random.default_rng(20240521)
