# conftest.py
import os

import pytest
from hypothesis import HealthCheck, Verbosity, settings

from gmr import matrix_ring, triangular_ring
from ring_core import make_cyclic, set_span_mutation

settings.register_profile("fast", max_examples=25, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("debugger", max_examples=10, deadline=None,
                          verbosity=Verbosity.verbose)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "fast"))

SPEC_DIR = os.path.join(os.path.dirname(__file__), "data", "specs")


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False,
                     help="run the large worked-example reproductions")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: reproductions on rings with 2^15 or more elements")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(autouse=True)
def _no_span_mutation():
    yield
    set_span_mutation(False)


@pytest.fixture
def spec_path():
    return lambda name: os.path.join(SPEC_DIR, name)


@pytest.fixture
def z6():
    return make_cyclic(6)


@pytest.fixture
def ut2():
    return triangular_ring(make_cyclic(2), 2)


@pytest.fixture
def ut3():
    return triangular_ring(make_cyclic(2), 3)


@pytest.fixture
def m2():
    return matrix_ring(make_cyclic(2), 2)
