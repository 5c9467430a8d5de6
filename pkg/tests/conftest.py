import os
from functools import lru_cache

import pytest
from hypothesis import HealthCheck, settings

from toricface.corpus import named_fans, small_coordinate_fans, small_geometric_fans

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("thorough", max_examples=500, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@lru_cache(maxsize=None)
def generated_corpus():
    return tuple(small_geometric_fans(4)) + tuple(small_coordinate_fans(5))


@lru_cache(maxsize=None)
def full_corpus():
    return tuple(named_fans().values()) + generated_corpus()


@pytest.fixture(scope="session")
def corpus():
    return full_corpus()


@pytest.fixture
def named():
    return named_fans()


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
