import sys
from functools import lru_cache

import pytest
from hypothesis import HealthCheck, settings

from bicrossed.cli import resolve_fixture

settings.register_profile(
    "repo", derandomize=True, deadline=None, max_examples=40, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("repo")


@lru_cache(maxsize=None)
def shipped(name):
    return resolve_fixture(name)


@pytest.fixture
def e1():
    return shipped("e1-borel-sl2")


@pytest.fixture
def e3():
    return shipped("e3-laurent")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.TITLES):
        terminalreporter.write_line(mod.summary_line(n))
