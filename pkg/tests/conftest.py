import functools

import pytest

from crossbraid.braiding import braidability_report
from crossbraid.crossed import preset
from crossbraid.supergroup import build_supergroup


@pytest.fixture(scope="session")
def h2():
    return build_supergroup(2)


@functools.lru_cache(maxsize=None)
def cached_preset(name):
    return preset(name)


@functools.lru_cache(maxsize=None)
def cached_verdict(name, testset="default"):
    return braidability_report(name, testset)


_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call" or (report.when == "setup" and report.failed):
        if "test_acceptance.py" in report.nodeid:
            _ACCEPTANCE[report.nodeid.split("::")[-1]] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE, key=lambda s: int(s.split("_")[2])):
        terminalreporter.write_line(f"{name}: {'PASS' if _ACCEPTANCE[name] == 'passed' else 'FAIL'}")
