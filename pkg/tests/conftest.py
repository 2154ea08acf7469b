from functools import lru_cache

import pytest

from nonconsec.oracle import class_census


@lru_cache(maxsize=None)
def _census(n):
    return {str(label): v for label, v in class_census(n).items()}


@pytest.fixture(scope="session")
def census():
    """Class sizes keyed by label text, e.g. census(9)["A(9,2)"]."""
    return _census


_acceptance = []


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
