import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from stratarg.corpus import fixture  # noqa: E402
from stratarg.framework import ArgumentationFramework  # noqa: E402


@pytest.fixture
def two_cycle():
    return ArgumentationFramework.build("ab", {("a", "b"), ("b", "a")})


@pytest.fixture
def three_cycle():
    return ArgumentationFramework.build("abc", {("a", "b"), ("b", "c"), ("c", "a")})


@pytest.fixture
def saf8():
    return fixture("saf8")


@pytest.fixture
def saf8_af(saf8):
    return saf8.framework


ACCEPTANCE_RESULTS: dict[int, tuple[str, bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_RESULTS):
        name, ok, detail = ACCEPTANCE_RESULTS[n]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {n:>2}. {name}: {detail}")
