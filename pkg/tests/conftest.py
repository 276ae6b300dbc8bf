from __future__ import annotations

import sys

import pytest

from dinfty.arquiver import Window
from dinfty.objects import parse_cluster


@pytest.fixture
def obj():
    """Parse into the fundamental domain."""
    return parse_cluster


@pytest.fixture(scope="session")
def w13():
    return Window(13)


@pytest.fixture(scope="session")
def w17():
    return Window(17)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(module, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for text in sorted(lines, key=lambda t: int(t.split()[1].rstrip(":"))):
            terminalreporter.write_line(text)
