import random

import pytest

from sgereduce import chirotope_from_points

from helpers import ACCEPTANCE_RESULTS, SIX_POINTS, SQUARE, TRIANGLE_PLUS_ONE


@pytest.fixture
def six():
    return chirotope_from_points(SIX_POINTS)


@pytest.fixture
def square():
    return chirotope_from_points(SQUARE)


@pytest.fixture
def tri1():
    return chirotope_from_points(TRIANGLE_PLUS_ONE)


@pytest.fixture
def rng():
    return random.Random(20131)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        line = f"[{'PASS' if ok else 'FAIL'}] {name}"
        if detail:
            line += f" -- {detail}"
        terminalreporter.write_line(line)
