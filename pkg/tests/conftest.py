import itertools
import sys

import pytest

from metdim.graph import build_graph


def path(n):
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n):
    return build_graph(n, itertools.combinations(range(n), 2))


def star(m):
    return build_graph(m + 1, [(0, i) for i in range(1, m + 1)])


def cycle(n):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


@pytest.fixture
def p5():
    return path(5)


@pytest.fixture
def k3():
    return complete(3)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod and mod.LINES:
        terminalreporter.section("acceptance criteria")
        for line in mod.LINES:
            terminalreporter.write_line(line)
