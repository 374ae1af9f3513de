import random

import pytest

from clubsplit.graph import Graph

# Figure 1 labels
V, B1, B2, B3, T1, T2, T3, F1, F2, F3 = range(10)
FIGURE1_EDGES = [
    (V, B1), (V, B2), (B1, B3), (B2, B3), (B2, F1),
    (V, T1), (V, T2), (T1, T3), (T2, T3),
    (V, F1), (V, F2), (F1, F3), (F2, F3),
]


def figure1():
    return Graph(range(10), FIGURE1_EDGES)


def double_square():
    """Two 4-cycles 0-1-2-3 and 0-4-5-6 sharing vertex 0."""
    return Graph(range(7), [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 0)])


def path(n):
    return Graph(range(n), [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph(range(n), [(i, (i + 1) % n) for i in range(n)])


def complete(vertices):
    vs = list(vertices)
    return [(u, w) for i, u in enumerate(vs) for w in vs[i + 1:]]


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(range(n), [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


@pytest.fixture
def fig1():
    return figure1()


@pytest.fixture
def dsq():
    return double_square()


ACCEPTANCE_RESULTS: list = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(line)
