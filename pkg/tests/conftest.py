from __future__ import annotations

import itertools
from pathlib import Path

import pytest
from hypothesis import strategies as st

from hotruss.graph import Graph

DATA = Path(__file__).parent / "data"

# criterion lines reported by test_acceptance, printed in the terminal summary
ACCEPTANCE_LINES: dict[str, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[0])):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])


def complete(n: int) -> Graph:
    return Graph.from_edges(itertools.combinations(range(n), 2))


def cycle(n: int) -> Graph:
    return Graph.from_edges((i, (i + 1) % n) for i in range(n))


def path(n: int) -> Graph:
    return Graph.from_edges((i, i + 1) for i in range(n - 1))


def star(leaves: int) -> Graph:
    return Graph.from_edges((0, i) for i in range(1, leaves + 1))


def phi_by_label(g: Graph, phi: dict[int, int]) -> dict[tuple, int]:
    return {g.edge_label(e): p for e, p in phi.items()}


@st.composite
def small_graphs(draw, max_n: int = 12) -> Graph:
    n = draw(st.integers(min_value=2, max_value=max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), min_size=1, max_size=len(pairs), unique=True))
    return Graph.from_edges(chosen)


@pytest.fixture
def k4() -> Graph:
    return complete(4)


@pytest.fixture
def c5() -> Graph:
    return cycle(5)


@pytest.fixture
def p4() -> Graph:
    return path(4)
