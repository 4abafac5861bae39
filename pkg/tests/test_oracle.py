import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hotruss.graph import Graph
from hotruss.oracle import (
    approximation_error,
    check_diameter,
    check_min_degree,
    classic_truss_decompose,
    decompose_naive,
    diameter,
    ktruss_naive,
)

from .conftest import complete, cycle, path, small_graphs


def test_ktruss_k4():
    g = complete(4)
    assert ktruss_naive(g, 4, 1) == set(range(6))
    assert ktruss_naive(g, 5, 1) == set()
    with pytest.raises(ValueError):
        ktruss_naive(g, 1, 1)


def test_classic_examples():
    assert set(classic_truss_decompose(complete(5)).phi.values()) == {5}
    g = Graph.from_edges([(0, 1), (1, 2), (0, 2), (2, 3)])
    assert classic_truss_decompose(g).phi == {0: 3, 1: 3, 2: 3, 3: 2}


def test_diameter_helper():
    assert diameter([(0, 1), (1, 2), (2, 3)]) == 3
    assert diameter([]) == 0


def test_property_checkers_flag_violations():
    p = path(5)
    ok, bad = check_min_degree(p, p.edges(), 1, 3)
    assert not ok and (0, 1) in bad
    ok, bad = check_diameter(p, p.edges(), 1, 3)
    assert not ok and bad == [(5, 4, 2 * 4 / 3)]
    c = cycle(5)
    assert check_min_degree(c, c.edges(), 2, 5) == (True, [])
    assert check_diameter(c, c.edges(), 2, 5)[0]


def test_approximation_error():
    assert approximation_error({0: 4, 1: 4}, {0: 4, 1: 4}) == 0.0
    assert approximation_error({0: 4}, {0: 2}) == 0.5
    assert approximation_error({}, {}) == 0.0


@settings(max_examples=60, deadline=None)
@given(small_graphs(), st.integers(1, 4))
def test_nesting(g, tau):
    previous = set(g.edges())
    for k in range(2, g.vertex_count + 2):
        truss = ktruss_naive(g, k, tau)
        assert truss <= previous
        previous = truss


@settings(max_examples=60, deadline=None)
@given(small_graphs(), st.integers(1, 4))
def test_trusses_satisfy_properties(g, tau):
    res = decompose_naive(g, tau)
    for k in set(res.phi.values()):
        truss = res.truss(k)
        assert check_min_degree(g, truss, tau, k)[0]
        assert check_diameter(g, truss, tau, k)[0]


@settings(max_examples=40, deadline=None)
@given(small_graphs(), st.integers(1, 3), st.permutations(range(12)))
def test_relabeling_invariance(g, tau, perm):
    pairs = [g.edge_label(e) for e in g.edges()]
    h = Graph.from_edges((perm[a], perm[b]) for a, b in pairs)
    ref = decompose_naive(g, tau).by_label(g)
    got = decompose_naive(h, tau).by_label(h)
    mapped = {frozenset((perm[a], perm[b])): p for (a, b), p in ref.items()}
    assert mapped == {frozenset(k): p for k, p in got.items()}


@settings(max_examples=40, deadline=None)
@given(small_graphs())
def test_tau1_matches_classic(g):
    assert decompose_naive(g, 1).phi == classic_truss_decompose(g).phi


def test_complete_graph_any_tau():
    for n, tau in itertools.product(range(2, 7), range(1, 4)):
        assert set(decompose_naive(complete(n), tau).phi.values()) == {n}
