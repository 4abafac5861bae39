import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hotruss.baseline import hot_decompose
from hotruss.graph import Graph
from hotruss.oracle import classic_truss_decompose, decompose_naive
from hotruss.support import support_tau

from .conftest import complete, cycle, path, small_graphs


def test_k4():
    res, stats = hot_decompose(complete(4), 1)
    assert set(res.phi.values()) == {4}
    assert stats.support_recomputations >= 6


def test_c5():
    res, _ = hot_decompose(cycle(5), 2)
    assert res.phi == {e: 5 for e in range(5)}


def test_path_p4():
    # oracle: decompose_naive(path(4), 2) gives 3 on every edge
    res, _ = hot_decompose(path(4), 2)
    assert res.phi == {0: 3, 1: 3, 2: 3}


def test_empty_and_consumed():
    res, stats = hot_decompose(Graph(), 2)
    assert res.phi == {} and stats.edges_peeled == 0
    g = complete(5)
    res, stats = hot_decompose(g, 2)
    assert g.edge_count == 0
    assert stats.edges_peeled == 10 and len(res.order) == 10


def test_rejects_bad_tau():
    with pytest.raises(ValueError):
        hot_decompose(complete(3), 0)


@settings(max_examples=80, deadline=None)
@given(small_graphs(), st.integers(1, 4))
def test_equals_oracle(g, tau):
    expected = decompose_naive(g, tau).phi
    res, _ = hot_decompose(g.copy(), tau)
    assert res.phi == expected
    assert min(res.phi.values()) >= 2


@settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_tau1_is_classic_truss(g):
    assert hot_decompose(g.copy(), 1)[0].phi == classic_truss_decompose(g).phi


@settings(max_examples=40, deadline=None)
@given(small_graphs(), st.integers(1, 4))
def test_nesting_and_membership(g, tau):
    res, _ = hot_decompose(g.copy(), tau)
    levels = sorted(set(res.phi.values()))
    for k in levels:
        truss = res.truss(k)
        assert res.truss(k + 1) <= truss
        sub = g.edge_subgraph(truss)
        for e in truss:
            assert support_tau(sub, e, tau) >= k - 2


@settings(max_examples=30, deadline=None)
@given(small_graphs(), st.integers(1, 4), st.randoms(use_true_random=False))
def test_independent_of_edge_order(g, tau, rnd):
    pairs = [g.edge_label(e) for e in g.edges()]
    rnd.shuffle(pairs)
    h = Graph.from_edges((b, a) if rnd.random() < 0.5 else (a, b) for a, b in pairs)
    ref = {frozenset(k): v for k, v in hot_decompose(g.copy(), tau)[0].by_label(g).items()}
    got = {frozenset(k): v for k, v in hot_decompose(h.copy(), tau)[0].by_label(h).items()}
    assert ref == got


def test_deterministic_order_and_stats():
    rng = random.Random(3)
    pairs = {tuple(sorted(rng.sample(range(25), 2))) for _ in range(70)}
    g = Graph.from_edges(sorted(pairs))
    a = hot_decompose(g.copy(), 2)
    b = hot_decompose(g.copy(), 2)
    assert a[0].order == b[0].order
    assert a[1] == b[1]
