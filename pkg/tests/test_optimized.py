import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hotruss.baseline import hot_decompose
from hotruss.bounds import lower_bounds
from hotruss.graph import Graph
from hotruss.optimized import Peeler, distances_changed, hot_decompose_plus
from hotruss.oracle import decompose_naive

from .conftest import complete, cycle, small_graphs


def _random_graph(n, m, seed):
    rng = random.Random(seed)
    pairs = set()
    while len(pairs) < m:
        a, b = sorted(rng.sample(range(n), 2))
        pairs.add((a, b))
    return Graph.from_edges(sorted(pairs))


def test_small_examples():
    assert set(hot_decompose_plus(complete(4), 1)[0].phi.values()) == {4}
    assert set(hot_decompose_plus(cycle(5), 2)[0].phi.values()) == {5}
    res, stats = hot_decompose_plus(Graph(), 3)
    assert res.phi == {} and stats.support_recomputations == 0


def test_rejects_bad_tau():
    with pytest.raises(ValueError):
        hot_decompose_plus(complete(3), 0)


def test_distances_changed_bridge():
    # path 0-1-2, removing (0, 1) cuts 2 off from 0
    before_u, before_v = {0: 0, 1: 1, 2: 2}, {1: 0, 0: 1, 2: 1}
    after_u, after_v = {0: 0}, {1: 0, 2: 1}
    assert distances_changed(before_u, before_v, after_u, after_v, [1, 2]) == {1: True, 2: True}


def test_distances_changed_parallel_path():
    g = cycle(4)
    g.add_edge(0, 2)
    g.add_edge(1, 3)
    bu, bv = g.bounded_bfs(0, 2), g.bounded_bfs(1, 2)
    g.remove_edge(g.edge_id(0, 1))
    au, av = g.bounded_bfs(0, 2), g.bounded_bfs(1, 2)
    assert distances_changed(bu, bv, au, av, [2, 3]) == {2: False, 3: False}
    assert distances_changed(bu, bv, au, av, [0]) == {0: True}


def test_pruning_cascade():
    # K5 with a pendant star hung off vertex 0
    g = complete(5)
    for leaf in range(5, 9):
        g.add_edge_by_label(0, leaf)
    g2 = g.copy()
    res, stats = hot_decompose_plus(g, 1)
    assert res.phi == decompose_naive(g2, 1).phi
    assert stats.vertices_pruned >= 4


def test_prune_vertex_refuses_dense_vertex():
    g = complete(4)
    peeler = Peeler(g, 1, lower_bounds(g, 1))
    peeler.k = 3
    assert peeler.prune_vertex(0) is False
    assert g.edge_count == 6
    peeler.k = 4
    assert peeler.prune_vertex(0) is True
    assert g.edge_count == 0
    assert set(peeler.phi.values()) == {4}


def test_delayed_updates_happen():
    g = _random_graph(50, 120, 2)
    res, stats = hot_decompose_plus(g.copy(), 2)
    assert stats.delayed_skips > 0
    assert res.phi == decompose_naive(g, 2).phi


@settings(max_examples=100, deadline=None)
@given(small_graphs(), st.integers(1, 4))
def test_equals_oracle_and_baseline(g, tau):
    expected = decompose_naive(g, tau).phi
    base = hot_decompose(g.copy(), tau)
    opt = hot_decompose_plus(g.copy(), tau, self_check=True)
    assert opt[0].phi == base[0].phi == expected
    assert opt[1].support_recomputations <= base[1].support_recomputations


@pytest.mark.parametrize("seed", range(6))
@pytest.mark.parametrize("tau", [1, 2, 3])
def test_counter_dominance_medium(seed, tau):
    g = _random_graph(35, 90 + 10 * seed, seed)
    base = hot_decompose(g.copy(), tau)
    opt = hot_decompose_plus(g.copy(), tau, self_check=True)
    assert opt[0].phi == base[0].phi
    assert opt[1].support_recomputations <= base[1].support_recomputations


def test_self_check_runs():
    g = _random_graph(60, 150, 5)
    _, stats = hot_decompose_plus(g, 2, self_check=True)
    assert stats.unchanged_skips > 0
    assert stats.self_check_verifications > 0


@settings(max_examples=60, deadline=None)
@given(small_graphs(), st.integers(1, 4))
def test_never_assigned_below_lower_bound(g, tau):
    lower = lower_bounds(g, tau)
    phi = hot_decompose_plus(g, tau, lower=lower)[0].phi
    assert all(p >= lower[e] for e, p in phi.items())
