"""Bottom-up peeling decomposition with immediate support updates."""

from __future__ import annotations

from collections import deque

from .graph import Graph
from .result import RunStats, TrussResult
from .support import compute_all_supports


def scope_edges(g: Graph, scope: set[int]) -> list[int]:
    """Alive edges with both endpoints in ``scope``, in id order."""
    adj = g.adj
    edge_index = g.edge_index
    out = []
    for x in scope:
        for y in adj[x]:
            if x < y and y in scope:
                out.append(edge_index[(x, y)])
    out.sort()
    return out


def hot_decompose(g: Graph, tau: int, stats: RunStats | None = None) -> tuple[TrussResult, RunStats]:
    """Higher-order truss number of every edge by plain peeling.

    Consumes ``g``: every edge is removed by the time this returns. After
    each removal of ``e = (u, v)`` every alive edge inside
    ``{u, v} | common_neighbors(e)`` whose stored support still exceeds
    ``k - 2`` gets its support recomputed from scratch.
    """
    if tau < 1:
        raise ValueError("tau must be >= 1")
    stats = stats if stats is not None else RunStats()
    state = compute_all_supports(g, tau, stats)
    support = state.support
    phi: dict[int, int] = {}
    order: list[int] = []
    queued = [False] * len(g.eu)
    queue: deque[int] = deque()

    def recompute(eid: int) -> int:
        u, v = g.eu[eid], g.ev[eid]
        if tau == 1:
            return len(g.adj[u] & g.adj[v])
        stats.bfs_traversals += 2
        common = g.bounded_bfs(u, tau).keys() & g.bounded_bfs(v, tau).keys()
        common.discard(u)
        common.discard(v)
        return len(common)

    k = 2
    while g.edge_count:
        k = max(k, state.min_support_k())
        for eid in state.at_most(k - 2):
            if not queued[eid]:
                queued[eid] = True
                queue.append(eid)
        while queue:
            eid = queue.popleft()
            u, v = g.eu[eid], g.ev[eid]
            phi[eid] = k
            order.append(eid)
            stats.edges_peeled += 1
            stats.per_k_iterations[k] += 1
            if tau == 1:
                scope = g.adj[u] & g.adj[v]
            else:
                stats.bfs_traversals += 2
                scope = g.bounded_bfs(u, tau).keys() & g.bounded_bfs(v, tau).keys()
            scope.add(u)
            scope.add(v)
            state.discard(eid)
            g.remove_edge(eid)
            for other in scope_edges(g, scope):
                if queued[other] or support[other] <= k - 2:
                    continue
                value = recompute(other)
                stats.support_recomputations += 1
                state.set(other, value)
                if value <= k - 2:
                    queued[other] = True
                    queue.append(other)
    return TrussResult(tau=tau, phi=phi, order=order), stats
