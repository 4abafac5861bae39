"""Higher-order common neighbors, edge support and the bucketed support index."""

from __future__ import annotations

from .graph import Graph, GraphError
from .result import RunStats


def common_neighbors_tau(g: Graph, eid: int, tau: int) -> set[int]:
    """Vertices within ``tau`` hops of both endpoints, endpoints excluded."""
    if not g.edge_alive[eid]:
        raise GraphError(f"edge {eid} is not alive")
    u, v = g.eu[eid], g.ev[eid]
    if tau == 1:
        return g.adj[u] & g.adj[v]
    common = g.bounded_bfs(u, tau).keys() & g.bounded_bfs(v, tau).keys()
    common.discard(u)
    common.discard(v)
    return common


def support_tau(g: Graph, eid: int, tau: int) -> int:
    return len(common_neighbors_tau(g, eid, tau))


class SupportState:
    """Stored supports plus a bucket index keyed by support value.

    ``stale[e]`` means the graph changed near ``e`` after its support was
    stored, so the stored value is only an upper bound on the current one.
    """

    def __init__(self, num_edges: int):
        self.support = [-1] * num_edges
        self.stale = [False] * num_edges
        self.buckets: list[set[int]] = []
        self._min_ptr = 0

    def __contains__(self, eid: int) -> bool:
        return self.support[eid] >= 0

    def set(self, eid: int, value: int) -> None:
        old = self.support[eid]
        if old >= 0:
            self.buckets[old].discard(eid)
        while len(self.buckets) <= value:
            self.buckets.append(set())
        self.buckets[value].add(eid)
        self.support[eid] = value
        self.stale[eid] = False
        if value < self._min_ptr:
            self._min_ptr = value

    def discard(self, eid: int) -> None:
        old = self.support[eid]
        if old >= 0:
            self.buckets[old].discard(eid)
            self.support[eid] = -1
        self.stale[eid] = False

    def mark_stale(self, eid: int) -> None:
        if self.support[eid] >= 0:
            self.stale[eid] = True

    def min_support_k(self) -> int:
        """Smallest non-stale stored support plus 2.

        Raises LookupError when nothing is left (decomposition complete).
        """
        buckets = self.buckets
        i = self._min_ptr
        while i < len(buckets):
            b = buckets[i]
            if b and any(not self.stale[e] for e in b):
                self._min_ptr = i
                return i + 2
            i += 1
        self._min_ptr = i
        raise LookupError("no edge with a current support")

    def at_most(self, threshold: int) -> list[int]:
        """Bucketed edges with stored support <= threshold, in id order."""
        out: list[int] = []
        top = min(threshold, len(self.buckets) - 1)
        for s in range(self._min_ptr, top + 1):
            out.extend(self.buckets[s])
        return sorted(out)


def compute_all_supports(g: Graph, tau: int, stats: RunStats | None = None) -> SupportState:
    """Exact support of every alive edge, one neighborhood BFS per vertex."""
    state = SupportState(len(g.eu))
    cache: dict[int, set[int]] = {}

    def ball(x: int) -> set[int]:
        s = cache.get(x)
        if s is None:
            s = g.tau_neighbors(x, tau)
            cache[x] = s
            if stats is not None and tau > 1:
                stats.bfs_traversals += 1
        return s

    for eid in g.edges():
        u, v = g.eu[eid], g.ev[eid]
        common = ball(u) & ball(v)
        common.discard(u)
        common.discard(v)
        state.set(eid, len(common))
        if stats is not None:
            stats.support_recomputations += 1
    return state
