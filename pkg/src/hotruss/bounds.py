"""Lower and upper bounds on higher-order truss numbers.

The lower bound comes from small-diameter balls: every vertex set whose
pairwise distances are within ``tau`` forms a truss of its own size. The
upper bound is the size of the largest connected piece around an edge whose
edges all carry enough support.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, GraphError


@dataclass
class BoundsTable:
    lower: dict[int, int] = field(default_factory=dict)
    upper: dict[int, int] = field(default_factory=dict)


def vertex_centric_size(g: Graph, v: int, tau: int) -> int:
    """Vertex count of the ball of radius ``tau // 2`` around ``v``."""
    radius = tau // 2
    if radius == 0:
        return 1
    return 1 + g.degree_tau(v, radius)


def edge_centric_size(g: Graph, eid: int, tau: int) -> int:
    """Vertex count of the union of the ``tau // 2`` balls around both endpoints."""
    u, v = g.endpoints(eid)
    radius = tau // 2
    ball = {u, v}
    if radius:
        ball |= g.bounded_bfs(u, radius).keys()
        ball |= g.bounded_bfs(v, radius).keys()
    return len(ball)


def lower_bound(g: Graph, eid: int, tau: int) -> int:
    if not g.edge_alive[eid]:
        raise GraphError(f"edge {eid} is not alive")
    return _LowerBounds(g, tau).of(eid)


def lower_bounds(g: Graph, tau: int) -> dict[int, int]:
    """Lower bound for every alive edge, sharing ball computations."""
    lb = _LowerBounds(g, tau)
    return {eid: lb.of(eid) for eid in g.edges()}


class _LowerBounds:
    def __init__(self, g: Graph, tau: int):
        if tau < 1:
            raise ValueError("tau must be >= 1")
        self.g = g
        self.tau = tau
        self.radius = tau // 2
        self._balls: dict[int, set[int]] = {}

    def ball(self, v: int) -> set[int]:
        """N_radius(v) without v itself."""
        b = self._balls.get(v)
        if b is None:
            b = self.g.tau_neighbors(v, self.radius)
            self._balls[v] = b
        return b

    def of(self, eid: int) -> int:
        u, v = self.g.endpoints(eid)
        if self.radius == 0:
            return 2
        bu, bv = self.ball(u), self.ball(v)
        best = 0
        for w in bu & bv:
            w_size = len(self.ball(w)) + 1
            if w_size > best:
                best = w_size
        if self.tau % 2 == 0:
            return max(best, len(bu) + 1, len(bv) + 1)
        return max(best, len(bu | bv | {u, v}))


def compute_ub(g: Graph, eid: int, tau: int, support: list[int] | dict[int, int]) -> int:
    """Binary search for the largest feasible ``mid``.

    ``mid`` is feasible when hop-limited BFS from both endpoints, confined to
    ``{u, v} | common_neighbors(e)`` and to edges whose support is at least
    ``mid - 2``, collects at least ``mid`` vertices. ``support`` holds exact
    supports in ``g``, indexed by edge id.
    """
    if not g.edge_alive[eid]:
        raise GraphError(f"edge {eid} is not alive")
    u, v = g.endpoints(eid)
    region = g.bounded_bfs(u, tau).keys() & g.bounded_bfs(v, tau).keys()
    region.add(u)
    region.add(v)
    # region-internal edges with their supports
    local: dict[int, list[tuple[int, int]]] = {x: [] for x in region}
    for x in region:
        for y in g.adj[x]:
            if y in region:
                local[x].append((y, support[g.edge_id(x, y)]))

    def reach(threshold: int) -> int:
        seen = {u, v}
        for source in (u, v):
            dist = {source: 0}
            frontier = [source]
            for d in range(1, tau + 1):
                nxt = []
                for x in frontier:
                    for y, s in local[x]:
                        if s >= threshold and y not in dist:
                            dist[y] = d
                            nxt.append(y)
                frontier = nxt
            seen.update(dist)
        return len(seen)

    lo, hi = 2, support[eid] + 2
    best = 2
    while lo <= hi:
        mid = (lo + hi) // 2
        if reach(mid - 2) < mid:
            hi = mid - 1
        else:
            best = mid
            lo = mid + 1
    return best
