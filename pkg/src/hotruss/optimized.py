"""Peeling decomposition with delayed updates, vertex pruning and
unchanged-support detection."""

from __future__ import annotations

from collections import deque

from .baseline import scope_edges
from .bounds import lower_bounds
from .graph import Graph
from .result import RunStats, TrussResult
from .support import SupportState

UNREACHED = -1


class SelfCheckError(AssertionError):
    """An unchanged-distance skip left a support that no longer matches."""


def distances_changed(
    before_u: dict[int, int],
    before_v: dict[int, int],
    after_u: dict[int, int],
    after_v: dict[int, int],
    targets,
) -> dict[int, bool]:
    """Per target: did its truncated distance to either endpoint change?

    Each argument is a truncated distance map (absent = beyond the horizon);
    two absent entries compare equal.
    """
    return {
        w: before_u.get(w, UNREACHED) != after_u.get(w, UNREACHED)
        or before_v.get(w, UNREACHED) != after_v.get(w, UNREACHED)
        for w in targets
    }


class Peeler:
    """Stage-by-stage peeling state shared by the full and the top-r drivers.

    ``frozen`` maps edge ids to supports that are taken as given and never
    recomputed (edges whose truss number is already known).
    """

    def __init__(
        self,
        g: Graph,
        tau: int,
        lower: dict[int, int],
        stats: RunStats | None = None,
        self_check: bool = False,
        frozen: dict[int, int] | None = None,
    ):
        if tau < 1:
            raise ValueError("tau must be >= 1")
        self.g = g
        self.tau = tau
        self.lower = lower
        self.stats = stats if stats is not None else RunStats()
        self.self_check = self_check
        self.frozen = frozen or {}
        self.state = SupportState(len(g.eu))
        self.phi: dict[int, int] = {}
        self.order: list[int] = []
        self.queue: deque[int] = deque()
        self.queued = [False] * len(g.eu)
        self.k = 0
        self._deg_cache: dict[int, int] = {}

        by_level: dict[int, list[int]] = {}
        for eid in g.edges():
            by_level.setdefault(lower[eid], []).append(eid)
        self._levels = sorted(by_level.items(), reverse=True)

    # -- primitives ------------------------------------------------------------

    def _ball(self, v: int) -> dict[int, int]:
        self.stats.bfs_traversals += 1
        return self.g.bounded_bfs(v, self.tau)

    def _compute_support(self, eid: int) -> int:
        g = self.g
        u, v = g.eu[eid], g.ev[eid]
        self.stats.support_recomputations += 1
        if self.tau == 1:
            return len(g.adj[u] & g.adj[v])
        common = self._ball(u).keys() & self._ball(v).keys()
        common.discard(u)
        common.discard(v)
        return len(common)

    def _store(self, eid: int, value: int) -> None:
        self.state.set(eid, value)
        if value <= self.k - 2 and not self.queued[eid]:
            self.queued[eid] = True
            self.queue.append(eid)

    def _refresh(self, eid: int) -> None:
        if eid in self.frozen:
            self._store(eid, self.frozen[eid])
        else:
            self._store(eid, self._compute_support(eid))

    def _degree_tau(self, v: int) -> int:
        d = self._deg_cache.get(v)
        if d is None:
            if self.tau == 1:
                d = len(self.g.adj[v])
            else:
                d = len(self._ball(v)) - 1
            self._deg_cache[v] = d
        return d

    def _assign(self, eid: int) -> None:
        k = self.k
        self.phi[eid] = k
        self.order.append(eid)
        self.stats.edges_peeled += 1
        self.stats.per_k_iterations[k] += 1
        self.state.discard(eid)

    # -- pruning ---------------------------------------------------------------

    def prune_vertex(self, v: int) -> bool:
        """Remove ``v`` (and cascade) if its tau-hop degree is at most ``k - 1``.

        Every edge incident to a pruned vertex gets truss number ``k``.
        Returns False, touching nothing, when ``v`` cannot be pruned.
        """
        g, k = self.g, self.k
        if self._degree_tau(v) > k - 1:
            return False
        pending = deque([v])
        marked = {v}
        while pending:
            x = pending.popleft()
            if not g.vertex_alive[x]:
                continue
            reach = sorted(g.tau_neighbors(x, self.tau))
            if self.tau > 1:
                self.stats.bfs_traversals += 1
            for w in sorted(g.adj[x]):
                self._assign(g.edge_id(x, w))
            g.remove_vertex(x)
            self.stats.vertices_pruned += 1
            self._deg_cache.clear()
            survivors = set()
            for w in reach:
                if w in marked:
                    continue
                if self._degree_tau(w) <= k - 1:
                    marked.add(w)
                    pending.append(w)
                else:
                    survivors.add(w)
            for eid in scope_edges(g, survivors):
                if eid in self.frozen or self.queued[eid]:
                    continue
                if self.lower[eid] <= k:
                    self._store(eid, self._compute_support(eid))
                else:
                    self.state.mark_stale(eid)
        return True

    # -- peeling ---------------------------------------------------------------

    def _remove(self, eid: int) -> None:
        g, k, tau = self.g, self.k, self.tau
        stats = self.stats
        u, v = g.eu[eid], g.ev[eid]
        self._assign(eid)
        if tau == 1:
            before_u = dict.fromkeys(g.adj[u], 1)
            before_v = dict.fromkeys(g.adj[v], 1)
            before_u[u] = 0
            before_v[v] = 0
        else:
            before_u = self._ball(u)
            before_v = self._ball(v)
        scope = before_u.keys() & before_v.keys()
        scope.add(u)
        scope.add(v)
        g.remove_edge(eid)
        self._deg_cache.clear()

        after_u = after_v = None
        for other in scope_edges(g, scope):
            if not g.edge_alive[other] or other in self.frozen:
                continue
            if self.lower[other] > k:
                stats.delayed_skips += 1
                self.state.mark_stale(other)
                continue
            x, y = g.eu[other], g.ev[other]
            if self.prune_vertex(x) or self.prune_vertex(y):
                stats.pruning_skips += 1
                continue
            if after_u is None:
                # distances only grow under deletion, so probing after any
                # prunes still certifies "unchanged by this edge's removal"
                after_u = self._ball(u) if g.vertex_alive[u] else {}
                after_v = self._ball(v) if g.vertex_alive[v] else {}
            changed = distances_changed(before_u, before_v, after_u, after_v, (x, y))
            if not (changed[x] or changed[y]):
                stats.unchanged_skips += 1
                # queued edges are already doomed and deliberately not kept exact
                if self.self_check and not self.queued[other]:
                    self._verify_unchanged(other)
                continue
            if self.state.support[other] > k - 2 and not self.queued[other]:
                self._store(other, self._compute_support(other))

    def _verify_unchanged(self, eid: int) -> None:
        g = self.g
        u, v = g.eu[eid], g.ev[eid]
        common = g.tau_neighbors(u, self.tau) & g.tau_neighbors(v, self.tau)
        common.discard(u)
        common.discard(v)
        self.stats.self_check_verifications += 1
        stored = self.state.support[eid]
        if len(common) != stored:
            raise SelfCheckError(
                f"edge {g.edge_label(eid)}: stored support {stored}, actual {len(common)}"
            )

    def run(self, start_k: int | None = None) -> None:
        """Peel until the graph is empty, starting at stage ``start_k``.

        Edges whose lower bound is below ``start_k`` are treated as if it
        equalled ``start_k``.
        """
        if not self.g.edge_count:
            return
        levels = self._levels
        self.k = start_k if start_k is not None else levels[-1][0]
        while self.g.edge_count:
            released: list[int] = []
            while levels and levels[-1][0] <= self.k:
                released.extend(levels.pop()[1])
            for eid in sorted(released):
                if not self.g.edge_alive[eid]:
                    continue
                if eid not in self.state or self.state.stale[eid]:
                    self._refresh(eid)
            for eid in self.state.at_most(self.k - 2):
                if not self.queued[eid]:
                    self.queued[eid] = True
                    self.queue.append(eid)
            queue = self.queue
            while queue:
                eid = queue.popleft()
                if self.g.edge_alive[eid]:
                    self._remove(eid)
            self.k += 1


def hot_decompose_plus(
    g: Graph,
    tau: int,
    stats: RunStats | None = None,
    self_check: bool = False,
    lower: dict[int, int] | None = None,
) -> tuple[TrussResult, RunStats]:
    """Higher-order truss numbers with the three work-saving strategies.

    Same output as :func:`hotruss.baseline.hot_decompose`. Consumes ``g``.
    """
    if tau < 1:
        raise ValueError("tau must be >= 1")
    stats = stats if stats is not None else RunStats()
    if lower is None:
        lower = lower_bounds(g, tau)
    peeler = Peeler(g, tau, lower, stats=stats, self_check=self_check)
    peeler.run()
    return TrussResult(tau=tau, phi=peeler.phi, order=peeler.order), stats
