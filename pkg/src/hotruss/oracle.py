"""Brute-force reference implementations and structural checkers.

Nothing here reuses the traversal or support code of the decomposers; it works
on plain ``frozenset`` edge sets and recomputes everything every round.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable

from .result import TrussResult

Edge = tuple[int, int]


def _graph_edges(g) -> dict[Edge, int]:
    """(min, max) endpoint pair -> edge id for the alive edges of a Graph."""
    return {(g.eu[e], g.ev[e]): e for e in range(len(g.eu)) if g.edge_alive[e]}


def _adjacency(edges: Iterable[Edge]) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = {}
    for a, b in edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    return adj


def _within(adj: dict[int, list[int]], source: int, hops: int) -> set[int]:
    seen = {source}
    queue = deque([(source, 0)])
    while queue:
        x, d = queue.popleft()
        if d == hops:
            continue
        for y in adj.get(x, ()):
            if y not in seen:
                seen.add(y)
                queue.append((y, d + 1))
    seen.discard(source)
    return seen


def _all_distances(adj: dict[int, list[int]], source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def _supports(edges: set[Edge], tau: int) -> dict[Edge, int]:
    adj = _adjacency(edges)
    reach = {x: _within(adj, x, tau) for x in adj}
    return {(a, b): len((reach[a] & reach[b]) - {a, b}) for a, b in edges}


def _peel_to_fixpoint(edges: set[Edge], k: int, tau: int) -> set[Edge]:
    current = set(edges)
    while True:
        sup = _supports(current, tau)
        weak = {e for e, s in sup.items() if s < k - 2}
        if not weak:
            return current
        current -= weak


def ktruss_naive(g, k: int, tau: int) -> set[int]:
    """Edge ids of the (k, tau)-truss, by repeated full recomputation."""
    if k < 2:
        raise ValueError("k must be >= 2")
    ids = _graph_edges(g)
    return {ids[e] for e in _peel_to_fixpoint(set(ids), k, tau)}


def decompose_naive(g, tau: int) -> TrussResult:
    """Truss number of every edge as the largest k whose truss keeps it."""
    ids = _graph_edges(g)
    phi: dict[int, int] = {}
    current = set(ids)
    k = 2
    while current:
        nxt = _peel_to_fixpoint(current, k + 1, tau)
        for e in current - nxt:
            phi[ids[e]] = k
        current = nxt
        k += 1
    return TrussResult(tau=tau, phi=phi)


def classic_truss_decompose(g) -> TrussResult:
    """Ordinary triangle-support truss decomposition (tau = 1)."""
    ids = _graph_edges(g)
    nbrs: dict[int, set[int]] = {}
    for a, b in ids:
        nbrs.setdefault(a, set()).add(b)
        nbrs.setdefault(b, set()).add(a)
    sup = {e: len(nbrs[e[0]] & nbrs[e[1]]) for e in ids}
    phi: dict[int, int] = {}
    k = 2
    while sup:
        k = max(k, min(sup.values()) + 2)
        stack = [e for e, s in sup.items() if s <= k - 2]
        while stack:
            e = stack.pop()
            if e not in sup:
                continue
            a, b = e
            del sup[e]
            phi[ids[e]] = k
            for w in nbrs[a] & nbrs[b]:
                for f in ((min(a, w), max(a, w)), (min(b, w), max(b, w))):
                    if f in sup:
                        sup[f] -= 1
                        if sup[f] <= k - 2:
                            stack.append(f)
            nbrs[a].discard(b)
            nbrs[b].discard(a)
    return TrussResult(tau=1, phi=phi)


def _edges_of(g, edge_ids: Iterable[int]) -> list[Edge]:
    return [(g.eu[e], g.ev[e]) for e in edge_ids]


def check_min_degree(g, truss_edges: Iterable[int], tau: int, k: int) -> tuple[bool, list[tuple[int, int]]]:
    """Every vertex of the truss must see at least k - 1 others within tau hops.

    Returns ``(ok, witnesses)`` where witnesses are ``(vertex, degree)`` pairs
    that fail.
    """
    adj = _adjacency(_edges_of(g, truss_edges))
    bad = []
    for v in sorted(adj):
        d = len(_within(adj, v, tau))
        if d < k - 1:
            bad.append((v, d))
    return not bad, bad


def components(edges: Iterable[Edge]) -> list[set[Edge]]:
    adj = _adjacency(edges)
    seen: set[int] = set()
    out = []
    for start in sorted(adj):
        if start in seen:
            continue
        comp = set(_all_distances(adj, start))
        seen |= comp
        out.append({(a, b) for a in comp for b in adj[a] if a < b})
    return out


def diameter(edges: Iterable[Edge]) -> int:
    adj = _adjacency(edges)
    return max((max(_all_distances(adj, v).values()) for v in adj), default=0)


def check_diameter(g, truss_edges: Iterable[int], tau: int, k: int) -> tuple[bool, list[tuple[int, int, float]]]:
    """Each connected component must have diameter <= 2*tau*(|V|-1)/k.

    Returns ``(ok, witnesses)`` with ``(vertices, diameter, bound)`` per failing
    component.
    """
    bad = []
    for comp in components(_edges_of(g, truss_edges)):
        size = len({x for e in comp for x in e})
        diam = diameter(comp)
        bound = 2 * tau * (size - 1) / k
        if diam > bound:
            bad.append((size, diam, bound))
    return not bad, bad


def approximation_error(exact: TrussResult | dict[int, int], bound: dict[int, int]) -> float:
    """Mean of |phi - bound| / phi over the edges of ``exact``."""
    phi = exact.phi if isinstance(exact, TrussResult) else exact
    if not phi:
        return 0.0
    return sum(abs(p - bound[e]) / p for e, p in phi.items()) / len(phi)
