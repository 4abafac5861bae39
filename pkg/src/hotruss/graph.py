"""Mutable undirected simple graph with tombstone deletion and bounded BFS."""

from __future__ import annotations

import logging
from typing import Hashable, Iterable, Iterator, TextIO

logger = logging.getLogger(__name__)


class GraphError(Exception):
    """Misuse of the graph API, e.g. touching a dead vertex or edge."""


class EdgeListParseError(ValueError):
    def __init__(self, lineno: int, line: str, reason: str):
        super().__init__(f"line {lineno}: {reason}: {line.rstrip()!r}")
        self.lineno = lineno


class Graph:
    """Undirected simple graph over dense vertex ids ``0..n-1``.

    Vertices keep their external label; edges get a dense id at insertion time
    that never changes. Removal only flips alive flags (the adjacency sets drop
    the neighbor so traversals never see dead edges).
    """

    def __init__(self) -> None:
        self.labels: list[Hashable] = []
        self.label_index: dict[Hashable, int] = {}
        self.adj: list[set[int]] = []
        self.vertex_alive: list[bool] = []
        self.eu: list[int] = []
        self.ev: list[int] = []
        self.edge_alive: list[bool] = []
        self.edge_index: dict[tuple[int, int], int] = {}
        self.edge_count = 0
        self.self_loops_dropped = 0

    # -- construction ---------------------------------------------------------

    @classmethod
    def from_edges(cls, pairs: Iterable[tuple[Hashable, Hashable]]) -> Graph:
        g = cls()
        for a, b in pairs:
            g.add_edge_by_label(a, b)
        return g

    def add_vertex(self, label: Hashable) -> int:
        v = self.label_index.get(label)
        if v is None:
            v = len(self.labels)
            self.labels.append(label)
            self.label_index[label] = v
            self.adj.append(set())
            self.vertex_alive.append(True)
        return v

    def add_edge_by_label(self, a: Hashable, b: Hashable) -> int | None:
        """Insert edge ``a-b``; returns its id, or None for a self-loop."""
        u = self.add_vertex(a)
        if a == b:
            self.self_loops_dropped += 1
            return None
        v = self.add_vertex(b)
        return self.add_edge(u, v)

    def add_edge(self, u: int, v: int) -> int:
        if u == v:
            raise GraphError(f"self-loop on vertex {u}")
        key = (u, v) if u < v else (v, u)
        eid = self.edge_index.get(key)
        if eid is not None:
            return eid
        eid = len(self.eu)
        self.eu.append(key[0])
        self.ev.append(key[1])
        self.edge_alive.append(True)
        self.edge_index[key] = eid
        self.adj[u].add(v)
        self.adj[v].add(u)
        self.edge_count += 1
        return eid

    def copy(self) -> Graph:
        g = Graph()
        g.labels = list(self.labels)
        g.label_index = dict(self.label_index)
        g.adj = [set(s) for s in self.adj]
        g.vertex_alive = list(self.vertex_alive)
        g.eu = list(self.eu)
        g.ev = list(self.ev)
        g.edge_alive = list(self.edge_alive)
        g.edge_index = dict(self.edge_index)
        g.edge_count = self.edge_count
        g.self_loops_dropped = self.self_loops_dropped
        return g

    def edge_subgraph(self, edges: Iterable[int]) -> Graph:
        """Same vertex and edge id space, with only ``edges`` alive."""
        g = Graph()
        g.labels = self.labels
        g.label_index = self.label_index
        g.eu = self.eu
        g.ev = self.ev
        g.edge_index = self.edge_index
        g.vertex_alive = list(self.vertex_alive)
        g.adj = [set() for _ in self.adj]
        g.edge_alive = [False] * len(self.eu)
        for eid in edges:
            if not self.edge_alive[eid]:
                raise GraphError(f"edge {eid} is not alive")
            if g.edge_alive[eid]:
                continue
            g.edge_alive[eid] = True
            u, v = self.eu[eid], self.ev[eid]
            g.adj[u].add(v)
            g.adj[v].add(u)
            g.edge_count += 1
        return g

    # -- queries ---------------------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return self.edge_count

    def endpoints(self, eid: int) -> tuple[int, int]:
        return self.eu[eid], self.ev[eid]

    def edge_id(self, u: int, v: int) -> int:
        return self.edge_index[(u, v) if u < v else (v, u)]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> Iterator[int]:
        """Alive edge ids in increasing order."""
        alive = self.edge_alive
        return (e for e in range(len(alive)) if alive[e])

    def vertices(self) -> Iterator[int]:
        alive = self.vertex_alive
        return (v for v in range(len(alive)) if alive[v])

    def neighbors(self, v: int) -> set[int]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edge_label(self, eid: int) -> tuple[Hashable, Hashable]:
        return self.labels[self.eu[eid]], self.labels[self.ev[eid]]

    # -- mutation --------------------------------------------------------------

    def remove_edge(self, eid: int) -> None:
        if not self.edge_alive[eid]:
            raise GraphError(f"edge {eid} already removed")
        self.edge_alive[eid] = False
        u, v = self.eu[eid], self.ev[eid]
        self.adj[u].discard(v)
        self.adj[v].discard(u)
        self.edge_count -= 1

    def remove_vertex(self, v: int) -> list[int]:
        """Kill ``v`` and all its edges; returns the ids of the killed edges."""
        if not self.vertex_alive[v]:
            raise GraphError(f"vertex {v} already removed")
        killed = sorted(self.edge_id(v, w) for w in self.adj[v])
        for eid in killed:
            self.remove_edge(eid)
        self.vertex_alive[v] = False
        return killed

    # -- traversal -------------------------------------------------------------

    def bounded_bfs(self, source: int, horizon: int) -> dict[int, int]:
        """Hop distances from ``source`` truncated at ``horizon``.

        Vertices further than ``horizon`` are absent from the result.
        """
        if not self.vertex_alive[source]:
            raise GraphError(f"BFS from dead vertex {source}")
        if horizon < 0:
            raise GraphError("horizon must be non-negative")
        adj = self.adj
        dist = {source: 0}
        frontier = [source]
        for d in range(1, horizon + 1):
            nxt = []
            for x in frontier:
                for y in adj[x]:
                    if y not in dist:
                        dist[y] = d
                        nxt.append(y)
            if not nxt:
                break
            frontier = nxt
        return dist

    def tau_neighbors(self, v: int, tau: int) -> set[int]:
        """N_tau(v): vertices within ``tau`` hops, excluding ``v``."""
        if tau == 1:
            if not self.vertex_alive[v]:
                raise GraphError(f"BFS from dead vertex {v}")
            return set(self.adj[v])
        ball = set(self.bounded_bfs(v, tau))
        ball.discard(v)
        return ball

    def degree_tau(self, v: int, tau: int) -> int:
        return len(self.tau_neighbors(v, tau))


def parse_label(token: str, integer_labels: bool) -> Hashable:
    return int(token) if integer_labels else token


def load_edge_list(stream: TextIO | Iterable[str], integer_labels: bool = True) -> Graph:
    """Read whitespace-separated label pairs; ``#`` starts a comment line.

    Duplicate edges collapse, self-loops are dropped (counted on the graph).
    """
    g = Graph()
    for lineno, line in enumerate(stream, 1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        parts = text.split()
        if len(parts) < 2:
            raise EdgeListParseError(lineno, line, "expected two labels")
        try:
            a = parse_label(parts[0], integer_labels)
            b = parse_label(parts[1], integer_labels)
        except ValueError:
            raise EdgeListParseError(lineno, line, "non-integer label") from None
        g.add_edge_by_label(a, b)
    if g.self_loops_dropped:
        logger.warning("dropped %d self-loop(s)", g.self_loops_dropped)
    return g
