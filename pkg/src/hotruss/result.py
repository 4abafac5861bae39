from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Hashable


@dataclass
class RunStats:
    """Work counters collected during a decomposition run."""

    support_recomputations: int = 0
    bfs_traversals: int = 0
    edges_peeled: int = 0
    vertices_pruned: int = 0
    per_k_iterations: Counter = field(default_factory=Counter)
    delayed_skips: int = 0
    pruning_skips: int = 0
    unchanged_skips: int = 0
    self_check_verifications: int = 0

    def as_items(self) -> list[tuple[str, int]]:
        items = [
            ("support_recomputations", self.support_recomputations),
            ("bfs_traversals", self.bfs_traversals),
            ("edges_peeled", self.edges_peeled),
            ("vertices_pruned", self.vertices_pruned),
            ("delayed_skips", self.delayed_skips),
            ("pruning_skips", self.pruning_skips),
            ("unchanged_skips", self.unchanged_skips),
            ("self_check_verifications", self.self_check_verifications),
        ]
        for k in sorted(self.per_k_iterations):
            items.append((f"per_k_iterations.{k}", self.per_k_iterations[k]))
        return items


@dataclass
class TrussResult:
    """Per-edge higher-order truss numbers, keyed by edge id."""

    tau: int
    phi: dict[int, int]
    order: list[int] = field(default_factory=list)

    def trusses(self) -> dict[int, set[int]]:
        """k -> edge ids of the (k, tau)-truss, for every k that is some edge's phi."""
        levels = sorted(set(self.phi.values()), reverse=True)
        out: dict[int, set[int]] = {}
        acc: set[int] = set()
        by_k: dict[int, list[int]] = {}
        for e, k in self.phi.items():
            by_k.setdefault(k, []).append(e)
        for k in levels:
            acc.update(by_k[k])
            out[k] = set(acc)
        return out

    def truss(self, k: int) -> set[int]:
        return {e for e, p in self.phi.items() if p >= k}

    @property
    def k_max(self) -> int:
        return max(self.phi.values(), default=0)

    def by_label(self, graph) -> dict[tuple[Hashable, Hashable], int]:
        return {graph.edge_label(e): p for e, p in self.phi.items()}
