"""Top-r higher-order trusses without a full decomposition."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .bounds import compute_ub, lower_bounds
from .graph import Graph
from .optimized import Peeler
from .result import RunStats
from .support import compute_all_supports

logger = logging.getLogger(__name__)


@dataclass
class TopRResult:
    k_max: int
    r: int
    phi: dict[int, int] = field(default_factory=dict)
    trusses: dict[int, set[int]] = field(default_factory=dict)
    stats: RunStats = field(default_factory=RunStats)
    rounds: int = 0


def _levels(phi: dict[int, int]) -> dict[int, set[int]]:
    out: dict[int, set[int]] = {}
    acc: set[int] = set()
    for k in sorted(set(phi.values()), reverse=True):
        acc |= {e for e, p in phi.items() if p == k}
        out[k] = set(acc)
    return out


def hot_top_r(
    g: Graph,
    tau: int,
    r: int,
    stats: RunStats | None = None,
    self_check: bool = False,
) -> TopRResult:
    """Trusses for the truss numbers in ``(k_max - r, k_max]``.

    ``phi`` holds the exact truss number of every edge in that window;
    ``trusses`` maps each truss number present in the window to its (k,
    tau)-truss. ``g`` itself is left untouched.
    """
    if tau < 1:
        raise ValueError("tau must be >= 1")
    if r < 1:
        raise ValueError("r must be >= 1")
    stats = stats if stats is not None else RunStats()
    if not g.edge_count:
        return TopRResult(k_max=0, r=r, stats=stats)

    lower = lower_bounds(g, tau)
    support = compute_all_supports(g, tau, stats).support
    upper = {e: compute_ub(g, e, tau, support) for e in g.edges()}
    k_max = max(upper.values())
    known: dict[int, int] = {}
    first = True
    rounds = 0
    while True:
        if not first:
            if known:
                k_max = max(known.values())
            else:
                k_max -= r
        first = False
        rounds += 1
        floor = k_max - r
        work = g.edge_subgraph(e for e, ub in upper.items() if ub > floor)
        frozen = {e: p - 2 for e, p in known.items()}
        peeler = Peeler(work, tau, lower, stats=stats, self_check=self_check, frozen=frozen)
        # stage ``floor`` only strips edges below the window
        peeler.run(start_k=max(floor, 2))
        for e, p in peeler.phi.items():
            if p > floor:
                known[e] = p
        logger.debug("round %d: k_max=%d, %d edges in window", rounds, k_max, len(known))
        if any(p == k_max for p in known.values()):
            break
        if k_max <= 2:
            break
    return TopRResult(k_max=k_max, r=r, phi=known, trusses=_levels(known), stats=stats, rounds=rounds)
