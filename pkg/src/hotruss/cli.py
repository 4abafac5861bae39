"""Command-line entry point: decompose, compare, generate."""

from __future__ import annotations

import argparse
import logging
import sys
import time
from dataclasses import dataclass
from typing import TextIO

from .baseline import hot_decompose
from .generate import KINDS, generate, to_edge_list_text
from .graph import EdgeListParseError, Graph, load_edge_list
from .optimized import SelfCheckError, hot_decompose_plus
from .oracle import decompose_naive
from .result import RunStats
from .topr import hot_top_r

ALGORITHMS = ("baseline", "optimized", "topr", "oracle")

logger = logging.getLogger("hotruss")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    input: str | None = None
    tau: int = 2
    algorithm: str = "optimized"
    r: int = 1
    output: str | None = None
    stats: str | None = None
    seed: int = 0
    self_check: bool = False
    compare: str | None = None
    generate: str | None = None

    def validate(self) -> None:
        if self.tau < 1:
            raise UsageError("--tau must be >= 1")
        if self.algorithm not in ALGORITHMS:
            raise UsageError(f"--algorithm must be one of {', '.join(ALGORITHMS)}")
        if self.compare is not None and self.compare not in ALGORITHMS:
            raise UsageError(f"--compare must be one of {', '.join(ALGORITHMS)}")
        if self.r < 1:
            raise UsageError("--r must be >= 1")
        if self.generate is None and self.input is None:
            raise UsageError("--input is required unless --generate is given")


@dataclass
class Outcome:
    phi: dict[int, int]
    stats: RunStats
    seconds: float
    k_max: int


def run_algorithm(g: Graph, algorithm: str, tau: int, r: int = 1, self_check: bool = False) -> Outcome:
    """Run one algorithm on a private copy of ``g``."""
    work = g.copy()
    stats = RunStats()
    start = time.perf_counter()
    if algorithm == "baseline":
        result, _ = hot_decompose(work, tau, stats)
        phi, k_max = result.phi, result.k_max
    elif algorithm == "optimized":
        result, _ = hot_decompose_plus(work, tau, stats, self_check=self_check)
        phi, k_max = result.phi, result.k_max
    elif algorithm == "topr":
        top = hot_top_r(work, tau, r, stats, self_check=self_check)
        phi, k_max = top.phi, top.k_max
    elif algorithm == "oracle":
        result = decompose_naive(work, tau)
        phi, k_max = result.phi, result.k_max
    else:
        raise UsageError(f"unknown algorithm {algorithm!r}")
    return Outcome(phi, stats, time.perf_counter() - start, k_max)


def _oriented(g: Graph, eid: int):
    a, b = g.edge_label(eid)
    return (a, b) if a <= b else (b, a)


def format_phi(g: Graph, phi: dict[int, int]) -> str:
    rows = sorted((_oriented(g, e), p) for e, p in phi.items())
    return "".join(f"{a}\t{b}\t{p}\n" for (a, b), p in rows)


def format_stats(items: list[tuple[str, object]]) -> str:
    return "".join(f"{key}\t{value}\n" for key, value in items)


def _stats_items(config: RunConfig, g: Graph, outcome: Outcome) -> list[tuple[str, object]]:
    items: list[tuple[str, object]] = [
        ("algorithm", config.algorithm),
        ("tau", config.tau),
        ("vertices", g.vertex_count),
        ("edges", g.edge_count),
        ("self_loops_dropped", g.self_loops_dropped),
        ("k_max", outcome.k_max),
    ]
    if config.algorithm == "topr":
        items.append(("r", config.r))
    items += outcome.stats.as_items()
    items.append(("wall_time_seconds", f"{outcome.seconds:.6f}"))
    return items


def _top_slice(phi: dict[int, int], r: int) -> dict[int, int]:
    if not phi:
        return {}
    floor = max(phi.values()) - r
    return {e: p for e, p in phi.items() if p > floor}


def _write(path: str | None, text: str, default: TextIO | None) -> None:
    if path is None or path == "-":
        if default is not None:
            default.write(text)
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def compare(g: Graph, config: RunConfig) -> tuple[bool, str]:
    """Run ``config.algorithm`` and ``config.compare`` and diff their outputs."""
    first = run_algorithm(g, config.algorithm, config.tau, config.r, config.self_check)
    second = run_algorithm(g, config.compare, config.tau, config.r, config.self_check)
    a, b = first.phi, second.phi
    if "topr" in (config.algorithm, config.compare):
        a, b = _top_slice(a, config.r), _top_slice(b, config.r)
    same = a == b
    lines = [("metric", config.algorithm, config.compare)]
    da = dict(first.stats.as_items())
    db = dict(second.stats.as_items())
    for key in sorted(set(da) | set(db), key=lambda s: (s.startswith("per_k"), s)):
        lines.append((key, da.get(key, 0), db.get(key, 0)))
    lines.append(("wall_time_seconds", f"{first.seconds:.6f}", f"{second.seconds:.6f}"))
    lines.append(("phi_equal", same, same))
    report = "".join("\t".join(str(c) for c in row) + "\n" for row in lines)
    return same, report


def run(config: RunConfig, stdout: TextIO | None = None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    config.validate()
    if config.generate is not None:
        try:
            kind, n, m = config.generate.split(":")
            edges = generate(kind, int(n), int(m), config.seed)
        except ValueError as exc:
            raise UsageError(f"--generate {config.generate!r}: {exc}") from None
        _write(config.output, to_edge_list_text(edges), stdout)
        return 0

    with open(config.input, encoding="utf-8") as fh:
        g = load_edge_list(fh)

    if config.compare is not None:
        same, report = compare(g, config)
        _write(config.output, report, stdout)
        if not same:
            print("error: phi values differ", file=sys.stderr)
            return 1
        return 0

    outcome = run_algorithm(g, config.algorithm, config.tau, config.r, config.self_check)
    _write(config.output, format_phi(g, outcome.phi), stdout)
    if config.stats is not None:
        _write(config.stats, format_stats(_stats_items(config, g, outcome)), None)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="hotruss",
        description="Higher-order (k, tau)-truss decomposition of an undirected edge list.",
    )
    p.add_argument("--input", help="edge list: two labels per line, '#' comments")
    p.add_argument("--tau", type=int, default=2, help="hop horizon (default 2)")
    p.add_argument("--algorithm", default="optimized", choices=ALGORITHMS)
    p.add_argument("--r", type=int, default=1, help="number of top levels (topr only)")
    p.add_argument("--output", help="per-edge output path (default stdout)")
    p.add_argument("--stats", help="write key<TAB>value run statistics here")
    p.add_argument("--seed", type=int, default=0, help="generator seed")
    p.add_argument("--self-check", action="store_true", help="verify every unchanged-support skip")
    p.add_argument("--compare", metavar="ALGORITHM", help="also run this algorithm and diff the results")
    p.add_argument("--generate", metavar="KIND:N:M", help=f"write a synthetic edge list; KIND in {', '.join(KINDS)}")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    config = RunConfig(
        input=args.input,
        tau=args.tau,
        algorithm=args.algorithm,
        r=args.r,
        output=args.output,
        stats=args.stats,
        seed=args.seed,
        self_check=args.self_check,
        compare=args.compare,
        generate=args.generate,
    )
    try:
        return run(config)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"hotruss: error: {exc}", file=sys.stderr)
        return 2
    except (OSError, EdgeListParseError) as exc:
        print(f"hotruss: error: {exc}", file=sys.stderr)
        return 1
    except SelfCheckError as exc:
        print(f"hotruss: self-check failed: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
