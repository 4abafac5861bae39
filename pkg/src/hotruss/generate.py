"""Synthetic graph generators (deterministic for a fixed seed)."""

from __future__ import annotations

import random
from math import isqrt

KINDS = ("uniform-random", "preferential-attachment")


def _unrank_pair(index: int, n: int) -> tuple[int, int]:
    # pairs (u, v), u < v, listed row by row: row u holds n - 1 - u pairs
    # solve for the largest u with offset(u) = u*(2n-u-1)/2 <= index
    b = 2 * n - 1
    u = (b - isqrt(b * b - 8 * index)) // 2
    while u * (b - u) // 2 > index:
        u -= 1
    while (u + 1) * (b - u - 1) // 2 <= index:
        u += 1
    v = index - u * (b - u) // 2 + u + 1
    return u, v


def uniform_random(n: int, m: int, seed: int) -> list[tuple[int, int]]:
    """``m`` distinct vertex pairs drawn uniformly from all ``n*(n-1)/2``."""
    total = n * (n - 1) // 2
    if m > total:
        raise ValueError(f"{m} edges requested but only {total} pairs exist on {n} vertices")
    rng = random.Random(seed)
    return sorted(_unrank_pair(i, n) for i in rng.sample(range(total), m))


def preferential_attachment(n: int, m: int, seed: int) -> list[tuple[int, int]]:
    """Barabasi-Albert style growth topped up to exactly ``m`` edges.

    Each new vertex links to ``m // n`` (at least 1) distinct existing vertices
    chosen proportionally to degree; remaining edges join two degree-weighted
    endpoints.
    """
    total = n * (n - 1) // 2
    if m > total:
        raise ValueError(f"{m} edges requested but only {total} pairs exist on {n} vertices")
    if n >= 2 and m < n - 1:
        raise ValueError("preferential attachment needs m >= n - 1")
    rng = random.Random(seed)
    d = max(1, m // max(n, 1))
    seed_size = min(n, d + 1)
    edges: set[tuple[int, int]] = set()
    urn: list[int] = []
    for a in range(seed_size):
        for b in range(a + 1, seed_size):
            edges.add((a, b))
            urn += (a, b)
    if not urn and seed_size:
        urn.append(0)
    for v in range(seed_size, n):
        targets: set[int] = set()
        while len(targets) < min(d, v):
            targets.add(rng.choice(urn))
        for t in sorted(targets):
            edges.add((t, v))
            urn += (t, v)
    while len(edges) < m:
        a, b = rng.choice(urn), rng.choice(urn)
        if a == b:
            continue
        e = (a, b) if a < b else (b, a)
        if e not in edges:
            edges.add(e)
            urn += e
    return sorted(edges)


def generate(kind: str, n: int, m: int, seed: int) -> list[tuple[int, int]]:
    if n < 0 or m < 0:
        raise ValueError("n and m must be non-negative")
    if kind == "uniform-random":
        return uniform_random(n, m, seed)
    if kind == "preferential-attachment":
        return preferential_attachment(n, m, seed)
    raise ValueError(f"unknown generator {kind!r}; choose from {', '.join(KINDS)}")


def to_edge_list_text(edges: list[tuple[int, int]]) -> str:
    return "".join(f"{a} {b}\n" for a, b in edges)
