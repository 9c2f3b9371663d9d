"""Shared test helpers: naive reference implementations and random generators.

The naive_* functions are written straight from the dominance definition with
plain loops so they stay independent of the package code they check.
"""
from __future__ import annotations

import numpy as np


def naive_leader_indices(pairs) -> list[int]:
    """Indices of maximal elements: nothing strictly exceeds them in both coords."""
    return [
        i
        for i, (g, r) in enumerate(pairs)
        if not any(g2 > g and r2 > r for g2, r2 in pairs)
    ]


def naive_dominated_indices(pairs, i) -> set[int]:
    g, r = pairs[i]
    return {j for j, (g2, r2) in enumerate(pairs) if g2 < g and r2 < r}


def naive_max_window(n, pos, dominated_positions) -> tuple[int, int]:
    """Widest 1-based [L, R] containing pos whose other members are all dominated."""
    best = (pos, pos)
    for lo in range(1, pos + 1):
        for hi in range(pos, n + 1):
            members = range(lo, hi + 1)
            if all(k == pos or k in dominated_positions for k in members):
                if hi - lo > best[1] - best[0]:
                    best = (lo, hi)
    return best


def random_pairs(rng: np.random.Generator, n: int, style: str) -> tuple[np.ndarray, np.ndarray]:
    """Gain pairs in several regimes: continuous, tied grids, duplicates, negatives."""
    if style == "grid":
        g = rng.integers(-3, 4, size=n).astype(float)
        r = rng.integers(-3, 4, size=n).astype(float)
    elif style == "negative":
        g = rng.normal(0.0, 1e6, size=n)
        r = rng.normal(0.0, 2.0, size=n)
    elif style == "mixed":
        g = rng.random(n) * 1e6
        r = rng.random(n) * 10.0 - 2.0
        if n >= 4:
            g[1], r[1] = g[0], r[0]  # exact duplicate point
            g[3] = g[2]  # g tie with differing r
    else:
        g = rng.random(n) * 1e9
        r = rng.random(n) * 100.0
    return g, r


def records_from_pairs(g, r, scores=None) -> list[tuple]:
    if scores is None:
        return [(f"e{i:04d}", float(g[i]), float(r[i])) for i in range(len(g))]
    return [(f"e{i:04d}", float(scores[i]), float(g[i]), float(r[i])) for i in range(len(g))]
