"""Momentum leaders: Pareto-frontier computations over a gain system.

Two interchangeable algorithms are provided. ``frontier_bruteforce`` is the
quadratic all-pairs reference; ``frontier_sortscan`` sorts by absolute gain
and sweeps a running maximum of relative gain, which finds the identical
leader set in O(n log n). The sweep doubles as the proof device for the
moving-maxima bound checked by ``verify_bound``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .core import DeltaSystem, InputError, dominates, system_from_entities


@dataclass(frozen=True)
class FrontierResult:
    """Leader set of one system, reported in rank order."""

    system: DeltaSystem
    leaders: tuple[str, ...]
    algorithm: str

    @property
    def leader_set(self) -> frozenset[str]:
        return frozenset(self.leaders)

    def dominated(self, leader_id: str) -> frozenset[str]:
        """D(m): ids strictly below ``leader_id`` in both coordinates."""
        return dominated_set(self.system, leader_id)

    def interval(self, leader_id: str) -> tuple[int, int]:
        return interval(self.system, leader_id)


@dataclass(frozen=True)
class MovingMaxima:
    """1-based positions where a sequence attains a new strict maximum."""

    indices: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.indices)


class BoundCheck(NamedTuple):
    frontier_size: int
    moving_maxima_count: int
    holds: bool


def leader_mask(g: np.ndarray, r: np.ndarray) -> np.ndarray:
    """Boolean mask of maximal elements for paired gain arrays.

    Entities tied on g are grouped: each group member is compared against the
    running maximum of r accumulated over strictly greater g only, so ties
    never create dominance. An entity is a leader iff that running maximum
    does not strictly exceed its own r.
    """
    n = len(g)
    if n == 0:
        return np.zeros(0, dtype=bool)
    order = np.lexsort((np.arange(n), -g))
    gs = g[order]
    rs = r[order]
    new_group = np.empty(n, dtype=bool)
    new_group[0] = True
    new_group[1:] = gs[1:] != gs[:-1]
    group_id = np.cumsum(new_group) - 1
    starts = np.flatnonzero(new_group)
    # max of rs strictly before each group start == max r over strictly greater g
    max_before = np.concatenate(([-np.inf], np.maximum.accumulate(rs)))[starts]
    sorted_mask = rs >= max_before[group_id]
    mask = np.empty(n, dtype=bool)
    mask[order] = sorted_mask
    return mask


def _require_entities(ds: DeltaSystem) -> None:
    if not ds.entities:
        raise InputError("frontier operations require a non-empty system")


def frontier_bruteforce(ds: DeltaSystem) -> FrontierResult:
    """All-pairs reference: an entity leads iff nothing dominates it."""
    _require_entities(ds)
    ents = ds.entities
    leaders = tuple(e.id for e in ents if not any(dominates(e, f) for f in ents))
    return FrontierResult(system=ds, leaders=leaders, algorithm="bruteforce")


def frontier_sortscan(ds: DeltaSystem) -> FrontierResult:
    _require_entities(ds)
    g = np.fromiter((e.g for e in ds.entities), dtype=float, count=ds.n)
    r = np.fromiter((e.r for e in ds.entities), dtype=float, count=ds.n)
    mask = leader_mask(g, r)
    leaders = tuple(e.id for e, keep in zip(ds.entities, mask) if keep)
    return FrontierResult(system=ds, leaders=leaders, algorithm="sortscan")


def dominated_set(ds: DeltaSystem, entity_id: str) -> frozenset[str]:
    """All ids strictly below ``entity_id`` in both g and r.

    Dominated sets of different leaders may overlap; the entity itself is
    never a member.
    """
    m = ds.by_id(entity_id)
    return frozenset(e.id for e in ds.entities if dominates(e, m))


def interval(ds: DeltaSystem, entity_id: str) -> tuple[int, int]:
    """Maximal contiguous rank range around the entity lying in its D(m).

    Returns the inclusive pair (L, R) with L <= rank(m) <= R such that every
    other entity ranked in [L, R] is dominated by m; grown greedily outward
    from m, which yields the maximal such range since membership of each
    neighbour is independent of the current range.
    """
    m = ds.by_id(entity_id)
    dom = dominated_set(ds, entity_id)
    lo = hi = m.rank
    while hi < ds.n and ds.by_rank(hi + 1).id in dom:
        hi += 1
    while lo > 1 and ds.by_rank(lo - 1).id in dom:
        lo -= 1
    return lo, hi


def moving_maxima(values: Sequence[float]) -> MovingMaxima:
    """Positions (1-based) holding a value strictly larger than all earlier ones."""
    indices: list[int] = []
    best = -math.inf
    for pos, value in enumerate(values, start=1):
        if value > best:
            indices.append(pos)
            best = value
    return MovingMaxima(indices=tuple(indices))


def verify_bound(ds: DeltaSystem) -> BoundCheck:
    """Compare frontier size against the moving-maxima count of r.

    The r sequence is taken in descending-g order (rank breaks g ties).
    With strictly distinct g the frontier can never outgrow the count, and
    with distinct r as well the two are equal; with tied g the comparison is
    still computed but may legitimately fail.
    """
    if not ds.entities:
        return BoundCheck(0, 0, True)
    by_gain = sorted(ds.entities, key=lambda e: (-e.g, e.rank))
    count = moving_maxima([e.r for e in by_gain]).count
    size = len(frontier_sortscan(ds).leaders)
    return BoundCheck(size, count, size <= count)


def runners_up(ds: DeltaSystem, layers: int) -> list[tuple[str, ...]]:
    """Peel successive frontiers: layer k leads the system with layers 1..k-1 removed."""
    if layers < 1:
        raise InputError(f"layers must be >= 1, got {layers}")
    _require_entities(ds)
    remaining = list(ds.entities)
    peeled: list[tuple[str, ...]] = []
    for _ in range(layers):
        if not remaining:
            break
        result = frontier_sortscan(system_from_entities(remaining, ds.window))
        peeled.append(result.leaders)
        remaining = [e for e in remaining if e.id not in result.leader_set]
    return peeled
