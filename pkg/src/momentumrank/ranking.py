"""Linear ordering of momentum leaders and whole-system momentousness.

Leaders are mutually incomparable under dominance, so they are ordered by
the normalized weight of the entities they dominate. A whole system is
scored by summing r(m) * w(m) over its leaders, which rewards leaders that
combine high relative gain with a heavy dominated set.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Union

from .core import DeltaSystem, InputError
from .frontier import dominated_set, frontier_sortscan


@dataclass(frozen=True)
class LeaderRanking:
    """Leaders as (id, w, r) rows, heaviest dominated weight first.

    Ties on w break by r descending, then id ascending. Weighting always
    needs base scores, recorded by ``requires_scores``.
    """

    entries: tuple[tuple[str, float, float], ...]
    requires_scores: bool = True

    @property
    def leader_ids(self) -> tuple[str, ...]:
        return tuple(eid for eid, _, _ in self.entries)


@dataclass(frozen=True)
class MomentousnessScore:
    """Sum of r(m) * w(m) over leaders, with the per-leader terms kept."""

    value: float
    terms: tuple[tuple[str, float, float, float], ...]  # (id, r, w, r*w)


@dataclass(frozen=True)
class SystemComparison:
    a: MomentousnessScore
    b: MomentousnessScore
    verdict: str  # "a" | "b" | "equal"


LeaderRows = Iterable[tuple]
SystemOrLeaders = Union[DeltaSystem, LeaderRows]


def normalized_weights(ds: DeltaSystem) -> dict[str, float]:
    """Per-entity share of the total score; shares sum to 1."""
    if not ds.entities:
        raise InputError("weights require a non-empty system")
    if not ds.has_scores:
        raise InputError("weights require scores on every entity")
    if ds.total_score <= 0:
        raise InputError("weights require a positive total score")
    return {e.id: e.score / ds.total_score for e in ds.entities}


def leader_weight(ds: DeltaSystem, leader_id: str) -> float:
    """w(m): summed normalized scores of the entities m dominates."""
    leaders = frontier_sortscan(ds).leader_set
    if leader_id not in leaders:
        raise InputError(f"{leader_id!r} is not a momentum leader")
    weights = normalized_weights(ds)
    return math.fsum(weights[d] for d in dominated_set(ds, leader_id))


def _leader_rows(ds: DeltaSystem) -> list[tuple[str, float, float]]:
    result = frontier_sortscan(ds)
    weights = normalized_weights(ds)
    rows = []
    for leader_id in result.leaders:
        w = math.fsum(weights[d] for d in dominated_set(ds, leader_id))
        rows.append((leader_id, w, ds.by_id(leader_id).r))
    return rows


def rank_leaders(ds: DeltaSystem) -> LeaderRanking:
    rows = _leader_rows(ds)
    rows.sort(key=lambda row: (-row[1], -row[2], row[0]))
    return LeaderRanking(entries=tuple(rows))


def momentousness(source: SystemOrLeaders) -> MomentousnessScore:
    """Score a system, or a pre-computed list of (id, r, w) leader rows.

    Negative-r leaders contribute negative terms, so the value itself can
    be negative.
    """
    if isinstance(source, DeltaSystem):
        terms = tuple(
            (leader_id, r, w, r * w) for leader_id, w, r in _leader_rows(source)
        )
    else:
        terms = tuple(_term_from_row(i, row) for i, row in enumerate(source))
    return MomentousnessScore(
        value=math.fsum(t[3] for t in terms),
        terms=terms,
    )


def _term_from_row(index: int, row: tuple) -> tuple[str, float, float, float]:
    if len(row) == 3:
        leader_id, r, w = row
    elif len(row) == 2:
        r, w = row
        leader_id = str(index + 1)
    else:
        raise InputError(f"leader row must be (id, r, w) or (r, w), got {row!r}")
    r, w = float(r), float(w)
    return str(leader_id), r, w, r * w


def compare_systems(a: SystemOrLeaders, b: SystemOrLeaders) -> SystemComparison:
    """Momentousness of both inputs plus which one is greater."""
    score_a = momentousness(a)
    score_b = momentousness(b)
    if score_a.value > score_b.value:
        verdict = "a"
    elif score_b.value > score_a.value:
        verdict = "b"
    else:
        verdict = "equal"
    return SystemComparison(a=score_a, b=score_b, verdict=verdict)
