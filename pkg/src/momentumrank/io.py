"""File input and report output.

Readers accept the conventions of published gain tables: relative gains as
either fractions or percent strings, thousands separators inside quoted
fields, and scientific notation. Writers are deterministic: identical
results serialize to byte-identical documents.
"""
from __future__ import annotations

import csv
import io
import json
from pathlib import Path
from typing import Iterable

from .core import DeltaSystem, InputError, Snapshot, build_delta_system
from .frontier import BoundCheck, FrontierResult, dominated_set, interval
from .ranking import LeaderRanking, MomentousnessScore, SystemComparison, normalized_weights
from .simulation import StudyResult

FORMATS = ("json", "csv", "markdown")


def _number(text: str, *, line: int, column: str, percent: bool = False) -> float:
    """Parse one numeric field; percent strings are allowed only where flagged."""
    raw = text.strip()
    body, divisor = raw, 1.0
    if percent and raw.endswith("%"):
        # divide by the exactly-representable 100 so "x%" == x/100 bit-for-bit
        body, divisor = raw[:-1], 100.0
    try:
        return float(body.replace(",", "")) / divisor
    except ValueError:
        raise InputError(f"line {line}, column {column}: cannot parse number {raw!r}") from None


def parse_snapshot(path) -> Snapshot:
    """Read a snapshot from CSV (header ``id,score``) or JSON."""
    text = Path(path).read_text(encoding="utf-8")
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return _snapshot_from_json(stripped, path)
    return _snapshot_from_csv(text, path)


def _snapshot_from_json(text: str, path) -> Snapshot:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON: {exc}") from None
    scores = data.get("scores")
    if not isinstance(scores, dict) or not scores:
        raise InputError(f"{path}: no entities")
    out = {}
    for eid, value in scores.items():
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            raise InputError(f"{path}: score for {eid!r} is not a number")
        out[str(eid)] = float(value)
    return Snapshot(timestamp=str(data.get("timestamp", "")), scores=out)


def _snapshot_from_csv(text: str, path) -> Snapshot:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows:
        raise InputError(f"{path}: no entities")
    header = [h.strip().lower() for h in rows[0]]
    if header != ["id", "score"]:
        raise InputError(f"{path}: expected header id,score, got {rows[0]!r}")
    scores: dict[str, float] = {}
    for line_no, row in enumerate(rows[1:], start=2):
        if not row or (len(row) == 1 and not row[0].strip()):
            continue
        if len(row) != 2:
            raise InputError(f"line {line_no}: expected 2 fields, got {len(row)}")
        eid = row[0].strip()
        if not eid:
            raise InputError(f"line {line_no}: empty entity id")
        if eid in scores:
            raise InputError(f"line {line_no}: duplicate entity id {eid!r}")
        value = _number(row[1], line=line_no, column="score")
        if value < 0:
            raise InputError(f"line {line_no}: negative score for {eid!r}")
        scores[eid] = value
    if not scores:
        raise InputError(f"{path}: no entities")
    return Snapshot(timestamp="", scores=scores)


def parse_gains_table(path, window: str = "") -> DeltaSystem:
    """Read a pre-diffed gains table: columns ``id[,score],g,r``, extras ignored.

    Row order defines rank when the score column is absent.
    """
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        fields = [f.strip().lower() for f in reader.fieldnames or []]
        missing = {"id", "g", "r"} - set(fields)
        if missing:
            raise InputError(f"{path}: expected columns id[,score],g,r (missing {sorted(missing)})")
        has_score = "score" in fields
        records = []
        for row in reader:
            row = {(k or "").strip().lower(): (v or "") for k, v in row.items()}
            line_no = reader.line_num
            eid = row["id"].strip()
            if not eid:
                raise InputError(f"line {line_no}: empty entity id")
            g = _number(row["g"], line=line_no, column="g")
            r = _number(row["r"], line=line_no, column="r", percent=True)
            score = None
            if has_score and row["score"].strip():
                score = _number(row["score"], line=line_no, column="score")
            records.append((eid, score, g, r))
    return build_delta_system(records, window)


def parse_leaders_table(path) -> tuple[tuple[str, float, float], ...]:
    """Read pre-computed leader rows: columns ``[id,]r,w``; returns (id, r, w)."""
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        fields = [f.strip().lower() for f in reader.fieldnames or []]
        missing = {"r", "w"} - set(fields)
        if missing:
            raise InputError(f"{path}: expected columns [id,]r,w (missing {sorted(missing)})")
        rows = []
        for index, row in enumerate(reader):
            row = {(k or "").strip().lower(): (v or "") for k, v in row.items()}
            line_no = reader.line_num
            leader_id = row.get("id", "").strip() or str(index + 1)
            rows.append(
                (
                    leader_id,
                    _number(row["r"], line=line_no, column="r", percent=True),
                    _number(row["w"], line=line_no, column="w", percent=True),
                )
            )
    if not rows:
        raise InputError(f"{path}: no leader rows")
    return tuple(rows)


# --- report writing ---------------------------------------------------------


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return str(int(value)) if value.is_integer() and abs(value) < 1e16 else repr(value)
    return str(value)


def _fmt_human(value) -> str:
    # markdown is for people: trim float noise, keep csv/json at full precision
    if isinstance(value, float) and not value.is_integer():
        return f"{value:.6g}"
    return _fmt(value)


def _json_document(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2)


def _csv_document(header: list[str], rows: Iterable[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fmt(cell) for cell in row])
    return buf.getvalue().rstrip("\n")


def _markdown_table(header: list[str], rows: Iterable[list]) -> str:
    def cell(value) -> str:
        return _fmt_human(value).replace("|", "\\|")

    lines = [
        "| " + " | ".join(cell(h) for h in header) + " |",
        "| " + " | ".join("---" for _ in header) + " |",
    ]
    for row in rows:
        lines.append("| " + " | ".join(cell(c) for c in row) + " |")
    return "\n".join(lines)


def _frontier_rows(result: FrontierResult) -> list[list]:
    ds = result.system
    weights = normalized_weights(ds) if ds.has_scores and ds.total_score > 0 else None
    rows = []
    for leader_id in result.leaders:
        e = ds.by_id(leader_id)
        dom = dominated_set(ds, leader_id)
        w = None
        if weights is not None:
            w = sum(weights[d] for d in dom)
        lo, hi = interval(ds, leader_id)
        rows.append([e.id, e.rank, e.g, e.r, w, f"{lo}..{hi}", len(dom)])
    return rows


def _frontier_report(result: FrontierResult, fmt: str, layers) -> str:
    header = ["id", "rank", "g", "r", "w", "interval", "|D(m)|"]
    rows = _frontier_rows(result)
    if fmt == "json":
        payload = {
            "algorithm": result.algorithm,
            "window": result.system.window,
            "n": result.system.n,
            "leaders": [dict(zip(["id", "rank", "g", "r", "w", "interval", "dominated"], row)) for row in rows],
        }
        if layers is not None:
            payload["layers"] = [list(layer) for layer in layers]
        return _json_document(payload)
    if fmt == "csv":
        if layers is None:
            return _csv_document(header, rows)
        flat = [[1, *row] for row in rows]
        for depth, layer in enumerate(layers[1:], start=2):
            for leader_id in layer:
                e = result.system.by_id(leader_id)
                flat.append([depth, e.id, e.rank, e.g, e.r, None, None, None])
        return _csv_document(["layer", *header], flat)
    doc = _markdown_table(header, rows)
    if layers is not None and len(layers) > 1:
        extra = []
        for depth, layer in enumerate(layers[1:], start=2):
            names = ", ".join(layer)
            extra.append(f"Layer {depth}: {names}")
        doc += "\n\n" + "\n".join(extra)
    return doc


def _ranking_report(ranking: LeaderRanking, fmt: str) -> str:
    header = ["id", "w", "r"]
    rows = [[eid, w, r] for eid, w, r in ranking.entries]
    if fmt == "json":
        return _json_document({"leaders": [dict(zip(header, row)) for row in rows]})
    if fmt == "csv":
        return _csv_document(header, rows)
    return _markdown_table(header, rows)


def _momentousness_report(score: MomentousnessScore, fmt: str) -> str:
    header = ["id", "r", "w", "r*w"]
    if fmt == "json":
        return _json_document(
            {
                "value": score.value,
                "terms": [dict(zip(header, term)) for term in score.terms],
            }
        )
    if fmt == "csv":
        rows = [list(term) for term in score.terms]
        rows.append(["TOTAL", None, None, score.value])
        return _csv_document(header, rows)
    table = _markdown_table(header, [list(t) for t in score.terms])
    return f"{table}\n\nmomentousness: {_fmt_human(score.value)}"


def _comparison_report(comparison: SystemComparison, fmt: str) -> str:
    if fmt == "json":
        return _json_document(
            {
                "a": comparison.a.value,
                "b": comparison.b.value,
                "verdict": comparison.verdict,
            }
        )
    if fmt == "csv":
        return _csv_document(
            ["system", "momentousness"],
            [["a", comparison.a.value], ["b", comparison.b.value], ["verdict", comparison.verdict]],
        )
    a, b = comparison.a.value, comparison.b.value
    if comparison.verdict == "equal":
        line = f"equally momentous ({_fmt_human(a)} = {_fmt_human(b)})"
    elif comparison.verdict == "a":
        line = f"A more momentous ({_fmt_human(a)} > {_fmt_human(b)})"
    else:
        line = f"B more momentous ({_fmt_human(b)} > {_fmt_human(a)})"
    return f"momentousness A: {_fmt(a)}\nmomentousness B: {_fmt(b)}\n{line}"


def _study_report(result: StudyResult, fmt: str) -> str:
    cfg = result.config
    if fmt == "csv":
        return _csv_document(["trial", "size"], [[i, s] for i, s in enumerate(result.sizes)])
    percentiles = {_fmt(float(p)): v for p, v in result.percentile_values.items()}
    fitted = {_fmt(float(p)): c for p, c in result.fitted_c.items()}
    bounds = {"1/3": result.bound_values[1 / 3], "1/2": result.bound_values[1 / 2]}
    if fmt == "json":
        return _json_document(
            {
                "config": {
                    "n": cfg.n,
                    "trials": cfg.trials,
                    "seed": cfg.seed,
                    "alpha": cfg.alpha,
                    "x_min": cfg.x_min,
                    "x_max": cfg.resolved_x_max,
                    "percentiles": list(cfg.percentiles),
                    "coupling": cfg.coupling,
                },
                "percentiles": percentiles,
                "bounds": bounds,
                "fitted_c": fitted,
            }
        )
    rows = [[p, v, fitted[p]] for p, v in percentiles.items()]
    table = _markdown_table(["percentile", "size", "fitted c"], rows)
    bound_line = ", ".join(f"c={k}: {_fmt_human(v)}" for k, v in bounds.items())
    return (
        f"n={cfg.n} trials={cfg.trials} seed={cfg.seed} coupling={cfg.coupling}\n\n"
        f"{table}\n\nbound c*(log10(n)+1)^2 -> {bound_line}"
    )


def _bound_report(check: BoundCheck, fmt: str) -> str:
    if fmt == "json":
        return _json_document(
            {
                "frontier_size": check.frontier_size,
                "moving_maxima_count": check.moving_maxima_count,
                "holds": check.holds,
            }
        )
    if fmt == "csv":
        return _csv_document(
            ["frontier_size", "moving_maxima_count", "holds"],
            [[check.frontier_size, check.moving_maxima_count, check.holds]],
        )
    return (
        f"frontier size: {check.frontier_size}\n"
        f"moving maxima: {check.moving_maxima_count}\n"
        f"bound holds: {str(check.holds).lower()}"
    )


def _system_report(ds: DeltaSystem, fmt: str) -> str:
    include_score = any(e.score is not None for e in ds.entities)
    if fmt == "json":
        return _json_document(
            {
                "window": ds.window,
                "total_score": ds.total_score,
                "has_scores": ds.has_scores,
                "entities": [
                    {"id": e.id, "rank": e.rank, "score": e.score, "g": e.g, "r": e.r}
                    for e in ds.entities
                ],
            }
        )
    header = ["id", "score", "g", "r"] if include_score else ["id", "g", "r"]
    rows = [
        [e.id, e.score, e.g, e.r] if include_score else [e.id, e.g, e.r]
        for e in ds.entities
    ]
    if fmt == "csv":
        return _csv_document(header, rows)
    return _markdown_table(header, rows)


def write_report(result, fmt: str = "markdown", *, layers=None) -> str:
    """Serialize any result deterministically in json, csv, or markdown."""
    if fmt not in FORMATS:
        raise InputError(f"format must be one of {FORMATS}, got {fmt!r}")
    if isinstance(result, FrontierResult):
        return _frontier_report(result, fmt, layers)
    if isinstance(result, LeaderRanking):
        return _ranking_report(result, fmt)
    if isinstance(result, MomentousnessScore):
        return _momentousness_report(result, fmt)
    if isinstance(result, SystemComparison):
        return _comparison_report(result, fmt)
    if isinstance(result, StudyResult):
        return _study_report(result, fmt)
    if isinstance(result, BoundCheck):
        return _bound_report(result, fmt)
    if isinstance(result, DeltaSystem):
        return _system_report(result, fmt)
    raise InputError(f"no report writer for {type(result).__name__}")
