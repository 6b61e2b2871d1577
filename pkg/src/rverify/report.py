"""JSON and Markdown renderings of a run report."""

from __future__ import annotations

import json
import math

from .outcome import CheckOutcome
from .registry import GROUPS, Report, get_check

OUTCOME_FIELDS = ("check_id", "params", "lhs", "rhs", "abs_residual", "rel_residual", "status", "wall_time_ms")


def _encode_number(x):
    if x is None:
        return None
    if isinstance(x, complex):
        return {"re": _encode_number(x.real), "im": _encode_number(x.imag)}
    if isinstance(x, float) and not math.isfinite(x):
        return None
    return x


def _decode_number(x, missing=None):
    if x is None:
        return missing
    if isinstance(x, dict):
        return complex(_decode_number(x["re"], math.nan), _decode_number(x["im"], math.nan))
    return x


def outcome_to_dict(o: CheckOutcome) -> dict:
    return {
        "check_id": o.check_id,
        "params": dict(o.params),
        "lhs": _encode_number(o.lhs),
        "rhs": _encode_number(o.rhs),
        "abs_residual": _encode_number(o.abs_residual),
        "rel_residual": _encode_number(o.rel_residual),
        "status": o.status,
        "wall_time_ms": o.wall_time_ms,
    }


def report_to_dict(report: Report) -> dict:
    return {
        "tool_version": report.tool_version,
        "tol_scale": report.tol_scale,
        "summary": report.summary,
        "outcomes": [outcome_to_dict(o) for o in report.outcomes],
    }


def to_json(report: Report) -> str:
    """Serialize with a fixed key order; non-finite residuals become null."""
    return json.dumps(report_to_dict(report), indent=2, allow_nan=False) + "\n"


def from_json(text: str) -> Report:
    data = json.loads(text)
    outcomes = [
        CheckOutcome(
            d["check_id"],
            d["params"],
            _decode_number(d["lhs"]),
            _decode_number(d["rhs"]),
            _decode_number(d["abs_residual"], math.nan),
            _decode_number(d["rel_residual"], math.nan),
            d["status"],
            d["wall_time_ms"],
        )
        for d in data["outcomes"]
    ]
    return Report(outcomes, data["tol_scale"], data["tool_version"])


def _fmt(x) -> str:
    if x is None:
        return "-"
    if isinstance(x, complex):
        return f"{x.real:.12g}{x.imag:+.12g}i"
    if isinstance(x, float):
        return "-" if math.isnan(x) else f"{x:.12g}"
    return str(x)


def _fmt_params(params: dict) -> str:
    if not params:
        return "-"
    return ", ".join(f"{k}={_fmt(v) if isinstance(v, float) else v}" for k, v in params.items())


def _group_key(check_id: str) -> str:
    try:
        return get_check(check_id).group
    except KeyError:
        return "other"


def to_markdown(report: Report) -> str:
    s = report.summary
    lines = [
        f"# Verification report (rverify {report.tool_version})",
        "",
        f"tol_scale = {report.tol_scale:g}; pass {s['pass']}, fail {s['fail']}, "
        f"skipped {s['skipped']}, experimental {s['experimental']}",
    ]
    grouped: dict[str, list[CheckOutcome]] = {}
    for o in report.outcomes:
        grouped.setdefault(_group_key(o.check_id), []).append(o)
    headings = dict(GROUPS, other="Other")
    for key in list(GROUPS) + ["other"]:
        if key not in grouped:
            continue
        lines += [
            "",
            f"## {headings[key]}",
            "",
            "| check | params | lhs | rhs | abs residual | status |",
            "|---|---|---|---|---|---|",
        ]
        for o in grouped[key]:
            status = o.status if not o.message else f"{o.status} ({o.message})"
            lines.append(
                f"| {o.check_id} | {_fmt_params(o.params)} | {_fmt(o.lhs)} | {_fmt(o.rhs)} "
                f"| {_fmt(o.abs_residual) if not math.isnan(o.abs_residual) else '-'} | {status} |"
            )
    return "\n".join(lines) + "\n"
