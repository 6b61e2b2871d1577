"""Per-point verification result shared by every identity module."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .quadrature import Tolerance

STATUSES = ("pass", "fail", "skipped", "experimental")


@dataclass(frozen=True)
class CheckOutcome:
    """Both sides of an identity at one parameter point and the verdict."""

    check_id: str
    params: dict
    lhs: float | complex | None
    rhs: float | complex | None
    abs_residual: float
    rel_residual: float
    status: str
    wall_time_ms: float = 0.0
    message: str = field(default="", compare=False)

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def compare(
    check_id: str,
    params: dict,
    lhs: float | complex,
    rhs: float | complex,
    tol: Tolerance,
    experimental: bool = False,
) -> CheckOutcome:
    """Build an outcome; pass iff ``|lhs - rhs| <= abs_tol + rel_tol |rhs|``."""
    abs_res = abs(lhs - rhs)
    scale = abs(rhs)
    rel_res = abs_res / scale if scale > 0 else (0.0 if abs_res == 0 else math.inf)
    ok = math.isfinite(abs_res) and tol.accepts(abs_res, rhs)
    status = "experimental" if experimental else ("pass" if ok else "fail")
    return CheckOutcome(check_id, dict(params), lhs, rhs, abs_res, rel_res, status)


class SkipCheck(Exception):
    """Raised by an evaluator when a grid point lies outside the identity's hypotheses."""
