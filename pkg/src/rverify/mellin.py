"""Mellin-type evaluations: the Master Theorem, Frullani integrals and
their generalized limit form, and the q-analogue of the beta integral.

Only curated coefficient functions with known good growth are used; the
growth hypotheses of the Master Theorem are not checked here.
"""

from __future__ import annotations

import math
from typing import Callable, Sequence

from .outcome import CheckOutcome, compare
from .qseries import qpochhammer_inf
from .quadrature import (
    QuadratureError,
    QuadResult,
    Tolerance,
    differentiate,
    integrate_line,
    integrate_semi_infinite,
    integrate_singular,
)
from .specfun import gamma, sinpi

_QUAD_TOL = Tolerance(abs_tol=1e-14, rel_tol=1e-12)

FRULLANI_LADDER = (0.2, 0.1, 0.05, 0.025, 0.0125, 0.00625)
FRULLANI_LADDER_ALT = (0.16, 0.08, 0.04, 0.02, 0.01, 0.005)


def master_value(phi: Callable[[float], float], n: float) -> float:
    """Gamma(n) phi(-n), the Mellin transform predicted by the Master Theorem."""
    return gamma(n) * phi(-n)


def mellin_transform(F: Callable[[float], float], n: float, tol: Tolerance = _QUAD_TOL) -> QuadResult:
    """int_0^inf x^(n-1) F(x) dx, split at x = 1.

    The piece on (0, 1] is mapped by x = exp(-u) onto a smooth integrand
    decaying like exp(-n u), which avoids the endpoint singularity.
    """

    def integrand(x: float) -> float:
        return x ** (n - 1.0) * F(x)

    def head_integrand(u: float) -> float:
        return math.exp(-n * u) * F(math.exp(-u))

    head = integrate_semi_infinite(head_integrand, 0.0, tol)
    tail = integrate_semi_infinite(integrand, 1.0, tol)
    return head + tail


def master_check(
    F: Callable[[float], float],
    phi: Callable[[float], float],
    n: float,
    tol: Tolerance,
    check_id: str = "master-theorem",
    params: dict | None = None,
) -> CheckOutcome:
    lhs = mellin_transform(F, n).real
    rhs = master_value(phi, n)
    return compare(check_id, params if params is not None else {"n": n}, lhs, rhs, tol)


def _q_beta_integrand(s: float, a: float, q: float) -> Callable[[float], float]:
    # integrand in u = log t: t^s (-a t q; q)_inf / (-t; q)_inf, as ratio factors
    def f(u: float) -> float:
        t = math.exp(u)
        log_val = s * u
        x = t
        while x > 1e-18:
            log_val += math.log1p(a * x * q) - math.log1p(x)
            x *= q
        return math.exp(log_val)

    return f


def q_beta_lhs(s: float, a: float, q: float, tol: Tolerance = _QUAD_TOL) -> QuadResult:
    """int_0^inf t^(s-1) (-a t q; q)_inf / (-t; q)_inf dt."""
    _check_q_beta(s, a, q)
    return integrate_line(_q_beta_integrand(s, a, q), tol)


def q_beta_rhs(s: float, a: float, q: float) -> float:
    """pi/sin(pi s) (q^(1-s); q)_inf (a q; q)_inf / ((q; q)_inf (a q^(1-s); q)_inf)."""
    _check_q_beta(s, a, q)
    num = qpochhammer_inf(q ** (1.0 - s), q) * qpochhammer_inf(a * q, q)
    den = qpochhammer_inf(q, q) * qpochhammer_inf(a * q ** (1.0 - s), q)
    return math.pi / sinpi(s) * num / den


def _check_q_beta(s: float, a: float, q: float) -> None:
    if not 0.0 < s < 1.0:
        raise ValueError("q-beta needs 0 < s < 1")
    if not 0.0 < q <= 0.5:
        raise ValueError("q-beta needs 0 < q <= 0.5")
    if not 0.0 <= a < 1.0:
        raise ValueError("q-beta needs 0 <= a < 1")


def q_beta_check(s: float, a: float, q: float, tol: Tolerance, check_id: str = "q-beta") -> CheckOutcome:
    lhs = q_beta_lhs(s, a, q).real
    rhs = q_beta_rhs(s, a, q)
    return compare(check_id, {"s": s, "a": a, "q": q}, lhs, rhs, tol)


def frullani(f0: float, finf: float, a: float, b: float) -> float:
    """Frullani value (f(0) - f(inf)) log(b/a)."""
    if a <= 0 or b <= 0:
        raise ValueError("a and b must be positive")
    return (f0 - finf) * math.log(b / a)


def frullani_integral(f: Callable[[float], float], a: float, b: float, tol: Tolerance = _QUAD_TOL) -> QuadResult:
    """int_0^inf (f(a x) - f(b x)) / x dx by quadrature."""

    def integrand(x: float) -> float:
        return (f(a * x) - f(b * x)) / x

    head = integrate_singular(integrand, 0.0, 1.0, tol)
    tail = integrate_semi_infinite(integrand, 1.0, tol)
    return head + tail


def extrapolate_to_zero(xs: Sequence[float], ys: Sequence[float]) -> tuple[float, float]:
    """Neville polynomial extrapolation to x = 0.

    Returns the full-order value and the change from the next-lower order
    as an error indicator.
    """
    p = list(ys)
    k = len(xs)
    lower = p[-1]
    for level in range(1, k):
        for i in range(k - level):
            xi, xj = xs[i], xs[i + level]
            p[i] = (xj * p[i] - xi * p[i + 1]) / (xj - xi)
        if level == k - 2:
            lower = p[0]
    return p[0], abs(p[0] - lower)


def generalized_frullani_lhs(
    f: Callable[[float], float],
    g: Callable[[float], float],
    a: float,
    b: float,
    ladder: Sequence[float] = FRULLANI_LADDER,
) -> tuple[float, float]:
    """lim_{n->0+} int_0^inf x^(n-1) (f(a x) - g(b x)) dx by Richardson
    extrapolation of the integral sampled on ``ladder``."""
    values = []
    for n in ladder:
        res = mellin_transform(lambda x: f(a * x) - g(b * x), n)
        if not res.converged:
            raise QuadratureError(f"Mellin integral not converged at n={n}")
        values.append(res.real)
    return extrapolate_to_zero(ladder, values)


def dlog_ratio(log_ratio: Callable[[float], float]) -> float:
    """d/ds log(v(s)/u(s)) at s = 0 from a callable returning the log ratio."""
    value, _ = differentiate(log_ratio, 0.0, h0=0.1)
    return value


def generalized_frullani_check(
    f: Callable[[float], float],
    g: Callable[[float], float],
    f0: float,
    finf: float,
    a: float,
    b: float,
    dlog_ratio_at_0: float,
    tol: Tolerance,
    check_id: str = "frullani-generalized",
    params: dict | None = None,
    ladder: Sequence[float] = FRULLANI_LADDER,
) -> CheckOutcome:
    """Compare the extrapolated limit with (f(0) - f(inf)) (log(b/a) + dlog_ratio_at_0)."""
    for h, name in ((f, "f"), (g, "g")):
        if abs(h(0.0) - f0) > 1e-12 * max(1.0, abs(f0)):
            raise ValueError(f"{name}(0) does not match f0")
    far = 1e12
    if abs(f(far) - g(far)) > 1e-6:
        raise ValueError("f and g must share their limit at infinity")
    lhs, _ = generalized_frullani_lhs(f, g, a, b, ladder)
    rhs = (f0 - finf) * (math.log(b / a) + dlog_ratio_at_0)
    base = {"a": a, "b": b}
    return compare(check_id, params if params is not None else base, lhs, rhs, tol)
