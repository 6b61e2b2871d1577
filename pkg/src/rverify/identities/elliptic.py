"""Incomplete elliptic integral identities: an addition theorem, two
transformations, a double integral, and inversion formulas for the
quartic and lemniscate integrals.

Moduli are always passed as the parameter m = k^2.
"""

from __future__ import annotations

import math

from ..quadrature import (
    Tolerance,
    find_root,
    integrate_finite,
    integrate_singular,
    sum_series,
)
from ..specfun import elliptic_f_incomplete, elliptic_k, gamma_ratio, ln_gamma_real

_TOL = Tolerance(abs_tol=1e-15, rel_tol=1e-13)
_INNER_TOL = Tolerance(abs_tol=1e-15, rel_tol=1e-13)
_OUTER_TOL = Tolerance(abs_tol=1e-14, rel_tol=1e-12)
HALF_PI = 0.5 * math.pi


class InfeasibleCondition(ValueError):
    """The defining condition has no solution at the requested parameters."""


# ---------------------------------------------------------------------------
# addition theorem


def addition_condition(alpha: float, beta: float, x: float, variant: str):
    """g(gamma) whose root is the gamma satisfying

        cot a cot b = cos g / (sin a sin b) + sqrt(1 - r sin^2 g)

    with r = x (``variant="x"``) or r = x^2 (``variant="x2"``).
    """
    if variant not in ("x", "x2"):
        raise ValueError("variant must be 'x' or 'x2'")
    r = x if variant == "x" else x * x
    sa, sb = math.sin(alpha), math.sin(beta)
    target = math.cos(alpha) * math.cos(beta) / (sa * sb)

    def g(gam: float) -> float:
        s = math.sin(gam)
        return math.cos(gam) / (sa * sb) + math.sqrt(1.0 - r * s * s) - target

    return g


def solve_addition_gamma(alpha: float, beta: float, x: float, variant: str) -> float:
    """Root gamma in (0, pi) of the addition condition, by bracketing scan."""
    if not (0 < alpha < HALF_PI and 0 < beta < HALF_PI):
        raise ValueError("alpha and beta must lie in (0, pi/2)")
    if not 0 < x < 1:
        raise ValueError("x must lie in (0, 1)")
    g = addition_condition(alpha, beta, x, variant)
    n = 400
    grid = [math.pi * k / n for k in range(n + 1)]
    prev = g(grid[0])
    for lo, hi in zip(grid, grid[1:]):
        cur = g(hi)
        if prev == 0.0:
            return lo
        if prev * cur < 0:
            return find_root(g, lo, hi)
        prev = cur
    raise InfeasibleCondition("condition infeasible at these parameters")


def addition_sides(alpha: float, beta: float, x: float, variant: str) -> tuple[float, float, float]:
    """(u + v, w, gamma) for the addition theorem with modulus x."""
    gam = solve_addition_gamma(alpha, beta, x, variant)
    m = x * x
    u = elliptic_f_incomplete(alpha, m)
    v = elliptic_f_incomplete(beta, m)
    w = elliptic_f_incomplete(gam, m)
    return u + v, w, gam


def addition_check(alpha: float, beta: float, x: float, variant: str) -> float:
    """u + v - w for the chosen reading of the radical."""
    uv, w, _ = addition_sides(alpha, beta, x, variant)
    return uv - w


# ---------------------------------------------------------------------------
# single entries


def _check_unit(x: float) -> None:
    if not abs(x) < 1:
        raise ValueError("|x| < 1 required")


def entry_arccos_sides(x: float) -> tuple[float, float]:
    """(pi/2) int dphi / sqrt(1 + x sin phi)  vs  int arccos(x sin^2 phi) / sqrt(1 - x^2 sin^4 phi) dphi."""
    _check_unit(x)
    lhs = integrate_finite(lambda p: 1.0 / math.sqrt(1.0 + x * math.sin(p)), 0.0, HALF_PI, _TOL).real

    def rhs_f(p: float) -> float:
        s2 = math.sin(p) ** 2
        return math.acos(x * s2) / math.sqrt(1.0 - x * x * s2 * s2)

    rhs = integrate_finite(rhs_f, 0.0, HALF_PI, _TOL).real
    return HALF_PI * lhs, rhs


def entry_arccos_residual(x: float) -> float:
    lhs, rhs = entry_arccos_sides(x)
    return lhs - rhs


def entry_double_integral_lhs(x: float) -> float:
    """Iterated integral: inner over theta, outer over phi."""
    _check_unit(x)
    x2 = x * x

    def outer(p: float) -> float:
        s2 = math.sin(p) ** 2
        inner = integrate_finite(
            lambda th: 1.0 / math.sqrt(1.0 - x2 * math.sin(th) ** 2 * s2), 0.0, HALF_PI, _INNER_TOL
        ).real
        return x * math.sin(p) / math.sqrt(1.0 - x2 * s2) * inner

    return integrate_finite(outer, 0.0, HALF_PI, _OUTER_TOL).real


def entry_double_integral_rhs(x: float) -> float:
    """(K((1+x)/2)^2 - K((1-x)/2)^2) / 2."""
    _check_unit(x)
    return 0.5 * (elliptic_k(0.5 * (1 + x)) ** 2 - elliptic_k(0.5 * (1 - x)) ** 2)


def entry_double_integral_residual(x: float) -> float:
    return entry_double_integral_lhs(x) - entry_double_integral_rhs(x)


def page172_beta(x: float, alpha: float) -> float:
    """beta from (1+sin b)/(1-sin b) = (1+sin a)/(1-sin a) ((1+x sin a)/(1-x sin a))^2."""
    sa = math.sin(alpha)
    ratio = (1 + sa) / (1 - sa) * ((1 + x * sa) / (1 - x * sa)) ** 2
    if ratio <= 0:
        raise ValueError("ratio must be positive")
    return math.asin((ratio - 1) / (ratio + 1))


def entry_page172_sides(x: float, alpha: float) -> tuple[float, float]:
    if not 0 < x < 1:
        raise ValueError("x must lie in (0, 1)")
    if not 0 <= alpha < HALF_PI:
        raise ValueError("alpha must lie in [0, pi/2)")
    beta = page172_beta(x, alpha)
    k = (2 + x) / (1 + 2 * x)
    lhs = (1 + 2 * x) * elliptic_f_incomplete(alpha, x**3 * k)
    rhs = elliptic_f_incomplete(beta, x * k**3)
    return lhs, rhs


def entry_page172_residual(x: float, alpha: float) -> float:
    lhs, rhs = entry_page172_sides(x, alpha)
    return lhs - rhs


# ---------------------------------------------------------------------------
# quartic and lemniscate integrals


def _check_v(v: float) -> None:
    if not 0 <= v <= 1:
        raise ValueError("v must lie in [0, 1]")


def quartic_G(v: float) -> float:
    """G(v) = int_0^v dt / sqrt(1 + t^4)."""
    _check_v(v)
    return integrate_finite(lambda t: 1.0 / math.sqrt(1.0 + t**4), 0.0, v, _TOL).real


def quartic_mu() -> float:
    return 4.0 * quartic_G(1.0) / math.pi


def quartic_theta(v: float) -> float:
    return 2.0 * quartic_G(v) / quartic_mu()


def quartic_inversion_sides(v: float) -> tuple[float, float]:
    """2 arctan v  vs  theta + sum sin(2 n theta) / (n cosh(n pi))."""
    theta = quartic_theta(v)
    series = sum_series(lambda n: math.sin(2 * n * theta) / (n * math.cosh(n * math.pi)), _TOL)
    return 2.0 * math.atan(v), theta + series.real


def quartic_inversion_residual(v: float) -> float:
    lhs, rhs = quartic_inversion_sides(v)
    return lhs - rhs


def lemniscate_F(v: float) -> float:
    """F(v) = int_0^v dt / sqrt(1 - t^4), by quadrature.

    With t^2 = sin(theta) this becomes int_0^{asin v^2} dtheta / (2 sqrt(sin theta)),
    moving the endpoint singularity at t = 1 to the origin where the
    double-exponential nodes are exact.
    """
    _check_v(v)
    if v == 0:
        return 0.0
    upper = math.asin(v * v)
    return integrate_singular(lambda th: 0.5 / math.sqrt(math.sin(th)), 0.0, upper, _TOL).real


def _half_ratio(n: float) -> float:
    # (1/2)_n / n! = Gamma(n + 1/2) / (Gamma(1/2) Gamma(n + 1))
    return gamma_ratio(n, 0.5, 1.0) / math.sqrt(math.pi)


def lemniscate_F_series(v: float) -> float:
    """F(v) = sum_n (1/2)_n v^(4n+1) / (n! (4n+1))."""
    _check_v(v)
    if v == 1.0:
        tail = sum_series(lambda n: _half_ratio(n) / (4 * n + 1), _TOL, method="euler-maclaurin")
        return 1.0 + tail.real
    v4 = v**4
    tail = sum_series(lambda n: _half_ratio(n) * v4**n / (4 * n + 1), _TOL)
    return v * (1.0 + tail.real)


def lemniscate_mu() -> float:
    return 2.0 * math.sqrt(2.0) * lemniscate_F(1.0) / math.pi


def lemniscate_theta(v: float) -> float:
    return math.sqrt(2.0) * lemniscate_F(v) / lemniscate_mu()


_QUARTER_NORM = math.exp(ln_gamma_real(0.75)[0] - ln_gamma_real(0.25)[0])


def _quarter_ratio(n: float) -> float:
    # (1/4)_n / (3/4)_n
    return gamma_ratio(n, 0.25, 0.75) * _QUARTER_NORM


def lemniscate_inversion_sides(v: float) -> tuple[float, float]:
    """Both sides of the logarithmic inversion formula for the lemniscate integral."""
    if not 0 < v <= 1:
        raise ValueError("v must lie in (0, 1]")
    if v == 1.0:
        s = sum_series(lambda n: _quarter_ratio(n) / (4 * n), _TOL, method="euler-maclaurin").real
    else:
        v4 = v**4
        s = sum_series(lambda n: _quarter_ratio(n) * v4**n / (4 * n), _TOL).real
    lhs = math.log(v) + math.pi / 6 - 0.5 * math.log(2.0) + s
    theta = lemniscate_theta(v)
    tail = sum_series(lambda n: math.cos(2 * n * theta) / (n * math.expm1(2 * math.pi * n)), _TOL).real
    rhs = math.log(math.sin(theta)) + theta * theta / (2 * math.pi) - 2 * tail
    return lhs, rhs


def lemniscate_inversion_residual(v: float) -> float:
    lhs, rhs = lemniscate_inversion_sides(v)
    return lhs - rhs


def lemniscate_doubling_sides(x: float) -> tuple[float, float]:
    """F(sqrt2 x / sqrt(1 + x^4))  vs  sqrt2 G(x)."""
    if not 0 < x <= 1:
        raise ValueError("x must lie in (0, 1]")
    v = min(1.0, math.sqrt(2.0) * x / math.sqrt(1.0 + x**4))
    return lemniscate_F(v), math.sqrt(2.0) * quartic_G(x)


def lemniscate_doubling_residual(x: float) -> float:
    lhs, rhs = lemniscate_doubling_sides(x)
    return lhs - rhs
