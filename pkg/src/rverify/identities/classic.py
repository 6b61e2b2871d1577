"""Problem-style integrals: a dilogarithm-like function with a reflection
law and its generalization, a Gaussian reciprocity, a cosine transform
with Bose-type kernel (special values, sine companion, Gauss-sum closed
form), and two integrals expanded as continued fractions."""

from __future__ import annotations

import math
from typing import Callable

from ..contfrac import cubes_cf, evaluate_cf, squares_cf
from ..quadrature import (
    QuadResult,
    Tolerance,
    find_root,
    integrate_finite,
    integrate_semi_infinite,
    integrate_singular,
)

_TOL = Tolerance(abs_tol=1e-15, rel_tol=1e-13)
PI2 = math.pi**2


# ---------------------------------------------------------------------------
# phi(n) = int_0^1 log(u) dv / v  with  v = u^n - u^(n-1)


def _log1p_ratio(w: float) -> float:
    # log(1 + w) / w, equal to 1 at w = 0
    if w == 0.0:
        return 1.0
    return math.log1p(w) / w


def _q783_integrand(n: float) -> Callable[[float], float]:
    # in w = u - 1: log(u) (n u - (n-1)) / (u (u-1))
    def f(w: float) -> float:
        return _log1p_ratio(w) * (n - (n - 1.0) / (1.0 + w))

    return f


def q783_upper(n: float) -> float:
    """w* = u* - 1 where u*^(n-1) (u* - 1) = 1, for n > 0."""
    if n <= 0:
        raise ValueError("n must be positive")
    h = lambda w: (1.0 + w) ** (n - 1.0) * w - 1.0
    hi = 1.0 + 2.0 ** (1.0 / min(n, 1.0))
    while h(hi) < 0:
        hi *= 2.0
    return find_root(h, 0.0, hi)


def q783_phi(n: float) -> float:
    """phi(n) = int_0^1 log(u) dv / v with v = u^n - u^(n-1), integrated in u."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    f = _q783_integrand(n)
    if n == 0:
        return integrate_semi_infinite(f, 0.0, _TOL).real
    return integrate_finite(f, 0.0, q783_upper(n), _TOL).real


def q783_functional_residual(n: float) -> float:
    """phi(n) + phi(1/n) - pi^2/6."""
    if n <= 0:
        raise ValueError("n must be positive")
    return q783_phi(n) + q783_phi(1.0 / n) - PI2 / 6.0


def berndt_evans_phi(
    g: Callable[[float], float],
    dlog_g: Callable[[float], float],
    n: float,
) -> float:
    """int log g(t) dv / v over v in (0, 1], where v(t) = g(t)^n / g(1/t).

    ``g`` is increasing with g(0) = 1 and ``dlog_g`` returns g'(t)/g(t).
    The integral is taken over t in (0, t*] with v(t*) = 1 using
    d(log v)/dt = n g'(t)/g(t) + g'(1/t) / (t^2 g(1/t)).
    """
    if n <= 0:
        raise ValueError("n must be positive")

    def dlogv(t: float) -> float:
        s = 1.0 / t
        return n * dlog_g(t) + dlog_g(s) * s * s

    def logv(t: float) -> float:
        return n * math.log(g(t)) - math.log(g(1.0 / t))

    lo, hi = 0.5, 2.0
    while logv(lo) > 0:
        lo *= 0.5
    while logv(hi) < 0:
        hi *= 2.0
    t_star = find_root(logv, lo, hi)
    samples = [t_star * k / 64 for k in range(1, 65)]
    if any(dlogv(t) <= 0 for t in samples):
        raise ValueError("v(t) is not increasing on (0, t*]")
    return integrate_singular(lambda t: math.log(g(t)) * dlogv(t), 0.0, t_star, _TOL).real


# ---------------------------------------------------------------------------
# Gaussian reciprocity


def q295_side(alpha: float) -> float:
    """sqrt(alpha) int_0^inf exp(-x^2) / cosh(alpha x) dx."""
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    res = integrate_semi_infinite(lambda x: math.exp(-x * x) / math.cosh(alpha * x), 0.0, _TOL)
    return math.sqrt(alpha) * res.real


# ---------------------------------------------------------------------------
# cosine transform with kernel 1/(e^{2 pi sqrt x} - 1)


def _bose(y: float) -> float:
    # y / (e^{2 pi y} - 1), limit 1/(2 pi) at 0
    if y == 0.0:
        return 1.0 / (2.0 * math.pi)
    return y / math.expm1(2.0 * math.pi * y)


def _y_max(n: float) -> float:
    # smallest y with exp(-2 pi y)(1 + n y^2) < 1e-18
    y = 1.0
    while math.exp(-2 * math.pi * y) * (1.0 + n * y * y) >= 1e-18:
        y += 0.25
    return y


def _transform(n: float, trig: Callable[[float], float]) -> float:
    # 2 int_0^inf y trig(n y^2) / (e^{2 pi y} - 1) dy, substituting x = y^2
    res = integrate_finite(lambda y: _bose(y) * trig(n * y * y), 0.0, _y_max(abs(n)), _TOL)
    return 2.0 * res.real


def ram_phi(n: float) -> float:
    """phi(n) = int_0^inf cos(n x) / (e^{2 pi sqrt x} - 1) dx."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _transform(n, math.cos)


def ram_sine_integral(n: float) -> float:
    """int_0^inf sin(n x) / (e^{2 pi sqrt x} - 1) dx."""
    return _transform(n, math.sin)


def ram_sine_rhs(n: float) -> float:
    """phi(n) - 1/(2n) + phi(pi^2/n) sqrt(2 pi^3 / n^3)."""
    return ram_phi(n) - 0.5 / n + ram_phi(PI2 / n) * math.sqrt(2.0 * math.pi**3 / n**3)


def ram_sine_transform(n: float) -> float:
    """Residual of the sine-transform relation at ``n``."""
    if n <= 0:
        raise ValueError("n must be positive")
    return ram_sine_integral(n) - ram_sine_rhs(n)


RAM_PHI_SPECIAL: dict[str, tuple[float, float]] = {
    "0": (0.0, 1.0 / 12.0),
    "pi/2": (math.pi / 2, 1.0 / (4.0 * math.pi)),
    "pi": (math.pi, (2.0 - math.sqrt(2.0)) / 8.0),
    "2pi": (2.0 * math.pi, 1.0 / 16.0),
    "2pi/5": (2.0 * math.pi / 5, (8.0 - 3.0 * math.sqrt(5.0)) / 16.0),
    "pi/5": (math.pi / 5, (6.0 + math.sqrt(5.0)) / 4.0 - 5.0 * math.sqrt(10.0) / 8.0),
    "2pi/3": (2.0 * math.pi / 3, 1.0 / 3.0 - math.sqrt(3.0) * (3.0 / 16.0 - 1.0 / (8.0 * math.pi))),
}
"""Closed-form values of phi at selected arguments: label -> (n, phi(n))."""


def ram_phi_gauss(a: int, b: int) -> float:
    """phi(pi a / b) for odd positive a, b as a pair of finite Gauss-type sums."""
    for k in (a, b):
        if not (isinstance(k, int) and k >= 1 and k % 2 == 1):
            raise ValueError("a and b must be odd positive integers")
    s1 = sum((b - 2 * r) * math.cos(r * r * math.pi * a / b) for r in range(1, b + 1))
    s2 = sum((a - 2 * r) * math.sin(math.pi / 4 + r * r * math.pi * b / a) for r in range(1, a + 1))
    return 0.25 * s1 - b / (4.0 * a) * math.sqrt(b / a) * s2


# ---------------------------------------------------------------------------
# integrals with continued-fraction expansions


def letter_integral_1() -> QuadResult:
    """4 int_0^inf x exp(-x sqrt5) / cosh x dx."""
    r5 = math.sqrt(5.0)
    return integrate_semi_infinite(lambda x: x * math.exp(-x * r5) / math.cosh(x), 0.0, _TOL).scaled(4.0)


def letter_integral_2() -> QuadResult:
    """2 int_0^inf x^2 exp(-x sqrt3) / sinh x dx."""
    r3 = math.sqrt(3.0)

    def f(x: float) -> float:
        if x == 0.0:
            return 0.0
        return x * x * math.exp(-x * r3) / math.sinh(x)

    return integrate_semi_infinite(f, 0.0, _TOL).scaled(2.0)


def letter_cf_1() -> QuadResult:
    return evaluate_cf(squares_cf(), tol=1e-10)


def letter_cf_2() -> QuadResult:
    return evaluate_cf(cubes_cf(), tol=1e-14)
