"""Transforms with theta-type kernels, gamma and Bessel products over the
real line, and Fourier pairs built on the Riemann Xi function."""

from __future__ import annotations

import cmath
import math
from itertools import count

from ..quadrature import (
    DEFAULT_TOL,
    QuadResult,
    Tolerance,
    integrate_finite,
    integrate_line,
    integrate_oscillatory,
    integrate_semi_infinite,
)
from ..specfun import bessel_j_scaled, ln_gamma, ln_gamma_real, recip_gamma, xi

_TOL = Tolerance(abs_tol=1e-14, rel_tol=1e-12)
_LOOSE_TOL = Tolerance(abs_tol=1e-10, rel_tol=1e-8)
SQRT_PI = math.sqrt(math.pi)


# ---------------------------------------------------------------------------
# theta-type kernels


def _check_w(w: float) -> None:
    if not (isinstance(w, (int, float)) and w > 0):
        raise ValueError("only real w > 0 is supported")


def phi_w(t: complex, w: float, tol: Tolerance = _TOL) -> complex:
    """int_0^inf cos(pi t x) / cosh(pi x) exp(-pi w x^2) dx."""
    _check_w(w)
    t = complex(t)

    def f(x: float) -> complex:
        return cmath.cos(math.pi * t * x) / math.cosh(math.pi * x) * math.exp(-math.pi * w * x * x)

    return integrate_semi_infinite(f, 0.0, tol).value


def psi_w(t: complex, w: float, tol: Tolerance = _TOL) -> complex:
    """int_0^inf sin(pi t x) / sinh(pi x) exp(-pi w x^2) dx."""
    _check_w(w)
    t = complex(t)

    def f(x: float) -> complex:
        if x == 0.0:
            return t
        return cmath.sin(math.pi * t * x) / math.sinh(math.pi * x) * math.exp(-math.pi * w * x * x)

    return integrate_semi_infinite(f, 0.0, tol).value


def modular_relation_1(t: float, w: float, kernel: str = "phi") -> tuple[complex, complex]:
    """Sides of phi_w(t) = w^(-1/2) exp(-pi t^2/(4w)) K_{1/w}(i t/w).

    ``kernel="phi"`` uses K = phi (the relation that holds);
    ``kernel="psi"`` uses K = psi as sometimes printed.
    """
    lhs = phi_w(t, w)
    partner = phi_w if kernel == "phi" else psi_w
    rhs = math.exp(-math.pi * t * t / (4 * w)) / math.sqrt(w) * partner(1j * t / w, 1.0 / w)
    return lhs, rhs


def modular_relation_2(t: float, w: float) -> tuple[complex, complex]:
    """Sides of exp(pi t^2/(4w)) (1/2 + psi_w(t)) = exp(pi (t+w)^2/(4w)) phi_w(t+w)."""
    lhs = math.exp(math.pi * t * t / (4 * w)) * (0.5 + psi_w(t, w))
    rhs = math.exp(math.pi * (t + w) ** 2 / (4 * w)) * phi_w(t + w, w)
    return lhs, rhs


def _sinc_ratio(t: float, x: float) -> float:
    # sin(2 pi t x) / sinh(pi x), limit 2t at the origin
    if x == 0.0:
        return 2.0 * t
    return math.sin(2 * math.pi * t * x) / math.sinh(math.pi * x)


def mustafy_sides(t: float) -> dict[str, tuple[float, float]]:
    """Both sides of the cosine and sine evaluations with kernel sin(2 pi t x)/sinh(pi x)."""
    if t <= 0:
        raise ValueError("t must be positive")
    spacing = 1.0 / (2.0 * t)
    zeros = [k * spacing for k in range(0, 4000)]
    cos_int = integrate_oscillatory(lambda x: _sinc_ratio(t, x) * math.cos(math.pi * x * x), zeros, _TOL)
    sin_int = integrate_oscillatory(lambda x: _sinc_ratio(t, x) * math.sin(math.pi * x * x), zeros, _TOL)
    sh = math.sinh(math.pi * t)
    cos_rhs = (math.cosh(math.pi * t) - math.cos(math.pi * t * t)) / (2 * sh)
    sin_rhs = math.sin(math.pi * t * t) / (2 * sh)
    return {"cos": (cos_int.real, cos_rhs), "sin": (sin_int.real, sin_rhs)}


def mustafy_pair_residual(t: float) -> tuple[float, float]:
    sides = mustafy_sides(t)
    return sides["cos"][0] - sides["cos"][1], sides["sin"][0] - sides["sin"][1]


# ---------------------------------------------------------------------------
# reciprocal-gamma product over the real line


def _log_recip_gamma(x: float) -> tuple[float, float]:
    """``(log|1/Gamma(x)|, sign)``; sign 0 at the poles of Gamma."""
    if x <= 0 and x == math.floor(x):
        return 0.0, 0.0
    lg, sign = ln_gamma_real(x)
    return -lg, sign


def gamma_quad_integrand(alpha: float, beta: float, gamma_: float, delta: float):
    def f(x: float) -> float:
        log_mag = 0.0
        sign = math.cos(math.pi * (x + beta + gamma_))
        for arg in (alpha + x, beta - x, gamma_ + 2 * x, delta - 2 * x):
            lm, sg = _log_recip_gamma(arg)
            if sg == 0.0:
                return 0.0
            log_mag += lm
            sign *= sg
        return sign * math.exp(log_mag)

    return f


def _check_sum_four(alpha, beta, gamma_, delta) -> None:
    if abs(alpha + beta + gamma_ + delta - 4.0) > 1e-14:
        raise ValueError("alpha + beta + gamma + delta must equal 4")


def gamma_quad_integral(alpha: float, beta: float, gamma_: float, delta: float) -> QuadResult:
    """int_R cos(pi(x+beta+gamma)) / (G(alpha+x) G(beta-x) G(gamma+2x) G(delta-2x)) dx.

    The tail decays like 1/x^2 times a periodic factor of period 2, so the
    half-lines are cut into full periods and the panel sums accelerated.
    """
    _check_sum_four(alpha, beta, gamma_, delta)
    f = gamma_quad_integrand(alpha, beta, gamma_, delta)
    periods = [2.0 * k for k in range(0, 400)]
    return integrate_line(f, _LOOSE_TOL, right_zeros=periods, left_zeros=periods)


def gamma_quad_rhs(alpha: float, beta: float, gamma_: float, delta: float) -> float:
    """1 / (2 G(gamma+delta-1) G(2 alpha+delta-2) G(2 beta+gamma-2))."""
    _check_sum_four(alpha, beta, gamma_, delta)
    return (
        0.5
        * recip_gamma(gamma_ + delta - 1)
        * recip_gamma(2 * alpha + delta - 2)
        * recip_gamma(2 * beta + gamma_ - 2)
    )


# ---------------------------------------------------------------------------
# Bessel product integrated over the order


def bessel_product_integral(alpha: float, beta: float, x: float, y: float) -> QuadResult:
    """int_R J_{alpha+w}(x)/x^(alpha+w) * J_{beta-w}(y)/y^(beta-w) dw.

    Both factors use the scaled series, which is entire in the order.  The
    tails change sign near w = beta + k (right) and w = -alpha - k (left).
    """
    if alpha + beta < 2:
        raise ValueError("alpha + beta >= 2 required for tail decay")
    if not (0 < x <= 2 and 0 < y <= 2):
        raise ValueError("x and y must lie in (0, 2]")

    def f(w: float) -> float:
        return bessel_j_scaled(alpha + w, x) * bessel_j_scaled(beta - w, y)

    right = [0.0] + [beta + k for k in range(0, 400) if beta + k > 0]
    left = [0.0] + [alpha + k for k in range(0, 400) if alpha + k > 0]
    return integrate_line(f, _LOOSE_TOL, right_zeros=right, left_zeros=left)


def bessel_product_rhs(alpha: float, beta: float, x: float, y: float) -> float:
    """J_{alpha+beta}(sqrt(2x^2 + 2y^2)) / ((x^2 + y^2)/2)^((alpha+beta)/2)."""
    z = math.sqrt(2 * x * x + 2 * y * y)
    nu = alpha + beta
    # J_nu(z) / (z^2/4)^(nu/2) = 2^nu J_nu(z)/z^nu
    return bessel_j_scaled(nu, z) * 2.0**nu


# ---------------------------------------------------------------------------
# Fourier pairs built on Xi


def _bose_weight(x: float) -> float:
    # x / (e^{2 pi x} - 1), limit 1/(2 pi) at 0
    if x == 0.0:
        return 1.0 / (2 * math.pi)
    y = 2 * math.pi * x
    if y > 700:
        return 0.0
    return x / math.expm1(y)


def _theta_integral(c: float) -> float:
    """int_0^inf x exp(-pi c x^2) / (e^{2 pi x} - 1) dx."""
    f = lambda x: _bose_weight(x) * math.exp(-math.pi * c * x * x)
    return integrate_semi_infinite(f, 0.0, _TOL).real


def riemann_eq13_lhs(n: float) -> float:
    """e^{-n} - 4 pi e^{-3n} int_0^inf x exp(-pi x^2 e^{-4n}) / (e^{2 pi x} - 1) dx."""
    return math.exp(-n) - 4 * math.pi * math.exp(-3 * n) * _theta_integral(math.exp(-4 * n))


def _gamma_pair(a: float, b: float) -> float:
    # Gamma(a + i b) Gamma(a - i b) = |Gamma(a + i b)|^2
    return math.exp(2.0 * ln_gamma(complex(a, b)).real)


def _xi_weight(t: float) -> float:
    # Gamma((-1+it)/4) Gamma((-1-it)/4) Xi(t/2)
    return _gamma_pair(-0.25, 0.25 * t) * xi(0.5 + 0.5j * t).real


# weight decays like exp(-3 pi t / 8); below 1e-16 of its peak by t = 60
_XI_T_MAX = 70.0


def riemann_eq13_rhs(n: float) -> float:
    """(1/(4 pi sqrt pi)) int_0^inf Gamma((-1+it)/4) Gamma((-1-it)/4) Xi(t/2) cos(n t) dt."""
    res = integrate_finite(lambda t: _xi_weight(t) * math.cos(n * t), 0.0, _XI_T_MAX, _TOL)
    return res.real / (4 * math.pi * SQRT_PI)


def riemann_eq13_residual(n: float) -> float:
    return riemann_eq13_lhs(n) - riemann_eq13_rhs(n)


# the z-integrand is below 1e-17 beyond this point
_Z_MAX = 42.0


def riemann_eq12_lhs(t: float) -> float:
    """int_0^inf {e^{-z} - 4 pi int_0^inf x e^{-3z - pi x^2 e^{-4z}} / (e^{2 pi x} - 1) dx} cos(t z) dz.

    The inner integral depends on z only, so it is memoized across the
    outer rule's nodes.
    """
    memo: dict[float, float] = {}

    def bracket(z: float) -> float:
        val = memo.get(z)
        if val is None:
            val = math.exp(-z) - 4 * math.pi * math.exp(-3 * z) * _theta_integral(math.exp(-4 * z))
            memo[z] = val
        return val

    outer_tol = Tolerance(abs_tol=1e-12, rel_tol=1e-11)
    return integrate_finite(lambda z: bracket(z) * math.cos(t * z), 0.0, _Z_MAX, outer_tol).real


def riemann_eq12_rhs(t: float) -> float:
    """(1/(8 sqrt pi)) Gamma((-1+it)/4) Gamma((-1-it)/4) Xi(t/2)."""
    return _xi_weight(t) / (8 * SQRT_PI)


def riemann_eq12_residual(t: float) -> float:
    return riemann_eq12_lhs(t) - riemann_eq12_rhs(t)


def F_ns_t_side(n: float, s: float) -> float:
    """int_0^inf G((s-1+it)/4) G((s-1-it)/4) Xi((t+is)/2) Xi((t-is)/2) cos(n t)/((s+1)^2+t^2) dt."""

    def f(t: float) -> float:
        g = _gamma_pair(0.25 * (s - 1), 0.25 * t)
        # Xi((t-is)/2) is the conjugate of Xi((t+is)/2) for real s, t
        x = xi(complex(0.5 - 0.5 * s, 0.5 * t))
        return g * (x.real * x.real + x.imag * x.imag) * math.cos(n * t) / ((s + 1) ** 2 + t * t)

    return integrate_finite(f, 0.0, _XI_T_MAX, _TOL).real


def _bose_minus_pole(y: float) -> float:
    # 1/(e^y - 1) - 1/y, with its series near 0
    if y < 1e-3:
        return -0.5 + y / 12.0 - y**3 / 720.0
    if y > 700:
        return -1.0 / y
    return 1.0 / math.expm1(y) - 1.0 / y


def F_ns_x_side(n: float, s: float) -> QuadResult:
    """(1/8) (4 pi)^(-(s-3)/2) int_0^inf x^s (B(x e^n)) (B(x e^{-n})) dx with B(y) = 1/(e^y-1) - 1/y."""
    en, emn = math.exp(n), math.exp(-n)

    def f(x: float) -> float:
        if x == 0.0:
            return 0.25 if s == 0 else 0.0
        return x**s * _bose_minus_pole(x * en) * _bose_minus_pole(x * emn)

    head = integrate_finite(f, 0.0, 1.0, _TOL) if s >= 0 else None
    if head is None:
        raise ValueError("F(n, s) x-integral implemented for s >= 0")
    tail = integrate_semi_infinite(f, 1.0, _TOL)
    total = head + tail
    return total.scaled(0.125 * (4 * math.pi) ** (-0.5 * (s - 3)))


def F_ns_residual(n: float, s: float) -> float:
    return F_ns_t_side(n, s) - F_ns_x_side(n, s).real
