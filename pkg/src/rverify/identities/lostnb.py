"""Integrals of theta-function products against incomplete elliptic
integrals, tied to modular equations of degrees 5, 14 and 35."""

from __future__ import annotations

import math

from ..qseries import euler_f_neg, lambda5, rr_cf_product, v14, v35
from ..quadrature import Tolerance, differentiate, integrate_finite
from ..specfun import elliptic_f_incomplete, elliptic_k

_TOL = Tolerance(abs_tol=1e-16, rel_tol=1e-13)

EPSILON = (math.sqrt(5.0) + 1.0) / 2.0
M5 = EPSILON**-5 * 5.0**-1.5
C14 = math.sqrt(13.0 + 16.0 * math.sqrt(2.0)) / 7.0
M14 = (16.0 * math.sqrt(2.0) - 13.0) / (32.0 * math.sqrt(2.0))

# beyond this point the q-products are not evaluated; see entry5_constant_C
_C_SPLIT = 0.9


def lemma_dlambda_sides(q: float) -> tuple[float, float]:
    """q d(lambda)/dq  vs  sqrt(q) f^2(-q) f^2(-q^5) sqrt(125 l^3 + 22 l^2 + l)."""
    if not 0.0 < q <= 0.25:
        raise ValueError("q must lie in (0, 0.25]")
    deriv, _ = differentiate(lambda5, q, h0=0.2 * q)
    lam = lambda5(q)
    rhs = math.sqrt(q) * (euler_f_neg(q) * euler_f_neg(q**5)) ** 2 * math.sqrt(125 * lam**3 + 22 * lam**2 + lam)
    return q * deriv, rhs


def lemma_dlambda_residual(q: float) -> float:
    """Relative difference of the two sides."""
    lhs, rhs = lemma_dlambda_sides(q)
    return (lhs - rhs) / rhs


def entry5_lhs(q: float) -> float:
    """5^(3/4) int_0^q f^2(-t) f^2(-t^5) / sqrt(t) dt, with t = s^2 removing the endpoint singularity."""

    def f(s: float) -> float:
        t = s * s
        return 2.0 * (euler_f_neg(t) * euler_f_neg(t**5)) ** 2

    return 5.0**0.75 * integrate_finite(f, 0.0, math.sqrt(q), _TOL).real


def entry5_arccos_form(q: float) -> float:
    """int_{arccos((eps u)^(5/2))}^{pi/2} dphi / sqrt(1 - m5 sin^2 phi)."""
    arg = (EPSILON * rr_cf_product(q)) ** 2.5
    if arg > 1.0:
        raise ValueError("(eps u)^(5/2) exceeds 1")
    return elliptic_k(M5) - elliptic_f_incomplete(math.acos(arg), M5)


def entry5_arctan_form(q: float) -> float:
    """int_0^{2 arctan(5^(3/4) sqrt(q) f^3(-q^5)/f^3(-q))} dphi / sqrt(1 - m5 sin^2 phi)."""
    y = 5.0**0.75 * math.sqrt(q) * (euler_f_neg(q**5) / euler_f_neg(q)) ** 3
    return elliptic_f_incomplete(2.0 * math.atan(y), M5)


def entry5_residuals(q: float, arccos_factor: float = 2.0) -> tuple[float, float]:
    """(LHS - factor * arccos form, LHS - arctan form).

    The arccos form equals half of the other two expressions, so the
    default factor is 2; pass ``arccos_factor=1`` for the form as usually
    printed.
    """
    if not 0.0 < q <= 0.3:
        raise ValueError("q must lie in (0, 0.3]")
    lhs = entry5_lhs(q)
    return lhs - arccos_factor * entry5_arccos_form(q), lhs - entry5_arctan_form(q)


def _upper_integrand(t: float) -> float:
    # f^8(-t) / f^4(-t^5) t^(-3/2)
    return euler_f_neg(t) ** 8 / euler_f_neg(t**5) ** 4 * t**-1.5


def entry5_upper_tail_bound() -> float:
    """Bound on the upper integrand's integral over [0.9, 1).

    The integrand is checked to be decreasing on a grid past the split, so
    its value at 0.9 times the interval length bounds the omitted piece.
    """
    grid = [_C_SPLIT + k * (1.0 - _C_SPLIT) / 64 for k in range(60)]
    values = [_upper_integrand(t) for t in grid]
    if any(b > a for a, b in zip(values, values[1:])):
        raise ArithmeticError("upper integrand not monotone past the split point")
    return values[0] * (1.0 - _C_SPLIT)


def entry5_constant_C(q: float) -> float:
    """Solve the degree-5 relation for C at nome ``q``.

    The integral over (q, 1) is computed on (q, 0.9]; the rest is below
    ``entry5_upper_tail_bound()`` (about 1e-45) and omitted.
    """
    if not 0.0 < q < _C_SPLIT:
        raise ValueError("q must lie in (0, 0.9)")
    u = rr_cf_product(q)
    lhs = u**5 + u**-5
    prefactor = 0.5 / math.sqrt(q) * (euler_f_neg(q) / euler_f_neg(q**5)) ** 3
    upper = integrate_finite(_upper_integrand, q, _C_SPLIT, _TOL).real
    lower = integrate_finite(
        lambda t: euler_f_neg(t**5) ** 8 / euler_f_neg(t) ** 4 * math.sqrt(t), 0.0, q, _TOL
    ).real
    return lhs / prefactor - upper - 125.0 * lower


def entry14_sides(q: float) -> tuple[float, float]:
    if not 0.0 < q <= 0.05:
        raise ValueError("q must lie in (0, 0.05]")
    lhs = integrate_finite(
        lambda t: euler_f_neg(t) * euler_f_neg(t * t) * euler_f_neg(t**7) * euler_f_neg(t**14), 0.0, q, _TOL
    ).real
    v = v14(q)
    arg = C14 * (1 + v) / (1 - v)
    if arg > 1.0:
        raise ValueError("arccos argument exceeds 1")
    rhs = (elliptic_f_incomplete(math.acos(C14), M14) - elliptic_f_incomplete(math.acos(arg), M14)) / math.sqrt(
        8.0 * math.sqrt(2.0)
    )
    return lhs, rhs


def entry14_residual(q: float) -> float:
    lhs, rhs = entry14_sides(q)
    return lhs - rhs


def _sextic(t: float) -> float:
    return 1 - 5 * t - 9 * t**3 - 5 * t**5 - t**6


def entry35_sides(q: float) -> tuple[float, float]:
    if not 0.0 < q <= 0.1:
        raise ValueError("q must lie in (0, 0.1]")
    lhs = integrate_finite(
        lambda t: t * euler_f_neg(t) * euler_f_neg(t**5) * euler_f_neg(t**7) * euler_f_neg(t**35), 0.0, q, _TOL
    ).real
    v = v35(q)
    if any(_sextic(v * k / 32) <= 0 for k in range(33)):
        raise ValueError("sextic not positive on [0, v]")
    rhs = integrate_finite(lambda t: t / math.sqrt((1 + t - t * t) * _sextic(t)), 0.0, v, _TOL).real
    return lhs, rhs


def entry35_residual(q: float) -> float:
    lhs, rhs = entry35_sides(q)
    return lhs - rhs
