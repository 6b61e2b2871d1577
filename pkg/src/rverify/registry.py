"""Catalog of identity checks and the runner that evaluates them.

Each check pairs a parameter grid with an evaluator returning
``(lhs, rhs)`` at one grid point. The runner turns every grid point into
a :class:`CheckOutcome`; points can be dispatched to a process pool,
with only ``(check_id, index)`` crossing the process boundary.
"""

from __future__ import annotations

import fnmatch
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable

from . import __version__
from .identities import analytic, classic, elliptic, lostnb
from .mellin import (
    FRULLANI_LADDER,
    FRULLANI_LADDER_ALT,
    dlog_ratio,
    frullani,
    frullani_integral,
    generalized_frullani_lhs,
    master_value,
    mellin_transform,
    q_beta_lhs,
    q_beta_rhs,
)
from .outcome import CheckOutcome, SkipCheck, compare
from .quadrature import Tolerance
from .specfun import EULER_GAMMA, PoleError, gamma, ln_gamma

TIERS = ("strict", "standard", "loose", "experimental")
TIER_TOLERANCE = {
    "strict": Tolerance(abs_tol=1e-12, rel_tol=1e-8),
    "standard": Tolerance(abs_tol=1e-12, rel_tol=1e-6),
    "loose": Tolerance(abs_tol=1e-12, rel_tol=1e-4),
    "experimental": Tolerance(abs_tol=1e-12, rel_tol=1e-4),
}

# topic groups in display order: key -> heading
GROUPS = {
    "problems": "Problem integrals and reciprocity",
    "letters": "Cosine transform and continued fractions",
    "transforms": "Theta kernels, gamma and Bessel products, Xi transforms",
    "mellin": "Master Theorem, Frullani and q-beta integrals",
    "elliptic": "Incomplete elliptic integrals",
    "theta": "Theta-function integrals and modular equations",
}

PI = math.pi
PI2 = PI * PI


class ConfigError(ValueError):
    """Invalid runner arguments (exit code 2)."""


def _abs(x: float) -> Tolerance:
    return Tolerance(abs_tol=x, rel_tol=0.0)


@dataclass(frozen=True)
class CheckSpec:
    id: str
    group: str
    anchor: str
    tier: str
    grid: tuple[dict, ...]
    evaluate: Callable[..., tuple]
    tolerance: Tolerance | None = None
    plumbing: bool = False

    def __post_init__(self):
        if self.tier not in TIERS:
            raise ValueError(f"unknown tier {self.tier!r}")
        if self.group not in GROUPS:
            raise ValueError(f"unknown group {self.group!r}")
        if not self.anchor and not self.plumbing:
            raise ValueError(f"check {self.id} needs an anchor")

    @property
    def experimental(self) -> bool:
        return self.tier == "experimental"

    @property
    def effective_tolerance(self) -> Tolerance:
        return self.tolerance if self.tolerance is not None else TIER_TOLERANCE[self.tier]

    @property
    def section(self) -> int:
        return list(GROUPS).index(self.group) + 1


# ---------------------------------------------------------------------------
# evaluators: each returns (lhs, rhs) at one grid point

_Q783_CLOSED = {0: PI2 / 6, 1: PI2 / 12, 2: PI2 / 15}


def _q783_special(n):
    return classic.q783_phi(n), _Q783_CLOSED[n]


def _q783_functional(n):
    return classic.q783_phi(n) + classic.q783_phi(1.0 / n), PI2 / 6


_BERNDT_EVANS_G = {
    "1+t": (lambda t: 1.0 + t, lambda t: 1.0 / (1.0 + t)),
    "1+t+t^2": (lambda t: 1.0 + t + t * t, lambda t: (1.0 + 2.0 * t) / (1.0 + t + t * t)),
    "exp(t)": (math.exp, lambda t: 1.0),
}


def _berndt_evans(g, n):
    fn, dlog = _BERNDT_EVANS_G[g]
    if g == "1+t":
        return classic.berndt_evans_phi(fn, dlog, n), _Q783_CLOSED[n]
    lhs = classic.berndt_evans_phi(fn, dlog, n) + classic.berndt_evans_phi(fn, dlog, 1.0 / n)
    return lhs, 2.0 * classic.berndt_evans_phi(fn, dlog, 1.0)


def _q295(alpha, beta):
    return classic.q295_side(alpha), classic.q295_side(beta)


def _ramphi_special(label):
    n, value = classic.RAM_PHI_SPECIAL[label]
    return classic.ram_phi(n), value


def _ramphi_asymptotic(n: float) -> float:
    # three terms of the small-x expansion of the Bose kernel, transformed termwise
    lead = 1.0 / (2.0 * math.sqrt(2.0 * PI * n))
    return lead * (1.0 - PI2 / (6.0 * n) + PI2 * PI2 / (60.0 * n * n))


def _ramphi_limit(a, method):
    n = PI * a
    lhs = classic.ram_phi(n) if method == "quadrature" else classic.ram_phi_gauss(a, 1)
    return lhs, _ramphi_asymptotic(n)


def _ramphi_sine(n):
    return classic.ram_sine_integral(n), classic.ram_sine_rhs(n)


def _ramphi_gauss(a, b):
    return classic.ram_phi_gauss(a, b), classic.ram_phi(PI * a / b)


def _letter_cf(which):
    cf, integral = {
        1: (classic.letter_cf_1, classic.letter_integral_1),
        2: (classic.letter_cf_2, classic.letter_integral_2),
    }[which]
    value = cf()
    if not value.converged:
        raise ArithmeticError("continued fraction did not converge")
    return value.real, integral().real


def _letter_cf_1():
    return _letter_cf(1)


def _letter_cf_2():
    return _letter_cf(2)


def _real_if_close(z: complex) -> complex | float:
    z = complex(z)
    return z.real if abs(z.imag) <= 1e-14 * max(1.0, abs(z.real)) else z


def _modular_1(t, w, kernel="phi"):
    lhs, rhs = analytic.modular_relation_1(t, w, kernel)
    return _real_if_close(lhs), _real_if_close(rhs)


def _modular_2(t, w):
    lhs, rhs = analytic.modular_relation_2(t, w)
    return _real_if_close(lhs), _real_if_close(rhs)


def _mustafy(kind):
    def evaluate(t):
        return analytic.mustafy_sides(t)[kind]

    return evaluate


def _gamma_quad(alpha, beta, gamma_, delta):
    try:
        rhs = analytic.gamma_quad_rhs(alpha, beta, gamma_, delta)
    except PoleError as exc:
        raise SkipCheck(f"right side has a pole: {exc}") from exc
    return analytic.gamma_quad_integral(alpha, beta, gamma_, delta).real, rhs


def _bessel_product(alpha, beta, x, y):
    return analytic.bessel_product_integral(alpha, beta, x, y).real, analytic.bessel_product_rhs(alpha, beta, x, y)


def _eq13(n):
    return analytic.riemann_eq13_lhs(n), analytic.riemann_eq13_rhs(n)


def _eq12(t):
    return analytic.riemann_eq12_lhs(t), analytic.riemann_eq12_rhs(t)


def _f_ns(n, s):
    x_side = analytic.F_ns_x_side(n, s)
    if not x_side.converged:
        raise ArithmeticError("x-side integral did not converge")
    return analytic.F_ns_t_side(n, s), x_side.real


def _master_exp(n):
    return mellin_transform(lambda x: math.exp(-x), n).real, master_value(lambda k: 1.0, n)


def _master_factorial(n):
    return mellin_transform(lambda x: 1.0 / (1.0 + x), n).real, master_value(lambda k: gamma(k + 1.0), n)


def _master(F, n):
    return {"exp(-x)": _master_exp, "1/(1+x)": _master_factorial}[F](n)


def _beta_from_master(m, n):
    # F(x) = (1 + x)^-(m+n) has coefficients phi(k) = Gamma(k+m+n) / Gamma(m+n)
    p = m + n
    lhs = mellin_transform(lambda x: (1.0 + x) ** -p, m).real
    rhs = master_value(lambda k: gamma(k + p) / gamma(p), m)
    return lhs, rhs


def _beta_closed(m, n):
    # the same Mellin integral against Gamma(m) Gamma(n) / Gamma(m + n)
    p = m + n
    return mellin_transform(lambda x: (1.0 + x) ** -p, m).real, gamma(m) * gamma(n) / gamma(p)


def _q_beta(s, a, q):
    return q_beta_lhs(s, a, q).real, q_beta_rhs(s, a, q)


_FRULLANI_F = {
    "exp(-x)": (lambda x: math.exp(-x), 1.0, 0.0),
    # f(inf) does not exist in the limit sense used here; it is replaced by 0
    "1/(1+x)": (lambda x: 1.0 / (1.0 + x), 1.0, 0.0),
}


def _frullani(f, a, b):
    fn, f0, finf = _FRULLANI_F[f]
    return frullani_integral(fn, a, b).real, frullani(f0, finf, a, b)


def _exp_neg(x):
    return math.exp(-x)


def _recip_1p(x):
    return 1.0 / (1.0 + x)


def _frullani_generalized(g, a, b, route="analytic", ladder="default"):
    """f = exp(-x) against g; the log-ratio derivative is -gamma when g = 1/(1+x)."""
    gfun = {"exp(-x)": _exp_neg, "1/(1+x)": _recip_1p}[g]
    if g == "exp(-x)":
        dlog = 0.0
    elif route == "analytic":
        dlog = -EULER_GAMMA
    else:
        # v(s)/u(s) = Gamma(s+1)
        dlog = dlog_ratio(lambda s: ln_gamma(s + 1.0).real)
    steps = FRULLANI_LADDER if ladder == "default" else FRULLANI_LADDER_ALT
    lhs, _ = generalized_frullani_lhs(_exp_neg, gfun, a, b, steps)
    return lhs, math.log(b / a) + dlog


def _addition(alpha, beta, x, radical):
    variant = {"x^2": "x2", "x": "x"}[radical]
    try:
        uv, w, _ = elliptic.addition_sides(alpha, beta, x, variant)
    except elliptic.InfeasibleCondition as exc:
        raise SkipCheck(str(exc)) from exc
    return uv, w


def _page172(x, alpha):
    beta = elliptic.page172_beta(x, alpha)
    if not 0.0 <= beta <= PI / 2:
        raise SkipCheck("beta out of range")
    return elliptic.entry_page172_sides(x, alpha)


def _double_integral(x):
    return elliptic.entry_double_integral_lhs(x), elliptic.entry_double_integral_rhs(x)


def _double_integral_odd(x):
    return elliptic.entry_double_integral_lhs(-x), -elliptic.entry_double_integral_lhs(x)


def _lemniscate_series(v):
    return elliptic.lemniscate_F(v), elliptic.lemniscate_F_series(v)


def _entry5(q, form):
    lhs = lostnb.entry5_lhs(q)
    if form == "arctan":
        return lhs, lostnb.entry5_arctan_form(q)
    factor = 2.0 if form == "arccos" else 1.0
    return lhs, factor * lostnb.entry5_arccos_form(q)


_C_REFERENCE_Q = 0.1


def _entry5_constant(q):
    return lostnb.entry5_constant_C(q), lostnb.entry5_constant_C(_C_REFERENCE_Q)


def _grid(*points: dict) -> tuple[dict, ...]:
    return tuple(points)


def _one(name: str, values: Iterable) -> tuple[dict, ...]:
    return tuple({name: v} for v in values)


# ---------------------------------------------------------------------------
# catalog


@lru_cache(maxsize=1)
def _build_catalog() -> tuple[CheckSpec, ...]:
    S = CheckSpec
    sq_pi = math.sqrt(PI)
    specs = [
        # problems
        S("q783-special-values", "problems", "Question 783: values at n = 0, 1, 2", "strict",
          _one("n", (0, 1, 2)), _q783_special, Tolerance(1e-12, 1e-9)),
        S("q783-functional", "problems", "Question 783: reflection n -> 1/n", "strict",
          _one("n", (1 / 3, 0.5, 2.0, 3.0, 3.7)), _q783_functional, _abs(1e-9)),
        S("berndt-evans-reduction", "problems", "Berndt-Evans generalization of Question 783", "strict",
          _grid({"g": "1+t", "n": 2}, {"g": "1+t", "n": 1}, {"g": "1+t+t^2", "n": 2}, {"g": "1+t+t^2", "n": 3}),
          _berndt_evans),
        S("berndt-evans-exponential", "problems", "Berndt-Evans generalization with g = exp(t)", "experimental",
          _grid({"g": "exp(t)", "n": 2}), _berndt_evans),
        S("q295-reciprocity", "problems", "Question 295: reciprocity for alpha beta = pi", "strict",
          _grid({"alpha": 1.0, "beta": PI}, {"alpha": 2.0, "beta": PI / 2}, {"alpha": sq_pi, "beta": sq_pi}),
          _q295, _abs(1e-10)),
        # letters
        S("ramphi-special-values", "letters", "First letter: closed-form values of the cosine transform", "strict",
          _one("label", tuple(classic.RAM_PHI_SPECIAL)), _ramphi_special, Tolerance(1e-12, 1e-8)),
        S("ramphi-limit", "letters", "First letter: vanishing of the cosine transform at infinity", "standard",
          _grid({"a": 11, "method": "quadrature"}, {"a": 101, "method": "gauss"}, {"a": 1001, "method": "gauss"}),
          _ramphi_limit, Tolerance(0.0, 5.0 / (PI * 11) ** 3)),
        S("ramphi-sine-functional", "letters", "First letter: sine transform in terms of the cosine transform",
          "strict", _one("n", (1.3, PI, 2 * PI, 5.0)), _ramphi_sine, _abs(1e-8)),
        S("ramphi-gauss-sum", "letters", "Cosine transform at rational multiples of pi by Gauss-type sums",
          "strict", tuple({"a": a, "b": b} for a in (1, 3, 5, 7) for b in (1, 3, 5, 7)), _ramphi_gauss,
          _abs(1e-8)),
        S("letter-cf-1", "letters", "First letter: continued fraction with square partial numerators", "strict",
          _grid({}), _letter_cf_1, _abs(1e-9)),
        S("letter-cf-2", "letters", "First letter: continued fraction with cubic partial numerators", "strict",
          _grid({}), _letter_cf_2, _abs(1e-9)),
        # transforms
        S("thetakernel-modular-1", "transforms", "Lost notebook: first modular relation for phi_w", "strict",
          _grid({"t": 0.5, "w": 1.0}, {"t": 1 / 3, "w": 0.5}, {"t": 1.0, "w": 2.0}), _modular_1, _abs(1e-9)),
        S("thetakernel-modular-1-psi", "transforms", "Lost notebook: first modular relation as printed with psi",
          "experimental", _grid({"t": 0.5, "w": 1.0, "kernel": "psi"}, {"t": 1 / 3, "w": 0.5, "kernel": "psi"},
                                {"t": 1.0, "w": 2.0, "kernel": "psi"}), _modular_1, _abs(1e-9)),
        S("thetakernel-modular-2", "transforms", "Lost notebook: second modular relation for psi_w", "strict",
          _grid({"t": 0.5, "w": 1.0}, {"t": 1 / 3, "w": 0.5}, {"t": 1.0, "w": 2.0}), _modular_2, _abs(1e-9)),
        S("mustafy-cos", "transforms", "Cosine evaluation with kernel sin(2 pi t x)/sinh(pi x)", "strict",
          _one("t", (0.05, 0.5, 1.0)), _mustafy("cos"), _abs(1e-8)),
        S("mustafy-sin", "transforms", "Sine evaluation with kernel sin(2 pi t x)/sinh(pi x)", "strict",
          _one("t", (0.05, 0.5, 1.0)), _mustafy("sin"), _abs(1e-8)),
        S("gamma-quad-product", "transforms", "Integral of a product of four reciprocal gamma functions", "loose",
          _grid({"alpha": 1.0, "beta": 1.0, "gamma_": 1.0, "delta": 1.0},
                {"alpha": 1.5, "beta": 1.5, "gamma_": 0.5, "delta": 0.5},
                {"alpha": 1.0, "beta": 1.0, "gamma_": 1.5, "delta": 0.5}), _gamma_quad, _abs(1e-4)),
        S("bessel-product", "transforms", "Fourier integral of a product of two Bessel quotients", "loose",
          _grid({"alpha": 1.0, "beta": 1.0, "x": 1.0, "y": 1.0}, {"alpha": 2.0, "beta": 1.0, "x": 1.0, "y": 2.0},
                {"alpha": 1.0, "beta": 1.0, "x": 0.01, "y": 0.01}), _bessel_product, _abs(1e-5)),
        S("riemann-eq12", "transforms", "Cosine transform of the Xi function against a theta series", "loose",
          _one("t", (0.0, 2.0)), _eq12, _abs(1e-5)),
        S("riemann-eq13", "transforms", "Xi-function integral equal to a theta-type expression", "standard",
          _one("n", (0.0, 0.5, 1.0, -0.5)), _eq13, _abs(1e-6)),
        S("f-ns-s0", "transforms", "Lost notebook page 220: the pair F(n, s) at s = 0", "loose",
          _grid({"n": 0.0, "s": 0.0}, {"n": 0.5, "s": 0.0}), _f_ns, _abs(1e-5)),
        S("f-ns-strip", "transforms", "Lost notebook page 220: the pair F(n, s) for s > 0", "experimental",
          _grid({"n": 0.0, "s": 0.5}, {"n": 0.0, "s": 0.75}, {"n": 0.0, "s": 1.5}), _f_ns, _abs(1e-5)),
        # mellin
        S("master-theorem", "mellin", "Master Theorem for curated coefficient functions", "strict",
          tuple({"F": "exp(-x)", "n": n} for n in (0.1, 0.25, 0.5, 0.75, 0.9)) + ({"F": "1/(1+x)", "n": 0.25},),
          _master, _abs(1e-9)),
        S("beta-from-master", "mellin", "Master Theorem representation of the beta function", "strict",
          _grid({"m": 1 / 3, "n": 2 / 3}, {"m": 0.5, "n": 0.5}, {"m": 0.25, "n": 1.5}), _beta_from_master,
          _abs(1e-10)),
        S("beta-closed-form", "mellin", "Mellin integral of (1+x)^-(m+n) against Gamma(m) Gamma(n) / Gamma(m+n)",
          "strict", _grid({"m": 1 / 3, "n": 2 / 3}, {"m": 0.5, "n": 0.5}, {"m": 0.25, "n": 1.5}), _beta_closed,
          _abs(1e-10)),
        S("q-beta", "mellin", "q-analogue of the beta integral", "strict",
          _grid({"s": 0.5, "a": 0.0, "q": 0.2}, {"s": 1 / 3, "a": 0.3, "q": 0.1}, {"s": 0.5, "a": 0.2, "q": 0.2}),
          _q_beta, _abs(1e-8)),
        S("frullani", "mellin", "Frullani's theorem", "strict",
          _grid({"f": "exp(-x)", "a": 1.0, "b": 2.0}, {"f": "exp(-x)", "a": 1.0, "b": 1.0},
                {"f": "1/(1+x)", "a": 2.0, "b": 1.0}), _frullani, Tolerance(1e-12, 1e-10)),
        S("frullani-generalized", "mellin", "Generalized Frullani limit via the Master Theorem", "standard",
          _grid({"g": "exp(-x)", "a": 1.0, "b": 3.0}, {"g": "1/(1+x)", "a": 1.0, "b": 1.0},
                {"g": "1/(1+x)", "a": 1.0, "b": 2.0}, {"g": "1/(1+x)", "a": 1.0, "b": 2.0, "route": "numeric"},
                {"g": "1/(1+x)", "a": 1.0, "b": 2.0, "ladder": "alternate"}), _frullani_generalized, _abs(1e-5)),
        # elliptic
        S("elliptic-addition", "elliptic", "Addition theorem with radical sqrt(1 - x^2 sin^2 gamma)", "strict",
          _grid({"alpha": 0.6, "beta": 0.6, "x": 0.5, "radical": "x^2"},
                {"alpha": 0.7, "beta": 0.9, "x": 0.3, "radical": "x^2"},
                {"alpha": 0.8, "beta": 1e-3, "x": 0.5, "radical": "x^2"}), _addition, _abs(1e-9)),
        S("elliptic-addition-radical-x", "elliptic", "Addition theorem with radical sqrt(1 - x sin^2 gamma)",
          "experimental",
          _grid({"alpha": 0.6, "beta": 0.6, "x": 0.5, "radical": "x"},
                {"alpha": 0.7, "beta": 0.9, "x": 0.3, "radical": "x"},
                {"alpha": 0.8, "beta": 1e-3, "x": 0.5, "radical": "x"}), _addition, _abs(1e-9)),
        S("entry-arccos", "elliptic", "Second notebook: arccos integral entry", "strict",
          _one("x", (0.0, 0.6, -0.6)), elliptic.entry_arccos_sides, _abs(1e-10)),
        S("entry-double-integral", "elliptic", "Second notebook: double integral of elliptic type", "strict",
          _one("x", (0.0, 0.5, 0.4, -0.4)), _double_integral, _abs(1e-8)),
        S("entry-double-integral-odd", "elliptic", "Double integral entry: oddness in x", "strict",
          _one("x", (0.4,)), _double_integral_odd, _abs(1e-9)),
        S("entry-page172", "elliptic", "Lost notebook page 172: modulus transformation", "strict",
          _grid({"x": 0.2, "alpha": 0.8}, {"x": 0.5, "alpha": 1.2}, {"x": 0.3, "alpha": 1e-3}), _page172,
          _abs(1e-9)),
        S("quartic-inversion", "elliptic", "Inversion series for int dt / sqrt(1 + t^4)", "strict",
          _one("v", (1.0, 0.5, 1e-3)), elliptic.quartic_inversion_sides, _abs(1e-10)),
        S("lemniscate-inversion", "elliptic", "Logarithmic inversion series for the lemniscate integral", "strict",
          _one("v", (1.0, 0.6, 0.05)), elliptic.lemniscate_inversion_sides, _abs(1e-10)),
        S("lemniscate-doubling", "elliptic", "Lemniscate integral under v = sqrt2 x / sqrt(1 + x^4)", "strict",
          _one("x", (1e-3, 1.0, 0.37)), elliptic.lemniscate_doubling_sides, _abs(1e-11)),
        S("lemniscate-series", "elliptic", "Lemniscate integral: quadrature against its binomial series", "strict",
          _one("v", (0.7, 1.0)), _lemniscate_series, _abs(1e-12)),
        # theta
        S("lemma-dlambda", "theta", "Lost notebook: logarithmic derivative of the degree-5 invariant", "standard",
          _one("q", (0.02, 0.05, 0.1, 0.2)), lostnb.lemma_dlambda_sides, Tolerance(0.0, 1e-6)),
        S("entry5-elliptic", "theta", "Lost notebook: degree-5 integral as incomplete elliptic integrals",
          "standard", tuple({"q": q, "form": f} for q in (0.01, 0.1, 0.25, 0.3) for f in ("arccos", "arctan")),
          _entry5, _abs(1e-7)),
        S("entry5-elliptic-printed", "theta", "Degree-5 arccos form without the factor 2", "experimental",
          tuple({"q": q, "form": "arccos-printed"} for q in (0.01, 0.1, 0.25, 0.3)), _entry5, _abs(1e-7)),
        S("entry5-constant-c", "theta", "Lost notebook: constant in the degree-5 integral relation", "loose",
          _one("q", (0.05, 0.15, 0.3)), _entry5_constant, Tolerance(0.0, 1e-4)),
        S("entry14", "theta", "Lost notebook: integral attached to the degree-14 modular equation", "strict",
          _one("q", (0.005, 0.02, 0.04, 0.05)), lostnb.entry14_sides, _abs(1e-8)),
        S("entry35", "theta", "Lost notebook: integral attached to the degree-35 modular equation", "strict",
          _one("q", (0.005, 0.03, 0.08)), lostnb.entry35_sides, _abs(1e-9)),
    ]
    ids = [s.id for s in specs]
    if len(ids) != len(set(ids)):
        raise RuntimeError("duplicate check ids")
    return tuple(specs)


def catalog() -> list[CheckSpec]:
    """Every registered check, in a stable order."""
    return list(_build_catalog())


@lru_cache(maxsize=1)
def _by_id() -> dict[str, CheckSpec]:
    return {s.id: s for s in _build_catalog()}


def get_check(check_id: str) -> CheckSpec:
    try:
        return _by_id()[check_id]
    except KeyError:
        raise KeyError(f"unknown check {check_id!r}") from None


def group_of(check_id: str) -> str:
    return get_check(check_id).group


# ---------------------------------------------------------------------------
# runner


def _failed(spec: CheckSpec, params: dict, status: str, message: str, ms: float) -> CheckOutcome:
    return CheckOutcome(spec.id, dict(params), None, None, math.nan, math.nan, status, ms, message)


def evaluate_point(check_id: str, index: int, tol_scale: float = 1.0) -> CheckOutcome:
    """Evaluate one grid point; evaluator exceptions become a failed (or
    experimental) outcome carrying the message."""
    spec = get_check(check_id)
    params = spec.grid[index]
    tol = spec.effective_tolerance.scaled(tol_scale)
    start = time.perf_counter()
    try:
        lhs, rhs = spec.evaluate(**params)
    except SkipCheck as exc:
        return _failed(spec, params, "skipped", str(exc), 1e3 * (time.perf_counter() - start))
    except Exception as exc:  # noqa: BLE001 - the run must continue
        status = "experimental" if spec.experimental else "fail"
        msg = f"{type(exc).__name__}: {exc}"
        return _failed(spec, params, status, msg, 1e3 * (time.perf_counter() - start))
    ms = 1e3 * (time.perf_counter() - start)
    out = compare(spec.id, params, lhs, rhs, tol, experimental=spec.experimental)
    return CheckOutcome(out.check_id, out.params, out.lhs, out.rhs, out.abs_residual, out.rel_residual,
                        out.status, ms)


def _evaluate_task(task: tuple[str, int, float]) -> CheckOutcome:
    return evaluate_point(*task)


@dataclass
class Report:
    outcomes: list[CheckOutcome]
    tol_scale: float = 1.0
    tool_version: str = __version__
    config_error: str = field(default="", compare=False)

    @property
    def summary(self) -> dict[str, int]:
        counts = {"pass": 0, "fail": 0, "skipped": 0, "experimental": 0}
        for o in self.outcomes:
            counts[o.status] += 1
        return counts

    @property
    def exit_code(self) -> int:
        return 1 if self.summary["fail"] else 0


def select(filter: str = "*", tiers: Iterable[str] | None = None, group: str | None = None) -> list[CheckSpec]:
    """Checks whose id matches the glob ``filter``, restricted to ``tiers`` and ``group``."""
    mask = set(TIERS if tiers is None else tiers)
    unknown = mask - set(TIERS)
    if unknown:
        raise ConfigError(f"unknown tier(s): {', '.join(sorted(unknown))}")
    if group is not None and group not in GROUPS:
        raise ConfigError(f"unknown section {group!r}")
    return [
        s for s in catalog()
        if fnmatch.fnmatchcase(s.id, filter) and s.tier in mask and (group is None or s.group == group)
    ]


def run(
    filter: str = "*",
    tiers: Iterable[str] | None = None,
    tol_scale: float = 1.0,
    jobs: int = 1,
) -> Report:
    """Evaluate every grid point of the selected checks.

    Outcomes are ordered by (check id, grid index) whatever ``jobs`` is.
    Raises ``ConfigError`` for tol_scale < 1, jobs < 1, unknown tiers or
    a filter that selects nothing.
    """
    if not (isinstance(tol_scale, (int, float)) and math.isfinite(tol_scale) and tol_scale >= 1.0):
        raise ConfigError("tol_scale must be a finite number >= 1")
    if jobs < 1:
        raise ConfigError("jobs must be >= 1")
    specs = select(filter, tiers)
    if not specs:
        raise ConfigError(f"no checks match filter {filter!r}")
    tasks = sorted((s.id, i, float(tol_scale)) for s in specs for i in range(len(s.grid)))
    if jobs == 1:
        outcomes = [_evaluate_task(t) for t in tasks]
    else:
        # map preserves task order
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_evaluate_task, tasks))
    return Report(outcomes, float(tol_scale))
