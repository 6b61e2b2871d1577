"""Numerical integration, summation, root finding and differentiation.

Every integral and series evaluated elsewhere in the package goes through
this module.  The engines are plain double precision:

* ``integrate_finite``: adaptive 7/15-point Gauss-Kronrod bisection.
* ``integrate_singular``: tanh-sinh (double exponential) rule on [a, b].
* ``integrate_semi_infinite``: exp-sinh rule on [a, inf).
* ``integrate_oscillatory``: panel sums between known zeros, accelerated
  with the Levin u-transform.
* ``sum_series``: direct summation with a geometric tail bound, optionally
  Levin-accelerated.

All integrands may return real or complex numbers.  Results are returned as
``QuadResult`` whose ``value`` is always a Python ``complex``; for a real
integrand the imaginary part is exactly zero.
"""

from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

from scipy.optimize import brentq

EPS = 2.220446049250313e-16

# Double-exponential settings.  Nodes closer than _DE_MIN_GAP (relative) to a
# finite endpoint, or further than _DE_MAX_SPAN from the lower limit of an
# infinite range, are not evaluated.
_DE_MAX_LEVEL = 12
_DE_MIN_GAP = 1e-150
_DE_MAX_SPAN = 1e150
_TS_TMAX = math.asinh(math.log(1.0 / _DE_MIN_GAP) / math.pi)
_ES_TMAX = math.asinh(2.0 * math.log(_DE_MAX_SPAN) / math.pi)

_GK_MAX_PANELS = 2000


class QuadratureError(ArithmeticError):
    """Raised when an operation cannot produce a value at all."""


class RootError(QuadratureError):
    """Root finding failed (no sign change or no convergence)."""


@dataclass(frozen=True)
class Tolerance:
    """Acceptance rule ``|err| <= abs_tol + rel_tol * |value|``."""

    abs_tol: float = 1e-13
    rel_tol: float = 1e-12

    def __post_init__(self) -> None:
        if self.abs_tol < 0 or self.rel_tol < 0:
            raise ValueError("tolerances must be nonnegative")
        if self.abs_tol == 0 and self.rel_tol == 0:
            raise ValueError("at least one of abs_tol, rel_tol must be positive")

    def bound(self, value: complex | float) -> float:
        return self.abs_tol + self.rel_tol * abs(value)

    def accepts(self, err: float, value: complex | float) -> bool:
        return err <= self.bound(value)

    def scaled(self, factor: float) -> "Tolerance":
        return Tolerance(self.abs_tol * factor, self.rel_tol * factor)


DEFAULT_TOL = Tolerance()


@dataclass(frozen=True)
class QuadResult:
    value: complex
    error_estimate: float
    evaluations: int
    converged: bool

    def __post_init__(self) -> None:
        if not self.error_estimate >= 0:
            raise ValueError("error estimate must be nonnegative")

    @property
    def real(self) -> float:
        return self.value.real

    def __add__(self, other: "QuadResult") -> "QuadResult":
        return QuadResult(
            self.value + other.value,
            self.error_estimate + other.error_estimate,
            self.evaluations + other.evaluations,
            self.converged and other.converged,
        )

    def scaled(self, factor: complex | float) -> "QuadResult":
        return QuadResult(
            complex(self.value * factor),
            self.error_estimate * abs(factor),
            self.evaluations,
            self.converged,
        )


# ---------------------------------------------------------------------------
# Gauss-Kronrod 7/15

_XGK = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
)
_WGK = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
)
_WG = (
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
)


def _gk15(f: Callable, a: float, b: float) -> tuple[complex, float, float]:
    """One Kronrod panel: (value, error, |f| integral) with QUADPACK scaling."""
    c = 0.5 * (a + b)
    h = 0.5 * (b - a)
    fc = f(c)
    res_k = fc * _WGK[7]
    res_g = fc * _WG[3]
    res_abs = abs(fc) * _WGK[7]
    fv1 = [0j] * 7
    fv2 = [0j] * 7
    for j in range(7):
        dx = h * _XGK[j]
        f1 = f(c - dx)
        f2 = f(c + dx)
        fv1[j] = f1
        fv2[j] = f2
        s = f1 + f2
        res_k += _WGK[j] * s
        res_abs += _WGK[j] * (abs(f1) + abs(f2))
        if j % 2 == 1:
            res_g += _WG[j // 2] * s
    mean = res_k * 0.5
    res_asc = _WGK[7] * abs(fc - mean)
    for j in range(7):
        res_asc += _WGK[j] * (abs(fv1[j] - mean) + abs(fv2[j] - mean))
    value = res_k * h
    diff = (res_k - res_g) * h
    res_abs *= abs(h)
    res_asc *= abs(h)
    err = abs(diff)
    if res_asc != 0.0 and err != 0.0:
        err = res_asc * min(1.0, (200.0 * err / res_asc) ** 1.5)
    if res_abs > 0.0:
        err = max(err, 50.0 * EPS * res_abs)
    return value, err, res_abs


def integrate_finite(
    f: Callable[[float], complex],
    a: float,
    b: float,
    tol: Tolerance = DEFAULT_TOL,
    max_panels: int = _GK_MAX_PANELS,
) -> QuadResult:
    """Adaptive Gauss-Kronrod quadrature of ``f`` over ``[a, b]``.

    The panel with the largest error estimate is bisected until the summed
    estimate meets ``tol`` or ``max_panels`` is reached (``converged=False``).
    """
    if not a < b:
        if a == b:
            return QuadResult(0j, 0.0, 0, True)
        raise ValueError(f"integrate_finite needs a < b, got [{a}, {b}]")
    counter = itertools.count()
    v, e, _ = _gk15(f, a, b)
    heap = [(-e, next(counter), a, b, v)]
    total, err_total = v, e
    evals = 15
    while not tol.accepts(err_total, total):
        if len(heap) >= max_panels:
            break
        neg_e, _, lo, hi, pv = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            heapq.heappush(heap, (neg_e, next(counter), lo, hi, pv))
            break
        v1, e1, _ = _gk15(f, lo, mid)
        v2, e2, _ = _gk15(f, mid, hi)
        evals += 30
        heapq.heappush(heap, (-e1, next(counter), lo, mid, v1))
        heapq.heappush(heap, (-e2, next(counter), mid, hi, v2))
        total += v1 + v2 - pv
        err_total += e1 + e2 + neg_e
        if len(heap) % 64 == 0:
            # periodic re-sum keeps the running totals from drifting
            total = sum(item[4] for item in heap)
            err_total = sum(-item[0] for item in heap)
    return QuadResult(complex(total), float(err_total), evals, tol.accepts(err_total, total))


# ---------------------------------------------------------------------------
# Double exponential rules


class _DERule:
    """Shared machinery for tanh-sinh and exp-sinh.

    Subclasses define ``_node(t) -> (x, w)`` or ``None`` when the node is
    unusable (too close to an endpoint or beyond the span).
    """

    t_lo: float
    t_hi: float

    def _node(self, t: float) -> tuple[float, float] | None:
        raise NotImplementedError

    def run(self, f: Callable, tol: Tolerance, max_level: int) -> QuadResult:
        h = 0.5
        evals = 0

        def visit(t: float) -> tuple[complex, float]:
            node = self._node(t)
            if node is None:
                return 0j, 0.0
            x, w = node
            wy = w * f(x)
            return wy, abs(wy)

        # Level 0 walks outward from t = 0 and fixes the usable t-range: a
        # side ends at the first node where f overflows or is non-finite, or
        # after three consecutive negligible terms.
        center, center_abs = visit(0.0)
        evals += 1
        s_sum = center
        s_abs = center_abs
        limits = []
        edge = 0.0
        for direction in (1, -1):
            bound = self.t_hi if direction > 0 else -self.t_lo
            k = 0
            small = 0
            last_t = 0.0
            last_term = 0.0
            while True:
                k += 1
                t = direction * k * h
                if abs(t) > bound:
                    break
                try:
                    v, va = visit(t)
                except (OverflowError, ZeroDivisionError):
                    break
                evals += 1
                if not math.isfinite(va):
                    break
                s_sum += v
                s_abs += va
                last_t = t
                last_term = va
                if va <= 1e-20 * s_abs:
                    small += 1
                    if small >= 3:
                        break
                else:
                    small = 0
            limits.append(last_t)
            edge = max(edge, last_term)
        t_hi, t_lo = limits[0], limits[1]
        estimate = s_sum * h
        prev = estimate
        err = math.inf
        converged = False
        level = 0
        while level < max_level:
            level += 1
            h /= 2.0
            k_lo = math.ceil(t_lo / h)
            k_hi = math.floor(t_hi / h)
            start = k_lo if k_lo % 2 else k_lo + 1
            for k in range(start, k_hi + 1, 2):
                v, va = visit(k * h)
                s_sum += v
                s_abs += va
                evals += 1
            estimate = s_sum * h
            err = max(abs(estimate - prev), 50.0 * EPS * s_abs * h)
            prev = estimate
            if level >= 3 and tol.accepts(err, estimate):
                converged = True
                break
        if edge * h > tol.bound(estimate):
            # outermost samples still carry weight: integrand not decaying
            converged = False
        return QuadResult(complex(estimate), float(err), evals, converged)


class _TanhSinh(_DERule):
    def __init__(self, a: float, b: float):
        self.a = a
        self.b = b
        self.width = b - a
        self.t_lo = -_TS_TMAX
        self.t_hi = _TS_TMAX

    def _node(self, t: float) -> tuple[float, float] | None:
        u = 0.5 * math.pi * math.sinh(abs(t))
        e = math.exp(-2.0 * u)
        d = e / (1.0 + e)  # fractional distance from the near endpoint
        if d < _DE_MIN_GAP:
            return None
        w = self.width * 0.5 * math.pi * math.cosh(t) * 2.0 * e / (1.0 + e) ** 2
        if t >= 0:
            x = self.b - self.width * d
        else:
            x = self.a + self.width * d
        if x <= self.a or x >= self.b:
            return None
        return x, w


class _ExpSinh(_DERule):
    def __init__(self, a: float):
        self.a = a
        self.t_lo = -_ES_TMAX
        self.t_hi = _ES_TMAX

    def _node(self, t: float) -> tuple[float, float] | None:
        u = 0.5 * math.pi * math.sinh(t)
        y = math.exp(u)
        x = self.a + y
        if x == self.a:
            return None
        return x, 0.5 * math.pi * math.cosh(t) * y


def integrate_singular(
    f: Callable[[float], complex],
    a: float,
    b: float,
    tol: Tolerance = DEFAULT_TOL,
    max_level: int = _DE_MAX_LEVEL,
) -> QuadResult:
    """Tanh-sinh quadrature on ``[a, b]``; tolerates integrable endpoint
    singularities (algebraic or logarithmic).  ``f`` is never evaluated at
    ``a`` or ``b`` themselves."""
    if not a < b:
        if a == b:
            return QuadResult(0j, 0.0, 0, True)
        raise ValueError(f"integrate_singular needs a < b, got [{a}, {b}]")
    return _TanhSinh(a, b).run(f, tol, max_level)


def integrate_semi_infinite(
    f: Callable[[float], complex],
    a: float,
    tol: Tolerance = DEFAULT_TOL,
    max_level: int = _DE_MAX_LEVEL,
) -> QuadResult:
    """Exp-sinh quadrature on ``[a, inf)``.

    The substitution ``x = a + exp(pi/2 sinh t)`` maps the range onto the
    real ``t`` line; an integrable singularity at ``a`` is allowed.  If the
    outermost weighted samples are not negligible the integrand is treated
    as non-decaying and ``converged`` is False.
    """
    return _ExpSinh(a).run(f, tol, max_level)


# ---------------------------------------------------------------------------
# Sequence acceleration


def levin_u(partial_sums: Sequence[complex], beta: float = 1.0) -> tuple[complex, float]:
    """Levin u-transform of a sequence of partial sums.

    Returns ``(limit estimate, error estimate)``.  Works for both alternating
    and logarithmically convergent sequences whose terms have an asymptotic
    expansion in ``1/k``.  Only the last ``<= 16`` entries are used since the
    transform loses accuracy to cancellation beyond that.
    """
    s = list(partial_sums)
    n_total = len(s)
    if n_total < 3:
        raise ValueError("need at least three partial sums")
    window = min(n_total, 16)
    offset = n_total - window
    seq = s[offset:]
    terms = [seq[0] - (s[offset - 1] if offset else 0.0)]
    terms += [seq[j] - seq[j - 1] for j in range(1, window)]
    prev = None
    estimates = []
    for k in range(1, window):
        num = 0j
        den = 0j
        ok = True
        for j in range(k + 1):
            a_j = terms[j]
            if a_j == 0:
                ok = False
                break
            omega = (beta + offset + j) * a_j
            c = (-1) ** j * math.comb(k, j) * ((beta + offset + j) / (beta + offset + k)) ** (k - 1)
            num += c * seq[j] / omega
            den += c / omega
        if not ok or den == 0:
            break
        est = num / den
        if prev is not None:
            estimates.append((abs(est - prev), est))
        prev = est
    if not estimates:
        return complex(s[-1]), abs(s[-1] - s[-2])
    # prefer the later transforms; take the one with the smallest step among
    # the last few to guard against the cancellation-dominated tail
    tail = estimates[-6:]
    err, est = min(tail, key=lambda p: p[0])
    return complex(est), float(err)


def integrate_oscillatory(
    f: Callable[[float], complex],
    zeros: Iterable[float],
    tol: Tolerance = DEFAULT_TOL,
    max_panels: int = 400,
    min_panels: int = 8,
) -> QuadResult:
    """Integrate ``f`` over ``[z0, inf)`` panel by panel.

    ``zeros`` is a strictly increasing sequence beginning with the lower
    limit; each following entry should be a sign change (or period boundary)
    of the oscillatory factor.  Panels are integrated with
    ``integrate_finite``.  When panel contributions die out the sum is taken
    directly; otherwise the partial sums are extrapolated with the Levin
    u-transform.  The reported error is the panel error total plus the
    acceleration residual.
    """
    it: Iterator[float] = iter(zeros)
    try:
        left = float(next(it))
    except StopIteration:
        raise ValueError("zeros must contain at least the lower limit") from None
    panel_tol = Tolerance(tol.abs_tol * 0.1, tol.rel_tol * 0.1)
    sums: list[complex] = []
    total = 0j
    panel_err = 0.0
    evals = 0
    quiet = 0
    accel_est: complex | None = None
    accel_err = math.inf
    for right in it:
        right = float(right)
        if not right > left:
            raise ValueError("zeros must be strictly increasing")
        r = integrate_finite(f, left, right, panel_tol)
        evals += r.evaluations
        panel_err += r.error_estimate
        total += r.value
        sums.append(total)
        left = right
        n = len(sums)
        if abs(r.value) <= 0.01 * tol.bound(total):
            quiet += 1
        else:
            quiet = 0
        if quiet >= 3 and n >= min_panels:
            err = panel_err + abs(r.value)
            return QuadResult(complex(total), err, evals, tol.accepts(err, total))
        if n >= min_panels and n >= 6:
            est, aerr = levin_u(sums)
            if accel_est is not None:
                aerr = max(aerr, abs(est - accel_est))
            accel_est = est
            accel_err = aerr
            if tol.accepts(aerr + panel_err, est) and n >= min_panels + 2:
                return QuadResult(complex(est), aerr + panel_err, evals, True)
        if n >= max_panels:
            break
    if accel_est is None:
        return QuadResult(complex(total), math.inf if sums else 0.0, evals, False)
    err = accel_err + panel_err
    return QuadResult(complex(accel_est), err, evals, tol.accepts(err, accel_est))


def integrate_line(
    f: Callable[[float], complex],
    tol: Tolerance = DEFAULT_TOL,
    right_zeros: Iterable[float] | None = None,
    left_zeros: Iterable[float] | None = None,
) -> QuadResult:
    """Integral over the whole real line, split at the origin.

    With ``right_zeros``/``left_zeros`` the corresponding half is done by
    ``integrate_oscillatory``; ``left_zeros`` are given for ``x -> f(-x)``,
    i.e. as positive numbers starting at 0.
    """
    half_tol = Tolerance(tol.abs_tol / 2, tol.rel_tol)

    def reflected(x: float) -> complex:
        return f(-x)

    if right_zeros is None:
        right = integrate_semi_infinite(f, 0.0, half_tol)
    else:
        right = integrate_oscillatory(f, right_zeros, half_tol)
    if left_zeros is None:
        left = integrate_semi_infinite(reflected, 0.0, half_tol)
    else:
        left = integrate_oscillatory(reflected, left_zeros, half_tol)
    return right + left


def sum_series(
    term: Callable[[int], complex],
    tol: Tolerance = DEFAULT_TOL,
    start: int = 1,
    method: str = "direct",
    max_terms: int = 100_000,
    em_cutoff: int = 256,
) -> QuadResult:
    """Sum ``term(n)`` for ``n >= start``.

    ``method`` selects how the tail is handled:

    ``"direct"``
        Add terms until a geometric bound on the tail (ratio of the last two
        nonzero terms) meets ``tol``.  Detected non-decay gives
        ``converged=False``.
    ``"levin"``
        Levin u-transform of the partial sums; suited to alternating series.
    ``"euler-maclaurin"``
        Slowly convergent series whose term is a smooth real function of a
        real argument: sum explicitly up to a cutoff ``N`` and replace the rest by
        ``int_N^inf term + term(N)/2 - term'(N)/12``.  The error estimate is
        the change when the cutoff is doubled.
    """
    if method == "direct":
        return _sum_direct(term, tol, start, max_terms)
    if method == "levin":
        return _sum_levin(term, tol, start)
    if method == "euler-maclaurin":
        return _sum_euler_maclaurin(term, tol, start, em_cutoff)
    raise ValueError(f"unknown summation method {method!r}")


def _sum_direct(term, tol, start, max_terms):
    total = 0j
    prev_mag = None
    growth = 0
    zeros = 0
    last = math.inf
    for count, n in enumerate(range(start, start + max_terms), 1):
        t = term(n)
        total += t
        mag = abs(t)
        if mag == 0.0:
            zeros += 1
            if zeros >= 3:
                return QuadResult(complex(total), 0.0, count, True)
            continue
        zeros = 0
        if prev_mag is not None:
            r = mag / prev_mag
            if r < 1.0:
                growth = 0
                last = mag * r / (1.0 - r)
                if last <= 0.5 * tol.bound(total):
                    return QuadResult(complex(total), last, count, True)
            else:
                growth += 1
                if growth >= 50:
                    return QuadResult(complex(total), math.inf, count, False)
        prev_mag = mag
    return QuadResult(complex(total), last, max_terms, False)


def _sum_levin(term, tol, start, max_terms=40):
    sums: list[complex] = []
    total = 0j
    last_est = None
    est, err = 0j, math.inf
    for count, n in enumerate(range(start, start + max_terms), 1):
        total += term(n)
        sums.append(total)
        if count < 6:
            continue
        est, err = levin_u(sums)
        if last_est is not None:
            err = max(err, abs(est - last_est))
        last_est = est
        if count >= 10 and tol.accepts(err, est):
            return QuadResult(complex(est), err, count, True)
    return QuadResult(complex(est), err, max_terms, tol.accepts(err, est))


def _sum_euler_maclaurin(term, tol, start, cutoff):
    cutoff = max(cutoff, start + 8)

    def with_cutoff(n_cut: int, head: complex) -> tuple[complex, int]:
        tail = integrate_semi_infinite(
            lambda x: term(n_cut + x), 0.0, Tolerance(tol.abs_tol * 0.01, tol.rel_tol * 0.01)
        )
        h = max(1e-3 * n_cut, 1e-2)
        deriv, _ = differentiate(term, float(n_cut), h)
        return head + tail.value + 0.5 * term(n_cut) - deriv / 12.0, tail.evaluations

    head = 0j
    for n in range(start, cutoff):
        head += term(n)
    first, ev1 = with_cutoff(cutoff, head)
    for n in range(cutoff, 2 * cutoff):
        head += term(n)
    second, ev2 = with_cutoff(2 * cutoff, head)
    err = abs(second - first)
    evals = 2 * cutoff - start + ev1 + ev2
    return QuadResult(complex(second), err, evals, tol.accepts(err, second))


# ---------------------------------------------------------------------------
# Roots and derivatives


def find_root(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = 1e-15,
    maxiter: int = 200,
) -> float:
    """Root of ``f`` in ``[lo, hi]`` by Brent's bracketing method.

    Raises ``RootError`` when ``f(lo)`` and ``f(hi)`` have the same sign or
    the iteration budget is exhausted.
    """
    flo = f(lo)
    fhi = f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise RootError(f"no sign change on [{lo}, {hi}]: f={flo:.3g}, {fhi:.3g}")
    try:
        root, info = brentq(f, lo, hi, xtol=tol, rtol=4 * EPS, maxiter=maxiter, full_output=True)
    except RuntimeError as exc:
        raise RootError(str(exc)) from exc
    if not info.converged:
        raise RootError(f"root finder did not converge: {info.flag}")
    return root


def differentiate(
    f: Callable[[float], float],
    x: float,
    h0: float = 0.1,
    ntab: int = 12,
) -> tuple[float, float]:
    """Derivative of ``f`` at ``x`` by Richardson-extrapolated central
    differences.  Returns ``(value, error_estimate)``.

    Steps shrink by a factor 1.4 per row; the tableau is abandoned as soon as
    the error grows by more than a factor 2 (round-off takes over), and the
    best entry seen so far is returned.
    """
    if h0 <= 0:
        raise ValueError("h0 must be positive")
    con = 1.4
    con2 = con * con
    h = h0
    table = [[(f(x + h) - f(x - h)) / (2.0 * h)]]
    best = table[0][0]
    err = math.inf
    for i in range(1, ntab):
        h /= con
        row = [(f(x + h) - f(x - h)) / (2.0 * h)]
        fac = con2
        for j in range(1, i + 1):
            row.append((row[j - 1] * fac - table[i - 1][j - 1]) / (fac - 1.0))
            fac *= con2
            e = max(abs(row[j] - row[j - 1]), abs(row[j] - table[i - 1][j - 1]))
            if e <= err:
                err = e
                best = row[j]
        table.append(row)
        if abs(row[i] - table[i - 1][i - 1]) >= 2.0 * err:
            break
    return best, err
