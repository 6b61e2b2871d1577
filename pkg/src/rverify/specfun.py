"""Classical special functions in double precision.

Gamma family (complex log-gamma by shifted Stirling series, real
reciprocal gamma via reflection), digamma, Bessel J of real order by the
ascending series, dilogarithm, complete/incomplete elliptic integrals of the
first kind, Riemann zeta by Euler-Maclaurin summation, Riemann xi / Xi, and
Pochhammer symbols.
"""

from __future__ import annotations

import cmath
import math

from .quadrature import Tolerance, integrate_finite


class PoleError(ZeroDivisionError):
    """Argument sits on a pole of the function."""


class UnsupportedRangeError(ValueError):
    """Argument outside the range the implementation certifies."""


# B_2k for k = 1..8
_BERNOULLI = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
)
# B_2k / (2k (2k-1)), the Stirling coefficients
_STIRLING = tuple(b / (2 * k * (2 * k - 1)) for k, b in enumerate(_BERNOULLI, 1))
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)
_STIRLING_MIN = 15.0

EULER_GAMMA = 0.57721566490153286061


def _is_nonpositive_integer(x: float) -> bool:
    return x <= 0 and x == math.floor(x)


def sinpi(x: float) -> float:
    """sin(pi x) with exact argument reduction (accurate near integers)."""
    n = round(x)
    r = x - n
    s = math.sin(math.pi * r)
    return -s if n % 2 else s


def _stirling(z):
    inv = 1.0 / z
    inv2 = inv * inv
    series = 0.0
    p = inv
    for c in _STIRLING:
        series += c * p
        p *= inv2
    return (z - 0.5) * (cmath.log(z) if isinstance(z, complex) else math.log(z)) - z + _HALF_LOG_2PI + series


def ln_gamma(z: complex) -> complex:
    """log Gamma(z) for complex ``z``.

    The branch is the one continuous in the plane cut along the negative
    real axis and real for ``z > 0`` (the usual ``loggamma``), so
    ``exp(ln_gamma(z)) == Gamma(z)`` and ``ln_gamma(conj z) == conj ln_gamma(z)``.
    Arguments with small or negative real part are shifted up by the
    recurrence before the Stirling series is applied.
    """
    z = complex(z)
    if z.imag == 0.0 and _is_nonpositive_integer(z.real):
        raise PoleError(f"Gamma has a pole at {z.real:g}")
    if z.real > 0.0 and abs(z) >= _STIRLING_MIN:
        return _stirling(z)
    n = max(0, math.ceil(_STIRLING_MIN - z.real))
    acc = 0j
    w = z
    for _ in range(n):
        acc += cmath.log(w)
        w += 1.0
    result = _stirling(w) - acc
    if z.imag == 0.0:
        # keep conj-symmetry exact on the real axis
        result = complex(result.real, result.imag if z.real < 0 else 0.0)
    return result


def ln_gamma_real(x: float) -> tuple[float, float]:
    """``(log|Gamma(x)|, sign Gamma(x))`` for real ``x``, from the C library."""
    x = float(x)
    if _is_nonpositive_integer(x):
        raise PoleError(f"Gamma has a pole at {x:g}")
    sign = 1.0 if x > 0 or math.floor(x) % 2 == 0 else -1.0
    return math.lgamma(x), sign


def gamma(z: complex | float) -> complex | float:
    """Gamma function; real in, real out."""
    if isinstance(z, complex):
        return cmath.exp(ln_gamma(z))
    z = float(z)
    if _is_nonpositive_integer(z):
        raise PoleError(f"Gamma has a pole at {z:g}")
    return math.gamma(z)


def recip_gamma(x: float) -> float:
    """1/Gamma(x) for any real ``x`` (zero at the poles of Gamma)."""
    x = float(x)
    if _is_nonpositive_integer(x):
        return 0.0
    if x > 171.0:
        return math.exp(-math.lgamma(x))
    if x < -170.0:
        # 1/Gamma(x) = sin(pi x) Gamma(1 - x) / pi, Gamma(1 - x) overflowing
        return sinpi(x) * math.exp(math.lgamma(1.0 - x)) / math.pi
    return 1.0 / math.gamma(x)


def gamma_ratio(x: float, a: float, b: float) -> float:
    """Gamma(x + a) / Gamma(x + b) for ``x + a, x + b > 0``.

    For large ``x`` the Stirling logarithms are differenced term by term so
    the ratio stays accurate when ``x`` is huge.
    """
    if x + a <= 0 or x + b <= 0:
        raise ValueError("gamma_ratio needs x + a > 0 and x + b > 0")
    if x < 20.0:
        return math.exp(ln_gamma_real(x + a)[0] - ln_gamma_real(x + b)[0])
    xa, xb = x + a, x + b
    log_ratio = (a - b) * math.log(x) + (xa - 0.5) * math.log1p(a / x) - (xb - 0.5) * math.log1p(b / x)
    log_ratio -= a - b
    ia, ib = 1.0 / xa, 1.0 / xb
    pa, pb = ia, ib
    for c in _STIRLING:
        log_ratio += c * (pa - pb)
        pa *= ia * ia
        pb *= ib * ib
    return math.exp(log_ratio)


def digamma(x: float) -> float:
    """psi(x) = Gamma'(x)/Gamma(x) for ``x > 0``."""
    if not x > 0:
        raise ValueError("digamma implemented for x > 0 only")
    acc = 0.0
    while x < 10.0:
        acc -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    series = 0.0
    p = inv2
    for k, b in enumerate(_BERNOULLI, 1):
        series += b / (2 * k) * p
        p *= inv2
    return acc + math.log(x) - 0.5 / x - series


def pochhammer(a: float, n: int) -> float:
    """Rising factorial (a)_n = a (a+1) ... (a+n-1)."""
    if n < 0 or int(n) != n:
        raise ValueError("n must be a nonnegative integer")
    p = 1.0
    for k in range(int(n)):
        p *= a + k
    return p


# ---------------------------------------------------------------------------
# Bessel functions

_BESSEL_X_MAX = 12.0
_BESSEL_NU_RANGE = (-5.0, 40.0)


def bessel_j_scaled(nu: float, x: float) -> float:
    """J_nu(x) / x**nu as the entire series

        sum_k (-1)^k (x/2)^(2k) / (2^nu k! Gamma(k+nu+1))

    valid for every real ``nu`` (the reciprocal gamma makes it entire in
    ``nu``).  Used where the order runs over the whole real line.
    """
    q = -0.25 * x * x
    r = recip_gamma(nu + 1.0)
    term_pow = 1.0  # q^k / k!
    total = 0.0
    k = 0
    while True:
        term = term_pow * r
        total += term
        a = k + nu + 1.0
        k += 1
        if k > 2 and r != 0.0 and abs(term) <= 1e-17 * abs(total) and abs(q) < k * abs(a + 1.0):
            break
        if k > 500:
            break
        term_pow *= q / k
        if r == 0.0 or a == 0.0:
            r = recip_gamma(a + 1.0)
        else:
            r /= a
    return total * 2.0 ** (-nu)


def bessel_j(nu: float, x: float) -> float:
    """Bessel function J_nu(x) by the ascending series.

    Supported for ``0 < x <= 12`` and ``-5 <= nu <= 40``; outside that range
    an ``UnsupportedRangeError`` is raised rather than returning a value the
    series cannot deliver accurately.
    """
    if not 0.0 < x <= _BESSEL_X_MAX:
        raise UnsupportedRangeError(f"bessel_j supports 0 < x <= {_BESSEL_X_MAX}, got {x}")
    if not _BESSEL_NU_RANGE[0] <= nu <= _BESSEL_NU_RANGE[1]:
        raise UnsupportedRangeError(f"bessel_j supports nu in {_BESSEL_NU_RANGE}, got {nu}")
    return bessel_j_scaled(nu, x) * x**nu


# ---------------------------------------------------------------------------
# Dilogarithm


def li2(x: float) -> float:
    """Real dilogarithm for ``x <= 1``."""
    if x > 1.0:
        raise ValueError("li2 implemented for x <= 1")
    if x == 1.0:
        return math.pi**2 / 6.0
    if x < -0.5:
        # Landen: maps (-inf, -1/2) into (1/3, 1)
        y = x / (x - 1.0)
        return -li2(y) - 0.5 * math.log1p(-x) ** 2
    if x > 0.5:
        return math.pi**2 / 6.0 - math.log(x) * math.log1p(-x) - li2(1.0 - x)
    total = 0.0
    p = x
    n = 1
    while True:
        t = p / (n * n)
        total += t
        if abs(t) <= 1e-17 * abs(total) or p == 0.0:
            break
        n += 1
        p *= x
    return total


# ---------------------------------------------------------------------------
# Elliptic integrals (parameter m = k^2)


def agm(a: float, b: float) -> float:
    while abs(a - b) > 1e-15 * abs(a):
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return 0.5 * (a + b)


def elliptic_k(m: float) -> float:
    """Complete elliptic integral K(m) = int_0^{pi/2} (1 - m sin^2)^(-1/2)."""
    if not 0.0 <= m < 1.0:
        raise ValueError(f"elliptic_k needs 0 <= m < 1, got {m}")
    return math.pi / (2.0 * agm(1.0, math.sqrt(1.0 - m)))


_F_TOL = Tolerance(abs_tol=1e-16, rel_tol=5e-14)


def elliptic_f_incomplete(phi: float, m: float) -> float:
    """Incomplete elliptic integral F(phi | m) by adaptive quadrature.

    ``phi`` in ``[0, pi/2]`` is integrated directly.  Other amplitudes are
    reduced with F(-phi) = -F(phi) and F(phi + k pi) = F(phi) + 2k K(m).
    """
    if not 0.0 <= m < 1.0:
        raise ValueError(f"elliptic_f_incomplete needs 0 <= m < 1, got {m}")
    if phi < 0.0:
        return -elliptic_f_incomplete(-phi, m)
    half = 0.5 * math.pi
    if phi > half:
        k = round(phi / math.pi)
        rest = phi - k * math.pi
        return 2 * k * elliptic_k(m) + elliptic_f_incomplete(rest, m)
    if m == 0.0:
        return phi

    def integrand(t: float) -> float:
        s = math.sin(t)
        return 1.0 / math.sqrt(1.0 - m * s * s)

    return integrate_finite(integrand, 0.0, phi, _F_TOL).real


# ---------------------------------------------------------------------------
# Zeta and xi

_ZETA_RE_MIN = -2.0
_EM_TERMS = 8
# B_2k / (2k)!
_EM_COEF = tuple(b / math.factorial(2 * k) for k, b in enumerate(_BERNOULLI, 1))


def zeta(s: complex) -> complex:
    """Riemann zeta by Euler-Maclaurin summation with 8 Bernoulli terms.

    ``N = max(20, 2|Im s|)`` leading terms are summed directly.  Supported
    for ``Re s > -2``.
    """
    s = complex(s)
    if s == 1:
        raise PoleError("zeta has a pole at s = 1")
    if s.real <= _ZETA_RE_MIN:
        raise UnsupportedRangeError(f"zeta supported for Re s > {_ZETA_RE_MIN}, got {s}")
    n_terms = max(20, math.ceil(2.0 * abs(s.imag)))
    total = 0j
    for n in range(1, n_terms):
        total += cmath.exp(-s * math.log(n))
    big_n = float(n_terms)
    log_n = math.log(big_n)
    n_pow = cmath.exp(-s * log_n)  # N^{-s}
    total += big_n * n_pow / (s - 1.0) + 0.5 * n_pow
    rising = s  # s (s+1) ... (s+2k-2)
    p = n_pow / big_n  # N^{-s-1}
    inv_n2 = 1.0 / (big_n * big_n)
    for k in range(_EM_TERMS):
        total += _EM_COEF[k] * rising * p
        rising *= (s + 2 * k + 1) * (s + 2 * k + 2)
        p *= inv_n2
    return total


def xi(s: complex) -> complex:
    """Riemann xi(s) = s(s-1)/2 pi^{-s/2} Gamma(s/2) zeta(s)."""
    s = complex(s)
    if s == 0 or s == 1:
        return 0.5 + 0j
    log_part = ln_gamma(0.5 * s) - 0.5 * s * math.log(math.pi)
    return 0.5 * s * (s - 1.0) * cmath.exp(log_part) * zeta(s)


def xi_big(t: complex) -> complex:
    """Riemann Xi(t) = xi(1/2 + i t); real and even for real ``t``."""
    return xi(0.5 + 1j * complex(t))
