"""q-Pochhammer products and the theta quotients built from them.

All nomes are real with ``0 < q < 1``; callers choose their own ceiling.
"""

from __future__ import annotations

import math

Q_MAX = 0.5


def _check_nome(q: float, q_max: float = Q_MAX) -> None:
    if not 0.0 < q <= q_max:
        raise ValueError(f"nome must satisfy 0 < q <= {q_max}, got {q}")


def qpochhammer_inf(a: float, q: float) -> float:
    """(a; q)_inf = prod_{k>=0} (1 - a q^k).

    The product stops at the first factor with ``|a| q^k < 1e-18 (1 - q)``,
    past which the remaining factors cannot move the result.
    """
    if not 0.0 <= q < 1.0:
        raise ValueError(f"need 0 <= q < 1, got {q}")
    cutoff = 1e-18 * (1.0 - q)
    prod = 1.0
    t = a
    while abs(t) >= cutoff:
        prod *= 1.0 - t
        t *= q
    return prod


def euler_f_neg(q: float) -> float:
    """Euler function f(-q) = (q; q)_inf."""
    return qpochhammer_inf(q, q)


def rr_cf_product(q: float) -> float:
    """Rogers-Ramanujan continued fraction u(q) from its product form."""
    _check_nome(q)
    q5 = q**5
    num = qpochhammer_inf(q, q5) * qpochhammer_inf(q**4, q5)
    den = qpochhammer_inf(q * q, q5) * qpochhammer_inf(q**3, q5)
    return q**0.2 * num / den


def lambda5(q: float) -> float:
    """lambda(q) = q f^6(-q^5) / f^6(-q)."""
    _check_nome(q)
    return q * (euler_f_neg(q**5) / euler_f_neg(q)) ** 6


def v14(q: float) -> float:
    """q (f(-q) f(-q^14) / (f(-q^2) f(-q^7)))^4."""
    _check_nome(q)
    ratio = euler_f_neg(q) * euler_f_neg(q**14) / (euler_f_neg(q * q) * euler_f_neg(q**7))
    return q * ratio**4


def v35(q: float) -> float:
    """q f(-q) f(-q^35) / (f(-q^5) f(-q^7))."""
    _check_nome(q)
    return q * euler_f_neg(q) * euler_f_neg(q**35) / (euler_f_neg(q**5) * euler_f_neg(q**7))


def log_euler_f_neg(q: float) -> float:
    """log f(-q), summed as logs to keep precision for q near 1."""
    if not 0.0 <= q < 1.0:
        raise ValueError(f"need 0 <= q < 1, got {q}")
    total = 0.0
    t = q
    cutoff = 1e-18 * (1.0 - q)
    while t >= cutoff:
        total += math.log1p(-t)
        t *= q
    return total
