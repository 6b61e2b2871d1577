"""Continued fractions b0 + a1/(b1 + a2/(b2 + ...)) by the modified Lentz method."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .quadrature import QuadResult

TINY = 1e-30
MAX_TERMS = 100_000


@dataclass(frozen=True)
class CFGenerator:
    """``terms(n)`` returns ``(a_n, b_n)`` for ``n >= 1``."""

    b0: float
    terms: Callable[[int], tuple[float, float]]


def evaluate_cf(gen: CFGenerator, tol: float = 1e-15, max_terms: int = MAX_TERMS) -> QuadResult:
    """Evaluate a continued fraction with the modified Lentz algorithm.

    Stops once the multiplicative update differs from 1 by less than
    ``tol``.  The error estimate is the last change in the convergent, a
    true bound when all partial numerators and denominators are positive
    (successive convergents then bracket the limit).  Hitting
    ``max_terms`` returns ``converged=False``.
    """
    f = gen.b0 if abs(gen.b0) >= TINY else TINY
    c = f
    d = 0.0
    prev = f
    for n in range(1, max_terms + 1):
        a, b = gen.terms(n)
        d = b + a * d
        if abs(d) < TINY:
            d = TINY
        c = b + a / c
        if abs(c) < TINY:
            c = TINY
        d = 1.0 / d
        delta = c * d
        prev, f = f, f * delta
        if abs(delta - 1.0) < tol:
            return QuadResult(f, abs(f - prev), n, True)
    return QuadResult(f, abs(f - prev), max_terms, False)


def evaluate_backward(gen: CFGenerator, n_terms: int) -> float:
    """Evaluate the ``n_terms``-term truncation from the bottom up."""
    tail = 0.0
    for n in range(n_terms, 0, -1):
        a, b = gen.terms(n)
        tail = a / (b + tail)
    return gen.b0 + tail


def golden_cf() -> CFGenerator:
    """1/(1 + 1/(1 + ...)) = (sqrt 5 - 1)/2."""
    return CFGenerator(0.0, lambda n: (1.0, 1.0))


def _pair_index(n: int) -> int:
    # numerators run 1, 1, 1, 2, 2, 3, 3, ...: a_1 = 1, then (n//2) for n >= 2
    return 1 if n == 1 else n // 2


def squares_cf() -> CFGenerator:
    """1/(1 + 1^2/(1 + 1^2/(1 + 2^2/(1 + 2^2/(1 + 3^2/(1 + ...))))))."""
    return CFGenerator(0.0, lambda n: (float(_pair_index(n) ** 2), 1.0))


def cubes_cf() -> CFGenerator:
    """1/(1 + 1^3/(1 + 1^3/(3 + 2^3/(1 + 2^3/(5 + 3^3/(1 + 3^3/(7 + ...)))))))."""

    def terms(n: int) -> tuple[float, float]:
        b = 1.0 if n % 2 == 0 else float(n)
        return float(_pair_index(n) ** 3), b

    return CFGenerator(0.0, terms)


def rogers_ramanujan_cf(q: float) -> CFGenerator:
    """q^(1/5) / (1 + q/(1 + q^2/(1 + ...)))."""

    def terms(n: int) -> tuple[float, float]:
        return (q**0.2 if n == 1 else q ** (n - 1)), 1.0

    return CFGenerator(0.0, terms)
