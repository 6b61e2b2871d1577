import cmath
import math

import mpmath as mp
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st
from scipy import special as sp

from rverify.quadrature import Tolerance, integrate_finite, integrate_semi_infinite
from rverify.specfun import (
    EULER_GAMMA,
    PoleError,
    UnsupportedRangeError,
    agm,
    bessel_j,
    bessel_j_scaled,
    digamma,
    elliptic_f_incomplete,
    elliptic_k,
    gamma,
    gamma_ratio,
    li2,
    ln_gamma,
    ln_gamma_real,
    pochhammer,
    recip_gamma,
    sinpi,
    xi,
    xi_big,
    zeta,
)

TOL = Tolerance(1e-15, 1e-13)


def rel(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


# --- gamma family ----------------------------------------------------------


def test_ln_gamma_factorial():
    assert abs(ln_gamma(5) - math.log(24)) < 1e-14


def test_gamma_on_imaginary_axis():
    assert rel(abs(gamma(1j)) ** 2, math.pi / math.sinh(math.pi)) < 1e-13


def test_gamma_half_against_quadrature():
    # Gamma(1/2) = int_0^inf x^(-1/2) e^(-x) dx = 2 int_0^inf e^(-u^2) du
    oracle = 2 * integrate_semi_infinite(lambda u: math.exp(-u * u), 0.0, TOL).real
    assert rel(gamma(0.5), oracle) < 1e-13
    assert rel(gamma(0.5), math.sqrt(math.pi)) < 1e-14


@pytest.mark.parametrize("z", [0.3 + 0.7j, -2.5 + 0.1j, 10 - 20j, 0.01, 30.5 + 40j, -7.3 - 2j])
def test_ln_gamma_against_mpmath(z):
    assert abs(ln_gamma(z) - complex(mp.loggamma(z))) < 1e-12 * max(1.0, abs(ln_gamma(z)))


@pytest.mark.parametrize("x", [-4.5, -0.5, 0.1, 1.5, 7.25, 150.0])
def test_ln_gamma_real_sign_and_modulus(x):
    lg, sign = ln_gamma_real(x)
    assert sign == int(mp.sign(mp.gamma(x)))
    assert abs(lg - float(mp.log(abs(mp.gamma(x))))) < 1e-13 * max(1.0, abs(lg))


def test_poles_are_explicit():
    for x in (0, -1, -7):
        with pytest.raises(PoleError):
            ln_gamma_real(x)
        with pytest.raises(PoleError):
            ln_gamma(complex(x, 0))


def test_recip_gamma_values():
    assert recip_gamma(0.0) == 0.0
    assert recip_gamma(-3.0) == 0.0
    assert rel(recip_gamma(0.5), 1 / math.sqrt(math.pi)) < 1e-14


def test_digamma_values():
    assert rel(digamma(1.0), -EULER_GAMMA) < 1e-14
    assert rel(digamma(2.0), 1 - EULER_GAMMA) < 1e-14
    assert rel(digamma(0.5), -EULER_GAMMA - 2 * math.log(2)) < 1e-14
    with pytest.raises(ValueError):
        digamma(-1.0)


def test_pochhammer_values():
    assert pochhammer(3.7, 0) == 1.0
    assert pochhammer(1.0, 6) == 720.0
    assert rel(pochhammer(0.5, 3), 15 / 8) < 1e-15
    with pytest.raises(ValueError):
        pochhammer(1.0, -1)


@pytest.mark.parametrize("x", [0.5, 20.0, 1e3, 1e8, 1e15])
def test_gamma_ratio_against_mpmath(x):
    expected = mp.gamma(x + 0.25) / mp.gamma(x + 0.75)
    assert rel(gamma_ratio(x, 0.25, 0.75), float(expected)) < 1e-13


def test_sinpi_is_exact_at_integers():
    assert sinpi(3.0) == 0.0 and sinpi(-2.0) == 0.0
    assert sinpi(0.5) == 1.0


finite_z = st.complex_numbers(max_magnitude=50, allow_nan=False, allow_infinity=False)


def _off_poles(z):
    return not (z.real <= 0.5 and abs(z.imag) < 0.1 and abs(z.real - round(z.real)) < 0.1)


@settings(max_examples=200, deadline=None)
@given(finite_z)
def test_gamma_recurrence(z):
    assume(_off_poles(z) and _off_poles(z + 1))
    assume(abs(z) > 0.1)
    lhs = gamma(z + 1)
    assume(abs(lhs) > 1e-250 and abs(lhs) < 1e250)
    assert abs(lhs - z * gamma(z)) / abs(lhs) < 1e-12


@settings(max_examples=200, deadline=None)
@given(st.complex_numbers(max_magnitude=20, allow_nan=False, allow_infinity=False))
def test_gamma_reflection(z):
    assume(_off_poles(z) and _off_poles(1 - z) and abs(z.imag) < 10)
    product = gamma(z) * gamma(1 - z) * cmath.sin(math.pi * z) / math.pi
    assert abs(product - 1) < 1e-12


@settings(max_examples=100, deadline=None)
@given(finite_z)
def test_ln_gamma_conjugate_symmetry(z):
    assume(_off_poles(z) and z.imag != 0)
    assert abs(ln_gamma(z.conjugate()) - ln_gamma(z).conjugate()) < 1e-12 * max(1.0, abs(ln_gamma(z)))


# --- Bessel ----------------------------------------------------------------


def test_bessel_small_argument():
    assert abs(bessel_j(0, 1e-8) - 1.0) < 1e-15


def test_bessel_half_order_closed_form():
    assert rel(bessel_j(0.5, 2.0), math.sqrt(2 / (2 * math.pi)) * math.sin(2.0)) < 1e-14


def test_bessel_order_two_at_two():
    assert abs(bessel_j(2, 2.0) - 0.3528340286) < 1e-10
    assert rel(bessel_j(2, 2.0), float(mp.besselj(2, 2))) < 1e-14


@pytest.mark.parametrize("nu,x", [(-4, 2.0), (-2.5, 3.0), (0, 12.0), (7.3, 0.4), (40, 11.0), (-0.5, 1.0)])
def test_bessel_against_scipy(nu, x):
    assert abs(bessel_j(nu, x) - sp.jv(nu, x)) < 1e-13 * max(1.0, abs(sp.jv(nu, x)))


def test_bessel_scaled_entire():
    assert rel(bessel_j_scaled(1.0, 0.0), 0.5) < 1e-15
    assert rel(bessel_j_scaled(-1.5, 1.0), float(mp.besselj(-1.5, 1))) < 1e-13


def test_bessel_range_is_explicit():
    with pytest.raises(UnsupportedRangeError):
        bessel_j(0, 13.0)
    with pytest.raises(UnsupportedRangeError):
        bessel_j(41, 1.0)


@settings(max_examples=150, deadline=None)
@given(st.floats(-3, 10), st.floats(0.05, 12))
def test_bessel_recurrence(nu, x):
    lhs = bessel_j(nu - 1, x) + bessel_j(nu + 1, x)
    rhs = 2 * nu / x * bessel_j(nu, x)
    scale = max(abs(bessel_j(nu - 1, x)), abs(bessel_j(nu + 1, x)), abs(rhs), 1e-300)
    assert abs(lhs - rhs) <= 1e-11 * max(scale, 1.0)


# --- dilogarithm, AGM, elliptic ---------------------------------------------


def test_li2_values():
    assert li2(0.0) == 0.0
    assert rel(li2(1.0), math.pi**2 / 6) < 1e-15
    assert rel(li2(-1.0), -math.pi**2 / 12) < 1e-15
    with pytest.raises(ValueError):
        li2(1.5)


@pytest.mark.parametrize("x", [-50.0, -3.0, -0.7, -0.2, 0.3, 0.6, 0.95])
def test_li2_against_mpmath(x):
    assert rel(li2(x), float(mp.polylog(2, x))) < 1e-14


def test_agm_symmetric_and_fixed():
    assert agm(2.0, 2.0) == 2.0
    assert rel(agm(1.0, 3.0), agm(3.0, 1.0)) < 1e-16


def test_elliptic_k_values():
    assert rel(elliptic_k(0.0), math.pi / 2) < 1e-16
    assert rel(elliptic_k(0.5), gamma(0.25) ** 2 / (4 * math.sqrt(math.pi))) < 1e-14
    with pytest.raises(ValueError):
        elliptic_k(1.0)


@pytest.mark.parametrize("m", [0.0, 0.1, 0.45, 0.8, 0.9, 0.95])
def test_elliptic_k_agm_matches_quadrature(m):
    quad = integrate_finite(
        lambda p: 1 / math.sqrt(1 - m * math.sin(p) ** 2), 0.0, math.pi / 2, Tolerance(1e-15, 1e-14)
    ).real
    assert rel(elliptic_k(m), quad) < 1e-11
    assert rel(elliptic_k(m), sp.ellipk(m)) < 1e-14


def test_elliptic_f_values():
    assert rel(elliptic_f_incomplete(0.7, 0.0), 0.7) < 1e-15
    assert rel(elliptic_f_incomplete(math.pi / 2, 0.3), elliptic_k(0.3)) < 1e-14


def _landen_f(phi, m):
    # one descending Landen step: k' = sqrt(1-m), k1 = (1-k')/(1+k')
    kp = math.sqrt(1 - m)
    k1 = (1 - kp) / (1 + kp)
    phi1 = phi + math.atan(kp * math.tan(phi))
    return (1 + k1) / 2 * float(mp.ellipf(phi1, k1 * k1))


def test_elliptic_f_against_landen_descent():
    assert rel(elliptic_f_incomplete(1.0, 0.3), _landen_f(1.0, 0.3)) < 1e-13


@pytest.mark.parametrize("phi,m", [(0.3, 0.9), (1.2, 0.5), (-0.8, 0.2), (4.0, 0.7), (-7.0, 0.1)])
def test_elliptic_f_against_scipy(phi, m):
    assert rel(elliptic_f_incomplete(phi, m), sp.ellipkinc(phi, m)) < 1e-13


# --- zeta and xi -----------------------------------------------------------


def test_zeta_values():
    assert rel(zeta(2).real, math.pi**2 / 6) < 1e-14
    assert rel(zeta(4).real, math.pi**4 / 90) < 1e-14
    assert rel(zeta(0).real, -0.5) < 1e-14
    with pytest.raises(PoleError):
        zeta(1)
    with pytest.raises(UnsupportedRangeError):
        zeta(-3)


@pytest.mark.parametrize("s", [0.5 + 14.134725j, 0.25 + 3j, 1.5 - 30j, -1.5 + 2j, 0.5 + 40j, 3.0])
def test_zeta_against_mpmath(s):
    assert abs(zeta(s) - complex(mp.zeta(s))) < 1e-12 * max(1.0, abs(complex(mp.zeta(s))))


def test_big_xi_even_and_real():
    assert abs(xi_big(3.0) - xi_big(-3.0)) <= 1e-13 * abs(xi_big(3.0))
    assert abs(complex(xi_big(5.0)).imag) < 1e-13


def test_big_xi_at_zero():
    expected = -(1 / 8) * math.pi**-0.25 * gamma(0.25) * zeta(0.5).real
    assert rel(complex(xi_big(0.0)).real, expected) < 1e-13
    assert abs(complex(xi_big(0.0)).real - 0.4971207782) < 1e-10


def test_xi_at_zero_and_one():
    assert xi(0) == 0.5 and xi(1) == 0.5


@settings(max_examples=100, deadline=None)
@given(st.floats(-1, 2), st.floats(-40, 40))
def test_xi_functional_equation(sr, si):
    s = complex(sr, si)
    assume(abs(s) > 1e-3 and abs(s - 1) > 1e-3)
    a, b = xi(s), xi(1 - s)
    assert abs(a - b) <= 1e-10 * max(abs(a), 1e-300)
