import math

import mpmath as mp
import pytest
from scipy import special as sp

from rverify.identities import elliptic as E


@pytest.mark.parametrize("a,b,x", [(0.6, 0.6, 0.5), (0.7, 0.9, 0.3)])
def test_addition_with_squared_modulus(a, b, x):
    assert abs(E.addition_check(a, b, x, "x2")) < 1e-9


def test_addition_degenerate_beta():
    assert abs(E.addition_check(0.8, 1e-3, 0.5, "x2")) < 1e-6


@pytest.mark.xfail(strict=True, reason="with the bare modulus in the radical the theorem fails")
def test_addition_with_bare_modulus():
    assert abs(E.addition_check(0.7, 0.9, 0.3, "x")) < 1e-9


def test_addition_exactly_one_variant_holds():
    res = {v: abs(E.addition_check(0.7, 0.9, 0.3, v)) for v in ("x", "x2")}
    assert (res["x"] < 1e-9) != (res["x2"] < 1e-9)
    assert res["x2"] < 1e-9


def test_addition_condition_matches_scipy_landen_free_oracle():
    # gamma from the condition, then F(alpha) + F(beta) - F(gamma) with scipy
    a, b, x = 0.7, 0.9, 0.3
    g = E.solve_addition_gamma(a, b, x, "x2")
    m = x * x
    assert abs(sp.ellipkinc(a, m) + sp.ellipkinc(b, m) - sp.ellipkinc(g, m)) < 1e-13


def test_addition_domain():
    with pytest.raises(ValueError):
        E.addition_condition(0.5, 0.5, 0.5, "x3")
    with pytest.raises(ValueError):
        E.solve_addition_gamma(2.0, 0.5, 0.5, "x2")


def test_arccos_entry_at_zero():
    lhs, rhs = E.entry_arccos_sides(0.0)
    assert abs(lhs - math.pi**2 / 4) < 1e-14 and abs(rhs - math.pi**2 / 4) < 1e-14


@pytest.mark.parametrize("x", [0.6, -0.6])
def test_arccos_entry(x):
    assert abs(E.entry_arccos_residual(x)) < 1e-10


def test_arccos_entry_against_mpmath():
    x = 0.6
    lhs = mp.pi / 2 * mp.quad(lambda p: 1 / mp.sqrt(1 + x * mp.sin(p)), [0, mp.pi / 2])
    assert abs(E.entry_arccos_sides(x)[0] - float(lhs)) < 1e-14


def test_double_integral_entry():
    assert E.entry_double_integral_lhs(0.0) == 0.0
    assert abs(E.entry_double_integral_rhs(0.0)) < 1e-15
    assert abs(E.entry_double_integral_residual(0.5)) < 1e-8


def test_double_integral_is_odd():
    assert abs(E.entry_double_integral_lhs(-0.4) + E.entry_double_integral_lhs(0.4)) < 1e-9


def test_double_integral_rhs_against_scipy():
    x = 0.5
    expected = 0.5 * (sp.ellipk((1 + x) / 2) ** 2 - sp.ellipk((1 - x) / 2) ** 2)
    assert abs(E.entry_double_integral_rhs(x) - expected) < 1e-14


def test_double_integral_domain():
    with pytest.raises(ValueError):
        E.entry_double_integral_lhs(1.0)


@pytest.mark.parametrize("x,alpha", [(0.2, 0.8), (0.5, 1.2)])
def test_page172(x, alpha):
    assert abs(E.entry_page172_residual(x, alpha)) < 1e-9


def test_page172_small_alpha():
    assert abs(E.entry_page172_residual(0.3, 1e-3)) < 1e-8


def test_page172_beta_relation():
    x, a = 0.5, 1.2
    b = E.page172_beta(x, a)
    lhs = (1 + math.sin(b)) / (1 - math.sin(b))
    rhs = (1 + math.sin(a)) / (1 - math.sin(a)) * ((1 + x * math.sin(a)) / (1 - x * math.sin(a))) ** 2
    assert abs(lhs - rhs) < 1e-10 * rhs


def test_page172_domain():
    with pytest.raises(ValueError):
        E.entry_page172_sides(1.5, 0.3)


def test_quartic_G_against_mpmath():
    assert abs(E.quartic_G(0.8) - float(mp.quad(lambda t: 1 / mp.sqrt(1 + t**4), [0, 0.8]))) < 1e-15


@pytest.mark.parametrize("v,tol", [(1.0, 1e-12), (0.5, 1e-10), (1e-3, 1e-9)])
def test_quartic_inversion(v, tol):
    assert abs(E.quartic_inversion_residual(v)) < tol


def test_quartic_theta_endpoint():
    assert abs(E.quartic_theta(1.0) - math.pi / 2) < 1e-15


def test_lemniscate_F_against_closed_form():
    # F(1) = Gamma(1/4)^2 / (4 sqrt(2 pi))
    assert abs(E.lemniscate_F(1.0) - math.gamma(0.25) ** 2 / (4 * math.sqrt(2 * math.pi))) < 1e-15


@pytest.mark.parametrize("v", [0.3, 0.7, 0.95, 1.0])
def test_lemniscate_F_quadrature_vs_series(v):
    assert abs(E.lemniscate_F(v) - E.lemniscate_F_series(v)) < 1e-13


def test_lemniscate_F_domain():
    with pytest.raises(ValueError):
        E.lemniscate_F(1.2)


@pytest.mark.parametrize("v,tol", [(1.0, 1e-10), (0.6, 1e-10), (0.05, 1e-8)])
def test_lemniscate_inversion(v, tol):
    assert abs(E.lemniscate_inversion_residual(v)) < tol


@pytest.mark.parametrize("x,tol", [(1e-3, 1e-10), (1.0, 1e-11), (0.37, 1e-11)])
def test_lemniscate_doubling(x, tol):
    assert abs(E.lemniscate_doubling_residual(x)) < tol
