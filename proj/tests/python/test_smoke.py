"""Smoke tests for the digit_dirichlet python bindings."""

import cmath
import math
from fractions import Fraction

import pytest

import digit_dirichlet as dd


def test_digit_arithmetic():
    assert dd.digit_sum(2, 7) == 3
    assert dd.digit_sum(10, 1234) == 10
    assert dd.cumulative_digit_sum(2, 5) == 5
    assert dd.differenced_digit_sum(2, 4) == -1


def test_bernoulli_exact():
    assert dd.bernoulli(0) == Fraction(1)
    assert dd.bernoulli(1) == Fraction(-1, 2)
    assert dd.bernoulli(2) == Fraction(1, 6)
    assert dd.bernoulli(3) == 0
    assert dd.bernoulli(12) == Fraction(-691, 2730)


def test_zeta_classics():
    assert abs(dd.zeta(2) - math.pi**2 / 6) < 1e-12
    assert abs(dd.zeta(0) + 0.5) < 1e-12
    assert abs(dd.zeta(-1) + 1.0 / 12.0) < 1e-12
    with pytest.raises(ArithmeticError):
        dd.zeta(1.0)


def test_gamma():
    assert abs(dd.gamma(0.5) - math.sqrt(math.pi)) < 1e-12
    assert abs(dd.gamma_ratio(3.0, 0) - 0.5) < 1e-14


def test_zb_closed_form():
    assert abs(dd.zb(2, 2.0) - math.pi**2 / 9) < 1e-12
    with pytest.raises(ArithmeticError):
        dd.zb(2, 0.0)


def test_fb_continuation_and_k_independence():
    r = dd.fb(2, 2.5)
    assert abs(r["value"].real - 1.4941517579) < 1e-7
    assert r["abs_error_estimate"] < 1e-6
    a = dd.fb(2, 0.5 + 0.3j, K=4)
    b = dd.fb(2, 0.5 + 0.3j, K=8)
    assert abs(a["value"] - b["value"]) < 1e-8


def test_gb_eval():
    r = dd.gb(2, 3.5)
    assert r["value"].imag == pytest.approx(0.0, abs=1e-12)
    assert r["value"].real > 0


def test_poles():
    rows = dd.poles("Fb", 2, 8.0)
    assert len(rows) == 6
    res = [p for p in rows if p["location"] == 1.0][0]
    assert res["order"] == 2
    assert dd.count_poles("Zb", 2, 20.0) == 5


def test_delange():
    c0 = dd.delange_coefficient(2.0, 0)
    expected = (1.0 / (2.0 * math.log(2.0))) * (math.log(2 * math.pi) - 1.0) - 0.75
    assert abs(c0.real - expected) < 1e-13
    assert dd.h_beta(2.0, 0.25, cutoff=500) == dd.h_beta(2.0, 1.25, cutoff=500)
    assert abs(dd.s_beta(2.0, 32, cutoff=1000) - dd.cumulative_digit_sum(2, 32)) < 32 * 0.05


def test_beta_series():
    g = dd.g_beta(2.5, 3.0, cutoff=400)
    assert abs(g["value"].imag) < 1e-12
    table = dd.build_sbeta_table(2.5, n_max=20000, cutoff=200)
    assert len(table) == 20000
    f = dd.f_beta(table, 2.5 + 0.0j, tol=1e-5)
    assert f["abs_error_estimate"] > 0
    conj = dd.f_beta(table, 2.5 - 0.0j, tol=1e-5)
    assert cmath.isclose(f["value"], conj["value"].conjugate(), abs_tol=1e-12)


def test_guards():
    with pytest.raises(ValueError):
        dd.digit_sum(1, 5)
    with pytest.raises(ValueError):
        dd.h_beta(1.0, 0.5)
    with pytest.raises(ValueError):
        dd.g_beta(2.5, 0.5 + 0j)
