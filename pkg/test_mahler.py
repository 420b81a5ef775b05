# -*- coding: utf-8 -*-
#
# Copyright (c) 2026, mahlerq developers
# All rights reserved.
#
# Licensed under the BSD 3-Clause License:
# http://opensource.org/licenses/BSD-3-Clause
#


import cmath
import math

import pytest
from numpy.testing import assert_allclose

from mahlerq import mahler
from mahlerq.elliptic import curve_by_label, l_values, load_curve_table
from mahlerq.err import DomainError
from mahlerq.quad import integrate
from mahlerq.specfun import dirichlet_Lprime_chi3, hyper




def test_region_classify():
    assert mahler.region_classify(1.0).region == 'inside'
    assert mahler.region_classify(-1).region == 'boundary'
    assert mahler.region_classify(3).region == 'boundary'
    assert mahler.region_classify(-2.5).region == 'outside'
    assert mahler.region_classify(7).alpha == 7.0


@pytest.mark.parametrize('alpha', [-2.0, 0.5, 2.0, 5.0])
def test_y_pair_roots(alpha):
    for x in (cmath.exp(0.7j), 0.3 - 1.2j, -2.0):
        pair = mahler.y_pair(alpha, x)
        assert abs(mahler.q_alpha(alpha, x, pair.y_plus)) < 1e-12*max(1, abs(pair.y_plus)**2)
        assert abs(mahler.q_alpha(alpha, x, pair.y_minus)) < 1e-12*max(1, abs(x)**2)
        assert_allclose(pair.y_plus*pair.y_minus, x, rtol=1e-14)
    with pytest.raises(DomainError):
        mahler.y_pair(alpha, 0)


def test_y_pair_at_vanishing_linear_term():
    pair = mahler.y_branches(1.0, 0.0)
    assert abs(mahler.q_alpha(1.0, 1.0, pair.y_plus)) < 1e-15
    assert_allclose(abs(pair.y_plus), 1.0, rtol=1e-15)


def test_c_alpha_and_toric_points():
    assert_allclose(mahler.c_alpha(1.0), math.pi/2, rtol=1e-15)
    assert mahler.c_alpha(3.0) == 0.0
    with pytest.raises(DomainError):
        mahler.c_alpha(3.5)
    toric = mahler.toric_points(1.0)
    assert len(toric.points) == 6
    for x, y in toric.points.values():
        assert abs(abs(x) - 1) < 1e-15 and abs(abs(y) - 1) < 1e-15
        assert abs(mahler.q_alpha(1.0, x, y)) < 1e-14
    assert_allclose(cmath.phase(toric.Y_plus), toric.c_alpha, rtol=1e-14)
    with pytest.raises(DomainError):
        mahler.toric_points(3.0)


def test_n_measure_at_zero():
    result = mahler.n_measure(0.0)
    assert_allclose(result.n, dirichlet_Lprime_chi3(), atol=1e-9)
    assert_allclose(result.n, 0.3230659472, atol=1e-9)
    assert_allclose(result.I + result.J, result.n, rtol=1e-15)
    assert_allclose(result.I - 2*result.J, result.n_tilde, rtol=1e-14)
    assert_allclose(mahler.i_integral(0.0), result.I, atol=1e-10)
    assert_allclose(mahler.j_integral(0.0), result.J, atol=1e-10)


def test_n_measure_outside_has_no_breakdown():
    result = mahler.n_measure(5.0)
    assert result.I is None and result.J is None and result.n_tilde is None
    with pytest.raises(DomainError):
        mahler.n_tilde(5.0)


@pytest.mark.parametrize('alpha', [-0.9, -0.5, 0.5, 1.5, 2.5, 2.9])
def test_n_tilde_closed_form(alpha):
    assert_allclose(mahler.n_tilde(alpha), mahler.closed_form_inside(alpha).value, atol=1e-8)


@pytest.mark.parametrize('alpha', [3.5, 4.0, 10.0, -3.5, -6.0])
def test_n_closed_form_outside(alpha):
    assert_allclose(mahler.n_measure(alpha).n, mahler.closed_form_outside(alpha), atol=1e-8)


def test_closed_forms_domain_and_weights():
    with pytest.raises(DomainError):
        mahler.closed_form_outside(2.0)
    with pytest.raises(DomainError):
        mahler.closed_form_inside(3.0)
    degenerate = mahler.closed_form_inside(0.0)
    assert degenerate.degenerate and degenerate.value == 0.0
    assert mahler.hyper_closed_form(1.0).s_alpha == -0.25
    assert mahler.hyper_closed_form(-0.5).s_alpha == -0.25
    assert mahler.hyper_closed_form(-0.5).printed_s_alpha == -1/16
    assert mahler.hyper_closed_form(0.5).printed_s_alpha == -1/4
    value = mahler.closed_form_inside(-0.5)
    assert_allclose(value.printed_value, value.value/4, rtol=1e-15)


def test_hyper_outside_derivative():
    fd, series = mahler.hyper_outside_derivative(5.0)
    assert_allclose(fd, series, atol=1e-7)
    with pytest.raises(DomainError):
        mahler.hyper_outside_derivative(3.0)


def test_solve_lambda():
    assert_allclose(mahler.solve_lambda(1.0).lam, 1.5213797068, atol=1e-9)
    assert_allclose(mahler.solve_lambda(2.0).lam, 1.7692923542, atol=1e-9)
    assert mahler.solve_lambda(-1.0).lam == 1.0
    sub = mahler.solve_lambda(0.7)
    assert_allclose(sub.alpha, 0.7, atol=1e-14)
    for root in sub.p_roots:
        assert abs(mahler.p_lambda(sub.lam, root)) < 1e-12
    with pytest.raises(DomainError):
        mahler.solve_lambda(3.0)


def test_mobius_involution():
    lam = 1.5
    for x in (0.0, 0.3, 1.0, 2.0):
        assert_allclose(mahler.mobius(lam, mahler.mobius(lam, x)), x, atol=1e-14)
    assert_allclose(mahler.mobius(lam, 0.0), lam**2, rtol=1e-15)
    assert_allclose(mahler.mobius(lam, 1.0), lam - 1, rtol=1e-15)
    lhs, rhs = mahler.mobius_swap_check(lam)
    assert_allclose(lhs, rhs, atol=1e-9)
    assert mahler.mobius_swap_check(1.0) == (0.0, 0.0)


def test_lemma_gdi():
    result = mahler.lemma_gdi_check(1.5)
    assert_allclose(abs(result.lhs), abs(result.rhs), atol=1e-8)
    assert result.sign in (1, -1)
    degenerate = mahler.lemma_gdi_check(1.0)
    assert degenerate.lhs == degenerate.rhs


def test_f_lambda():
    result = mahler.f_lambda_check(1.5)
    assert result.max_residual < 1e-8
    assert result.expected_end == 0.5
    # F_1 = (x - y)^2
    assert abs(mahler.f_lambda(1.0, 0.3, 0.3)) < 1e-15
    assert mahler.f_lambda_check(1.0).max_residual == 0.0
    with pytest.raises(DomainError):
        mahler.f_lambda_check(2.0)


def test_k_form_params():
    params = mahler.k_form_params(1.5)
    assert params.t2 == -params.t1
    rho = params.rho
    assert 0 < rho < 1
    assert_allclose(rho/(rho - 1), params.A1*params.B2/(params.A2*params.B1), rtol=1e-12)
    # Pfaff: 2F1(1/2, 1/2; 1; rho) = (1 - rho)^(-1/2) 2F1(1/2, 1/2; 1; rho/(rho - 1))
    direct = hyper([0.5, 0.5], [1], rho).real
    pfaff = hyper([0.5, 0.5], [1], rho/(rho - 1)).real/math.sqrt(1 - rho)
    assert_allclose(pfaff, direct, rtol=1e-12)
    assert_allclose(rho/(rho - 1), -0.246766, atol=1e-6)


def test_derivative_forms_agree():
    lam = 1.5
    alpha = (lam**3 - 2)/lam
    value = mahler.derivative_2f1(alpha)
    h = 1e-4
    fd = (mahler.n_tilde(alpha + h) - mahler.n_tilde(alpha - h))/(2*h)
    assert_allclose(value, fd, atol=1e-5)
    assert_allclose(mahler.derivative_rho(lam), value, atol=1e-10)
    assert_allclose(mahler.derivative_K(lam), value, atol=1e-10)
    assert_allclose(mahler.lemma_dl_integral(lam), value, atol=1e-9)


@pytest.mark.parametrize('alpha', [-0.5, 0.5])
def test_deriv_check(alpha):
    d = mahler.deriv_check(alpha)
    assert_allclose(d.fd, d.cf2f1, atol=1e-5)
    assert_allclose(d.cfK, d.cf2f1, atol=1e-10)
    fd, integral = mahler.lemma_dl_check(alpha)
    assert_allclose(fd, integral, atol=1e-5)
    with pytest.raises(DomainError):
        mahler.deriv_check(0.0)


def test_boundary_limits_and_reflection():
    limits = mahler.boundary_limits(1.0)
    assert len(limits) == 6
    for limit in limits:
        assert abs(limit.value - limit.expected) < 1e-6, limit.name
    for theta in (2.0, math.pi, 4.0):
        assert abs(mahler.reflected_branch_check(1.0, theta)) < 1e-12


def test_mahler2d_jensen_matches_n():
    result = mahler.mahler2d('Q_alpha', 5.0, tol=1e-9, method='jensen')
    assert_allclose(result.value, mahler.n_measure(5.0).n, atol=1e-8)
    assert not result.torus_singular
    with pytest.raises(DomainError):
        mahler.mahler2d('R_alpha', 1.0)
    with pytest.raises(DomainError):
        mahler.mahler2d('P_alpha', 1.0, method='simpson')


@pytest.mark.slow
@pytest.mark.filterwarnings('ignore::mahlerq.err.MahlerWarning')
@pytest.mark.parametrize('alpha', [0.0, 2.0, 4.0])
def test_mahler2d_P_alpha(alpha):
    result = mahler.mahler2d('P_alpha', alpha, tol=1e-7, method='jensen')
    assert_allclose(result.value, mahler.n_measure(alpha).n, atol=1e-4)


@pytest.mark.slow
def test_functional_equation_small_p():
    check = mahler.functional_equation_check(0.01)
    assert_allclose(check.lhs, check.rhs, atol=1e-4)
    with pytest.raises(DomainError):
        mahler.functional_equation_check(0.0)


def test_main_identity_with_l_value():
    E = curve_by_label(load_curve_table(), '19a3')
    L = l_values(E).Lprime0
    assert_allclose(mahler.n_tilde(2.0), -3*L, atol=1e-6)


def test_b11():
    E = curve_by_label(load_curve_table(), '11a3')
    L = l_values(E).Lprime0
    result = mahler.s_family_b11()
    assert_allclose(result.first - result.second, result.lhs, rtol=1e-15)
    assert_allclose(result.lhs, L, atol=1e-5)
    assert abs(result.lhs + L) > 0.25


def test_b11_principal_branch():
    # principal square root branch of the smaller root gives the same combination
    def log_abs_y_minus(theta):
        x = cmath.exp(1j*theta)
        B = x*x + 1
        y = -(B/2)*(1 - cmath.sqrt(1 - 4*x**3/(B*B)))
        return math.log(abs(y))

    first = integrate(log_abs_y_minus, 0.0, math.pi/2, tol=1e-11).value/math.pi
    second = integrate(log_abs_y_minus, math.pi/2, math.pi, tol=1e-11).value/math.pi
    assert_allclose(first - second, mahler.s_family_b11().lhs, atol=1e-8)


def test_equivalent_identities():
    rows = mahler.equivalent_identities()
    assert [row.gating for row in rows] == [True, True, True, False]
    for row in rows[:3]:
        assert_allclose(row.lhs, row.rhs, atol=1e-6)
    printed = rows[3]
    assert abs(printed.lhs - printed.rhs) > 0.5
    assert_allclose(printed.lhs/(printed.rhs/-1.5), -2/3, rtol=1e-8)


def test_rz_negative_check():
    for identity in mahler.rz_negative_check():
        assert abs(identity.lhs - identity.rhs) > 1e-3


def test_real_cbrt():
    assert_allclose(mahler.real_cbrt(-27.0), -3.0, rtol=1e-15)
    assert_allclose(mahler.real_cbrt(2.0)**3, 2.0, rtol=1e-15)
