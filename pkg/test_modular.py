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
from fractions import Fraction

import numpy
import pytest
from numpy.testing import assert_allclose

from mahlerq import mahler, modular
from mahlerq.elliptic import an_coeffs, curve_by_label, l_values, load_curve_table
from mahlerq.err import DomainError




def test_eta():
    assert_allclose(modular.eta(1j).real, 0.768225422326, rtol=1e-12)
    tau = 0.2 + 1.1j
    # eta(-1/tau) = sqrt(-i tau) eta(tau)
    assert_allclose(modular.eta(-1/tau), cmath.sqrt(-1j*tau)*modular.eta(tau), rtol=1e-13)
    with pytest.raises(DomainError):
        modular.eta(0.5)


def test_siegel_exponents():
    assert modular.bernoulli2(Fraction(0)) == Fraction(1, 6)
    assert_allclose(float(modular.siegel_exponent(19, 1)), 1.10965, atol=1e-5)
    assert modular.siegel_exponent(19, 1) == modular.siegel_exponent(19, 18)
    x_order = sum(modular.siegel_exponent(19, a) for a in (1, 7, 8)) - \
        sum(modular.siegel_exponent(19, a) for a in (2, 3, 5))
    y_order = sum(modular.siegel_exponent(19, a) for a in (1, 7, 8)) - \
        sum(modular.siegel_exponent(19, a) for a in (4, 6, 9))
    assert x_order == -1
    assert y_order == 1
    with pytest.raises(DomainError):
        modular.siegel_exponent(19, 38)


@pytest.mark.parametrize('a', [1, 4, 9])
def test_siegel_unit_forms_agree(a):
    tau = 0.1 + 0.8j
    product = modular.siegel_g(19, a, tau)
    assert_allclose(modular.siegel_g_logseries(19, a, tau), product, rtol=1e-12)
    assert_allclose(modular.siegel_expansion(19, a, 80).evaluate(tau), product, rtol=1e-12)


@pytest.mark.parametrize('tau', [0.3 + 0.5j, -0.2 + 0.7j, 0.45 + 0.35j])
def test_param_xy_19_lies_on_curve(tau):
    x, y = modular.param_xy_19(tau)
    scale = max(abs(y)**2, abs(x*x*y), abs(x*y), abs(x))
    assert abs(mahler.q_alpha(2.0, x, y)) < 1e-11*scale


def test_u_tau_and_inverse():
    assert_allclose(modular.u_tau(complex(0.5, 5.0)), 3.0, atol=1e-12)
    point = modular.invert_u(2.0)
    assert_allclose(point.u, 2.0, atol=1e-10)
    assert point.tau.real == 0.5
    assert_allclose(point.q.real, -0.04165, atol=1e-4)
    assert abs(point.q.imag) < 1e-15
    assert_allclose(modular.u_tau(complex(0.5, 0.50586)), 2.0, atol=2e-3)
    with pytest.raises(DomainError):
        modular.invert_u(10.0)


def test_qexpansion_arithmetic():
    s = modular.siegel_expansion(19, 1, 30)
    one = s*s.inverse()
    assert one.e0 == 0
    assert_allclose(one.coeffs, numpy.eye(1, 31)[0], atol=1e-12)
    tau = 0.05 + 0.6j
    assert_allclose((s/s.truncate(20)).evaluate(tau), 1.0, atol=1e-12)
    assert_allclose((2*s - s).coeffs, s.coeffs, atol=0)
    with pytest.raises(DomainError):
        s + modular.siegel_expansion(19, 2, 30)
    with pytest.raises(DomainError):
        s + 1
    with pytest.raises(DomainError):
        modular.QExpansion(0, [])
    with pytest.raises(DomainError):
        modular.QExpansion(0, [0, 1]).inverse()


def test_eisenstein_forms():
    e = modular.eis_e(19, 1, 2, 20)
    assert e.e0 == 0 and e.n_max == 20
    assert e.coeffs[0].real == 0
    with pytest.raises(DomainError):
        modular.eis_e(19, 19, 1, 10)
    with pytest.raises(DomainError):
        modular.f_abc(19, 1, 2, 19, 10)


def test_search_f_abc_is_ranked():
    E = curve_by_label(load_curve_table(), '19a3')
    newform = an_coeffs(E, 20).a
    candidates = modular.search_f_abc(19, newform, 20, max_results=3)
    assert 1 <= len(candidates) <= 3
    residuals = [cand.residual for cand in candidates]
    assert residuals == sorted(residuals)
    with pytest.raises(DomainError):
        modular.search_f_abc(19, newform[:10], 20)


def test_j_invariant():
    assert_allclose(modular.j_invariant(1j).real, 1728, rtol=1e-12)
    assert_allclose(modular.j_invariant(2j).real, 287496, rtol=1e-10)
    assert abs(modular.j_invariant(modular.ZETA3)) < 1e-6
    tau = 0.1 + 0.9j
    assert_allclose(modular.j_invariant(tau + 1), modular.j_invariant(tau), rtol=1e-10)
    assert_allclose(modular.j_invariant(-1/tau), modular.j_invariant(tau), rtol=1e-10)


def test_reduce_tau():
    assert_allclose(modular.reduce_tau(0.5j), 2j, atol=1e-15)
    assert_allclose(modular.reduce_tau(3.2 + 1j), 0.2 + 1j, atol=1e-14)
    reduced = modular.reduce_tau(0.31 + 0.02j)
    assert abs(reduced.real) <= 0.5 and abs(reduced) >= 1 - 1e-12


def test_elliptic_dilog_sum():
    point = modular.invert_u(2.0)
    total = modular.elliptic_dilog_sum(point.q.real)
    L = l_values(curve_by_label(load_curve_table(), '19a3')).Lprime0
    # (9/(2 pi)) sum = (3/2) L'(19a3, 0)
    assert_allclose(total.value, math.pi/3*L, atol=1e-6)
    assert total.tail < 1e-14
    row, = modular.dilog_alpha_scan([2.0])
    assert_allclose(row.n_tilde, mahler.n_tilde(2.0), atol=1e-6)
    with pytest.raises(DomainError):
        modular.elliptic_dilog_sum(1.0)


@pytest.mark.parametrize('q', [0.5, -0.5, 0.8])
def test_elliptic_dilog_tail_estimate(q):
    coarse = modular.elliptic_dilog_sum(q, tol=1e-8)
    fine = modular.elliptic_dilog_sum(q, tol=1e-15)
    assert coarse.tail < 1e-8
    assert fine.terms > coarse.terms
    assert abs(coarse.value - fine.value) < 10*coarse.tail + 1e-15
