# -*- coding: utf-8 -*-
#
# Copyright (c) 2026, mahlerq developers
# All rights reserved.
#
# Licensed under the BSD 3-Clause License:
# http://opensource.org/licenses/BSD-3-Clause
#


import textwrap
import warnings
from fractions import Fraction

import numpy
import pytest
from numpy.testing import assert_allclose

from mahlerq import elliptic, mahler, modular
from mahlerq.elliptic import EllCurveQ
from mahlerq.err import CurveTableError, DomainError, MahlerWarning


HEADER = 'label,k,a1,a2,a3,a4,a6,N,eps,r_num,r_den\n'




def curve_11a3():
    return EllCurveQ(0, -1, 1, 0, 0, label='11a3', N=11)


def eta_product_11(n_max):
    # q prod (1 - q^n)^2 (1 - q^(11 n))^2
    series = numpy.zeros(n_max + 1, dtype=numpy.int64)
    series[1] = 1
    for n in range(1, n_max + 1):
        for step in (n, n, 11*n, 11*n):
            if step <= n_max:
                series[step:] = series[step:] - series[:n_max + 1 - step].copy()
    return series[1:]


def test_family_j():
    assert elliptic.family_j(8) == Fraction(32768, 19)
    assert elliptic.family_j(-216) == -12288000
    assert elliptic.family_j(24) == 0
    with pytest.raises(DomainError):
        elliptic.family_j(27)


@pytest.mark.parametrize('k,ainvs', [
    (8, (2, 0, 1, 0, 0)),
    (2, (2, 0, 4, 0, 0)),
    (4, (2, 0, 2, 0, 0)),
    (24, (6, 0, 9, 0, 0)),
    (-216, (-6, 0, 1, 0, 0)),
])
def test_family_curve(k, ainvs):
    E = elliptic.family_curve(k)
    assert E.ainvs == ainvs
    assert E.k == k
    assert E.j == elliptic.family_j(k)


@pytest.mark.parametrize('k,s,t', [(2, 2, 1), (4, 1, 2), (12, 3, 2), (-54, 2, 1), (8, 1, 1)])
def test_family_curve_discriminant(k, s, t):
    # k = m^3 s t^2 with s, t squarefree and coprime
    E = elliptic.family_curve(k)
    assert E.ainvs[2] == s*s*t
    assert E.discriminant == s**8*t**4*(k - 27)


def test_family_curve_domain():
    for k in (0, 27):
        with pytest.raises(DomainError):
            elliptic.family_curve(k)


def test_singular_curve():
    with pytest.raises(CurveTableError):
        EllCurveQ(0, 0, 0, 0, 0)
    with pytest.raises(CurveTableError):
        EllCurveQ(0, -1, 1, 0, 0, N=0)
    with pytest.raises(CurveTableError):
        EllCurveQ(0, -1, 1, 0, 0, eps=2)


def test_ap_values_11a():
    E = curve_11a3()
    expected = {2: -2, 3: -1, 5: 1, 7: -2, 11: 1, 13: 4}
    for p, ap in expected.items():
        assert elliptic.ap_count(E, p) == ap


def test_an_coeffs_match_eta_product():
    E = curve_11a3()
    series = elliptic.an_coeffs(E, 40)
    assert list(series.a) == list(eta_product_11(40))
    assert [series.an(n) for n in (4, 6, 9, 10)] == [2, 2, -2, -2]
    with pytest.raises(IndexError):
        series.an(0)
    with pytest.raises(IndexError):
        series.an(41)
    with pytest.raises(CurveTableError):
        elliptic.an_coeffs(EllCurveQ(0, -1, 1, 0, 0), 10)


@pytest.mark.parametrize('p', [2, 3, 5, 7, 13, 17, 101])
def test_point_count_consistency(p):
    E = curve_11a3()
    assert elliptic.count_points_projective(E, p) == p + 1 - elliptic.ap_count(E, p)


def test_local_model():
    E = elliptic.curve_by_label(elliptic.load_curve_table(), '19a3')
    assert elliptic.local_model(E, 2).kind == 'weierstrass'
    assert elliptic.local_model(E, 5).kind == 'short'
    with pytest.raises(CurveTableError):
        # discriminant -2^16 3^3 is not 2-minimal
        elliptic.local_model(EllCurveQ(0, 0, 0, 0, 64), 2)
    with pytest.raises(DomainError):
        elliptic.local_model(E, 1)


def test_root_number():
    E = curve_11a3()
    assert elliptic.root_number(E) == 1
    assert E.eps == 1
    residuals = elliptic.root_number_residuals(E)
    assert residuals[1] < 1e-8 < residuals[-1]
    with pytest.raises(DomainError):
        elliptic.root_number(E, y0=1.0)


def test_root_number_rejects_wrong_conductor():
    with pytest.raises(CurveTableError):
        elliptic.root_number(EllCurveQ(0, -1, 1, 0, 0, N=13))


def test_change_coordinates_round_trip():
    E = elliptic.family_curve(8, label='19a3', N=19)
    moved = elliptic.change_coordinates(E, 1, 1, 2)
    assert moved.ainvs != E.ainvs
    assert moved.j == E.j
    assert moved.discriminant == E.discriminant
    back = elliptic.change_coordinates(moved, -1, -1, -1)
    assert back.ainvs == E.ainvs
    assert back.label == '19a3' and back.N == 19
    with pytest.raises(DomainError):
        elliptic.change_coordinates(E, 0, 0, 0, 2)


def test_l_values_19a3():
    E = elliptic.curve_by_label(elliptic.load_curve_table(), '19a3')
    values = elliptic.l_values(E)
    # n~(2) = -3 L'(19a3, 0), with n~ from quadrature alone
    assert_allclose(values.Lprime0, -mahler.n_tilde(2.0)/3, atol=1e-8)
    assert_allclose(values.L2, values.Q**2*values.Lambda2, rtol=1e-15)
    assert values.tail_bound < 1e-12
    # terms past n_used - 5 are below exp(-Q n) ~ 1e-11
    short = elliptic.l_values(E, n_max=values.n_used - 5)
    assert abs(short.Lprime0 - values.Lprime0) < 1e-6


def test_agm_periods_19a3():
    E = elliptic.curve_by_label(elliptic.load_curve_table(), '19a3')
    lattice = elliptic.agm_periods(E)
    assert lattice.components == 1
    assert lattice.omega_plus > 0
    assert_allclose(abs(lattice.omega_minus.imag), 4.12709, atol=1e-4)
    assert lattice.tau.imag > 0
    assert_allclose(modular.j_invariant(lattice.tau).real, float(E.j), rtol=1e-8)


def test_agm_periods_two_components():
    E = EllCurveQ(0, 0, 1, -1, 0, label='37a1', N=37)
    assert E.discriminant == 37
    assert E.j == Fraction(110592, 37)
    lattice = elliptic.agm_periods(E)
    assert lattice.components == 2
    assert lattice.omega_minus.real == 0
    assert_allclose(modular.j_invariant(lattice.tau).real, 110592/37, rtol=1e-8)
    assert_allclose(lattice.area, abs(lattice.omega_plus*lattice.omega_minus.imag), rtol=1e-14)


def test_load_packaged_table():
    with warnings.catch_warnings():
        warnings.simplefilter('error', MahlerWarning)
        curves = elliptic.load_curve_table()
    labels = [E.label for E in curves]
    assert len(labels) == len(set(labels))
    assert not any(E.flagged for E in curves)
    family = [E for E in curves if E.k is not None]
    assert [E.k for E in family if 1 <= E.k <= 26] == list(range(1, 27))
    for E in family:
        assert E.ainvs == elliptic.family_curve(E.k).ainvs
    E = elliptic.curve_by_k(curves, 8)
    assert E.label == '19a3' and E.N == 19 and E.eps == 1 and E.r == -3
    with pytest.raises(CurveTableError):
        elliptic.curve_by_label(curves, '11a1')
    with pytest.raises(CurveTableError):
        elliptic.curve_by_k(curves, 27)


def test_load_table_errors(tmp_path):
    with pytest.raises(CurveTableError):
        elliptic.load_curve_table(tmp_path / 'missing.csv')

    bad_header = tmp_path / 'bad_header.csv'
    bad_header.write_text('label,k,a1,a2,a3,a4,a6,N,eps\n19a3,8,2,0,1,0,0,19,1\n', encoding='utf8')
    with pytest.raises(CurveTableError):
        elliptic.load_curve_table(bad_header)

    duplicate = tmp_path / 'duplicate.csv'
    duplicate.write_text(HEADER + '19a3,8,2,0,1,0,0,19,1,-3,1\n19a3,8,2,0,1,0,0,19,1,-3,1\n', encoding='utf8')
    with pytest.raises(CurveTableError):
        elliptic.load_curve_table(duplicate)

    bad_value = tmp_path / 'bad_value.csv'
    bad_value.write_text(HEADER + '19a3,8,2,0,one,0,0,19,1,-3,1\n', encoding='utf8')
    with pytest.raises(CurveTableError):
        elliptic.load_curve_table(bad_value)

    empty = tmp_path / 'empty.csv'
    empty.write_text('# nothing here\n', encoding='utf8')
    with pytest.raises(CurveTableError):
        elliptic.load_curve_table(empty)


def test_load_table_flags_wrong_family_member(tmp_path):
    path = tmp_path / 'curves.csv'
    path.write_text(textwrap.dedent('''\
        # comment lines and blank lines are skipped

        label,k,a1,a2,a3,a4,a6,N,eps,r_num,r_den
        19a3,8,2,0,1,0,0,19,1,-3,1
        11a3,8,0,-1,1,0,0,11,?,-,-
        '''), encoding='utf8')
    with pytest.warns(MahlerWarning):
        curves = elliptic.load_curve_table(path)
    assert [E.flagged for E in curves] == [False, True]
    assert curves[1].eps is None and curves[1].r is None
