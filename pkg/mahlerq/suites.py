# -*- coding: utf-8 -*-
#
# Copyright (c) 2026, mahlerq developers
# All rights reserved.
#
# Licensed under the BSD 3-Clause License:
# http://opensource.org/licenses/BSD-3-Clause
#


'''
Verification suites and the computations behind the `measure`, `table2`,
`scan` and `curves` commands.  Every function here returns a `RunReport`;
printing and exit codes are left to `cmdline`.

Check tolerances are fixed per check and recorded in each row.  Tolerances
taken from the configuration (quadrature, series, L-series) control how the
numbers are computed and are echoed in the report inputs.
'''


import cmath
import math
import warnings
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy

from . import mahler
from . import modular
from .config import Config
from .elliptic import (EllCurveQ, agm_periods, an_coeffs, curve_by_k, curve_by_label, family_j, l_values,
                       load_curve_table, root_number_residuals)
from .err import DomainError, MahlerError, MahlerWarning
from .recognize import pslq, rational_reconstruct
from .report import RunReport
from .specfun import bloch_wigner, dirichlet_Lprime_chi3


HYPER_GRID = (-0.9, -0.8, -0.7, -0.5, -0.3, -0.1, 0.1, 0.3, 0.5, 0.8,
              1.0, 1.2, 1.5, 1.8, 2.0, 2.2, 2.5, 2.7, 2.8, 2.9)
NAR_GRID = (3.5, 4.0, 5.0, 10.0, -3.5, -6.0)
GDI_LAMBDAS = (1.1, 1.3, 1.5, 1.7, 1.9)
COMPD_GRID = (-0.5, 0.5, 1.5, 2.5)
TABLE1_K = (-216, -27, -8, -1, 32, 54, 125)
TABLE2_GATING_K = (1, 2, 3, 4, 8, 16, 24, 25, 26)
TABLE2_NONGATING_K = (21,)

N0_VALUE = 0.3230659472
D_ZETA3 = 0.6766277376
OMEGA_MINUS_19 = 4.12709
U_TAU_SAMPLE = complex(0.5, 0.50586)
Q_AT_ALPHA_2 = -0.04165
YPM_SAMPLES = 10**4
YPM_SEED = 20260101




def _inputs(config: Config, **extra) -> Dict:
    inputs = {'quad_tol': config['quad_tol'], 'series_tol': config['series_tol'],
              'lvalue_tol': config['lvalue_tol']}
    inputs.update(extra)
    return inputs


def _curves(config: Config) -> List[EllCurveQ]:
    return load_curve_table(config['curve_table'] or None)


def _map(func: Callable, args: Sequence, workers: int) -> List:
    '''
    Map in input order, in worker processes when `workers` > 1.
    '''
    if workers > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            return list(executor.map(func, args))
    return [func(a) for a in args]


def alpha_of_k(k: int) -> float:
    return mahler.real_cbrt(k)




def suite_hyper(config: Config) -> RunReport:
    '''
    n~ by quadrature against the 3F2 closed form on a grid in (-1, 3), and
    n(0) against L'(chi_-3, -1).
    '''
    report = RunReport('verify hyper', _inputs(config, grid=list(HYPER_GRID)))
    with report.timed():
        tol, series_tol = config['quad_tol'], config['series_tol']
        for alpha in HYPER_GRID:
            nt = mahler.n_tilde(alpha, tol=tol)
            cf = mahler.closed_form_inside(alpha, tol=series_tol)
            report.check(f'n~({alpha:g}) = 3F2 closed form', nt, cf.value, 1e-8)
        cf = mahler.closed_form_inside(-0.5, tol=series_tol)
        report.info('n~(-0.5) with the printed weight -1/16', cf.printed_value, mahler.n_tilde(-0.5, tol=tol))
        n0 = mahler.n_measure(0.0, tol=tol).n
        report.check("n(0) = L'(chi_-3, -1)", n0, dirichlet_Lprime_chi3(), 1e-9)
        report.check('n(0) = 0.3230659472', n0, N0_VALUE, 1e-9)
    return report


def suite_naR(config: Config) -> RunReport:
    '''
    n by quadrature against the 4F3 form for |alpha| >= 3, and the
    derivative of that form against a 2F1.
    '''
    report = RunReport('verify naR', _inputs(config, grid=list(NAR_GRID)))
    with report.timed():
        tol, series_tol = config['quad_tol'], config['series_tol']
        for alpha in NAR_GRID:
            report.check(f'n({alpha:g}) = 4F3 closed form', mahler.n_measure(alpha, tol=tol).n,
                         mahler.closed_form_outside(alpha, tol=series_tol), 1e-8)
        with warnings.catch_warnings():
            warnings.simplefilter('ignore', MahlerWarning)
            for alpha in (3.0, -3.0):
                report.check(f'n({alpha:g}) = 4F3 closed form', mahler.n_measure(alpha, tol=tol).n,
                             mahler.closed_form_outside(alpha, tol=series_tol), 1e-6)
        for alpha in (4.0, 5.0, 10.0):
            fd, series = mahler.hyper_outside_derivative(alpha)
            report.check(f"n'({alpha:g}) = 2F1(1/3, 2/3; 1; 27/alpha^3)/alpha", fd, series, 1e-6)
    return report


def suite_gdi(config: Config) -> RunReport:
    '''
    Path integral against real integral, the F_lambda curve, and the
    Moebius swap of the real integrals.
    '''
    report = RunReport('verify gdi', _inputs(config, lambdas=list(GDI_LAMBDAS)))
    with report.timed():
        tol = config['quad_tol']
        for lam in GDI_LAMBDAS:
            gdi = mahler.lemma_gdi_check(lam, tol=tol)
            report.check(f'|path integral| = |real integral| at lambda = {lam:g}', abs(gdi.lhs), abs(gdi.rhs), 1e-9)
            report.info(f'sign relating the two sides at lambda = {lam:g}', gdi.sign)
            fl = mahler.f_lambda_check(lam)
            report.check(f'F_lambda root satisfies (dy/dx)^2 = p(y)/p(x) at lambda = {lam:g}', fl.max_residual, 0.0, 1e-8)
            report.check(f'F_lambda root tends to lambda - 1 at lambda = {lam:g}', fl.y_end.real, fl.expected_end, 1e-4)
            lhs, rhs = mahler.mobius_swap_check(lam, tol=tol)
            report.check(f'Moebius swap of integrals at lambda = {lam:g}', lhs, rhs, 1e-9)
        gdi = mahler.lemma_gdi_check(1.0, tol=tol)
        report.check('degenerate case lambda = 1', gdi.lhs.real, gdi.rhs, 1e-15)
    return report


def suite_compd(config: Config) -> RunReport:
    '''
    dn~/dalpha by finite differences against its closed forms.
    '''
    report = RunReport('verify compd', _inputs(config, grid=list(COMPD_GRID), fd_step=mahler.FD_STEP))
    with report.timed():
        tol = config['quad_tol']
        for alpha in COMPD_GRID:
            d = mahler.deriv_check(alpha, tol=tol)
            report.check(f'finite difference = transformed 2F1 at alpha = {alpha:g}', d.fd, d.cf2f1, 1e-5)
            report.check(f'transformed 2F1 = K-form at alpha = {alpha:g}', d.cf2f1, d.cfK, 1e-10)
            report.check(f'transformed 2F1 = 2F1 in rho at alpha = {alpha:g}', d.cf2f1, d.cf_rho, 1e-10)
            report.check(f'transformed 2F1 = real integral in lambda at alpha = {alpha:g}', d.cf2f1, d.integral, 1e-9)
    return report


def suite_ypm(config: Config) -> RunReport:
    '''
    Moduli of the branches on the torus, one-sided limits at the toric
    points and the reflected branch.
    '''
    report = RunReport('verify ypm', _inputs(config, samples=YPM_SAMPLES, seed=YPM_SEED))
    with report.timed():
        rng = numpy.random.default_rng(YPM_SEED)
        alphas = rng.uniform(-1.0, 3.0, YPM_SAMPLES)
        thetas = rng.uniform(-math.pi, math.pi, YPM_SAMPLES)
        ordering, product = 0.0, 0.0
        for alpha, theta in zip(alphas, thetas):
            b = mahler.y_branches(float(alpha), float(theta))
            ordering = max(ordering, abs(b.y_minus) - 1, 1 - abs(b.y_plus))
            product = max(product, abs(abs(b.y_plus*b.y_minus) - 1))
        report.check('|y_minus| <= 1 <= |y_plus| on random samples', max(ordering, 0.0), 0.0, 1e-12)
        report.check('|y_plus y_minus| = 1 on random samples', product, 0.0, 1e-10)
        for alpha in (0.5, 2.0):
            toric = mahler.toric_points(alpha)
            worst = max(abs(mahler.q_alpha(alpha, x, y)) for x, y in toric.points.values())
            report.check(f'toric points lie on Q_alpha = 0 at alpha = {alpha:g}', worst, 0.0, 1e-12)
            for limit in mahler.boundary_limits(alpha):
                report.check(f'{limit.name} at alpha = {alpha:g}', abs(limit.value - limit.expected), 0.0, 1e-6)
            c = toric.c_alpha
            worst = max(abs(mahler.reflected_branch_check(alpha, theta))
                        for theta in numpy.linspace(c, 2*math.pi - c, 12)[1:-1])
            report.check(f'reflected branch returns to e^(-i theta) at alpha = {alpha:g}', worst, 0.0, 1e-10)
    return report


def _table1_row(args: Tuple[EllCurveQ, float, float, float]) -> Tuple[str, Optional[float], Optional[float], str]:
    E, tol, series_tol, lvalue_tol = args
    alpha = alpha_of_k(E.k)
    try:
        if abs(alpha) >= 3:
            n = mahler.closed_form_outside(alpha, tol=series_tol)
        else:
            n = mahler.n_measure(alpha, tol=tol).n
        L = l_values(E, lvalue_tol).Lprime0
    except MahlerError as e:
        return (f"n({E.k}^(1/3)) = {E.r} L'({E.label}, 0): {e}", None, None, E.label)
    return (f"n({E.k}^(1/3)) = {E.r} L'({E.label}, 0)", n, float(E.r)*L, E.label)


def suite_table1(config: Config) -> RunReport:
    '''
    Proven formulas n(alpha) = r L'(E, 0) for alpha outside (-1, 3), and
    the identities between n~ and n that they imply for conductors 20, 27
    and 54.
    '''
    report = RunReport('verify table1', _inputs(config, k=list(TABLE1_K)))
    with report.timed():
        curves = _curves(config)
        args = [(curve_by_k(curves, k), config['quad_tol'], config['series_tol'], config['lvalue_tol'])
                for k in TABLE1_K]
        for name, lhs, rhs, _ in _map(_table1_row, args, config['workers']):
            report.check(name, lhs, rhs, 1e-6)
        for identity in mahler.equivalent_identities(tol=config['quad_tol']):
            if identity.gating:
                report.check(identity.name, identity.lhs, identity.rhs, 1e-6)
            else:
                report.info(identity.name, identity.lhs, identity.rhs)
    return report


def suite_modular19(config: Config) -> RunReport:
    '''
    Level 19: period lattice of 19a3, Siegel units, the modular
    parametrization of Q_2 and the eta quotient u.
    '''
    n_terms = config['q_terms']
    report = RunReport('verify modular19', _inputs(config, q_terms=n_terms))
    with report.timed():
        E = curve_by_label(_curves(config), '19a3')
        lattice = agm_periods(E)
        report.check('|Im Omega_minus(19a3)|', abs(lattice.omega_minus.imag), OMEGA_MINUS_19, 1e-4)
        j = modular.j_invariant(lattice.tau)
        report.check('j(tau of the lattice)/j(19a3)', (j/float(E.j)).real, 1.0, 1e-8)

        samples = [complex(-0.45 + 0.05*k, 0.5 + 0.025*k) for k in range(20)]
        worst = 0.0
        for tau in samples:
            x, y = modular.param_xy_19(tau)
            worst = max(worst, abs(mahler.q_alpha(2.0, x, y)))
        report.check('max |Q_2(x(tau), y(tau))| over 20 sample points', worst, 0.0, 1e-8)

        tau = complex(0.3, 0.6)
        worst = 0.0
        for a in range(1, 10):
            product = modular.siegel_g(19, a, tau)
            worst = max(worst, abs(modular.siegel_g_logseries(19, a, tau)/product - 1),
                        abs(modular.siegel_expansion(19, a, n_terms).evaluate(tau)/product - 1))
        report.check('Siegel units: product = log series = q-expansion', worst, 0.0, 1e-10)
        exponents = sum(modular.siegel_exponent(19, a) for a in (1, 7, 8)) - \
            sum(modular.siegel_exponent(19, a) for a in (2, 3, 5))
        report.check('leading exponent of x(tau)', float(exponents), -1.0, 1e-15)

        report.check('u(1/2 + 0.50586 i)', modular.u_tau(U_TAU_SAMPLE), 2.0, 2e-3)
        point = modular.invert_u(2.0)
        report.check('q at u(tau) = 2', point.q.real, Q_AT_ALPHA_2, 1e-4)

        best = modular.search_f_abc(19, an_coeffs(E, 40).a, 40, max_results=1)
        if best:
            cand = best[0]
            report.info(f'best f_(a,b;c) fit to the 19a3 newform: (a, b, c) = ({cand.a}, {cand.b}, {cand.c})',
                        cand.residual)
    return report


def suite_dilog(config: Config) -> RunReport:
    '''
    n~(2) and L'(19a3, 0) against the elliptic dilogarithm sum at the
    point where u(tau) = 2, with the rejected identities as negative
    controls.
    '''
    report = RunReport('verify dilog', _inputs(config))
    with report.timed():
        tol = config['quad_tol']
        curves = _curves(config)
        report.check('D(exp(2 pi i/3))', bloch_wigner(modular.ZETA3), D_ZETA3, 1e-9)
        report.check('D(exp(pi i/3)) = 3/2 D(exp(2 pi i/3))', bloch_wigner(cmath.exp(1j*math.pi/3)),
                     1.5*bloch_wigner(modular.ZETA3), 1e-12)
        q = modular.invert_u(2.0).q.real
        total = modular.elliptic_dilog_sum(q).value
        nt2 = mahler.n_tilde(2.0, tol=tol)
        L19 = l_values(curve_by_label(curves, '19a3'), config['lvalue_tol']).Lprime0
        report.check('n~(2) = -(9/pi) sum D(zeta_3 q^n)', nt2, -9/math.pi*total, 1e-6)
        report.check("(9/(2 pi)) sum D(zeta_3 q^n) = 3/2 L'(19a3, 0)", 9/(2*math.pi)*total, 1.5*L19, 1e-6)
        report.check("n~(2) = -3 L'(19a3, 0)", nt2, -3*L19, 1e-6)
        try:
            relation = pslq([nt2, L19], tol=1e-8)
            found = relation.vector
        except MahlerError:
            found = None
        report.check(f"PSLQ relation for (n~(2), L'(19a3, 0)) is (1, 3), found {found}",
                     1.0 if found == (1, 3) else 0.0, 1.0, 0.5)
        for identity in mahler.rz_negative_check(curves, tol=tol):
            report.check(f'{identity.name} fails', identity.lhs, identity.rhs, 1e-3, kind='distinct')
        for row in modular.dilog_alpha_scan((0.5, 1.0, 1.5, 2.5)):
            report.info(f'n~({row.alpha:g}) against -(9/pi) sum D(zeta_3 q^n)', mahler.n_tilde(row.alpha, tol=tol),
                        row.n_tilde)
    return report


def suite_b11(config: Config) -> RunReport:
    report = RunReport('verify b11', _inputs(config))
    with report.timed():
        E = curve_by_label(_curves(config), '11a3')
        b11 = mahler.s_family_b11(tol=config['quad_tol'])
        L = l_values(E, config['lvalue_tol']).Lprime0
        report.check("split integrals of y^2 + (x^2 + 1) y + x^3 = L'(11a3, 0)", b11.lhs, L, 1e-5)
        report.info("split integrals against -L'(11a3, 0)", b11.lhs, -L)
    return report


def suite_fe(config: Config) -> RunReport:
    '''
    Two-variable measures against n, and the functional equation relating
    the g family to n.
    '''
    report = RunReport('verify fe', _inputs(config))
    with report.timed():
        tol = config['quad_tol']
        with warnings.catch_warnings():
            warnings.simplefilter('ignore', MahlerWarning)
            for alpha in (0.0, 2.0, 4.0):
                m = mahler.mahler2d('P_alpha', alpha, tol=1e-7, method='jensen').value
                report.check(f'm(P_alpha) = n(alpha) at alpha = {alpha:g}', m, mahler.n_measure(alpha, tol=tol).n, 1e-4)
            m = mahler.mahler2d('P_alpha', 4.0, tol=1e-5, method='quad').value
            report.check('m(P_alpha) = n(alpha) at alpha = 4 by nested quadrature', m,
                         mahler.n_measure(4.0, tol=tol).n, 1e-4)
        fe = mahler.functional_equation_check(0.01)
        report.check('3 m(g_(1/p)) = n(...) + 4 n(...) at p = 0.01', fe.lhs, fe.rhs, 1e-4)
        fe = mahler.functional_equation_check(-0.5)
        report.info('3 m(g_(1/p)) against n(...) + 4 n(...) at p = -1/2', fe.lhs, fe.rhs)
    return report


def suite_sa(config: Config) -> RunReport:
    '''
    Conductor 27, 36 and 108 combination at alpha_0 slightly above 3.
    Informational only.
    '''
    alpha0 = (6 - 6*2**(1/3) + 18*4**(1/3))**(1/3)
    report = RunReport('verify sa', _inputs(config, alpha0=alpha0))
    with report.timed():
        curves = _curves(config)
        L = {label: l_values(curve_by_label(curves, label), config['lvalue_tol']).Lprime0
             for label in ('108a1', '36a1', '27a3')}
        combination = 0.5*(L['108a1'] + L['36a1'] - 3*L['27a3'])
        n = mahler.n_measure(alpha0, tol=config['quad_tol']).n
        report.info(f"n({alpha0:.6f}) against (L'(108a1) + L'(36a1) - 3 L'(27a3))/2", n, combination)
    return report


SUITES: Dict[str, Callable[[Config], RunReport]] = {
    'hyper': suite_hyper,
    'naR': suite_naR,
    'gdi': suite_gdi,
    'compd': suite_compd,
    'ypm': suite_ypm,
    'table1': suite_table1,
    'modular19': suite_modular19,
    'dilog': suite_dilog,
    'b11': suite_b11,
    'fe': suite_fe,
    'sa': suite_sa,
}


def run_suite(name: str, config: Config) -> RunReport:
    if name not in SUITES:
        raise DomainError(f'Unknown suite "{name}"; choose from {", ".join(SUITES)}')
    return SUITES[name](config)




def _table2_row(args) -> Dict:
    E, tol, lvalue_tol, max_den, row_tol = args
    alpha = alpha_of_k(E.k)
    row = {'k': E.k, 'label': E.label, 'expected': E.r, 'ratio': None, 'recognized': None, 'error': None,
           'tol': row_tol}
    try:
        nt = mahler.n_tilde(alpha, tol=tol)
        L = l_values(E, lvalue_tol).Lprime0
        row['ratio'] = nt/L
        guess = rational_reconstruct(row['ratio'], max_den, tol=row_tol)
        row['recognized'] = guess.as_fraction()
    except MahlerError as e:
        row['error'] = str(e)
    return row


def run_table2(config: Config, subset: Optional[Sequence[int]]=None) -> RunReport:
    '''
    Ratios n~(k^(1/3))/L'(E, 0) for the family rows with 1 <= k <= 26,
    recognized as fractions and compared with the curve table.

    Rows outside the default subset are compared at tolerance 1e-5; rows
    whose conductor is in doubt are informational.  A failing row does not
    stop the others.
    '''
    subset = list(TABLE2_GATING_K if subset is None else subset)
    for k in subset:
        if not 1 <= k <= 26:
            raise DomainError(f'Table rows have 1 <= k <= 26, got "{k}"')
    report = RunReport('table2', _inputs(config, k=subset, max_den=config['max_den']))
    with report.timed():
        curves = _curves(config)
        args = []
        for k in subset:
            E = curve_by_k(curves, k)
            args.append((E, config['quad_tol'], config['lvalue_tol'], config['max_den'],
                         1e-8 if k in TABLE2_GATING_K else 1e-5))
        for row in _map(_table2_row, args, config['workers']):
            name = f"k = {row['k']} ({row['label']}): n~/L' = {row['expected']}"
            if row['error'] is not None:
                name = f"{name}: {row['error']}"
            kind = 'info' if row['k'] in TABLE2_NONGATING_K else 'equal'
            report.check(name, row['ratio'], None if row['expected'] is None else float(row['expected']),
                         row['tol'], kind=kind)
            if row['recognized'] is not None and row['recognized'] != row['expected']:
                warnings.warn(f"Row k = {row['k']}: recognized ratio {row['recognized']} differs from "
                              f"the table value {row['expected']}", MahlerWarning)
    return report




def run_measure(alpha: float, config: Config) -> RunReport:
    '''
    n(alpha) with its breakdown, the applicable closed form, and the
    L-value formula when alpha^3 is a curve-table entry.
    '''
    alpha = float(alpha)
    report = RunReport('measure', _inputs(config, alpha=alpha))
    with report.timed():
        tol, series_tol = config['quad_tol'], config['series_tol']
        breakdown = mahler.n_measure(alpha, tol=tol)
        report.info('n', breakdown.n)
        if breakdown.I is not None:
            report.info('I', breakdown.I)
            report.info('J', breakdown.J)
            report.info('n~', breakdown.n_tilde)
        if alpha == 0:
            report.check("n(0) = L'(chi_-3, -1)", breakdown.n, dirichlet_Lprime_chi3(), 1e-9)
        elif breakdown.n_tilde is not None:
            report.check('n~ = 3F2 closed form', breakdown.n_tilde,
                         mahler.closed_form_inside(alpha, tol=series_tol).value, 1e-8)
        elif abs(alpha) >= 3:
            report.check('n = 4F3 closed form', breakdown.n, mahler.closed_form_outside(alpha, tol=series_tol),
                         1e-6 if abs(alpha) == 3 else 1e-8)
        k = round(alpha**3)
        if k != 0 and abs(alpha**3 - k) < 1e-9*max(1.0, abs(k)):
            curves = _curves(config)
            try:
                E = curve_by_k(curves, k)
            except MahlerError:
                E = None
            if E is not None and E.r is not None:
                L = l_values(E, config['lvalue_tol']).Lprime0
                value = breakdown.n if breakdown.n_tilde is None else breakdown.n_tilde
                symbol = 'n' if breakdown.n_tilde is None else 'n~'
                kind = 'info' if k in TABLE2_NONGATING_K else 'equal'
                report.check(f"{symbol} = {E.r} L'({E.label}, 0)", value, float(E.r)*L, 1e-6, kind=kind)
    return report




def _scan_row(args) -> Dict:
    alpha, tol, series_tol = args
    breakdown = mahler.n_measure(alpha, tol=tol)
    row = {'alpha': alpha, 'n': breakdown.n, 'I': breakdown.I, 'J': breakdown.J, 'n_tilde': breakdown.n_tilde,
           'closed_form': None, 'abs_diff': None}
    if breakdown.n_tilde is not None:
        cf = mahler.closed_form_inside(alpha, tol=series_tol)
        if not cf.degenerate:
            row['closed_form'] = cf.value
            row['abs_diff'] = abs(breakdown.n_tilde - cf.value)
    elif abs(alpha) >= 3:
        with warnings.catch_warnings():
            warnings.simplefilter('ignore', MahlerWarning)
            row['closed_form'] = mahler.closed_form_outside(alpha, tol=series_tol)
        row['abs_diff'] = abs(breakdown.n - row['closed_form'])
    return row


def run_scan(alpha_min: float, alpha_max: float, steps: int, config: Config) -> Tuple[RunReport, List[Dict]]:
    '''
    n, I, J and n~ on an equally spaced grid, each row with the closed form
    that applies.  Rows come back in grid order.
    '''
    if not alpha_min < alpha_max:
        raise DomainError(f'Scan needs alpha_min < alpha_max, got {alpha_min} and {alpha_max}')
    if steps < 2:
        raise DomainError(f'Scan needs at least 2 steps, got "{steps}"')
    alphas = [float(a) for a in numpy.linspace(alpha_min, alpha_max, steps)]
    report = RunReport('scan', _inputs(config, alpha_min=alpha_min, alpha_max=alpha_max, steps=steps))
    with report.timed():
        rows = _map(_scan_row, [(a, config['quad_tol'], config['series_tol']) for a in alphas], config['workers'])
        for row in rows:
            if row['abs_diff'] is not None:
                value = row["n"] if row["n_tilde"] is None else row["n_tilde"]
                report.check(f"alpha = {row['alpha']:.6g}: closed form", value, row["closed_form"],
                             1e-6 if abs(row["alpha"]) == 3 else 1e-8)
    return report, rows




def run_curves(config: Config) -> Tuple[RunReport, List[Dict]]:
    '''
    The curve table with discriminant, j, agreement of j with the family,
    and the root number found from the functional equation.
    '''
    report = RunReport('curves', _inputs(config, curve_table=config['curve_table'] or 'packaged'))
    listing = []
    with report.timed():
        for E in _curves(config):
            residuals = root_number_residuals(E)
            eps = 1 if residuals[1] <= residuals[-1] else -1
            entry = {'label': E.label, 'k': E.k, 'ainvs': list(E.ainvs), 'N': E.N, 'discriminant': E.discriminant,
                     'j': E.j, 'eps': eps, 'stored_eps': E.eps, 'family_j': None}
            if E.k is not None and E.k != 27:
                entry['family_j'] = family_j(E.k) == E.j
                report.check(f'{E.label}: j agrees with k = {E.k}', 1.0 if entry['family_j'] else 0.0, 1.0, 0.5)
            kind = 'info' if E.k in TABLE2_NONGATING_K else 'equal'
            report.check(f'{E.label}: functional equation with root number {eps:+d}', residuals[eps], 0.0, 1e-6, kind=kind)
            if E.eps is not None:
                report.check(f'{E.label}: stored root number {E.eps:+d}', eps, E.eps, 0.5)
            listing.append(entry)
    return report, listing
