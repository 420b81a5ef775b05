# -*- coding: utf-8 -*-
#
# Copyright (c) 2026, mahlerq developers
# All rights reserved.
#
# Licensed under the BSD 3-Clause License:
# http://opensource.org/licenses/BSD-3-Clause
#


'''
Mahler measures of the family

    Q_alpha(x, y) = y^2 + (x^2 - alpha x) y + x

and of the related families P_alpha = x^3 + y^3 + 1 - alpha x y and
g = (x + 1)(y + 1)(x + y) - alpha x y.

By Jensen's formula n(alpha) = m(Q_alpha) is (1/pi) times the integral of
log|y_plus(e^(i theta))| over [0, pi], where y_plus is the root of larger
modulus.  For -1 < alpha < 3 the curve meets the torus, at theta = 0 and
theta = +-c(alpha), c(alpha) = arccos((alpha - 1)/2), and the integral is
split there into I(alpha) (over [0, c]) and J(alpha) (over [c, pi]).  The
modified measure is n~(alpha) = n - 3J = I - 2J.

The module also carries the numerical checks of the closed forms: the 3F2
and 4F3 hypergeometric expressions, the substitution
alpha = (lambda^3 - 2)/lambda and the elliptic integrals in lambda that
express the derivative of n~.
'''


import cmath
import math
import warnings
from typing import Callable, Dict, List, NamedTuple, Optional, Tuple

import numpy
from scipy import optimize

from .elliptic import EllCurveQ, curve_by_label, l_values, load_curve_table
from .err import ConvergenceError, DomainError, MahlerWarning
from .quad import integrate, integrate_path
from .specfun import ellK_param, gamma_real, hyper


FD_STEP = 1e-4
LIMIT_STEP = 1e-9
# Arguments with |z| = 1 converge slowly; 1e-10 is what 2^22 terms give.
UNIT_CIRCLE_SERIES_TOL = 1e-10




class AlphaParam(NamedTuple):
    alpha: float
    region: str


def region_classify(alpha: float) -> AlphaParam:
    '''
    Position of real alpha relative to the set where Q_alpha vanishes on the
    torus, whose real part is the interval (-1, 3).
    '''
    if -1 < alpha < 3:
        region = 'inside'
    elif alpha in (-1, 3):
        region = 'boundary'
    else:
        region = 'outside'
    return AlphaParam(float(alpha), region)


def _require_inside(alpha: float, name: str):
    if not -1 < alpha < 3:
        raise DomainError(f'{name}() requires -1 < alpha < 3, got "{alpha}"')


def q_alpha(alpha: float, x: complex, y: complex) -> complex:
    return y*y + (x*x - alpha*x)*y + x




class BranchPair(NamedTuple):
    x: complex
    y_plus: complex
    y_minus: complex


def y_pair(alpha: float, x: complex) -> BranchPair:
    '''
    Roots of Q_alpha(x, .) for any nonzero complex x:

        y_plus = -(x^2 - alpha x)(1/2 + s),   s = sqrt(1/4 - 1/(x (x - alpha)^2)),

    with the principal square root, and y_minus = x/y_plus.  At x = alpha the
    linear term vanishes and y_plus = -sqrt(-x).
    '''
    x = complex(x)
    if x == 0:
        raise DomainError('Q_alpha(0, y) = y^2 has no branch decomposition')
    B = x*x - alpha*x
    if B == 0:
        y_plus = -cmath.sqrt(-x)
    else:
        s = cmath.sqrt(0.25 - 1/(x*(x - alpha)**2))
        y_plus = -B*(0.5 + s)
    return BranchPair(x, y_plus, x/y_plus)


def y_branches(alpha: float, theta: float) -> BranchPair:
    '''
    Branch pair at x = e^(i theta).
    '''
    return y_pair(alpha, cmath.exp(1j*theta))


def log_abs_y_plus(alpha: float, theta: float) -> float:
    return math.log(abs(y_branches(alpha, theta).y_plus))




def c_alpha(alpha: float) -> float:
    '''
    c(alpha) = arccos((alpha - 1)/2) for -1 <= alpha <= 3.
    '''
    if not -1 <= alpha <= 3:
        raise DomainError(f'c(alpha) is defined for -1 <= alpha <= 3, got "{alpha}"')
    return math.acos(min(1.0, max(-1.0, (alpha - 1)/2)))


class ToricData(NamedTuple):
    c_alpha: float
    Y_plus: complex
    Y_minus: complex
    points: Dict[str, Tuple[complex, complex]]


def toric_points(alpha: float) -> ToricData:
    '''
    Points where Q_alpha = 0 meets the torus:

        P1+- = (1, Y+-),  P2+- = (Y+-, 1),  P3+- = (Y+-, Y+-),
        Y+- = (alpha - 1)/2 +- i sqrt((3 - alpha)(alpha + 1))/2.
    '''
    _require_inside(alpha, 'toric_points')
    imag = math.sqrt((3 - alpha)*(alpha + 1))/2
    Y_plus = complex((alpha - 1)/2, imag)
    Y_minus = Y_plus.conjugate()
    points = {}
    for sign, Y in (('+', Y_plus), ('-', Y_minus)):
        points['P1' + sign] = (1+0j, Y)
        points['P2' + sign] = (Y, 1+0j)
        points['P3' + sign] = (Y, Y)
    return ToricData(c_alpha(alpha), Y_plus, Y_minus, points)




class MeasureBreakdown(NamedTuple):
    n: float
    I: Optional[float]
    J: Optional[float]
    n_tilde: Optional[float]
    err: float


def _theta_integral(alpha: float, a: float, b: float, tol: float, breakpoints=()) -> Tuple[float, float]:
    result = integrate(lambda t: log_abs_y_plus(alpha, t), a, b, breakpoints=breakpoints, tol=tol)
    return result.value/math.pi, result.error_estimate/math.pi


def i_integral(alpha: float, *, tol: float=1e-11) -> float:
    '''
    I(alpha) = (1/pi) * integral of log|y_plus| over [0, c(alpha)].
    '''
    _require_inside(alpha, 'i_integral')
    return _theta_integral(alpha, 0.0, c_alpha(alpha), tol)[0]


def j_integral(alpha: float, *, tol: float=1e-11) -> float:
    '''
    J(alpha) = (1/pi) * integral of log|y_plus| over [c(alpha), pi].
    '''
    _require_inside(alpha, 'j_integral')
    return _theta_integral(alpha, c_alpha(alpha), math.pi, tol)[0]


def n_measure(alpha: float, *, tol: float=1e-11) -> MeasureBreakdown:
    '''
    n(alpha) = m(Q_alpha) by quadrature.  For -1 < alpha < 3 the integral is
    split at c(alpha) and I, J and n~ are filled in as well.
    '''
    alpha = float(alpha)
    if region_classify(alpha).region != 'inside':
        breakpoints = (c_alpha(alpha),) if -1 <= alpha <= 3 else ()
        n, err = _theta_integral(alpha, 0.0, math.pi, tol, breakpoints)
        return MeasureBreakdown(n, None, None, None, err)
    c = c_alpha(alpha)
    I, err_I = _theta_integral(alpha, 0.0, c, tol/2)
    J, err_J = _theta_integral(alpha, c, math.pi, tol/2)
    return MeasureBreakdown(I + J, I, J, I - 2*J, err_I + err_J)


def n_tilde(alpha: float, *, tol: float=1e-11) -> float:
    '''
    Modified measure n~(alpha) = n(alpha) - 3 J(alpha) = I(alpha) - 2 J(alpha).
    '''
    _require_inside(alpha, 'n_tilde')
    return n_measure(alpha, tol=tol).n_tilde




def closed_form_outside(alpha: float, *, tol: float=1e-15) -> float:
    '''
    n(alpha) = Re(log alpha - (2/alpha^3) 4F3(4/3, 5/3, 1, 1; 2, 2, 2; 27/alpha^3))
    where the series converges, |alpha| >= 3.
    '''
    alpha = float(alpha)
    if abs(alpha) < 3:
        raise DomainError(
            f'closed_form_outside() requires |alpha| >= 3, got "{alpha}"; '
            f'use closed_form_inside() on (-1, 3) and quadrature on (-3, -1]')
    z = 27/alpha**3
    if abs(abs(z) - 1) < 1e-15:
        tol = max(tol, UNIT_CIRCLE_SERIES_TOL)
    F = hyper([4/3, 5/3, 1, 1], [2, 2, 2], z, tol=tol).real
    return math.log(abs(alpha)) - 2*F/alpha**3


class HyperClosedForm(NamedTuple):
    s_alpha: float
    printed_s_alpha: float
    thm_prefactor: float
    gamma_consts: Tuple[float, float]


def hyper_constants() -> Tuple[float, float]:
    '''
    Gamma products C1 = 2^(1/3) G(1/6) G(1/3) G(1/2)/(sqrt(3) pi^2) and
    C2 = G(2/3)^3/(2 pi^2) of the inside closed form.
    '''
    C1 = 2**(1/3)*gamma_real(1/6)*gamma_real(1/3)*gamma_real(1/2)/(math.sqrt(3)*math.pi**2)
    C2 = gamma_real(2/3)**3/(2*math.pi**2)
    return C1, C2


def hyper_closed_form(alpha: float) -> HyperClosedForm:
    '''
    Constants of the inside closed form at alpha.

    The weight that matches the measure is -1/4 on both sides of 0:
    n~ is analytic at alpha = 0.  The weight -(1 + 3 sgn(alpha))^2/64,
    which gives -1/16 for alpha < 0, is kept as `printed_s_alpha` for
    comparison.
    '''
    sgn = math.copysign(1.0, alpha) if alpha != 0 else 0.0
    return HyperClosedForm(-0.25, -(1 + 3*sgn)**2/64, 4/(1 - 3*sgn), hyper_constants())


class ClosedFormValue(NamedTuple):
    value: float
    degenerate: bool
    bracket: float
    printed_value: float


def closed_form_inside(alpha: float, *, tol: float=1e-15) -> ClosedFormValue:
    '''
    n~(alpha) = s (C1 alpha 3F2(1/3, 1/3, 1/3; 2/3, 4/3; alpha^3/27)
                   + C2 alpha^2 3F2(2/3, 2/3, 2/3; 4/3, 5/3; alpha^3/27))
    for -1 < alpha < 3.

    At alpha = 0 the expression is 0 although n(0) is not; the result is
    flagged `degenerate`.
    '''
    _require_inside(alpha, 'closed_form_inside')
    if alpha == 0:
        return ClosedFormValue(0.0, True, 0.0, 0.0)
    form = hyper_closed_form(alpha)
    C1, C2 = form.gamma_consts
    z = alpha**3/27
    bracket = (C1*alpha*hyper([1/3, 1/3, 1/3], [2/3, 4/3], z, tol=tol).real
               + C2*alpha**2*hyper([2/3, 2/3, 2/3], [4/3, 5/3], z, tol=tol).real)
    return ClosedFormValue(form.s_alpha*bracket, False, bracket, form.printed_s_alpha*bracket)


def hyper_outside_derivative(alpha: float, *, h: float=FD_STEP) -> Tuple[float, float]:
    '''
    For alpha > 3: central difference of closed_form_outside() and
    (1/alpha) 2F1(1/3, 2/3; 1; 27/alpha^3).
    '''
    if not alpha - h > 3:
        raise DomainError(f'hyper_outside_derivative() requires alpha > 3 + h, got "{alpha}"')
    fd = (closed_form_outside(alpha + h) - closed_form_outside(alpha - h))/(2*h)
    series = hyper([1/3, 2/3], [1], 27/alpha**3).real/alpha
    return fd, series




class LambdaSub(NamedTuple):
    lam: float
    alpha: float
    p_roots: Tuple[complex, complex, complex]
    gamma: complex


def lambda_sub(lam: float) -> LambdaSub:
    '''
    Data of the substitution alpha = (lambda^3 - 2)/lambda for 1 <= lambda < 2.
    '''
    if not 1 <= lam < 2:
        raise DomainError(f'lambda must lie in [1, 2), got "{lam}"')
    alpha = (lam**3 - 2)/lam
    x2, x3 = numpy.roots([1, 4/lam - lam**2, 4/lam**2])
    imag = (lam + 1)/(2*lam)*math.sqrt((2 - lam)*(lam**3 + lam - 2))
    gamma = complex((lam**3 - lam - 2)/(2*lam), imag)
    return LambdaSub(lam, alpha, (complex(lam**2), complex(x2), complex(x3)), gamma)


def solve_lambda(alpha: float) -> LambdaSub:
    '''
    The unique lambda in [1, 2) with lambda^3 - alpha lambda - 2 = 0, for
    -1 <= alpha < 3.
    '''
    if not -1 <= alpha < 3:
        raise DomainError(f'solve_lambda() requires -1 <= alpha < 3, got "{alpha}"')
    if alpha == -1:
        return lambda_sub(1.0)
    lam = optimize.brentq(lambda t: t**3 - alpha*t - 2, 1.0, 2.0, xtol=1e-15, rtol=4*numpy.finfo(float).eps)
    return lambda_sub(lam)


def p_lambda(lam: float, x: complex) -> complex:
    '''
    p_lambda(x) = x (lambda^2 - x)(x^2 + (4/lambda - lambda^2) x + 4/lambda^2).
    '''
    return x*(lam**2 - x)*(x*x + (4/lam - lam**2)*x + 4/lam**2)


def _p_quadratic(lam: float, x: float) -> float:
    return x*x + (4/lam - lam**2)*x + 4/lam**2


def mobius(lam: float, x: complex) -> complex:
    '''
    Involution x -> (lambda^2 - x)/(lambda x + 1), which exchanges the roots
    0 and lambda^2 of p_lambda as well as the other two, and swaps 1 with
    lambda - 1.
    '''
    return (lam**2 - x)/(lam*x + 1)




class GdiResult(NamedTuple):
    lhs: complex
    rhs: float
    sign: int


def _tracked_sqrt(g: Callable[[complex], complex], z0: complex, z1: complex, points: int=4001) -> Callable[[complex], complex]:
    '''
    Square root of g continuous along the segment z0 -> z1, seeded by the
    principal value at the midpoint.
    '''
    t = numpy.linspace(0.0, 1.0, points)
    values = numpy.array([cmath.sqrt(g(z0 + s*(z1 - z0))) for s in t])
    mid = points//2
    for direction in (range(mid + 1, points), range(mid - 1, -1, -1)):
        for k in direction:
            prev = values[k - 1] if k > mid else values[k + 1]
            if abs(values[k] + prev) < abs(values[k] - prev):
                values[k] = -values[k]
    dz = z1 - z0

    def root(z: complex) -> complex:
        w = cmath.sqrt(g(z))
        s = ((z - z0)/dz).real
        k = min(max(int(round(s*(points - 1))), 0), points - 1)
        if abs(w + values[k]) < abs(w - values[k]):
            w = -w
        return w
    return root


def lemma_gdi_check(lam: float, *, tol: float=1e-11) -> GdiResult:
    '''
    Path integral of 1/sqrt(-p_lambda) along the segment lambda - 1 -> gamma,
    against the real integral of the same function from 0 to -1/lambda.

    The square root on the path is continued from the principal value at the
    midpoint, so the two sides agree up to a global sign; `sign` records the
    one that matches.
    '''
    sub = lambda_sub(lam)
    # On (-1/lambda, 0), -p = (-x)(lambda^2 - x) q(x) > 0 with a simple zero at 0.
    rhs = -integrate(lambda x: 1/math.sqrt((lam**2 - x)*_p_quadratic(lam, x)), -1/lam, 0.0,
                     weight='alg', wvar=(0.0, -0.5), tol=tol).value
    if lam == 1:
        return GdiResult(complex(rhs), rhs, 1)
    start, end = complex(lam - 1), sub.gamma
    root = _tracked_sqrt(lambda z: -p_lambda(lam, z), start, end)
    lhs = integrate_path(lambda z: 1/root(z), [start, end], tol=tol)
    sign = 1 if abs(lhs - rhs) <= abs(lhs + rhs) else -1
    return GdiResult(lhs, rhs, sign)


def lemma_dl_integral(lam: float, *, tol: float=1e-11) -> float:
    '''
    -(1/pi) * integral of 1/sqrt(p_lambda) over (0, lambda^2).
    '''
    value = integrate(lambda x: 1/math.sqrt(_p_quadratic(lam, x)), 0.0, lam**2,
                      weight='alg', wvar=(-0.5, -0.5), tol=tol).value
    return -value/math.pi


def lemma_dl_check(alpha: float, *, h: float=FD_STEP, tol: float=1e-11) -> Tuple[float, float]:
    '''
    Central difference of n~ at alpha against the elliptic integral in
    lambda = lambda(alpha).
    '''
    _require_derivative_domain(alpha, h)
    fd = (n_tilde(alpha + h, tol=tol) - n_tilde(alpha - h, tol=tol))/(2*h)
    return fd, lemma_dl_integral(solve_lambda(alpha).lam, tol=tol)


def mobius_swap_check(lam: float, *, tol: float=1e-11) -> Tuple[float, float]:
    '''
    Integrals of 1/sqrt(p_lambda) over (0, lambda - 1) and (1, lambda^2),
    which the involution `mobius` maps onto each other.
    '''
    if not 1 <= lam < 2:
        raise DomainError(f'lambda must lie in [1, 2), got "{lam}"')
    if lam == 1:
        return 0.0, 0.0
    lhs = integrate(lambda x: 1/math.sqrt((lam**2 - x)*_p_quadratic(lam, x)), 0.0, lam - 1,
                    weight='alg', wvar=(-0.5, 0.0), tol=tol).value
    rhs = integrate(lambda x: 1/math.sqrt(x*_p_quadratic(lam, x)), 1.0, lam**2,
                    weight='alg', wvar=(0.0, -0.5), tol=tol).value
    return lhs, rhs




def f_lambda_coefficients(lam: float) -> Tuple[float, float]:
    '''
    The constants P = l^3 - l^2 + l - 2 and
    C = l^7 - 2l^6 + 2l^5 - 5l^4 + 6l^3 - 6l^2 + 6l - 4 of F_lambda.
    '''
    l = lam
    P = l**3 - l**2 + l - 2
    C = l**7 - 2*l**6 + 2*l**5 - 5*l**4 + 6*l**3 - 6*l**2 + 6*l - 4
    return P, C


def f_lambda(lam: float, x: complex, y: complex) -> complex:
    '''
    Symmetric polynomial F_lambda(x, y) whose zero set relates dy/dx to
    sqrt(p_lambda(y)/p_lambda(x)).
    '''
    l = lam
    P, C = f_lambda_coefficients(lam)
    return (l*l*(l - 1)*x*x*y*y - l*(l - 1)*P*(x*x*y + x*y*y) + l*l*(x*x + y*y) + C*x*y
            - 2*l*l*(l - 1)*(x + y) + l*l*(l - 1)**2)


def _f_lambda_partials(lam: float, x: complex, y: complex) -> Tuple[complex, complex]:
    l = lam
    P, C = f_lambda_coefficients(lam)
    Fx = (2*l*l*(l - 1)*x*y*y - l*(l - 1)*P*(2*x*y + y*y) + 2*l*l*x + C*y - 2*l*l*(l - 1))
    Fy = (2*l*l*(l - 1)*x*x*y - l*(l - 1)*P*(x*x + 2*x*y) + 2*l*l*y + C*x - 2*l*l*(l - 1))
    return Fx, Fy


def _f_lambda_roots(lam: float, x: float) -> numpy.ndarray:
    l = lam
    P, C = f_lambda_coefficients(lam)
    a = l*l*(l - 1)*x*x - l*(l - 1)*P*x + l*l
    b = -l*(l - 1)*P*x*x + C*x - 2*l*l*(l - 1)
    c = l*l*x*x - 2*l*l*(l - 1)*x + l*l*(l - 1)**2
    return numpy.roots([a, b, c])


class FLambdaResult(NamedTuple):
    max_residual: float
    y_end: complex
    expected_end: float


def f_lambda_check(lam: float, samples: int=50) -> FLambdaResult:
    '''
    Follow the root y(x) of F_lambda(x, y) = 0 that starts in the upper
    half-plane at x = -1/lambda, for x in (-1/lambda, 0), and return the
    largest value of |(dy/dx)^2 - p(y)/p(x)|/max(1, |p(y)/p(x)|).

    The root is continued to x = -1e-12, where it should approach
    lambda - 1.
    '''
    if samples < 1:
        raise DomainError(f'f_lambda_check() needs at least one sample, got "{samples}"')
    if not 1 <= lam < 2:
        raise DomainError(f'lambda must lie in [1, 2), got "{lam}"')
    if lam == 1:
        # F_1 = (x - y)^2
        return FLambdaResult(0.0, 0j, 0.0)
    roots = _f_lambda_roots(lam, -1/lam)
    y = complex(roots[numpy.argmax(roots.imag)])
    max_residual = 0.0
    xs = -(1/lam)*(1 - (numpy.arange(samples) + 0.5)/samples)
    for x in xs:
        roots = _f_lambda_roots(lam, x)
        y = complex(roots[numpy.argmin(abs(roots - y))])
        Fx, Fy = _f_lambda_partials(lam, x, y)
        if Fy == 0:
            raise ConvergenceError(f'Root tracking of F_lambda failed at x = {x}: dF/dy vanishes')
        ratio = p_lambda(lam, y)/p_lambda(lam, x)
        residual = abs((Fx/Fy)**2 - ratio)/max(1.0, abs(ratio))
        max_residual = max(max_residual, residual)
    for x in xs[-1]*numpy.logspace(0, math.log10(1e-12/abs(xs[-1])), 80):
        roots = _f_lambda_roots(lam, x)
        y = complex(roots[numpy.argmin(abs(roots - y))])
    return FLambdaResult(max_residual, y, lam - 1)




class KFormParams(NamedTuple):
    A1: float
    A2: float
    B1: float
    B2: float
    t1: float
    t2: float
    rho: float


def k_form_params(lam: float) -> KFormParams:
    '''
    Constants of the K-form of dn~/dalpha, with r = sqrt(lambda^3 + 1).
    '''
    y = lam**3
    r = math.sqrt(y + 1)
    A1 = (y + 2 - 2*r)/(4*r)
    B1 = (-y - 2 - 2*r)/(4*r)
    A2 = (-y + 2 + 2*r)/(4*r)
    B2 = (y - 2 + 2*r)/(4*r)
    t1 = -(y + 2 - 2*r)/y
    rho = (y*y - 4*y - 8 + 8*r)/(16*r)
    return KFormParams(A1, A2, B1, B2, t1, -t1, rho)


class DerivCheck(NamedTuple):
    fd: float
    cf2f1: float
    cf_rho: float
    cfK: float
    integral: float


def _require_derivative_domain(alpha: float, h: float):
    if not (-1 + 2*h < alpha < -2*h or 2*h < alpha < 3 - 2*h):
        raise DomainError(f'Derivative checks need alpha in (-1, 0) or (0, 3) at least 2h = {2*h} from the ends, got "{alpha}"')


def derivative_2f1(alpha: float) -> float:
    '''
    Transformed 2F1 form of dn~/dalpha.
    '''
    lam = solve_lambda(alpha).lam
    y = lam**3
    z = 27*y*y/(y + 4)**3
    F = hyper([1/3, 2/3], [1], z).real
    if alpha > 0:
        return -2*lam/(y + 4)*F
    return (4 - 2*y)/(alpha*(y + 4))*F


def derivative_rho(lam: float) -> float:
    '''
    -lambda/(2 (lambda^3 + 1)^(1/4)) 2F1(1/2, 1/2; 1; rho(lambda)).
    '''
    rho = k_form_params(lam).rho
    return -lam/(2*(lam**3 + 1)**0.25)*hyper([0.5, 0.5], [1], rho).real


def derivative_K(lam: float) -> float:
    '''
    K-form -4 lambda/(pi sqrt((r + 1)^3 (3 - r))) K(m), m = A1 B2/(A2 B1) < 0.
    '''
    params = k_form_params(lam)
    r = math.sqrt(lam**3 + 1)
    m = params.A1*params.B2/(params.A2*params.B1)
    return -4*lam/(math.pi*math.sqrt((r + 1)**3*(3 - r)))*ellK_param(m)


def deriv_check(alpha: float, *, h: float=FD_STEP, tol: float=1e-11) -> DerivCheck:
    '''
    dn~/dalpha five ways: central difference of the quadrature, the
    transformed 2F1, the 2F1 in rho, the K-form and the real integral in
    lambda.
    '''
    _require_derivative_domain(alpha, h)
    lam = solve_lambda(alpha).lam
    fd = (n_tilde(alpha + h, tol=tol) - n_tilde(alpha - h, tol=tol))/(2*h)
    return DerivCheck(fd, derivative_2f1(alpha), derivative_rho(lam), derivative_K(lam),
                      lemma_dl_integral(lam, tol=tol))




class BoundaryLimit(NamedTuple):
    name: str
    theta: float
    value: complex
    expected: complex


def boundary_limits(alpha: float, *, delta: float=LIMIT_STEP) -> List[BoundaryLimit]:
    '''
    One-sided limits of the branches at the toric points, evaluated at
    distance `delta`:

        y_plus(-c+) = 1,  y_plus(c-) = 1,  y_plus(0+) = Y-,  y_plus(0-) = Y+,
        y_minus(c+) = 1,  y_minus(-c-) = 1.
    '''
    toric = toric_points(alpha)
    c = toric.c_alpha
    table = [
        ('y_plus(-c+)', -c + delta, 'y_plus', 1+0j),
        ('y_plus(c-)', c - delta, 'y_plus', 1+0j),
        ('y_plus(0+)', delta, 'y_plus', toric.Y_minus),
        ('y_plus(0-)', -delta, 'y_plus', toric.Y_plus),
        ('y_minus(c+)', c + delta, 'y_minus', 1+0j),
        ('y_minus(-c-)', -c - delta, 'y_minus', 1+0j),
    ]
    return [BoundaryLimit(name, theta, getattr(y_branches(alpha, theta), branch), expected)
            for name, theta, branch, expected in table]


def reflected_branch_check(alpha: float, theta: float) -> complex:
    '''
    y_minus(1/y_minus(e^(i theta))) - e^(-i theta), which vanishes away from
    the toric points: (x, y) -> (1/y, 1/x) preserves Q_alpha = 0.
    '''
    x_reflected = 1/y_branches(alpha, theta).y_minus
    return y_pair(alpha, x_reflected).y_minus - cmath.exp(-1j*theta)




def _poly_P(alpha: float, x: complex) -> List[complex]:
    # x^3 + y^3 + 1 - alpha x y
    return [1, 0, -alpha*x, x**3 + 1]


def _poly_g(alpha: float, x: complex) -> List[complex]:
    # (x + 1)(y + 1)(x + y) - alpha x y
    return [x + 1, (x + 1)**2 - alpha*x, x*(x + 1)]


def _poly_Q(alpha: float, x: complex) -> List[complex]:
    return [1, x*x - alpha*x, x]


POLYNOMIALS = {'P_alpha': _poly_P, 'g_family': _poly_g, 'Q_alpha': _poly_Q}


class Mahler2DResult(NamedTuple):
    value: float
    error: float
    torus_singular: bool


def _y_roots(coeffs: List[complex]) -> numpy.ndarray:
    coeffs = numpy.array(coeffs, dtype=complex)
    nonzero = numpy.flatnonzero(coeffs)
    if nonzero.size == 0:
        return numpy.zeros(0, dtype=complex)
    return numpy.roots(coeffs[nonzero[0]:])


def torus_crossings(poly: Callable, alpha: float, *, grid: int=2048) -> List[float]:
    '''
    Angles theta in (0, pi) at which a root y of poly(e^(i theta), y) crosses
    the unit circle, found by scanning the sorted root moduli and refining
    with brentq.
    '''
    def moduli(theta):
        roots = _y_roots(poly(alpha, cmath.exp(1j*theta)))
        return numpy.sort(numpy.abs(roots)) - 1
    thetas = numpy.linspace(0.0, math.pi, grid + 1)[1:-1]
    values = [moduli(t) for t in thetas]
    degree = min(v.size for v in values)
    crossings = []
    for i in range(degree):
        for k in range(len(thetas) - 1):
            a, b = values[k][i], values[k + 1][i]
            if a == 0:
                crossings.append(float(thetas[k]))
            elif a*b < 0:
                crossings.append(optimize.brentq(lambda t: moduli(t)[i], thetas[k], thetas[k + 1], xtol=1e-14))
    return sorted(set(crossings))


def _jensen_integrand(poly: Callable, alpha: float, theta: float) -> float:
    coeffs = poly(alpha, cmath.exp(1j*theta))
    nonzero = [c for c in coeffs if c != 0]
    lead = abs(nonzero[0])
    roots = _y_roots(coeffs)
    return math.log(lead) + float(numpy.sum(numpy.log(numpy.maximum(numpy.abs(roots), 1.0))))


def mahler2d(poly: str, alpha: float, tol: float=1e-5, *, method: str='quad') -> Mahler2DResult:
    '''
    Mahler measure of a two-variable polynomial from `POLYNOMIALS`.

    `method='quad'` integrates log|poly(e^(i theta), e^(i phi))| by nested
    adaptive quadrature over theta in [0, pi] (doubled by conjugation
    symmetry) and phi in [0, 2 pi], splitting the inner integral at the
    arguments of the roots in y.  `method='jensen'` applies Jensen's formula
    in y and integrates only over theta.  A MahlerWarning is issued when the
    zero set meets the torus.
    '''
    if poly not in POLYNOMIALS:
        raise DomainError(f'Unknown polynomial "{poly}"; choose from {", ".join(POLYNOMIALS)}')
    if method not in ('quad', 'jensen'):
        raise DomainError(f'Unknown method "{method}"; choose "quad" or "jensen"')
    if tol < 1e-12:
        raise DomainError(f'mahler2d() tolerance "{tol}" is below what the integrands allow')
    f = POLYNOMIALS[poly]
    crossings = torus_crossings(f, alpha)
    if crossings:
        warnings.warn(f'Zero set of {poly} at alpha = {alpha} meets the torus; the integrand has log singularities',
                      MahlerWarning)
    if method == 'jensen':
        result = integrate(lambda t: _jensen_integrand(f, alpha, t), 0.0, math.pi, breakpoints=crossings, tol=tol)
        return Mahler2DResult(result.value/math.pi, result.error_estimate/math.pi, bool(crossings))

    def inner(theta):
        x = cmath.exp(1j*theta)
        coeffs = f(alpha, x)
        args = [cmath.phase(r) % (2*math.pi) for r in _y_roots(coeffs)]
        def log_abs(phi):
            value = abs(numpy.polyval(coeffs, cmath.exp(1j*phi)))
            return math.log(value) if value > 0 else -745.0
        return integrate(log_abs, 0.0, 2*math.pi, breakpoints=args, tol=tol/10).value
    result = integrate(inner, 0.0, math.pi, breakpoints=crossings, tol=tol)
    return Mahler2DResult(result.value/(2*math.pi**2), result.error_estimate/(2*math.pi**2), bool(crossings))


class FunctionalEquationCheck(NamedTuple):
    p: float
    lhs: float
    rhs: float


def real_cbrt(x: float) -> float:
    return float(numpy.cbrt(x))


def functional_equation_check(p: float, *, tol: float=1e-8, method: str='jensen') -> FunctionalEquationCheck:
    '''
    3 g(1/p) against n((1 + 4p)/p^(1/3)) + 4 n((1 - 2p)/p^(2/3)), with real
    cube roots.  The identity holds for small |p|.
    '''
    if p == 0:
        raise DomainError('functional_equation_check() requires p != 0')
    with warnings.catch_warnings():
        warnings.simplefilter('ignore', MahlerWarning)
        lhs = 3*mahler2d('g_family', 1/p, tol=tol, method=method).value
    c = real_cbrt(p)
    rhs = n_measure((1 + 4*p)/c, tol=tol).n + 4*n_measure((1 - 2*p)/(c*c), tol=tol).n
    return FunctionalEquationCheck(p, lhs, rhs)




class B11Result(NamedTuple):
    first: float
    second: float
    lhs: float


def _log_abs_small_root_s0(theta: float) -> float:
    # smaller root of y^2 + (x^2 + 1) y + x^3; the roots multiply to x^3
    x = cmath.exp(1j*theta)
    B = x*x + 1
    d = cmath.sqrt(B*B - 4*x**3)
    big = (-B - d)/2 if abs(B + d) >= abs(B - d) else (-B + d)/2
    return -math.log(abs(big))


def s_family_b11(*, tol: float=1e-11) -> B11Result:
    '''
    (1/pi) * integral of log|y_minus| over [0, pi/2] minus the same over
    [pi/2, pi], for y^2 + (x^2 + 1) y + x^3 = 0, whose toric points are at
    x = +-i.

    The combination equals +L'(11a3, 0).  The same value comes out with the
    principal branch -((x^2 + 1)/2)(1 - sqrt(1 - 4x^3/(x^2 + 1)^2)) for
    y_minus, so the relation with -L'(11a3, 0) fails on its sign only.
    '''
    first = integrate(_log_abs_small_root_s0, 0.0, math.pi/2, tol=tol).value/math.pi
    second = integrate(_log_abs_small_root_s0, math.pi/2, math.pi, tol=tol).value/math.pi
    return B11Result(first, second, first - second)




class IdentityCheck(NamedTuple):
    name: str
    lhs: float
    rhs: float
    gating: bool = True


def equivalent_identities(*, tol: float=1e-11) -> List[IdentityCheck]:
    '''
    Relations between n~ on (-1, 3) and n outside, which follow from the
    rational factors of curves of conductor 20, 27 and 54.

    For conductor 27 the factor is -2/3, the quotient of the n~(3^(1/3)) and
    n(-3) rows of the L-value tables.  The coefficient -3/2 that is also
    quoted for it is returned as a non-gating entry.
    '''
    n_tilde_3 = n_tilde(3**(1/3), tol=tol)
    n_minus_3 = n_measure(-3, tol=tol).n
    return [
        IdentityCheck('n~(2^(1/3)) = -5/8 n(32^(1/3))', n_tilde(2**(1/3), tol=tol),
                      -5/8*n_measure(32**(1/3), tol=tol).n),
        IdentityCheck('n~(24^(1/3)) = -n(-6)', n_tilde(24**(1/3), tol=tol), -n_measure(-6, tol=tol).n),
        IdentityCheck('n~(3^(1/3)) = -2/3 n(-3)', n_tilde_3, -2/3*n_minus_3),
        IdentityCheck('n~(3^(1/3)) against -3/2 n(-3)', n_tilde_3, -1.5*n_minus_3, False),
    ]


def rz_negative_check(curves: Optional[List[EllCurveQ]]=None, *, tol: float=1e-11) -> List[IdentityCheck]:
    '''
    Two identities of the form n(alpha) = r L'(E, 0) that fail:
    n(2^(1/3)) against 5/6 L'(20a1, 0) and n(2) against 3/2 L'(19a3, 0).
    Callers compare the gaps with a threshold instead of asking for equality.
    '''
    if curves is None:
        curves = load_curve_table()
    L20 = l_values(curve_by_label(curves, '20a1')).Lprime0
    L19 = l_values(curve_by_label(curves, '19a3')).Lprime0
    return [
        IdentityCheck("n(2^(1/3)) = 5/6 L'(20a1, 0)", n_measure(2**(1/3), tol=tol).n, 5/6*L20),
        IdentityCheck("n(2) = 3/2 L'(19a3, 0)", n_measure(2.0, tol=tol).n, 1.5*L19),
    ]
