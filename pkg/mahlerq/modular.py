# -*- coding: utf-8 -*-
#
# Copyright (c) 2026, mahlerq developers
# All rights reserved.
#
# Licensed under the BSD 3-Clause License:
# http://opensource.org/licenses/BSD-3-Clause
#


'''
q-series on the upper half-plane: Dedekind eta, the eta quotient
u(tau) = 3 (1 + 27 eta(3 tau)^12/eta(tau)^12)^(1/3), Siegel units, the
Eisenstein series e_{a,b} and f_{a,b;c}, Klein's j, and sums of
Bloch-Wigner dilogarithms along q-orbits.

Products are truncated once |q|^n drops below the requested tolerance.
'''


import cmath
import math
from fractions import Fraction
from typing import List, NamedTuple, Sequence, Tuple, Union

import numpy
from scipy import optimize

from .err import ConvergenceError, DomainError
from .specfun import bloch_wigner


ZETA3 = cmath.exp(2j*math.pi/3)




def _check_tau(tau: complex) -> complex:
    tau = complex(tau)
    if not tau.imag > 0:
        raise DomainError(f'tau must lie in the upper half-plane, got "{tau}"')
    return tau


def q_of_tau(tau: complex) -> complex:
    return cmath.exp(2j*math.pi*_check_tau(tau))


def _terms_for(q: complex, tol: float) -> int:
    # Smallest n with |q|^n < tol.
    return max(int(math.ceil(math.log(tol)/math.log(abs(q)))), 1)


def _euler_product(q: complex, step: int, tol: float=1e-16) -> complex:
    # prod (1 - q^(step*n)) over n >= 1
    n = step*numpy.arange(1, _terms_for(q, tol)//step + 2)
    return complex(numpy.prod(1 - q**n.astype(float)))


def eta(tau: complex, *, tol: float=1e-16) -> complex:
    '''
    Dedekind eta, q^(1/24) prod (1 - q^n), with q^(1/24) = exp(2 pi i tau/24).
    '''
    tau = _check_tau(tau)
    q = q_of_tau(tau)
    return cmath.exp(2j*math.pi*tau/24)*_euler_product(q, 1, tol=tol)




class ModularPoint(NamedTuple):
    tau: complex
    q: complex
    u: float


def eta_quotient_ratio(tau: complex) -> complex:
    '''
    eta(3 tau)^12/eta(tau)^12 = q prod (1 - q^(3n))^12/(1 - q^n)^12.
    '''
    q = q_of_tau(tau)
    return q*(_euler_product(q, 3)/_euler_product(q, 1))**12


def u_tau(tau: complex) -> Union[float, complex]:
    '''
    u(tau) = 3 (1 + 27 eta(3 tau)^12/eta(tau)^12)^(1/3).

    The real cube root is taken when the radicand is real (on the line
    Re tau = 1/2 it is), the principal one otherwise.
    '''
    w = 1 + 27*eta_quotient_ratio(tau)
    if abs(w.imag) <= 1e-14*max(1.0, abs(w)):
        return 3*float(numpy.cbrt(w.real))
    return 3*w**(1/3)


def invert_u(alpha: float, *, t_min: float=0.1, t_max: float=5.0, tol: float=1e-13) -> ModularPoint:
    '''
    Point tau = 1/2 + i t, t_min < t < t_max, with u(tau) = alpha.
    '''
    def f(t):
        return u_tau(complex(0.5, t)) - alpha
    f_min, f_max = f(t_min), f(t_max)
    if f_min*f_max > 0:
        raise DomainError(
            f'u(1/2 + i t) does not take the value {alpha} for {t_min} < t < {t_max} '
            f'(range from {f_min + alpha:.6g} to {f_max + alpha:.6g})')
    t = optimize.brentq(f, t_min, t_max, xtol=tol, rtol=4*numpy.finfo(float).eps)
    tau = complex(0.5, t)
    return ModularPoint(tau, q_of_tau(tau), float(u_tau(tau)))




def bernoulli2(x: Union[Fraction, float]) -> Union[Fraction, float]:
    '''
    Periodic second Bernoulli polynomial {x}^2 - {x} + 1/6.
    '''
    frac = x - math.floor(x)
    return frac*frac - frac + Fraction(1, 6)


def siegel_exponent(N: int, a: int) -> Fraction:
    '''
    Leading q-exponent N B_2(a/N)/2 of the Siegel unit g_a.
    '''
    if a % N == 0:
        raise DomainError(f'Siegel unit g_a needs N not dividing a, got N = {N}, a = {a}')
    return N*bernoulli2(Fraction(a, N))/2


def _siegel_indices(N: int, a: int, q: complex, tol: float) -> numpy.ndarray:
    n = numpy.arange(1, _terms_for(q, tol) + N + 1)
    r = n % N
    return n[(r == a % N) | (r == (-a) % N)]


def siegel_g(N: int, a: int, tau: complex, *, tol: float=1e-16) -> complex:
    '''
    g_a(tau) = q^(N B_2(a/N)/2) prod_{n = +-a mod N} (1 - q^n), as a product.
    '''
    e0 = siegel_exponent(N, a)
    tau = _check_tau(tau)
    q = q_of_tau(tau)
    n = _siegel_indices(N, a, q, tol)
    return cmath.exp(2j*math.pi*tau*float(e0))*complex(numpy.prod(1 - q**n.astype(float)))


def siegel_g_logseries(N: int, a: int, tau: complex, *, tol: float=1e-16) -> complex:
    '''
    g_a(tau) through log(1 - q^n) = -sum_k q^(nk)/k, summed over all the
    factors before exponentiating.
    '''
    e0 = siegel_exponent(N, a)
    tau = _check_tau(tau)
    q = q_of_tau(tau)
    total = 0j
    for n in _siegel_indices(N, a, q, tol):
        qn = q**int(n)
        k = numpy.arange(1, _terms_for(qn, tol) + 1)
        total -= complex(numpy.sum(qn**k/k))
    return cmath.exp(2j*math.pi*tau*float(e0) + total)


def param_xy_19(tau: complex) -> Tuple[complex, complex]:
    '''
    Modular-unit parametrization of y^2 + (x^2 - 2x) y + x = 0 by

        x = -g1 g7 g8/(g2 g3 g5),   y = g1 g7 g8/(g4 g6 g9)

    with Siegel units of level 19.
    '''
    g = {a: siegel_g(19, a, tau) for a in range(1, 10)}
    numerator = g[1]*g[7]*g[8]
    return -numerator/(g[2]*g[3]*g[5]), numerator/(g[4]*g[6]*g[9])




class QExpansion(object):
    '''
    Truncated q-expansion sum_{m=0}^{n_max} c_m q^(e0 + m).
    '''
    def __init__(self, e0: Union[int, Fraction], coeffs: Sequence[complex]):
        self.e0 = Fraction(e0)
        self.coeffs = numpy.array(coeffs, dtype=complex)
        if self.coeffs.ndim != 1 or self.coeffs.size == 0:
            raise DomainError('A q-expansion needs at least one coefficient')

    @property
    def n_max(self) -> int:
        return self.coeffs.size - 1

    def __repr__(self):
        return f'QExpansion(e0={self.e0}, n_max={self.n_max})'

    def truncate(self, n_max: int) -> 'QExpansion':
        return QExpansion(self.e0, self.coeffs[:n_max + 1])

    def _aligned(self, other: 'QExpansion') -> Tuple[numpy.ndarray, numpy.ndarray]:
        if self.e0 != other.e0:
            raise DomainError(f'Cannot add q-expansions with leading exponents {self.e0} and {other.e0}')
        n = min(self.n_max, other.n_max)
        return self.coeffs[:n + 1], other.coeffs[:n + 1]

    def __add__(self, other):
        if not isinstance(other, QExpansion):
            coeffs = self.coeffs.copy()
            if self.e0 != 0:
                raise DomainError('Constants can only be added to q-expansions with e0 = 0')
            coeffs[0] += other
            return QExpansion(self.e0, coeffs)
        mine, theirs = self._aligned(other)
        return QExpansion(self.e0, mine + theirs)

    __radd__ = __add__

    def __neg__(self):
        return QExpansion(self.e0, -self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, QExpansion):
            return QExpansion(self.e0, self.coeffs*other)
        n = min(self.n_max, other.n_max)
        product = numpy.convolve(self.coeffs[:n + 1], other.coeffs[:n + 1])[:n + 1]
        return QExpansion(self.e0 + other.e0, product)

    __rmul__ = __mul__

    def inverse(self) -> 'QExpansion':
        '''
        Reciprocal of a series with nonzero leading coefficient.
        '''
        c = self.coeffs
        if c[0] == 0:
            raise DomainError('Only q-expansions with nonzero leading coefficient can be inverted')
        inv = numpy.zeros_like(c)
        inv[0] = 1/c[0]
        for m in range(1, c.size):
            inv[m] = -numpy.dot(c[1:m + 1], inv[m - 1::-1])/c[0]
        return QExpansion(-self.e0, inv)

    def __truediv__(self, other):
        if isinstance(other, QExpansion):
            return self*other.inverse()
        return QExpansion(self.e0, self.coeffs/other)

    def evaluate(self, tau: complex) -> complex:
        tau = _check_tau(tau)
        q = q_of_tau(tau)
        powers = q**numpy.arange(self.coeffs.size)
        return cmath.exp(2j*math.pi*tau*float(self.e0))*complex(numpy.dot(self.coeffs, powers))


def siegel_expansion(N: int, a: int, n_max: int) -> QExpansion:
    '''
    q-expansion of g_a to relative order n_max.
    '''
    coeffs = numpy.zeros(n_max + 1, dtype=complex)
    coeffs[0] = 1
    for n in range(1, n_max + 1):
        if n % N in (a % N, (-a) % N):
            # multiply by (1 - q^n)
            coeffs[n:] = coeffs[n:] - coeffs[:n_max + 1 - n].copy()
    return QExpansion(siegel_exponent(N, a), coeffs)




def _cot(x: float) -> float:
    return math.cos(x)/math.sin(x)


def eis_e(N: int, a: int, b: int, n_max: int) -> QExpansion:
    '''
    Weight one Eisenstein series

        e_{a,b} = (1/2)((1 + z^a)/(1 - z^a) + (1 + z^b)/(1 - z^b))
                  + sum_{m,n >= 1} (z^(am + bn) - z^(-(am + bn))) q^(mn),   z = exp(2 pi i/N).
    '''
    if a % N == 0 or b % N == 0:
        raise DomainError(f'e_(a,b) needs N not dividing a or b, got N = {N}, a = {a}, b = {b}')
    coeffs = numpy.zeros(n_max + 1, dtype=complex)
    # (1 + z^a)/(1 - z^a) = i cot(pi a/N)
    coeffs[0] = 0.5j*(_cot(math.pi*a/N) + _cot(math.pi*b/N))
    for m in range(1, n_max + 1):
        n = numpy.arange(1, n_max//m + 1)
        phase = 2*math.pi*((a*m + b*n) % N)/N
        coeffs[m*n] += 2j*numpy.sin(phase)
    return QExpansion(0, coeffs)


def f_abc(N: int, a: int, b: int, c: int, n_max: int) -> QExpansion:
    '''
    Weight two form f_{a,b;c} = e_{a,bc} e_{b,-ac} - e_{a,-bc} e_{b,ac}.
    '''
    if (a*c) % N == 0 or (b*c) % N == 0:
        raise DomainError(f'f_(a,b;c) needs N not dividing ac or bc, got N = {N}, a = {a}, b = {b}, c = {c}')
    return eis_e(N, a, b*c, n_max)*eis_e(N, b, -a*c, n_max) - eis_e(N, a, -b*c, n_max)*eis_e(N, b, a*c, n_max)


class FabcCandidate(NamedTuple):
    a: int
    b: int
    c: int
    scale: complex
    residual: float


def search_f_abc(N: int, newform: Sequence[int], n_max: int=40, *, max_results: int=10) -> List[FabcCandidate]:
    '''
    Rank triples (a, b, c) by how well f_{a,b;c} - f_{a,b;c}(i infinity) is a
    scalar multiple of the newform with coefficients `newform[n - 1] = a_n`.

    Each candidate carries the least-squares scale and the relative residual
    of the fit over q^1, ..., q^n_max.
    '''
    target = numpy.asarray(newform[:n_max], dtype=complex)
    if target.size < n_max:
        raise DomainError(f'search_f_abc() needs {n_max} newform coefficients, got {target.size}')
    cache = {}
    def e(x, y):
        key = (x % N, y % N)
        if key not in cache:
            cache[key] = eis_e(N, x, y, n_max)
        return cache[key]
    candidates = []
    for a in range(1, N):
        for b in range(1, N):
            for c in range(1, N):
                if (a*c) % N == 0 or (b*c) % N == 0:
                    continue
                f = e(a, b*c)*e(b, -a*c) - e(a, -b*c)*e(b, a*c)
                values = f.coeffs[1:n_max + 1]
                norm = numpy.linalg.norm(values)
                if norm == 0:
                    continue
                scale = numpy.vdot(target, values)/numpy.vdot(target, target)
                residual = float(numpy.linalg.norm(values - scale*target)/norm)
                candidates.append(FabcCandidate(a, b, c, complex(scale), residual))
    candidates.sort(key=lambda cand: (cand.residual, cand.a, cand.b, cand.c))
    return candidates[:max_results]




def _divisor_sums(n_max: int, k: int) -> numpy.ndarray:
    sigma = numpy.zeros(n_max + 1)
    for d in range(1, n_max + 1):
        sigma[d::d] += float(d)**k
    return sigma


def reduce_tau(tau: complex) -> complex:
    '''
    SL2(Z)-equivalent point in the standard fundamental domain.
    '''
    tau = _check_tau(tau)
    for _ in range(1000):
        tau = complex(tau.real - math.floor(tau.real + 0.5), tau.imag)
        if abs(tau) >= 1 - 1e-15:
            return tau
        tau = -1/tau
    raise ConvergenceError(f'Could not reduce tau = {tau} to the fundamental domain')


def j_invariant(tau: complex, *, n_max: int=60) -> complex:
    '''
    Klein's j = 1728 E4^3/(E4^3 - E6^2) from the Eisenstein q-series,
    evaluated after reducing tau to the fundamental domain.
    '''
    q = q_of_tau(reduce_tau(tau))
    n = numpy.arange(n_max + 1)
    powers = q**n
    E4 = 1 + 240*complex(numpy.dot(_divisor_sums(n_max, 3)[1:], powers[1:]))
    E6 = 1 - 504*complex(numpy.dot(_divisor_sums(n_max, 5)[1:], powers[1:]))
    return 1728*E4**3/(E4**3 - E6**2)




class DilogSum(NamedTuple):
    value: float
    terms: int
    tail: float


def elliptic_dilog_sum(q: float, *, tol: float=1e-14) -> DilogSum:
    '''
    sum over all integers n of D(zeta_3 q^n), zeta_3 = exp(2 pi i/3), for real q.

    For real q the n < 0 terms equal the n > 0 ones, so the sum is
    D(zeta_3) + 2 sum_{n >= 1} D(zeta_3 q^n).  Terms are O(n |q|^n log|1/q|),
    and summation stops once the estimated rest is below `tol`.

    `tail` is an estimate, not a bound: the size of the next term divided by
    1 - |q|.  It ignores the growth of the factor n, so for |q| close to 1 it
    can understate the remainder.
    '''
    q = float(q)
    if not 0 < abs(q) < 1:
        raise DomainError(f'elliptic_dilog_sum() requires 0 < |q| < 1, got "{q}"')
    parts = [bloch_wigner(ZETA3)]
    tail = math.inf
    n = 0
    while tail >= tol:
        n += 1
        parts.append(2*bloch_wigner(ZETA3*q**n))
        # size of D(z) for small |z| is about |z| (1 + |log|z||)
        next_term = 2*abs(q)**(n + 1)*(1 + (n + 1)*abs(math.log(abs(q))))
        tail = next_term/(1 - abs(q))
        if n > 10**6:
            raise ConvergenceError(f'Dilogarithm sum at q = {q} did not converge')
    return DilogSum(math.fsum(parts), n, tail)


class DilogRow(NamedTuple):
    alpha: float
    tau: complex
    q: float
    dilog_sum: float
    n_tilde: float


def dilog_alpha_scan(alphas: Sequence[float], *, tol: float=1e-14) -> List[DilogRow]:
    '''
    For each alpha, the point tau on Re tau = 1/2 with u(tau) = alpha and the
    value -(9/pi) sum D(zeta_3 q^n) predicted for the modified measure.
    '''
    rows = []
    for alpha in alphas:
        point = invert_u(alpha)
        q = point.q.real
        total = elliptic_dilog_sum(q, tol=tol).value
        rows.append(DilogRow(float(alpha), point.tau, q, total, -9/math.pi*total))
    return rows
