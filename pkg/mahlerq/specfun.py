# -*- coding: utf-8 -*-
#
# Copyright (c) 2026, mahlerq developers
# All rights reserved.
#
# Licensed under the BSD 3-Clause License:
# http://opensource.org/licenses/BSD-3-Clause
#


'''
Scalar special functions: Gamma, generalized hypergeometric series, the
complete elliptic integral of the first kind, dilogarithms, the exponential
integral, and the Dirichlet L-value of the character modulo 3.

Everything works in binary64.  Library routines from `scipy.special` are used
where they exist; the hypergeometric series is summed here because the
parameter sets needed (4F3, 3F2 at argument of modulus one) are outside what
scipy provides.
'''


import math
import warnings
from typing import List, NamedTuple, Sequence, Union

import numpy
from scipy import special

from .err import ConvergenceError, DomainError, MahlerWarning


Real = Union[int, float]




def gamma_real(x: Real) -> float:
    '''
    Gamma function for positive real arguments.
    '''
    if not x > 0:
        raise DomainError(f'gamma_real() requires x > 0, got "{x}"')
    return float(special.gamma(x))




class PFQParams(object):
    '''
    Parameters of a generalized hypergeometric series pFq(top; bottom; z).
    '''
    def __init__(self, top: Sequence[Real], bottom: Sequence[Real], z: complex, *,
                 tol: float=1e-15, max_terms: int=2**22):
        self.top: List[float] = [float(a) for a in top]
        self.bottom: List[float] = [float(b) for b in bottom]
        self.z = complex(z)
        self.tol = tol
        self.max_terms = max_terms
        for b in self.bottom:
            if b <= 0 and b == round(b):
                raise DomainError(f'Denominator parameter "{b}" is a nonpositive integer')
        if tol <= 0:
            raise DomainError(f'Tolerance must be positive, got "{tol}"')
        if max_terms < 1:
            raise DomainError(f'max_terms must be positive, got "{max_terms}"')

    @property
    def excess(self) -> float:
        '''
        Sum of the denominator parameters minus the sum of the numerator
        parameters.  On |z| = 1 the terms decay like n^(-1-excess).
        '''
        return sum(self.bottom) - sum(self.top)

    @property
    def terminating(self) -> bool:
        return any(a <= 0 and a == round(a) for a in self.top)


class PFQResult(NamedTuple):
    value: complex
    error: float
    terms: int




def _term_ratios(params: PFQParams, start: int, count: int) -> numpy.ndarray:
    # t_{n+1}/t_n for n = start, ..., start+count-1
    n = numpy.arange(start, start + count, dtype=float)
    ratio = numpy.full(count, params.z, dtype=complex)
    for a in params.top:
        ratio *= a + n
    for b in params.bottom:
        ratio /= b + n
    ratio /= n + 1
    return ratio


def _terms(params: PFQParams, count: int) -> numpy.ndarray:
    terms = numpy.empty(count, dtype=complex)
    terms[0] = 1
    if count > 1:
        terms[1:] = numpy.cumprod(_term_ratios(params, 0, count - 1))
    return terms


def _sum_until_small(params: PFQParams) -> PFQResult:
    chunk = 1024
    total = 0j
    last_term = 1 + 0j
    carry = numpy.zeros(0, dtype=bool)
    n = 0
    while n < params.max_terms:
        count = min(chunk, params.max_terms - n)
        if n == 0:
            block = _terms(params, count)
        else:
            block = last_term * numpy.cumprod(_term_ratios(params, n - 1, count))
        threshold = params.tol * max(1.0, abs(total))
        flags = numpy.concatenate((carry, numpy.abs(block) < threshold))
        # Stop after the first run of three consecutive small terms.
        runs = numpy.flatnonzero(flags[:-2] & flags[1:-1] & flags[2:])
        if runs.size:
            stop = int(runs[0]) + 3 - carry.size
            block = block[:stop]
        # Compensated summation keeps the long |z| = 1 sums accurate.
        total += math.fsum(block.real) + 1j*math.fsum(block.imag)
        n += block.size
        last_term = block[-1]
        if runs.size:
            error = abs(last_term)
            if abs(params.z) < 1:
                error /= 1 - abs(params.z)
            return PFQResult(total, error, n)
        carry = flags[-2:]
        chunk = min(2*chunk, 2**20)
    raise ConvergenceError(
        f'Hypergeometric series did not reach tolerance {params.tol} within {params.max_terms} terms',
        estimate=total, error=abs(last_term))


def _partial_sum(params: PFQParams, count: int) -> complex:
    terms = _terms(params, count)
    return math.fsum(terms.real) + 1j*math.fsum(terms.imag)


def _sum_at_one(params: PFQParams) -> PFQResult:
    # Tail of the series behaves like N^(-s) (c0 + c1/N + ...); two rounds of
    # Richardson extrapolation on S_N, S_2N, S_4N remove the first two orders.
    s = params.excess
    n = 2**12
    best = None
    while 4*n <= params.max_terms:
        s1, s2, s4 = (_partial_sum(params, m) for m in (n, 2*n, 4*n))
        r1 = (2**s*s2 - s1)/(2**s - 1)
        r2 = (2**s*s4 - s2)/(2**s - 1)
        value = (2**(s + 1)*r2 - r1)/(2**(s + 1) - 1)
        error = abs(value - r2)
        best = PFQResult(value, error, 4*n)
        if error <= params.tol*max(1.0, abs(value)):
            return best
        n *= 2
    raise ConvergenceError(
        f'Extrapolated hypergeometric sum at z = 1 did not reach tolerance {params.tol}',
        estimate=None if best is None else best.value, error=None if best is None else best.error)


def pfq(params: PFQParams) -> PFQResult:
    '''
    Sum pFq(top; bottom; z).

    For |z| < 1, and for |z| = 1 away from z = 1, partial sums are
    accumulated until three consecutive terms fall below
    tol*max(1, |sum|).  At z = 1 the slowly decaying tail is removed by
    Richardson extrapolation.  |z| > 1 is refused; the series diverges
    there.
    '''
    z = params.z
    if z == 0 or params.terminating:
        if z == 0:
            return PFQResult(1+0j, 0.0, 1)
        return _sum_until_small(params)
    modulus = abs(z)
    if modulus > 1 + 1e-15:
        raise DomainError(f'Hypergeometric series diverges for |z| = {modulus} > 1')
    if modulus >= 1 - 1e-15:
        if not params.excess > 0:
            raise DomainError(
                f'Hypergeometric series diverges on |z| = 1 unless sum(bottom) - sum(top) > 0 '
                f'(got {params.excess})')
        if abs(z - 1) < 1e-15:
            warnings.warn('Hypergeometric series at z = 1 summed by Richardson extrapolation of the tail', MahlerWarning)
            return _sum_at_one(params)
    return _sum_until_small(params)


def hyper(top: Sequence[Real], bottom: Sequence[Real], z: complex, *, tol: float=1e-15) -> complex:
    '''
    Convenience wrapper returning only the value of pFq(top; bottom; z).
    '''
    return pfq(PFQParams(top, bottom, z, tol=tol)).value




def agm(a: Real, b: Real) -> float:
    return float(special.agm(a, b))


def ellK(k: Real) -> float:
    '''
    Complete elliptic integral of the first kind in terms of the modulus k,
    K(k) = pi/(2*AGM(1, sqrt(1 - k^2))).
    '''
    if not 0 <= k < 1:
        raise DomainError(f'ellK() requires 0 <= k < 1, got "{k}"')
    return math.pi/(2*agm(1.0, math.sqrt(1 - k*k)))


def ellK_param(m: Real) -> float:
    '''
    Complete elliptic integral of the first kind in terms of the parameter
    m = k^2.  Negative parameters (imaginary modulus) are allowed.
    '''
    if not m < 1:
        raise DomainError(f'ellK_param() requires m < 1, got "{m}"')
    return math.pi/(2*agm(1.0, math.sqrt(1 - m)))




class DilogValue(NamedTuple):
    z: complex
    li2: complex
    bw: float


def li2(z: complex) -> complex:
    '''
    Principal branch of the dilogarithm, with branch cut [1, inf).
    '''
    z = complex(z)
    if z == 0:
        return 0j
    # scipy's spence(w) is Li2(1 - w).
    value = complex(special.spence(1 - z))
    if z.imag == 0 and z.real <= 1:
        return complex(value.real, 0.0)
    return value


def bloch_wigner(z: complex) -> float:
    '''
    Bloch-Wigner dilogarithm D(z) = Im Li2(z) + arg(1 - z) log|z|.

    D is real analytic away from 0 and 1, continuous on the whole plane, and
    vanishes identically on the real line.
    '''
    z = complex(z)
    if z.imag == 0:
        return 0.0
    return li2(z).imag + numpy.angle(1 - z)*math.log(abs(z))


def dilog(z: complex) -> DilogValue:
    return DilogValue(complex(z), li2(z), bloch_wigner(z))




def exp_integral_E1(x: Real) -> float:
    '''
    E1(x) = integral from 1 to infinity of exp(-x t)/t dt, for x > 0.
    '''
    if not x > 0:
        raise DomainError(f'exp_integral_E1() requires x > 0, got "{x}"')
    return float(special.exp1(x))




def chi_minus3(n: int) -> int:
    return (0, 1, -1)[n % 3]


def dirichlet_L_chi3_at_2() -> float:
    '''
    L(chi_{-3}, 2) from Hurwitz zeta values.
    '''
    return float(special.zeta(2, 1/3) - special.zeta(2, 2/3))/9


def dirichlet_L_chi3_partial(n_max: int) -> float:
    '''
    Partial sum of the character series for L(chi_{-3}, 2) over 1 <= n <= n_max.
    '''
    n = numpy.arange(1, n_max + 1)
    chi = numpy.array([0, 1, -1])[n % 3]
    return math.fsum(chi/n.astype(float)**2)


def dirichlet_Lprime_chi3() -> float:
    '''
    L'(chi_{-3}, -1), obtained from L(chi_{-3}, 2) through the functional
    equation.
    '''
    return 3*math.sqrt(3)/(4*math.pi)*dirichlet_L_chi3_at_2()
