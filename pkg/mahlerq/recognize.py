# -*- coding: utf-8 -*-
#
# Copyright (c) 2026, mahlerq developers
# All rights reserved.
#
# Licensed under the BSD 3-Clause License:
# http://opensource.org/licenses/BSD-3-Clause
#


'''
Recovery of exact relations from binary64 values: rational reconstruction
through continued fractions and a small PSLQ.

Double precision limits PSLQ to relations whose coefficients and residual
together fit into about 15 digits.  Residuals of candidate relations are
recomputed exactly on the binary values with `fractions.Fraction`.
'''


import math
from fractions import Fraction
from typing import NamedTuple, Sequence

import numpy

from .err import DomainError, RecognitionError, RelationNotFound


PSLQ_GAMMA = math.sqrt(4/3)
PSLQ_MAX_DIM = 8
PSLQ_NORM_BOUND = 1e10




class RationalGuess(NamedTuple):
    num: int
    den: int
    residual: float

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, self.den)


def rational_reconstruct(x: float, max_den: int=60, tol: float=1e-9) -> RationalGuess:
    '''
    Closest fraction to `x` with denominator at most `max_den`, accepted only
    when it is within `tol` of `x`.
    '''
    if max_den < 1:
        raise DomainError(f'max_den must be at least 1, got "{max_den}"')
    if not math.isfinite(x):
        raise DomainError(f'Cannot reconstruct a rational from "{x}"')
    guess = Fraction(x).limit_denominator(max_den)
    residual = float(abs(guess - Fraction(x)))
    if not residual < tol:
        raise RecognitionError(
            f'No fraction with denominator <= {max_den} lies within {tol} of {x!r} '
            f'(closest is {guess}, off by {residual:.3g})', residual=residual)
    return RationalGuess(guess.numerator, guess.denominator, residual)




class IntegerRelation(NamedTuple):
    vector: tuple
    residual: float
    iterations: int


def _exact_residual(vector: Sequence[int], x: Sequence[float]) -> float:
    return float(abs(sum(Fraction(int(v))*Fraction(float(xi)) for v, xi in zip(vector, x))))


def _normalize_sign(vector):
    for v in vector:
        if v != 0:
            return tuple(int(-w) for w in vector) if v < 0 else tuple(int(w) for w in vector)
    return tuple(int(w) for w in vector)


def pslq(x: Sequence[float], tol: float=1e-10, max_iter: int=10000) -> IntegerRelation:
    '''
    Integer vector v != 0 with |sum v_i x_i| <= tol, by PSLQ in double
    precision.

    The input is scaled by max|x_i| internally; the reported residual is for
    the original x.  The first nonzero entry of the result is positive.
    RelationNotFound is raised once 1/max|H_jj| exceeds the norm bound
    (1e10), once the growth of the basis has used up the working precision,
    or after `max_iter` iterations.
    '''
    x = numpy.array(x, dtype=float)
    n = x.size
    if not 2 <= n <= PSLQ_MAX_DIM:
        raise DomainError(f'pslq() handles 2 to {PSLQ_MAX_DIM} values, got {n}')
    if not numpy.all(numpy.isfinite(x)):
        raise DomainError('pslq() input contains non-finite values')
    scale = numpy.max(numpy.abs(x))
    if scale == 0:
        raise DomainError('pslq() input is the zero vector')
    xn = x/scale
    scaled_tol = tol/scale
    for i in range(n):
        if xn[i] == 0:
            vector = tuple(1 if k == i else 0 for k in range(n))
            return IntegerRelation(vector, 0.0, 0)

    # Initialization
    s = numpy.sqrt(numpy.cumsum((xn**2)[::-1])[::-1])
    y = xn/s[0]
    s = s/s[0]
    H = numpy.zeros((n, n - 1))
    for i in range(n):
        if i < n - 1:
            H[i, i] = s[i + 1]/s[i]
        for j in range(min(i, n - 1)):
            H[i, j] = -y[i]*y[j]/(s[j]*s[j + 1])
    A = numpy.eye(n, dtype=numpy.int64)
    B = numpy.eye(n, dtype=numpy.int64)

    def reduce_row(i, j_start):
        for j in range(j_start, -1, -1):
            if H[j, j] == 0:
                continue
            t = round(H[i, j]/H[j, j])
            if t == 0:
                continue
            y[j] += t*y[i]
            H[i, :j + 1] -= t*H[j, :j + 1]
            A[i, :] -= t*A[j, :]
            B[:, j] += t*B[:, i]

    for i in range(1, n):
        reduce_row(i, i - 1)

    eps = numpy.finfo(float).eps
    norm_bound = 0.0
    for iteration in range(1, max_iter + 1):
        # Exchange: the weighted diagonal entry that is largest, smallest index first.
        weights = PSLQ_GAMMA**numpy.arange(1, n)*numpy.abs(numpy.diag(H))
        m = int(numpy.argmax(weights))
        y[[m, m + 1]] = y[[m + 1, m]]
        H[[m, m + 1], :] = H[[m + 1, m], :]
        A[[m, m + 1], :] = A[[m + 1, m], :]
        B[:, [m, m + 1]] = B[:, [m + 1, m]]
        # Corner: restore the lower trapezoidal shape.
        if m <= n - 3:
            t0 = math.hypot(H[m, m], H[m, m + 1])
            if t0 == 0:
                break
            t1, t2 = H[m, m]/t0, H[m, m + 1]/t0
            col_m, col_m1 = H[m:, m].copy(), H[m:, m + 1].copy()
            H[m:, m] = t1*col_m + t2*col_m1
            H[m:, m + 1] = -t2*col_m + t1*col_m1
        for i in range(m + 1, n):
            reduce_row(i, min(i - 1, m + 1))

        for i in range(n):
            if abs(y[i]) < scaled_tol:
                vector = _normalize_sign(B[:, i])
                if any(vector):
                    residual = _exact_residual(vector, xn)
                    if residual <= scaled_tol:
                        return IntegerRelation(vector, _exact_residual(vector, x), iteration)

        diag = numpy.max(numpy.abs(numpy.diag(H)))
        norm_bound = math.inf if diag == 0 else 1/diag
        if norm_bound > PSLQ_NORM_BOUND:
            raise RelationNotFound(
                f'No integer relation with norm below {PSLQ_NORM_BOUND:g} after {iteration} iterations',
                norm_bound=norm_bound, iterations=iteration)
        if numpy.max(numpy.abs(B))*eps > scaled_tol:
            raise RelationNotFound(
                f'Working precision exhausted after {iteration} iterations '
                f'without a relation within {tol}', norm_bound=norm_bound, iterations=iteration)
    raise RelationNotFound(f'No integer relation found in {max_iter} iterations',
                           norm_bound=norm_bound, iterations=max_iter)
