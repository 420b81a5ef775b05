# -*- coding: utf-8 -*-
#
# Copyright (c) 2026, mahlerq developers
# All rights reserved.
#
# Licensed under the BSD 3-Clause License:
# http://opensource.org/licenses/BSD-3-Clause
#


'''
Elliptic curves over Q given by integral Weierstrass models

    y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6

together with the arithmetic needed to evaluate L'(E, 0): point counts mod p,
Dirichlet coefficients, a numerically determined root number, the completed
L-value at s = 2, and the period lattice.

Conductors are not computed.  They come from the curve table, which is
authored from the family models produced by `family_curve()`.
'''


import csv
import io
import math
import pathlib
import warnings
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Tuple, Union

import numpy
from scipy import special

from .err import ConvergenceError, CurveTableError, DomainError, MahlerWarning


LVALUE_MAX_TERMS = 10**5

PACKAGED_CURVE_TABLE = pathlib.Path(__file__).parent / 'data' / 'curves.csv'

CURVE_TABLE_FIELDS = ('label', 'k', 'a1', 'a2', 'a3', 'a4', 'a6', 'N', 'eps', 'r_num', 'r_den')




class EllCurveQ(object):
    '''
    Elliptic curve over Q with its standard invariants.

    `eps` is the sign of the functional equation.  It may be left as `None`
    and filled in by `root_number()`.  `k` is set for members of the family
    E_alpha with alpha^3 = k, and `r` holds the expected rational factor from
    the curve table, when there is one.
    '''
    def __init__(self, a1: int, a2: int, a3: int, a4: int, a6: int, *,
                 label: str='', N: Optional[int]=None, eps: Optional[int]=None,
                 k: Optional[int]=None, r: Optional[Fraction]=None):
        self.a1, self.a2, self.a3, self.a4, self.a6 = (int(a) for a in (a1, a2, a3, a4, a6))
        self.label = label
        self.N = N
        self.eps = eps
        self.k = k
        self.r = r
        self.flagged = False

        a1, a2, a3, a4, a6 = self.ainvs
        self.b2 = a1*a1 + 4*a2
        self.b4 = 2*a4 + a1*a3
        self.b6 = a3*a3 + 4*a6
        self.b8 = a1*a1*a6 + 4*a2*a6 - a1*a3*a4 + a2*a3*a3 - a4*a4
        self.c4 = self.b2**2 - 24*self.b4
        self.c6 = -self.b2**3 + 36*self.b2*self.b4 - 216*self.b6
        self.discriminant = -self.b2**2*self.b8 - 8*self.b4**3 - 27*self.b6**2 + 9*self.b2*self.b4*self.b6
        if self.discriminant == 0:
            raise CurveTableError(f'Curve "{label}" with a-invariants {list(self.ainvs)} is singular (discriminant 0)')
        if N is not None and N < 1:
            raise CurveTableError(f'Curve "{label}" has invalid conductor "{N}"')
        if eps not in (None, 1, -1):
            raise CurveTableError(f'Curve "{label}" has invalid root number "{eps}"')
        self.j = Fraction(self.c4**3, self.discriminant)

    def __repr__(self):
        return f'EllCurveQ({self.label!r}, {list(self.ainvs)}, N={self.N})'

    @property
    def ainvs(self) -> Tuple[int, int, int, int, int]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def residual(self, x: complex, y: complex) -> complex:
        '''
        Left side minus right side of the Weierstrass equation at (x, y).
        '''
        a1, a2, a3, a4, a6 = self.ainvs
        return y*y + a1*x*y + a3*y - (x**3 + a2*x*x + a4*x + a6)




def _factor(n: int) -> Dict[int, int]:
    n = abs(n)
    factors: Dict[int, int] = {}
    p = 2
    while p*p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def _valuation(n: int, p: int) -> int:
    n = abs(n)
    v = 0
    while n and n % p == 0:
        n //= p
        v += 1
    return v


def family_j(k: Union[int, Fraction]) -> Fraction:
    '''
    j-invariant of E_alpha as a function of k = alpha^3:
    j = k (k - 24)^3/(k - 27).
    '''
    k = Fraction(k)
    if k == 27:
        raise DomainError('family_j() has a pole at k = 27 (the curve degenerates at alpha = 3)')
    return k*(k - 24)**3/(k - 27)


def family_curve(k: int, **kwargs) -> EllCurveQ:
    '''
    Integral model of E_alpha for alpha = k^(1/3).

    Write k = m^3 s t^2 with s, t squarefree and coprime.  Scaling the model
    y^2 + alpha x y + y = x^3 by u = (s t^2)^(1/3)/(s t) gives
    y^2 + m s t x y + s^2 t y = x^3, with discriminant s^8 t^4 (k - 27).
    Keyword arguments are passed on to `EllCurveQ`.
    '''
    k = int(k)
    if k == 0 or k == 27:
        raise DomainError(f'No family curve for k = {k}')
    m, s, t = (-1 if k < 0 else 1), 1, 1
    for p, e in _factor(k).items():
        m *= p**(e // 3)
        if e % 3 == 1:
            s *= p
        elif e % 3 == 2:
            t *= p
    kwargs.setdefault('k', k)
    return EllCurveQ(m*s*t, 0, s*s*t, 0, 0, **kwargs)


def change_coordinates(E: EllCurveQ, r: int, s: int, t: int, u: int=1) -> EllCurveQ:
    '''
    Curve obtained by x = u^2 x' + r, y = u^3 y' + s u^2 x' + t.
    '''
    a1, a2, a3, a4, a6 = E.ainvs
    new = (
        Fraction(a1 + 2*s, u),
        Fraction(a2 - s*a1 + 3*r - s*s, u**2),
        Fraction(a3 + r*a1 + 2*t, u**3),
        Fraction(a4 - s*a3 + 2*r*a2 - (t + r*s)*a1 + 3*r*r - 2*s*t, u**4),
        Fraction(a6 + r*a4 + r*r*a2 + r**3 - t*a3 - t*t - r*t*a1, u**6),
    )
    if any(a.denominator != 1 for a in new):
        raise DomainError(f'Change of coordinates ({r}, {s}, {t}, {u}) does not give an integral model')
    return EllCurveQ(*(int(a) for a in new), label=E.label, N=E.N, eps=E.eps, k=E.k, r=E.r)




class LocalModel(NamedTuple):
    p: int
    kind: str
    coeffs: Tuple[int, ...]


def local_model(E: EllCurveQ, p: int) -> LocalModel:
    '''
    Model used for counting points mod p.

    For p >= 5 this is the short model y^2 = x^3 + A x + B with
    A = -27 c4, B = -54 c6, made p-minimal by removing factors p^4, p^6.  For
    p = 2, 3 it is the stored model, which must then be minimal at p.
    '''
    if p < 2:
        raise DomainError(f'"{p}" is not a prime')
    if p in (2, 3):
        if _valuation(E.discriminant, p) >= 12:
            raise CurveTableError(
                f'Stored model of curve "{E.label}" may not be minimal at {p}; '
                f'store a {p}-minimal model in the curve table')
        return LocalModel(p, 'weierstrass', E.ainvs)
    A, B = -27*E.c4, -54*E.c6
    while A % p**4 == 0 and B % p**6 == 0 and (A or B):
        A //= p**4
        B //= p**6
    return LocalModel(p, 'short', (A, B))


def _legendre_table(p: int) -> numpy.ndarray:
    chi = numpy.full(p, -1, dtype=numpy.int64)
    chi[(numpy.arange(p, dtype=numpy.int64)**2) % p] = 1
    chi[0] = 0
    return chi


def _cubic_mod_p(coeffs: Tuple[int, int, int, int], p: int) -> numpy.ndarray:
    x = numpy.arange(p, dtype=numpy.int64)
    value = numpy.zeros(p, dtype=numpy.int64)
    for c in coeffs:
        value = (value*x + c % p) % p
    return value


def ap_count(E: EllCurveQ, p: int) -> int:
    '''
    a_p = p + 1 - #E(F_p) on a model minimal at p.

    At primes of bad reduction the singular point is counted along with the
    others, which yields 1, -1 or 0 for split multiplicative, nonsplit
    multiplicative and additive reduction.
    '''
    model = local_model(E, p)
    if p == 2:
        a1, a2, a3, a4, a6 = model.coeffs
        affine = sum(1 for x in range(2) for y in range(2)
                     if (y*y + a1*x*y + a3*y - x**3 - a2*x*x - a4*x - a6) % 2 == 0)
        return p - affine
    if model.kind == 'short':
        A, B = model.coeffs
        cubic = (1, 0, A, B)
    else:
        # (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6
        cubic = (4, E.b2, 2*E.b4, E.b6)
    chi = _legendre_table(p)
    return -int(chi[_cubic_mod_p(cubic, p)].sum())


def count_points_projective(E: EllCurveQ, p: int) -> int:
    '''
    Number of points of the stored model over F_p, the point at infinity
    included, by enumerating all affine pairs.
    '''
    a1, a2, a3, a4, a6 = (a % p for a in E.ainvs)
    x, y = numpy.meshgrid(numpy.arange(p, dtype=numpy.int64), numpy.arange(p, dtype=numpy.int64))
    lhs = (y*y + a1*x*y + a3*y) % p
    rhs = (((x + a2)*x % p + a4)*x + a6) % p
    # Z = 0 forces X = 0: only [0 : 1 : 0] lies at infinity.
    return int(numpy.count_nonzero(lhs == rhs)) + 1




class CoeffSeries(object):
    '''
    Coefficients a_1, ..., a_{n_max}; `a[n - 1]` holds a_n.
    '''
    def __init__(self, n_max: int, a: numpy.ndarray):
        self.n_max = n_max
        self.a = a

    def an(self, n: int) -> int:
        if not 1 <= n <= self.n_max:
            raise IndexError(f'Coefficient index {n} outside 1..{self.n_max}')
        return int(self.a[n - 1])


def _smallest_prime_factors(n_max: int) -> numpy.ndarray:
    spf = numpy.zeros(n_max + 1, dtype=numpy.int64)
    for i in range(2, n_max + 1):
        if spf[i] == 0:
            spf[i::i][spf[i::i] == 0] = i
    return spf


def an_coeffs(E: EllCurveQ, n_max: int) -> CoeffSeries:
    '''
    Dirichlet coefficients a_1, ..., a_{n_max} of L(E, s).

    Prime powers follow a_{p^(r+1)} = a_p a_{p^r} - p [p does not divide N] a_{p^(r-1)};
    the rest follows from multiplicativity.
    '''
    if n_max < 1:
        raise DomainError(f'an_coeffs() requires n_max >= 1, got "{n_max}"')
    if E.N is None:
        raise CurveTableError(f'Curve "{E.label}" has no conductor; Hecke recursion needs it')
    spf = _smallest_prime_factors(n_max)
    a = numpy.zeros(n_max + 1, dtype=numpy.int64)
    a[1] = 1
    for n in range(2, n_max + 1):
        p = int(spf[n])
        if p == n:
            a[n] = ap_count(E, p)
            continue
        m, pk = n, 1
        while m % p == 0:
            m //= p
            pk *= p
        if m > 1:
            a[n] = a[pk]*a[m]
        else:
            good = 0 if E.N % p == 0 else 1
            a[n] = a[p]*a[n // p] - good*p*a[n // (p*p)]
    return CoeffSeries(n_max, a[1:])




def _theta_terms(c: float, tol: float) -> int:
    # Smallest M with sum_{n > M} 2n exp(-c n) < tol, bounded via the integral
    # of x exp(-c x) from M to infinity (decreasing for x > 1/c).
    M = max(int(math.ceil(1/c)), 1)
    while 2*math.exp(-c*M)*(M/c + 1/c**2) >= tol:
        M *= 2
        if M > LVALUE_MAX_TERMS:
            raise ConvergenceError(f'Theta series needs more than {LVALUE_MAX_TERMS} terms at decay rate {c:.3g}')
    return M


def _theta(a: numpy.ndarray, c: float) -> float:
    n = numpy.arange(1, a.size + 1, dtype=float)
    return math.fsum(a*numpy.exp(-c*n))


def root_number(E: EllCurveQ, y0: float=1.5, *, tol: float=1e-12) -> int:
    '''
    Sign of the functional equation, from F(1/y0) = eps y0^2 F(y0) with
    F(y) = sum a_n exp(-2 pi n y/sqrt(N)).

    The sign with the smaller relative residual is stored on `E` and
    returned.  Neither residual below 1e-6 means the conductor or the
    coefficients are wrong.
    '''
    if not y0 > 0 or y0 == 1:
        raise DomainError(f'root_number() requires y0 > 0 and y0 != 1, got "{y0}"')
    eps, residuals = _root_number_residuals(E, y0, tol)
    if residuals[eps] >= 1e-6:
        raise CurveTableError(
            f'No root number fits curve "{E.label}" with conductor {E.N} '
            f'(residuals {residuals[1]:.3g} for +1, {residuals[-1]:.3g} for -1)')
    if E.eps is not None and E.eps != eps:
        raise CurveTableError(f'Curve "{E.label}" is stored with root number {E.eps}, but the functional equation gives {eps}')
    E.eps = eps
    return eps


def _root_number_residuals(E: EllCurveQ, y0: float, tol: float) -> Tuple[int, Dict[int, float]]:
    if E.N is None:
        raise CurveTableError(f'Curve "{E.label}" has no conductor')
    c = 2*math.pi/math.sqrt(E.N)
    small = min(y0, 1/y0)
    a = an_coeffs(E, _theta_terms(c*small, tol)).a
    lhs = _theta(a, c/y0)
    rhs = y0*y0*_theta(a, c*y0)
    scale = max(abs(lhs), abs(rhs))
    residuals = {sign: abs(lhs - sign*rhs)/scale for sign in (1, -1)}
    eps = 1 if residuals[1] <= residuals[-1] else -1
    return eps, residuals


def root_number_residuals(E: EllCurveQ, y0: float=1.5, *, tol: float=1e-12) -> Dict[int, float]:
    '''
    Relative residuals of F(1/y0) = +-y0^2 F(y0) for both signs.
    '''
    return _root_number_residuals(E, y0, tol)[1]




class LValues(NamedTuple):
    Q: float
    Lambda2: float
    L2: float
    Lprime0: float
    n_used: int
    tail_bound: float


def lvalue_tail(Q: float, M: int) -> float:
    '''
    Bound on the terms n > M of the Lambda(2) series, from |a_n| <= 2n and
    e^(-x)(x + 1)/x^2 + E1(x) <= 3 e^(-x)/x for x >= 1.
    '''
    return (6/Q)*math.exp(-Q*(M + 1))/(1 - math.exp(-Q))


def l_values(E: EllCurveQ, tol: float=1e-12, *, n_max: Optional[int]=None) -> LValues:
    '''
    Completed value Lambda(2) = (sqrt(N)/(2 pi))^2 L(E, 2) and
    L'(E, 0) = eps Lambda(2), from

        Lambda(2) = sum a_n [exp(-Q n)(Q n + 1)/(Q n)^2 + eps E1(Q n)],  Q = 2 pi/sqrt(N).

    Unless `n_max` is given, the series is truncated at the first M with
    Q M >= 1 whose tail bound is below `tol`.
    '''
    if E.N is None:
        raise CurveTableError(f'Curve "{E.label}" has no conductor')
    if E.eps is None:
        root_number(E)
    Q = 2*math.pi/math.sqrt(E.N)
    if n_max is None:
        n_max = max(int(math.ceil(1/Q)), 1)
        while lvalue_tail(Q, n_max) >= tol:
            n_max = int(n_max*1.25) + 1
            if n_max > LVALUE_MAX_TERMS:
                raise ConvergenceError(
                    f'L-series of curve "{E.label}" needs more than {LVALUE_MAX_TERMS} terms for tolerance {tol}',
                    error=lvalue_tail(Q, LVALUE_MAX_TERMS))
    a = an_coeffs(E, n_max).a
    x = Q*numpy.arange(1, n_max + 1, dtype=float)
    kernel = numpy.exp(-x)*(x + 1)/x**2 + E.eps*special.exp1(x)
    Lambda2 = math.fsum(a*kernel)
    tail = lvalue_tail(Q, n_max) if Q*n_max >= 1 else math.inf
    return LValues(Q, Lambda2, Q*Q*Lambda2, E.eps*Lambda2, n_max, tail)




class PeriodLattice(NamedTuple):
    omega_plus: float
    omega_minus: complex
    omega1: complex
    omega2: complex
    components: int

    @property
    def tau(self) -> complex:
        '''
        omega2/omega1, in the upper half-plane.
        '''
        tau = self.omega2/self.omega1
        return tau if tau.imag > 0 else -tau

    @property
    def area(self) -> float:
        return abs((self.omega1.conjugate()*self.omega2).imag)


def agm_periods(E: EllCurveQ) -> PeriodLattice:
    '''
    Period lattice of the invariant differential dx/(2y + a1 x + a3), from
    the AGM on the roots of 4x^3 + b2 x^2 + 2 b4 x + b6.

    `omega_plus` is the least positive real period and `omega_minus` the
    generator of the purely imaginary periods, with positive imaginary part.
    '''
    roots = numpy.roots([4, E.b2, 2*E.b4, E.b6])
    if E.discriminant > 0:
        e3, e2, e1 = sorted(roots.real)
        omega1 = math.pi/special.agm(math.sqrt(e1 - e3), math.sqrt(e1 - e2))
        omega2 = 1j*math.pi/special.agm(math.sqrt(e1 - e3), math.sqrt(e2 - e3))
        return PeriodLattice(float(omega1), complex(omega2), complex(omega1), complex(omega2), 2)
    e1 = float(roots[numpy.argmin(abs(roots.imag))].real)
    a = 3*e1 + E.b2/4
    b = math.sqrt(3*e1*e1 + E.b2*e1/2 + E.b4/2)
    omega1 = 2*math.pi/special.agm(2*math.sqrt(b), math.sqrt(2*b + a))
    im_omega2 = math.pi/special.agm(2*math.sqrt(b), math.sqrt(2*b - a))
    omega2 = complex(omega1/2, im_omega2)
    return PeriodLattice(float(omega1), complex(0, 2*im_omega2), complex(omega1), omega2, 1)




def _parse_int(value: str, field: str, line_number: int, *, optional_marker: Optional[str]=None):
    value = value.strip()
    if optional_marker is not None and value == optional_marker:
        return None
    try:
        return int(value)
    except ValueError:
        raise CurveTableError(f'Curve table line {line_number}: field "{field}" has invalid value "{value}"')


def curve_from_table(entry: Dict[str, str], line_number: int=0) -> EllCurveQ:
    '''
    Build a curve from one record of the curve table.
    '''
    missing = [f for f in CURVE_TABLE_FIELDS if f not in entry or entry[f] is None]
    if missing:
        raise CurveTableError(f'Curve table line {line_number}: missing fields {", ".join(missing)}')
    ainvs = [_parse_int(entry[f], f, line_number) for f in ('a1', 'a2', 'a3', 'a4', 'a6')]
    k = _parse_int(entry['k'], 'k', line_number, optional_marker='-')
    N = _parse_int(entry['N'], 'N', line_number)
    eps = _parse_int(entry['eps'], 'eps', line_number, optional_marker='?')
    r_num = _parse_int(entry['r_num'], 'r_num', line_number, optional_marker='-')
    r_den = _parse_int(entry['r_den'], 'r_den', line_number, optional_marker='-')
    if (r_num is None) != (r_den is None) or r_den == 0:
        raise CurveTableError(f'Curve table line {line_number}: invalid expected ratio "{entry["r_num"]}/{entry["r_den"]}"')
    r = None if r_num is None else Fraction(r_num, r_den)
    E = EllCurveQ(*ainvs, label=entry['label'].strip(), N=N, eps=eps, k=k, r=r)
    if k is not None and k != 27 and family_j(k) != E.j:
        E.flagged = True
        warnings.warn(f'Curve "{E.label}" has j = {E.j}, but the family member with k = {k} has j = {family_j(k)}',
                      MahlerWarning)
    return E


def load_curve_table(path: Optional[Union[str, pathlib.Path]]=None) -> List[EllCurveQ]:
    '''
    Load a curve table.  Without `path`, the packaged table is used.

    The file is comma separated with header
    `label,k,a1,a2,a3,a4,a6,N,eps,r_num,r_den`.  Lines starting with `#` are
    comments.  `k` is `-` for curves outside the family, `eps` is `?` when
    unknown, and `r_num,r_den` are `-,-` when no ratio is expected.
    '''
    path = PACKAGED_CURVE_TABLE if path in (None, '') else pathlib.Path(path).expanduser()
    try:
        text = path.read_text('utf8')
    except FileNotFoundError:
        raise CurveTableError(f'Curve table "{path}" does not exist')
    except (PermissionError, UnicodeDecodeError) as e:
        raise CurveTableError(f'Could not read curve table "{path}":\n{e}')
    numbered = [(n, line) for n, line in enumerate(text.splitlines(), 1)
                if line.strip() and not line.lstrip().startswith('#')]
    if not numbered:
        raise CurveTableError(f'Curve table "{path}" is empty')
    reader = csv.DictReader(io.StringIO('\n'.join(line for _, line in numbered)))
    header = tuple(f.strip() for f in reader.fieldnames or ())
    if header != CURVE_TABLE_FIELDS:
        raise CurveTableError(f'Curve table "{path}" has header {",".join(header)}; expected {",".join(CURVE_TABLE_FIELDS)}')
    reader.fieldnames = list(header)
    curves = []
    labels = set()
    for (line_number, _), entry in zip(numbered[1:], reader):
        E = curve_from_table(entry, line_number)
        if E.label in labels:
            raise CurveTableError(f'Curve table "{path}" line {line_number}: duplicate label "{E.label}"')
        labels.add(E.label)
        curves.append(E)
    return curves


def curve_by_label(curves: List[EllCurveQ], label: str) -> EllCurveQ:
    for E in curves:
        if E.label == label:
            return E
    raise CurveTableError(f'Curve "{label}" is not in the curve table')


def curve_by_k(curves: List[EllCurveQ], k: int) -> EllCurveQ:
    for E in curves:
        if E.k == k:
            return E
    raise CurveTableError(f'No curve with k = {k} in the curve table')
