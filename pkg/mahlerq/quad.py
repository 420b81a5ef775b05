# -*- coding: utf-8 -*-
#
# Copyright (c) 2026, mahlerq developers
# All rights reserved.
#
# Licensed under the BSD 3-Clause License:
# http://opensource.org/licenses/BSD-3-Clause
#


'''
Adaptive quadrature on finite intervals, built on QUADPACK through
`scipy.integrate.quad`.  Integrands in this package are piecewise analytic
with kinks or integrable singularities at known places, so callers pass those
places as breakpoints or as algebraic end-point weights.
'''


import math
from typing import Callable, NamedTuple, Optional, Sequence, Tuple

from scipy import integrate as scipy_integrate

from .err import ConvergenceError, DomainError


MAX_PANELS = 2**14




class QuadResult(NamedTuple):
    value: float
    error_estimate: float
    evaluations: int
    panels: int




def integrate(f: Callable[[float], float], a: float, b: float, *,
              breakpoints: Sequence[float]=(), tol: float=1e-11,
              weight: Optional[str]=None, wvar: Optional[Tuple[float, float]]=None) -> QuadResult:
    '''
    Integrate a real function over [a, b].

    Breakpoints strictly inside the interval start new panels, so no panel
    straddles a kink.  `weight='alg'` with `wvar=(p, q)` integrates
    f(x) (x - a)^p (b - x)^q, which handles inverse square roots at the end
    points.  a > b is allowed and negates the result.  A ConvergenceError is
    raised when the error estimate stays above `tol` at the subdivision
    limit.
    '''
    if not tol > 0:
        raise DomainError(f'Quadrature tolerance must be positive, got "{tol}"')
    if a == b:
        return QuadResult(0.0, 0.0, 0, 0)
    if a > b:
        if weight == 'alg' and wvar is not None:
            wvar = (wvar[1], wvar[0])
        result = integrate(f, b, a, breakpoints=breakpoints, tol=tol, weight=weight, wvar=wvar)
        return result._replace(value=-result.value)
    points = sorted(set(p for p in breakpoints if a < p < b))
    kwargs = dict(epsabs=tol, epsrel=0.0, limit=MAX_PANELS, full_output=1)
    if weight is not None:
        if points:
            # QAWS takes no breakpoints; split the weighted integral instead.
            raise DomainError('Breakpoints cannot be combined with an end-point weight')
        kwargs.update(weight=weight, wvar=wvar)
    elif points:
        kwargs.update(points=points)
    out = scipy_integrate.quad(f, a, b, **kwargs)
    value, error = out[0], out[1]
    info = out[2] if len(out) > 2 and isinstance(out[2], dict) else {}
    message = out[3] if len(out) > 3 else None
    result = QuadResult(float(value), float(error), int(info.get('neval', 0)), int(info.get('last', 1)))
    if not math.isfinite(result.value) or (message is not None and result.error_estimate > tol):
        raise ConvergenceError(
            f'Quadrature on [{a}, {b}] did not reach tolerance {tol} '
            f'(error estimate {result.error_estimate:.3g}): {message}',
            estimate=result.value, error=result.error_estimate)
    return result


def integrate_path(f: Callable[[complex], complex], waypoints: Sequence[complex], *,
                   tol: float=1e-11) -> complex:
    '''
    Integrate a complex function along the polyline through `waypoints`.

    Each segment z0 -> z1 is parametrized as z0 + t (z1 - z0), t in [0, 1],
    and its real and imaginary parts are integrated separately to
    tol/(2*segments).  Any branch tracking needed for `f` to be continuous
    along the path is the caller's job.
    '''
    waypoints = [complex(w) for w in waypoints]
    if len(waypoints) < 2:
        raise DomainError('A path needs at least two waypoints')
    segments = len(waypoints) - 1
    seg_tol = tol/(2*segments)
    total = 0j
    for z0, z1 in zip(waypoints[:-1], waypoints[1:]):
        dz = z1 - z0
        if dz == 0:
            continue
        def g(t, z0=z0, dz=dz):
            return complex(f(z0 + t*dz))*dz
        re = integrate(lambda t: g(t).real, 0.0, 1.0, tol=seg_tol)
        im = integrate(lambda t: g(t).imag, 0.0, 1.0, tol=seg_tol)
        total += complex(re.value, im.value)
    return total
