# -*- coding: utf-8 -*-
#
# Copyright (c) 2026, mahlerq developers
# All rights reserved.
#
# Licensed under the BSD 3-Clause License:
# http://opensource.org/licenses/BSD-3-Clause
#


from typing import Optional




class MahlerError(Exception):
    pass


class DomainError(MahlerError):
    '''
    An argument lies outside the domain where an operation is defined.
    '''
    pass


class ConvergenceError(MahlerError):
    '''
    A quadrature, series, or root search did not reach its tolerance.  The
    best available estimate is kept in `estimate`.
    '''
    def __init__(self, message: str, *, estimate: Optional[complex]=None, error: Optional[float]=None):
        super().__init__(message)
        self.estimate = estimate
        self.error = error


class CurveTableError(MahlerError):
    pass


class RecognitionError(MahlerError):
    '''
    No rational number or integer relation matched the input within the
    requested tolerance.
    '''
    def __init__(self, message: str, *, residual: Optional[float]=None):
        super().__init__(message)
        self.residual = residual


class RelationNotFound(RecognitionError):
    def __init__(self, message: str, *, norm_bound: float, iterations: int):
        super().__init__(message)
        self.norm_bound = norm_bound
        self.iterations = iterations




class MahlerWarning(UserWarning):
    pass
