# -*- coding: utf-8 -*-
#
# Copyright (c) 2026, mahlerq developers
# All rights reserved.
#
# Licensed under the BSD 3-Clause License:
# http://opensource.org/licenses/BSD-3-Clause
#


'''
Results of a command run: one row per numerical check, plus the inputs that
produced them and the elapsed time.

A row of kind "equal" passes when |lhs - rhs| <= tol, a row of kind
"distinct" when the gap exceeds tol.  Rows of kind "info" are recorded but
never decide the outcome.
'''


import json
import math
import time
from contextlib import contextmanager
from typing import Any, Dict, List, NamedTuple, Optional

from .err import MahlerError


CHECK_KINDS = ('equal', 'distinct', 'info')




class CheckResult(NamedTuple):
    name: str
    lhs: Optional[float]
    rhs: Optional[float]
    abs_diff: Optional[float]
    tol: Optional[float]
    passed: Optional[bool]
    kind: str = 'equal'

    @property
    def gating(self) -> bool:
        return self.kind != 'info'

    def to_dict(self) -> Dict[str, Any]:
        return {'name': self.name, 'lhs': self.lhs, 'rhs': self.rhs, 'abs_diff': self.abs_diff,
                'tol': self.tol, 'pass': self.passed, 'kind': self.kind}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'CheckResult':
        try:
            return cls(data['name'], data['lhs'], data['rhs'], data['abs_diff'], data['tol'], data['pass'],
                       data.get('kind', 'equal'))
        except KeyError as e:
            raise MahlerError(f'Report row is missing field {e}')


def _finite_or_none(x) -> Optional[float]:
    if x is None:
        return None
    x = float(x)
    return x if math.isfinite(x) else None


def make_check(name: str, lhs: Optional[float], rhs: Optional[float], tol: Optional[float]=None, *,
               kind: str='equal') -> CheckResult:
    '''
    Build a row.  Non-finite values become `None`, and a gating row with a
    missing side fails.
    '''
    if kind not in CHECK_KINDS:
        raise MahlerError(f'Unknown check kind "{kind}"; choose from {", ".join(CHECK_KINDS)}')
    if kind != 'info' and (tol is None or not tol > 0):
        raise MahlerError(f'Check "{name}" needs a positive tolerance, got "{tol}"')
    lhs, rhs = _finite_or_none(lhs), _finite_or_none(rhs)
    abs_diff = None if lhs is None or rhs is None else abs(lhs - rhs)
    if kind == 'info':
        passed = None
    elif abs_diff is None:
        passed = False
    elif kind == 'equal':
        passed = abs_diff <= tol
    else:
        passed = abs_diff > tol
    return CheckResult(name, lhs, rhs, abs_diff, tol, passed, kind)




class RunReport(object):
    '''
    Accumulates the rows of one command.  `inputs` echoes the parameters,
    tolerances included, so that a report can be reproduced.
    '''
    def __init__(self, command: str, inputs: Optional[Dict[str, Any]]=None,
                 results: Optional[List[CheckResult]]=None, timing: float=0.0):
        self.command = command
        self.inputs = dict(inputs or {})
        self.results = list(results or [])
        self.timing = timing

    def __repr__(self):
        return f'RunReport({self.command!r}, {len(self.results)} rows)'

    def __eq__(self, other):
        if not isinstance(other, RunReport):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def check(self, name: str, lhs, rhs, tol: Optional[float]=None, *, kind: str='equal') -> CheckResult:
        row = make_check(name, lhs, rhs, tol, kind=kind)
        self.results.append(row)
        return row

    def info(self, name: str, lhs, rhs=None) -> CheckResult:
        return self.check(name, lhs, rhs, kind='info')

    def extend(self, other: 'RunReport'):
        self.results.extend(other.results)

    @property
    def failures(self) -> List[CheckResult]:
        return [row for row in self.results if row.gating and not row.passed]

    @property
    def passed(self) -> bool:
        return not self.failures

    @contextmanager
    def timed(self):
        start = time.perf_counter()
        try:
            yield self
        finally:
            self.timing += time.perf_counter() - start

    def to_dict(self) -> Dict[str, Any]:
        return {'command': self.command, 'inputs': self.inputs,
                'results': [row.to_dict() for row in self.results], 'timing': self.timing}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'RunReport':
        try:
            return cls(data['command'], data['inputs'], [CheckResult.from_dict(row) for row in data['results']],
                       float(data['timing']))
        except KeyError as e:
            raise MahlerError(f'Report is missing field {e}')

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> 'RunReport':
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise MahlerError(f'Report is not valid JSON:\n{e}')
        return cls.from_dict(data)
