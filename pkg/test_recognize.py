# -*- coding: utf-8 -*-
#
# Copyright (c) 2026, mahlerq developers
# All rights reserved.
#
# Licensed under the BSD 3-Clause License:
# http://opensource.org/licenses/BSD-3-Clause
#


import math
from fractions import Fraction

import pytest

from mahlerq.err import DomainError, RecognitionError, RelationNotFound
from mahlerq.recognize import pslq, rational_reconstruct




def test_rational_reconstruct():
    guess = rational_reconstruct(-1/3 + 1e-12)
    assert (guess.num, guess.den) == (-1, 3)
    assert guess.as_fraction() == Fraction(-1, 3)
    assert guess.residual < 1e-11
    assert rational_reconstruct(-5/3).as_fraction() == Fraction(-5, 3)
    assert rational_reconstruct(2.0).den == 1


def test_rational_reconstruct_rejects():
    with pytest.raises(RecognitionError) as excinfo:
        rational_reconstruct(0.123456789, max_den=60)
    assert excinfo.value.residual > 1e-9
    with pytest.raises(RecognitionError):
        rational_reconstruct(1/61, max_den=60)
    with pytest.raises(DomainError):
        rational_reconstruct(0.5, max_den=0)
    with pytest.raises(DomainError):
        rational_reconstruct(math.nan)


def test_pslq_golden_ratio():
    phi = (1 + math.sqrt(5))/2
    relation = pslq([1.0, phi, phi*phi])
    assert relation.vector == (1, 1, -1)
    assert relation.residual <= 1e-10
    assert relation.iterations >= 1


def test_pslq_ratio():
    # n~(2) = -3 L'(E, 0)
    relation = pslq([-1.125, 0.375])
    assert relation.vector == (1, 3)
    assert relation.residual == 0.0


def test_pslq_zero_entry():
    relation = pslq([0.0, 1.0, 2.0])
    assert relation.vector == (1, 0, 0)
    assert relation.iterations == 0


def test_pslq_no_relation():
    with pytest.raises(RelationNotFound) as excinfo:
        pslq([math.pi, math.e])
    assert excinfo.value.iterations >= 1


def test_pslq_domain():
    with pytest.raises(DomainError):
        pslq([1.0])
    with pytest.raises(DomainError):
        pslq([1.0]*9)
    with pytest.raises(DomainError):
        pslq([0.0, 0.0])
    with pytest.raises(DomainError):
        pslq([math.nan, 1.0])
