#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# PyHiggs - Refined Higgs sheaf invariants
#
# Copyright 2021 The pyhiggs authors
#
# Licensed under the Apache License, Version 2.0 (the 'License');
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an 'AS IS' BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#

import pytest

from pyhiggs.common import PoleAtZeroException, VARS_GAUGE, VARS_GAUGE_LIMIT, VARS_LAM_Y, MODE_Y, MODE_UV
from pyhiggs.asymptotic import CurveData, omega_y, omega_uv
from pyhiggs.exactalg import FactoredExpr, collapse_uv
from pyhiggs.gauge import Gauge, FixedPointTerm, fixedpoint_term, qf_zero_limit, spec_refined, spec_doubly, gauge_consistent
from pyhiggs.partitions import Partition, partitions_of

EMPTY = Partition()
BOX = Partition((1,))

def _term(factors):

    return FixedPointTerm(EMPTY, EMPTY, FactoredExpr(VARS_GAUGE, 1, (0, 0, 0, 0), factors))

def test_empty_fixed_point():

    assert fixedpoint_term(CurveData(2, 0), EMPTY, EMPTY).expr == FactoredExpr.one(VARS_GAUGE)

@pytest.mark.parametrize('g', [2, 3])
def test_single_box_factor_count(g):

    term = fixedpoint_term(CurveData(g, 0), BOX, EMPTY)
    assert term.expr.multiplicity() == 4 * (g + 1)

def test_mixed_fixed_point_has_both_qf_directions():

    term = fixedpoint_term(CurveData(2, 0), BOX, BOX)
    qf = [m[2] for _, m, _ in term.expr.factors]
    assert 1 in qf
    assert -1 in qf

def test_limit_drops_positive_qf():

    limit = qf_zero_limit(_term([(1, (0, 0, 1, 0), -1)]), 0)
    assert limit == FactoredExpr.one(VARS_GAUGE_LIMIT)

def test_limit_extracts_monomial():

    limit = qf_zero_limit(_term([(1, (0, 0, -1, 1), 1)]), 1)
    assert limit == FactoredExpr(VARS_GAUGE_LIMIT, -1, (0, 0, 1))

def test_limit_rejects_pole():

    with pytest.raises(PoleAtZeroException):
        qf_zero_limit(_term([(1, (0, 0, -1, 1), 1)]), 0)

def test_limit_rejects_vanishing_term():

    with pytest.raises(ValueError):
        qf_zero_limit(_term([(1, (0, 0, 1, 0), -1)]), 1)

def test_limit_of_single_box_is_finite():

    c = CurveData(2, 0)
    limit = qf_zero_limit(fixedpoint_term(c, BOX, EMPTY), c.g - 1)
    assert limit.vars == VARS_GAUGE_LIMIT

def test_spec_refined_empty():

    assert spec_refined(CurveData(2, 0), EMPTY) == FactoredExpr.one(VARS_LAM_Y)

def test_spec_refined_single_box():

    c = CurveData(2, 0)
    assert spec_refined(c, BOX) == omega_y(c, BOX)

def test_spec_doubly_single_box():

    c = CurveData(2, 0)
    assert spec_doubly(c, BOX) == omega_uv(c, BOX)

def test_spec_refined_two_one():

    c = CurveData(3, 1)
    Y = Partition((2, 1))
    assert spec_refined(c, Y) == omega_y(c, Y)

@pytest.mark.parametrize('g', [2, 3])
@pytest.mark.parametrize('p', [0, 1, 2])
@pytest.mark.parametrize('mode', [MODE_Y, MODE_UV])
def test_gauge_consistency(g, p, mode):

    c = CurveData(g, p)
    for n in range(1, 4):
        for Y in partitions_of(n):
            assert gauge_consistent(c, Y, mode), Y

def test_doubly_collapses_to_refined():

    c = CurveData(2, 1)
    Y = Partition((2,))
    assert collapse_uv(spec_doubly(c, Y)) == spec_refined(c, Y)

def test_gauge_check_frame():

    frame = Gauge(CurveData(2, 0)).check(2)
    assert list(frame.columns) == ['Y', 'size', 'consistent']
    assert len(frame) == 3
    assert frame['consistent'].all()
