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

from pyhiggs.common import CurveNotSupportedException, VARS_Y, VARS_LAM_Y, MODE_UV
from pyhiggs.asymptotic import CurveData, AsymptoticInvariants, asymptotic_invariants, asymptotic_series
from pyhiggs.asymptotic import omega_y, omega_uv, lambda_valuation_bound
from pyhiggs.asymptotic import macdonald_poincare, rank_one_fixed_locus, rank_two_fixed_locus_series
from pyhiggs.exactalg import LaurentPoly, FactoredExpr, series_expand, collapse_uv
from pyhiggs.partitions import Partition, partitions_of

def Y(terms):

    return LaurentPoly(VARS_Y, {(k,): c for k, c in terms.items()})

@pytest.mark.parametrize('g, p', [(1, 0), (2, -1), (0, 3)])
def test_curve_not_supported(g, p):

    with pytest.raises(CurveNotSupportedException):
        CurveData(g, p)

def test_lower_degree_bound():

    c = CurveData(2, 1)
    assert c.lower_degree_bound(1) == 0
    assert c.lower_degree_bound(3) == -18
    assert c.slope_floor(2) == -3

@pytest.mark.parametrize('g, p', [(2, 0), (2, 1), (3, 2)])
def test_omega_single_box(g, p):

    c = CurveData(g, p)
    expected = FactoredExpr(VARS_LAM_Y, (-1) ** p, (0, 1 - g), [(1, (1, 0), 2 * g), (1, (1, 1), -1), (1, (1, -1), -1)])
    assert omega_y(c, Partition((1,))) == expected

@pytest.mark.parametrize('g, p', [(2, 0), (3, 1)])
def test_omega_column_of_two(g, p):

    c = CurveData(g, p)
    expected = FactoredExpr(VARS_LAM_Y, 1, (p, -p + 2 - 2 * g), [
        (1, (2, -1), 2 * g), (1, (1, 0), 2 * g),
        (1, (2, 0), -1), (1, (2, -2), -1), (1, (1, 1), -1), (1, (1, -1), -1)])
    assert omega_y(c, Partition((1, 1))) == expected

def _omega_three_boxes(g, p, rows):

    sign = (-1) ** p
    if rows == (1, 1, 1):
        return FactoredExpr(VARS_LAM_Y, sign, (3 * p, -3 * p + 3 - 3 * g), [
            (1, (1, 0), 2 * g), (1, (2, -1), 2 * g), (1, (3, -2), 2 * g),
            (1, (1, 1), -1), (1, (1, -1), -1), (1, (2, -2), -1),
            (1, (2, 0), -1), (1, (3, -3), -1), (1, (3, -1), -1)])
    if rows == (2, 1):
        return FactoredExpr(VARS_LAM_Y, sign, (2 - 2 * g, -2 * p + 5 - 5 * g), [
            (1, (1, 0), 4 * g), (1, (3, 0), 2 * g),
            (1, (1, 1), -2), (1, (1, -1), -2), (1, (3, 1), -1), (1, (3, -1), -1)])
    return FactoredExpr(VARS_LAM_Y, sign, (-3 * p + 6 - 6 * g, -3 * p + 9 - 9 * g), [
        (1, (1, 0), 2 * g), (1, (2, 1), 2 * g), (1, (3, 2), 2 * g),
        (1, (1, 1), -1), (1, (1, -1), -1), (1, (2, 2), -1),
        (1, (2, 0), -1), (1, (3, 3), -1), (1, (3, 1), -1)])

@pytest.mark.parametrize('rows', [(1, 1, 1), (2, 1), (3,)])
@pytest.mark.parametrize('g', [2, 3])
@pytest.mark.parametrize('p', [0, 1, 2])
def test_omega_three_boxes(rows, g, p):

    c = CurveData(g, p)
    assert omega_y(c, Partition(rows)).expand() == _omega_three_boxes(g, p, rows).expand()

def test_omega_empty():

    c = CurveData(2, 0)
    assert omega_y(c, Partition()) == FactoredExpr.one(VARS_LAM_Y)

def test_omega_lowest_coefficient():

    s = series_expand(omega_y(CurveData(2, 0), Partition((1,))), 'lam', 0)
    assert s.coefficient(0) == Y({-1: 1})

@pytest.mark.parametrize('n', range(1, 5))
@pytest.mark.parametrize('g, p', [(2, 0), (3, 1)])
def test_omega_uv_collapses_to_omega_y(n, g, p):

    c = CurveData(g, p)
    for Yd in partitions_of(n):
        assert collapse_uv(omega_uv(c, Yd)) == omega_y(c, Yd)

def test_macdonald_signed_coefficients():

    assert macdonald_poincare(0, 2) == Y({0: 1})
    assert macdonald_poincare(1, 2) == Y({0: 1, 1: -4, 2: 1})

def test_rank_one_invariants():

    c = CurveData(2, 0)
    A = asymptotic_invariants(c, 1, 2)
    assert sorted(A) == [0, 1, 2]
    assert A[0] == Y({-1: 1})
    assert A[1] == Y({-2: 1, -1: -4, 0: 1})
    assert A[2] == rank_one_fixed_locus(c, 2)

def test_empty_below_lower_bound():

    assert asymptotic_invariants(CurveData(2, 0), 2, -5) == {}

def test_vanishing_below_floor():

    store = AsymptoticInvariants(CurveData(2, 0))
    assert store.invariant(1, -1).is_zero()
    assert store.invariant(2, -5).is_zero()

@pytest.mark.parametrize('p', [0, 1, 2])
def test_a_tilde_rank_one(p):

    store = AsymptoticInvariants(CurveData(2, p))
    assert store.a_tilde(1, 0) == Y({-1: 1})

def test_rank_two_matches_fixed_loci():

    c = CurveData(2, 0)
    A = asymptotic_invariants(c, 2, 6)
    for e in range(-2, 7):
        assert A[e] == rank_two_fixed_locus_series(c, e)

@pytest.mark.parametrize('g', [2, 3, pytest.param(4, marks=pytest.mark.slow)])
@pytest.mark.parametrize('p', [0, 1, 2])
@pytest.mark.parametrize('r', [1, 2, 3])
def test_integrality(g, p, r):

    c = CurveData(g, p)
    for e, value in asymptotic_invariants(c, r, 12).items():
        assert value.is_integral(), (e, value)

@pytest.mark.parametrize('r', [1, 2, 3])
def test_valuation_respects_lower_bound(r):

    c = CurveData(2, 1)
    s = asymptotic_series(c, r, 2)
    assert s.valuation is None or s.valuation >= c.lower_degree_bound(r)
    assert lambda_valuation_bound(c, r) >= c.lower_degree_bound(r)

def test_invariant_store_extends_series():

    store = AsymptoticInvariants(CurveData(2, 0), MODE_UV)
    low = store.invariant(1, 0)
    high = store.invariant(1, 8)
    assert low == store.invariant(1, 0)
    assert not high.is_zero()
