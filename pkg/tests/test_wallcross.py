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

from fractions import Fraction
from threading import Thread

from pyhiggs import Higgs
from pyhiggs.common import DegenerateBracketException, VARS_Y, MODE_Y, MODE_UV
from pyhiggs.asymptotic import CurveData
from pyhiggs.cli import load_fixtures, parse_fixture_expression
from pyhiggs.exactalg import LaurentPoly, RationalFn, collapse_uv
from pyhiggs.wallcross import Charge, InvariantKey, InvariantTable, normalize_charge, decompositions
from pyhiggs.wallcross import rank_one_closed_form, STRICT, NONSTRICT, EQUAL

G2P0_21 = '((1-y)^4(1+y^2)(1-4y^3+2y^4))/(y^9)'
G2P0_20 = '((1-y)^4(2 + 4 y^2 - 8 y^3 + 7 y^4 - 12 y^5 + 14 y^6 - 4 y^7 + 5 y^8))/(2y^9(1+y^2))'

def _slow(fixture):

    return fixture.g >= 4 or (fixture.r == 3 and (fixture.mode == MODE_UV or fixture.g >= 3))

#### charges ####

def test_charge_slope_and_dual():

    gamma = Charge(2, 1)
    assert gamma.slope == Fraction(1, 2)
    assert gamma.dual(2) == Charge(2, 3)
    assert gamma + Charge(1, -1) == Charge(3, 0)

def test_charge_rank_must_be_positive():

    with pytest.raises(ValueError):
        Charge(0, 1)

@pytest.mark.parametrize('gamma, expected', [
    (Charge(2, 5), Charge(2, 1)),
    (Charge(2, -1), Charge(2, 1)),
    (Charge(3, 2), Charge(3, 2)),
    (Charge(1, 7), Charge(1, 0)),
])
def test_normalize_charge(gamma, expected):

    charge, note = normalize_charge(CurveData(2, 0), gamma)
    assert charge == expected
    assert (note == 'canonical') == (gamma == expected)

def test_invariant_key_json():

    key = InvariantKey(2, 1, 3, 1, MODE_UV)
    assert InvariantKey.from_json(key.to_json()) == key

#### decompositions ####

def test_strict_decompositions():

    found = list(decompositions(Charge(2, 1), STRICT, 0))
    assert len(found) == 1
    assert found[0].head == Charge(1, 0)
    assert found[0].tail == (Charge(1, 1),)
    assert found[0].weight == 1

def test_nonstrict_decompositions():

    found = list(decompositions(Charge(2, 0), NONSTRICT, 0))
    assert [(d.head, d.tail) for d in found] == [(Charge(1, 0), (Charge(1, 0),))]

def test_equal_decompositions_need_integral_parts():

    assert list(decompositions(Charge(2, 1), EQUAL, 0)) == []

def test_equal_decompositions_weight():

    found = list(decompositions(Charge(2, 0), EQUAL, 0))
    assert len(found) == 1
    assert found[0].head is None
    assert found[0].tail == (Charge(1, 0), Charge(1, 0))
    assert found[0].weight == Fraction(1, 2)

def test_no_decompositions_below_floor():

    assert list(decompositions(Charge(2, -3), STRICT, -1)) == []

def test_unknown_strictness():

    with pytest.raises(ValueError):
        list(decompositions(Charge(2, 1), 'sideways', 0))

#### recursion ####

def test_rank_one_closed_form_values():

    expected = LaurentPoly(VARS_Y, {(-3,): 1, (-2,): -4, (-1,): 6, (0,): -4, (1,): 1})
    assert rank_one_closed_form(CurveData(2, 0)) == expected

@pytest.mark.parametrize('g', [2, 3, 4, 5])
@pytest.mark.parametrize('p', [0, 1, 2])
def test_rank_one_matches_closed_form(g, p, table):

    higgs = Higgs(g, p, table=table)
    expected = rank_one_closed_form(higgs.curve)
    for e in range(-3, 4):
        assert higgs.higgs_tilde(1, e) == expected
        if e != g - 1:
            assert higgs.wallcross.higgs_tilde(1, e, normalize=False) == expected

def test_rank_one_doubly_refined(table):

    higgs = Higgs(2, 1, mode=MODE_UV, table=table)
    assert higgs.higgs_tilde(1, 0) == rank_one_closed_form(higgs.curve, MODE_UV)

@pytest.mark.parametrize('e, text', [(1, G2P0_21), (0, G2P0_20)])
def test_rank_two_genus_two(e, text, table):

    assert Higgs(2, 0, table=table).higgs_tilde(2, e) == parse_fixture_expression(text)

def test_coprime_rank_two_is_polynomial(table):

    assert Higgs(2, 1, table=table).higgs_tilde(2, 1).is_polynomial()

def test_degenerate_bracket(table):

    wallcross = Higgs(2, 0, table=table).wallcross
    with pytest.raises(DegenerateBracketException):
        wallcross.higgs_tilde(2, 2, normalize=False)

@pytest.mark.parametrize('p', [0, 1])
def test_shift_relation(p, table):

    frame = Higgs(2, p, table=table).parity_table(2)
    assert frame['matches'].isna().sum() == 1
    assert frame['matches'].dropna().astype(bool).all()

def test_parity_rank_three(table):

    higgs = Higgs(2, 0, table=table)
    assert higgs.higgs_tilde(3, 2) == higgs.higgs_tilde(3, 1)

@pytest.mark.parametrize('p', [0, 1, 2])
def test_duality(p, table):

    wallcross = Higgs(2, p, table=table).wallcross
    assert wallcross.higgs_tilde(2, 1, normalize=False) == wallcross.higgs_tilde(2, -1, normalize=False)

@pytest.mark.parametrize('p', [0, 1])
@pytest.mark.parametrize('e', [0, 1])
def test_doubly_refined_collapses(p, e, table):

    doubly = Higgs(2, p, mode=MODE_UV, table=table).higgs_tilde(2, e)
    refined = Higgs(2, p, table=table).higgs_tilde(2, e)
    assert collapse_uv(doubly) == refined

def test_results_are_memoized():

    higgs = Higgs(2, 0)
    first = higgs.higgs_tilde(2, 1)
    computes = higgs.table.computes
    assert higgs.higgs_tilde(2, 3) == first
    assert higgs.table.computes == computes
    assert higgs.table.hits >= 1

#### memo table ####

def test_table_rejects_conflicting_values():

    store = InvariantTable()
    key = InvariantKey(2, 0, 1, 0, MODE_Y)
    store.put(key, RationalFn.lift(LaurentPoly.one(VARS_Y)))
    store.put(key, RationalFn.lift(LaurentPoly.one(VARS_Y)))
    with pytest.raises(ValueError):
        store.put(key, RationalFn.zero(VARS_Y))
    assert len(store) == 1
    assert key in store
    assert InvariantKey(2, 0, 1, 1, MODE_Y) not in store

def test_table_counts_under_threads():

    store = InvariantTable()
    value = RationalFn.lift(LaurentPoly.one(VARS_Y))

    seen = []

    def fill(e0):
        for e in range(e0, e0 + 50):
            key = InvariantKey(2, 0, 1, e, MODE_Y)
            store.put(key, value)
            seen.append((key in store, len(store)))

    workers = [Thread(target=fill, args=(25 * k,)) for k in range(4)]
    for worker in workers:
        worker.start()
    for worker in workers:
        worker.join()

    assert len(store) == 125
    assert store.computes == 125
    assert all(found and 1 <= count <= 125 for found, count in seen)
    assert all(InvariantKey(2, 0, 1, e, MODE_Y) in store for e in range(125))

def test_table_json_entries():

    source = Higgs(2, 0).table
    Higgs(2, 0, table=source).higgs_tilde(2, 1)

    restored = InvariantTable()
    restored.load_json_entries(source.to_json_entries())
    assert restored.items() == source.items()

#### reference tables ####

@pytest.mark.parametrize('fixture', [
    pytest.param(f, marks=pytest.mark.slow, id='line{}'.format(f.line)) if _slow(f) else pytest.param(f, id='line{}'.format(f.line))
    for f in load_fixtures()
])
def test_reference_tables(fixture, table):

    assert Higgs(fixture.g, fixture.p, mode=fixture.mode, table=table).higgs_tilde(fixture.r, fixture.e) == fixture.value
