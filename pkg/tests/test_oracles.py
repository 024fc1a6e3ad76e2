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

from pyhiggs import Higgs
from pyhiggs.common import VARS_UV, VARS_Y, MODE_UV
from pyhiggs.asymptotic import macdonald_poincare
from pyhiggs.exactalg import LaurentPoly, RationalFn, substitute
from pyhiggs.oracles import sym_prod_hodge, stable_bundle_hodge, jacobian_hodge
from pyhiggs.oracles import loc_rank2_hodge, loc_rank3_hodge, rank2_closed_form, rank2_fixed_locus_sum, hrv_E

def UV(terms):

    return LaurentPoly(VARS_UV, terms)

def _hodge(g, p, r, table):

    hodge, _ = Higgs(g, p, mode=MODE_UV, table=table).hodge(r, 1)
    return RationalFn.lift(hodge.to_laurent())

def test_symmetric_product_zero():

    assert sym_prod_hodge(0, 3) == UV({(0, 0): 1})
    assert sym_prod_hodge(-1, 3).is_zero()

def test_symmetric_product_one():

    assert sym_prod_hodge(1, 2) == UV({(0, 0): 1, (1, 0): 2, (0, 1): 2, (1, 1): 1})

@pytest.mark.parametrize('n', range(0, 5))
def test_symmetric_product_collapses_to_macdonald(n):

    collapsed = substitute(sym_prod_hodge(n, 2), {'u': (-1, {'y': 1}), 'v': (-1, {'y': 1})}, VARS_Y)
    assert collapsed == macdonald_poincare(n, 2)

def test_jacobian():

    assert jacobian_hodge(1) == UV({(0, 0): 1, (1, 0): 1, (0, 1): 1, (1, 1): 1})

@pytest.mark.parametrize('g', [2, 3])
def test_stable_bundles_rank_two(g):

    value = stable_bundle_hodge(2, g)
    assert value.is_integral_polynomial()
    assert value.num.terms[(0, 0)] == 1

def test_stable_bundles_unsupported_rank():

    with pytest.raises(ValueError):
        stable_bundle_hodge(4, 2)

@pytest.mark.parametrize('g', [2, 3])
@pytest.mark.parametrize('p', [0, 1, 2])
def test_rank_two_closed_form_matches_fixed_loci(g, p):

    assert rank2_closed_form(g, p) == rank2_fixed_locus_sum(g, p)

@pytest.mark.parametrize('g', [2, 3])
@pytest.mark.parametrize('p', [0, 1, 2])
def test_localization_rank_two(g, p, table):

    assert _hodge(g, p, 2, table) == loc_rank2_hodge(g, p)

@pytest.mark.parametrize('g', [2, 3])
def test_hrv_rank_two(g, table):

    assert _hodge(g, 0, 2, table) == hrv_E(g, 2)

def test_hrv_unsupported_rank():

    with pytest.raises(ValueError):
        hrv_E(2, 4)

@pytest.mark.slow
def test_hrv_rank_three(table):

    assert _hodge(2, 0, 3, table) == hrv_E(2, 3)

@pytest.mark.slow
def test_localization_rank_three(table):

    assert _hodge(2, 0, 3, table) == loc_rank3_hodge(2, 0)
