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
from hypothesis import given, settings, strategies as st

from fractions import Fraction

from pyhiggs.common import InexactDivisionException, DivisionByZeroException, NonExpandableException
from pyhiggs.common import VARS_Y, VARS_AB, VARS_LAM_Y, VARS_HRV, MODE_UV
from pyhiggs.exactalg import LaurentPoly, RationalFn, FactoredExpr, exact_div, ratfn_reduce, qint
from pyhiggs.exactalg import series_expand, series_from_laurent, taylor_at_one, substitute, collapse_uv

def Y(terms):

    return LaurentPoly(VARS_Y, {(k,): c for k, c in terms.items()})

def AB(terms):

    return LaurentPoly(VARS_AB, terms)

@st.composite
def laurent_polys(draw, vars=VARS_Y, low=-3, high=3, nonzero=False):

    size = len(vars)
    exps = st.tuples(*[st.integers(min_value=low, max_value=high)] * size)
    terms = draw(st.dictionaries(exps, st.integers(min_value=-4, max_value=4), max_size=4))
    poly = LaurentPoly(vars, terms)
    if nonzero and poly.is_zero():
        poly = LaurentPoly(vars, {(0,) * size: draw(st.sampled_from([-2, -1, 1, 3]))})

    return poly

#### qint ####

def test_qint_zero():

    assert qint(0) == LaurentPoly.zero(VARS_Y)

def test_qint_three():

    assert qint(3) == Y({2: 1, 0: 1, -2: 1})

def test_qint_two_doubly_refined():

    assert qint(2, MODE_UV) == AB({(1, 1): 1, (-1, -1): 1})

def test_qint_negative():

    assert qint(-4) == -qint(4)

@pytest.mark.parametrize('n', range(-10, 11))
def test_qint_bracket_identity(n):

    lhs = qint(n) * Y({1: 1, -1: -1})
    assert lhs == Y({n: 1}) - Y({-n: 1})

#### exact_div ####

def test_exact_div_bracket():

    assert exact_div(Y({2: 1, -2: -1}), Y({1: 1, -1: -1})) == Y({1: 1, -1: 1})

def test_exact_div_polynomial():

    assert exact_div(Y({0: 1, 2: -1}), Y({0: 1, 1: -1})) == Y({0: 1, 1: 1})

def test_exact_div_inexact():

    with pytest.raises(InexactDivisionException):
        exact_div(Y({0: 1}), Y({0: 1, 1: -1}))

def test_exact_div_by_zero():

    with pytest.raises(DivisionByZeroException):
        exact_div(Y({0: 1}), LaurentPoly.zero(VARS_Y))

@settings(max_examples=200, deadline=None)
@given(laurent_polys(), laurent_polys(nonzero=True))
def test_exact_div_round_trip(p, d):

    assert exact_div(p * d, d) == p

@settings(max_examples=200, deadline=None)
@given(laurent_polys(VARS_AB, -2, 2), laurent_polys(VARS_AB, -2, 2, nonzero=True))
def test_exact_div_round_trip_bivariate(p, d):

    assert exact_div(p * d, d) == p

#### ratfn_reduce ####

def test_ratfn_reduce_cancels():

    f = ratfn_reduce(Y({0: 1, 2: -1}), Y({0: 1, 1: -1}))
    assert f.num == Y({0: 1, 1: 1})
    assert f.den == Y({0: 1})

def test_ratfn_reduce_strips_monomials():

    f = ratfn_reduce(Y({-1: 1}), Y({-2: 1}))
    assert f.num == Y({1: 1})
    assert f.is_polynomial()

def test_ratfn_reduce_bivariate():

    num = AB({(0, 0): 1, (2, 2): -1}) * AB({(0, 0): 1, (1, 1): 1})
    den = AB({(0, 0): 1, (1, 1): -1})
    f = ratfn_reduce(num, den)
    assert f.num == AB({(0, 0): 1, (1, 1): 1}) ** 2
    assert f.is_polynomial()

def test_ratfn_reduce_sign_of_denominator():

    f = ratfn_reduce(Y({0: 1}), Y({0: -2, 1: 2}))
    assert f.den == Y({0: 1, 1: -1})
    assert f.num == Y({0: Fraction(-1, 2)})

def test_ratfn_reduce_zero_denominator():

    with pytest.raises(DivisionByZeroException):
        ratfn_reduce(Y({0: 1}), LaurentPoly.zero(VARS_Y))

@settings(max_examples=200, deadline=None)
@given(laurent_polys(), laurent_polys(nonzero=True), laurent_polys(nonzero=True))
def test_ratfn_reduce_common_factor(p, q, r):

    assert ratfn_reduce(p * r, q * r) == ratfn_reduce(p, q)

@settings(max_examples=200, deadline=None)
@given(laurent_polys(), laurent_polys(nonzero=True))
def test_ratfn_reduce_idempotent(p, q):

    f = ratfn_reduce(p, q)
    g = ratfn_reduce(f.num, f.den)
    assert (g.num, g.den) == (f.num, f.den)

def test_ratfn_arithmetic():

    f = RationalFn.lift(Y({0: 1})) / Y({0: 1, 1: -1})
    g = f * Y({0: 1, 1: -1})
    assert g == 1
    assert (f + f) == f * 2

#### series_expand ####

def test_series_geometric():

    f = FactoredExpr(VARS_LAM_Y, 1, (0, 0), [(1, (1, 1), -1)])
    s = series_expand(f, 'lam', 2)
    assert s.coefficient(0) == Y({0: 1})
    assert s.coefficient(1) == Y({1: 1})
    assert s.coefficient(2) == Y({2: 1})

def test_series_with_negative_prefactor():

    f = FactoredExpr(VARS_LAM_Y, 1, (-1, 0), [(1, (1, 0), 2)])
    s = series_expand(f, 'lam', 1)
    assert s.coefficient(-1) == Y({0: 1})
    assert s.coefficient(0) == Y({0: -2})
    assert s.coefficient(1) == Y({0: 1})

def test_series_not_expandable():

    f = FactoredExpr(VARS_LAM_Y, 1, (0, 0), [(1, (0, 1), -1)])
    with pytest.raises(NonExpandableException):
        series_expand(f, 'lam', 3)

@settings(max_examples=200, deadline=None)
@given(laurent_polys(VARS_LAM_Y, 0, 3), laurent_polys(VARS_LAM_Y, 0, 3))
def test_series_product_matches_direct_product(p, q):

    order = 4
    product = series_from_laurent(p, 'lam', order) * series_from_laurent(q, 'lam', order)
    direct = (p * q).collect('lam')
    for n in range(0, product.order + 1):
        assert product.coefficient(n) == direct.get(n, LaurentPoly.zero(VARS_Y))

@settings(max_examples=200, deadline=None)
@given(st.lists(st.tuples(st.integers(min_value=1, max_value=2), st.integers(min_value=-2, max_value=2),
    st.integers(min_value=1, max_value=2)), min_size=1, max_size=3))
def test_series_of_factored_product_matches_expansion(factors):

    f = FactoredExpr(VARS_LAM_Y, 1, (0, 0), [(1, (d, e), k) for d, e, k in factors])
    s = series_expand(f, 'lam', 5)
    direct = f.expand().as_laurent().collect('lam')
    for n in range(0, 6):
        assert s.coefficient(n) == direct.get(n, LaurentPoly.zero(VARS_Y))

#### substitute ####

def test_substitute_factored():

    f = FactoredExpr(('q', 'y'), 1, (0, 0), [(1, (1, 1), -1)])
    g = substitute(f, {'q': (1, {'lam': 2, 'y': 1}), 'y': (1, {'y': 1})}, VARS_LAM_Y)
    assert g.factors == ((1, (2, 2), -1),)

def test_substitute_signed_monomial():

    f = LaurentPoly(('x',), {(0,): 1, (1,): 1})
    g = substitute(f, {'x': (-1, {'x': 2})})
    assert g == LaurentPoly(('x',), {(0,): 1, (2,): -1})

def test_substitute_into_bracket():

    g = substitute(qint(3), {'y': (1, {'a': 1, 'b': 1})}, VARS_AB)
    assert g == qint(3, MODE_UV)

@settings(max_examples=100, deadline=None)
@given(laurent_polys())
def test_substitute_composition(p):

    lifted = substitute(p, {'y': (1, {'a': 1, 'b': 1})}, VARS_AB)
    back = substitute(lifted, {'a': (1, {'y': 1}), 'b': (1, {})}, VARS_Y)
    assert back == p

def test_collapse_uv():

    assert collapse_uv(AB({(1, 1): 1, (2, 0): 3})) == Y({1: 4})

def test_collapse_uv_odd_degree():

    with pytest.raises(ValueError):
        collapse_uv(AB({(1, 0): 1}))

#### taylor_at_one ####

def _q(terms):

    return LaurentPoly(VARS_HRV, {(k, 0, 0): c for k, c in terms.items()})

def test_taylor_regular():

    f = ratfn_reduce(_q({0: 1, 2: -1}), _q({0: 1, 1: -1}))
    s = taylor_at_one(f, 'q', 1, 0)
    assert s.coefficient(0) == 2
    assert s.coefficient(1) == 1

def test_taylor_detects_pole():

    f = ratfn_reduce(_q({0: 1}), _q({0: 1, 1: -1}))
    s = taylor_at_one(f, 'q', 0, 1)
    assert s.coefficient(-1) == -1
