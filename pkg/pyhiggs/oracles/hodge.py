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

from ..common import ValidationFailedException, VARS_UV, VARS_SYM
from ..exactalg import FactoredExpr, LaurentPoly, RationalFn, ratfn_reduce, series_expand

from functools import lru_cache

def symmetric_product_series(g, prefactor=(0, 0, 0), scalar=1, extra=()):
    """
    (1 + xu)^g (1 + xv)^g / ((1 - x)(1 - xuv)) over (x, u, v), times an
    optional monomial, scalar and extra factors.
    """

    factors = [(-1, (1, 1, 0), g), (-1, (1, 0, 1), g), (1, (1, 0, 0), -1), (1, (1, 1, 1), -1)]
    return FactoredExpr(VARS_SYM, scalar, prefactor, factors + list(extra))

@lru_cache(maxsize=None)
def sym_prod_hodge(n, g):
    """
    Returns the Hodge polynomial of the n-th symmetric product of a genus g
    curve, the x^n coefficient of symmetric_product_series.
    """

    if n < 0:
        return LaurentPoly.zero(VARS_UV)

    return series_expand(symmetric_product_series(g), 'x', n).coefficient(n)

def uv_poly(terms):

    return LaurentPoly(VARS_UV, terms)

def jacobian_hodge(g):
    """(1 + u)^g (1 + v)^g"""

    return uv_poly({(0, 0): 1, (1, 0): 1}) ** g * uv_poly({(0, 0): 1, (0, 1): 1}) ** g

def uv_power(k):
    """(uv)^k"""

    return LaurentPoly.monomial(VARS_UV, (k, k))

def stable_bundle_hodge(r, g):
    """
    Hodge polynomial of the moduli space of stable bundles of rank r and degree 1.

    Parameters
    ----------
    r : int
        2 or 3.
    g : int
        The genus.

    Raises
    ------
    pyhiggs.common.ValidationFailedException
        The closed form does not reduce to a polynomial with nonnegative integer coefficients.

    Returns
    -------
    RationalFn
    """

    one = uv_poly({(0, 0): 1})
    J = jacobian_hodge(g)

    def binomial(i, j):
        return uv_poly({(0, 0): 1, (i, j): 1})

    if r == 2:
        num = binomial(2, 1) ** g * binomial(1, 2) ** g - uv_power(g) * J
        den = (one - uv_power(1)) * (one - uv_power(2))
        value = ratfn_reduce(J * num, den)
    elif r == 3:
        num = binomial(2, 3) ** g * binomial(3, 2) ** g * binomial(1, 2) ** g * binomial(2, 1) ** g \
            - uv_power(2 * g - 1) * binomial(1, 1) ** 2 * J * binomial(1, 2) ** g * binomial(2, 1) ** g \
            + uv_power(3 * g - 1) * uv_poly({(0, 0): 1, (1, 1): 1, (2, 2): 1}) * J * J
        den = (one - uv_power(1)) * (one - uv_power(2)) ** 2 * (one - uv_power(3))
        value = ratfn_reduce(J * num, den)
    else:
        raise ValueError('Stable bundle Hodge polynomials are available for rank 2 and 3, got {}'.format(r))

    check_hodge(value, 'stable bundles of rank {}'.format(r))

    return value

def check_hodge(value, label):

    if not value.is_integral_polynomial():
        raise ValidationFailedException('polynomial', 'Hodge polynomial of {} is not an integral polynomial: {}'.format(label, value))

    negative = [exps for exps, c in value.num.terms.items() if c < 0]
    if negative:
        raise ValidationFailedException('nonnegative', 'Hodge polynomial of {} has negative coefficients at {}'.format(label, sorted(negative)))

    return value
