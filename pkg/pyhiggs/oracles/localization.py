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

from ..common import ValidationFailedException, VARS_UV
from ..exactalg import RationalFn, ratfn_reduce, series_expand
from .hodge import symmetric_product_series, sym_prod_hodge, stable_bundle_hodge, jacobian_hodge
from .hodge import uv_poly, uv_power, check_hodge

from fractions import Fraction
from math import floor

import logging
import time

def loc_rank2_hodge(g, p):
    """
    Hodge polynomial of the moduli space of Hitchin pairs of type (2, 1) with
    coefficient bundle of degree 2g - 2 + p, from the torus fixed loci.

    The fixed locus sum and the closed form are both evaluated and must agree.

    Raises
    ------
    pyhiggs.common.ValidationFailedException
        The two evaluations differ or the result is not a nonnegative integral polynomial.

    Returns
    -------
    RationalFn
        A polynomial over ('u', 'v').
    """

    ts = time.time()

    closed = rank2_closed_form(g, p)
    fixed = rank2_fixed_locus_sum(g, p)
    if closed != fixed:
        raise ValidationFailedException('localization', 'Rank 2 fixed locus sum and closed form differ for g = {}, p = {}'.format(g, p))

    logging.debug("[PYHIGGS: ORACLES] Performance [loc_rank2_hodge (g: {} - p: {})]: ({:.3f}s)".format(g, p, time.time() - ts))

    return check_hodge(closed, 'H(2, 1) at g = {}, p = {}'.format(g, p))

def rank2_fixed_locus_sum(g, p):
    """
    H(M(2, 1)) + sum over 1 <= e0 <= g + [(p - 1)/2] of
    (uv)^(2e0 + g - 2) (1 + u)^g (1 + v)^g H(S^(2g - 1 + p - 2e0) X).
    """

    total = stable_bundle_hodge(2, g)
    J = jacobian_hodge(g)
    for e0 in range(1, g + (p - 1) // 2 + 1):
        total = total + uv_power(2 * e0 + g - 2) * J * sym_prod_hodge(2 * g - 1 + p - 2 * e0, g)

    return total

def rank2_closed_form(g, p):

    one = uv_poly({(0, 0): 1})
    u = uv_poly({(1, 0): 1})
    v = uv_poly({(0, 1): 1})
    J = jacobian_hodge(g)
    level = 2 * g - 2 + p

    first = ratfn_reduce((one + u * u * v) ** g * (one + u * v * v) ** g, (one - uv_power(1)) * (one - uv_power(2)))

    dual = (one - u) ** g * (one - v) ** g * uv_power(level)
    second = ratfn_reduce(dual, one + uv_power(1)) * Fraction((-1) ** (p + 1), 4)

    bracket = ratfn_reduce(uv_poly({(0, 0): g}), one + u) + ratfn_reduce(uv_poly({(0, 0): g}), one + v) \
        - ratfn_reduce(one, one - uv_power(1)) - Fraction(2 * level + 1, 2)
    third = ratfn_reduce(uv_power(level) * J, (one - uv_power(1)) * 2) * bracket

    return (first + second + third) * J

def loc_rank3_hodge(g, p):
    """
    Hodge polynomial of the moduli space of Hitchin pairs of type (3, 1),
    summing the four types of torus fixed loci.

    Raises
    ------
    pyhiggs.common.ValidationFailedException
        The result is not a nonnegative integral polynomial.

    Returns
    -------
    RationalFn
        A polynomial over ('u', 'v').
    """

    ts = time.time()

    total = stable_bundle_hodge(3, g)
    for e0 in range(1, type_two_bound(g, p) + 1):
        total = total + type_two_hodge(g, p, e0)
    for e0 in range(0, type_three_bound(g, p) + 1):
        total = total + type_three_hodge(g, p, e0)
    for m1, m2 in type_four_labels(g, p):
        total = total + type_four_hodge(g, p, m1, m2)

    logging.debug("[PYHIGGS: ORACLES] Performance [loc_rank3_hodge (g: {} - p: {})]: ({:.3f}s)".format(g, p, time.time() - ts))

    return check_hodge(total, 'H(3, 1) at g = {}, p = {}'.format(g, p))

def type_two_bound(g, p):
    """g + [p/2 - 2/3]"""

    return g + floor(Fraction(p, 2) - Fraction(2, 3))

def type_three_bound(g, p):
    """g + [p/2 - 4/3]"""

    return g + floor(Fraction(p, 2) - Fraction(4, 3))

def type_four_labels(g, p):
    """
    Pairs (m1, m2) >= 0 with 2m1 + m2 and m1 + 2m2 at most 3(2g - 2 + p),
    and m1 + 2m2 = 2 mod 3.
    """

    bound = 3 * (2 * g - 2 + p)
    labels = []
    for m1 in range(0, bound // 2 + 1):
        for m2 in range(0, bound - 2 * m1 + 1):
            if m1 + 2 * m2 <= bound and (m1 + 2 * m2) % 3 == 2:
                labels.append((m1, m2))

    return labels

def type_two_hodge(g, p, e0):

    i = -2 * e0 + 2 * g - 2 + p
    coeff = _pair_coefficient(g, e0 + g, 2 * g - 1 - 2 * e0 + p, i)

    return _pair_prefactor(g, 3 * e0 + 2 * g - 3) * coeff

def type_three_hodge(g, p, e0):

    i = -2 * e0 + 2 * g - 3 + p
    coeff = _pair_coefficient(g, e0 + g, 2 * g - 2 - 2 * e0 + p, i)

    return _pair_prefactor(g, 3 * e0 + 2 * g - 1) * coeff

def type_four_hodge(g, p, m1, m2):

    J = jacobian_hodge(g)
    value = uv_power(8 * g - 8 + 3 * p - m1 - m2) * J * sym_prod_hodge(m1, g) * sym_prod_hodge(m2, g)

    return RationalFn.lift(value)

def _pair_prefactor(g, k):

    J = jacobian_hodge(g)
    return ratfn_reduce(uv_power(k) * J * J, uv_poly({(0, 0): 1, (1, 1): -1}))

def _pair_coefficient(g, k1, k2, i):
    """
    Coefficient of x^i in
    ((uv)^k1 / (x u^2 v^2 - 1) - (uv)^k2 / (x - uv)) * symmetric_product_series.
    """

    # 1 / (x u^2 v^2 - 1) = -(1 - x u^2 v^2)^-1
    first = symmetric_product_series(g, (0, k1, k1), -1, [(1, (1, 2, 2), -1)])
    # 1 / (x - uv) = -(uv)^-1 (1 - x (uv)^-1)^-1
    second = symmetric_product_series(g, (0, k2 - 1, k2 - 1), -1, [(1, (1, -1, -1), -1)])

    value = series_expand(first, 'x', i).coefficient(i) - series_expand(second, 'x', i).coefficient(i)

    return RationalFn.lift(value)
