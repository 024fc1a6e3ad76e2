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

from ..common import sign_power, VARS_Y, VARS_MACDONALD
from ..exactalg import FactoredExpr, LaurentPoly, series_expand

from functools import lru_cache

@lru_cache(maxsize=None)
def macdonald_poincare(n, g):
    """
    Returns the x^n coefficient of (1 - xy)^(2g) / ((1 - x)(1 - xy^2)),
    the signed Poincare polynomial of the n-th symmetric product of a genus g curve.
    """

    if n < 0:
        return LaurentPoly.zero(VARS_Y)

    gen = FactoredExpr(VARS_MACDONALD, 1, (0, 0), [(1, (1, 1), 2 * g), (1, (1, 0), -1), (1, (1, 2), -1)])
    return series_expand(gen, 'x', n).coefficient(n)

def rank_one_fixed_locus(c, e):
    """
    A(1, e) = (-1)^p y^(1 - g - e) P(S^e X).
    """

    if e < 0:
        return LaurentPoly.zero(VARS_Y)

    return macdonald_poincare(e, c.g).mul_monomial(sign_power(c.p), (1 - c.g - e,))

def rank_two_fixed_locus_series(c, e):
    """
    Returns A(2, e) as a sum over the fixed loci of the two rank-2 tableaux.
    Every locus is a product of two symmetric products of the curve.
    """

    g, p = c.g, c.p
    total = LaurentPoly.zero(VARS_Y)

    # tableau (1,1): degrees e0 + e_1 = e with 0 <= e0 <= e_1 - p
    e0 = 0
    while 2 * e0 <= e - p:
        e_1 = e - e0
        term = macdonald_poincare(e0, g) * macdonald_poincare(e_1 - e0 - p, g)
        total = total + term.shift((2 - 2 * g - e,))
        e0 += 1

    # tableau (2): degrees e0 + e1 = e with 0 <= e0 <= e1 + 2g - 2 + p
    e0 = 0
    while 2 * e0 <= e + 2 * g - 2 + p:
        e1 = e - e0
        term = macdonald_poincare(e0, g) * macdonald_poincare(e1 - e0 + 2 * g - 2 + p, g)
        total = total + term.shift((6 - 6 * g - 2 * p + e0 - e1,))
        e0 += 1

    return total
