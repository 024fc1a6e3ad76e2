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

from functools import lru_cache
from fractions import Fraction

from sympy.polys.domains import QQ
from sympy.polys.orderings import lex
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import ring

from ..common import InexactDivisionException

@lru_cache(maxsize=None)
def polynomial_ring(names):
    """
    Returns the sympy polynomial ring QQ[names] in lexicographic order.

    Parameters
    ----------
    names : tuple of str
        The ordered variable names.
    """

    return ring(','.join(names), QQ, lex)[0]

def to_ring(poly):
    """
    Converts a LaurentPoly whose exponents are all nonnegative into an element
    of the matching sympy ring.
    """

    R = polynomial_ring(poly.vars)
    data = {}
    for exps, c in poly.terms.items():
        c = Fraction(c)
        data[exps] = QQ(c.numerator, c.denominator)

    return R.from_dict(data)

def from_ring(names, element):

    from .laurent import LaurentPoly

    terms = {}
    for exps, c in element.items():
        terms[tuple(int(e) for e in exps)] = Fraction(int(c.numerator), int(c.denominator))

    return LaurentPoly(names, terms)

def cofactors(p, q):
    """
    Returns (h, p / h, q / h) with h = gcd(p, q), for LaurentPolys with
    nonnegative exponents.
    """

    h, cp, cq = to_ring(p).cofactors(to_ring(q))

    return from_ring(p.vars, h), from_ring(p.vars, cp), from_ring(p.vars, cq)

def exquo(p, d):
    """
    Exact polynomial quotient p / d for LaurentPolys with nonnegative exponents.

    Raises
    ------
    pyhiggs.common.InexactDivisionException
        The division leaves a nonzero remainder.
    """

    try:
        q = to_ring(p).exquo(to_ring(d))
    except ExactQuotientFailed:
        raise InexactDivisionException('{} is not divisible by {}'.format(p, d))

    return from_ring(p.vars, q)
