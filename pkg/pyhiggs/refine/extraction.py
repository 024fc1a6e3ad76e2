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

from ..common import ValidationFailedException, sign_power
from ..exactalg import collapse_uv
from .polynomials import PoincarePoly, HodgePoly

from math import gcd

import logging

def higgs_sign(c, r, e):
    """(-1)^(e - r(g - 1 - p)), relating H(r, e) and the wallcrossing invariant."""

    return sign_power(e - r * (c.g - 1 - c.p))

def expected_n(c, r, m):
    """
    n(r, e) = r^2 (g - 1) + r(r - 1) p / 2 + m.
    """

    return r * r * (c.g - 1) + r * (r - 1) * c.p // 2 + m

def poincare_from_higgs(c, r, e, h):
    """
    Extracts the Poincare polynomial of the moduli space of Hitchin pairs
    from the refined Higgs invariant H(r, e)(y) = (-1)^(e - r(g - 1 - p)) y^-n P(-y).

    Parameters
    ----------
    c : CurveData
        The curve data (g, p).
    r, e : int
        A coprime charge.
    h : RationalFn
        H(r, e) over ('y',).

    Raises
    ------
    pyhiggs.common.ValidationFailedException
        One of the checks 'coprimality', 'polynomial', 'integrality', 'b0',
        'nonnegative', 'degree' or 'n-identity' failed.

    Returns
    -------
    tuple
        (PoincarePoly, n)
    """

    poly = _checked_polynomial(c, r, e, h)

    n = -poly.min_exponents()[0]
    coeffs = [0] * (poly.max_exponents()[0] + n + 1)
    for (k,), q in poly.terms.items():
        coeffs[k + n] = sign_power(k + n) * q

    if coeffs[0] != 1:
        raise ValidationFailedException('b0', 'b0 = {} instead of 1 for ({}, {})'.format(coeffs[0], r, e))

    negative = [k for k, b in enumerate(coeffs) if b < 0]
    if negative:
        raise ValidationFailedException('nonnegative', 'Negative Betti numbers in degrees {} for ({}, {})'.format(negative, r, e))

    P = PoincarePoly(coeffs)
    if P.degree % 2:
        raise ValidationFailedException('degree', 'Odd degree {} for ({}, {})'.format(P.degree, r, e))

    _check_n(c, r, e, n, P.m)

    return P, n

def hodge_from_higgs(c, r, e, h):
    """
    Extracts the Hodge polynomial from the doubly refined invariant
    H(r, e)(u, v) = (-1)^(e - r(g - 1 - p)) (uv)^(-n/2) E(-u, -v), written in
    a = u^(1/2), b = v^(1/2).

    Parameters
    ----------
    c : CurveData
        The curve data (g, p).
    r, e : int
        A coprime charge.
    h : RationalFn
        H(r, e) over ('a', 'b').

    Raises
    ------
    pyhiggs.common.ValidationFailedException
        One of the checks 'coprimality', 'polynomial', 'integrality', 'parity',
        'b0', 'nonnegative', 'symmetry', 'collapse' or 'n-identity' failed.

    Returns
    -------
    tuple
        (HodgePoly, n)
    """

    poly = _checked_polynomial(c, r, e, h)

    lowest = min(i + j for i, j in poly.terms)
    if lowest % 2:
        raise ValidationFailedException('parity', 'Odd total degree {} for ({}, {})'.format(lowest, r, e))
    n = -lowest // 2

    coeffs = {}
    for (i, j), q in poly.terms.items():
        i, j = i + n, j + n
        if i % 2 or j % 2 or i < 0 or j < 0:
            raise ValidationFailedException('parity', 'Monomial a^{} b^{} is not a monomial in (u, v)'.format(i - n, j - n))
        coeffs[(i // 2, j // 2)] = sign_power((i + j) // 2) * q

    E = HodgePoly(coeffs)
    if E.hodge_number(0, 0) != 1:
        raise ValidationFailedException('b0', 'h(0, 0) = {} instead of 1 for ({}, {})'.format(E.hodge_number(0, 0), r, e))

    negative = sorted(key for key, value in coeffs.items() if value < 0)
    if negative:
        raise ValidationFailedException('nonnegative', 'Negative Hodge numbers at {} for ({}, {})'.format(negative, r, e))

    if not E.is_symmetric():
        raise ValidationFailedException('symmetry', 'Hodge numbers of ({}, {}) are not symmetric under u <-> v'.format(r, e))

    P, n_y = poincare_from_higgs(c, r, e, collapse_uv(h))
    if E.collapse() != P or n_y != n:
        raise ValidationFailedException('collapse', 'u = v specialization of ({}, {}) gives {} instead of {}'.format(r, e, E.collapse(), P))

    _check_n(c, r, e, n, P.m)

    return E, n

def _checked_polynomial(c, r, e, h):

    if gcd(r, e) != 1:
        raise ValidationFailedException('coprimality', 'coprimality required, got ({}, {})'.format(r, e))

    if not h.is_polynomial():
        raise ValidationFailedException('polynomial', 'H({}, {}) has denominator {}'.format(r, e, h.den))

    poly = h.as_laurent()
    if poly.is_zero():
        raise ValidationFailedException('polynomial', 'H({}, {}) vanishes'.format(r, e))

    if not poly.is_integral():
        raise ValidationFailedException('integrality', 'H({}, {}) has fractional coefficients'.format(r, e))

    return poly.scale(higgs_sign(c, r, e))

def _check_n(c, r, e, n, m):

    expected = expected_n(c, r, m)
    if n != expected:
        raise ValidationFailedException('n-identity', 'n = {} but r^2(g-1) + r(r-1)p/2 + m = {} for ({}, {})'.format(n, expected, r, e))

    logging.debug('[PYHIGGS: REFINE] ({}, {}): n = {}, m = {}'.format(r, e, n, m))
