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

from ..common import sign_power, VARS_LAM_Y, VARS_LAM_AB, MODE_Y, check_mode
from ..exactalg import FactoredExpr

def omega_y(c, Y):
    """
    Returns the refined building block of the tableau Y as a FactoredExpr over (lam, y).

    Each box contributes F(q_box, y) with q_box = lam^h y^(arm - leg) and
    F(q, z) = z^(1-g) (1 - q)^(2g) / ((1 - q z)(1 - q / z)); the z^(1-g) parts
    are collected in the prefactor.

    Parameters
    ----------
    c : CurveData
        The curve data (g, p).
    Y : Partition
        The tableau; the empty one gives 1.
    """

    if not Y.rows:
        return FactoredExpr.one(VARS_LAM_Y)

    factors = []
    for box in Y.boxes():
        h = box.hook
        s = box.arm - box.leg
        factors.append((1, (h, s), 2 * c.g))
        factors.append((1, (h, s + 1), -1))
        factors.append((1, (h, s - 1), -1))

    lam, y = _prefactor(c, Y)
    return FactoredExpr(VARS_LAM_Y, sign_power(c.p * Y.size), (lam, y), factors)

def omega_uv(c, Y):
    """
    Returns the doubly refined building block of Y as a FactoredExpr over (lam, a, b),
    where a and b are the square roots of u and v.

    Each box contributes G(q_box, ab, a/b) with q_box = lam^h (ab)^(arm - leg) and
    G(q, z, w) = z^(1-g) (1 - q w)^g (1 - q / w)^g / ((1 - q z)(1 - q / z)).
    """

    if not Y.rows:
        return FactoredExpr.one(VARS_LAM_AB)

    factors = []
    for box in Y.boxes():
        h = box.hook
        s = box.arm - box.leg
        factors.append((1, (h, s + 1, s - 1), c.g))
        factors.append((1, (h, s - 1, s + 1), c.g))
        factors.append((1, (h, s + 1, s + 1), -1))
        factors.append((1, (h, s - 1, s - 1), -1))

    lam, ab = _prefactor(c, Y)
    return FactoredExpr(VARS_LAM_AB, sign_power(c.p * Y.size), (lam, ab, ab), factors)

def omega(c, Y, mode=MODE_Y):

    return omega_y(c, Y) if check_mode(mode) == MODE_Y else omega_uv(c, Y)

def lambda_prefactor(c, Y):
    """
    Returns the lam exponent of the prefactor, which is the lowest power of lam
    in the expansion of the building block.
    """

    return _prefactor(c, Y)[0]

def _prefactor(c, Y):

    y = -c.p * Y.sum_content() + (c.g - 1) * Y.sum_y_weight() + (1 - c.g) * Y.size
    lam = -c.p * Y.sum_diagonal() + (c.g - 1) * Y.sum_lambda_weight()

    return lam, y
