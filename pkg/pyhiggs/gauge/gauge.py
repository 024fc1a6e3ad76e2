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

from ..common import PoleAtZeroException, sign_power, check_mode, frame_from_records, MODE_Y, MODE_UV
from ..common import VARS_GAUGE, VARS_GAUGE_LIMIT, VARS_LAM_Y, VARS_LAM_AB
from ..exactalg import FactoredExpr, substitute
from ..partitions import Partition, partitions_of
from ..asymptotic import omega

from dataclasses import dataclass
from fractions import Fraction

import logging
import time

QF = VARS_GAUGE.index('Qf')

@dataclass(frozen=True)
class FixedPointTerm:
    """
    Contribution of the fixed point (Y1, Y2) to the instanton partition
    function, over (q1, q2, Qf, y) with q_i = e^(-eps_i), Qf = e^(a_12) and
    e^(a_1) = -1 already folded into the signs.
    """

    Y1: Partition
    Y2: Partition
    expr: FactoredExpr

def fixedpoint_term(c, Y1, Y2):
    """
    Returns the (Y1, Y2) summand of the rank-2 instanton partition function
    of the local ruled surface over the curve.

    Parameters
    ----------
    c : CurveData
        The curve data (g, p).
    Y1, Y2 : Partition
        The fixed point; rows index the diagrams.
    """

    diagrams = (Y1, Y2)

    # Chern-Simons prefactor, with e^(-|Y1| a_1) = (-1)^|Y1| and e^(-|Y2| a_2) = (-1)^|Y2| Qf^|Y2|
    q1 = q2 = 0
    for Y in diagrams:
        for box in Y.boxes():
            q1 -= box.i - 1
            q2 -= box.j - 1
    prefactor = (c.p * q1, c.p * q2, c.p * Y2.size, 0)
    scalar = sign_power(c.p * (Y1.size + Y2.size))

    factors = []
    for alpha in (0, 1):
        for beta in (0, 1):
            Ya, Yb = diagrams[alpha], diagrams[beta]
            qf = 0 if alpha == beta else (1 if alpha == 0 else -1)

            for box in Ya.boxes():
                e1 = -(Yb.column(box.j) - box.i)
                e2 = Ya.row(box.i) - box.j + 1
                factors.append((1, (e1, e2, qf, 1), c.g))
                factors.append((1, (e1, e2, qf, 0), -1))

            for box in Yb.boxes():
                e1 = Ya.column(box.j) - box.i + 1
                e2 = -(Yb.row(box.i) - box.j)
                factors.append((1, (e1, e2, qf, 1), c.g))
                factors.append((1, (e1, e2, qf, 0), -1))

    return FixedPointTerm(Y1, Y2, FactoredExpr(VARS_GAUGE, scalar, prefactor, factors))

def qf_zero_limit(t, compensating_power):
    """
    Returns the value of Qf^compensating_power * t at Qf = 0.

    Factors with a positive power of Qf tend to one.  A factor with a negative
    power is rewritten as (1 - c Qf^m M) = -c Qf^m M (1 - Qf^-m / (c M)) and its
    monomial moves to the prefactor.

    Raises
    ------
    pyhiggs.common.PoleAtZeroException
        The compensated term still has a pole at Qf = 0.
    ValueError
        The compensated term vanishes at Qf = 0.
    """

    expr = t.expr
    scalar = Fraction(expr.scalar)
    prefactor = list(expr.prefactor)
    prefactor[QF] += compensating_power
    kept = []

    for c, m, k in expr.factors:
        if m[QF] > 0:
            continue
        if m[QF] == 0:
            kept.append((c, _drop_qf(m), k))
            continue
        scalar *= Fraction(-c) ** k
        prefactor = [a + k * b for a, b in zip(prefactor, m)]

    net = prefactor[QF]
    if net < 0:
        raise PoleAtZeroException('Term {} x {} keeps Qf^{} at Qf = 0'.format(t.Y1, t.Y2, net))
    if net > 0:
        raise ValueError('Term {} x {} vanishes like Qf^{} at Qf = 0'.format(t.Y1, t.Y2, net))

    return FactoredExpr(VARS_GAUGE_LIMIT, scalar, _drop_qf(prefactor), kept)

def spec_refined(c, Y):
    """
    Rederives the refined building block of Y from the Qf -> 0 limit of its
    fixed-point term, at (q1, q2, y) = (lam^-1 y, lam y, y^-1).
    """

    return _specialize(c, Y, MODE_Y)

def spec_doubly(c, Y):
    """
    Rederives the doubly refined building block of Y from the Qf -> 0 limit
    of its fixed-point term, at (q1, q2, y) = (lam^-1 ab, lam ab, a^-2).
    """

    return _specialize(c, Y, MODE_UV)

def gauge_consistent(c, Y, mode=MODE_Y):
    """
    Checks that the gauge theory specialization equals the building block.
    """

    ts = time.time()
    derived = _specialize(c, Y, mode)
    result = derived.equals(omega(c, Y, mode))
    logging.debug("[PYHIGGS: GAUGE] Performance [gauge_consistent (g: {} - p: {} - Y: {} - mode: {})]: ({:.3f}s)".format(
        c.g, c.p, Y, mode, time.time() - ts))

    return result

def _specialize(c, Y, mode):

    n = Y.size
    limit = qf_zero_limit(fixedpoint_term(c, Y, Partition()), (c.g - 1) * n)

    if check_mode(mode) == MODE_Y:
        images = {
            'q1': (1, {'lam': -1, 'y': 1}),
            'q2': (1, {'lam': 1, 'y': 1}),
            'y': (1, {'y': -1})}
        target = VARS_LAM_Y
        monomial = ((c.g - 1) * n, 2 * n)
    else:
        images = {
            'q1': (1, {'lam': -1, 'a': 1, 'b': 1}),
            'q2': (1, {'lam': 1, 'a': 1, 'b': 1}),
            'y': (1, {'a': -2})}
        target = VARS_LAM_AB
        monomial = ((c.g - 1) * n, 2 * (c.g + 1) * n, -2 * (c.g - 1) * n)

    return substitute(limit, images, target) * FactoredExpr.monomial(target, monomial)

def _drop_qf(exps):

    return tuple(e for i, e in enumerate(exps) if i != QF)

class Gauge:
    """
    Gauge theory cross-checks of the building blocks for one curve.
    """

    def __init__(self, curve, mode=MODE_Y):

        self._curve = curve
        self._mode = check_mode(mode)

########################
#### PUBLIC METHODS ####
########################
    def fixedpoint_term(self, Y1, Y2):

        return fixedpoint_term(self._curve, Y1, Y2)

    def specialize(self, Y):

        return _specialize(self._curve, Y, self._mode)

    def consistent(self, Y):

        return gauge_consistent(self._curve, Y, self._mode)

    def check(self, n_max):
        """
        Runs the consistency check for every tableau with 1 <= |Y| <= n_max.

        Returns
        -------
        pandas.DataFrame
            Columns Y, size and consistent.
        """

        records = []
        for n in range(1, n_max + 1):
            for Y in partitions_of(n):
                records.append({'Y': str(Y), 'size': n, 'consistent': self.consistent(Y)})

        return frame_from_records(records, ['Y', 'size', 'consistent'])
