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

from ..common import NonCancellationException, VARS_HRV, VARS_UV, sign_power
from ..exactalg import FactoredExpr, RationalFn, TruncatedSeries, series_log1p, substitute, taylor_at_one
from ..partitions import partitions_of
from .hodge import jacobian_hodge

from threading import Lock

import logging
import time

def hrv_block(g, Y):
    """
    Returns the tableau term of the generating series over (q, x, y):

        prod over boxes of (qxy)^(l(2 - 2g)) (1 + q^h y^l x^(l+1))^g (1 + q^h x^l y^(l+1))^g
                           / ((1 - q^h (xy)^(l+1)) (1 - q^h (xy)^l))
    """

    prefactor = [0, 0, 0]
    factors = []
    for box in Y.boxes():
        h, l = box.hook, box.leg
        prefactor = [e + l * (2 - 2 * g) for e in prefactor]
        factors.append((-1, (h, l + 1, l), g))
        factors.append((-1, (h, l, l + 1), g))
        factors.append((1, (h, l + 1, l + 1), -1))
        factors.append((1, (h, l, l), -1))

    return FactoredExpr(VARS_HRV, 1, prefactor, factors)

def hrv_normalization(g, r):
    """
    B_r = (qxy)^((1 - g) r (r - 1)) (1 + qx)^g (1 + qy)^g / ((1 - qxy)(1 - q))
    """

    k = (1 - g) * r * (r - 1)
    factors = [(-1, (1, 1, 0), g), (-1, (1, 0, 1), g), (1, (1, 1, 1), -1), (1, (1, 0, 0), -1)]

    return FactoredExpr(VARS_HRV, 1, (k, k, k), factors)

def adams_operation(f, k):
    """
    q -> q^k, x -> -(-x)^k, y -> -(-y)^k.
    """

    sign = sign_power(k + 1)
    images = {'q': (1, {'q': k}), 'x': (sign, {'x': k}), 'y': (sign, {'y': k})}

    return substitute(f, images)

class HRVState:
    """
    Logarithm of the generating series of one genus, truncated at T^order,
    and the functions H_r peeled from it.
    """

    __lock = Lock()

    def __init__(self, g, order):

        self.g = g
        self.order = order
        self._products = {}
        self._log = None

########################
#### PUBLIC METHODS ####
########################
    def log_series(self):
        """
        Returns log Z(q, x, y, T) as a TruncatedSeries in T.
        """

        with self.__lock:
            if self._log is None:
                ts = time.time()
                coeffs = {}
                for k in range(1, self.order + 1):
                    total = RationalFn.zero(VARS_HRV)
                    for Y in partitions_of(k):
                        total = total + hrv_block(self.g, Y).expand()
                    coeffs[k] = total

                self._log = series_log1p(TruncatedSeries('T', VARS_HRV, self.order, coeffs))
                logging.debug("[PYHIGGS: ORACLES] Performance [hrv log series (g: {} - order: {})]: ({:.3f}s)".format(
                    self.g, self.order, time.time() - ts))

        return self._log

    def product(self, r):
        """
        Returns H_r B_r from the T^r coefficient of log Z by removing the
        multicover contributions of the proper divisors of r.
        """

        if r not in self._products:
            value = self.log_series().coefficient(r)
            for k in range(2, r + 1):
                if r % k == 0:
                    value = value - adams_operation(self.product(r // k), k) / k
            self._products[r] = RationalFn.lift(value)

        return self._products[r]

    def function(self, r):
        """
        Returns H_r(q, x, y).
        """

        return self.product(r) / hrv_normalization(self.g, r).expand()

def hrv_E(g, r):
    """
    E-polynomial of the moduli space of Hitchin pairs of rank r for the
    canonical coefficient bundle:

        E_r(u, v) = (1 + u)^g (1 + v)^g H_r(1, u, v).

    Parameters
    ----------
    g : int
        The genus.
    r : int
        The rank, r <= 3.

    Raises
    ------
    pyhiggs.common.NonCancellationException
        H_r has a pole at q = 1.
    pyhiggs.common.InsufficientOrderException
        The pole order at q = 1 exceeds the announced bound.

    Returns
    -------
    RationalFn
        Over ('u', 'v').
    """

    if r < 1 or r > 3:
        raise ValueError('The HRV oracle supports ranks 1 to 3, got {}'.format(r))

    ts = time.time()

    state = HRVState(g, r)
    H = state.function(r)

    pole_order = r * r + 1
    expansion = taylor_at_one(H, 'q', 0, pole_order)
    residue = [n for n, c in expansion.items() if n < 0 and not c.is_zero()]
    if residue:
        raise NonCancellationException('H_{} has a pole of order {} at q = 1'.format(r, -min(residue)))

    value = expansion.coefficient(0)
    value = substitute(value, {'x': (1, {'u': 1}), 'y': (1, {'v': 1})}, VARS_UV)

    logging.debug("[PYHIGGS: ORACLES] Performance [hrv_E (g: {} - r: {})]: ({:.3f}s)".format(g, r, time.time() - ts))

    return value * jacobian_hodge(g)
