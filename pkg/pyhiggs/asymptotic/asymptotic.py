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

from ..common import sign_power, refinement_vars, check_mode, MODE_Y
from ..exactalg import LaurentPoly, series_expand
from ..partitions import partitions_of
from .omega import omega, lambda_prefactor

from threading import Lock

import logging
import time

def lambda_valuation_bound(c, r):
    """
    Returns the smallest lam exponent among the building blocks with |Y| = r.
    Asymptotic invariants vanish below it.
    """

    return min(lambda_prefactor(c, Y) for Y in partitions_of(r))

def asymptotic_series(c, r, order, mode=MODE_Y):
    """
    Returns the sum of the building blocks over |Y| = r as a TruncatedSeries in lam.
    """

    total = None
    for Y in partitions_of(r):
        s = series_expand(omega(c, Y, mode), 'lam', order)
        total = s if total is None else total + s

    return total

def asymptotic_invariants(c, r, e_max, mode=MODE_Y):
    """
    Returns the asymptotic invariants A(r, e) for c(r) <= e <= e_max.

    Parameters
    ----------
    c : CurveData
        The curve data (g, p).
    r : int
        The rank, r >= 1.
    e_max : int
        The largest degree.
    mode : str
        'y' or 'uv'.

    Returns
    -------
    dict
        Map from e to the lam^e coefficient, a LaurentPoly in y or in (a, b).
        Empty when e_max < c(r).
    """

    check_mode(mode)
    lowest = c.lower_degree_bound(r)
    if e_max < lowest:
        return {}

    ts = time.time()
    series = asymptotic_series(c, r, e_max, mode)
    logging.debug("[PYHIGGS: ASYMPTOTIC] Performance [asymptotic_invariants (g: {} - p: {} - r: {} - e_max: {} - mode: {})]: ({:.3f}s)".format(
        c.g, c.p, r, e_max, mode, time.time() - ts))

    return {e: series.coefficient(e) for e in range(lowest, e_max + 1)}

class AsymptoticInvariants:
    """
    Lazily extended store of asymptotic invariants for one curve and one
    refinement mode.  The lam-series of each rank is recomputed to a larger
    order whenever a degree beyond the known order is requested.
    """

    __lock = Lock()

    def __init__(self, curve, mode=MODE_Y):
        """
        Class constructor.

        Parameters
        ----------
        curve : CurveData
            The curve data (g, p).
        mode : str
            'y' or 'uv'.
        """

        self._curve = curve
        self._mode = check_mode(mode)
        self._series = {}
        self._floors = {}

########################
#### PUBLIC METHODS ####
########################
    @property
    def curve(self):

        return self._curve

    @property
    def mode(self):

        return self._mode

    def degree_floor(self, r):
        """
        Returns the smallest degree with a possibly nonzero invariant of rank r.
        """

        if r not in self._floors:
            self._floors[r] = max(self._curve.lower_degree_bound(r), lambda_valuation_bound(self._curve, r))

        return self._floors[r]

    def invariant(self, r, e):
        """
        Returns A(r, e) as a LaurentPoly in the refinement variables.
        """

        if e < self.degree_floor(r):
            return LaurentPoly.zero(refinement_vars(self._mode))

        with self.__lock:
            series = self._series.get(r)
            if series is None or series.order < e:
                series = self.__build(r, e, series)
                self._series[r] = series

        return series.coefficient(e)

    def a_tilde(self, r, e):
        """
        Returns (-1)^(rp) A(r, e).
        """

        value = self.invariant(r, e)
        return -value if sign_power(r * self._curve.p) < 0 else value

#########################
#### PRIVATE METHODS ####
#########################
    def __build(self, r, e, previous):

        c = self._curve
        order = max(e, 2 * r * (c.g - 1) + r)
        if previous is not None:
            order = max(order, 2 * previous.order - self.degree_floor(r))

        ts = time.time()
        series = asymptotic_series(c, r, order, self._mode)
        logging.debug("[PYHIGGS: ASYMPTOTIC] Performance [series (g: {} - p: {} - r: {} - order: {} - mode: {})]: ({:.3f}s)".format(
            c.g, c.p, r, order, self._mode, time.time() - ts))

        return series
