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

from ..common import NonIntegralException, sign_power, refinement_vars, MODE_Y
from ..exactalg import RationalFn, qint, substitute
from .extraction import higgs_sign, poincare_from_higgs, hodge_from_higgs

from math import gcd
from threading import Lock

import logging
import time

def scale_variables(f, k):
    """
    Returns f with every refinement variable raised to the k-th power.
    """

    return substitute(f, {name: (1, {name: k}) for name in f.vars})

def divisors(n):

    return [k for k in range(1, n + 1) if n % k == 0]

class Refinement:
    """
    Integer invariants and moduli space polynomials derived from the
    wallcrossing invariants of one curve.

    The multicover relation is applied to the normalized invariant
    (-1)^(rp) H(r, e) of the recursion:

        (-1)^(rp) H(r, e) = sum over k | gcd(r, e) of Hbar(r/k, e/k)(y^k) / (k [k]).
    """

    __lock = Lock()

    def __init__(self, wallcross):
        """
        Class constructor.

        Parameters
        ----------
        wallcross : WallCrossing
            The recursion engine supplying the Higgs invariants.
        """

        self._wallcross = wallcross
        self._hbar = {}

########################
#### PUBLIC METHODS ####
########################
    @property
    def curve(self):

        return self._wallcross.curve

    @property
    def mode(self):

        return self._wallcross.mode

    def higgs(self, r, e):
        """
        Returns H(r, e) = (-1)^(e - r(g - 1 - p)) times the recursion output.
        """

        value = self._wallcross.higgs_tilde(r, e)
        return value * higgs_sign(self.curve, r, e)

    def multicover_target(self, r, e):
        """
        Returns (-1)^(rp) times the recursion output, the left hand side of
        the multicover relation.
        """

        value = self._wallcross.higgs_tilde(r, e)
        return value * sign_power(r * self.curve.p)

    def multicover_invert(self, r, e):
        """
        Solves the multicover relation for Hbar(r, e).

        Raises
        ------
        pyhiggs.common.NonIntegralException
            Hbar(r, e) is not a Laurent polynomial with integer coefficients.

        Returns
        -------
        RationalFn
        """

        value = self.__hbar(r, e)
        if not value.is_integral_polynomial():
            raise NonIntegralException('Hbar({}, {}) is not integral: {}'.format(r, e, value))

        return value

    def multicover_sum(self, r, e):
        """
        Rebuilds the left hand side of the multicover relation from the Hbar invariants.
        """

        total = RationalFn.zero(refinement_vars(self.mode))
        for k in divisors(gcd(r, e)):
            total = total + self.__multicover_term(k, self.__hbar(r // k, e // k))

        return total

    def poincare(self, r, e):
        """
        Returns (PoincarePoly, n) for a coprime charge; y mode only.
        """

        if self.mode != MODE_Y:
            raise ValueError('Poincare polynomials are extracted from the y-refined invariants')

        ts = time.time()
        result = poincare_from_higgs(self.curve, r, e, self.higgs(r, e))
        logging.debug("[PYHIGGS: REFINE] Performance [poincare (r: {} - e: {})]: ({:.3f}s)".format(r, e, time.time() - ts))

        return result

    def hodge(self, r, e):
        """
        Returns (HodgePoly, n) for a coprime charge; uv mode only.
        """

        if self.mode == MODE_Y:
            raise ValueError('Hodge polynomials are extracted from the doubly refined invariants')

        ts = time.time()
        result = hodge_from_higgs(self.curve, r, e, self.higgs(r, e))
        logging.debug("[PYHIGGS: REFINE] Performance [hodge (r: {} - e: {})]: ({:.3f}s)".format(r, e, time.time() - ts))

        return result

#########################
#### PRIVATE METHODS ####
#########################
    def __multicover_term(self, k, value):

        if k == 1:
            return value

        return scale_variables(value, k) / (qint(k, self.mode) * k)

    def __hbar(self, r, e):

        key = (r, e % r)
        with self.__lock:
            cached = self._hbar.get(key)
        if cached is not None:
            return cached

        value = self.multicover_target(r, e)
        for k in divisors(gcd(r, e))[1:]:
            value = value - self.__multicover_term(k, self.__hbar(r // k, e // k))

        with self.__lock:
            self._hbar[key] = value

        return value
