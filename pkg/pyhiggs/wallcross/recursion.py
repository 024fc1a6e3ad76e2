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

from ..asymptotic import AsymptoticInvariants
from ..common import DegenerateBracketException, InexactDivisionException, NonIntegralException
from ..common import refinement_vars, check_mode, MODE_Y, MODE_UV
from ..exactalg import LaurentPoly, RationalFn, exact_div, ratfn_reduce, qint
from .charge import Charge, InvariantKey, normalize_charge
from .decompositions import decompositions, STRICT, NONSTRICT, EQUAL
from .table import InvariantTable

from math import gcd

import logging
import time

def rank_one_closed_form(c, mode=MODE_Y):
    """
    Returns the rank one invariant, the same for every degree.

    y mode: (1 - y)^2g / y^(2g - 1).
    uv mode: (1 - a^2)^g (1 - b^2)^g / (ab)^(2g - 1).
    """

    vars = refinement_vars(check_mode(mode))
    g = c.g

    if mode == MODE_UV:
        a = LaurentPoly(vars, {(0, 0): 1, (2, 0): -1})
        b = LaurentPoly(vars, {(0, 0): 1, (0, 2): -1})
        return (a ** g * b ** g).shift((1 - 2 * g, 1 - 2 * g))

    y = LaurentPoly(vars, {(0,): 1, (1,): -1})
    return (y ** (2 * g)).shift((1 - 2 * g,))

class WallCrossing:
    """
    Wallcrossing recursion for the refined Higgs invariants of one curve.

    Every invariant is computed from asymptotic invariants and lower rank
    Higgs invariants, and memoized in an InvariantTable under its normalized
    charge.
    """

    def __init__(self, curve, mode=MODE_Y, table=None, asymptotic=None):
        """
        Class constructor.

        Parameters
        ----------
        curve : CurveData
            The curve data (g, p).
        mode : str
            'y' or 'uv'.
        table : InvariantTable, optional
            Memo table, possibly shared with other curves and modes.
        asymptotic : AsymptoticInvariants, optional
            Source of the asymptotic invariants.
        """

        self._curve = curve
        self._mode = check_mode(mode)
        self._vars = refinement_vars(self._mode)
        self._table = table if table is not None else InvariantTable()
        self._asymptotic = asymptotic or AsymptoticInvariants(curve, self._mode)

########################
#### PUBLIC METHODS ####
########################
    @property
    def curve(self):

        return self._curve

    @property
    def mode(self):

        return self._mode

    @property
    def table(self):

        return self._table

    def a_tilde(self, r, e):

        return self._asymptotic.a_tilde(r, e)

    def bracket(self, r, e):
        """
        Returns [e - r(g - 1)].
        """

        return qint(e - r * (self._curve.g - 1), self._mode)

    def higgs_tilde(self, r, e, normalize=True):
        """
        Returns the refined Higgs invariant of charge (r, e).

        Parameters
        ----------
        r : int
            The rank, r >= 1.
        e : int
            The degree.
        normalize : bool
            When True the charge is moved to its representative with
            0 <= e < r and the memo table is used.  When False the recursion
            runs at e itself, lower ranks still coming from the table.

        Raises
        ------
        pyhiggs.common.DegenerateBracketException
            normalize is False and e = r(g - 1).
        pyhiggs.common.NonIntegralException
            (r, e) is coprime and the result is not a Laurent polynomial.

        Returns
        -------
        RationalFn
            The canonical value over ('y',) or ('a', 'b').
        """

        gamma = Charge(r, e)
        if not normalize:
            return self.__evaluate(gamma)

        charge, note = normalize_charge(self._curve, gamma)
        if charge != gamma:
            logging.debug('[PYHIGGS: WALLCROSS] {} {}'.format(charge, note))

        return self.__normalized(charge)

    def key(self, charge):

        return InvariantKey(self._curve.g, self._curve.p, charge.r, charge.e, self._mode)

#########################
#### PRIVATE METHODS ####
#########################
    def __normalized(self, charge):

        key = self.key(charge)
        value = self._table.get(key)
        if value is not None:
            logging.debug('[PYHIGGS: WALLCROSS] Cache hit {}'.format(key))
            return value

        value = self.__evaluate(charge)
        self._table.put(key, value)

        return value

    def __weighted(self, charge, cache):
        """
        Returns [e - r(g - 1)] * H(r, e) for a tail charge.
        """

        if charge not in cache:
            value = self.__normalized(normalize_charge(self._curve, charge)[0])
            bracket = self.bracket(charge.r, charge.e)
            if value.is_polynomial():
                cache[charge] = bracket * value.as_laurent()
            else:
                cache[charge] = value * bracket

        return cache[charge]

    def __evaluate(self, gamma):

        c = self._curve
        bracket = self.bracket(gamma.r, gamma.e)
        if bracket.is_zero():
            raise DegenerateBracketException('Bracket [{}] vanishes for charge {}'.format(gamma.e - gamma.r * (c.g - 1), gamma))

        ts = time.time()

        dual = gamma.dual(c.g)
        mu_floor = c.slope_floor(gamma.r)
        floor = self._asymptotic.degree_floor
        cache = {}

        polynomial = self.a_tilde(gamma.r, gamma.e) - self.a_tilde(dual.r, dual.e)
        rational = RationalFn.zero(self._vars)

        groups = (
            (gamma, STRICT, 1),
            (dual, NONSTRICT, -1),
            (gamma, EQUAL, -1),
        )
        for target, strictness, sign in groups:
            for decomposition in decompositions(target, strictness, mu_floor, floor):
                if decomposition.head is None:
                    term = LaurentPoly.one(self._vars)
                    parts = len(decomposition.tail)
                    coeff = sign * decomposition.weight
                else:
                    term = self.a_tilde(decomposition.head.r, decomposition.head.e)
                    if term.is_zero():
                        continue
                    parts = len(decomposition.tail) + 1
                    coeff = sign * (-1) ** (parts - 1) * decomposition.weight

                for charge in decomposition.tail:
                    term = term * self.__weighted(charge, cache)

                if isinstance(term, RationalFn):
                    rational = rational + term * coeff
                else:
                    polynomial = polynomial + term * coeff

        value = self.__divide(gamma, polynomial, rational, bracket)

        logging.debug("[PYHIGGS: WALLCROSS] Performance [higgs_tilde (g: {} - p: {} - r: {} - e: {} - mode: {})]: ({:.3f}s)".format(
            c.g, c.p, gamma.r, gamma.e, self._mode, time.time() - ts))

        return value

    def __divide(self, gamma, polynomial, rational, bracket):

        if rational.is_zero():
            try:
                value = RationalFn.lift(exact_div(polynomial, bracket))
            except InexactDivisionException:
                value = ratfn_reduce(polynomial, bracket)
        else:
            value = (rational + polynomial) / bracket

        if gcd(gamma.r, gamma.e) == 1 and not value.is_polynomial():
            raise NonIntegralException('Invariant of coprime charge {} has denominator {}'.format(gamma, value.den))

        return value
