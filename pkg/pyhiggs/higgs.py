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

from .asymptotic import CurveData, AsymptoticInvariants
from .common import DegenerateBracketException, check_mode, frame_from_records, MODE_Y
from .gauge import Gauge
from .refine import Refinement
from .wallcross import WallCrossing, InvariantTable, normalize_charge, Charge

class Higgs:

    def __init__(self, g, p, mode=MODE_Y, table=None):
        """
        Class constructor

        Parameters
        ----------
        g : int
            The genus of the curve, g >= 2.
        p : int
            The degree of the first coefficient line bundle, p >= 0.  The
            second one has degree 2 - 2g - p.
        mode : str, optional
            'y' for the refined invariants, 'uv' for the doubly refined ones.
        table : InvariantTable, optional
            Memo table shared with other instances, e.g. one loaded from a cache file.

        Raises
        ------
        pyhiggs.common.CurveNotSupportedException
            g < 2 or p < 0.
        """

        self.curve = CurveData(g, p)
        self.mode = check_mode(mode)
        self.table = table if table is not None else InvariantTable()

        self.asymptotic = AsymptoticInvariants(
            curve=self.curve,
            mode=self.mode)

        self.wallcross = WallCrossing(
            curve=self.curve,
            mode=self.mode,
            table=self.table,
            asymptotic=self.asymptotic)

        self.refine = Refinement(
            wallcross=self.wallcross)

        self.gauge = Gauge(
            curve=self.curve,
            mode=self.mode)

########################
#### PUBLIC METHODS ####
########################
    def higgs_tilde(self, r, e):

        return self.wallcross.higgs_tilde(r, e)

    def higgs(self, r, e):

        return self.refine.higgs(r, e)

    def hbar(self, r, e):

        return self.refine.multicover_invert(r, e)

    def poincare(self, r, e):

        return self.refine.poincare(r, e)

    def hodge(self, r, e):

        return self.refine.hodge(r, e)

    def asymptotic_table(self, r, e_max):
        """
        Returns the asymptotic invariants of rank r for c(r) <= e <= e_max.

        Returns
        -------
        pandas.DataFrame
            Columns e and value; empty when e_max < c(r).
        """

        records = []
        for e in range(self.curve.lower_degree_bound(r), e_max + 1):
            records.append({'e': e, 'value': self.asymptotic.invariant(r, e)})

        return frame_from_records(records, ['e', 'value'])

    def parity_table(self, r):
        """
        Evaluates the recursion at every degree 0 <= e < 2r and compares it
        with the value of the normalized charge.

        Returns
        -------
        pandas.DataFrame
            Columns e, representative, value and matches.  value and matches
            are None where the bracket [e - r(g - 1)] vanishes.
        """

        records = []
        for e in range(2 * r):
            representative, _ = normalize_charge(self.curve, Charge(r, e))
            try:
                value = self.wallcross.higgs_tilde(r, e, normalize=False)
                matches = value == self.wallcross.higgs_tilde(r, e)
            except DegenerateBracketException:
                value, matches = None, None

            records.append({'e': e, 'representative': representative.e, 'value': value, 'matches': matches})

        return frame_from_records(records, ['e', 'representative', 'value', 'matches'])
