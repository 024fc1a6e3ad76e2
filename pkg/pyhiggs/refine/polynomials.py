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

from ..common import object_matrix, VARS_Y, VARS_UV
from ..exactalg import LaurentPoly

import numpy as np

class PoincarePoly:
    """
    Poincare polynomial b0 + b1 y + ... + b2m y^2m with exact integer coefficients.
    """

    def __init__(self, coeffs):

        coeffs = list(coeffs)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()

        self._coeffs = np.array([int(b) for b in coeffs] or [0], dtype=object)

########################
#### PUBLIC METHODS ####
########################
    @property
    def coeffs(self):

        return self._coeffs.copy()

    @property
    def degree(self):

        return len(self._coeffs) - 1

    @property
    def m(self):
        """Half of the degree."""

        return self.degree // 2

    def betti(self, k):

        return int(self._coeffs[k]) if 0 <= k <= self.degree else 0

    def evaluate(self, y):

        return sum(int(b) * y ** k for k, b in enumerate(self._coeffs))

    def to_laurent(self):

        return LaurentPoly(VARS_Y, {(k,): int(b) for k, b in enumerate(self._coeffs)})

    def to_json(self):

        return [int(b) for b in self._coeffs]

    def __eq__(self, other):

        if not isinstance(other, PoincarePoly):
            return NotImplemented

        return self.to_json() == other.to_json()

    def __str__(self):

        return ' '.join(str(int(b)) for b in self._coeffs)

    def __repr__(self):

        return 'PoincarePoly({})'.format(str(self))

class HodgePoly:
    """
    Hodge polynomial sum h(i, j) u^i v^j with exact integer coefficients.
    """

    def __init__(self, coeffs):

        self._coeffs = {(int(i), int(j)): int(h) for (i, j), h in coeffs.items() if h}

########################
#### PUBLIC METHODS ####
########################
    @property
    def coeffs(self):

        return dict(self._coeffs)

    def hodge_number(self, i, j):

        return self._coeffs.get((i, j), 0)

    def matrix(self):
        """
        Returns the Hodge numbers as a square numpy object array indexed by (i, j).
        """

        size = 1 + max([max(i, j) for i, j in self._coeffs] or [0])
        return object_matrix(size, size, self._coeffs)

    def is_symmetric(self):

        m = self.matrix()
        return bool((m == m.T).all())

    def collapse(self):
        """
        Specializes u = v = y and returns the resulting PoincarePoly.
        """

        degree = max([i + j for i, j in self._coeffs] or [0])
        coeffs = [0] * (degree + 1)
        for (i, j), h in self._coeffs.items():
            coeffs[i + j] += h

        return PoincarePoly(coeffs)

    def to_laurent(self):

        return LaurentPoly(VARS_UV, self._coeffs)

    def to_json(self):

        return [{'i': i, 'j': j, 'h': h} for (i, j), h in sorted(self._coeffs.items())]

    def __eq__(self, other):

        if not isinstance(other, HodgePoly):
            return NotImplemented

        return self._coeffs == other._coeffs

    def __str__(self):

        return str(self.to_laurent())

    def __repr__(self):

        return 'HodgePoly({})'.format(str(self))
