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

from ..common import refinement_vars, MODE_Y
from .laurent import LaurentPoly

def qint(n, mode=MODE_Y):
    """
    Returns the quantum integer [n] as a Laurent polynomial.

    In y mode [n] = (y^n - y^-n) / (y - y^-1).  In uv mode the variable y is
    replaced by the monomial a*b, where a and b are the square roots of u and v.

    Parameters
    ----------
    n : int
        Any integer; [-n] = -[n] and [0] = 0.
    mode : str
        'y' or 'uv'.
    """

    vars = refinement_vars(mode)
    sign = 1 if n > 0 else -1
    n = abs(n)

    terms = {}
    for j in range(n):
        e = n - 1 - 2 * j
        terms[(e,) * len(vars)] = sign

    return LaurentPoly(vars, terms)
