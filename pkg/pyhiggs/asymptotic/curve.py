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

from ..common import CurveNotSupportedException

from dataclasses import dataclass

@dataclass(frozen=True)
class CurveData:
    """
    Genus g >= 2 of the curve and degree p >= 0 of the first coefficient line
    bundle.  The second one has degree 2 - 2g - p.
    """

    g: int
    p: int

    def __post_init__(self):

        if not isinstance(self.g, int) or self.g < 2:
            raise CurveNotSupportedException('Curve not supported.  The genus must be an integer >= 2, got {}.'.format(self.g))

        if not isinstance(self.p, int) or self.p < 0:
            raise CurveNotSupportedException('Curve not supported.  The degree p must be an integer >= 0, got {}.'.format(self.p))

    @property
    def slope_scale(self):
        """2g - 2 + p"""

        return 2 * self.g - 2 + self.p

    def lower_degree_bound(self, r):
        """c(r) = -r(r - 1)(2g - 2 + p)"""

        return -r * (r - 1) * self.slope_scale

    def slope_floor(self, r):
        """mu_0(r) = -(r - 1)(2g - 2 + p)"""

        return -(r - 1) * self.slope_scale
