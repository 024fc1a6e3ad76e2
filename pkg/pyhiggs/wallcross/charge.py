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

from ..common import check_mode

from collections import namedtuple
from dataclasses import dataclass
from fractions import Fraction

@dataclass(frozen=True, order=True)
class Charge:
    """
    Numerical invariants (r, e) of a sheaf: rank r >= 1 and degree e.
    """

    r: int
    e: int

    def __post_init__(self):

        if self.r < 1:
            raise ValueError('The rank of a charge must be >= 1, got {}'.format(self.r))

    @property
    def slope(self):

        return Fraction(self.e, self.r)

    def dual(self, g):
        """(r, -e + 2r(g - 1))"""

        return Charge(self.r, -self.e + 2 * self.r * (g - 1))

    def __add__(self, other):

        return Charge(self.r + other.r, self.e + other.e)

    def __str__(self):

        return '({}, {})'.format(self.r, self.e)

class InvariantKey(namedtuple('InvariantKey', ['g', 'p', 'r', 'e', 'mode'])):

    __slots__ = ()

    def to_json(self):

        return dict(self._asdict())

    @classmethod
    def from_json(cls, data):

        return cls(int(data['g']), int(data['p']), int(data['r']), int(data['e']), check_mode(data['mode']))

def normalize_charge(c, gamma):
    """
    Returns the representative (r, e') with e' = e mod r and 0 <= e' < r.

    A representative with e' = r(g - 1) would make the bracket [e' - r(g - 1)]
    vanish; it is shifted once more by r.  For g >= 2 this never happens.

    Returns
    -------
    tuple
        (Charge, provenance note)
    """

    r, e = gamma.r, gamma.e
    target = e % r
    if target == r * (c.g - 1):
        target += r

    shifts = (e - target) // r
    if shifts:
        note = 'shifted by {} x {} from degree {}'.format(-shifts, r, e)
    else:
        note = 'canonical'

    return Charge(r, target), note
