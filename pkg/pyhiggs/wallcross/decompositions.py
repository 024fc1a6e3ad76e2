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

from .charge import Charge

from collections import Counter, namedtuple
from fractions import Fraction
from functools import lru_cache
from math import ceil, factorial, floor

STRICT = 'strict'
NONSTRICT = 'nonstrict'
EQUAL = 'equal'

Decomposition = namedtuple('Decomposition', ['head', 'tail', 'weight'])

def decompositions(target, strictness, mu_floor, degree_floor=None):
    """
    Enumerates the charge decompositions entering one sum of the recursion.

    Parameters
    ----------
    target : Charge
        The charge that is decomposed.
    strictness : str
        'strict' : head + tail with every tail slope > slope(target),
        'nonstrict' : head + tail with every tail slope >= slope(target),
        'equal' : at least two parts, all of slope(target).
    mu_floor : Fraction or int
        Slope floor; the head degree satisfies e1 >= r1 * mu_floor, and no
        decomposition exists when slope(target) < mu_floor.
    degree_floor : callable, optional
        degree_floor(r1) is a further lower bound for the head degree, below
        which the head's asymptotic invariant vanishes.

    Returns
    -------
    generator of Decomposition
        head is None in 'equal' mode.  tail is a sorted tuple of Charges and
        weight is 1 / prod(mult!) over repeated charges.
    """

    if strictness == EQUAL:
        yield from _equal(target)
        return

    if strictness not in (STRICT, NONSTRICT):
        raise ValueError('Unknown strictness {}'.format(strictness))

    mu = target.slope
    if mu < mu_floor:
        return

    strict = strictness == STRICT
    for r1 in range(1, target.r):
        e1_floor = ceil(Fraction(r1) * Fraction(mu_floor))
        if degree_floor is not None:
            e1_floor = max(e1_floor, degree_floor(r1))

        budget = target.e - e1_floor
        for tail in _tails(target.r - r1, mu, strict, budget, 1, None):
            head = Charge(r1, target.e - sum(e for _, e in tail))
            charges = tuple(Charge(r, e) for r, e in tail)
            yield Decomposition(head, charges, _weight(charges))

def _minimal_degree(r, mu, strict):

    return floor(mu * r) + 1 if strict else ceil(mu * r)

@lru_cache(maxsize=None)
def _minimal_sum(rank, mu, strict):

    if rank == 0:
        return 0

    return min(_minimal_degree(r, mu, strict) + _minimal_sum(rank - r, mu, strict) for r in range(1, rank + 1))

def _tails(rank, mu, strict, budget, start_r, start_e):

    if rank == 0:
        yield ()
        return

    for r in range(start_r, rank + 1):
        lowest = _minimal_degree(r, mu, strict)
        if r == start_r and start_e is not None:
            lowest = max(lowest, start_e)

        highest = budget - _minimal_sum(rank - r, mu, strict)
        for e in range(lowest, highest + 1):
            for rest in _tails(rank - r, mu, strict, budget - e, r, e):
                yield ((r, e),) + rest

def _equal(target):

    mu = target.slope
    for ranks in _rank_partitions(target.r, target.r):
        if len(ranks) < 2:
            continue
        if any((mu * r).denominator != 1 for r in ranks):
            continue

        charges = tuple(sorted(Charge(r, int(mu * r)) for r in ranks))
        yield Decomposition(None, charges, _weight(charges))

def _rank_partitions(n, largest):

    if n == 0:
        yield ()
        return

    for first in range(min(n, largest), 0, -1):
        for rest in _rank_partitions(n - first, first):
            yield (first,) + rest

def _weight(charges):

    weight = Fraction(1)
    for mult in Counter(charges).values():
        weight /= factorial(mult)

    return weight
