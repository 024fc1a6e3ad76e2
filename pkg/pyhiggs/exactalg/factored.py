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

from ..common import check_varset
from .laurent import LaurentPoly, clean_coefficient
from .ratfn import ratfn_reduce

from fractions import Fraction

class FactoredExpr:
    """
    scalar * monomial(prefactor) * prod (1 - c * monomial(m)) ** k

    Factors are stored as (c, m, k) with c a nonzero rational (always +1 or -1
    for the expressions built in this package), m a nonzero exponent vector and
    k a nonzero integer.
    """

    __slots__ = ('_vars', '_scalar', '_prefactor', '_factors')

    def __init__(self, vars, scalar=1, prefactor=None, factors=()):

        self._vars = check_varset(vars)
        self._scalar = clean_coefficient(scalar)
        if not self._scalar:
            raise ValueError('A factored expression cannot have a zero scalar')

        self._prefactor = tuple(prefactor) if prefactor is not None else (0,) * len(self._vars)
        if len(self._prefactor) != len(self._vars):
            raise ValueError('Prefactor {} does not match variables {}'.format(self._prefactor, self._vars))

        checked = []
        for c, m, k in factors:
            m = tuple(m)
            if len(m) != len(self._vars):
                raise ValueError('Factor monomial {} does not match variables {}'.format(m, self._vars))
            if not any(m):
                raise ValueError('Factor monomial must not be constant')
            if not c:
                raise ValueError('Factor coefficient must not be zero')
            if k:
                checked.append((clean_coefficient(c), m, int(k)))

        self._factors = tuple(checked)

    @classmethod
    def one(cls, vars):

        return cls(vars)

    @classmethod
    def monomial(cls, vars, exps, scalar=1):

        return cls(vars, scalar, exps)

########################
#### PUBLIC METHODS ####
########################
    @property
    def vars(self):

        return self._vars

    @property
    def scalar(self):

        return self._scalar

    @property
    def sign(self):

        return 1 if self._scalar > 0 else -1

    @property
    def prefactor(self):

        return self._prefactor

    @property
    def factors(self):

        return self._factors

    def multiplicity(self):
        """
        Returns the sum of the absolute multiplicities of all factors.
        """

        return sum(abs(k) for _, _, k in self._factors)

    def expand(self):
        """
        Multiplies everything out and returns the canonical RationalFn.
        """

        num = LaurentPoly.monomial(self._vars, self._prefactor, self._scalar)
        den = LaurentPoly.one(self._vars)
        zero = (0,) * len(self._vars)

        for c, m, k in self._factors:
            base = LaurentPoly(self._vars, {zero: 1, m: -c})
            if k > 0:
                num = num * base ** k
            else:
                den = den * base ** (-k)

        return ratfn_reduce(num, den)

    to_ratfn = expand

    def substitute(self, sub):
        """
        Applies a monomial substitution factor by factor.

        Raises
        ------
        ValueError
            Some factor becomes constant, which the factored shape cannot hold.
        """

        if sub.source_vars != self._vars:
            raise ValueError('Substitution expects {} but the expression uses {}'.format(sub.source_vars, self._vars))

        c0, prefactor = sub.monomial(self._prefactor)
        factors = []
        for c, m, k in self._factors:
            cm, image = sub.monomial(m)
            if not any(image):
                raise ValueError('Factor {} becomes constant under the substitution'.format(m))
            factors.append((c * cm, image, k))

        return FactoredExpr(sub.target_vars, self._scalar * c0, prefactor, factors)

    def normalized(self):
        """
        Rewrites every factor with a lexicographically positive monomial,
        merges equal factors and sorts them.
        """

        scalar = Fraction(self._scalar)
        prefactor = list(self._prefactor)
        merged = {}

        for c, m, k in self._factors:
            if next(e for e in m if e) < 0:
                # (1 - c m) = -c m (1 - m^-1 / c)
                scalar *= Fraction(-c) ** k
                prefactor = [p + k * e for p, e in zip(prefactor, m)]
                c, m = Fraction(1) / Fraction(c), tuple(-e for e in m)

            key = (m, clean_coefficient(Fraction(c)))
            merged[key] = merged.get(key, 0) + k

        factors = [(c, m, k) for (m, c), k in sorted(merged.items()) if k]
        return FactoredExpr(self._vars, scalar, prefactor, factors)

    def equals(self, other):
        """
        Compares two factored expressions as rational functions, trying the
        structural comparison of the normalized forms first.
        """

        if self._vars != other.vars:
            return False

        a = self.normalized()
        b = other.normalized()
        if (a.scalar, a.prefactor, a.factors) == (b.scalar, b.prefactor, b.factors):
            return True

        return self.expand() == other.expand()

    def inverse(self):

        return FactoredExpr(self._vars, Fraction(1) / Fraction(self._scalar),
            tuple(-e for e in self._prefactor), [(c, m, -k) for c, m, k in self._factors])

    def __mul__(self, other):

        if not isinstance(other, FactoredExpr):
            return NotImplemented

        if other.vars != self._vars:
            raise ValueError('Variable mismatch: {} and {}'.format(self._vars, other.vars))

        return FactoredExpr(self._vars, self._scalar * other.scalar,
            tuple(a + b for a, b in zip(self._prefactor, other.prefactor)),
            self._factors + other.factors)

    def __truediv__(self, other):

        if not isinstance(other, FactoredExpr):
            return NotImplemented

        return self * other.inverse()

    def __pow__(self, n):

        if not isinstance(n, int):
            return NotImplemented

        return FactoredExpr(self._vars, Fraction(self._scalar) ** n,
            tuple(n * e for e in self._prefactor), [(c, m, n * k) for c, m, k in self._factors])

    def __eq__(self, other):

        if not isinstance(other, FactoredExpr):
            return NotImplemented

        return self.equals(other)

    __hash__ = None

    def __str__(self):

        def monomial(exps):
            return '*'.join(name if e == 1 else '{}^{}'.format(name, e) for name, e in zip(self._vars, exps) if e) or '1'

        parts = [str(self._scalar), monomial(self._prefactor)]
        for c, m, k in self._factors:
            inner = '1 - {}'.format(monomial(m)) if c == 1 else '1 - ({})*{}'.format(c, monomial(m))
            parts.append('({})^{}'.format(inner, k))

        return ' * '.join(parts)

    def __repr__(self):

        return 'FactoredExpr({})'.format(str(self))
