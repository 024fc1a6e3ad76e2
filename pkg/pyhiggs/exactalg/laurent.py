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

from ..common import check_varset, DivisionByZeroException

from fractions import Fraction
from types import MappingProxyType
from math import comb

def clean_coefficient(c):
    """
    Returns c as an int when integral, otherwise as a reduced Fraction.
    """

    if isinstance(c, bool):
        raise TypeError('Boolean coefficients are not supported')

    if isinstance(c, int):
        return c

    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c

    raise TypeError('Unsupported coefficient type: {}'.format(type(c).__name__))

def is_scalar(value):

    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)

class Substitution:
    """
    Simultaneous monomial substitution between two VarSets.

    Every source variable maps to coeff * prod(target ** power).  Powers may be
    fractions as long as every image of an actual exponent vector is integral.
    Source variables without an explicit image map to the target variable of
    the same name.
    """

    def __init__(self, source_vars, target_vars, images):

        self.source_vars = check_varset(source_vars)
        self.target_vars = check_varset(target_vars)

        self._images = []
        for name in self.source_vars:
            if name in images:
                coeff, powers = images[name]
            elif name in self.target_vars:
                coeff, powers = 1, {name: 1}
            else:
                raise ValueError('Variable {} has no image in {}'.format(name, self.target_vars))

            unknown = [t for t in powers if t not in self.target_vars]
            if unknown:
                raise ValueError('Image of {} uses unknown variables {}'.format(name, unknown))

            if coeff == 0:
                raise ValueError('Image of {} has a zero coefficient'.format(name))

            vector = tuple(Fraction(powers.get(t, 0)) for t in self.target_vars)
            self._images.append((Fraction(coeff), vector))

    def monomial(self, exps):
        """
        Returns (coefficient, exponent vector) of the image of a source monomial.

        Raises
        ------
        ValueError
            The image has a non-integral exponent.
        """

        coeff = Fraction(1)
        target = [Fraction(0)] * len(self.target_vars)

        for e, (c, vector) in zip(exps, self._images):
            if e == 0:
                continue
            coeff *= c ** e
            for i, power in enumerate(vector):
                target[i] += e * power

        if any(t.denominator != 1 for t in target):
            raise ValueError('Substitution produces a fractional exponent for {}'.format(exps))

        return clean_coefficient(coeff), tuple(int(t) for t in target)

class LaurentPoly:

    __slots__ = ('_vars', '_terms', '_hash')

    def __init__(self, vars, terms=None):
        """
        Class constructor.

        Parameters
        ----------
        vars : tuple of str
            The ordered variable names.
        terms : dict, optional
            Map from exponent tuples to int or Fraction coefficients.
            Zero coefficients are dropped.
        """

        self._vars = check_varset(vars)
        self._hash = None

        size = len(self._vars)
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != size:
                raise ValueError('Exponent {} does not match variables {}'.format(exps, self._vars))

            total = clean_coefficient(clean.get(exps, 0) + clean_coefficient(c))
            if total:
                clean[exps] = total
            else:
                clean.pop(exps, None)

        self._terms = clean

    @classmethod
    def _raw(cls, vars, terms):

        poly = cls.__new__(cls)
        poly._vars = vars
        poly._terms = terms
        poly._hash = None

        return poly

    @classmethod
    def zero(cls, vars):

        return cls._raw(check_varset(vars), {})

    @classmethod
    def one(cls, vars):

        return cls.constant(vars, 1)

    @classmethod
    def constant(cls, vars, c):

        vars = check_varset(vars)
        return cls._raw(vars, {(0,) * len(vars): clean_coefficient(c)} if c else {})

    @classmethod
    def monomial(cls, vars, exps, c=1):

        vars = check_varset(vars)
        if len(exps) != len(vars):
            raise ValueError('Exponent {} does not match variables {}'.format(exps, vars))

        return cls._raw(vars, {tuple(exps): clean_coefficient(c)} if c else {})

    @classmethod
    def variable(cls, vars, name, power=1):

        vars = check_varset(vars)
        exps = [0] * len(vars)
        exps[vars.index(name)] = power

        return cls._raw(vars, {tuple(exps): 1})

########################
#### PUBLIC METHODS ####
########################
    @property
    def vars(self):

        return self._vars

    @property
    def terms(self):

        return MappingProxyType(self._terms)

    def is_zero(self):

        return not self._terms

    def is_one(self):

        return self._terms == {(0,) * len(self._vars): 1}

    def is_constant(self):

        return not self._terms or list(self._terms) == [(0,) * len(self._vars)]

    def is_monomial(self):

        return len(self._terms) == 1

    def is_integral(self):

        return all(isinstance(c, int) for c in self._terms.values())

    def constant_value(self):

        if not self.is_constant():
            raise ValueError('{} is not a constant'.format(self))

        return self._terms.get((0,) * len(self._vars), 0)

    def coefficient(self, exps):

        return self._terms.get(tuple(exps), 0)

    def sorted_terms(self):

        return sorted(self._terms.items())

    def min_exponents(self):

        if not self._terms:
            return (0,) * len(self._vars)

        return tuple(min(col) for col in zip(*self._terms))

    def max_exponents(self):

        if not self._terms:
            return (0,) * len(self._vars)

        return tuple(max(col) for col in zip(*self._terms))

    def degree_bounds(self, name):

        i = self._vars.index(name)
        return self.min_exponents()[i], self.max_exponents()[i]

    def shift(self, exps):
        """
        Multiplies by the monomial with the given exponent vector.
        """

        if not any(exps):
            return self

        return self._raw(self._vars, {tuple(a + b for a, b in zip(e, exps)): c for e, c in self._terms.items()})

    def mul_monomial(self, c, exps):

        if not c:
            return self.zero(self._vars)

        c = clean_coefficient(c)
        return self._raw(self._vars, {
            tuple(a + b for a, b in zip(e, exps)): clean_coefficient(v * c) for e, v in self._terms.items()})

    def scale(self, c):

        return self.mul_monomial(c, (0,) * len(self._vars))

    def collect(self, name):
        """
        Splits the polynomial by powers of one variable.

        Returns
        -------
        dict
            Map from the exponent of `name` to a LaurentPoly in the remaining variables.
        """

        i = self._vars.index(name)
        rest = self._vars[:i] + self._vars[i + 1:]

        groups = {}
        for exps, c in self._terms.items():
            groups.setdefault(exps[i], {})[exps[:i] + exps[i + 1:]] = c

        return {n: self._raw(rest, t) for n, t in groups.items()}

    def substitute(self, sub):
        """
        Applies a monomial substitution and returns a LaurentPoly over its target VarSet.
        """

        if sub.source_vars != self._vars:
            raise ValueError('Substitution expects {} but the polynomial uses {}'.format(sub.source_vars, self._vars))

        acc = {}
        for exps, c in self._terms.items():
            k, target = sub.monomial(exps)
            acc[target] = acc.get(target, 0) + c * k

        return LaurentPoly(sub.target_vars, acc)

    def lift(self, vars):
        """
        Embeds the polynomial into a larger VarSet containing all of its variables.
        """

        vars = check_varset(vars)
        if vars == self._vars:
            return self

        positions = [vars.index(name) for name in self._vars]
        terms = {}
        for exps, c in self._terms.items():
            target = [0] * len(vars)
            for pos, e in zip(positions, exps):
                target[pos] = e
            terms[tuple(target)] = c

        return self._raw(vars, terms)

    def to_json(self):

        terms = []
        for exps, c in self.sorted_terms():
            c = Fraction(c)
            terms.append({'exp': list(exps), 'num': str(c.numerator), 'den': str(c.denominator)})

        return {'vars': list(self._vars), 'terms': terms}

    @classmethod
    def from_json(cls, data):

        terms = {tuple(t['exp']): Fraction(int(t['num']), int(t['den'])) for t in data['terms']}
        return cls(tuple(data['vars']), terms)

############################
#### ARITHMETIC METHODS ####
############################
    def __coerce(self, other):

        if isinstance(other, LaurentPoly):
            if other._vars != self._vars:
                raise ValueError('Variable mismatch: {} and {}'.format(self._vars, other._vars))
            return other

        if is_scalar(other):
            return self.constant(self._vars, other)

        return None

    def __add__(self, other):

        other = self.__coerce(other)
        if other is None:
            return NotImplemented

        terms = dict(self._terms)
        for exps, c in other._terms.items():
            total = terms.get(exps, 0) + c
            if total:
                terms[exps] = clean_coefficient(total)
            else:
                terms.pop(exps, None)

        return self._raw(self._vars, terms)

    __radd__ = __add__

    def __neg__(self):

        return self._raw(self._vars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):

        other = self.__coerce(other)
        if other is None:
            return NotImplemented

        return self + (-other)

    def __rsub__(self, other):

        other = self.__coerce(other)
        if other is None:
            return NotImplemented

        return other + (-self)

    def __mul__(self, other):

        if is_scalar(other):
            return self.scale(other)

        other = self.__coerce(other)
        if other is None:
            return NotImplemented

        if len(other._terms) == 1:
            (exps, c), = other._terms.items()
            return self.mul_monomial(c, exps)

        if len(self._terms) == 1:
            (exps, c), = self._terms.items()
            return other.mul_monomial(c, exps)

        terms = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2

        return self._raw(self._vars, {e: clean_coefficient(c) for e, c in terms.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):

        if is_scalar(other):
            if not other:
                raise DivisionByZeroException('Division of {} by zero'.format(self))
            return self.scale(Fraction(1) / other)

        return NotImplemented

    def __pow__(self, n):

        if not isinstance(n, int):
            return NotImplemented

        if n < 0:
            if not self.is_monomial():
                raise ValueError('Only monomials have negative powers in a Laurent ring')
            (exps, c), = self._terms.items()
            return self.monomial(self._vars, tuple(e * n for e in exps), Fraction(c) ** n)

        if self.is_monomial():
            (exps, c), = self._terms.items()
            return self.monomial(self._vars, tuple(e * n for e in exps), c ** n)

        # binomial expansion for two-term bases, square-and-multiply otherwise
        if len(self._terms) == 2:
            (e1, c1), (e2, c2) = self._terms.items()
            terms = {}
            for j in range(n + 1):
                e = tuple((n - j) * a + j * b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + comb(n, j) * c1 ** (n - j) * c2 ** j
            return LaurentPoly(self._vars, terms)

        result = self.one(self._vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base

        return result

    def __eq__(self, other):

        if isinstance(other, LaurentPoly):
            return self._vars == other._vars and self._terms == other._terms

        if is_scalar(other):
            return self.is_constant() and self.constant_value() == other

        return NotImplemented

    def __hash__(self):

        if self._hash is None:
            self._hash = hash((self._vars, frozenset(self._terms.items())))

        return self._hash

    def __bool__(self):

        return bool(self._terms)

    def __str__(self):

        if not self._terms:
            return '0'

        out = ''
        for exps, c in self.sorted_terms():
            monomial = '*'.join(
                name if e == 1 else '{}^{}'.format(name, e)
                for name, e in zip(self._vars, exps) if e)

            negative = c < 0
            c = abs(c)
            if not monomial:
                body = str(c)
            elif c == 1:
                body = monomial
            else:
                body = '{}*{}'.format(c, monomial)

            if not out:
                out = '-' + body if negative else body
            else:
                out += ' - ' + body if negative else ' + ' + body

        return out

    def __repr__(self):

        return 'LaurentPoly({}, {})'.format(self._vars, str(self))
