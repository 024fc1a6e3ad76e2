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

from ..common import DivisionByZeroException, InexactDivisionException
from .laurent import LaurentPoly, is_scalar
from .polyring import cofactors, exquo

from fractions import Fraction
from math import gcd, lcm

def exact_div(p, d):
    """
    Exact Laurent polynomial division.

    Parameters
    ----------
    p : LaurentPoly
        The dividend.
    d : LaurentPoly
        The divisor, over the same variables.

    Raises
    ------
    pyhiggs.common.DivisionByZeroException
        d is zero.
    pyhiggs.common.InexactDivisionException
        d does not divide p in the Laurent ring.

    Returns
    -------
    LaurentPoly
        The quotient q with q * d == p.
    """

    if d.is_zero():
        raise DivisionByZeroException('Division of {} by zero'.format(p))

    if p.is_zero():
        return p

    if d.is_monomial():
        (exps, c), = d.terms.items()
        return p.mul_monomial(Fraction(1) / Fraction(c), tuple(-e for e in exps))

    pmin = p.min_exponents()
    dmin = d.min_exponents()
    q = exquo(p.shift(tuple(-e for e in pmin)), d.shift(tuple(-e for e in dmin)))

    return q.shift(tuple(a - b for a, b in zip(pmin, dmin)))

def ratfn_reduce(num, den):
    """
    Returns the canonical RationalFn num / den.

    The denominator of the result has minimal exponent zero in every variable,
    integer coefficients with content one, a positive lexicographically least
    term, and no common polynomial factor with the numerator.

    Raises
    ------
    pyhiggs.common.DivisionByZeroException
        den is zero.
    """

    if den.is_zero():
        raise DivisionByZeroException('Denominator of {} is zero'.format(num))

    if num.is_zero():
        return RationalFn._raw(num, LaurentPoly.one(den.vars))

    if not den.is_monomial():
        num, den = _cancel(num, den)

    return RationalFn._raw(*_normalize_units(num, den))

def _cancel(p, q):
    """
    Divides p and q by their polynomial gcd, keeping the monomial parts apart.
    """

    if p.is_zero() or q.is_monomial() or p.is_monomial():
        return p, q

    pmin = p.min_exponents()
    qmin = q.min_exponents()
    _, cp, cq = cofactors(p.shift(tuple(-e for e in pmin)), q.shift(tuple(-e for e in qmin)))

    return cp.shift(pmin), cq.shift(qmin)

def _normalize_units(num, den):
    """
    Moves the monomial content of den into num and scales den to a primitive
    integer polynomial whose lexicographically least term is positive.
    """

    dmin = den.min_exponents()
    if any(dmin):
        inverse = tuple(-e for e in dmin)
        num = num.shift(inverse)
        den = den.shift(inverse)

    coeffs = [Fraction(c) for _, c in den.sorted_terms()]
    scale = Fraction(lcm(*[c.denominator for c in coeffs]))
    content = gcd(*[int(c * scale) for c in coeffs])
    scale = scale / content
    if coeffs[0] < 0:
        scale = -scale

    if scale != 1:
        num = num.scale(scale)
        den = den.scale(scale)

    return num, den

class RationalFn:
    """
    Canonical quotient of two LaurentPolys.  Instances are built with
    ratfn_reduce or RationalFn.lift, and every arithmetic result is canonical,
    so equality is structural.
    """

    __slots__ = ('_num', '_den')

    @classmethod
    def _raw(cls, num, den):

        f = cls.__new__(cls)
        f._num = num
        f._den = den

        return f

    @classmethod
    def lift(cls, value, vars=None):
        """
        Returns value as a RationalFn.

        Parameters
        ----------
        value : RationalFn, LaurentPoly, int or Fraction
            The value to convert.
        vars : tuple of str, optional
            Required when value is a scalar.
        """

        if isinstance(value, RationalFn):
            return value

        if isinstance(value, LaurentPoly):
            return cls._raw(value, LaurentPoly.one(value.vars))

        if is_scalar(value):
            if vars is None:
                raise ValueError('Scalars need explicit variables')
            return cls._raw(LaurentPoly.constant(vars, value), LaurentPoly.one(vars))

        raise TypeError('Cannot convert {} to a rational function'.format(type(value).__name__))

    @classmethod
    def zero(cls, vars):

        return cls.lift(0, vars)

    @classmethod
    def one(cls, vars):

        return cls.lift(1, vars)

########################
#### PUBLIC METHODS ####
########################
    @property
    def num(self):

        return self._num

    @property
    def den(self):

        return self._den

    @property
    def vars(self):

        return self._num.vars

    def is_zero(self):

        return self._num.is_zero()

    def is_polynomial(self):

        return self._den.is_one()

    def is_integral_polynomial(self):

        return self.is_polynomial() and self._num.is_integral()

    def as_laurent(self):
        """
        Returns the numerator when the denominator is one.

        Raises
        ------
        pyhiggs.common.InexactDivisionException
            The value is not a Laurent polynomial.
        """

        if not self.is_polynomial():
            raise InexactDivisionException('{} is not a Laurent polynomial'.format(self))

        return self._num

    def inverse(self):

        if self._num.is_zero():
            raise DivisionByZeroException('Inverse of zero')

        return RationalFn._raw(*_normalize_units(self._den, self._num))

    def substitute(self, sub):

        return ratfn_reduce(self._num.substitute(sub), self._den.substitute(sub))

    def to_json(self):

        return {'num': self._num.to_json(), 'den': self._den.to_json()}

    @classmethod
    def from_json(cls, data):

        return ratfn_reduce(LaurentPoly.from_json(data['num']), LaurentPoly.from_json(data['den']))

############################
#### ARITHMETIC METHODS ####
############################
    def __coerce(self, other):

        if isinstance(other, RationalFn):
            return other

        if isinstance(other, LaurentPoly) or is_scalar(other):
            return RationalFn.lift(other, self.vars)

        return None

    def __add__(self, other):

        other = self.__coerce(other)
        if other is None:
            return NotImplemented

        if self._den.is_one() and other._den.is_one():
            return RationalFn._raw(self._num + other._num, self._den)

        if other._den.is_one():
            return _add_polynomial(self, other._num)

        if self._den.is_one():
            return _add_polynomial(other, self._num)

        if self._den == other._den:
            return ratfn_reduce(self._num + other._num, self._den)

        common, d1, d2 = cofactors(self._den, other._den)
        return ratfn_reduce(self._num * d2 + other._num * d1, common * d1 * d2)

    __radd__ = __add__

    def __neg__(self):

        return RationalFn._raw(-self._num, self._den)

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
            if not other:
                return RationalFn.zero(self.vars)
            return RationalFn._raw(self._num.scale(other), self._den)

        other = self.__coerce(other)
        if other is None:
            return NotImplemented

        if self.is_zero() or other.is_zero():
            return RationalFn.zero(self.vars)

        n1, d2 = _cancel(self._num, other._den)
        n2, d1 = _cancel(other._num, self._den)

        return RationalFn._raw(*_normalize_units(n1 * n2, d1 * d2))

    __rmul__ = __mul__

    def __truediv__(self, other):

        if is_scalar(other):
            if not other:
                raise DivisionByZeroException('Division of {} by zero'.format(self))
            return RationalFn._raw(self._num.scale(Fraction(1) / other), self._den)

        other = self.__coerce(other)
        if other is None:
            return NotImplemented

        return self * other.inverse()

    def __rtruediv__(self, other):

        other = self.__coerce(other)
        if other is None:
            return NotImplemented

        return other * self.inverse()

    def __pow__(self, n):

        if not isinstance(n, int):
            return NotImplemented

        if n < 0:
            return self.inverse() ** (-n)

        return RationalFn._raw(self._num ** n, self._den ** n)

    def __eq__(self, other):

        other = self.__coerce(other)
        if other is None:
            return NotImplemented

        return self._num == other._num and self._den == other._den

    def __hash__(self):

        return hash((self._num, self._den))

    def __str__(self):

        if self._den.is_one():
            return str(self._num)

        return '({}) / ({})'.format(self._num, self._den)

    def __repr__(self):

        return 'RationalFn({})'.format(str(self))

def _add_polynomial(f, p):

    # gcd(n + p*d, d) = gcd(n, d) = 1, so only a zero numerator needs care
    num = f.num + p * f.den
    if num.is_zero():
        return RationalFn.zero(f.vars)

    return RationalFn._raw(num, f.den)
