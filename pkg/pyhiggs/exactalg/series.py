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

from ..common import NonExpandableException, InsufficientOrderException
from .laurent import LaurentPoly, is_scalar
from .ratfn import RationalFn

from fractions import Fraction
from math import comb

class TruncatedSeries:
    """
    Power series in one distinguished variable, known exactly up to and
    including the exponent `order`.

    Coefficients are LaurentPolys or RationalFns in the remaining variables.
    """

    __slots__ = ('_var', '_coeff_vars', '_order', '_coeffs')

    def __init__(self, var, coeff_vars, order, coeffs=None):

        self._var = var
        self._coeff_vars = tuple(coeff_vars)
        self._order = order
        self._coeffs = {n: c for n, c in (coeffs or {}).items() if n <= order and not c.is_zero()}

########################
#### PUBLIC METHODS ####
########################
    @property
    def var(self):

        return self._var

    @property
    def coeff_vars(self):

        return self._coeff_vars

    @property
    def order(self):

        return self._order

    @property
    def valuation(self):

        return min(self._coeffs) if self._coeffs else None

    def items(self):

        return sorted(self._coeffs.items())

    def coefficient(self, n):
        """
        Returns the coefficient of var**n.

        Raises
        ------
        pyhiggs.common.InsufficientOrderException
            n exceeds the truncation order.
        """

        if n > self._order:
            raise InsufficientOrderException('Coefficient {} requested from a series known up to {}'.format(n, self._order))

        return self._coeffs.get(n, LaurentPoly.zero(self._coeff_vars))

    def truncate(self, order):

        return TruncatedSeries(self._var, self._coeff_vars, min(order, self._order), self._coeffs)

    def shift(self, n):

        return TruncatedSeries(self._var, self._coeff_vars, self._order + n,
            {k + n: c for k, c in self._coeffs.items()})

    def map_coefficients(self, fn):

        return TruncatedSeries(self._var, self._coeff_vars, self._order,
            {n: fn(c) for n, c in self._coeffs.items()})

    def __add__(self, other):

        if not isinstance(other, TruncatedSeries):
            return NotImplemented

        order = min(self._order, other.order)
        coeffs = dict(self._coeffs)
        for n, c in other._coeffs.items():
            coeffs[n] = coeffs[n] + c if n in coeffs else c

        return TruncatedSeries(self._var, self._coeff_vars, order, coeffs)

    def __neg__(self):

        return self.map_coefficients(lambda c: -c)

    def __sub__(self, other):

        if not isinstance(other, TruncatedSeries):
            return NotImplemented

        return self + (-other)

    def __mul__(self, other):

        if is_scalar(other) or isinstance(other, (LaurentPoly, RationalFn)):
            return self.map_coefficients(lambda c: c * other)

        if not isinstance(other, TruncatedSeries):
            return NotImplemented

        if not self._coeffs or not other._coeffs:
            return TruncatedSeries(self._var, self._coeff_vars, min(self._order, other.order))

        order = min(self._order + other.valuation, other.order + self.valuation)
        coeffs = {}
        for n1, c1 in self._coeffs.items():
            for n2, c2 in other._coeffs.items():
                n = n1 + n2
                if n <= order:
                    coeffs[n] = coeffs[n] + c1 * c2 if n in coeffs else c1 * c2

        return TruncatedSeries(self._var, self._coeff_vars, order, coeffs)

    __rmul__ = __mul__

    def __str__(self):

        return ' + '.join('({})*{}^{}'.format(c, self._var, n) for n, c in self.items()) + \
            ' + O({}^{})'.format(self._var, self._order + 1)

def series_from_laurent(poly, var, order):

    return TruncatedSeries(var, _rest(poly.vars, var), order, poly.collect(var))

def series_expand(f, var, order):
    """
    Expands a FactoredExpr as a power series in one of its variables.

    Parameters
    ----------
    f : FactoredExpr
        The expression to expand.
    var : str
        The expansion variable.
    order : int
        The largest exponent of var that is computed.

    Raises
    ------
    pyhiggs.common.NonExpandableException
        An inverted factor has nonpositive degree in var.

    Returns
    -------
    TruncatedSeries
        Coefficients are LaurentPolys in the remaining variables.
    """

    vars = f.vars
    i = vars.index(var)
    rest = _rest(vars, var)

    def split(exps):
        return exps[i], exps[:i] + exps[i + 1:]

    for c, m, k in f.factors:
        if k < 0 and m[i] <= 0:
            raise NonExpandableException('Factor (1 - {}*{}) has degree {} in {}'.format(c, m, m[i], var))

    v0, pre = split(f.prefactor)

    finite_negative = [(c, m, k) for c, m, k in f.factors if k > 0 and m[i] < 0]
    others = [(c, m, k) for c, m, k in f.factors if not (k > 0 and m[i] < 0)]
    slack = sum(k * -m[i] for _, m, k in finite_negative)
    work = order - v0 + slack

    coeffs = {0: LaurentPoly.monomial(rest, pre, f.scalar)} if work >= 0 else {}

    for c, m, k in others + finite_negative:
        if not coeffs:
            break

        d, rest_exps = split(m)
        if k > 0:
            coeffs = _multiply_binomial(coeffs, rest, c, d, rest_exps, k, work)
        else:
            for _ in range(-k):
                coeffs = _divide_geometric(coeffs, c, d, rest_exps, work)

    final = {n + v0: p for n, p in coeffs.items() if n + v0 <= order}

    return TruncatedSeries(var, rest, order, final)

def taylor_at_one(f, var='q', order=0, pole_order=0):
    """
    Expands a RationalFn around var = 1 in the local coordinate eps = var - 1.

    Parameters
    ----------
    f : RationalFn
        The function to expand.
    var : str
        The variable that is set to 1 + eps.
    order : int
        The largest eps exponent that is computed.
    pole_order : int
        Upper bound for the pole order at eps = 0 announced by the caller.

    Raises
    ------
    pyhiggs.common.InsufficientOrderException
        The denominator vanishes at var = 1 to an order above pole_order.

    Returns
    -------
    TruncatedSeries
        A series in 'eps' with RationalFn coefficients, starting at eps**(-v)
        where v is the actual pole order.  Callers check that the negative
        coefficients vanish when they expect a regular value.
    """

    f = RationalFn.lift(f)
    vars = f.vars
    i = vars.index(var)
    rest = _rest(vars, var)

    shift = -min(f.num.min_exponents()[i], f.den.min_exponents()[i], 0)
    exps = tuple(shift if k == i else 0 for k in range(len(vars)))
    num = f.num.shift(exps)
    den = f.den.shift(exps)

    top = order + pole_order
    a = _expand_at_one(num, i, rest, top)
    d = _expand_at_one(den, i, rest, top + pole_order)

    nonzero = [j for j in sorted(d) if not d[j].is_zero()]
    if not nonzero or nonzero[0] > pole_order:
        raise InsufficientOrderException('Denominator of {} vanishes at {}=1 beyond order {}'.format(f, var, pole_order))

    v = nonzero[0]
    zero = LaurentPoly.zero(rest)
    lead = RationalFn.lift(d[v]).inverse()

    quotient = []
    for n in range(0, order + v + 1):
        acc = RationalFn.lift(a.get(n, zero))
        for j in range(1, n + 1):
            dj = d.get(j + v)
            if dj is not None and not dj.is_zero():
                acc = acc - quotient[n - j] * dj
        quotient.append(acc * lead)

    return TruncatedSeries('eps', rest, order, {n - v: q for n, q in enumerate(quotient)})

def series_log1p(s):
    """
    log(1 + s) for a series with positive valuation, truncated at the order of s.
    """

    if s.valuation is not None and s.valuation < 1:
        raise ValueError('log(1 + s) needs a series with positive valuation')

    result = TruncatedSeries(s.var, s.coeff_vars, s.order)
    power = s
    n = 1
    while power.valuation is not None and power.valuation <= s.order:
        result = result + power * Fraction((-1) ** (n + 1), n)
        power = (power * s).truncate(s.order)
        n += 1

    return result

def _rest(vars, var):

    i = vars.index(var)
    return vars[:i] + vars[i + 1:]

def _multiply_binomial(coeffs, rest, c, d, rest_exps, k, work):

    # (1 - c t^d M)^k = sum_j C(k, j) (-c)^j t^(d j) M^j
    binomial = []
    for j in range(k + 1):
        b = comb(k, j) * Fraction(-c) ** j
        binomial.append((d * j, b, tuple(j * e for e in rest_exps)))

    out = {}
    for n, p in coeffs.items():
        for shift, b, exps in binomial:
            target = n + shift
            if target > work:
                continue
            term = p.mul_monomial(b, exps)
            out[target] = out[target] + term if target in out else term

    return {n: p for n, p in out.items() if not p.is_zero()}

def _divide_geometric(coeffs, c, d, rest_exps, work):

    # g / (1 - c t^d M): out[n] = coeffs[n] + c M out[n - d]
    out = {}
    for n in range(min(coeffs), work + 1):
        value = coeffs.get(n)
        previous = out.get(n - d)
        if previous is not None:
            term = previous.mul_monomial(c, rest_exps)
            value = term if value is None else value + term
        if value is not None and not value.is_zero():
            out[n] = value

    return out

def _expand_at_one(poly, i, rest, top):

    # q^m = (1 + eps)^m for m >= 0
    out = {}
    for exps, c in poly.terms.items():
        m = exps[i]
        monomial = exps[:i] + exps[i + 1:]
        for j in range(0, min(m, top) + 1):
            term = LaurentPoly.monomial(rest, monomial, comb(m, j) * c)
            out[j] = out[j] + term if j in out else term

    return out
