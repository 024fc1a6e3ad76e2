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

from .laurent import LaurentPoly, Substitution
from .ratfn import RationalFn
from .factored import FactoredExpr

from fractions import Fraction

def substitute(f, images, target_vars=None):
    """
    Substitutes signed monomials for variables.

    Parameters
    ----------
    f : LaurentPoly, RationalFn or FactoredExpr
        The expression.
    images : dict
        Map from a variable name to (coefficient, {target variable: power}).
    target_vars : tuple of str, optional
        The VarSet of the result.  Defaults to the VarSet of f.

    Returns
    -------
    Same kind as f.  FactoredExprs stay factored.
    """

    sub = Substitution(f.vars, target_vars or f.vars, images)

    if isinstance(f, (LaurentPoly, RationalFn, FactoredExpr)):
        return f.substitute(sub)

    raise TypeError('Cannot substitute into {}'.format(type(f).__name__))

def collapse_uv(f):
    """
    Specializes u = v: the monomial a^i b^j becomes y^((i + j) / 2).

    Every other variable is kept in place; a and b are replaced by y at the
    position of a.

    Raises
    ------
    ValueError
        Some monomial has odd total degree in (a, b).
    """

    vars = f.vars
    if 'a' not in vars or 'b' not in vars:
        raise ValueError('{} has no (a, b) variables to collapse'.format(vars))

    target = tuple('y' if name == 'a' else name for name in vars if name != 'b')
    half = Fraction(1, 2)
    images = {'a': (1, {'y': half}), 'b': (1, {'y': half})}

    return substitute(f, images, target)
