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

from ..common import FixtureFormatException, refinement_vars, check_mode, MODE_Y
from ..exactalg import LaurentPoly, ratfn_reduce

from collections import namedtuple
from fractions import Fraction

import os
import re
import tokenize

import sympy as sp
from sympy.parsing.sympy_parser import parse_expr, standard_transformations, implicit_multiplication, convert_xor

TRANSFORMATIONS = standard_transformations + (implicit_multiplication, convert_xor)
SYMBOLS = {name: sp.Symbol(name) for name in ('y', 'u', 'v', 'a', 'b')}
GRAMMAR = re.compile(r'^[0-9yuvab+\-*/^()\s]*$')
HEADER = re.compile(r'^g=(\d+)\s+p=(\d+)\s+r=(\d+)\s+e=(-?\d+)\s+mode=(\w+)$')
DIGIT_NAME = re.compile(r"(\d)([yuvab])")

DEFAULT_PATH = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'fixtures', 'tables.txt')

FixtureCase = namedtuple('FixtureCase', ['g', 'p', 'r', 'e', 'mode', 'value', 'line'])

def parse_fixture_expression(text, mode=MODE_Y):
    """
    Parses an expression of the fixture grammar into a canonical RationalFn.

    The grammar has integers, the variables y, u, v, a, b, the operators
    + - * / ^, parentheses, and juxtaposition for multiplication.  In uv mode
    u and v are read as a^2 and b^2.

    Raises
    ------
    pyhiggs.common.FixtureFormatException
        The text is not a valid expression or uses variables foreign to the mode.
    """

    if not GRAMMAR.match(text):
        raise FixtureFormatException('Unexpected characters in {!r}'.format(text))

    # 2y is read as 2 y
    text = DIGIT_NAME.sub(r"\1 \2", text)

    try:
        expr = parse_expr(text, local_dict=dict(SYMBOLS), transformations=TRANSFORMATIONS, evaluate=True)
    except (SyntaxError, TypeError, tokenize.TokenError, sp.SympifyError) as ex:
        raise FixtureFormatException('Cannot parse {!r}: {}'.format(text, ex))

    vars = refinement_vars(check_mode(mode))
    if mode != MODE_Y:
        expr = expr.subs({SYMBOLS['u']: SYMBOLS['a'] ** 2, SYMBOLS['v']: SYMBOLS['b'] ** 2})

    gens = [SYMBOLS[name] for name in vars]
    foreign = expr.free_symbols - set(gens)
    if foreign:
        raise FixtureFormatException('Variables {} are not allowed in mode {}'.format(
            ', '.join(sorted(str(s) for s in foreign)), mode))

    num, den = sp.fraction(sp.together(expr))

    return ratfn_reduce(_to_laurent(num, gens, vars), _to_laurent(den, gens, vars))

def load_fixtures(path=None):
    """
    Reads a fixture file.  Blank lines and lines starting with '#' are skipped.

    Parameters
    ----------
    path : str, optional
        Defaults to the tables shipped with the package.

    Raises
    ------
    pyhiggs.common.FixtureFormatException
        A line does not follow the format; the message carries the line number.

    Returns
    -------
    list of FixtureCase
    """

    path = path or DEFAULT_PATH

    cases = []
    with open(path, 'r', encoding='utf-8') as f:
        for number, line in enumerate(f, start=1):
            line = line.strip()
            if not line or line.startswith('#'):
                continue

            header, sep, body = line.partition(':')
            match = HEADER.match(header.strip())
            if not sep or not match:
                raise FixtureFormatException('{}:{}: expected "g=.. p=.. r=.. e=.. mode=.. : <expression>"'.format(path, number))

            g, p, r, e = [int(x) for x in match.groups()[:4]]
            mode = match.group(5)
            if mode not in ('y', 'uv'):
                raise FixtureFormatException('{}:{}: unknown mode {}'.format(path, number, mode))

            try:
                value = parse_fixture_expression(body.strip(), mode)
            except FixtureFormatException as ex:
                raise FixtureFormatException('{}:{}: {}'.format(path, number, ex))

            cases.append(FixtureCase(g, p, r, e, mode, value, number))

    return cases

def _to_laurent(expr, gens, vars):

    terms = {}
    for exps, c in sp.Poly(expr, *gens, domain='QQ').terms():
        terms[tuple(int(x) for x in exps)] = Fraction(str(c))

    return LaurentPoly(vars, terms)
