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

variables = [
    {
    'name': 'lam',
    'symbol': 'λ',
    'description': 'Degree-counting variable of the asymptotic generating functions'
    },
    {
    'name': 'y',
    'symbol': 'y',
    'description': 'Refinement (spin) variable'
    },
    {
    'name': 'a',
    'symbol': 'u^1/2',
    'description': 'Square root of the first Hodge variable'
    },
    {
    'name': 'b',
    'symbol': 'v^1/2',
    'description': 'Square root of the second Hodge variable'
    },
    {
    'name': 'q1',
    'symbol': 'e^-ε1',
    'description': 'First equivariant parameter of a fixed-point term'
    },
    {
    'name': 'q2',
    'symbol': 'e^-ε2',
    'description': 'Second equivariant parameter of a fixed-point term'
    },
    {
    'name': 'Qf',
    'symbol': 'e^a12',
    'description': 'Fiber class parameter of a fixed-point term'
    },
    {
    'name': 'q',
    'symbol': 'q',
    'description': 'Deformation variable of the HRV series'
    },
    {
    'name': 'x',
    'symbol': 'x',
    'description': 'First Hodge variable of the HRV series, or symmetric product counter'
    },
    {
    'name': 'u',
    'symbol': 'u',
    'description': 'First Hodge variable'
    },
    {
    'name': 'v',
    'symbol': 'v',
    'description': 'Second Hodge variable'
    },
    {
    'name': 'T',
    'symbol': 'T',
    'description': 'Rank-counting variable of the HRV series'
    },
    {
    'name': 'eps',
    'symbol': 'ε',
    'description': 'Local coordinate q = 1 + ε'
    }
]

# Canonical orderings shared by every expression built in the package
VARS_Y = ('y',)
VARS_AB = ('a', 'b')
VARS_UV = ('u', 'v')
VARS_XY = ('x', 'y')
VARS_LAM_Y = ('lam', 'y')
VARS_LAM_AB = ('lam', 'a', 'b')
VARS_GAUGE = ('q1', 'q2', 'Qf', 'y')
VARS_GAUGE_LIMIT = ('q1', 'q2', 'y')
VARS_HRV = ('q', 'x', 'y')
VARS_SYM = ('x', 'u', 'v')
VARS_MACDONALD = ('x', 'y')

MODE_Y = 'y'
MODE_UV = 'uv'
modes = [MODE_Y, MODE_UV]

def check_varset(names):

    known = [variable['name'] for variable in variables]
    unknown = [name for name in names if name not in known]

    if unknown:
        raise ValueError('Unknown variables: {}.  Variables supported: {}.'.format(
            ', '.join(unknown), ', '.join(known)))

    if len(set(names)) != len(names):
        raise ValueError('Repeated variables in {}'.format(names))

    return tuple(names)

def check_mode(mode):

    if mode not in modes:
        raise ValueError('Mode not supported: {}.  Modes supported: {}.'.format(mode, ', '.join(modes)))

    return mode

def refinement_vars(mode):

    return VARS_Y if check_mode(mode) == MODE_Y else VARS_AB

def lambda_vars(mode):

    return VARS_LAM_Y if check_mode(mode) == MODE_Y else VARS_LAM_AB
