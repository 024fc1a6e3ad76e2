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

from .curve import CurveData
from .omega import omega, omega_y, omega_uv, lambda_prefactor
from .asymptotic import AsymptoticInvariants, asymptotic_invariants, asymptotic_series, lambda_valuation_bound
from .fixed_loci import macdonald_poincare, rank_one_fixed_locus, rank_two_fixed_locus_series
