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

from .variables import variables, check_varset, check_mode, refinement_vars, lambda_vars, modes, MODE_Y, MODE_UV
from .variables import VARS_Y, VARS_AB, VARS_UV, VARS_XY, VARS_LAM_Y, VARS_LAM_AB, VARS_GAUGE, VARS_GAUGE_LIMIT, VARS_HRV, VARS_SYM, VARS_MACDONALD
from .exceptions import InexactDivisionException, DivisionByZeroException, NonExpandableException, InsufficientOrderException
from .exceptions import PoleAtZeroException, DegenerateBracketException, NonIntegralException, NonCancellationException
from .exceptions import CurveNotSupportedException, CacheVersionException, FixtureFormatException, ValidationFailedException
from .helpers import sign_power, frame_from_records, object_matrix
