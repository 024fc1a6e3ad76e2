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

class InexactDivisionException(Exception):
    pass

class DivisionByZeroException(Exception):
    pass

class NonExpandableException(Exception):
    pass

class InsufficientOrderException(Exception):
    pass

class PoleAtZeroException(Exception):
    pass

class DegenerateBracketException(Exception):
    pass

class NonIntegralException(Exception):
    pass

class NonCancellationException(Exception):
    pass

class CurveNotSupportedException(Exception):
    pass

class CacheVersionException(Exception):
    pass

class FixtureFormatException(Exception):
    pass

class ValidationFailedException(Exception):

    def __init__(self, check, message):

        super().__init__('[{}] {}'.format(check, message))
        self.check = check
