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

import pytest

from pyhiggs.asymptotic import CurveData
from pyhiggs.wallcross import InvariantTable

def pytest_addoption(parser):

    parser.addoption('--runslow', action='store_true', default=False, help='run the slow cases (rank 3 doubly refined, HRV rank 3, g >= 4)')

def pytest_collection_modifyitems(config, items):

    if config.getoption('--runslow'):
        return

    skip_slow = pytest.mark.skip(reason='needs --runslow')
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip_slow)

@pytest.fixture(scope='session')
def table():

    return InvariantTable()

@pytest.fixture
def genus_two():

    return CurveData(2, 0)
