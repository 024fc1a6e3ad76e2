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

import pandas as pd
import numpy as np

def sign_power(n):

    return -1 if n % 2 else 1

def frame_from_records(records, columns, index=None):
    """
    Builds a DataFrame from a list of dicts keeping the given column order.
    Values are stored as python objects so exact numbers are never coerced
    to floating point.
    """

    if not records:
        df = pd.DataFrame(columns=columns)
    else:
        df = pd.DataFrame(records, columns=columns).astype(object)

    if index:
        df = df.set_index(index)

    return df

def object_matrix(rows, cols, entries):
    """
    Returns a numpy object array of python ints filled from a dict (i, j) -> value.
    """

    m = np.zeros((rows, cols), dtype=object)
    m[:, :] = 0
    for (i, j), value in entries.items():
        m[i, j] = value

    return m
