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
from hypothesis import given, strategies as st

from pyhiggs.partitions import Partition, partitions_of, transpose, box_data

PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297, 385, 490, 627]

@st.composite
def partitions(draw, max_n=12):

    n = draw(st.integers(min_value=0, max_value=max_n))
    return draw(st.sampled_from(partitions_of(n)))

def test_partitions_of_three():

    assert partitions_of(3) == (Partition((3,)), Partition((2, 1)), Partition((1, 1, 1)))

def test_partitions_of_zero():

    assert partitions_of(0) == (Partition(),)

@pytest.mark.parametrize('n', range(0, 21))
def test_partition_counts(n):

    assert len(partitions_of(n)) == PARTITION_COUNTS[n]

def test_partitions_of_out_of_range():

    with pytest.raises(ValueError):
        partitions_of(31)

def test_invalid_rows():

    with pytest.raises(ValueError):
        Partition((1, 2))

    with pytest.raises(ValueError):
        Partition((2, 0))

@pytest.mark.parametrize('rows, expected', [
    ((2, 1), (2, 1)),
    ((3,), (1, 1, 1)),
    ((), ()),
    ((4, 2, 2, 1), (4, 3, 1, 1)),
])
def test_transpose(rows, expected):

    assert transpose(Partition(rows)) == Partition(expected)

@given(partitions())
def test_transpose_involution(Y):

    assert transpose(transpose(Y)) == Y
    assert transpose(Y).size == Y.size

def test_hooks_of_two_one():

    hooks = {(b.i, b.j): b.hook for b in box_data(Partition((2, 1)))}
    assert hooks == {(1, 1): 3, (1, 2): 1, (2, 1): 1}

def test_box_sums_single_box():

    Y = Partition((1,))
    assert Y.sum_content() == 0
    assert Y.sum_diagonal() == 0

def test_lambda_weight_of_row_two():

    assert Partition((2,)).sum_lambda_weight() == -2

@given(partitions())
def test_hooks_add_up(Y):

    boxes = Y.boxes()
    assert sum(b.hook for b in boxes) == sum(b.arm + b.leg + 1 for b in boxes)
    assert len(boxes) == Y.size

@given(partitions())
def test_boxes_without_leg_match_first_row(Y):

    assert sum(1 for b in Y.boxes() if b.leg == 0) == Y.row(1)
