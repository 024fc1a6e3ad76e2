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

from dataclasses import dataclass
from functools import lru_cache

@dataclass(frozen=True)
class BoxData:
    """
    One box z = (i, j) of a Young diagram, 1-based, with its arm, leg and hook.
    """

    i: int
    j: int
    row_len: int
    col_len: int

    @property
    def arm(self):

        return self.row_len - self.j

    @property
    def leg(self):

        return self.col_len - self.i

    @property
    def hook(self):

        return self.arm + self.leg + 1

@dataclass(frozen=True)
class Partition:
    """
    Young diagram given by its weakly decreasing row lengths.
    """

    rows: tuple = ()

    def __post_init__(self):

        rows = tuple(int(r) for r in self.rows)
        if any(r <= 0 for r in rows):
            raise ValueError('Rows of a partition must be positive: {}'.format(rows))
        if any(a < b for a, b in zip(rows, rows[1:])):
            raise ValueError('Rows of a partition must be weakly decreasing: {}'.format(rows))

        object.__setattr__(self, 'rows', rows)

    @property
    def size(self):

        return sum(self.rows)

    @property
    def length(self):

        return len(self.rows)

    def row(self, i):
        """Y_i, 1-based, zero past the last row."""

        return self.rows[i - 1] if 1 <= i <= len(self.rows) else 0

    def column(self, j):
        """Y^t_j, 1-based, zero past the last column."""

        return sum(1 for r in self.rows if r >= j)

    def transpose(self):

        return transpose(self)

    def boxes(self):

        return box_data(self)

    def sum_content(self):
        """Σ (i + j - 2)"""

        return sum(b.i + b.j - 2 for b in self.boxes())

    def sum_diagonal(self):
        """Σ (-i + j)"""

        return sum(b.j - b.i for b in self.boxes())

    def sum_y_weight(self):
        """Σ (-2i + 2j + 1 - 2Y_i + Y^t_j)"""

        return sum(-2 * b.i + 2 * b.j + 1 - 2 * b.row_len + b.col_len for b in self.boxes())

    def sum_lambda_weight(self):
        """Σ (2i + 2j - 1 - 2Y_i - Y^t_j)"""

        return sum(2 * b.i + 2 * b.j - 1 - 2 * b.row_len - b.col_len for b in self.boxes())

    def __str__(self):

        return '({})'.format(','.join(str(r) for r in self.rows)) if self.rows else '∅'

def transpose(Y):

    if not Y.rows:
        return Partition()

    return Partition(tuple(Y.column(j) for j in range(1, Y.rows[0] + 1)))

@lru_cache(maxsize=None)
def box_data(Y):
    """
    Returns the boxes of Y in row-major order.
    """

    columns = [Y.column(j) for j in range(1, (Y.rows[0] if Y.rows else 0) + 1)]

    return tuple(
        BoxData(i, j, row_len, columns[j - 1])
        for i, row_len in enumerate(Y.rows, start=1)
        for j in range(1, row_len + 1))

@lru_cache(maxsize=None)
def partitions_of(n):
    """
    Returns every partition of n once, in reverse lexicographic order.

    Parameters
    ----------
    n : int
        0 <= n <= 30.
    """

    if n < 0 or n > 30:
        raise ValueError('Partitions are enumerated for 0 <= n <= 30, got {}'.format(n))

    return tuple(Partition(rows) for rows in _rows(n, n))

def _rows(n, largest):

    if n == 0:
        yield ()
        return

    for first in range(min(n, largest), 0, -1):
        for tail in _rows(n - first, first):
            yield (first,) + tail
