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

from .hodge import sym_prod_hodge, stable_bundle_hodge, jacobian_hodge, symmetric_product_series
from .localization import loc_rank2_hodge, loc_rank3_hodge, rank2_closed_form, rank2_fixed_locus_sum
from .localization import type_two_bound, type_three_bound, type_four_labels
from .hrv import HRVState, hrv_E, hrv_block, hrv_normalization, adams_operation
