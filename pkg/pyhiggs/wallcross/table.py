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

from .charge import InvariantKey
from ..exactalg import RationalFn

from threading import Lock

class InvariantTable:
    """
    Memo store of computed invariants keyed by InvariantKey.  Reads are free,
    insertions are serialized, and an entry is never replaced by a different value.
    """

    def __init__(self):

        self.__lock = Lock()
        self._entries = {}
        self.hits = 0
        self.computes = 0

########################
#### PUBLIC METHODS ####
########################
    def get(self, key):

        with self.__lock:
            value = self._entries.get(key)
            if value is not None:
                self.hits += 1

        return value

    def put(self, key, value):
        """
        Stores a value.

        Raises
        ------
        ValueError
            The key already holds a different value.
        """

        with self.__lock:
            existing = self._entries.get(key)
            if existing is not None:
                if existing != value:
                    raise ValueError('Conflicting values for {}'.format(key))
                return

            self._entries[key] = value
            self.computes += 1

    def items(self):

        with self.__lock:
            return sorted(self._entries.items())

    def stats(self):

        return {'entries': len(self), 'hits': self.hits, 'computes': self.computes}

    def to_json_entries(self):

        return [{'key': key.to_json(), 'value': value.to_json()} for key, value in self.items()]

    def load_json_entries(self, entries):

        for entry in entries:
            key = InvariantKey.from_json(entry['key'])
            value = RationalFn.from_json(entry['value'])
            with self.__lock:
                self._entries.setdefault(key, value)

    def __len__(self):

        with self.__lock:
            return len(self._entries)

    def __contains__(self, key):

        with self.__lock:
            return key in self._entries
