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

from ..common import CacheVersionException

from threading import Lock

import json
import logging
import os
import tempfile

CACHE_VERSION = 'pyhiggs-cache-1'
CACHE_FILENAME = 'invariants.json'

class CacheFile:
    """
    On-disk snapshot of an InvariantTable.
    """

    def __init__(self, directory):
        """
        Class constructor

        Parameters
        ----------
        directory : str
            Directory holding the cache file.  It is created on the first save.
        """

        self.directory = directory
        self.path = os.path.join(directory, CACHE_FILENAME)

        self.__lock = Lock()

########################
#### PUBLIC METHODS ####
########################
    def load(self, table):
        """
        Loads the snapshot into table.  A missing file loads nothing.

        Raises
        ------
        pyhiggs.common.CacheVersionException
            The file was written by another cache version, or it is not a cache file.

        Returns
        -------
        int
            The number of entries read.
        """

        if not os.path.exists(self.path):
            logging.debug("[PYHIGGS: CLI] Cache miss [{}]: no cache file".format(self.path))
            return 0

        with self.__lock:
            with open(self.path, 'r', encoding='utf-8') as f:
                try:
                    data = json.load(f)
                except ValueError as ex:
                    raise CacheVersionException('{} is not a cache file: {}'.format(self.path, ex))

        version = data.get('version') if isinstance(data, dict) else None
        if version != CACHE_VERSION:
            raise CacheVersionException('Stale cache file {}: version {}, expected {}.  Remove it to rebuild.'.format(
                self.path, version, CACHE_VERSION))

        entries = data.get('entries', [])
        table.load_json_entries(entries)

        logging.debug("[PYHIGGS: CLI] Cache loaded [{}]: ({} entries)".format(self.path, len(entries)))

        return len(entries)

    def save(self, table):
        """
        Writes the snapshot of table.  The file is written to a temporary file
        in the same directory and then renamed over the previous one.
        """

        document = {'version': CACHE_VERSION, 'entries': table.to_json_entries()}

        with self.__lock:
            os.makedirs(self.directory, exist_ok=True)
            fd, tmp = tempfile.mkstemp(prefix='.invariants-', suffix='.json', dir=self.directory)
            try:
                with os.fdopen(fd, 'w', encoding='utf-8') as f:
                    json.dump(document, f, sort_keys=True, separators=(',', ':'))
                os.replace(tmp, self.path)
            except BaseException:
                if os.path.exists(tmp):
                    os.remove(tmp)
                raise

        logging.debug("[PYHIGGS: CLI] Cache saved [{}]: ({} entries)".format(self.path, len(document['entries'])))
