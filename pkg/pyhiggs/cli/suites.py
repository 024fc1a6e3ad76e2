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

from ..common import ValidationFailedException, NonIntegralException, frame_from_records, MODE_Y, MODE_UV
from ..exactalg import RationalFn, collapse_uv
from ..higgs import Higgs
from ..oracles import hrv_E, loc_rank2_hodge, loc_rank3_hodge
from ..partitions import partitions_of
from ..wallcross import rank_one_closed_form
from .fixtures import load_fixtures

from collections import namedtuple

import logging
import time

Case = namedtuple('Case', ['suite', 'case', 'run', 'blocking'])

SUITE_REFERENCE_TABLES = 'paper-tables'
SUITE_ORACLES = 'oracles'
SUITE_PROPERTIES = 'properties'
SUITE_GAUGE = 'gauge'
SUITE_CONJECTURES = 'conjectures'

suites = [
    {
    'name': SUITE_REFERENCE_TABLES,
    'description': 'Recursion output against the reference tables',
    'blocking': True
    },
    {
    'name': SUITE_ORACLES,
    'description': 'Hodge polynomials against the HRV and localization formulas',
    'blocking': True
    },
    {
    'name': SUITE_PROPERTIES,
    'description': 'Shift, parity, duality, u = v, integrality, n-identity and multicover round trip',
    'blocking': True
    },
    {
    'name': SUITE_GAUGE,
    'description': 'Gauge theory specializations against the asymptotic building blocks',
    'blocking': True
    },
    {
    'name': SUITE_CONJECTURES,
    'description': 'Integrality and degree independence of the multicover invariants',
    'blocking': False
    }
]

STATUS_PASS = 'pass'
STATUS_FAIL = 'fail'
STATUS_ERROR = 'error'
STATUS_SKIPPED = 'skipped'

REPORT_COLUMNS = ['suite', 'case', 'status', 'elapsed', 'detail', 'blocking']

class Verifier:
    """
    Builds and runs the verification cases.  All facades share one memo table,
    so invariants computed by a case are reused by the following ones.
    """

    def __init__(self, table, g_max=3):

        self.table = table
        self.g_max = g_max

        self.__facades = {}

########################
#### PUBLIC METHODS ####
########################
    def cases(self, suite):
        """
        Returns the list of cases of a suite.

        Raises
        ------
        ValueError
            Unknown suite.
        """

        builders = {
            SUITE_REFERENCE_TABLES: self.__reference_tables,
            SUITE_ORACLES: self.__oracles,
            SUITE_PROPERTIES: self.__properties,
            SUITE_GAUGE: self.__gauge,
            SUITE_CONJECTURES: self.__conjectures
        }

        if suite not in builders:
            raise ValueError('Suite not supported: {}.  Suites supported: {}.'.format(
                suite, ', '.join(s['name'] for s in suites)))

        blocking = [s['blocking'] for s in suites if s['name'] == suite][0]

        return [Case(suite, name, run, blocking) for name, run in builders[suite]()]

    def run(self, cases, timeout=None, report=None):
        """
        Runs the cases in order.

        Parameters
        ----------
        cases : list of Case
            The cases to run.
        timeout : float, optional
            Budget in seconds for the whole run.  Once it is spent the
            remaining cases are reported as skipped.
        report : callable, optional
            Called with the record of every case as soon as it is known.

        Returns
        -------
        pandas.DataFrame
            One row per case with the columns suite, case, status, elapsed,
            detail and blocking.
        """

        start = time.time()

        records = []
        for case in cases:
            if timeout is not None and time.time() - start > timeout:
                record = self.__record(case, STATUS_SKIPPED, 0.0, 'time budget of {}s spent'.format(timeout))
            else:
                record = self.__run_case(case)

            records.append(record)
            if report is not None:
                report(record)

        return frame_from_records(records, REPORT_COLUMNS)

    def facade(self, g, p, mode=MODE_Y):

        key = (g, p, mode)
        if key not in self.__facades:
            self.__facades[key] = Higgs(g, p, mode=mode, table=self.table)

        return self.__facades[key]

#########################
#### PRIVATE METHODS ####
#########################
    def __run_case(self, case):

        ts = time.time()
        try:
            detail = case.run()
            status = STATUS_PASS
        except (ValidationFailedException, NonIntegralException) as ex:
            detail = str(ex)
            status = STATUS_FAIL
        except Exception as ex:
            detail = '{}: {}'.format(type(ex).__name__, ex)
            status = STATUS_ERROR

        record = self.__record(case, status, time.time() - ts, detail)
        logging.info("[PYHIGGS: CLI] Case [{}: {}]: {} ({:.3f}s)".format(case.suite, case.case, status, record['elapsed']))

        return record

    def __record(self, case, status, elapsed, detail):

        return {
            'suite': case.suite,
            'case': case.case,
            'status': status,
            'elapsed': round(elapsed, 3),
            'detail': detail or '',
            'blocking': case.blocking
        }

    def __genera(self):

        return range(2, min(self.g_max, 3) + 1)

    def __reference_tables(self):

        for fixture in load_fixtures():
            if fixture.g > self.g_max:
                continue

            name = 'g={} p={} r={} e={} mode={}'.format(fixture.g, fixture.p, fixture.r, fixture.e, fixture.mode)
            yield name, self.__table_check(fixture)

    def __table_check(self, fixture):

        def run():
            value = self.facade(fixture.g, fixture.p, fixture.mode).higgs_tilde(fixture.r, fixture.e)
            _expect(value == fixture.value, 'reference-table',
                'H~({}, {}) differs from the table entry at line {}: got {}'.format(fixture.r, fixture.e, fixture.line, value))
            return 'line {}'.format(fixture.line)

        return run

    def __oracles(self):

        for g in self.__genera():
            yield 'hrv g={} r=2'.format(g), self.__oracle_check(g, 0, 2, lambda g=g: hrv_E(g, 2))
            for p in range(3):
                yield 'localization g={} p={} r=2'.format(g, p), self.__oracle_check(g, p, 2, lambda g=g, p=p: loc_rank2_hodge(g, p))

        if self.g_max >= 2:
            yield 'hrv g=2 r=3', self.__oracle_check(2, 0, 3, lambda: hrv_E(2, 3))
            yield 'localization g=2 p=0 r=3', self.__oracle_check(2, 0, 3, lambda: loc_rank3_hodge(2, 0))

    def __oracle_check(self, g, p, r, oracle):

        def run():
            hodge, n = self.facade(g, p, MODE_UV).hodge(r, 1)
            expected = oracle()
            _expect(RationalFn.lift(hodge.to_laurent()) == expected, 'oracle',
                'Hodge polynomial of ({}, 1) is {}, the oracle gives {}'.format(r, hodge, expected))
            return 'n={}'.format(n)

        return run

    def __properties(self):

        for g in self.__genera():
            for p in range(3):
                label = 'g={} p={}'.format(g, p)
                yield '{} rank one closed form'.format(label), self.__rank_one_check(g, p)
                for r, e in ((1, 0), (2, 1), (3, 1)):
                    yield '{} poincare ({}, {})'.format(label, r, e), self.__poincare_check(g, p, r, e)
                yield '{} hodge (2, 1)'.format(label), self.__hodge_check(g, p)
                yield '{} shift rank 2'.format(label), self.__shift_check(g, p)
                yield '{} parity rank 3'.format(label), self.__equal_check(g, p, MODE_Y, (3, 2), (3, 1))
                yield '{} duality rank 2'.format(label), self.__duality_check(g, p)
                for e in (0, 1):
                    yield '{} u=v collapse (2, {})'.format(label, e), self.__collapse_check(g, p, e)
                for r in (2, 3):
                    yield '{} multicover round trip ({}, 0)'.format(label, r), self.__round_trip_check(g, p, r)

    def __rank_one_check(self, g, p):

        def run():
            higgs = self.facade(g, p)
            expected = rank_one_closed_form(higgs.curve, MODE_Y)
            for e in range(-3, 4):
                _expect(higgs.higgs_tilde(1, e) == expected, 'rank-one', 'H~(1, {}) differs from the closed form'.format(e))
                if e != g - 1:
                    value = higgs.wallcross.higgs_tilde(1, e, normalize=False)
                    _expect(value == expected, 'rank-one', 'Raw H~(1, {}) differs from the closed form'.format(e))
            return ''

        return run

    def __poincare_check(self, g, p, r, e):

        def run():
            poincare, n = self.facade(g, p).poincare(r, e)
            return '{} n={}'.format(poincare, n)

        return run

    def __hodge_check(self, g, p):

        def run():
            hodge, n = self.facade(g, p, MODE_UV).hodge(2, 1)
            poincare, _ = self.facade(g, p).poincare(2, 1)
            _expect(hodge.collapse() == poincare, 'collapse',
                'u = v specialization {} differs from the Poincare polynomial {}'.format(hodge.collapse(), poincare))
            return 'n={}'.format(n)

        return run

    def __shift_check(self, g, p):

        def run():
            frame = self.facade(g, p).parity_table(2)
            checked = frame[frame['matches'].notna()]
            _expect(bool(checked['matches'].all()), 'shift',
                'H~(2, e) depends on more than e mod 2 at degrees {}'.format(list(checked[~checked['matches'].astype(bool)]['e'])))
            return '{} degrees'.format(len(checked))

        return run

    def __equal_check(self, g, p, mode, first, second):

        def run():
            higgs = self.facade(g, p, mode)
            _expect(higgs.higgs_tilde(*first) == higgs.higgs_tilde(*second), 'parity',
                'H~{} differs from H~{}'.format(first, second))
            return ''

        return run

    def __duality_check(self, g, p):

        def run():
            wallcross = self.facade(g, p).wallcross
            _expect(wallcross.higgs_tilde(2, 1, normalize=False) == wallcross.higgs_tilde(2, -1, normalize=False), 'duality',
                'H~(2, 1) differs from H~(2, -1)')
            return ''

        return run

    def __collapse_check(self, g, p, e):

        def run():
            doubly = self.facade(g, p, MODE_UV).higgs_tilde(2, e)
            refined = self.facade(g, p).higgs_tilde(2, e)
            _expect(collapse_uv(doubly) == refined, 'collapse', 'u = v specialization of H~(2, {}) differs from the y-refined value'.format(e))
            return ''

        return run

    def __round_trip_check(self, g, p, r):

        def run():
            refine = self.facade(g, p).refine
            _expect(refine.multicover_sum(r, 0) == refine.multicover_target(r, 0), 'multicover',
                'Multicover reconstruction of ({}, 0) is not exact'.format(r))
            return ''

        return run

    def __gauge(self):

        for g in self.__genera():
            for p in range(3):
                for mode in (MODE_Y, MODE_UV):
                    for n in range(1, 4):
                        for Y in partitions_of(n):
                            name = 'g={} p={} mode={} Y={}'.format(g, p, mode, Y)
                            yield name, self.__gauge_check(g, p, mode, Y)

    def __gauge_check(self, g, p, mode, Y):

        def run():
            _expect(self.facade(g, p, mode).gauge.consistent(Y), 'gauge',
                'Gauge specialization differs from Omega for Y = {}'.format(Y))
            return ''

        return run

    def __conjectures(self):

        for g in self.__genera():
            for p in range(3):
                for r in (2, 3):
                    yield 'g={} p={} hbar rank {}'.format(g, p, r), self.__hbar_check(g, p, r)

    def __hbar_check(self, g, p, r):

        def run():
            higgs = self.facade(g, p)
            values = [higgs.hbar(r, e) for e in range(r)]
            _expect(all(value == values[0] for value in values[1:]), 'hbar',
                'Hbar({}, e) depends on e'.format(r))
            return str(values[0])

        return run

def blocking_failures(frame):
    """
    Returns the rows of a report that fail the run: blocking cases with
    status fail or error.
    """

    if frame.empty:
        return frame

    return frame[frame['blocking'].astype(bool) & frame['status'].isin([STATUS_FAIL, STATUS_ERROR])]

def _expect(condition, check, message):

    if not condition:
        raise ValidationFailedException(check, message)
