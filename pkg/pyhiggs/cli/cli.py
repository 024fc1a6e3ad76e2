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

from ..common import ValidationFailedException, NonIntegralException, CacheVersionException, CurveNotSupportedException
from ..common import modes, MODE_Y, MODE_UV
from ..higgs import Higgs
from ..wallcross import InvariantTable
from .cache import CacheFile
from .suites import Verifier, suites, blocking_failures

import argparse
import json
import logging
import os
import sys

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_USAGE = 64
EXIT_INTERNAL = 70

CACHE_DIR_VARIABLE = 'HIGGS_CACHE_DIR'

WHAT_HIGGS = 'higgs'
WHAT_HBAR = 'hbar'
WHAT_POINCARE = 'poincare'
WHAT_HODGE = 'hodge'
WHAT_TABLE = 'table'

class ArgumentParser(argparse.ArgumentParser):
    """
    argparse parser whose usage errors exit with status 64.
    """

    def error(self, message):

        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, '{}: error: {}\n'.format(self.prog, message))

def build_parser():

    parser = ArgumentParser(prog='pyhiggs', description='Refined Higgs sheaf invariants of a curve.')
    parser.add_argument('--verbose', action='store_true', help='Log debug messages to standard error.')

    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    compute = commands.add_parser('compute', help='Compute one invariant or moduli space polynomial.')
    _add_curve_arguments(compute)
    compute.add_argument('--r', type=int, required=True, help='Rank, r >= 1.')
    compute.add_argument('--e', type=int, required=True, help='Degree.')
    compute.add_argument('--mode', choices=modes, default=None,
        help='Refinement: y or uv.  Defaults to y, and to uv for --what hodge.')
    compute.add_argument('--what', choices=[WHAT_HIGGS, WHAT_HBAR, WHAT_POINCARE, WHAT_HODGE, WHAT_TABLE], default=WHAT_HIGGS,
        help='higgs: the recursion output H~(r, e).  hbar: the multicover invariant.  poincare, hodge: '
             'polynomials of the moduli space (coprime charges).  table: H~(r, e) for 0 <= e < 2r.')
    compute.add_argument('--format', choices=['text', 'json'], default='text')
    _add_cache_argument(compute)

    verify = commands.add_parser('verify', help='Run verification suites and print a JSON lines report.')
    verify.add_argument('--suite', choices=[s['name'] for s in suites], default=None,
        help='Suite to run.  Defaults to every suite.')
    verify.add_argument('--g-max', type=int, default=3, help='Largest genus to check.')
    verify.add_argument('--timeout', type=float, default=None,
        help='Time budget in seconds for the run; cases left when it is spent are skipped.')
    _add_cache_argument(verify)

    dump = commands.add_parser('dump-asymptotic', help='Print the asymptotic invariants of one rank.')
    _add_curve_arguments(dump)
    dump.add_argument('--r', type=int, required=True, help='Rank, r >= 1.')
    dump.add_argument('--emax', type=int, required=True, help='Largest degree.')
    dump.add_argument('--mode', choices=modes, default=MODE_Y)
    dump.add_argument('--format', choices=['text', 'json'], default='text')

    return parser

def main(argv=None):
    """
    Entry point of the pyhiggs command.

    Returns
    -------
    int
        0 on success, 2 on a failed validation, 64 on a usage error and 70
        on any other error.
    """

    parser = build_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format='%(asctime)s %(levelname)s %(message)s',
        stream=sys.stderr)

    handlers = {
        'compute': cmd_compute,
        'verify': cmd_verify,
        'dump-asymptotic': cmd_dump_asymptotic
    }

    try:
        return handlers[args.command](parser, args)
    except (ValidationFailedException, NonIntegralException, CacheVersionException) as ex:
        _print_error(parser, ex)
        return EXIT_VALIDATION
    except CurveNotSupportedException as ex:
        _print_error(parser, ex)
        return EXIT_USAGE
    except Exception as ex:
        logging.debug("[PYHIGGS: CLI] Internal error", exc_info=True)
        _print_error(parser, '{}: {}'.format(type(ex).__name__, ex))
        return EXIT_INTERNAL

def cmd_compute(parser, args):

    if args.r < 1:
        parser.error('--r must be >= 1, got {}'.format(args.r))

    mode = args.mode
    if args.what == WHAT_POINCARE and mode not in (None, MODE_Y):
        parser.error('--what poincare needs --mode y')
    if args.what == WHAT_HODGE and mode not in (None, MODE_UV):
        parser.error('--what hodge needs --mode uv')
    if mode is None:
        mode = MODE_UV if args.what == WHAT_HODGE else MODE_Y

    table = InvariantTable()
    cache = _open_cache(args.cache_dir, table)

    higgs = Higgs(args.g, args.p, mode=mode, table=table)
    header = {'g': args.g, 'p': args.p, 'r': args.r, 'e': args.e, 'mode': mode, 'what': args.what}

    try:
        if args.what == WHAT_HIGGS:
            value = higgs.higgs_tilde(args.r, args.e)
            text, payload = str(value), {'value': value.to_json()}

        elif args.what == WHAT_HBAR:
            value = higgs.hbar(args.r, args.e)
            text, payload = str(value), {'value': value.to_json()}

        elif args.what == WHAT_POINCARE:
            poincare, n = higgs.poincare(args.r, args.e)
            text, payload = str(poincare), {'coeffs': poincare.to_json(), 'n': n, 'm': poincare.m}

        elif args.what == WHAT_HODGE:
            hodge, n = higgs.hodge(args.r, args.e)
            text, payload = str(hodge), {'coeffs': hodge.to_json(), 'n': n}

        else:
            frame = higgs.parity_table(args.r)
            rows = []
            lines = []
            for row in frame.itertuples(index=False):
                rows.append({
                    'e': int(row.e),
                    'representative': int(row.representative),
                    'value': None if row.value is None else row.value.to_json(),
                    'matches': None if row.matches is None else bool(row.matches)})
                lines.append('e={}: {}'.format(row.e, 'degenerate' if row.value is None else row.value))
            text, payload = '\n'.join(lines), {'rows': rows}
    finally:
        if cache is not None:
            cache.save(table)

    logging.debug("[PYHIGGS: CLI] Table stats: {}".format(table.stats()))

    if args.format == 'json':
        header.update(payload)
        print(json.dumps(header, sort_keys=True))
    else:
        print(text)

    return EXIT_OK

def cmd_verify(parser, args):

    if args.g_max < 2:
        parser.error('--g-max must be >= 2, got {}'.format(args.g_max))

    table = InvariantTable()
    cache = _open_cache(args.cache_dir, table)

    verifier = Verifier(table, g_max=args.g_max)
    names = [args.suite] if args.suite else [s['name'] for s in suites]

    cases = []
    for name in names:
        cases.extend(verifier.cases(name))

    def report(record):
        print(json.dumps(record, sort_keys=True))
        sys.stdout.flush()

    try:
        frame = verifier.run(cases, timeout=args.timeout, report=report)
    finally:
        if cache is not None:
            cache.save(table)

    if not frame.empty:
        logging.info("[PYHIGGS: CLI] Verification summary: {}".format(frame.groupby('status').size().to_dict()))

    return EXIT_VALIDATION if len(blocking_failures(frame)) else EXIT_OK

def cmd_dump_asymptotic(parser, args):

    if args.r < 1:
        parser.error('--r must be >= 1, got {}'.format(args.r))

    higgs = Higgs(args.g, args.p, mode=args.mode)
    frame = higgs.asymptotic_table(args.r, args.emax)

    if args.format == 'json':
        rows = [{'e': int(row.e), 'value': row.value.to_json()} for row in frame.itertuples(index=False)]
        document = {'g': args.g, 'p': args.p, 'r': args.r, 'mode': args.mode, 'rows': rows}
        print(json.dumps(document, sort_keys=True))
    else:
        for row in frame.itertuples(index=False):
            print('e={}: {}'.format(row.e, row.value))

    return EXIT_OK

def _add_curve_arguments(parser):

    parser.add_argument('--g', type=int, required=True, help='Genus of the curve, g >= 2.')
    parser.add_argument('--p', type=int, required=True, help='Degree p >= 0 of the first coefficient line bundle.')

def _add_cache_argument(parser):

    parser.add_argument('--cache-dir', default=os.environ.get(CACHE_DIR_VARIABLE),
        help='Directory of the invariant cache.  Defaults to ${}; nothing is cached when unset.'.format(CACHE_DIR_VARIABLE))

def _open_cache(directory, table):

    if not directory:
        return None

    cache = CacheFile(directory)
    cache.load(table)

    return cache

def _print_error(parser, message):

    sys.stderr.write('{}: error: {}\n'.format(parser.prog, message))
