# -*- coding: utf-8 -*-
#
# Copyright (c) 2026, mahlerq developers
# All rights reserved.
#
# Licensed under the BSD 3-Clause License:
# http://opensource.org/licenses/BSD-3-Clause
#


import argparse
import pathlib
import sys
import warnings
from typing import List, Optional
from .version import __version__ as version
from .err import DomainError, MahlerError, MahlerWarning
from .config import Config
from .export import REPORT_SUFFIXES, report_to_text, save_report, write_csv
from .report import RunReport
from . import suites


EXIT_PASS = 0
EXIT_CHECK_FAILED = 1
EXIT_NUMERICAL = 2
EXIT_USAGE = 3




class _ArgumentParser(argparse.ArgumentParser):
    '''
    argparse exits with status 2 on usage errors; here usage errors are 3.
    '''
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f'{self.prog}: error: {message}\n')


def _k_list(text: str) -> List[int]:
    try:
        return [int(k) for k in text.split(',') if k.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f'Invalid k-list "{text}"; expected comma-separated integers')


def _report_path(text: str) -> pathlib.Path:
    path = pathlib.Path(text).expanduser()
    if path.suffix.lower() not in REPORT_SUFFIXES:
        raise argparse.ArgumentTypeError(
            f'Unsupported report format "{path.suffix}"; use {", ".join(REPORT_SUFFIXES)}')
    return path


def _add_common(parser: argparse.ArgumentParser):
    parser.add_argument('--tol', type=float,
                        help='Absolute quadrature tolerance (config "quad_tol", default 1e-11)')
    parser.add_argument('--curves', metavar='PATH',
                        help='Curve table to use instead of the packaged one')
    parser.add_argument('--terms', type=int,
                        help='Number of q-expansion terms in modular checks (config "q_terms", default 400)')
    parser.add_argument('--workers', type=int,
                        help='Worker processes for scans and table rows (config "workers", default 1)')
    parser.add_argument('--json', action='store_true',
                        help='Print the report as JSON instead of a table')
    parser.add_argument('--report', type=_report_path, metavar='PATH',
                        help='Also save the report as Markdown (.md), HTML (.html), or JSON (.json)')
    parser.add_argument('--quiet', action='store_true',
                        help='Suppress numerical warnings')




def _emit(report: RunReport, args: argparse.Namespace) -> int:
    if args.json:
        print(report.to_json())
    else:
        print(report_to_text(report), end='')
    if args.report is not None:
        save_report(report, args.report)
    return EXIT_PASS if report.passed else EXIT_CHECK_FAILED


def cmd_measure(args: argparse.Namespace, config: Config) -> int:
    return _emit(suites.run_measure(args.alpha, config), args)


def cmd_table2(args: argparse.Namespace, config: Config) -> int:
    return _emit(suites.run_table2(config, args.subset), args)


def cmd_verify(args: argparse.Namespace, config: Config) -> int:
    names = list(suites.SUITES) if args.suite == 'all' else [args.suite]
    reports = [suites.run_suite(name, config) for name in names]
    if len(reports) == 1:
        return _emit(reports[0], args)
    combined = RunReport('verify all', reports[0].inputs)
    for report in reports:
        combined.extend(report)
        combined.timing += report.timing
    return _emit(combined, args)


def cmd_scan(args: argparse.Namespace, config: Config) -> int:
    report, rows = suites.run_scan(args.alpha_min, args.alpha_max, args.steps, config)
    if args.out is not None:
        write_csv(args.out, rows)
    return _emit(report, args)


def cmd_curves(args: argparse.Namespace, config: Config) -> int:
    report, listing = suites.run_curves(config)
    if not args.json:
        for entry in listing:
            k = '-' if entry['k'] is None else entry['k']
            print(f"{entry['label']:>10}  k = {k!s:>5}  N = {entry['N']:>5}  eps = {entry['eps']:+d}  "
                  f"ainvs = {entry['ainvs']}  j = {entry['j']}")
        print()
    return _emit(report, args)




def main(argv: Optional[List[str]]=None) -> int:
    '''
    mahlerq executable main function.
    '''
    parser = _ArgumentParser(prog='mahlerq')
    parser.set_defaults(func=lambda args, config: parser.print_help() or EXIT_PASS)
    parser.add_argument('--version', action='version', version=f'mahlerq {version}')
    subparsers = parser.add_subparsers(title='commands', parser_class=_ArgumentParser)

    measure = subparsers.add_parser('measure', help='Mahler measure n(alpha) with its closed-form checks')
    measure.add_argument('alpha', type=float, help='Real parameter alpha')
    _add_common(measure)
    measure.set_defaults(func=cmd_measure)

    table2 = subparsers.add_parser('table2', help="Ratios n~(k^(1/3))/L'(E, 0) for family curves")
    table2.add_argument('--subset', type=_k_list, metavar='K-LIST',
                        help=f'Comma-separated k values in 1..26 (default {",".join(str(k) for k in suites.TABLE2_GATING_K)})')
    _add_common(table2)
    table2.set_defaults(func=cmd_table2)

    verify = subparsers.add_parser('verify', help='Run a verification suite')
    verify.add_argument('suite', choices=list(suites.SUITES) + ['all'], help='Suite name, or "all"')
    _add_common(verify)
    verify.set_defaults(func=cmd_verify)

    scan = subparsers.add_parser('scan', help='n, I, J and n~ on an equally spaced grid')
    scan.add_argument('alpha_min', type=float)
    scan.add_argument('alpha_max', type=float)
    scan.add_argument('steps', type=int)
    scan.add_argument('--out', metavar='FILE.csv', type=pathlib.Path,
                      help='Write rows as CSV (alpha,n,I,J,n_tilde,closed_form,abs_diff)')
    _add_common(scan)
    scan.set_defaults(func=cmd_scan)

    curves = subparsers.add_parser('curves', help='List the curve table with derived invariants')
    _add_common(curves)
    curves.set_defaults(func=cmd_curves)

    args = parser.parse_args(argv)
    if not hasattr(args, 'quiet'):
        return args.func(args, None)

    with warnings.catch_warnings():
        warnings.simplefilter('ignore' if args.quiet else 'once', MahlerWarning)
        try:
            config = Config()
            config.load()
            try:
                config.override(quad_tol=args.tol, q_terms=args.terms, workers=args.workers,
                                curve_table=args.curves)
            except MahlerError as e:
                print(f'mahlerq: error: {e}', file=sys.stderr)
                return EXIT_USAGE
            status = args.func(args, config)
        except DomainError as e:
            print(f'mahlerq: error: {e}', file=sys.stderr)
            return EXIT_USAGE
        except MahlerError as e:
            print(f'mahlerq: error: {e}', file=sys.stderr)
            return EXIT_NUMERICAL
    return status