# -*- coding: utf-8 -*-
#
# Copyright (c) 2026, mahlerq developers
# All rights reserved.
#
# Licensed under the BSD 3-Clause License:
# http://opensource.org/licenses/BSD-3-Clause
#


import csv
import pathlib
import re
from typing import Dict, List, Optional, Sequence

import markdown
# Extensions are imported and initialized explicitly
import markdown.extensions
import markdown.extensions.tables

from .err import MahlerError
from .report import RunReport
from .version import __version__ as version


md_extensions = [
    markdown.extensions.tables.makeExtension(),
]

SCAN_COLUMNS = ('alpha', 'n', 'I', 'J', 'n_tilde', 'closed_form', 'abs_diff')

REPORT_SUFFIXES = ('.md', '.markdown', '.html', '.json')




# https://daringfireball.net/projects/markdown/syntax
_md_escape_chars_re = re.compile(r'[\\`*_{}\[\]()#+\-.!|]')

def _md_escape_chars_repl_func(match: re.Match) -> str:
    return '\\' + match.group()

def md_escape(raw_text: str) -> str:
    '''
    Escape raw text so that it is suitable for inclusion in Markdown.
    '''
    return _md_escape_chars_re.sub(_md_escape_chars_repl_func, raw_text)


def format_number(x: Optional[float], digits: int=12) -> str:
    if x is None:
        return ''
    if isinstance(x, bool):
        return str(x)
    return f'{x:.{digits}g}'


def _status(passed: Optional[bool]) -> str:
    if passed is None:
        return 'info'
    return 'pass' if passed else 'FAIL'




def report_to_text(report: RunReport) -> str:
    '''
    Plain fixed-width table for the terminal.
    '''
    rows = [('check', 'lhs', 'rhs', 'abs_diff', 'tol', 'result')]
    for row in report.results:
        rows.append((row.name, format_number(row.lhs), format_number(row.rhs),
                     format_number(row.abs_diff, 3), format_number(row.tol, 3), _status(row.passed)))
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    lines = ['  '.join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in rows]
    lines.insert(1, '  '.join('-'*w for w in widths))
    failures = len(report.failures)
    gating = sum(1 for row in report.results if row.gating)
    lines.append('')
    lines.append(f'{report.command}: {gating - failures}/{gating} checks passed in {report.timing:.2f} s')
    return '\n'.join(lines) + '\n'


def report_to_markdown(report: RunReport) -> str:
    '''
    Report as a Markdown document with an inputs list and a results table.
    '''
    lines = [f'# mahlerq {md_escape(report.command)}', '']
    if report.inputs:
        lines.extend(f'* {md_escape(str(k))}: `{v}`' for k, v in report.inputs.items())
        lines.append('')
    lines.append('| check | lhs | rhs | abs diff | tol | result |')
    lines.append('|---|---:|---:|---:|---:|---|')
    for row in report.results:
        lines.append(f'| {md_escape(row.name)} | {format_number(row.lhs)} | {format_number(row.rhs)} | '
                     f'{format_number(row.abs_diff, 3)} | {format_number(row.tol, 3)} | {_status(row.passed)} |')
    lines.append('')
    outcome = 'all checks passed' if report.passed else f'{len(report.failures)} check(s) failed'
    lines.append(f'{outcome.capitalize()}; elapsed time {report.timing:.2f} s (mahlerq {version}).')
    return '\n'.join(lines) + '\n'


def report_to_html(report: RunReport) -> str:
    body = markdown.markdown(report_to_markdown(report), extensions=md_extensions)
    return ('<!DOCTYPE html>\n<html>\n<head>\n<meta charset="utf-8">\n'
            f'<title>mahlerq {report.command}</title>\n</head>\n<body>\n{body}\n</body>\n</html>\n')


def save_report(report: RunReport, path: pathlib.Path):
    '''
    Write the report in the format given by the file suffix.
    '''
    path = pathlib.Path(path).expanduser()
    suffix = path.suffix.lower()
    if suffix in ('.md', '.markdown'):
        text = report_to_markdown(report)
    elif suffix == '.html':
        text = report_to_html(report)
    elif suffix == '.json':
        text = report.to_json()
    else:
        raise MahlerError(f'Unsupported report format "{path.suffix}"; use {", ".join(REPORT_SUFFIXES)}')
    try:
        path.write_text(text, encoding='utf8')
    except (FileNotFoundError, PermissionError) as e:
        raise MahlerError(f'Could not write report "{path}":\n{e}')




def write_csv(path: pathlib.Path, rows: List[Dict[str, Optional[float]]], columns: Sequence[str]=SCAN_COLUMNS):
    '''
    Write rows in the given column order.  Missing values are empty cells.
    '''
    path = pathlib.Path(path).expanduser()
    try:
        with open(path, 'w', newline='', encoding='utf8') as f:
            writer = csv.writer(f)
            writer.writerow(columns)
            for row in rows:
                writer.writerow(['' if row.get(c) is None else repr(float(row[c])) for c in columns])
    except (FileNotFoundError, PermissionError) as e:
        raise MahlerError(f'Could not write CSV file "{path}":\n{e}')
