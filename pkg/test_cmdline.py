# -*- coding: utf-8 -*-
#
# Copyright (c) 2026, mahlerq developers
# All rights reserved.
#
# Licensed under the BSD 3-Clause License:
# http://opensource.org/licenses/BSD-3-Clause
#


import csv
import json

import pytest

from mahlerq import cmdline, mahler, suites
from mahlerq.config import Config
from mahlerq.err import ConvergenceError, DomainError, MahlerError
from mahlerq.report import RunReport




@pytest.fixture(autouse=True)
def isolated_config(tmp_path, monkeypatch):
    monkeypatch.setattr(Config, '_config_path', tmp_path / 'mahlerq.bespon')


def test_version(capsys):
    with pytest.raises(SystemExit) as excinfo:
        cmdline.main(['--version'])
    assert excinfo.value.code == 0
    assert capsys.readouterr().out.startswith('mahlerq ')


def test_no_command_prints_help(capsys):
    assert cmdline.main([]) == cmdline.EXIT_PASS
    assert 'measure' in capsys.readouterr().out


@pytest.mark.parametrize('argv', [
    ['verify', 'nope'],
    ['table2', '--subset', 'a,b'],
    ['measure'],
    ['measure', '2', '--report', 'out.txt'],
])
def test_usage_errors(argv):
    with pytest.raises(SystemExit) as excinfo:
        cmdline.main(argv)
    assert excinfo.value.code == cmdline.EXIT_USAGE


def test_invalid_values_are_usage_errors(capsys):
    assert cmdline.main(['measure', '2', '--tol', '-1']) == cmdline.EXIT_USAGE
    assert cmdline.main(['scan', '1', '0', '3']) == cmdline.EXIT_USAGE
    assert cmdline.main(['table2', '--subset', '30']) == cmdline.EXIT_USAGE
    assert 'mahlerq: error:' in capsys.readouterr().err


def test_missing_curve_table(tmp_path, capsys):
    status = cmdline.main(['measure', '2', '--curves', str(tmp_path / 'missing.csv')])
    assert status == cmdline.EXIT_NUMERICAL
    assert 'missing.csv' in capsys.readouterr().err


def test_measure_json(capsys):
    assert cmdline.main(['measure', '0', '--json']) == cmdline.EXIT_PASS
    report = RunReport.from_json(capsys.readouterr().out)
    assert report.command == 'measure'
    assert report.inputs['alpha'] == 0.0
    assert report.passed
    assert any(row.gating for row in report.results)


def test_measure_with_l_value(tmp_path, capsys):
    path = tmp_path / 'measure.md'
    assert cmdline.main(['measure', '2', '--report', str(path)]) == cmdline.EXIT_PASS
    out = capsys.readouterr().out
    assert "L'(19a3, 0)" in out
    assert out.rstrip().endswith('s')
    assert path.read_text(encoding='utf8').startswith('# mahlerq measure')


def test_scan_csv(tmp_path, capsys):
    path = tmp_path / 'scan.csv'
    assert cmdline.main(['scan', '3.5', '6', '3', '--out', str(path), '--quiet']) == cmdline.EXIT_PASS
    with open(path, newline='', encoding='utf8') as f:
        rows = list(csv.DictReader(f))
    assert [float(row['alpha']) for row in rows] == [3.5, 4.75, 6.0]
    assert all(row['I'] == '' and row['closed_form'] for row in rows)
    assert 'scan: 3/3 checks passed' in capsys.readouterr().out


def test_verify_b11(capsys):
    assert cmdline.main(['verify', 'b11', '--json']) == cmdline.EXIT_PASS
    data = json.loads(capsys.readouterr().out)
    assert data['command'] == 'verify b11'
    assert [row['pass'] for row in data['results']] == [True, None]


def test_verify_ypm():
    assert cmdline.main(['verify', 'ypm', '--quiet']) == cmdline.EXIT_PASS


def test_table2_single_row(capsys):
    assert cmdline.main(['table2', '--subset', '8', '--json']) == cmdline.EXIT_PASS
    report = RunReport.from_json(capsys.readouterr().out)
    assert report.inputs['k'] == [8]
    row, = report.results
    assert row.rhs == -3.0 and row.passed


def test_curves_listing(capsys):
    assert cmdline.main(['curves']) == cmdline.EXIT_PASS
    out = capsys.readouterr().out
    assert '19a3' in out and '11a3' in out
    assert 'curves:' in out


@pytest.mark.slow
@pytest.mark.parametrize('suite', ['hyper', 'naR', 'compd', 'gdi', 'dilog', 'modular19'])
def test_verify_suites(suite):
    assert cmdline.main(['verify', suite, '--quiet']) == cmdline.EXIT_PASS


def test_verify_table1(capsys):
    assert cmdline.main(['verify', 'table1', '--json']) == cmdline.EXIT_PASS
    report = RunReport.from_json(capsys.readouterr().out)
    names = [row.name for row in report.results]
    assert 'n~(3^(1/3)) = -2/3 n(-3)' in names
    info, = [row for row in report.results if not row.gating]
    assert info.name == 'n~(3^(1/3)) against -3/2 n(-3)'
    assert info.passed is None


def test_verify_all_combines_suites(monkeypatch, capsys):
    monkeypatch.setattr(suites, 'SUITES', {'b11': suites.suite_b11, 'ypm': suites.suite_ypm})
    assert cmdline.main(['verify', 'all', '--json', '--quiet']) == cmdline.EXIT_PASS
    report = RunReport.from_json(capsys.readouterr().out)
    assert report.command == 'verify all'
    assert any('11a3' in row.name for row in report.results)
    assert len(report.results) > 2


def test_failing_check_exits_1(monkeypatch, capsys):
    monkeypatch.setattr(mahler, 's_family_b11', lambda tol=1e-11: mahler.B11Result(0.0, 0.0, 0.0))
    assert cmdline.main(['verify', 'b11']) == cmdline.EXIT_CHECK_FAILED
    assert 'b11' in capsys.readouterr().out


@pytest.mark.parametrize('error, status', [
    (DomainError('outside'), cmdline.EXIT_USAGE),
    (ConvergenceError('no convergence'), cmdline.EXIT_NUMERICAL),
    (MahlerError('broken'), cmdline.EXIT_NUMERICAL),
])
def test_error_exit_codes(monkeypatch, capsys, error, status):
    def suite(config):
        raise error
    monkeypatch.setitem(suites.SUITES, 'b11', suite)
    assert cmdline.main(['verify', 'b11']) == status
    assert str(error) in capsys.readouterr().err


@pytest.mark.slow
def test_verify_all(capsys):
    assert cmdline.main(['verify', 'all', '--quiet']) == cmdline.EXIT_PASS
    assert 'verify all' in capsys.readouterr().out
