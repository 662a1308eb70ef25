#
# Copyright (c) 2023 Samuel J. McKelvie
#
# MIT License - See LICENSE file accompanying this package.
#

"""Tests for the fibercover command-line tool"""

import json

import pytest

from fibercover import __version__
from fibercover.__main__ import run

@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ('FIBERCOVER_CONFIG_FILE', 'FIBERCOVER_DEGREE_CAP', 'FIBERCOVER_INDEX_CAP', 'FIBERCOVER_NODE_BUDGET'):
        monkeypatch.delenv(name, raising=False)

def test_version(capsys):
    assert run(['version']) == 0
    assert capsys.readouterr().out.strip() == __version__

def test_no_command(capsys):
    assert run([]) == 1

def test_missing_argument_exits_2(capsys):
    assert run(['certify', '--word', 'Dx Dy']) == 2

def test_snf(capsys):
    assert run(['snf', '[[2, 0], [0, 3]]']) == 0
    data = json.loads(capsys.readouterr().out)
    assert data['diagonal'] == [1, 6]
    assert data['rank'] == 2
    assert data['torsion'] == [6]

@pytest.mark.parametrize("matrix", ['[[1, 2], [3]]', '"abc"', 'not json', '[]', '[[1.5]]'])
def test_snf_invalid_matrix_exits_2(capsys, matrix):
    assert run(['snf', matrix]) == 2
    assert 'fibercover: error:' in capsys.readouterr().err

def test_certify_bad_word_exits_2(capsys):
    assert run(['certify', '--word', 'Dz^2', '--mu', '1', '--lambda', '1']) == 2
    assert 'fibercover: error:' in capsys.readouterr().err

def test_certify_bad_slope_exits_2(capsys):
    assert run(['certify', '--word', 'Dx Dy', '--mu', '2', '--lambda', '4']) == 2

def test_certify_out_then_verify(capsys, tmp_path):
    out = tmp_path / 'cert.json'
    rc = run(['certify', '--word', 'Dx Dy^4', '--mu', '0', '--lambda', '1', '--index-cap', '0', '--out', str(out)])
    assert rc == 0
    cert = json.loads(out.read_text())
    assert cert['status'] == 'certified'
    assert cert['case'] == 'trivial'
    assert [p.name for p in tmp_path.iterdir()] == ['cert.json']

    assert run(['verify', str(out)]) == 0
    results = json.loads(capsys.readouterr().out)
    assert results[0]['verified'] is True

    cert['b1'] += 1
    tampered = tmp_path / 'tampered.json'
    tampered.write_text(json.dumps(cert))
    assert run(['verify', str(tampered)]) == 1

def test_verify_malformed_exits_2(tmp_path):
    bad = tmp_path / 'bad.json'
    bad.write_text('{"schema": "something-else"}')
    assert run(['verify', str(bad)]) == 2
    bad.write_text('{not json')
    assert run(['verify', str(bad)]) == 2

def test_certify_csv(capsys):
    assert run(['certify', '--word', 'Dx Dy', '--mu', '1', '--lambda', '1', '--index-cap', '0', '--format', 'csv']) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == 'word,mu,lambda,status,case,degree,b1'
    assert lines[1] == 'Dx Dy,1,1,hypothesis-fails,,,'

def test_scan_csv(capsys):
    assert run(['scan', '--word', 'Dx Dy', '--window', '1', '--index-cap', '0', '--format', 'csv']) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 5
    assert lines[1].startswith('Dx Dy,0,1,certified,trivial,1,')

def test_scan_json_summary(capsys):
    assert run(['scan', '--word', 'Dx Dy', '--window', '1', '--index-cap', '0']) == 0
    data = json.loads(capsys.readouterr().out)
    assert data['window'] == 1
    assert sum(data['summary'].values()) == len(data['certificates']) == 4

def test_scan_rejects_window_zero():
    assert run(['scan', '--word', 'Dx Dy', '--window', '0']) == 2

def test_exceptions_fig8(capsys):
    assert run(['exceptions', 'fig8', '--window', '10']) == 0
    data = json.loads(capsys.readouterr().out)
    slopes = {(s['mu'], s['lambda']) for s in data['slopes']}
    assert slopes == {(3, 1), (-3, -1), (-3, 1), (3, -1)}

def test_exceptions_pell(capsys):
    assert run(['exceptions', 'pell', '--window', '3']) == 0
    data = json.loads(capsys.readouterr().out)
    for s in data['slopes']:
        mu, lam = s['mu'], s['lambda']
        assert (mu + 2 * lam) ** 2 - 2 * lam * lam == 1

def test_quotient(capsys):
    assert run(['quotient', '2', '3', '4']) == 0
    data = json.loads(capsys.readouterr().out)
    assert [o['order'] for o in data['orders']] == [2, 3, 4]
