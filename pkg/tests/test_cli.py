"""Tests for the command-line frontend"""

import json

import pytest

from main import run
from src.analysis import REPORT_FIELDS


@pytest.fixture(autouse=True)
def quiet_environment(monkeypatch):
    monkeypatch.delenv('LOGHESSE_LOG_LEVEL', raising=False)
    monkeypatch.delenv('LOGHESSE_FUZZ_WORKERS', raising=False)


def analyze_json(capsys, *argv):
    assert run(['analyze', '--format', 'json', *argv]) == 0
    return json.loads(capsys.readouterr().out)


def test_worked_example(capsys):
    report = analyze_json(capsys, '--vars', '2', 'x1*x2 + x1^2*x2^2')
    assert list(report) == list(REPORT_FIELDS)
    assert report['exponent_rank'] == 1 and report['k'] == 1
    assert report['reduced_polynomial'] == "x1^2 + x1"
    assert report['verified'] is True
    assert report['det_af_is_zero'] is True


def test_full_rank(capsys):
    report = analyze_json(capsys, '--vars', '2', 'x1 + x2')
    assert report['k'] == 0
    assert report['det_af_is_zero'] is False
    assert report['automorphism_rows'] == [[1, 0], [0, 1]]


def test_json_is_stable_apart_from_timing(capsys):
    first = analyze_json(capsys, '--vars', '3', 'x1*x2^-1 + 3/4*x2*x3^-1')
    second = analyze_json(capsys, '--vars', '3', 'x1*x2^-1 + 3/4*x2*x3^-1')
    first.pop('elapsed_ms')
    second.pop('elapsed_ms')
    assert json.dumps(first) == json.dumps(second)


def test_reduce_alias_and_text_output(capsys):
    assert run(['reduce', '--vars', '2', 'x1*x2^-1 + x2*x1^-1']) == 0
    out = capsys.readouterr().out
    assert "eliminable vars (k):  1" in out
    assert "certificate:          verified" in out


def test_parse_error_exit_code(capsys):
    assert run(['analyze', '--vars', '2', 'x1 +* x2']) == 2
    assert "offset 4" in capsys.readouterr().err


def test_expression_from_file(tmp_path, capsys):
    path = tmp_path / "f.txt"
    path.write_text("x1*x2\n")
    report = analyze_json(capsys, '--vars', '2', f'@{path}')
    assert report['k'] == 1


def test_missing_file(capsys):
    assert run(['analyze', '--vars', '2', '@/nonexistent/expr.txt']) == 2


def test_usage_errors(capsys):
    assert run(['analyze', 'x1']) == 2
    assert run(['hessian', '--vars', '2', '--log', '--classical', 'x1']) == 2
    assert run(['analyze', '--vars', '0', 'x1']) == 2


def test_hessian(capsys):
    assert run(['hessian', '--vars', '2', 'x1*x2']) == 0
    out = capsys.readouterr().out
    assert "[ x2  x1 ]" in out
    assert out.strip().endswith("det = 0")

    assert run(['hessian', '--vars', '2', '--classical', 'x1^2 + x2^2']) == 0
    assert "det = 4" in capsys.readouterr().out

    assert run(['hessian', '--vars', '2', '--symmetric', 'x1 + x2 + x1*x2']) == 0
    assert "det = x1^2*x2 + x1*x2^2 + x1*x2" in capsys.readouterr().out


def test_gauss(capsys):
    assert run(['gauss', '--vars', '2', '--at', '1,1', 'x1 + x2']) == 0
    assert capsys.readouterr().out.strip() == "(1 : 1)"
    assert run(['gauss', '--vars', '2', '--at', '3,1/2', 'x1 + 2*x2']) == 0
    assert capsys.readouterr().out.strip() == "(1 : 1/3)"


def test_gauss_errors(capsys):
    assert run(['gauss', '--vars', '2', '--at', '1,1', '5']) == 2
    assert run(['gauss', '--vars', '2', '--at', '0,1', 'x1']) == 2
    assert run(['gauss', '--vars', '2', '--at', '1.5,1', 'x1']) == 2


def test_fuzz_reproducible(capsys):
    argv = ['fuzz', '--vars', '2', '--terms', '4', '--seed', '9', '--count', '3', '--format', 'json']
    assert run(argv) == 0
    first = capsys.readouterr().out
    assert run(argv) == 0
    assert capsys.readouterr().out == first
    summaries = json.loads(first)
    assert [s['rank'] for s in summaries] == [0, 1, 2]
    assert all(s['failed'] == 0 for s in summaries)


def test_fuzz_single_rank_text(capsys):
    assert run(['fuzz', '--vars', '3', '--rank', '1', '--count', '2']) == 0
    assert "passed: 2/2" in capsys.readouterr().out


def test_fuzz_infeasible_rank(capsys):
    assert run(['fuzz', '--vars', '2', '--rank', '3']) == 2
