# Tests of cli/tss.py

import io
import sys

import pytest

from transseries.cli.tss import EXIT_ERROR, EXIT_INDETERMINATE, EXIT_OK, main
from transseries.lib.series import (default_budget, safety_cap,
                                    set_default_budget, set_safety_cap)


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ('BUDGET', 'DISPLAY_TERMS', 'SAFETY_CAP', 'CONSTANT_FIELD',
                 'LOG_LEVEL', 'LOG_FORMAT'):
        monkeypatch.delenv(name, raising=False)
    budget, cap = default_budget(), safety_cap()
    yield monkeypatch
    set_default_budget(budget)
    set_safety_cap(cap)


def test_eval(capsys):
    assert main(['eval', '1/(1-1/x)', '--terms', '3']) == EXIT_OK
    assert capsys.readouterr().out == '1 + x^-1 + x^-2 + o(x^-2)\n'


def test_eval_terms_from_environment(clean_env, capsys):
    clean_env.setenv('DISPLAY_TERMS', '2')
    assert main(['eval', '1/(1-1/x)']) == EXIT_OK
    assert capsys.readouterr().out == '1 + x^-1 + o(x^-1)\n'


def test_eval_field(capsys):
    assert main(['eval', 'exp(1 + 1/x)', '--terms', '2',
                 '--field', 'exprational']) == EXIT_OK
    assert capsys.readouterr().out == 'e + e*x^-1 + o(x^-1)\n'


def test_eval_error(capsys):
    assert main(['eval', 'y']) == EXIT_ERROR
    assert capsys.readouterr().err == 'error: unknown name "y" (in "y")\n'


def test_compare(capsys):
    assert main(['compare', 'exp(x)', 'x^1000']) == EXIT_OK
    assert capsys.readouterr().out == 'exp(x) ≻ x^1000 (Greater)\n'


def test_compare_indeterminate(capsys):
    assert main(['compare', '--budget', '1', 'exp(1/x)', '1 + 1/x']) \
        == EXIT_INDETERMINATE
    assert capsys.readouterr().out == 'exp(1/x) ? 1 + 1/x (Indeterminate)\n'


def test_bad_environment(clean_env, capsys):
    clean_env.setenv('BUDGET', '0')
    assert main(['eval', 'x']) == EXIT_ERROR
    assert 'bad environment' in capsys.readouterr().err


def test_repl(monkeypatch, capsys):
    monkeypatch.setattr(sys, 'stdin', io.StringIO('x^2\ncompare x, 1\n'))
    assert main(['repl', '--terms', '3']) == EXIT_OK
    assert capsys.readouterr().out == 'x^2\nx ≻ 1 (Greater)\n'


def test_repl_indeterminate(monkeypatch, capsys):
    lines = 'compare x, 1\nset budget 1\ncompare exp(1/x), 1 + 1/x\nquit\nx\n'
    monkeypatch.setattr(sys, 'stdin', io.StringIO(lines))
    assert main(['repl']) == EXIT_INDETERMINATE
    assert capsys.readouterr().out == (
        'x ≻ 1 (Greater)\nbudget 1\nexp(1/x) ? 1 + 1/x (Indeterminate)\n')


def test_version(capsys):
    with pytest.raises(SystemExit) as e:
        main(['--version'])
    assert e.value.code == 0
    assert capsys.readouterr().out.startswith('tss ')


@pytest.mark.slow
def test_axioms(capsys):
    assert main(['axioms']) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines == ['axioms: 118 passed, 0 failed, 0 indeterminate']
