import io

import pytest

from transseries.lib.constants import EXP_RATIONAL, RATIONAL, active_field
from transseries.lib.hahn import Verdict
from transseries.lib.series import Budget
from transseries.shell.session import Session, split_top_level


class TtyInput(io.StringIO):

    def isatty(self):
        return True


@pytest.fixture
def session():
    return Session()


def test_split_top_level():
    assert split_top_level('a, b') == ('a', ' b')
    assert split_top_level('f(a, b), c') == ('f(a, b)', ' c')
    assert split_top_level('f(a, b)') is None
    assert split_top_level('a, b, c') == ('a', ' b, c')


def test_settings():
    session = Session(budget=8, terms=2, field='exprational')
    assert session.budget == Budget(8)
    assert session.terms == 2
    assert session.field is EXP_RATIONAL


def test_expand(session):
    assert session.execute('expand 1/(1-1/x) 2') == ['1 + x^-1 + o(x^-1)']
    assert session.execute('1/(1-1/x) 2') == ['1 + x^-1 + o(x^-1)']
    assert session.execute('expand x + 3') == ['x + 3']
    assert session.execute('x + 3') == ['x + 3']


def test_blank_and_comments(session):
    assert session.execute('') == []
    assert session.execute('   ') == []
    assert session.execute('# compare x, x') == []


def test_compare_sets_last_verdict(session):
    assert session.execute('compare exp(x), x^1000') == [
        'exp(x) ≻ x^1000 (Greater)']
    assert session.last_verdict is Verdict.GREATER
    session.execute('set budget 1')
    assert session.execute('compare exp(1/x), 1 + 1/x') == [
        'exp(1/x) ? 1 + 1/x (Indeterminate)']
    assert session.last_verdict is Verdict.INDETERMINATE
    session.execute('x')
    assert session.last_verdict is None


def test_run_counts_indeterminate_answers(session):
    out = io.StringIO()
    lines = ('set budget 1\ncompare exp(1/x), 1 + 1/x\nlimit x\n'
             'dominant exp(1/x) - 1 - 1/x\n')
    assert session.run(io.StringIO(lines), out) == 2
    assert session.indeterminate == 2
    assert out.getvalue().splitlines()[1] == 'exp(1/x) ? 1 + 1/x (Indeterminate)'
    assert Session().run(io.StringIO('compare x, 1\nlimit 1/x\n'), io.StringIO()) == 0


def test_field_is_local_to_the_session(session):
    assert session.execute('e') == [
        'error: the rational constant field has no exp at 1; '
        'try the exprational field (in "e")']
    assert session.execute('set field exprational') == ['field exprational']
    assert session.execute('e*x') == ['e*x']
    assert active_field() is RATIONAL


def test_errors_do_not_end_the_session(session):
    assert session.execute('log(-x)') == [
        'error: the argument is not positive (in "log(-x)")']
    assert session.execute('x^2') == ['x^2']


def test_help_lists_every_command(session):
    lines = session.execute('help')
    assert len(lines) == len(session.command_handlers)
    assert lines[0].startswith('expand <expr>')


def test_run():
    infile = io.StringIO('x + 1\n\ncompare x, l1\nquit\nx\n')
    outfile = io.StringIO()
    Session().run(infile, outfile)
    assert outfile.getvalue() == 'x + 1\nx ≻ l1 (Greater)\n'


def test_run_prompts_on_a_terminal():
    outfile = io.StringIO()
    Session().run(TtyInput('x\n'), outfile)
    assert outfile.getvalue() == 'tss> x\ntss> '
