# Copyright (c) 2026, the transseries authors
#
# All rights reserved.
#
# See the file "LICENCE" for information about the copyright
# and warranty status of this software.

'''The REPL command session.'''

import re
import sys

from transseries.lib import text
from transseries.lib.asymptotics import axiom_suite, eventual_compare, limit_at_infinity
from transseries.lib.constants import lookup_field, use_field
from transseries.lib.errors import TransseriesError
from transseries.lib.hahn import Verdict, decompose
from transseries.lib.series import INDETERMINATE, ZERO_SERIES, Budget, dominant_monomial
from transseries.lib.util import class_logger
from transseries.shell.evaluator import EvaluationError, evaluate_text
from transseries.shell.parser import ParseError


class CommandError(Exception):
    '''Bad use of a REPL command.'''


def split_top_level(line, separator=','):
    '''Split line at the first separator outside parentheses, or return
    None.'''
    depth = 0
    for pos, char in enumerate(line):
        if char == '(':
            depth += 1
        elif char == ')':
            depth -= 1
        elif char == separator and depth == 0:
            return line[:pos], line[pos + 1:]
    return None


TRAILING_COUNT = re.compile(r'^(.*\S)\s+(\d+)$')


class Session:
    '''A REPL session: settings and a name-to-handler table of commands.

    execute() runs one input line and returns the output lines.  Kernel
    errors are reported as "error: <message>" lines and never end the
    session.  indeterminate counts the lines whose answer was Indeterminate.'''

    PROMPT = 'tss> '

    def __init__(self, budget=64, terms=10, field='rational'):
        self.logger = class_logger(__name__, self.__class__.__name__)
        self.budget = Budget(budget)
        self.terms = terms
        self.field = lookup_field(field) if isinstance(field, str) else field
        self.last_verdict = None
        self.indeterminate = 0
        cmds = 'expand compare limit dominant decompose axioms set help'.split()
        self.command_handlers = {cmd: getattr(self, 'cmd_' + cmd) for cmd in cmds}
        self.set_handlers = {
            'budget': self.set_budget,
            'terms': self.set_terms,
            'field': self.set_field,
        }

    # Dispatch

    def execute(self, line):
        line = line.strip()
        if not line or line.startswith('#'):
            return []
        verb, _, rest = line.partition(' ')
        handler = self.command_handlers.get(verb)
        if handler is None:
            handler, rest = self.cmd_expand, line
        self.last_verdict = None
        try:
            with use_field(self.field):
                lines = list(handler(rest.strip()))
        except (ParseError, EvaluationError, TransseriesError, CommandError) as e:
            self.logger.debug(f'{line}: {e!r}')
            return [f'error: {e}']
        if self.last_verdict is Verdict.INDETERMINATE:
            self.indeterminate += 1
        return lines

    def run(self, infile=None, outfile=None):
        '''Read commands until end of input; return the indeterminate count.'''
        infile = infile or sys.stdin
        outfile = outfile or sys.stdout
        interactive = infile.isatty()
        while True:
            if interactive:
                outfile.write(self.PROMPT)
                outfile.flush()
            line = infile.readline()
            if not line:
                break
            if line.strip() in ('quit', 'exit'):
                break
            for output in self.execute(line):
                print(output, file=outfile)
        return self.indeterminate

    def evaluate(self, expr):
        expr = expr.strip()
        if not expr:
            raise CommandError('an expression is required')
        return evaluate_text(expr, self.budget)

    def show(self, f, terms=None):
        return text.safe_series_string(f, self.terms if terms is None else terms,
                                       self.budget)

    # Commands

    def cmd_expand(self, rest):
        '''expand <expr> [k]: the first k terms of expr.'''
        terms = None
        match = TRAILING_COUNT.match(rest)
        if match:
            try:
                f = self.evaluate(match.group(1))
            except ParseError:
                f = self.evaluate(rest)
            else:
                terms = int(match.group(2))
        else:
            f = self.evaluate(rest)
        yield self.show(f, terms)

    def cmd_compare(self, rest):
        '''compare <e1>, <e2>: eventual order at infinity.'''
        parts = split_top_level(rest)
        if parts is None:
            raise CommandError('usage: compare <e1>, <e2>')
        left, right = (part.strip() for part in parts)
        verdict = eventual_compare(self.evaluate(left), self.evaluate(right),
                                   self.budget)
        self.last_verdict = verdict
        yield text.verdict_line(left, right, verdict)

    def cmd_limit(self, rest):
        '''limit <expr>: the limit at infinity.'''
        limit = limit_at_infinity(self.evaluate(rest), self.budget)
        if limit.kind == 'indeterminate':
            self.last_verdict = Verdict.INDETERMINATE
        yield text.limit_string(limit)

    def cmd_dominant(self, rest):
        '''dominant <expr>: the dominant monomial.'''
        m = dominant_monomial(self.evaluate(rest), self.budget)
        if m is ZERO_SERIES:
            yield '0'
        elif m is INDETERMINATE:
            self.last_verdict = Verdict.INDETERMINATE
            yield 'indeterminate'
        else:
            yield text.monomial_string(m)

    def cmd_decompose(self, rest):
        '''decompose <expr>: (infinite part, constant, infinitesimal part).'''
        parts = decompose(self.evaluate(rest), self.budget)
        yield text.decomposition_string(parts, self.terms, self.budget)

    def cmd_axioms(self, rest):
        '''axioms [verbose]: run the axiom suite.'''
        if rest not in ('', 'verbose'):
            raise CommandError('usage: axioms [verbose]')
        report = axiom_suite(self.budget)
        if report.indeterminate:
            self.last_verdict = Verdict.INDETERMINATE
        yield from text.axiom_lines(report, verbose=bool(rest))

    def cmd_set(self, rest):
        '''set budget <n> | set terms <n> | set field <rational|exprational>'''
        if not rest:
            yield (f'budget {self.budget.max_terms}, terms {self.terms}, '
                   f'field {self.field.name}')
            return
        name, _, value = rest.partition(' ')
        handler = self.set_handlers.get(name)
        if handler is None or not value.strip():
            raise CommandError(f'usage: {self.cmd_set.__doc__}')
        yield handler(value.strip())

    def cmd_help(self, rest):
        '''help: list the commands.'''
        for handler in self.command_handlers.values():
            yield handler.__doc__

    # Settings

    def _count(self, value, minimum):
        try:
            count = int(value)
        except ValueError:
            raise CommandError(f'not an integer: {value}') from None
        if count < minimum:
            raise CommandError(f'must be at least {minimum}: {value}')
        return count

    def set_budget(self, value):
        self.budget = Budget(self._count(value, 1))
        return f'budget {self.budget.max_terms}'

    def set_terms(self, value):
        self.terms = self._count(value, 0)
        return f'terms {self.terms}'

    def set_field(self, value):
        try:
            self.field = lookup_field(value)
        except ValueError as e:
            raise CommandError(str(e)) from None
        return f'field {self.field.name}'
