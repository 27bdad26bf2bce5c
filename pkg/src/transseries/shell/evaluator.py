# Copyright (c) 2026, the transseries authors
#
# All rights reserved.
#
# See the file "LICENCE" for information about the copyright
# and warranty status of this software.

'''Fold expression trees into transseries.'''

import re
from fractions import Fraction

from transseries.lib.analytic import GERMS, taylor_apply
from transseries.lib.constants import const_exp
from transseries.lib.errors import TransseriesError
from transseries.lib.monomials import ONE as M_ONE, ell
from transseries.lib.series import (FiniteSeries, as_series, constant_series,
                                    series_add, series_div, series_mul,
                                    series_neg, series_sub)
from transseries.lib.tower import exp_total, log_total, power
from transseries.shell.parser import BinaryOp, Call, Name, Negate, Number, parse


class EvaluationError(Exception):
    '''A kernel error raised while evaluating the sub-expression at span.'''

    def __init__(self, message, span, text=None):
        super().__init__(message)
        self.message = message
        self.span = span
        self.text = text

    @property
    def fragment(self):
        if self.text is None:
            return None
        return self.text[self.span[0]:self.span[1]]

    def __str__(self):
        fragment = self.fragment
        if fragment is None:
            return self.message
        return f'{self.message} (in "{fragment}")'


LOG_NAME = re.compile(r'l(\d+)$')


def constant_value(f):
    '''The constant that f is, or None if f is not a constant.'''
    if not isinstance(f, FiniteSeries) or len(f) > 1:
        return None
    if not f.terms:
        return Fraction(0)
    m, c = f.terms[0]
    return c if m == M_ONE else None


class Evaluator:
    '''Evaluates expression trees with a budget for the lazy operations.'''

    def __init__(self, budget=None):
        self.budget = budget
        self.handlers = {
            Number: self.number,
            Name: self.name,
            Negate: self.negate,
            BinaryOp: self.binary_op,
            Call: self.call,
        }
        self.functions = {
            'exp': lambda g: exp_total(g, self.budget),
            'log': lambda g: log_total(g, self.budget),
        }
        for name, germ in GERMS.items():
            self.functions.setdefault(name, self.germ_function(germ))

    def germ_function(self, germ):
        return lambda g: taylor_apply(germ, g, self.budget)

    def evaluate(self, node, text=None):
        try:
            return self.visit(node)
        except EvaluationError as e:
            e.text = text
            raise

    def visit(self, node):
        return self.handlers[node.__class__](node)

    def kernel(self, node, func, *args):
        '''Apply func, attributing kernel errors to node.'''
        try:
            return func(*args)
        except (TransseriesError, ValueError) as e:
            raise EvaluationError(str(e), node.span) from e

    def number(self, node):
        return constant_series(node.value)

    def name(self, node):
        if node.name == 'x':
            return as_series(ell(0))
        if node.name == 'e':
            return self.kernel(node, lambda: constant_series(const_exp(1)))
        match = LOG_NAME.match(node.name)
        if match:
            return as_series(ell(int(match.group(1))))
        raise EvaluationError(f'unknown name "{node.name}"', node.span)

    def negate(self, node):
        return series_neg(self.visit(node.operand))

    def binary_op(self, node):
        left, right = self.visit(node.left), self.visit(node.right)
        if node.op == '+':
            return series_add(left, right)
        if node.op == '-':
            return series_sub(left, right)
        if node.op == '*':
            return series_mul(left, right)
        if node.op == '/':
            return self.kernel(node, series_div, left, right, self.budget)
        return self.kernel(node, self.raise_power, left, right)

    def raise_power(self, base, exponent):
        r = constant_value(exponent)
        if isinstance(r, Fraction):
            return power(base, r, self.budget)
        # f^g = exp(g log f)
        return exp_total(series_mul(exponent, log_total(base, self.budget)),
                         self.budget)

    def call(self, node):
        func = self.functions.get(node.function)
        if func is None:
            raise EvaluationError(f'unknown function "{node.function}"', node.span)
        if len(node.args) != 1:
            raise EvaluationError(f'{node.function} takes one argument, '
                                  f'not {len(node.args)}', node.span)
        arg = self.visit(node.args[0])
        return self.kernel(node, func, arg)


def evaluate(node, budget=None, text=None):
    '''Evaluate an expression tree; raises EvaluationError.'''
    return Evaluator(budget).evaluate(node, text)


def evaluate_text(text, budget=None):
    '''Parse and evaluate text; raises ParseError or EvaluationError.'''
    return evaluate(parse(text), budget, text)
