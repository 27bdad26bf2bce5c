# Copyright (c) 2026, the transseries authors
#
# All rights reserved.
#
# See the file "LICENCE" for information about the copyright
# and warranty status of this software.

'''Eventual comparison and limits of germs at infinity, and the executable
axiom suite for the exponential field.'''

from enum import Enum
from fractions import Fraction

import attr

from transseries.lib import text
from transseries.lib.analytic import RESTRICTED_EXP, restricted_apply
from transseries.lib.constants import EXP_RATIONAL, const_exp, const_sign, use_field
from transseries.lib.errors import (BudgetExhausted, IndeterminateCubeMembership,
                                    IndeterminatePivot, IndeterminateSign,
                                    TransseriesError)
from transseries.lib.hahn import (Verdict, agree_up_to, decompose,
                                  series_cmp_abs, series_compare, series_sign)
from transseries.lib.monomials import ell, x_power
from transseries.lib.series import (ONE, ZERO, as_series, from_terms, scale,
                                    series_add, series_mul, series_sub)
from transseries.lib.tower import exp_total as kernel_exp, log_total, power
from transseries.lib.util import class_logger


def eventual_compare(f, g, budget=None):
    '''Order of the germs of f and g at infinity.'''
    return series_compare(f, g, budget)


@attr.s(slots=True, frozen=True)
class Limit:
    '''kind is one of "finite", "+inf", "-inf" and "indeterminate"; value is
    the constant for finite limits.'''
    kind = attr.ib()
    value = attr.ib(default=None)

    @property
    def is_finite(self):
        return self.kind == 'finite'


def limit_at_infinity(f, budget=None):
    try:
        parts = decompose(as_series(f), budget)
    except BudgetExhausted:
        return Limit('indeterminate')
    if parts.infinite.terms:
        sign = const_sign(parts.infinite.terms[0].coefficient)
        return Limit('+inf' if sign > 0 else '-inf')
    return Limit('finite', parts.constant)


# The axiom suite

class Status(Enum):
    PASS = 'PASS'
    FAIL = 'FAIL'
    INDETERMINATE = 'INDETERMINATE'


@attr.s(slots=True, frozen=True)
class AxiomCheck:
    axiom = attr.ib()
    label = attr.ib()
    status = attr.ib()
    witness = attr.ib(default='')


@attr.s(slots=True, frozen=True)
class AxiomReport:
    checks = attr.ib(converter=tuple)

    def count(self, status):
        return sum(check.status is status for check in self.checks)

    @property
    def passed(self):
        return self.count(Status.PASS)

    @property
    def failed(self):
        return self.count(Status.FAIL)

    @property
    def indeterminate(self):
        return self.count(Status.INDETERMINATE)

    def failures(self):
        return [check for check in self.checks if check.status is Status.FAIL]

    def summary(self):
        return (f'axioms: {self.passed} passed, {self.failed} failed, '
                f'{self.indeterminate} indeterminate')


# Errors that mean an instance could not be decided within the budget
UNDECIDED = (BudgetExhausted, IndeterminateCubeMembership, IndeterminatePivot,
             IndeterminateSign)

AGREEMENT_DEPTH = 20
E4_MAX_N = 10

x = as_series(x_power(1))
l1 = as_series(ell(1))


def _x(r):
    return as_series(x_power(r))


def bounded_samples():
    '''Twenty bounded series c + e with -1 <= c <= 1 and e infinitesimal.'''
    samples = []
    for k in range(20):
        c = Fraction(k - 9, 10)
        epsilon = from_terms([(x_power(-1), Fraction((-1) ** k, k + 1)),
                              (x_power(-2), Fraction(k, 7))])
        samples.append(series_add(as_series(c), epsilon))
    return samples


class AxiomSuite:
    '''Instances of the exponential field axioms, checked to a budget.

    exp is the exponential under test; the constant field is exprational
    for the duration of a run.'''

    logger = class_logger(__name__, 'AxiomSuite')

    def __init__(self, budget=None, exp=kernel_exp):
        self.budget = budget
        self.exp = exp
        self.checks = []

    def run(self):
        with use_field(EXP_RATIONAL):
            self.homomorphism()
            self.monotonicity()
            self.surjectivity()
            self.dominates_powers()
            self.restricted_exp()
            self.exp_above_tangent()
            self.exp_at_least_one()
            self.log_laws()
        return AxiomReport(self.checks)

    def check(self, axiom, label, compute, accepted=(Verdict.EQUAL, )):
        '''Record an instance.  compute() returns (verdict, witness) where
        witness is a series shown when the verdict is not accepted.'''
        try:
            verdict, witness = compute()
        except UNDECIDED as e:
            self.logger.debug(f'{axiom} {label}: {e}')
            status, detail = Status.INDETERMINATE, str(e)
        except TransseriesError as e:
            status, detail = Status.FAIL, f'error: {e}'
        else:
            detail = ''
            if verdict in accepted:
                status = Status.PASS
            elif not verdict.determinate:
                status = Status.INDETERMINATE
            else:
                status = Status.FAIL
                detail = f'got {verdict.value}'
                if witness is not None:
                    detail += f', difference {self.show(witness)}'
        if status is Status.FAIL:
            self.logger.info(f'{axiom} {label} failed: {detail}')
        self.checks.append(AxiomCheck(axiom, label, status,
                                      '' if status is Status.PASS else detail))

    def show(self, f):
        try:
            return text.safe_series_string(f, 3, self.budget)
        except TransseriesError:
            return '?'

    def agree(self, f, g):
        difference = series_sub(f, g)
        return agree_up_to(f, g, AGREEMENT_DEPTH, self.budget), difference

    # The instances

    def homomorphism(self):
        '''exp(f + g) = exp(f) exp(g), and exp(c + f) = e^c exp(f).'''
        pairs = [(x, l1), (_x(2) + x, x), (x, _x(-1)), (l1, _x(-1) + _x(-2)),
                 (_x(-1), _x(-2))]
        for f, g in pairs:
            label = f'exp({_s(f)} + {_s(g)}) = exp({_s(f)})*exp({_s(g)})'
            self.check('E1', label, lambda f=f, g=g: self.agree(
                self.exp(series_add(f, g), self.budget),
                series_mul(self.exp(f, self.budget), self.exp(g, self.budget))))
        for c in (Fraction(1), Fraction(-1, 2), Fraction(2)):
            for f in (x, _x(-1)):
                e_c = const_exp(c)
                label = (f'exp({text.constant_string(c)} + {_s(f)}) = '
                         f'{text.constant_string(e_c)}*exp({_s(f)})')
                self.check('E1', label, lambda c=c, f=f, e_c=e_c: self.agree(
                    self.exp(series_add(as_series(c), f), self.budget),
                    scale(self.exp(f, self.budget), e_c)))

    def monotonicity(self):
        '''f < g implies exp(f) < exp(g).'''
        pairs = [(ZERO, _x(-1)), (l1, x), (x, x + _x(-1)), (x, _x(2)),
                 (-x, _x(-1))]
        for f, g in pairs:
            def compute(f=f, g=g):
                premise = series_compare(f, g, self.budget)
                if premise is not Verdict.LESS:
                    return premise, None
                a, b = self.exp(f, self.budget), self.exp(g, self.budget)
                return series_compare(a, b, self.budget), series_sub(a, b)
            self.check('E2', f'exp({_s(f)}) < exp({_s(g)})', compute,
                       accepted=(Verdict.LESS, ))

    def surjectivity(self):
        '''exp(log g) = g for positive g.'''
        for g in (x, _x(2) + x, ONE + _x(-1), scale(x, const_exp(1))):
            self.check('E3', f'exp(log({_s(g)})) = {_s(g)}', lambda g=g: self.agree(
                self.exp(log_total(g, self.budget), self.budget), g))

    def dominates_powers(self):
        '''exp(f) > f^n whenever f > n^2.'''
        for n in range(1, E4_MAX_N + 1):
            for f in (x, _x(2) + x):
                def compute(f=f, n=n):
                    a, b = self.exp(f, self.budget), power(f, n, self.budget)
                    verdicts = (series_compare(a, b, self.budget),
                                series_cmp_abs(a, b, self.budget))
                    for verdict in verdicts:
                        if not verdict.determinate:
                            return verdict, None
                    for verdict in verdicts:
                        if verdict is not Verdict.GREATER:
                            return verdict, series_sub(a, b)
                    return Verdict.GREATER, None
                self.check('E4', f'exp({_s(f)}) > ({_s(f)})^{n}', compute,
                           accepted=(Verdict.GREATER, ))
        for n in range(1, E4_MAX_N + 1):
            f = series_add(as_series(n * n + 1), _x(-1))

            def compute(f=f, n=n):
                a, b = self.exp(f, self.budget), power(f, n, self.budget)
                return series_compare(a, b, self.budget), series_sub(a, b)
            self.check('E4', f'exp({_s(f)}) > ({_s(f)})^{n}', compute,
                       accepted=(Verdict.GREATER, ))

    def restricted_exp(self):
        '''The restricted exponential agrees with exp on [-1, 1].'''
        for f in bounded_samples():
            self.check('E5', f'e({_s(f)}) = exp({_s(f)})', lambda f=f: self.agree(
                restricted_apply(RESTRICTED_EXP, [f], self.budget),
                self.exp(f, self.budget)))

    def exp_above_tangent(self):
        for f in bounded_samples():
            def compute(f=f):
                a, b = self.exp(f, self.budget), series_add(ONE, f)
                return series_compare(a, b, self.budget), series_sub(a, b)
            self.check('EXP', f'exp({_s(f)}) >= 1 + {_s(f)}', compute,
                       accepted=(Verdict.GREATER, Verdict.EQUAL))

    def exp_at_least_one(self):
        for f in bounded_samples():
            def compute(f=f):
                a = self.exp(f, self.budget)
                left = series_compare(a, ONE, self.budget)
                right = series_sign(f, self.budget)
                if not (left.determinate and right.determinate):
                    return Verdict.INDETERMINATE, None
                agree = (left.sign >= 0) == (right.sign >= 0)
                return (Verdict.EQUAL if agree else Verdict.LESS), series_sub(a, ONE)
            self.check('EXP', f'exp({_s(f)}) >= 1 iff {_s(f)} >= 0', compute)

    def log_laws(self):
        '''log(gh) = log g + log h, and log(exp f) = f.'''
        positives = [x, _x(2) + x, ONE + _x(-1)]
        for i, g in enumerate(positives):
            for h in positives[i + 1:]:
                label = f'log(({_s(g)})*({_s(h)})) = log({_s(g)}) + log({_s(h)})'
                self.check('LOG', label, lambda g=g, h=h: self.agree(
                    log_total(series_mul(g, h), self.budget),
                    series_add(log_total(g, self.budget),
                               log_total(h, self.budget))))
        for f in (x, _x(2) + x, l1, x + l1, x + _x(-1)):
            def compute(f=f):
                # without the recorded logarithm
                untagged = scale(self.exp(f, self.budget), 1)
                return self.agree(log_total(untagged, self.budget), f)
            self.check('LOG', f'log(exp({_s(f)})) = {_s(f)}', compute)


def _s(f):
    return text.series_string(f)


def axiom_suite(budget=None, exp_total=kernel_exp):
    '''Run every axiom instance and return an AxiomReport.

    exp_total may be replaced to check an alternative exponential.'''
    return AxiomSuite(budget, exp_total).run()
