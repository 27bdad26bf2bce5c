# Copyright (c) 2026, the transseries authors
#
# All rights reserved.
#
# See the file "LICENCE" for information about the copyright
# and warranty status of this software.

'''The exponential field of transseries: total exp and log, powers and the
levels of the exponential tower.

A transseries is a series whose monomials are canonical TransMonomials.  Its
level is the largest exponential height among its monomials.
'''

from fractions import Fraction

import attr

from transseries.lib.analytic import binomial_germ, exp_bounded, log_unit, taylor_apply
from transseries.lib.constants import const_log, const_power, const_sign
from transseries.lib.errors import BudgetExhausted, IndeterminateSign, NotPositive
from transseries.lib.hahn import decompose
from transseries.lib.monomials import exp_monomial, log_monomial
from transseries.lib.series import (as_series, constant_series, scale,
                                    series_add, series_pow)


def exp_total(f, budget=None):
    '''exp(f) = exp(f_inf) * exp(c + e).

    The monomial exp(f_inf) is formed in canonical form, so exp of a
    logarithm of a monomial gives the monomial back.  The result records f
    as its logarithm.'''
    f = as_series(f)
    parts = decompose(f, budget)
    unit = exp_bounded(series_add(constant_series(parts.constant),
                                  parts.infinitesimal), budget)
    if parts.infinite.terms:
        result = scale(unit, 1, exp_monomial(parts.infinite.terms))
    else:
        # a fresh series, so that recording the logarithm stays local
        result = scale(unit, 1)
    result.logarithm = f
    return result


def _positive_lead(g, budget):
    try:
        lead = g.dominant_term(budget)
    except BudgetExhausted as e:
        raise IndeterminateSign(f'sign of the argument not found: {e}') from None
    if lead is None or const_sign(lead.coefficient) <= 0:
        raise NotPositive('the argument is not positive')
    return lead


def log_total(g, budget=None):
    '''log g = log d + log c + log(1 + e) for g = c d (1 + e) > 0.'''
    g = as_series(g)
    m, c = _positive_lead(g, budget)
    if g.logarithm is not None:
        return g.logarithm
    unit = scale(g, 1 / c, m.inverse())
    return series_add(series_add(log_monomial(m), constant_series(const_log(c))),
                      log_unit(unit, budget))


def power(f, r, budget=None):
    '''f**r for rational r; f must be positive unless r is an integer.'''
    f = as_series(f)
    r = Fraction(r)
    if r.denominator == 1:
        return series_pow(f, r.numerator, budget)
    m, c = _positive_lead(f, budget)
    epsilon = decompose(scale(f, 1 / c, m.inverse()), budget).infinitesimal
    return scale(taylor_apply(binomial_germ(r), epsilon, budget),
                 const_power(c, r), m ** r)


def level(f):
    '''The least n with f in the n-th field of the tower.'''
    return as_series(f).height


@attr.s(slots=True, frozen=True)
class ExtensionStep:
    '''The step from level n to n+1: K = A + B with A the purely infinite
    series of level n and B the bounded ones; exp(A) are the new monomials.'''
    level = attr.ib()

    def contains(self, f):
        return level(f) <= self.level

    def split(self, f, budget=None):
        '''Return (A-part, B-part) of f.'''
        if not self.contains(f):
            raise ValueError(f'series of level {level(f)} is not in level {self.level}')
        parts = decompose(f, budget)
        return parts.infinite, series_add(constant_series(parts.constant),
                                          parts.infinitesimal)

    def new_monomial(self, f, budget=None):
        '''The monomial exp(A) contributed by f; of level at most n+1.'''
        infinite, _bounded = self.split(f, budget)
        return exp_monomial(infinite.terms)


def extension_step(n):
    if n < 0:
        raise ValueError('tower levels start at 0')
    return ExtensionStep(n)
