# Copyright (c) 2026, the transseries authors
#
# All rights reserved.
#
# See the file "LICENCE" for information about the copyright
# and warranty status of this software.

'''Taylor extension of analytic germs to bounded series.

A germ enters as a coefficient oracle (c, n) -> f^(n)(c)/n! on an open
interval.  Applying it to g = c + e with e infinitesimal gives the series
sum over n of oracle(c, n) * e**n.
'''

from fractions import Fraction

import attr

from transseries.lib.constants import (ONE as C_ONE, ZERO as C_ZERO,
                                       active_field, const_exp, const_log,
                                       const_power, const_sign)
from transseries.lib.errors import (ArgumentNotBounded, BudgetExhausted,
                                    ConstantCapabilityMissing,
                                    ConstantOutsideDomain,
                                    IndeterminateCubeMembership,
                                    IndeterminateSign, NotPositiveUnit)
from transseries.lib.hahn import Verdict, decompose, series_sign
from transseries.lib.monomials import ONE as M_ONE
from transseries.lib.series import (ZERO, as_series, constant_series,
                                    power_sum, series_add, series_sub)
from transseries.lib.util import binomial, inverse_factorial


@attr.s(slots=True, frozen=True)
class AnalyticGerm:
    '''A real-analytic function on the open interval (lower, upper), None
    standing for an infinite endpoint.  degree is set for polynomials.'''
    name = attr.ib()
    oracle = attr.ib()
    lower = attr.ib(default=None)
    upper = attr.ib(default=None)
    degree = attr.ib(default=None)

    def contains(self, c):
        if self.lower is not None and const_sign(c - self.lower) <= 0:
            return False
        return self.upper is None or const_sign(self.upper - c) > 0

    def coefficient(self, c, n):
        return self.oracle(c, n)


def _exp_oracle(c, n):
    return const_exp(c) * inverse_factorial(n)


def _log1p_oracle(c, n):
    if n == 0:
        return const_log(1 + c)
    sign = 1 if n % 2 else -1
    return Fraction(sign, n) / (1 + c) ** n


def _geometric_oracle(c, n):
    return 1 / (1 - c) ** (n + 1)


def _at_zero(name, c):
    if c != 0:
        raise ConstantCapabilityMissing(
            f'{name} is only expanded at 0 in the {active_field().name} field')


def _sin_oracle(c, n):
    _at_zero('sin', c)
    if n % 2 == 0:
        return C_ZERO
    return (-1) ** (n // 2) * inverse_factorial(n)


def _cos_oracle(c, n):
    _at_zero('cos', c)
    if n % 2:
        return C_ZERO
    return (-1) ** (n // 2) * inverse_factorial(n)


def _identity_oracle(c, n):
    return (c, C_ONE)[n] if n < 2 else C_ZERO


EXP = AnalyticGerm('exp', _exp_oracle)
LOG1P = AnalyticGerm('log1p', _log1p_oracle, lower=-C_ONE)
GEOMETRIC = AnalyticGerm('geom', _geometric_oracle, upper=C_ONE)
SIN = AnalyticGerm('sin', _sin_oracle)
COS = AnalyticGerm('cos', _cos_oracle)
IDENTITY = AnalyticGerm('identity', _identity_oracle, degree=1)

GERMS = {germ.name: germ for germ in (EXP, LOG1P, GEOMETRIC, SIN, COS, IDENTITY)}


def binomial_germ(r):
    '''(1 + t)**r for rational r.'''
    r = Fraction(r)

    def oracle(c, n):
        coefficient = binomial(r, n)
        if coefficient == 0:
            return C_ZERO
        return coefficient * const_power(1 + c, r - n)

    degree = int(r) if r.denominator == 1 and r >= 0 else None
    return AnalyticGerm(f'binomial({r})', oracle, lower=-C_ONE, degree=degree)


def _bounded_split(g, budget):
    parts = decompose(g, budget)
    if parts.infinite.terms:
        raise ArgumentNotBounded('the argument has a nonzero infinite part')
    return parts.constant, parts.infinitesimal


def taylor_apply(f, g, budget=None):
    '''f(c + e) = sum oracle(c, n) e**n for bounded g = c + e.'''
    c, epsilon = _bounded_split(as_series(g), budget)
    if not f.contains(c):
        raise ConstantOutsideDomain(f'{c} lies outside the domain of {f.name}')
    return power_sum(lambda alpha: f.coefficient(c, alpha[0]), [epsilon],
                     degree=f.degree, budget=budget)


def exp_bounded(g, budget=None):
    '''e**c * sum e**n/n! for bounded g = c + e.'''
    return taylor_apply(EXP, g, budget)


def log_unit(g, budget=None):
    '''log c + log(1 + e) for a positive unit g = c (1 + e).'''
    g = as_series(g)
    try:
        lead = g.dominant_term(budget)
    except BudgetExhausted as e:
        raise IndeterminateSign(f'sign of the argument not found: {e}') from None
    if (lead is None or lead.monomial != M_ONE
            or const_sign(lead.coefficient) <= 0):
        raise NotPositiveUnit('log_unit needs a positive series with '
                              'dominant monomial 1')
    c, rest = _bounded_split(g, budget)
    log_c = const_log(c)
    epsilon = rest * (1 / c)
    return series_add(constant_series(log_c), taylor_apply(LOG1P, epsilon, budget))


@attr.s(slots=True, frozen=True)
class RestrictedAnalyticFunction:
    '''An analytic function on a neighbourhood of the cube [-1, 1]**arity,
    extended by 0 outside the cube.

    oracle(point, alpha) is the Taylor coefficient of the multi-index alpha
    at the constant point.'''
    name = attr.ib()
    arity = attr.ib()
    oracle = attr.ib()
    degree = attr.ib(default=None)


def _restricted_exp_oracle(point, alpha):
    return const_exp(point[0]) * inverse_factorial(alpha[0])


def _product_oracle(point, alpha):
    u, v = point
    return {(0, 0): u * v, (1, 0): v, (0, 1): u, (1, 1): C_ONE}.get(alpha, C_ZERO)


RESTRICTED_EXP = RestrictedAnalyticFunction('e', 1, _restricted_exp_oracle)
RESTRICTED_PRODUCT = RestrictedAnalyticFunction('product', 2, _product_oracle,
                                                degree=2)


def in_cube(g, budget=None):
    '''Decide -1 <= g <= 1.'''
    upper = series_sign(series_sub(constant_series(C_ONE), g), budget)
    lower = series_sign(series_add(g, constant_series(C_ONE)), budget)
    if Verdict.LESS in (upper, lower):
        return False
    if Verdict.INDETERMINATE in (upper, lower):
        raise IndeterminateCubeMembership('cannot decide whether the argument '
                                          'lies in [-1, 1]')
    return True


def restricted_apply(F, args, budget=None):
    '''F(args) by multivariate Taylor expansion at the constant point of the
    arguments; the zero series when an argument leaves the cube.'''
    args = [as_series(g) for g in args]
    if len(args) != F.arity:
        raise ValueError(f'{F.name} takes {F.arity} arguments, not {len(args)}')
    if not all(in_cube(g, budget) for g in args):
        return ZERO
    point, displacements = [], []
    for g in args:
        c, epsilon = _bounded_split(g, budget)
        point.append(c)
        displacements.append(epsilon)
    point = tuple(point)
    return power_sum(lambda alpha: F.oracle(point, alpha), displacements,
                     degree=F.degree, budget=budget)
