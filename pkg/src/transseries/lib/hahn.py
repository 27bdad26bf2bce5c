# Copyright (c) 2026, the transseries authors
#
# All rights reserved.
#
# See the file "LICENCE" for information about the copyright
# and warranty status of this software.

'''Ordered field and valuation structure of series.'''

from enum import Enum

import attr

from transseries.lib.constants import ZERO as C_ZERO, const_sign
from transseries.lib.errors import (ArgumentNotBounded, BudgetExhausted,
                                    InvalidSplit, SafetyCapReached)
from transseries.lib.monomials import (ONE as M_ONE, LogMonomial,
                                       TransMonomial, monomial_cmp)
from transseries.lib.series import (ZERO, Budget, FiniteSeries, Tier,
                                    as_budget, as_series, constant_series,
                                    from_sorted_terms, series_sub, tail)


class Verdict(Enum):
    LESS = 'Less'
    EQUAL = 'Equal'
    GREATER = 'Greater'
    INDETERMINATE = 'Indeterminate'

    @classmethod
    def from_sign(cls, sign):
        if sign > 0:
            return cls.GREATER
        if sign < 0:
            return cls.LESS
        return cls.EQUAL

    @property
    def determinate(self):
        return self is not Verdict.INDETERMINATE

    @property
    def sign(self):
        '''-1, 0 or +1; None when indeterminate.'''
        return {Verdict.LESS: -1, Verdict.EQUAL: 0,
                Verdict.GREATER: 1}.get(self)

    def reversed(self):
        return {Verdict.LESS: Verdict.GREATER,
                Verdict.GREATER: Verdict.LESS}.get(self, self)


def series_sign(f, budget=None):
    '''The sign of f as a Verdict against zero.'''
    try:
        term = as_series(f).dominant_term(budget)
    except BudgetExhausted:
        return Verdict.INDETERMINATE
    if term is None:
        return Verdict.EQUAL
    return Verdict.from_sign(const_sign(term.coefficient))


def series_compare(f, g, budget=None):
    '''Order of f and g: the sign of f - g.'''
    return series_sign(series_sub(as_series(f), as_series(g)), budget)


def series_cmp_abs(f, g, budget=None):
    '''Compare f and g for domination: LESS means f < g in the sense that
    d(f) < d(g); zero is dominated by everything nonzero.'''
    try:
        a = as_series(f).dominant_term(budget)
        b = as_series(g).dominant_term(budget)
    except BudgetExhausted:
        return Verdict.INDETERMINATE
    if a is None or b is None:
        return Verdict.from_sign((a is not None) - (b is not None))
    return Verdict.from_sign(monomial_cmp(a.monomial, b.monomial))


def agree_up_to(f, g, depth, budget=None):
    '''Compare f and g, treating them as equal when depth successive
    coefficients of f - g cancel.

    Exact-tier differences are decided exactly.  A budget smaller than
    depth cannot certify agreement and yields INDETERMINATE instead.'''
    budget = as_budget(budget)
    diff = series_sub(as_series(f), as_series(g))
    if diff.exact:
        return series_sign(diff, budget)
    certify = budget.max_terms >= depth
    try:
        term = diff.dominant_term(Budget(depth) if certify else budget)
    except SafetyCapReached:
        return Verdict.INDETERMINATE
    except BudgetExhausted:
        return Verdict.EQUAL if certify else Verdict.INDETERMINATE
    if term is None:
        return Verdict.EQUAL
    return Verdict.from_sign(const_sign(term.coefficient))


@attr.s(slots=True, frozen=True)
class Decomposition:
    '''f = infinite + constant + infinitesimal.'''
    infinite = attr.ib()
    constant = attr.ib()
    infinitesimal = attr.ib()

    def reassemble(self):
        return self.infinite + constant_series(self.constant) + self.infinitesimal


def decompose(f, budget=None):
    '''Split f into its purely infinite part (a finite series), constant
    term and infinitesimal part.

    Lazy series may have at most budget.max_terms infinite terms.'''
    f = as_series(f)
    budget = as_budget(budget)
    infinite, constant, rest_index = [], C_ZERO, None
    for index, (m, c) in enumerate(f.iter_terms(budget)):
        order = monomial_cmp(m, M_ONE)
        if order > 0:
            if not f.exact and index >= budget.max_terms:
                raise BudgetExhausted(f'more than {budget.max_terms} infinite '
                                      f'terms')
            infinite.append((m, c))
            continue
        if order == 0:
            constant = c
            rest_index = index + 1
        else:
            rest_index = index
        break
    infinite = from_sorted_terms(infinite)
    if rest_index is None:
        infinitesimal = ZERO
    elif f.exact:
        infinitesimal = series_sub(f, infinite + constant_series(constant))
    else:
        infinitesimal = tail(f, rest_index)
    return Decomposition(infinite, constant, infinitesimal)


def infinite_part(f, budget=None):
    return decompose(f, budget).infinite


def constant_term(f, budget=None):
    return decompose(f, budget).constant


def infinitesimal_part(f, budget=None):
    return decompose(f, budget).infinitesimal


@attr.s(slots=True, frozen=True, eq=True, order=False)
class ValuationData:
    '''The valuation v(f), written additively: the dominant monomial viewed
    in the order-reversed value group.  monomial is None for v(0).'''
    monomial = attr.ib()

    @property
    def is_infinite(self):
        return self.monomial is None

    def __add__(self, other):
        if self.is_infinite or other.is_infinite:
            return ValuationData(None)
        return ValuationData(self.monomial * other.monomial)

    def _cmp(self, other):
        if self.is_infinite or other.is_infinite:
            return (self.is_infinite) - (other.is_infinite)
        return -monomial_cmp(self.monomial, other.monomial)

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0


def valuation(f, budget=None):
    '''v(f); raises BudgetExhausted when the dominant term is not found.'''
    term = as_series(f).dominant_term(budget)
    return ValuationData(None if term is None else term.monomial)


def is_bounded(f, budget=None):
    '''f lies in the valuation ring: d(f) <= 1.'''
    term = as_series(f).dominant_term(budget)
    return term is None or monomial_cmp(term.monomial, M_ONE) <= 0


def is_infinitesimal(f, budget=None):
    '''f lies in the maximal ideal: d(f) < 1.'''
    term = as_series(f).dominant_term(budget)
    return term is None or monomial_cmp(term.monomial, M_ONE) < 0


def residue(f, budget=None):
    '''The image of a bounded series in the residue field: its constant term.'''
    if not is_bounded(f, budget):
        raise ArgumentNotBounded('only bounded series have a residue')
    return constant_term(f, budget)


# Regrouping

@attr.s(slots=True, frozen=True)
class Split:
    '''A factorization of the monomial group as a product of a convex
    subgroup (first) and a complement (second).'''
    name = attr.ib()
    first = attr.ib()
    second = attr.ib()

    def factor(self, m):
        m1, m2 = self.first(m), self.second(m)
        if (m1 * m2 != m or self.second(m1) != M_ONE
                or self.first(m2) != M_ONE):
            raise InvalidSplit(f'{self.name} does not factor a support '
                               f'monomial uniquely')
        return m1, m2


def exp_log_split():
    '''Logarithmic monomials first, exponential parts second.'''
    return Split('exp/log split', TransMonomial.log_part, TransMonomial.exp_part)


def log_depth_split(depth):
    '''The l_j axes with j >= depth first, everything else second.'''
    def first(m):
        return TransMonomial((), LogMonomial(
            (i, e) for i, e in m.logs.exponents if i >= depth))

    def second(m):
        return TransMonomial(m.arg, LogMonomial(
            (i, e) for i, e in m.logs.exponents if i < depth))

    return Split(f'log depth {depth} split', first, second)


@attr.s(slots=True, frozen=True)
class RegroupedSeries:
    '''A series over the second factor with series coefficients over the
    first.  groups holds (monomial, FiniteSeries) pairs, decreasing.'''
    groups = attr.ib()
    truncated = attr.ib(default=False)

    def flatten(self):
        total = ZERO
        for m2, coefficient in self.groups:
            total = total + FiniteSeries(
                (m1 * m2, c) for m1, c in coefficient.terms)
        return total

    def coefficient(self, m2):
        for n, coefficient in self.groups:
            if n == m2:
                return coefficient
        return ZERO

    def sign(self):
        if not self.groups:
            return Verdict.EQUAL
        return series_sign(self.groups[0][1])


def regroup(f, split, budget=None):
    '''Group the terms of f by their component in the second factor.

    Grid-tier input is regrouped over its first budget.max_terms terms and
    flagged as truncated when it has more.'''
    f = as_series(f)
    if f.tier == Tier.STREAM:
        raise InvalidSplit('stream-tier series cannot be regrouped')
    budget = as_budget(budget)
    if f.tier == Tier.FINITE:
        terms, truncated = f.terms, False
    else:
        terms = f.enumerate_support(budget.max_terms, budget)
        truncated = f.has_more(budget.max_terms, budget)
    groups = {}
    order = []
    for m, c in terms:
        m1, m2 = split.factor(m)
        if m2 not in groups:
            groups[m2] = []
            order.append(m2)
        groups[m2].append((m1, c))
    order.sort(reverse=True)
    previous = None
    for m2 in order:
        # the first factor is convex, so groups cannot interleave
        monomials = [m1 * m2 for m1, _c in groups[m2]]
        if previous is not None and monomial_cmp(monomials[0], previous) >= 0:
            raise InvalidSplit(f'{split.name} is not convex on this support')
        previous = monomials[-1]
    return RegroupedSeries(tuple((m2, from_sorted_terms(groups[m2]))
                                 for m2 in order), truncated)
