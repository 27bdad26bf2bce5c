# Copyright (c) 2026, the transseries authors
#
# All rights reserved.
#
# See the file "LICENCE" for information about the copyright
# and warranty status of this software.

'''Well-based series and their representation tiers.

A series is one of

  FiniteSeries   a finite sorted tuple of terms, with eager exact arithmetic;
  RationalSeries N/D for finite N and D, enumerated by long division.  Its
                 support is grid-based and its zero test is exact;
  LazySeries     a memoized enumeration of a term source.  Grid-tier lazy
                 series come from Taylor composition, stream-tier ones from
                 user iterables and the operations that combine them.

Terms are always enumerated in strictly decreasing monomial order.  Lazy
sources interleave their terms with TICK (work without output) and CANCEL
(a candidate monomial whose coefficient summed to zero) events.  An
observation counts the CANCEL events met while seeking each term against
its Budget and all events against the global safety cap.
'''

import functools
import heapq
import itertools
import operator
import threading
from enum import Enum, IntEnum
from typing import NamedTuple

import attr

from transseries.lib.constants import ONE as C_ONE, ZERO as C_ZERO, coerce
from transseries.lib.errors import (BudgetExhausted, DivisionByZero,
                                    IndeterminatePivot, SafetyCapReached,
                                    SeriesOrderError)
from transseries.lib.monomials import (ONE as M_ONE, TransMonomial,
                                       log_monomial_of, merge_terms,
                                       monomial_cmp)
from transseries.lib.util import class_logger


class Term(NamedTuple):
    monomial: TransMonomial
    coefficient: object


class Tier(IntEnum):
    FINITE = 0
    GRID = 1
    STREAM = 2


class Event(Enum):
    END = 'end'
    TICK = 'tick'
    CANCEL = 'cancel'


END, TICK, CANCEL = Event.END, Event.TICK, Event.CANCEL


class Marker(Enum):
    '''Non-monomial answers of dominant_monomial.'''
    ZERO_SERIES = 'zero series'
    INDETERMINATE = 'indeterminate'


ZERO_SERIES, INDETERMINATE = Marker.ZERO_SERIES, Marker.INDETERMINATE


def _at_least_one(instance, attribute, value):
    if not isinstance(value, int) or value < 1:
        raise ValueError(f'{attribute.name} must be a positive integer, '
                         f'not {value!r}')


@attr.s(slots=True, frozen=True)
class Budget:
    '''Number of cancelled coefficients an observation may skip while
    seeking one term.'''
    max_terms = attr.ib(default=64, validator=_at_least_one)


_settings = {
    'budget': Budget(),
    'safety_cap': 200_000,
}


def default_budget():
    return _settings['budget']


def set_default_budget(budget):
    if not isinstance(budget, Budget):
        budget = Budget(budget)
    _settings['budget'] = budget
    return budget


def safety_cap():
    return _settings['safety_cap']


def set_safety_cap(steps):
    if not isinstance(steps, int) or steps < 1:
        raise ValueError(f'safety cap must be a positive integer, not {steps!r}')
    _settings['safety_cap'] = steps


def as_budget(budget):
    if budget is None:
        return _settings['budget']
    if isinstance(budget, Budget):
        return budget
    return Budget(budget)


@attr.s(slots=True, frozen=True)
class GridData:
    '''A support bound start * <generators>^N; every generator is < 1.'''
    start = attr.ib()
    generators = attr.ib(converter=frozenset)

    def times(self, other):
        if other is None:
            return None
        return GridData(self.start * other.start,
                        self.generators | other.generators)

    def plus(self, other):
        if other is None:
            return None
        if self.start == other.start:
            return GridData(self.start, self.generators | other.generators)
        hi, lo = (self, other) if self.start > other.start else (other, self)
        return GridData(hi.start, hi.generators | lo.generators
                        | {lo.start / hi.start})


class _Emitter:
    '''Memoized, synchronized enumeration of a term source.

    The emitted prefix is shared by all observers.  An exception raised by
    the source is kept and raised again on every later step.'''

    __slots__ = ('_source', '_terms', '_done', '_error', '_lock')

    def __init__(self, source):
        self._source = source
        self._terms = []
        self._done = False
        self._error = None
        self._lock = threading.RLock()

    def step(self, index):
        '''Return the term at index, END, or the event produced by advancing
        the source one step.'''
        with self._lock:
            if index < len(self._terms):
                return self._terms[index]
            if self._error is not None:
                raise self._error
            if self._done:
                return END
            try:
                item = next(self._source)
            except StopIteration:
                self._done = True
                self._source = None
                return END
            except Exception as e:
                self._error = e
                raise
            if isinstance(item, Term):
                self._terms.append(item)
                return item if index == len(self._terms) - 1 else TICK
            return item

    def emitted(self):
        return len(self._terms)


def _pull(series, index):
    '''Delegating generator: advance series until it has a term at index,
    passing its events upward.  Returns the term or END.'''
    while True:
        item = series.step(index)
        if item is TICK or item is CANCEL:
            yield item
        else:
            return item


class _Observation:
    '''Accounting for one query against a series.

    The budget bounds the cancellations met while seeking each term; the
    safety cap bounds the total work of the query.'''

    __slots__ = ('budget', 'cancels', 'work')

    logger = class_logger(__name__, 'Observation')

    def __init__(self, budget):
        self.budget = as_budget(budget)
        self.cancels = 0
        self.work = 0

    def seek(self, series, index):
        '''Return the term of series at index, or None past its end.'''
        while True:
            item = series.step(index)
            if item is END:
                return None
            if isinstance(item, Term):
                self.cancels = 0
                return item
            self.work += 1
            if self.work > _settings['safety_cap']:
                self.logger.debug(f'safety cap hit at index {index}')
                raise SafetyCapReached(
                    f'safety cap of {_settings["safety_cap"]:,d} steps reached')
            if item is CANCEL:
                self.cancels += 1
                if self.cancels >= self.budget.max_terms:
                    self.logger.debug(f'{self.cancels} cancellations at index {index}')
                    raise BudgetExhausted(
                        f'{self.cancels} cancelled coefficients without '
                        f'reaching term {index}')


class Series:
    '''Base class of the three representation tiers.

    Series are immutable.  Observation methods take an optional budget: a
    Budget, a positive integer or None for the process default.'''

    tier = None
    exact = False
    height = 0
    logarithm = None

    def step(self, index):
        return self._emitter.step(index)

    # Observation

    def term_at(self, index, budget=None):
        return _Observation(budget).seek(self, index)

    def iter_terms(self, budget=None):
        observation = _Observation(budget)
        for index in itertools.count():
            term = observation.seek(self, index)
            if term is None:
                return
            yield term

    def enumerate_support(self, k, budget=None):
        if k < 0:
            raise ValueError(f'cannot enumerate {k} terms')
        return list(itertools.islice(self.iter_terms(budget), k))

    def truncate(self, k, budget=None):
        return FiniteSeries(self.enumerate_support(k, budget))

    def has_more(self, k, budget=None):
        '''True if the series has a term beyond the first k.'''
        return self.term_at(k, budget) is not None

    def coefficient(self, m, budget=None):
        grid = self.grid()
        if grid is not None and monomial_cmp(m, grid.start) > 0:
            return C_ZERO
        budget = as_budget(budget)
        limit = (budget.max_terms if self.tier == Tier.STREAM
                 else _settings['safety_cap'])
        for index, (n, c) in enumerate(self.iter_terms(budget)):
            order = monomial_cmp(n, m)
            if order == 0:
                return c
            if order < 0:
                return C_ZERO
            if index + 1 >= limit:
                raise BudgetExhausted(f'{index + 1} terms emitted without '
                                      f'passing the requested monomial')
        return C_ZERO

    def dominant_term(self, budget=None):
        '''The leading term, or None for the zero series.'''
        return self.term_at(0, budget)

    def is_zero(self, budget=None):
        return self.dominant_term(budget) is None

    def grid(self):
        '''GridData bounding the support, or None for stream series.'''
        return None

    # Operators

    def __add__(self, other):
        other = as_series(other)
        return NotImplemented if other is None else series_add(self, other)

    def __radd__(self, other):
        other = as_series(other)
        return NotImplemented if other is None else series_add(other, self)

    def __sub__(self, other):
        other = as_series(other)
        return NotImplemented if other is None else series_sub(self, other)

    def __rsub__(self, other):
        other = as_series(other)
        return NotImplemented if other is None else series_sub(other, self)

    def __neg__(self):
        return series_neg(self)

    def __pos__(self):
        return self

    def __mul__(self, other):
        other = as_series(other)
        return NotImplemented if other is None else series_mul(self, other)

    def __rmul__(self, other):
        other = as_series(other)
        return NotImplemented if other is None else series_mul(other, self)

    def __truediv__(self, other):
        other = as_series(other)
        return NotImplemented if other is None else series_div(self, other)

    def __rtruediv__(self, other):
        other = as_series(other)
        return NotImplemented if other is None else series_div(other, self)

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        return series_pow(self, n)

    def __eq__(self, other):
        '''Exact equality; only defined between exact-tier series.'''
        if self is other:
            return True
        other = as_series(other)
        if other is None or not (self.exact and other.exact):
            return NotImplemented
        if isinstance(self, FiniteSeries) and isinstance(other, FiniteSeries):
            return self.terms == other.terms
        return series_sub(self, other).is_zero()

    __hash__ = None

    def __repr__(self):
        from transseries.lib.text import series_string
        from transseries.lib.errors import TransseriesError
        try:
            text = series_string(self, 6, budget=8)
        except TransseriesError:
            text = '...'
        return f'<{self.__class__.__name__} {text}>'


class FiniteSeries(Series):
    '''A finite sum; terms are sorted strictly decreasing, without zeros.'''

    tier = Tier.FINITE
    exact = True

    def __init__(self, terms=()):
        self.terms = tuple(Term(m, c) for m, c in terms)
        self.height = max((m.height for m, _c in self.terms), default=0)

    @classmethod
    def build(cls, pairs):
        '''Sum arbitrary (monomial, coefficient) pairs.'''
        ordered = sorted(((m, coerce(c)) for m, c in pairs),
                         key=operator.itemgetter(0), reverse=True)
        terms = []
        for m, c in ordered:
            if terms and terms[-1][0] == m:
                terms[-1] = (m, terms[-1][1] + c)
            else:
                terms.append((m, c))
        return cls((m, c) for m, c in terms if c != 0)

    def step(self, index):
        return self.terms[index] if index < len(self.terms) else END

    def __len__(self):
        return len(self.terms)

    def scaled(self, coefficient, monomial=M_ONE):
        if coefficient == 0:
            return FiniteSeries()
        return FiniteSeries((m * monomial, c * coefficient) for m, c in self.terms)

    def grid(self):
        if not self.terms:
            return GridData(M_ONE, ())
        start = self.terms[0].monomial
        return GridData(start, (m / start for m, _c in self.terms[1:]))


ZERO = FiniteSeries()
ONE = FiniteSeries(((M_ONE, C_ONE), ))


class RationalSeries(Series):
    '''The quotient num/den of two finite series, den with at least two
    terms.  Use make() to construct.'''

    tier = Tier.GRID
    exact = True

    def __init__(self, num, den):
        self.num = num
        self.den = den
        self.height = max(num.height, den.height)
        self._emitter = _Emitter(self._divide())

    @classmethod
    def make(cls, num, den):
        if not den.terms:
            raise DivisionByZero('division by the zero series')
        if not num.terms:
            return ZERO
        if len(den.terms) == 1:
            m, c = den.terms[0]
            return num.scaled(1 / c, m.inverse())
        if num.terms == den.terms:
            return ONE
        return cls(num, den)

    def _divide(self):
        # R - t*D == (R - lead R) - t*(D - lead D) when t = lead R / lead D
        lead, rest = self.den.terms[0], FiniteSeries(self.den.terms[1:])
        remainder = self.num
        while remainder.terms:
            m, c = remainder.terms[0]
            term = Term(m / lead.monomial, c / lead.coefficient)
            yield term
            remainder = _finite_add(FiniteSeries(remainder.terms[1:]),
                                    rest.scaled(-term.coefficient, term.monomial))

    def grid(self):
        (n0, _), (d0, _) = self.num.terms[0], self.den.terms[0]
        generators = {m / n0 for m, _c in self.num.terms[1:]}
        generators.update(m / d0 for m, _c in self.den.terms[1:])
        return GridData(n0 / d0, generators)


class LazySeries(Series):
    '''A series enumerated on demand from a term source.'''

    def __init__(self, source, *, tier=Tier.STREAM, height=0, grid=None):
        self.tier = tier
        self.height = height
        self._grid = grid
        self._emitter = _Emitter(source)

    def grid(self):
        return self._grid


# Construction

def as_series(value):
    '''Coerce a series, monomial or constant to a series; None otherwise.'''
    if isinstance(value, Series):
        return value
    if isinstance(value, TransMonomial):
        return FiniteSeries(((value, C_ONE), ))
    try:
        c = coerce(value)
    except TypeError:
        return None
    return constant_series(c)


def constant_series(c):
    c = coerce(c)
    return FiniteSeries(((M_ONE, c), )) if c != 0 else ZERO


def monomial_series(m, c=C_ONE):
    c = coerce(c)
    return FiniteSeries(((m, c), )) if c != 0 else ZERO


def from_terms(pairs):
    return FiniteSeries.build(pairs)


def from_sorted_terms(pairs):
    '''Finite series from pairs already sorted strictly decreasing.'''
    return FiniteSeries(pairs)


def _validated(iterable, height):
    previous = None
    for item in iterable:
        m, c = item
        c = coerce(c)
        if c == 0:
            raise SeriesOrderError('a series source emitted a zero coefficient')
        if previous is not None and monomial_cmp(m, previous) >= 0:
            raise SeriesOrderError('a series source emitted monomials out of '
                                   'decreasing order')
        if m.height > height:
            raise SeriesOrderError(f'a series source emitted a monomial of '
                                   f'height {m.height} above its declared '
                                   f'height {height}')
        previous = m
        yield Term(m, c)


def from_iterable(iterable, *, height=0):
    '''A stream-tier series over the (monomial, coefficient) pairs of
    iterable, which must be strictly decreasing with nonzero coefficients.'''
    if callable(iterable):
        iterable = iterable()
    return LazySeries(_validated(iter(iterable), height),
                      tier=Tier.STREAM, height=height)


def log_witness():
    '''The stream sum over n of 1/(l0 l1 ... ln).

    Iterated logarithms of every depth occur in its support, and its
    support is well-based: each term is smaller than the one before.'''
    def pairs():
        for n in itertools.count():
            yield log_monomial_of((i, -1) for i in range(n + 1)), C_ONE
    return from_iterable(pairs)


# Sources

def _mapped(f, coefficient, monomial):
    index = 0
    while True:
        term = yield from _pull(f, index)
        if term is END:
            return
        yield Term(term.monomial * monomial, term.coefficient * coefficient)
        index += 1


def _tail(f, start):
    index = start
    while True:
        term = yield from _pull(f, index)
        if term is END:
            return
        yield term
        index += 1


def tail(f, start):
    '''The series of the terms of f from index start on.'''
    if isinstance(f, FiniteSeries):
        return FiniteSeries(f.terms[start:])
    return LazySeries(_tail(f, start), tier=f.tier, height=f.height,
                      grid=f.grid())


def _merged(f, g):
    i = j = 0
    a = yield from _pull(f, 0)
    b = yield from _pull(g, 0)
    while a is not END or b is not END:
        if b is END:
            order = 1
        elif a is END:
            order = -1
        else:
            order = monomial_cmp(a.monomial, b.monomial)
        if order > 0:
            yield a
            i += 1
            a = yield from _pull(f, i)
        elif order < 0:
            yield b
            j += 1
            b = yield from _pull(g, j)
        else:
            total = a.coefficient + b.coefficient
            yield Term(a.monomial, total) if total != 0 else CANCEL
            i += 1
            j += 1
            a = yield from _pull(f, i)
            b = yield from _pull(g, j)


class _Entry:
    '''Heap entry ordered by decreasing monomial, then by rank.'''

    __slots__ = ('monomial', 'rank', 'payload')

    def __init__(self, monomial, rank, payload):
        self.monomial = monomial
        self.rank = rank
        self.payload = payload

    def __lt__(self, other):
        order = monomial_cmp(self.monomial, other.monomial)
        if order:
            return order > 0
        return self.rank < other.rank


def _product(f, g):
    '''Cauchy product over index pairs: (i, j) is followed by (i, j+1), and
    (i, 0) also by (i+1, 0).'''
    a0 = yield from _pull(f, 0)
    b0 = yield from _pull(g, 0)
    if a0 is END or b0 is END:
        return
    counter = itertools.count()
    heap = [_Entry(a0.monomial * b0.monomial, next(counter), (0, 0, a0, b0))]
    while heap:
        monomial = heap[0].monomial
        group = [heapq.heappop(heap)]
        while heap and heap[0].monomial == monomial:
            group.append(heapq.heappop(heap))
        total = C_ZERO
        for entry in group:
            i, j, a, b = entry.payload
            total = total + a.coefficient * b.coefficient
            b_next = yield from _pull(g, j + 1)
            if b_next is not END:
                heapq.heappush(heap, _Entry(a.monomial * b_next.monomial,
                                            next(counter), (i, j + 1, a, b_next)))
            if j == 0:
                a_next = yield from _pull(f, i + 1)
                if a_next is not END:
                    heapq.heappush(heap, _Entry(a_next.monomial * b0.monomial,
                                                next(counter), (i + 1, 0, a_next, b0)))
        yield Term(monomial, total) if total != 0 else CANCEL


_PENDING, _LIVE = 0, 1


def _power_sum(coefficient, gens, leads, degree):
    '''Sum of coefficient(alpha) * prod gens[i]**alpha[i] over multi-indices.

    A multi-index is activated when the merge front reaches the dominant
    monomial of its product; activating alpha schedules alpha + e_i.'''
    powers = [{0: ONE, 1: gen} for gen in gens]

    def power(i, n):
        cache = powers[i]
        if n not in cache:
            half = n // 2
            cache[n] = series_mul(power(i, half), power(i, n - half))
        return cache[n]

    counter = itertools.count()
    origin = (0, ) * len(gens)
    heap = [_Entry(M_ONE, (_PENDING, next(counter)), origin)]
    seen = {origin}
    while heap:
        entry = heap[0]
        if entry.rank[0] == _PENDING:
            heapq.heappop(heap)
            alpha = entry.payload
            for i, lead in enumerate(leads):
                beta = alpha[:i] + (alpha[i] + 1, ) + alpha[i + 1:]
                if beta in seen or (degree is not None and sum(beta) > degree):
                    continue
                seen.add(beta)
                heapq.heappush(heap, _Entry(entry.monomial * lead,
                                            (_PENDING, next(counter)), beta))
            c = coerce(coefficient(alpha))
            if c != 0:
                product = functools.reduce(
                    series_mul, (power(i, n) for i, n in enumerate(alpha) if n), ONE)
                first = yield from _pull(product, 0)
                if first is not END:
                    heapq.heappush(heap, _Entry(first.monomial, (_LIVE, next(counter)),
                                                (product, 0, c, first)))
            yield TICK
            continue
        monomial = entry.monomial
        group = [heapq.heappop(heap)]
        while heap and heap[0].rank[0] == _LIVE and heap[0].monomial == monomial:
            group.append(heapq.heappop(heap))
        total = C_ZERO
        for live in group:
            product, index, c, term = live.payload
            total = total + c * term.coefficient
            following = yield from _pull(product, index + 1)
            if following is not END:
                heapq.heappush(heap, _Entry(following.monomial,
                                            (_LIVE, next(counter)),
                                            (product, index + 1, c, following)))
        yield Term(monomial, total) if total != 0 else CANCEL


def power_sum(coefficient, gens, *, degree=None, budget=None):
    '''Return the series sum of coefficient(alpha) * prod gens[i]**alpha[i]
    over all multi-indices alpha (of total degree at most degree, if given).

    Every generator must be infinitesimal.  coefficient maps a tuple of
    non-negative integers to a constant.'''
    gens = [as_series(gen) for gen in gens]
    live, leads = [], []
    for position, gen in enumerate(gens):
        term = gen.dominant_term(budget)
        if term is None:
            continue
        if monomial_cmp(term.monomial, M_ONE) >= 0:
            raise ValueError('power_sum generators must be infinitesimal')
        live.append(position)
        leads.append(term.monomial)

    def restricted(alpha):
        full = [0] * len(gens)
        for position, n in zip(live, alpha):
            full[position] = n
        return coefficient(tuple(full))

    sub = [gens[position] for position in live]
    if not sub:
        return constant_series(restricted(()))
    if degree is not None and all(gen.exact for gen in sub):
        return _power_sum_exact(restricted, sub, degree)
    grid = GridData(M_ONE, ())
    for gen in sub:
        grid = grid and _bound_powers(gen.grid(), grid)
    tier = max(Tier.GRID, *(gen.tier for gen in sub))
    return LazySeries(_power_sum(restricted, sub, leads, degree), tier=tier,
                      height=max(gen.height for gen in sub), grid=grid)


def _bound_powers(gen_grid, grid):
    if gen_grid is None:
        return None
    return GridData(M_ONE, grid.generators | gen_grid.generators
                    | {gen_grid.start})


def _power_sum_exact(coefficient, gens, degree):
    total = ZERO
    for alpha in itertools.product(range(degree + 1), repeat=len(gens)):
        if sum(alpha) > degree:
            continue
        c = coerce(coefficient(alpha))
        if c == 0:
            continue
        product = functools.reduce(
            series_mul, (series_pow(gen, n) for gen, n in zip(gens, alpha) if n), ONE)
        total = series_add(total, scale(product, c))
    return total


# Ring operations

def _finite_add(f, g):
    return FiniteSeries(merge_terms(f.terms, g.terms))


def _finite_mul(f, g):
    if len(f.terms) < len(g.terms):
        f, g = g, f
    total = ()
    for m, c in g.terms:
        total = merge_terms(total, f.scaled(c, m).terms)
    return FiniteSeries(total)


def _quotient_parts(f):
    if isinstance(f, RationalSeries):
        return f.num, f.den
    return f, ONE


def _lazy_grid(f, g, combine):
    grid = f.grid()
    return None if grid is None else combine(grid, g.grid())


def series_add(f, g):
    if isinstance(f, FiniteSeries) and isinstance(g, FiniteSeries):
        return _finite_add(f, g)
    if f.exact and g.exact:
        (n1, d1), (n2, d2) = _quotient_parts(f), _quotient_parts(g)
        if d1.terms == d2.terms:
            return RationalSeries.make(_finite_add(n1, n2), d1)
        return RationalSeries.make(_finite_add(_finite_mul(n1, d2), _finite_mul(n2, d1)),
                                   _finite_mul(d1, d2))
    if isinstance(f, FiniteSeries) and not f.terms:
        return g
    if isinstance(g, FiniteSeries) and not g.terms:
        return f
    return LazySeries(_merged(f, g), tier=max(f.tier, g.tier, Tier.GRID),
                      height=max(f.height, g.height),
                      grid=_lazy_grid(f, g, GridData.plus))


def series_neg(f):
    return scale(f, -C_ONE)


def series_sub(f, g):
    return series_add(f, series_neg(g))


def scale(f, coefficient, monomial=M_ONE):
    '''Return coefficient * monomial * f.'''
    coefficient = coerce(coefficient)
    if coefficient == 0:
        return ZERO
    if isinstance(f, FiniteSeries):
        return f.scaled(coefficient, monomial)
    if isinstance(f, RationalSeries):
        return RationalSeries(f.num.scaled(coefficient, monomial), f.den)
    grid = f.grid()
    if grid is not None:
        grid = GridData(grid.start * monomial, grid.generators)
    return LazySeries(_mapped(f, coefficient, monomial), tier=f.tier,
                      height=max(f.height, monomial.height), grid=grid)


def series_mul(f, g):
    if isinstance(f, FiniteSeries) and isinstance(g, FiniteSeries):
        return _finite_mul(f, g)
    if f.exact and g.exact:
        (n1, d1), (n2, d2) = _quotient_parts(f), _quotient_parts(g)
        return RationalSeries.make(_finite_mul(n1, n2), _finite_mul(d1, d2))
    for a, b in ((f, g), (g, f)):
        if isinstance(a, FiniteSeries) and len(a.terms) <= 1:
            if not a.terms:
                return ZERO
            m, c = a.terms[0]
            return scale(b, c, m)
    return LazySeries(_product(f, g), tier=max(f.tier, g.tier, Tier.GRID),
                      height=max(f.height, g.height),
                      grid=_lazy_grid(f, g, GridData.times))


def series_coefficient(f, m, budget=None):
    return f.coefficient(m, budget)


def dominant_monomial(f, budget=None):
    '''The dominant monomial of f, ZERO_SERIES or INDETERMINATE.'''
    try:
        term = f.dominant_term(budget)
    except BudgetExhausted:
        return INDETERMINATE
    return ZERO_SERIES if term is None else term.monomial


def _geometric(alpha):
    return -C_ONE if alpha[0] % 2 else C_ONE


def series_invert(f, budget=None):
    '''1/f, written c^-1 d^-1 sum (-e)^n for f = c d (1 + e).'''
    try:
        lead = f.dominant_term(budget)
    except BudgetExhausted as e:
        raise IndeterminatePivot(f'no dominant term found: {e}') from None
    if lead is None:
        raise DivisionByZero('division by the zero series')
    if f.exact:
        num, den = _quotient_parts(f)
        return RationalSeries.make(den, num)
    m, c = lead
    epsilon = scale(tail(f, 1), 1 / c, m.inverse())
    return scale(power_sum(_geometric, [epsilon], budget=budget), 1 / c, m.inverse())


def series_div(f, g, budget=None):
    return series_mul(f, series_invert(g, budget))


def series_pow(f, n, budget=None):
    '''f**n for an integer n.'''
    if n < 0:
        return series_pow(series_invert(f, budget), -n)
    result, base = ONE, f
    while n:
        if n & 1:
            result = series_mul(result, base)
        n >>= 1
        if n:
            base = series_mul(base, base)
    return result


def enumerate_support(f, k, budget=None):
    return f.enumerate_support(k, budget)


def truncate(f, k, budget=None):
    return f.truncate(k, budget)
