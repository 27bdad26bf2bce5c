from collections import defaultdict
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from transseries.lib.errors import (BudgetExhausted, DivisionByZero,
                                    IndeterminatePivot, SafetyCapReached,
                                    SeriesOrderError)
from transseries.lib.hahn import (Verdict, agree_up_to, series_cmp_abs,
                                  series_compare, series_sign)
from transseries.lib.monomials import ONE as M_ONE, ell, exp_monomial, x_power
from transseries.lib.series import (INDETERMINATE, ONE, ZERO, ZERO_SERIES,
                                    Budget, FiniteSeries, RationalSeries, Tier,
                                    as_budget, as_series, constant_series,
                                    dominant_monomial, from_iterable,
                                    from_terms, log_witness, power_sum,
                                    safety_cap, series_div, series_invert,
                                    set_safety_cap, tail)


x = as_series(ell(0))

exponents = st.fractions(min_value=-3, max_value=3, max_denominator=4)
coefficients = st.fractions(min_value=-5, max_value=5, max_denominator=5)
pair_lists = st.lists(st.tuples(exponents, coefficients), max_size=5)


def series_of(pairs):
    return from_terms((x_power(e), c) for e, c in pairs)


finite_series = pair_lists.map(series_of)


def dominant_exponent(pairs):
    '''Brute force: the largest exponent whose coefficients do not cancel.'''
    totals = defaultdict(Fraction)
    for e, c in pairs:
        totals[e] += c
    live = [e for e, c in totals.items() if c]
    return max(live) if live else None


def coefficients_of(f, k, budget=None):
    return [c for _m, c in f.enumerate_support(k, budget)]


@pytest.fixture
def small_safety_cap():
    saved = safety_cap()
    set_safety_cap(50)
    yield
    set_safety_cap(saved)


def test_budget():
    assert Budget().max_terms == 64
    assert as_budget(5) == Budget(5)
    assert as_budget(Budget(7)) == Budget(7)
    assert isinstance(as_budget(None), Budget)
    for bad in (0, -3, 1.5, 'a'):
        with pytest.raises(ValueError):
            Budget(bad)


def test_build_merges_and_sorts():
    f = from_terms([(x_power(-1), 2), (x_power(2), 1), (x_power(-1), -2),
                    (M_ONE, 3)])
    assert f.terms == ((x_power(2), 1), (M_ONE, 3))
    assert len(f) == 2
    assert from_terms([(x_power(1), 1), (x_power(1), -1)]) == ZERO
    assert constant_series(0) == ZERO


def test_ring_operations():
    assert (x + 1) * (x - 1) == x ** 2 - 1
    assert x * x ** -1 == ONE
    assert 2 * x - x == x
    assert (x ** 2 - 1) / (x - 1) == x + 1
    assert (x + 1) ** 0 == ONE


def test_invert_laurent():
    inverse = series_invert(1 - x ** -1)
    assert isinstance(inverse, RationalSeries)
    assert inverse.tier == Tier.GRID
    terms = inverse.enumerate_support(21)
    assert [m for m, _c in terms] == [x_power(-n) for n in range(21)]
    assert all(c == 1 for _m, c in terms)
    assert inverse.coefficient(x_power(-20)) == 1
    assert inverse.coefficient(x_power(Fraction(-1, 2))) == 0


def test_rational_series_long_division_ends():
    f = (x ** 2 - 1) / (x - 1)
    assert f.enumerate_support(5) == [(x_power(1), 1), (M_ONE, 1)]
    assert not f.has_more(2)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        series_div(x, ZERO)
    with pytest.raises(ZeroDivisionError):
        x / (x - x)


def test_pivot_needs_a_dominant_term():
    f = log_witness()
    diff = f - f
    with pytest.raises(IndeterminatePivot):
        series_invert(diff, 4)


@settings(max_examples=200, deadline=None)
@given(finite_series, finite_series, finite_series)
def test_field_laws(f, g, h):
    assert f + g == g + f
    assert (f + g) + h == f + (g + h)
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f - f == ZERO
    assert f * ONE == f
    if f != ZERO:
        assert f * series_invert(f) == ONE
        assert (g / f) * f == g


@settings(max_examples=200, deadline=None)
@given(finite_series, finite_series, finite_series)
def test_ordering_laws(f, g, h):
    verdict = series_compare(f, g)
    assert verdict.determinate
    assert series_compare(g, f) is verdict.reversed()
    assert (verdict is Verdict.EQUAL) == (f == g)
    assert series_compare(f + h, g + h) is verdict


@settings(max_examples=200, deadline=None)
@given(pair_lists, pair_lists)
def test_domination_against_brute_force(a, b):
    ea, eb = dominant_exponent(a), dominant_exponent(b)
    if ea is None or eb is None:
        expected = (ea is not None) - (eb is not None)
    else:
        expected = (ea > eb) - (ea < eb)
    assert series_cmp_abs(series_of(a), series_of(b)).sign == expected
    m = dominant_monomial(series_of(a))
    assert m == (ZERO_SERIES if ea is None else x_power(ea))


@pytest.mark.parametrize('f', [
    1 - x ** -1,
    x + 2 + as_series(x_power(Fraction(-1, 2))),
    3 * x ** -2 - x ** -5,
])
def test_lazy_inverse(f):
    stream = from_iterable(f.terms)
    product = stream * series_invert(stream)
    assert product.tier == Tier.STREAM
    assert agree_up_to(product, ONE, 20) is Verdict.EQUAL


def test_power_sum():
    gens = [x ** -1, x ** -2]
    exact = power_sum(lambda alpha: 1, gens, degree=2)
    assert exact == from_terms([(M_ONE, 1), (x_power(-1), 1), (x_power(-2), 2),
                                (x_power(-3), 1), (x_power(-4), 1)])
    lazy = power_sum(lambda alpha: 1, gens)
    assert lazy.tier == Tier.GRID
    assert coefficients_of(lazy, 5) == [1, 1, 2, 2, 3]
    with pytest.raises(ValueError):
        power_sum(lambda alpha: 1, [x])


def test_coefficient_above_grid_start():
    lazy = power_sum(lambda alpha: 1, [x ** -1])
    assert lazy.grid().start == M_ONE
    assert all(gen < M_ONE for gen in lazy.grid().generators)
    # every coefficient of diff cancels, so only the grid bound decides
    diff = lazy - lazy
    assert diff.tier == Tier.GRID
    assert diff.coefficient(x_power(1)) == 0
    assert diff.coefficient(exp_monomial([(x_power(1), Fraction(1))])) == 0
    with pytest.raises(BudgetExhausted):
        diff.coefficient(M_ONE)
    assert lazy.coefficient(x_power(-3)) == 1
    assert lazy.coefficient(x_power(2)) == 0


def test_from_iterable_validates():
    out_of_order = from_iterable([(x_power(-1), 1), (x_power(1), 1)])
    assert out_of_order.term_at(0).monomial == x_power(-1)
    with pytest.raises(SeriesOrderError):
        out_of_order.term_at(1)
    with pytest.raises(SeriesOrderError):
        out_of_order.enumerate_support(2)
    with pytest.raises(SeriesOrderError):
        from_iterable([(x_power(1), 0)]).term_at(0)
    high = exp_monomial([(x_power(1), Fraction(1))])
    with pytest.raises(SeriesOrderError):
        from_iterable([(high, 1)]).term_at(0)
    assert from_iterable([(high, 1)], height=1).term_at(0).monomial == high


def test_log_witness():
    f = log_witness()
    assert f.tier == Tier.STREAM
    terms = f.enumerate_support(6)
    assert terms[0] == (x_power(-1), 1)
    for (m, _c), (n, _d) in zip(terms, terms[1:]):
        assert n < m
    product = M_ONE
    for i in range(6):
        product = product * ell(i, -1)
    assert f.coefficient(product) == 1


@pytest.mark.parametrize('budget', [1, 2, 3, 10, 64, 256, 1024])
def test_stream_difference_is_never_zero(budget):
    f = log_witness()
    diff = f - f
    assert series_sign(diff, budget) is Verdict.INDETERMINATE
    assert series_compare(f, f, budget) is Verdict.INDETERMINATE
    assert dominant_monomial(f - f, budget) is INDETERMINATE
    with pytest.raises(BudgetExhausted):
        diff.is_zero(budget)


def test_ended_stream_difference():
    # a source that ends has been seen in full, so END decides f - f
    f = from_iterable([(x_power(1), 1), (M_ONE, 2), (x_power(-1), 3)])
    assert f.tier == Tier.STREAM
    assert (f - f).tier == Tier.STREAM
    assert series_sign(f - f, 4) is Verdict.EQUAL
    assert dominant_monomial(f - f, 4) is ZERO_SERIES
    assert series_sign(f - f, 3) is Verdict.INDETERMINATE
    assert series_sign(f - f, 2) is Verdict.INDETERMINATE


def test_exact_difference_is_zero():
    f = 1 / (1 - x ** -1)
    assert series_sign(f - f) is Verdict.EQUAL
    assert dominant_monomial(f - f) is ZERO_SERIES


def test_safety_cap(small_safety_cap):
    f = log_witness()
    diff = f - f
    with pytest.raises(SafetyCapReached):
        diff.term_at(0, 1000)
    with pytest.raises(SafetyCapReached):
        diff.term_at(0, 1000)
    assert series_sign(f - f, 1000) is Verdict.INDETERMINATE


def test_set_safety_cap_validates():
    with pytest.raises(ValueError):
        set_safety_cap(0)


def test_tail_and_truncate():
    f = 1 / (1 - x ** -1)
    assert coefficients_of(tail(f, 3), 2) == [1, 1]
    assert tail(f, 3).term_at(0).monomial == x_power(-3)
    assert f.truncate(3) == from_terms([(M_ONE, 1), (x_power(-1), 1),
                                        (x_power(-2), 1)])
    assert isinstance(f.truncate(3), FiniteSeries)
    assert tail(x + 1, 1) == ONE
    with pytest.raises(ValueError):
        f.enumerate_support(-1)


def alternating(sign):
    def pairs():
        n = 1
        while True:
            yield x_power(-n), Fraction(sign) ** n
            n += 1
    return from_iterable(pairs)


def test_cancellation_budget_is_per_term():
    # every other coefficient of the sum cancels, 70 times in all
    total = alternating(1) + alternating(-1)
    assert total.tier == Tier.STREAM
    terms = total.enumerate_support(70)
    assert terms == [(x_power(-2 * k), 2) for k in range(1, 71)]
    fresh = alternating(1) + alternating(-1)
    assert len(fresh.truncate(70, 2).terms) == 70
    with pytest.raises(BudgetExhausted):
        (alternating(1) + alternating(-1)).enumerate_support(3, 1)


def test_tiers():
    assert x.tier == Tier.FINITE
    grid = 1 / (1 - x ** -1)
    stream = log_witness()
    assert (grid + x).tier == Tier.GRID
    assert (grid + stream).tier == Tier.STREAM
    assert (stream * 3).tier == Tier.STREAM
    assert stream.grid() is None
    assert grid.grid() is not None


def test_as_series():
    assert as_series(3) == constant_series(3)
    assert as_series(ell(0)) == x
    assert as_series(x) is x
    assert as_series(1.5) is None
