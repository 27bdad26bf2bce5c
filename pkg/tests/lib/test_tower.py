import itertools
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from transseries.lib.constants import EXP_RATIONAL, ExpRational, use_field
from transseries.lib.errors import (ConstantCapabilityMissing, IndeterminateSign,
                                    NotPositive)
from transseries.lib.hahn import (Verdict, agree_up_to, constant_term,
                                  infinite_part, series_compare)
from transseries.lib.monomials import ONE as M_ONE, ell, exp_monomial, log_monomial_of, x_power
from transseries.lib.series import (ONE, ZERO, as_series, constant_series,
                                    from_terms, log_witness, scale)
from transseries.lib.tower import (exp_total, extension_step, level, log_total,
                                   power)


x = as_series(ell(0))
l1 = as_series(ell(1))
exp_x = exp_monomial([(x_power(1), Fraction(1))])

exponents = st.fractions(min_value=-2, max_value=2, max_denominator=3)
coefficients = st.fractions(min_value=-4, max_value=4, max_denominator=4)


@st.composite
def transseries_without_constant(draw):
    pairs = draw(st.lists(st.tuples(exponents, st.integers(-1, 1), coefficients),
                          max_size=4))
    f = from_terms((log_monomial_of([(0, a), (1, b)]), c) for a, b, c in pairs)
    return f - constant_series(constant_term(f))


@st.composite
def level_one_samples(draw):
    '''Grid-tier transseries of level at most 1 without constant term.'''
    pairs = draw(st.lists(st.tuples(st.integers(0, 2), st.integers(-1, 1), coefficients),
                          max_size=3))
    f = from_terms((log_monomial_of([(0, a), (1, b)]), c)
                   for a, b, c in pairs if (a, b) > (0, 0))
    f = f + draw(coefficients) * as_series(exp_x)
    return f + draw(coefficients) * x ** -1 / (1 - x ** -1)


def untagged(f):
    '''f without the logarithm recorded by exp_total.'''
    return scale(f, 1)


def test_exp_and_log_of_monomials():
    assert log_total(x) == l1
    assert exp_total(l1) == x
    assert exp_total(2 * l1 + as_series(ell(2))) == as_series(
        log_monomial_of([(0, 2), (1, 1)]))
    assert exp_total(x ** 2 + log_total(x)) == as_series(
        exp_monomial([(x_power(2), Fraction(1))]) * x_power(1))
    assert exp_total(ZERO) == ONE
    assert log_total(untagged(exp_total(x + l1))) == x + l1


def test_exp_records_its_logarithm():
    f = x + x ** -1
    g = exp_total(f)
    assert g.logarithm is f
    assert log_total(g) is f
    assert untagged(g).logarithm is None


@settings(max_examples=50, deadline=None)
@given(transseries_without_constant())
def test_log_of_exp_uses_recorded_logarithm(f):
    assert log_total(exp_total(f)) == f
    assert level(exp_total(f)) >= level(f)


@settings(max_examples=50, deadline=None)
@given(transseries_without_constant().map(infinite_part))
def test_log_of_untagged_exp_is_exact(f):
    g = untagged(exp_total(f))
    assert g.logarithm is None
    assert log_total(g) == f


@settings(max_examples=25, deadline=None)
@given(level_one_samples(), level_one_samples())
def test_exp_is_increasing(f, g):
    order = series_compare(f, g)
    assume(order is not Verdict.EQUAL)
    assert series_compare(exp_total(f), exp_total(g), 1000) is order


@settings(max_examples=25, deadline=None)
@given(level_one_samples(), level_one_samples())
def test_exp_is_a_morphism(f, g):
    assert level(f) <= 1
    assert agree_up_to(exp_total(f + g), exp_total(f) * exp_total(g), 20) \
        is Verdict.EQUAL


@pytest.mark.parametrize('f', [
    x + x ** -1,
    x ** 2 - 3 * l1 + x ** -2,
    l1 + Fraction(1, 2) * x ** -1 - x ** -3,
    x ** -1 + x ** -2,
])
def test_log_of_untagged_exp(f):
    assert agree_up_to(log_total(untagged(exp_total(f))), f, 20) is Verdict.EQUAL


def positive_grid_samples():
    for a, b, c in itertools.product((-1, 0, 1, Fraction(1, 2), 2),
                                     (0, 1, -2, Fraction(1, 3), 3),
                                     (Fraction(1, 2), -1)):
        num = from_terms([(x_power(a), 1), (x_power(a - 1), b)])
        den = 1 - c * x ** -1
        yield num / den


@pytest.mark.slow
@pytest.mark.parametrize('g', list(positive_grid_samples()))
def test_exp_of_log_is_identity(g):
    assert agree_up_to(exp_total(log_total(g)), g, 20) is Verdict.EQUAL


def test_exp_needs_exp_of_constants():
    with pytest.raises(ConstantCapabilityMissing):
        exp_total(1 + x).dominant_term()
    with use_field(EXP_RATIONAL):
        g = exp_total(1 + x)
        m, c = g.dominant_term()
        assert m == exp_x
        assert c == ExpRational.exp(1)
        assert log_total(untagged(g)).truncate(2) == x + 1


def test_log_errors():
    for bad in (-x, ZERO, -1 + x ** -1):
        with pytest.raises(NotPositive):
            log_total(bad)
    f = log_witness()
    with pytest.raises(IndeterminateSign):
        log_total(f - f, 8)
    with pytest.raises(ConstantCapabilityMissing):
        log_total(2 * x)


def test_power():
    assert power(x, 2) == x ** 2
    assert power(x + 1, -1) == 1 / (x + 1)
    assert power(4 * x, Fraction(1, 2)) == 2 * as_series(x_power(Fraction(1, 2)))
    root = power(x ** 2 + 2 * x + 1, Fraction(1, 2))
    assert agree_up_to(root, x + 1, 20) is Verdict.EQUAL
    with pytest.raises(NotPositive):
        power(-x, Fraction(1, 2))
    with pytest.raises(ConstantCapabilityMissing):
        power(2 * x, Fraction(1, 2))
    with use_field(EXP_RATIONAL):
        e = constant_series(ExpRational.exp(1))
        assert power(e * x, Fraction(1, 2)).dominant_term().coefficient == \
            ExpRational.exp(Fraction(1, 2))


def test_level():
    assert level(x) == 0
    assert level(l1 + 1) == 0
    assert level(exp_total(x)) == 1
    assert level(exp_total(exp_total(x))) == 2
    assert level(exp_total(l1)) == 0


def test_extension_step():
    step = extension_step(0)
    purely_infinite, bounded = step.split(x + 1 + x ** -1)
    assert purely_infinite == x
    assert bounded == 1 + x ** -1
    assert step.new_monomial(x ** 2 + 3) == exp_monomial([(x_power(2), Fraction(1))])
    assert step.new_monomial(3 * l1) == x_power(3)
    assert step.new_monomial(x ** -1) == M_ONE
    assert not step.contains(exp_total(x))
    with pytest.raises(ValueError):
        step.split(exp_total(x))
    assert extension_step(1).new_monomial(exp_total(x)).height == 2
    with pytest.raises(ValueError):
        extension_step(-1)
