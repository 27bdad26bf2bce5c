# Copyright (c) 2026, the transseries authors
#
# All rights reserved.
#
# See the file "LICENCE" for information about the copyright
# and warranty status of this software.

'''Canonical text forms of constants, monomials, series and reports.

Every form produced here parses back to the same value.'''

from fractions import Fraction

from transseries.lib.constants import ExpRational, const_sign
from transseries.lib.errors import BudgetExhausted
from transseries.lib.util import rational_string


def exponent_string(r):
    '''"^2", "^-1" or "^(1/2)"; empty for 1.'''
    r = Fraction(r)
    if r == 1:
        return ''
    if r.denominator == 1:
        return f'^{r.numerator}'
    return f'^({rational_string(r)})'


def _exp_poly_string(terms):
    parts = []
    for r, q in sorted(terms, reverse=True):
        if r == 0:
            body = rational_string(abs(q))
        else:
            power = 'e' + exponent_string(r)
            body = power if abs(q) == 1 else f'{rational_string(abs(q))}*{power}'
        parts.append((q < 0, body))
    return _join_signed(parts)


def _join_signed(parts):
    '''Join (negative, body) pairs as "a - b + c".'''
    text = ''
    for index, (negative, body) in enumerate(parts):
        if index == 0:
            text = f'-{body}' if negative else body
        else:
            text += f' - {body}' if negative else f' + {body}'
    return text


def constant_string(c):
    if isinstance(c, ExpRational):
        num = _exp_poly_string(c.num.terms)
        if len(c.den.terms) == 1 and c.den.terms[0] == (0, 1):
            return num
        den = _exp_poly_string(c.den.terms)
        return f'({num})/({den})'
    return rational_string(c)


def _is_compound(c):
    '''Whether a coefficient needs parentheses in a product.'''
    return isinstance(c, ExpRational) and (
        len(c.num.terms) > 1 or len(c.den.terms) > 1
        or c.den.terms[0] != (0, 1))


def log_monomial_string(logs):
    parts = []
    for index, e in logs.exponents:
        base = 'x' if index == 0 else f'l{index}'
        parts.append(base + exponent_string(e))
    return '*'.join(parts)


def monomial_string(m):
    parts = []
    if m.arg:
        parts.append(f'exp({terms_string(m.arg)})')
    if m.logs:
        parts.append(log_monomial_string(m.logs))
    return '*'.join(parts) or '1'


def _term_parts(m, c):
    '''Return (negative, body) for the term c*m.'''
    negative = const_sign(c) < 0
    magnitude = -c if negative else c
    if m.arg or m.logs:
        text = monomial_string(m)
        if magnitude == 1:
            return negative, text
        coefficient = constant_string(magnitude)
        if _is_compound(magnitude):
            coefficient = f'({coefficient})'
        return negative, f'{coefficient}*{text}'
    text = constant_string(magnitude)
    if _is_compound(magnitude) and negative:
        text = f'({text})'
    return negative, text


def terms_string(terms):
    '''Render a finite sequence of (monomial, coefficient) pairs.'''
    if not terms:
        return '0'
    return _join_signed([_term_parts(m, c) for m, c in terms])


def series_string(f, terms=10, budget=None, *, strict=True):
    '''The first terms of f, followed by "+ o(m)" when f has more.

    When not strict, a tail whose next term cannot be found within the
    budget is still shown as "+ o(m)".  BudgetExhausted is raised if no
    term at all can be found.  With terms=0 a nonzero f shows as O(d) for
    its dominant monomial d.'''
    shown = []
    following = None
    try:
        for term in f.iter_terms(budget):
            if len(shown) == terms:
                following = term
                break
            shown.append(term)
    except BudgetExhausted:
        if strict or not shown:
            raise
        following = shown[-1]
    if following is None:
        return terms_string(shown)
    if not shown:
        return f'O({monomial_string(following.monomial)})'
    return f'{terms_string(shown)} + o({monomial_string(shown[-1].monomial)})'


def safe_series_string(f, terms=10, budget=None):
    return series_string(f, terms, budget, strict=False)


VERDICT_SYMBOLS = {
    'Less': '≺',
    'Equal': '=',
    'Greater': '≻',
    'Indeterminate': '?',
}


def verdict_line(left, right, verdict):
    '''"exp(x) ≻ x^1000 (Greater)".'''
    return f'{left} {VERDICT_SYMBOLS[verdict.value]} {right} ({verdict.value})'


def limit_string(limit):
    if limit.kind == 'finite':
        return constant_string(limit.value)
    return limit.kind


def decomposition_string(parts, terms=10, budget=None):
    return (f'({series_string(parts.infinite, terms, budget)}, '
            f'{constant_string(parts.constant)}, '
            f'{safe_series_string(parts.infinitesimal, terms, budget)})')


def axiom_lines(report, verbose=False):
    '''A generator returning lines for an axiom suite report.

    Passing checks are listed only when verbose.'''
    fmt = '{:<4} {:<13} {}'
    for check in report.checks:
        if check.status.value == 'PASS' and not verbose:
            continue
        line = fmt.format(check.axiom, check.status.value, check.label)
        if check.witness:
            line = f'{line}: {check.witness}'
        yield line.rstrip()
    yield report.summary()
