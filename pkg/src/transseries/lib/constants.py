# Copyright (c) 2026, the transseries authors
#
# All rights reserved.
#
# See the file "LICENCE" for information about the copyright
# and warranty status of this software.

'''Exact ordered coefficient fields.

Constants are plain Python values: a Fraction for the rational field, and
either a Fraction or an ExpRational for the exp-rational field.  Kernel code
does arithmetic with the ordinary operators and asks the active field for the
partial capabilities (exp, log, rational powers) and for signs.
'''

import threading
from contextlib import contextmanager
from contextvars import ContextVar
from fractions import Fraction
from numbers import Rational

from cachetools import LRUCache, cached
from mpmath import iv

from transseries.lib.errors import (ConstantCapabilityMissing,
                                    ConstantExpUnsupported,
                                    ConstantLogUnsupported)
from transseries.lib.util import class_logger, rational_power


ZERO = Fraction(0)
ONE = Fraction(1)


def coerce(value):
    '''Return value as a constant; ints and rational strings become Fractions.'''
    if isinstance(value, (Fraction, ExpRational)):
        return value
    if isinstance(value, (Rational, str)):
        return Fraction(value)
    raise TypeError(f'cannot use {value!r} as an exact constant')


def is_rational(c):
    return isinstance(c, Fraction)


class _ExpPoly:
    '''A finite Q-linear combination of e^r, r rational.

    Terms are (r, q) pairs sorted by r with distinct exponents and no zero
    coefficients.'''

    __slots__ = ('terms', )

    def __init__(self, terms=()):
        self.terms = tuple(terms)

    @classmethod
    def build(cls, pairs):
        acc = {}
        for r, q in pairs:
            acc[r] = acc.get(r, ZERO) + q
        return cls(sorted((r, q) for r, q in acc.items() if q))

    @classmethod
    def monomial(cls, r, q=ONE):
        return cls(((Fraction(r), Fraction(q)), )) if q else cls()

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, _ExpPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __add__(self, other):
        return _ExpPoly.build(self.terms + other.terms)

    def __neg__(self):
        return _ExpPoly((r, -q) for r, q in self.terms)

    def __mul__(self, other):
        return _ExpPoly.build((r + s, q * p)
                              for r, q in self.terms for s, p in other.terms)

    def is_monomial(self):
        return len(self.terms) == 1

    def lead(self):
        return self.terms[-1]

    def sign(self):
        if not self.terms:
            return 0
        if len(self.terms) == 1:
            return 1 if self.terms[0][1] > 0 else -1
        if all(q > 0 for _r, q in self.terms):
            return 1
        if all(q < 0 for _r, q in self.terms):
            return -1
        return _interval_sign(self.terms)


_SIGN_LOCK = threading.Lock()
_START_PREC = 64
_MAX_PREC = 1 << 20
_logger = class_logger(__name__, 'IntervalSign')


def _enclose(q):
    return iv.mpf(q.numerator) / q.denominator


def _enclosure(terms, prec):
    '''An interval containing sum q*e^r, computed at prec bits.'''
    with _SIGN_LOCK:
        saved, iv.prec = iv.prec, prec
        try:
            total = iv.mpf(0)
            for r, q in terms:
                total += _enclose(q) * iv.exp(_enclose(r))
            return total.a, total.b
        finally:
            iv.prec = saved


@cached(cache=LRUCache(maxsize=4096), lock=threading.Lock())
def _interval_sign(terms):
    '''Sign of a nonzero exp-polynomial by interval evaluation with doubling
    precision.

    Distinct rational exponents make the value provably nonzero
    (Lindemann-Weierstrass), so the enclosure eventually excludes 0.'''
    prec = _START_PREC
    while prec <= _MAX_PREC:
        low, high = _enclosure(terms, prec)
        if low > 0:
            return 1
        if high < 0:
            return -1
        _logger.debug(f'sign undecided at {prec} bits, refining')
        prec *= 2
    raise ArithmeticError('interval sign refinement did not terminate')


_ONE_POLY = _ExpPoly.monomial(0)


class ExpRational:
    '''A formal quotient of finite Q-linear combinations of e^r.

    Instances always denote irrational values: anything that simplifies to a
    rational number is returned as a Fraction instead.'''

    __slots__ = ('num', 'den')

    def __init__(self, num, den):
        self.num = num
        self.den = den

    @classmethod
    def make(cls, num, den=_ONE_POLY):
        if not den:
            raise ZeroDivisionError('ExpRational denominator is zero')
        if not num:
            return ZERO
        if den.is_monomial():
            r, q = den.terms[0]
            num = num * _ExpPoly.monomial(-r, 1 / q)
            den = _ONE_POLY
        else:
            (rn, qn), (rd, qd) = num.lead(), den.lead()
            ratio = _ExpPoly.monomial(rn - rd, qn / qd)
            if den * ratio == num:
                num, den = ratio, _ONE_POLY
        if den == _ONE_POLY and num.is_monomial() and num.terms[0][0] == 0:
            return num.terms[0][1]
        return cls(num, den)

    @classmethod
    def exp(cls, r):
        '''e^r for rational r.'''
        return cls.make(_ExpPoly.monomial(r))

    @staticmethod
    def _parts(value):
        if isinstance(value, ExpRational):
            return value.num, value.den
        if isinstance(value, (Rational, Fraction)):
            return _ExpPoly.monomial(0, Fraction(value)), _ONE_POLY
        return None

    def sign(self):
        return self.num.sign() * self.den.sign()

    def single_term(self):
        '''Return (q, r) if self == q*e^r, otherwise None.'''
        if self.den == _ONE_POLY and self.num.is_monomial():
            r, q = self.num.terms[0]
            return q, r
        return None

    def __add__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        n2, d2 = parts
        if self.den == d2:
            return ExpRational.make(self.num + n2, d2)
        return ExpRational.make(self.num * d2 + n2 * self.den, self.den * d2)

    __radd__ = __add__

    def __neg__(self):
        return ExpRational(-self.num, self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        return self + ExpRational(-parts[0], parts[1])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        n2, d2 = parts
        return ExpRational.make(self.num * n2, self.den * d2)

    __rmul__ = __mul__

    def __truediv__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        n2, d2 = parts
        if not n2:
            raise ZeroDivisionError('division of an exp-rational constant by zero')
        return ExpRational.make(self.num * d2, self.den * n2)

    def __rtruediv__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        n1, d1 = parts
        return ExpRational.make(n1 * self.den, d1 * self.num)

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        result, base = ONE, self
        if n < 0:
            base, n = ONE / self, -n
        while n:
            if n & 1:
                result = base * result
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        n2, d2 = parts
        return self.num * d2 == n2 * self.den

    def __hash__(self):
        # Instances are never rational, and equal instances may have
        # different normal forms.
        return 0x7e5

    def __bool__(self):
        return True

    def _cmp(self, other):
        diff = self - other
        return diff.sign() if isinstance(diff, ExpRational) else (diff > 0) - (diff < 0)

    def __lt__(self, other):
        return self._cmp(other) < 0 if self._parts(other) else NotImplemented

    def __le__(self, other):
        return self._cmp(other) <= 0 if self._parts(other) else NotImplemented

    def __gt__(self, other):
        return self._cmp(other) > 0 if self._parts(other) else NotImplemented

    def __ge__(self, other):
        return self._cmp(other) >= 0 if self._parts(other) else NotImplemented

    def __repr__(self):
        return f'ExpRational({self.num.terms!r}, {self.den.terms!r})'


def const_sign(c):
    '''Exact sign of a constant: -1, 0 or +1.'''
    if isinstance(c, ExpRational):
        return c.sign()
    return (c > 0) - (c < 0)


class ConstantField:
    '''Capabilities of an exact ordered field beyond the field operations.'''

    name = None

    def exp(self, c):
        if c == 0:
            return ONE
        raise ConstantExpUnsupported(
            f'the {self.name} constant field has no exp at {c}; '
            f'try the exprational field')

    def log(self, c):
        if c == 1:
            return ZERO
        raise ConstantLogUnsupported(
            f'the {self.name} constant field has no log at {c}')

    def power(self, c, r):
        '''Return c**r for positive c and rational r.'''
        r = Fraction(r)
        if r.denominator == 1:
            return c ** r.numerator
        if isinstance(c, Fraction):
            result = rational_power(c, r)
            if result is not None:
                return result
        raise ConstantCapabilityMissing(
            f'the {self.name} constant field cannot raise {c} to {r}')

    def __repr__(self):
        return f'<{self.__class__.__name__}>'


class RationalField(ConstantField):
    '''Arbitrary precision rationals; exp only at 0 and log only at 1.'''
    name = 'rational'


class ExpRationalField(ConstantField):
    '''Rationals extended by e^r for rational r.'''
    name = 'exprational'

    def exp(self, c):
        c = coerce(c)
        if is_rational(c):
            return ExpRational.exp(c)
        raise ConstantExpUnsupported(f'exp of {c} is not in the {self.name} field')

    def log(self, c):
        if c == 1:
            return ZERO
        if isinstance(c, ExpRational):
            single = c.single_term()
            if single is not None and single[0] == 1:
                return single[1]
        raise ConstantLogUnsupported(f'the {self.name} constant field has no log at {c}')

    def power(self, c, r):
        r = Fraction(r)
        if isinstance(c, ExpRational) and r.denominator != 1:
            single = c.single_term()
            if single is not None:
                q, s = single
                scale = rational_power(q, r)
                if scale is not None:
                    return scale * ExpRational.exp(s * r)
            raise ConstantCapabilityMissing(
                f'the {self.name} constant field cannot raise {c} to {r}')
        return super().power(c, r)


RATIONAL = RationalField()
EXP_RATIONAL = ExpRationalField()
FIELDS = {field.name: field for field in (RATIONAL, EXP_RATIONAL)}

_active_field = ContextVar('constant_field', default=RATIONAL)


def lookup_field(name):
    try:
        return FIELDS[name.strip().lower()]
    except KeyError:
        raise ValueError(f'unknown constant field "{name}"') from None


def active_field():
    return _active_field.get()


def set_field(field):
    '''Make field (an instance or a name) active in the current context.'''
    if isinstance(field, str):
        field = lookup_field(field)
    _active_field.set(field)
    return field


@contextmanager
def use_field(field):
    if isinstance(field, str):
        field = lookup_field(field)
    token = _active_field.set(field)
    try:
        yield field
    finally:
        _active_field.reset(token)


def const_exp(c):
    '''e^c in the active field; raises ConstantExpUnsupported.'''
    return active_field().exp(c)


def const_log(c):
    return active_field().log(c)


def const_power(c, r):
    return active_field().power(c, r)
