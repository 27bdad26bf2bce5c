# Copyright (c) 2026, the transseries authors
#
# All rights reserved.
#
# See the file "LICENCE" for information about the copyright
# and warranty status of this software.

'''Ordered monomial groups: logarithmic monomials and transmonomials.

Every monomial is a TransMonomial exp(a)*l where l is a LogMonomial
l0^a0 l1^a1 ... ln^an (l0 = x, l1 = log x, ...) and a is a purely infinite
finite series stored as a tuple of (monomial, coefficient) pairs sorted in
strictly decreasing order.  Real powers x^r are the monomials supported on
the index-0 axis of the logarithmic group.

Normal form: the coefficient of l_j (j >= 1) in log m is kept in one place.
A rational total becomes the exponent of l_{j-1} in l; an irrational one
stays in a, and l then has no l_{j-1} factor.  Two monomials are therefore
equal exactly when their stored forms are.
'''

import threading
from fractions import Fraction

from cachetools import LRUCache, cached

from transseries.lib.constants import ZERO, const_sign, is_rational


class LogMonomial:
    '''l0^a0 ... ln^an with rational exponents.

    exponents is a tuple of (index, exponent) pairs sorted by index with no
    zero exponents.  The identity is the empty tuple.'''

    __slots__ = ('exponents', '_hash')

    def __init__(self, exponents=()):
        self.exponents = tuple(exponents)
        self._hash = hash(self.exponents)

    @classmethod
    def build(cls, pairs):
        acc = {}
        for index, exponent in pairs:
            if index < 0:
                raise ValueError(f'negative logarithm index {index}')
            acc[index] = acc.get(index, ZERO) + Fraction(exponent)
        return cls(sorted((i, e) for i, e in acc.items() if e))

    def __eq__(self, other):
        return isinstance(other, LogMonomial) and self.exponents == other.exponents

    def __hash__(self):
        return self._hash

    def __bool__(self):
        '''True unless this is the identity.'''
        return bool(self.exponents)

    def __mul__(self, other):
        return LogMonomial.build(self.exponents + other.exponents)

    def inverse(self):
        return LogMonomial((i, -e) for i, e in self.exponents)

    def __pow__(self, r):
        r = Fraction(r)
        if not r:
            return ONE_LOG
        return LogMonomial((i, e * r) for i, e in self.exponents)

    def exponent(self, index):
        for i, e in self.exponents:
            if i == index:
                return e
        return ZERO

    def compare_one(self):
        '''Sign of self against 1: decided by the exponent at the least
        index, since l_n dominates every power of l_{n+1}.'''
        if not self.exponents:
            return 0
        return 1 if self.exponents[0][1] > 0 else -1

    def single_log(self):
        '''Return j if self is exactly l_j, otherwise None.'''
        if len(self.exponents) == 1 and self.exponents[0][1] == 1:
            return self.exponents[0][0]
        return None

    def __repr__(self):
        return f'LogMonomial({self.exponents!r})'


ONE_LOG = LogMonomial()


class TransMonomial:
    '''exp(arg) * logs in normal form.  Instances are immutable.'''

    __slots__ = ('arg', 'logs', 'height', '_hash')

    def __init__(self, arg=(), logs=ONE_LOG):
        self.arg = tuple(arg)
        self.logs = logs
        self.height = 1 + max(m.height for m, _c in self.arg) if self.arg else 0
        self._hash = hash((logs, tuple(m for m, _c in self.arg)))

    @classmethod
    def make(cls, arg=(), logs=ONE_LOG):
        '''Build the normal form of exp(arg) * logs from sorted arg terms.'''
        rational = dict(logs.exponents)
        kept, irrational = [], {}
        for m, c in arg:
            j = m.logs.single_log() if m.is_logarithmic else None
            if j is None or j < 1:
                kept.append((m, c))
            elif is_rational(c):
                rational[j - 1] = rational.get(j - 1, ZERO) + c
            else:
                irrational[j] = len(kept)
                kept.append((m, c))
        for j, position in irrational.items():
            m, c = kept[position]
            total = c + rational.pop(j - 1, ZERO)
            if is_rational(total):
                rational[j - 1] = total
                kept[position] = None
            else:
                kept[position] = (m, total)
        return cls((pair for pair in kept if pair is not None),
                   LogMonomial.build(rational.items()))

    @property
    def is_logarithmic(self):
        return not self.arg

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, TransMonomial):
            return NotImplemented
        return (self._hash == other._hash and self.logs == other.logs
                and len(self.arg) == len(other.arg)
                and all(m == n and c == d for (m, c), (n, d)
                        in zip(self.arg, other.arg)))

    def __hash__(self):
        return self._hash

    def __mul__(self, other):
        if not isinstance(other, TransMonomial):
            return NotImplemented
        if not other.arg and not other.logs:
            return self
        if not self.arg and not self.logs:
            return other
        return TransMonomial.make(merge_terms(self.arg, other.arg),
                                  self.logs * other.logs)

    def inverse(self):
        return TransMonomial.make(((m, -c) for m, c in self.arg),
                                  self.logs.inverse())

    def __truediv__(self, other):
        return self * other.inverse()

    def __pow__(self, r):
        r = Fraction(r)
        if not r:
            return ONE
        return TransMonomial.make(((m, c * r) for m, c in self.arg),
                                  self.logs ** r)

    def exp_part(self):
        return TransMonomial(self.arg)

    def log_part(self):
        return TransMonomial((), self.logs)

    def log_terms(self):
        '''The terms of log(self) = arg + sum a_i l_{i+1}, sorted.'''
        logs = tuple((ell(i + 1), e) for i, e in self.logs.exponents)
        return merge_terms(self.arg, logs)

    # Ordering

    def __lt__(self, other):
        return monomial_cmp(self, other) < 0

    def __le__(self, other):
        return monomial_cmp(self, other) <= 0

    def __gt__(self, other):
        return monomial_cmp(self, other) > 0

    def __ge__(self, other):
        return monomial_cmp(self, other) >= 0

    def __repr__(self):
        from transseries.lib.text import monomial_string
        return f'<TransMonomial {monomial_string(self)}>'


ONE = TransMonomial()


def x_power(r):
    '''The real-power monomial x^r.'''
    return TransMonomial((), LogMonomial.build(((0, r), )))


def ell(n, r=1):
    '''The logarithmic monomial l_n^r (l_0 = x).'''
    return TransMonomial((), LogMonomial.build(((n, r), )))


def log_monomial_of(pairs):
    '''Logarithmic monomial from (index, exponent) pairs.'''
    return TransMonomial((), LogMonomial.build(pairs))


def _compare_one(q):
    '''Sign of log q: 1 if the monomial q is infinitely large, -1 if it is
    infinitesimal and 0 if q is 1.

    On normal forms whose argument dominates the logarithmic scale this is
    the lexicographic rule "arg > 0, or arg = 0 and logs > 1".'''
    if not q.arg:
        return q.logs.compare_one()
    terms = q.log_terms()
    if not terms:
        return 0
    return const_sign(terms[0][1])


@cached(cache=LRUCache(maxsize=1 << 16), lock=threading.Lock())
def _cached_cmp(m, n):
    if m == n:
        return 0
    return _compare_one(m / n)


def monomial_cmp(m, n):
    '''Return -1, 0 or 1 as m is asymptotically smaller than, equal to or
    larger than n.'''
    if m is n:
        return 0
    return _cached_cmp(m, n)


def merge_terms(a, b):
    '''Add two sorted term tuples, dropping cancelled coefficients.'''
    if not a:
        return tuple(b)
    if not b:
        return tuple(a)
    result = []
    i = j = 0
    while i < len(a) and j < len(b):
        (m, c), (n, d) = a[i], b[j]
        order = monomial_cmp(m, n)
        if order > 0:
            result.append(a[i])
            i += 1
        elif order < 0:
            result.append(b[j])
            j += 1
        else:
            total = c + d
            if total != 0:
                result.append((m, total))
            i += 1
            j += 1
    result.extend(a[i:])
    result.extend(b[j:])
    return tuple(result)


def exp_monomial(terms):
    '''Return the canonical monomial exp(f) for a purely infinite finite
    series f given by its sorted terms.

    Every term c*l_j with j >= 1 and rational c is extracted into the
    logarithmic part as l_{j-1}^c.'''
    for m, _c in terms:
        if monomial_cmp(m, ONE) <= 0:
            raise ValueError('exp_monomial needs a purely infinite argument')
    return TransMonomial.make(terms)


def monomial_mul(m, n):
    return m * n


def monomial_inv(m):
    return m.inverse()


def log_monomial(m):
    '''log m as a finite series: arg + sum a_i l_{i+1}.'''
    from transseries.lib.series import from_sorted_terms
    return from_sorted_terms(m.log_terms())
