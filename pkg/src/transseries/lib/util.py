# Copyright (c) 2016-2017, Neil Booth
# Copyright (c) 2026, the transseries authors
#
# All rights reserved.
#
# The MIT License (MIT)
#
# Permission is hereby granted, free of charge, to any person obtaining
# a copy of this software and associated documentation files (the
# "Software"), to deal in the Software without restriction, including
# without limitation the rights to use, copy, modify, merge, publish,
# distribute, sublicense, and/or sell copies of the Software, and to
# permit persons to whom the Software is furnished to do so, subject to
# the following conditions:
#
# The above copyright notice and this permission notice shall be
# included in all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
# EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF
# MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
# NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT HOLDERS BE
# LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY, WHETHER IN AN ACTION
# OF CONTRACT, TORT OR OTHERWISE, ARISING FROM, OUT OF OR IN CONNECTION
# WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE SOFTWARE.

'''Miscellaneous utility classes and functions.'''


import logging
from fractions import Fraction
from math import factorial


# Logging utilities


class CompactFormatter(logging.Formatter):
    '''Strips the module from the logger name to leave the class only.'''
    def format(self, record):
        record.name = record.name.rpartition('.')[-1]
        return super().format(record)


def make_logger(name, *, handler, level):
    '''Return the root transseries logger.'''
    logger = logging.getLogger(name)
    logger.addHandler(handler)
    logger.setLevel(level)
    logger.propagate = False
    return logger


def class_logger(path, classname):
    '''Return a hierarchical logger for a class.'''
    return logging.getLogger(path).getChild(classname)


def parse_rational(text):
    '''Convert a literal such as "3", "-2/7" or "0.25" to a Fraction.

    Raises ValueError on anything else.'''
    text = text.strip()
    if not text:
        raise ValueError('empty rational literal')
    return Fraction(text)


def rational_string(q):
    '''Render a Fraction as "p" or "p/q".'''
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f'{q.numerator}/{q.denominator}'


def inverse_factorial(n):
    return Fraction(1, factorial(n))


def binomial(r, n):
    '''Generalized binomial coefficient r choose n for rational r.'''
    result = Fraction(1)
    for k in range(n):
        result = result * (r - k) / (k + 1)
    return result


def integer_root(n, k):
    '''Return the exact k-th root of the non-negative integer n, or None.'''
    if n < 0:
        raise ValueError('integer_root of a negative number')
    if n in (0, 1):
        return n
    lo, hi = 1, 1 << (n.bit_length() // k + 1)
    while lo <= hi:
        mid = (lo + hi) // 2
        p = mid ** k
        if p == n:
            return mid
        if p < n:
            lo = mid + 1
        else:
            hi = mid - 1
    return None


def rational_power(q, r):
    '''Return q**r exactly for a positive Fraction q and rational r, or
    None if the result is irrational.'''
    q, r = Fraction(q), Fraction(r)
    if q <= 0:
        raise ValueError('rational_power needs a positive base')
    if r.denominator == 1:
        return q ** r.numerator
    k = r.denominator
    num = integer_root(q.numerator, k)
    den = integer_root(q.denominator, k)
    if num is None or den is None:
        return None
    return Fraction(num, den) ** r.numerator
