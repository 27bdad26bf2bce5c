# Copyright (c) 2026, the transseries authors
#
# All rights reserved.
#
# See the file "LICENCE" for information about the copyright
# and warranty status of this software.

'''Expression front-end.

Grammar, from loosest to tightest binding:

    sum     := product (('+' | '-') product)*
    product := unary (('*' | '/') unary)*
    unary   := '-' unary | power
    power   := atom ('^' unary)?
    atom    := NUMBER | NAME | NAME '(' sum (',' sum)* ')' | '(' sum ')'

so ^ binds tighter than unary minus and associates to the right.  Every node
carries the span (start, end) of the text it was parsed from.
'''

import re
from typing import NamedTuple

import attr

from transseries.lib.util import parse_rational


class ParseError(Exception):
    '''A syntax error at the 0-based offset into the text.'''

    def __init__(self, message, offset):
        super().__init__(message)
        self.message = message
        self.offset = offset

    def __str__(self):
        return f'{self.message} at offset {self.offset}'


class Token(NamedTuple):
    kind: str
    text: str
    start: int

    @property
    def end(self):
        return self.start + len(self.text)


TOKEN_RE = re.compile(r'''
    (?P<space>\s+)
  | (?P<number>\d+(?:\.\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*/^(),])
''', re.VERBOSE)


def tokenize(text):
    '''Yield the tokens of text followed by an "end" token.'''
    pos = 0
    while pos < len(text):
        match = TOKEN_RE.match(text, pos)
        if match is None:
            raise ParseError(f'unexpected character {text[pos]!r}', pos)
        if match.lastgroup != 'space':
            yield Token(match.lastgroup, match.group(), pos)
        pos = match.end()
    yield Token('end', '', len(text))


# AST nodes

@attr.s(slots=True, frozen=True)
class Number:
    value = attr.ib()
    span = attr.ib()


@attr.s(slots=True, frozen=True)
class Name:
    name = attr.ib()
    span = attr.ib()


@attr.s(slots=True, frozen=True)
class Negate:
    operand = attr.ib()
    span = attr.ib()


@attr.s(slots=True, frozen=True)
class BinaryOp:
    op = attr.ib()
    left = attr.ib()
    right = attr.ib()
    span = attr.ib()


@attr.s(slots=True, frozen=True)
class Call:
    function = attr.ib()
    args = attr.ib(converter=tuple)
    span = attr.ib()


class _Parser:

    def __init__(self, text):
        self.tokens = list(tokenize(text))
        self.index = 0

    @property
    def token(self):
        return self.tokens[self.index]

    def advance(self):
        token = self.token
        self.index += 1
        return token

    def accept(self, *texts):
        if self.token.kind == 'op' and self.token.text in texts:
            return self.advance()
        return None

    def expect(self, text):
        if self.accept(text) is None:
            self.fail(f'expected {text!r}')

    def fail(self, message=None):
        token = self.token
        if message is None:
            message = ('unexpected end of input' if token.kind == 'end'
                       else f'unexpected {token.text!r}')
        elif token.kind == 'end':
            message += ' before end of input'
        else:
            message += f', found {token.text!r}'
        raise ParseError(message, token.start)

    def parse(self):
        node = self.sum()
        if self.token.kind != 'end':
            self.fail()
        return node

    def sum(self):
        node = self.product()
        while (token := self.accept('+', '-')):
            right = self.product()
            node = BinaryOp(token.text, node, right, (node.span[0], right.span[1]))
        return node

    def product(self):
        node = self.unary()
        while (token := self.accept('*', '/')):
            right = self.unary()
            node = BinaryOp(token.text, node, right, (node.span[0], right.span[1]))
        return node

    def unary(self):
        token = self.accept('-')
        if token is not None:
            operand = self.unary()
            return Negate(operand, (token.start, operand.span[1]))
        return self.power()

    def power(self):
        node = self.atom()
        if self.accept('^'):
            exponent = self.unary()
            node = BinaryOp('^', node, exponent, (node.span[0], exponent.span[1]))
        return node

    def atom(self):
        token = self.token
        if token.kind == 'number':
            self.advance()
            return Number(parse_rational(token.text), (token.start, token.end))
        if token.kind == 'name':
            self.advance()
            if self.accept('('):
                args = [self.sum()]
                while self.accept(','):
                    args.append(self.sum())
                close = self.token
                self.expect(')')
                return Call(token.text, args, (token.start, close.end))
            return Name(token.text, (token.start, token.end))
        if (open_paren := self.accept('(')):
            node = self.sum()
            close = self.token
            self.expect(')')
            return attr.evolve(node, span=(open_paren.start, close.end))
        self.fail()


def parse(text):
    '''Parse text into an expression tree; raises ParseError.'''
    return _Parser(text).parse()
