"""Recursive-descent parser for operator expressions.

Grammar (ASCII)::

    expr      := ['-'] term (('+' | '-') term)*
    term      := factor ('*' factor)*
    factor    := atom ('^' uint)?
    atom      := generator | rational | param | '(' expr ')'
               | '{' expr ',' expr '}' | '[' expr ',' expr ']'
    generator := 'A0' | 'A+' | 'A-' | 'P' | 'Q' | 'K1' | 'K2' | 'K3'
               | 'W1' | 'W2' | 'W3' | 'C'
    param     := 'm2' | 'm3' | 'm4'
    rational  := int ('/' uint)?

A single leading minus is accepted in ``expr`` so that inputs such as
``"-1/4 + Q^2"`` or ``"(-A+)"`` read naturally.
"""

import re
from fractions import Fraction

from ..errors import NegativeExponent, ParseError, UnknownIdentifier
from .expr import GENERATORS, NCExpr, anticommutator, commutator
from .scalars import PARAM_NAMES, ParamScalar

_PUNCT = set("+-*^/(){}[],")


def tokenize(text):
    """Split ``text`` into ``(kind, value, position)`` triples."""
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            m = re.match(r"\d+", text[i:])
            tokens.append(("int", int(m.group()), i))
            i += len(m.group())
            continue
        if ch.isalpha():
            if ch == "A" and i + 1 < n and text[i + 1] in "+-":
                tokens.append(("name", text[i : i + 2], i))
                i += 2
                continue
            m = re.match(r"[A-Za-z][A-Za-z0-9_]*", text[i:])
            name = m.group()
            if name not in GENERATORS and name not in PARAM_NAMES:
                raise UnknownIdentifier(f"unknown identifier {name!r}", i)
            tokens.append(("name", name, i))
            i += len(name)
            continue
        if ch in _PUNCT:
            tokens.append(("op", ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", None, n))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, value):
        kind, val, where = self.advance()
        if kind != "op" or val != value:
            shown = "end of input" if kind == "end" else repr(val)
            raise ParseError(f"expected {value!r}, found {shown}", where)

    def at_op(self, *values):
        kind, val, _ = self.peek()
        return kind == "op" and val in values

    def parse(self):
        result = self.expr()
        kind, val, where = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected token {val!r}", where)
        return result

    def expr(self):
        negate = False
        if self.at_op("-"):
            self.advance()
            negate = True
        result = self.term()
        if negate:
            result = -result
        while self.at_op("+", "-"):
            _, op, _ = self.advance()
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self):
        result = self.factor()
        while self.at_op("*"):
            self.advance()
            result = result * self.factor()
        return result

    def factor(self):
        base = self.atom()
        if self.at_op("^"):
            self.advance()
            kind, val, where = self.advance()
            if kind == "op" and val == "-":
                raise NegativeExponent("negative exponent", where)
            if kind != "int":
                raise ParseError("exponent must be a non-negative integer", where)
            base = base**val
        return base

    def atom(self):
        kind, val, where = self.advance()
        if kind == "int":
            value = Fraction(val)
            if self.at_op("/"):
                self.advance()
                k2, den, w2 = self.advance()
                if k2 != "int":
                    raise ParseError("expected denominator", w2)
                if den == 0:
                    raise ParseError("zero denominator", w2)
                value = Fraction(val, den)
            return NCExpr.scalar(value)
        if kind == "name":
            if val in PARAM_NAMES:
                return NCExpr.scalar(ParamScalar.param(val))
            return NCExpr.gen(val)
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        if kind == "op" and val in "{[":
            closing = "}" if val == "{" else "]"
            lhs = self.expr()
            self.expect(",")
            rhs = self.expr()
            self.expect(closing)
            return anticommutator(lhs, rhs) if val == "{" else commutator(lhs, rhs)
        shown = "end of input" if kind == "end" else repr(val)
        raise ParseError(f"unexpected {shown}", where)


def parse(text):
    """Parse ``text`` into an :class:`NCExpr` without expanding named elements.

    >>> str(parse("{A+, A-}"))
    'A+*A- + A-*A+'
    """
    return _Parser(text).parse()
