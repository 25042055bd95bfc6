"""Parser for algebra expressions such as ``a*x + b*e`` or ``-3/2*b^2``.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' INT)?
    atom   := INT ('/' INT)? | NAME | '(' expr ')'
"""

from __future__ import annotations

import re
from fractions import Fraction

from .grading import Element, GradedAlgebra

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


class ExpressionError(ValueError):
    def __init__(self, message: str, column: int):
        super().__init__(f"column {column}: {message}")
        self.message = message
        self.column = column


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        num, name, op = m.groups()
        col = m.start(m.lastindex) + 1
        if num is not None:
            tokens.append(("num", num, col))
        elif name is not None:
            tokens.append(("name", name, col))
        elif op is not None and not op.isspace():
            if op not in "+-*/^()":
                raise ExpressionError(f"unexpected character {op!r}", col)
            tokens.append(("op", op, col))
        pos = m.end()
    tokens.append(("end", "", len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, algebra: GradedAlgebra, text: str):
        self.algebra = algebra
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, op):
        kind, val, col = self.take()
        if kind != "op" or val != op:
            raise ExpressionError(f"expected {op!r}, found {val or 'end of input'!r}", col)

    def parse(self) -> Element:
        if self.peek()[0] == "end":
            raise ExpressionError("empty expression", self.peek()[2])
        value = self.expr()
        kind, val, col = self.peek()
        if kind != "end":
            raise ExpressionError(f"unexpected {val!r}", col)
        return value

    def expr(self) -> Element:
        value = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> Element:
        value = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            value = value * self.unary()
        return value

    def unary(self) -> Element:
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            inner = self.unary()
            return -inner if val == "-" else inner
        return self.power()

    def power(self) -> Element:
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            kind, val, col = self.take()
            if kind != "num":
                raise ExpressionError("exponent must be a nonnegative integer", col)
            return base ** int(val)
        return base

    def atom(self) -> Element:
        kind, val, col = self.take()
        if kind == "num":
            c = Fraction(int(val))
            if self.peek()[0] == "op" and self.peek()[1] == "/":
                self.take()
                k2, v2, c2 = self.take()
                if k2 != "num":
                    raise ExpressionError("expected integer denominator", c2)
                if int(v2) == 0:
                    raise ExpressionError("zero denominator", c2)
                c = c / int(v2)
            return self.algebra.scalar(c)
        if kind == "name":
            if val not in self.algebra.by_name:
                raise ExpressionError(f"undeclared generator {val!r}", col)
            return self.algebra.gen(val)
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise ExpressionError(f"unexpected {val or 'end of input'!r}", col)


def parse_expression(algebra: GradedAlgebra, text: str) -> Element:
    return _Parser(algebra, text).parse()
