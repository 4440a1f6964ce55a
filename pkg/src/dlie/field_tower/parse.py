"""Text grammar for field elements.

Accepted input: integers, `w` (the cube root of unity), `t`, the radicals
`r2` and `r3` where the target tower provides them, and `+ - * / ^ ( )`.
Examples: `(1 - t^3)`, `1 + r2`, `2*t/(t^2 + 1)`.
"""

from __future__ import annotations

import re

from ..errors import ParseError
from .ratfunc import RatFunc
from .tower import TRIVIAL, TowerElement, TowerSpec

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9]*)|([()+\-*/^]))")


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise ParseError(f"unexpected character {text[pos:].strip()[0]!r}")
            break
        num, name, op = m.groups()
        if num is not None:
            tokens.append(("int", int(num)))
        elif name is not None:
            if name not in ("w", "t", "r2", "r3"):
                raise ParseError(f"unknown symbol {name!r}")
            tokens.append(("name", name))
        else:
            tokens.append(("op", op))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens: list, spec: TowerSpec):
        self.tokens = tokens
        self.pos = 0
        self.spec = spec

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect_op(self, op: str):
        kind, val = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}")

    def parse(self) -> TowerElement:
        el = self.expr()
        if self.pos != len(self.tokens):
            raise ParseError("trailing input after expression")
        return el

    def expr(self) -> TowerElement:
        el = self.term()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.pos += 1
                rhs = self.term()
                el = el + rhs if val == "+" else el - rhs
            else:
                return el

    def term(self) -> TowerElement:
        el = self.factor()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "*/":
                self.pos += 1
                rhs = self.factor()
                try:
                    el = el * rhs if val == "*" else el / rhs
                except ZeroDivisionError:
                    raise ParseError("division by zero in input") from None
            else:
                return el

    def factor(self) -> TowerElement:
        kind, val = self.peek()
        if kind == "op" and val == "-":
            self.pos += 1
            return -self.factor()
        return self.power()

    def power(self) -> TowerElement:
        base = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.pos += 1
            exp = self.exponent()
            try:
                return base**exp
            except ZeroDivisionError:
                raise ParseError("zero raised to a negative power") from None
        return base

    def exponent(self) -> int:
        kind, val = self.take()
        if kind == "op" and val == "-":
            kind, val = self.take()
            if kind != "int":
                raise ParseError("expected an integer exponent")
            return -val
        if kind != "int":
            raise ParseError("expected an integer exponent")
        return val

    def atom(self) -> TowerElement:
        kind, val = self.take()
        if kind == "int":
            return self.spec.from_base(val)
        if kind == "name":
            if val == "w":
                from .scalars import OMEGA

                return self.spec.from_base(RatFunc.const(OMEGA))
            if val == "t":
                return self.spec.t()
            if val == "r2":
                if not self.spec.has_quadratic:
                    raise ParseError("r2 is not available in this context")
                return self.spec.r2()
            if not self.spec.has_cubic:
                raise ParseError("r3 is not available in this context")
            return self.spec.r3()
        if kind == "op" and val == "(":
            el = self.expr()
            self.expect_op(")")
            return el
        raise ParseError("expected a value" if kind is None else f"unexpected {val!r}")


def parse_element(text: str, spec: TowerSpec) -> TowerElement:
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty input")
    return _Parser(tokens, spec).parse()


def parse_ratfunc(text: str) -> RatFunc:
    return parse_element(text, TRIVIAL).base_value()
