"""Operator expressions: ``D``, ``I``, ``H``, ``x``, ``e(i,j)``, rationals, ``+ - * ^`` and parentheses."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .element import I1Element

_NUM = re.compile(r"\d+(?:/\d+)?")


class ExprSyntaxError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.message = message
        self.pos = pos


@dataclass(frozen=True)
class Node:
    """Expression tree node; ``op`` is one of num, gen, e, add, sub, mul, neg, pow."""
    op: str
    args: tuple


@dataclass(frozen=True)
class _Tok:
    kind: str  # num, sym, punct, end
    text: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    out = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
        elif ch.isdigit():
            m = _NUM.match(text, pos)
            out.append(_Tok("num", m.group(0), pos))
            pos = m.end()
        elif ch in "DIHxe":
            out.append(_Tok("sym", ch, pos))
            pos += 1
        elif ch in "+-*^(),":
            out.append(_Tok("punct", ch, pos))
            pos += 1
        else:
            raise ExprSyntaxError(f"unexpected character {ch!r}", pos)
    out.append(_Tok("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, allow_negative_powers: bool):
        self.toks = _tokenize(text)
        self.i = 0
        self.allow_neg = allow_negative_powers

    @property
    def cur(self) -> _Tok:
        return self.toks[self.i]

    def take(self, text: str | None = None) -> _Tok:
        t = self.cur
        if text is not None and t.text != text:
            found = "end of input" if t.kind == "end" else repr(t.text)
            raise ExprSyntaxError(f"expected {text!r}, found {found}", t.pos)
        self.i += 1
        return t

    def parse(self) -> Node:
        if self.cur.kind == "end":
            raise ExprSyntaxError("empty expression", 0)
        node = self.expr()
        if self.cur.kind != "end":
            raise ExprSyntaxError(f"unexpected {self.cur.text!r}", self.cur.pos)
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.cur.text in ("+", "-") and self.cur.kind == "punct":
            op = self.take().text
            node = Node("add" if op == "+" else "sub", (node, self.term()))
        return node

    def term(self) -> Node:
        node = self.unary()
        while self.cur.text == "*" and self.cur.kind == "punct":
            self.take()
            node = Node("mul", (node, self.unary()))
        return node

    def unary(self) -> Node:
        if self.cur.kind == "punct" and self.cur.text == "-":
            self.take()
            return Node("neg", (self.unary(),))
        return self.power()

    def power(self) -> Node:
        base = self.atom()
        if self.cur.kind == "punct" and self.cur.text == "^":
            self.take()
            sign = 1
            t = self.cur
            if t.kind == "punct" and t.text == "-":
                self.take()
                sign = -1
                if not self.allow_neg:
                    raise ExprSyntaxError("negative exponent", t.pos)
            t = self.cur
            if t.kind != "num" or "/" in t.text:
                raise ExprSyntaxError("exponent must be a non-negative integer", t.pos)
            self.take()
            exp = sign * int(t.text)
            if exp < 0 and not (base.op == "gen" and base.args[0] == "D"):
                raise ExprSyntaxError("negative exponent is only allowed on D", t.pos)
            return Node("pow", (base, exp))
        return base

    def atom(self) -> Node:
        t = self.cur
        if t.kind == "num":
            self.take()
            return Node("num", (Fraction(t.text),))
        if t.kind == "sym":
            self.take()
            if t.text == "e":
                self.take("(")
                i = self._nat()
                self.take(",")
                j = self._nat()
                self.take(")")
                return Node("e", (i, j))
            return Node("gen", (t.text,))
        if t.kind == "punct" and t.text == "(":
            self.take()
            node = self.expr()
            self.take(")")
            return node
        found = "end of input" if t.kind == "end" else repr(t.text)
        raise ExprSyntaxError(f"expected an operand, found {found}", t.pos)

    def _nat(self) -> int:
        t = self.cur
        if t.kind != "num" or "/" in t.text:
            raise ExprSyntaxError("expected a non-negative integer index", t.pos)
        self.take()
        return int(t.text)


def parse(text: str, *, allow_negative_powers: bool = False) -> Node:
    return _Parser(text, allow_negative_powers).parse()


def evaluate(node: Node, algebra) -> object:
    """Fold a tree with ``algebra``: an object with gen/num/e/pow hooks."""
    op, args = node.op, node.args
    if op == "num":
        return algebra.num(args[0])
    if op == "gen":
        return algebra.gen(args[0])
    if op == "e":
        return algebra.e(*args)
    if op == "neg":
        return -evaluate(args[0], algebra)
    if op == "add":
        return evaluate(args[0], algebra) + evaluate(args[1], algebra)
    if op == "sub":
        return evaluate(args[0], algebra) - evaluate(args[1], algebra)
    if op == "mul":
        return evaluate(args[0], algebra) * evaluate(args[1], algebra)
    if op == "pow":
        return algebra.pow(evaluate(args[0], algebra), args[1], args[0])
    raise ValueError(f"unknown node {op}")


class _I1:
    @staticmethod
    def num(c):
        return I1Element.scalar(c)

    @staticmethod
    def gen(name):
        return {"D": I1Element.D, "I": I1Element.I, "H": I1Element.H, "x": I1Element.x}[name]()

    @staticmethod
    def e(i, j):
        return I1Element.e(i, j)

    @staticmethod
    def pow(value, n, base):
        if n < 0:
            raise ValueError("negative exponent")
        return value ** n


def normalize(tree: Node) -> I1Element:
    return evaluate(tree, _I1)


def parse_element(text: str) -> I1Element:
    return normalize(parse(text))
