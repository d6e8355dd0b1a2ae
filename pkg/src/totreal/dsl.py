"""Manifold expression language.

Grammar::

    expr   := term ("#" term)*
    term   := factor ("*" factor)*
    factor := atom | "(" expr ")"
    atom   := ("CP" | "RP" | "S" | "T" | "R") INT

``*`` binds tighter than ``#``; both associate to the left.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from typing import Union

from . import catalog
from .catalog import FAMILIES, ManifoldDescriptor
from .errors import ParseError

Span = tuple[int, int]


@dataclass(frozen=True)
class Atom:
    family: str
    n: int
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Product:
    left: "Expr"
    right: "Expr"
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class CSum:
    left: "Expr"
    right: "Expr"
    span: Span = field(default=(0, 0), compare=False)


Expr = Union[Atom, Product, CSum]

_TOKEN = re.compile(r"(?:(?P<word>[A-Za-z]+)|(?P<int>\d+)|(?P<op>[*#()]))")


@dataclass(frozen=True)
class _Tok:
    kind: str  # word | int | op | end
    text: str
    start: int


def _lex(src: str) -> list[_Tok]:
    toks = []
    pos = 0
    while True:
        while pos < len(src) and src[pos].isspace():
            pos += 1
        if pos >= len(src):
            break
        m = _TOKEN.match(src, pos)
        if not m:
            raise ParseError(f"unexpected character {src[pos]!r}", src, pos)
        kind = m.lastgroup
        toks.append(_Tok(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    toks.append(_Tok("end", "", len(src)))
    return toks


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.toks = _lex(src)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def error(self, msg: str, offset: int | None = None):
        raise ParseError(msg, self.src, self.tok.start if offset is None else offset)

    def expect_op(self, op: str):
        if self.tok.kind == "op" and self.tok.text == op:
            self.i += 1
            return
        found = "end of input" if self.tok.kind == "end" else repr(self.tok.text)
        self.error(f"expected {op!r}, found {found}")

    def expr(self) -> Expr:
        left = self.term()
        while self.tok.kind == "op" and self.tok.text == "#":
            self.i += 1
            right = self.term()
            left = CSum(left, right, (left.span[0], right.span[1]))
        return left

    def term(self) -> Expr:
        left = self.factor()
        while self.tok.kind == "op" and self.tok.text == "*":
            self.i += 1
            right = self.factor()
            left = Product(left, right, (left.span[0], right.span[1]))
        return left

    def factor(self) -> Expr:
        tok = self.tok
        if tok.kind == "op" and tok.text == "(":
            self.i += 1
            inner = self.expr()
            close = self.tok.start
            self.expect_op(")")
            return replace(inner, span=(tok.start, close + 1))
        if tok.kind == "word":
            return self.atom()
        found = "end of input" if tok.kind == "end" else repr(tok.text)
        self.error(f"expected a manifold, found {found}")

    def atom(self) -> Atom:
        tok = self.tok
        if tok.text not in FAMILIES:
            self.error(f"unknown family {tok.text!r} (expected one of {', '.join(FAMILIES)})")
        self.i += 1
        num = self.tok
        if num.kind != "int":
            self.error("expected integer")
        self.i += 1
        return Atom(tok.text, int(num.text), (tok.start, num.start + len(num.text)))


def parse_manifold_expr(src: str) -> Expr:
    p = _Parser(src)
    tree = p.expr()
    if p.tok.kind != "end":
        p.error(f"unexpected token {p.tok.text!r}")
    return tree


def render_expr(e: Expr) -> str:
    """Inverse of :func:`parse_manifold_expr` up to spans and whitespace."""
    if isinstance(e, Atom):
        return f"{e.family}{e.n}"
    if isinstance(e, Product):
        left = render_expr(e.left)
        if isinstance(e.left, CSum):
            left = f"({left})"
        right = render_expr(e.right)
        if not isinstance(e.right, Atom):
            right = f"({right})"
        return f"{left}*{right}"
    right = render_expr(e.right)
    if isinstance(e.right, CSum):
        right = f"({right})"
    return f"{render_expr(e.left)} # {right}"


def elaborate(e: Expr) -> ManifoldDescriptor:
    if isinstance(e, Atom):
        return catalog.primitive(e.family, e.n)
    left, right = elaborate(e.left), elaborate(e.right)
    if isinstance(e, Product):
        return catalog.product(left, right)
    return catalog.connected_sum(left, right)


def manifold(src: str) -> ManifoldDescriptor:
    """Parse and build a manifold in one step."""
    return elaborate(parse_manifold_expr(src))
