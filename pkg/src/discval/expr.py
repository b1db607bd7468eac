"""Arithmetic expression grammar used by the command line.

::

    expr     := term (("+" | "-") term)*
    term     := unary (("*" | "/") unary)*
    unary    := ("-" | "+") unary | power
    power    := atom ("^" exponent)?          # right associative
    exponent := unary                         # must fold to an integer
    atom     := INTEGER | IDENT | "(" expr ")"

Identifiers are single names such as ``X`` (series variable), ``x``
(modulus variable) and ``a`` (extension generator).  Evaluation is
generic: literals and identifiers are mapped through caller-supplied
callbacks and combined with Python operators.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Union

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")

_ATOM_START = ("'('", "'+'", "'-'", "identifier", "integer")


class ParseError(ValueError):
    def __init__(self, text: str, offset: int, expected):
        self.text = text
        self.offset = offset
        self.expected = tuple(sorted(expected))
        found = repr(text[offset]) if offset < len(text) else "end of input"
        super().__init__(
            f"parse error at offset {offset}: found {found}, expected one of: "
            + ", ".join(self.expected))


@dataclass(frozen=True)
class Num:
    value: int

    def __repr__(self):
        return str(self.value)


@dataclass(frozen=True)
class Var:
    name: str

    def __repr__(self):
        return self.name


@dataclass(frozen=True)
class Neg:
    arg: "Node"

    def __repr__(self):
        return f"Neg({self.arg!r})"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Node"
    right: "Node"

    _NAMES = {"+": "Add", "-": "Sub", "*": "Mul", "/": "Div"}

    def __repr__(self):
        return f"{self._NAMES[self.op]}({self.left!r}, {self.right!r})"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exp: int

    def __repr__(self):
        return f"Pow({self.base!r}, {self.exp})"


Node = Union[Num, Var, Neg, BinOp, Pow]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = []  # (kind, value, offset)
        pos = 0
        while text[pos:].strip():
            m = _TOKEN.match(text, pos)
            if m.group(1) is not None:
                self.toks.append(("int", int(m.group(1)), m.start(1)))
            elif m.group(2) is not None:
                self.toks.append(("ident", m.group(2), m.start(2)))
            elif m.group(3) is not None:
                self.toks.append(("op", m.group(3), m.start(3)))
            pos = m.end()
        self.toks.append(("end", None, len(text)))
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def error(self, expected):
        raise ParseError(self.text, self.peek()[2], expected)

    def is_op(self, *ops) -> bool:
        kind, val, _ = self.peek()
        return kind == "op" and val in ops

    def parse(self) -> Node:
        node = self.expr()
        if self.peek()[0] != "end":
            self.error(("'*'", "'+'", "'-'", "'/'", "'^'", "end of input"))
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.is_op("+", "-"):
            op = self.take()[1]
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Node:
        node = self.unary()
        while self.is_op("*", "/"):
            op = self.take()[1]
            node = BinOp(op, node, self.unary())
        return node

    def unary(self) -> Node:
        if self.is_op("-"):
            self.take()
            return Neg(self.unary())
        if self.is_op("+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> Node:
        base = self.atom()
        if self.is_op("^"):
            self.take()
            start = self.peek()[2]
            e = _fold(self.unary())
            if e is None or e.denominator != 1:
                raise ParseError(self.text, start, ("integer exponent",))
            return Pow(base, int(e))
        return base

    def atom(self) -> Node:
        kind, val, _ = self.peek()
        if kind == "int":
            self.take()
            return Num(val)
        if kind == "ident":
            self.take()
            return Var(val)
        if self.is_op("("):
            self.take()
            node = self.expr()
            if not self.is_op(")"):
                self.error(("')'", "'*'", "'+'", "'-'", "'/'", "'^'"))
            self.take()
            return node
        self.error(_ATOM_START)


def _fold(node: Node):
    """Constant-fold a variable-free expression to a rational (``None`` otherwise)."""
    try:
        return evaluate(node, Fraction, {})
    except (KeyError, ZeroDivisionError):
        return None


def parse(text: str) -> Node:
    """Parse ``text``; raises :class:`ParseError` with the byte offset on failure."""
    return _Parser(text).parse()


def evaluate(node: Node, const: Callable[[int], object], variables: Mapping[str, object]):
    """Evaluate with integer literals mapped by ``const`` and names looked up in ``variables``."""
    if isinstance(node, Num):
        return const(node.value)
    if isinstance(node, Var):
        return variables[node.name]
    if isinstance(node, Neg):
        return -evaluate(node.arg, const, variables)
    if isinstance(node, Pow):
        return evaluate(node.base, const, variables) ** node.exp
    left = evaluate(node.left, const, variables)
    right = evaluate(node.right, const, variables)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if node.op == "*":
        return left * right
    return left / right


def free_names(node: Node) -> set[str]:
    if isinstance(node, Var):
        return {node.name}
    if isinstance(node, Num):
        return set()
    if isinstance(node, (Neg, Pow)):
        return free_names(node.arg if isinstance(node, Neg) else node.base)
    return free_names(node.left) | free_names(node.right)
