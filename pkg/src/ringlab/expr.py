"""Ring construction expressions.

Grammar (ASCII, whitespace insignificant, ``x`` left-associative)::

    ring := atom ("x" atom)*
    atom := "Z" INT | "M" INT "(" ring ")" | "T" INT "(" ring ")" | "(" ring ")"

``Z5`` is the integers mod 5, ``M2(R)`` the full 2x2 matrices over ``R``,
``T2(R)`` the upper-triangular 2x2 matrices and ``R x S`` the direct product.
Parenthesised grouping lets right-nested products round-trip through the
printer.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import CardinalityError, ParseError

DEFAULT_CAP = 65536


@dataclass(frozen=True)
class ZMod:
    n: int

    @property
    def cardinality(self) -> int:
        return self.n

    def __str__(self):
        return f"Z{self.n}"


@dataclass(frozen=True)
class Matrix:
    k: int
    base: "RingDescriptor"

    @property
    def cardinality(self) -> int:
        return self.base.cardinality ** (self.k * self.k)

    def __str__(self):
        return f"M{self.k}({self.base})"


@dataclass(frozen=True)
class UpperTri:
    k: int
    base: "RingDescriptor"

    @property
    def cardinality(self) -> int:
        return self.base.cardinality ** (self.k * (self.k + 1) // 2)

    def __str__(self):
        return f"T{self.k}({self.base})"


@dataclass(frozen=True)
class Product:
    left: "RingDescriptor"
    right: "RingDescriptor"

    @property
    def cardinality(self) -> int:
        return self.left.cardinality * self.right.cardinality

    def __str__(self):
        right = f"({self.right})" if isinstance(self.right, Product) else str(self.right)
        return f"{self.left} x {right}"


RingDescriptor = Union[ZMod, Matrix, UpperTri, Product]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message, at=None):
        return ParseError(message, self.text, self.pos if at is None else at)

    def peek(self) -> str:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}, found {self.peek() or 'end of input'!r}")
        self.pos += 1

    def positive_int(self) -> int:
        self.peek()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected a positive integer")
        value = int(self.text[start:self.pos])
        if value < 1:
            raise self.error("size must be at least 1", at=start)
        return value

    def ring(self):
        node = self.atom()
        while self.peek() == "x":
            self.pos += 1
            node = Product(node, self.atom())
        return node

    def atom(self):
        ch = self.peek()
        if ch == "Z":
            self.pos += 1
            return ZMod(self.positive_int())
        if ch in ("M", "T"):
            self.pos += 1
            k = self.positive_int()
            self.expect("(")
            base = self.ring()
            self.expect(")")
            return Matrix(k, base) if ch == "M" else UpperTri(k, base)
        if ch == "(":
            self.pos += 1
            node = self.ring()
            self.expect(")")
            return node
        raise self.error(f"expected a ring constructor, found {ch or 'end of input'!r}")


def parse_ring_expr(text: str, cap: int | None = DEFAULT_CAP) -> RingDescriptor:
    """Parse ``text`` into a descriptor, rejecting rings larger than ``cap``.

    >>> parse_ring_expr("T2(Z3) x Z4").cardinality
    108
    """
    parser = _Parser(text)
    node = parser.ring()
    if parser.peek():
        raise parser.error("trailing input")
    if cap is not None and node.cardinality > cap:
        raise CardinalityError(node.cardinality, cap)
    return node


def format_ring_expr(d: RingDescriptor) -> str:
    return str(d)
