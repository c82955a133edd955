"""Tokenizer and recursive-descent reader for element literals.

Literals are integers, fractions ``p/q``, bracketed lists ``[x, y, ...]`` and
pairs ``(x, y)``.  The reader returns plain Python values (``int``,
``Fraction``, ``list``, ``tuple``); each backend validates the shape.
"""
from fractions import Fraction

from .errors import ParseError


class _Reader:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise ParseError(f"expected {ch!r}, found {found!r}", self.text, self.pos)
        self.pos += 1

    def integer(self):
        self.skip()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            raise ParseError("expected an integer", self.text, start)
        return int(self.text[start:self.pos])

    def value(self):
        ch = self.peek()
        if ch == "[":
            self.pos += 1
            items = [self.value()]
            while self.peek() == ",":
                self.pos += 1
                items.append(self.value())
            self.expect("]")
            return items
        if ch == "(":
            self.pos += 1
            left = self.value()
            self.expect(",")
            right = self.value()
            self.expect(")")
            return (left, right)
        num = self.integer()
        if self.peek() == "/":
            self.pos += 1
            at = self.pos
            den = self.integer()
            if den == 0:
                raise ParseError("zero denominator", self.text, at)
            return Fraction(num, den)
        return num


def read_literal(text):
    reader = _Reader(text)
    value = reader.value()
    if reader.peek():
        raise ParseError("trailing input", text, reader.pos)
    return value
