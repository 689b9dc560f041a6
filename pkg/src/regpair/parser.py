"""Recursive-descent parser for rational expressions and loop literals.

Grammar for expressions::

    expr    := term (('+' | '-') term)*
    term    := factor (('*' | '/') factor)*
    factor  := '-' factor | base ('^' integer)?
    base    := 'z' | number ['i'] | '(' expr ')'

Loop literals are ``circle(re, im, r)`` or ``fourier(k:re,im; k:re,im; ...)``.
Offsets in :class:`ParseError` are byte offsets into the UTF-8 input.
"""

from __future__ import annotations

import re
from typing import Dict, List, NamedTuple

from .errors import ParseError
from .rational import RationalFunction

_NUMBER = re.compile(r"(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?")
_INTEGER = re.compile(r"[+-]?\d+")


class Token(NamedTuple):
    kind: str
    text: str
    offset: int


def _tokenize(text: str) -> List[Token]:
    tokens = []
    data = text.encode("utf-8")
    i = 0
    while i < len(data):
        ch = chr(data[i])
        if ch.isspace():
            i += 1
            continue
        m = _NUMBER.match(data.decode("latin-1"), i)
        if m:
            tokens.append(Token("num", m.group(0), i))
            i = m.end()
            continue
        if ch in "+-*/^(),;:":
            tokens.append(Token(ch, ch, i))
            i += 1
            continue
        if ch.isalpha():
            j = i
            while j < len(data) and chr(data[j]).isalpha():
                j += 1
            word = data[i:j].decode("ascii")
            tokens.append(Token("name", word, i))
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", i, ("number", "z", "operator", "("))
    tokens.append(Token("end", "", len(data)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def expect(self, kind: str) -> Token:
        if self.tok.kind != kind:
            raise ParseError(f"unexpected {self.tok.text or 'end of input'!r}", self.tok.offset, (kind,))
        return self.advance()

    def finish(self):
        if self.tok.kind != "end":
            raise ParseError(
                f"trailing input {self.tok.text!r}", self.tok.offset, ("+", "-", "*", "/", "^", "end")
            )

    # expressions ------------------------------------------------------------

    def expr(self) -> RationalFunction:
        value = self.term()
        while self.tok.kind in "+-":
            op = self.advance().kind
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> RationalFunction:
        value = self.factor()
        while self.tok.kind in "*/":
            op = self.advance().kind
            rhs = self.factor()
            if op == "*":
                value = value * rhs
            else:
                try:
                    value = value / rhs
                except ZeroDivisionError:
                    raise ParseError("division by zero", self.tokens[self.pos - 1].offset) from None
        return value

    def factor(self) -> RationalFunction:
        if self.tok.kind == "-":
            # unary minus binds looser than ^, so -z^2 is -(z^2)
            self.advance()
            return -self.factor()
        value = self.base()
        if self.tok.kind == "^":
            self.advance()
            sign = 1
            if self.tok.kind in "+-":
                sign = -1 if self.advance().kind == "-" else 1
            t = self.tok
            if t.kind != "num" or not _INTEGER.fullmatch(t.text):
                raise ParseError("exponent must be an integer", t.offset, ("integer",))
            self.advance()
            value = value ** (sign * int(t.text))
        return value

    def base(self) -> RationalFunction:
        t = self.tok
        if t.kind == "name" and t.text == "z":
            self.advance()
            return RationalFunction.identity()
        if t.kind == "name" and t.text == "i":
            self.advance()
            return RationalFunction.constant(1j)
        if t.kind == "num":
            self.advance()
            value = complex(float(t.text))
            if self.tok.kind == "name" and self.tok.text == "i":
                self.advance()
                value *= 1j
            if value == 0:
                raise ParseError("the zero function has no divisor", t.offset)
            return RationalFunction.constant(value)
        if t.kind == "(":
            self.advance()
            value = self.expr()
            self.expect(")")
            return value
        raise ParseError(f"unexpected {t.text or 'end of input'!r}", t.offset, ("z", "number", "(", "-"))

    # literals -----------------------------------------------------------------

    def signed_number(self) -> float:
        sign = 1.0
        if self.tok.kind in "+-":
            sign = -1.0 if self.advance().kind == "-" else 1.0
        t = self.expect("num")
        return sign * float(t.text)

    def signed_integer(self) -> int:
        sign = 1
        if self.tok.kind in "+-":
            sign = -1 if self.advance().kind == "-" else 1
        t = self.tok
        if t.kind != "num" or not _INTEGER.fullmatch(t.text):
            raise ParseError("mode index must be an integer", t.offset, ("integer",))
        self.advance()
        return sign * int(t.text)

    def fourier_terms(self) -> Dict[int, complex]:
        terms: Dict[int, complex] = {}
        self.expect("(")
        while True:
            k = self.signed_integer()
            self.expect(":")
            re_ = self.signed_number()
            self.expect(",")
            im_ = self.signed_number()
            terms[k] = terms.get(k, 0j) + complex(re_, im_)
            if self.tok.kind == ";":
                self.advance()
                continue
            self.expect(")")
            return terms


def parse_rational(text: str) -> RationalFunction:
    """Parse an expression in ``z`` into a reduced :class:`RationalFunction`."""
    parser = _Parser(text)
    value = parser.expr()
    parser.finish()
    return value


def parse_fourier(text: str) -> Dict[int, complex]:
    """Parse ``fourier(k:re,im; ...)`` into a ``{k: c_k}`` mapping."""
    parser = _Parser(text)
    t = parser.tok
    if t.kind != "name" or t.text != "fourier":
        raise ParseError(f"unexpected {t.text!r}", t.offset, ("fourier",))
    parser.advance()
    terms = parser.fourier_terms()
    parser.finish()
    return terms


def parse_loop(text: str):
    """Parse a loop literal into a :class:`~regpair.loops.Loop`."""
    from .loops import Loop

    parser = _Parser(text)
    t = parser.tok
    if t.kind == "name" and t.text == "circle":
        parser.advance()
        parser.expect("(")
        re_ = parser.signed_number()
        parser.expect(",")
        im_ = parser.signed_number()
        parser.expect(",")
        r_tok = parser.tok
        r = parser.signed_number()
        parser.expect(")")
        parser.finish()
        if r <= 0:
            raise ParseError("circle radius must be positive", r_tok.offset, ("positive number",))
        return Loop.circle(complex(re_, im_), r)
    if t.kind == "name" and t.text == "fourier":
        parser.advance()
        terms = parser.fourier_terms()
        parser.finish()
        return Loop.fourier_curve(terms)
    raise ParseError(f"unexpected {t.text or 'end of input'!r}", t.offset, ("circle", "fourier"))
