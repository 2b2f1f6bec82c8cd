"""Parser for the real-number expression language used by the CLI.

Grammar (``*`` binds tighter than ``+``/``-``, both left associative)::

    real   := term (("+" | "-") term)*
    term   := factor ("*" factor)*
    factor := "-" factor | rational | "(" real ")"
            | "abs(" real ")" | "min(" real "," real ")"
            | "max(" real "," real ")" | "div(" real "," real "," k ")"

``p/q`` is a single rational literal, not a division; ``div`` needs the
precision ``k`` at which the divisor is certified apart from zero.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError
from .reals import (CRN, crn_abs, crn_add, crn_div, crn_from_rational, crn_max, crn_min,
                    crn_mul, crn_neg, zero_witness)

_TOKEN_RE = re.compile(r"\s*(?:(\d+(?:\s*/\s*\d+)?)|([A-Za-z]+)|(.))")


def tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            break
        tok = m.group(1) or m.group(2) or m.group(3)
        tokens.append(tok.replace(" ", ""))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            want = expected or "a token"
            raise ParseError(f"expected {want!r}, got {tok or 'end of input'!r} in {self.text!r}")
        self.i += 1
        return tok

    def real(self) -> CRN:
        x = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            y = self.term()
            x = crn_add(x, y) if op == "+" else crn_add(x, crn_neg(y))
        return x

    def term(self) -> CRN:
        x = self.factor()
        while self.peek() == "*":
            self.take()
            x = crn_mul(x, self.factor())
        return x

    def factor(self) -> CRN:
        tok = self.peek()
        if tok == "-":
            self.take()
            return crn_neg(self.factor())
        if tok == "(":
            self.take()
            x = self.real()
            self.take(")")
            return x
        if tok in ("abs", "min", "max", "div"):
            self.take()
            self.take("(")
            args = [self.real()]
            if tok != "abs":
                self.take(",")
                args.append(self.real())
            if tok == "div":
                self.take(",")
                k_tok = self.take()
                if not k_tok.isdigit():
                    raise ParseError(f"div precision must be a natural, got {k_tok!r}")
                k = int(k_tok)
            self.take(")")
            if tok == "abs":
                return crn_abs(args[0])
            if tok == "min":
                return crn_min(*args)
            if tok == "max":
                return crn_max(*args)
            return crn_div(args[0], args[1], zero_witness(args[1], k))
        if tok is not None and tok[0].isdigit():
            self.take()
            num, _, den = tok.partition("/")
            if den and int(den) == 0:
                raise ParseError(f"zero denominator in {tok!r}")
            return crn_from_rational(Fraction(int(num), int(den) if den else 1))
        raise ParseError(f"unexpected {tok or 'end of input'!r} in {self.text!r}")


def parse_real(text: str) -> CRN:
    """Parse an expression into a :class:`CRN`.

    Raises :class:`ParseError` on bad syntax and
    :class:`~constructive_reals.errors.InvalidWitness` when a ``div``
    precision does not certify its divisor.
    """
    p = _Parser(text)
    x = p.real()
    if p.peek() is not None:
        raise ParseError(f"trailing input {p.peek()!r} in {text!r}")
    return x
