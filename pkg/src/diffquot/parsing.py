"""Text form of BiPoly values.

The grammar is a signed sum of terms, each term being

    [coef] ['*'] ['x' ['^' int]] ['*'] ['l' ['^' int]]

where coef is a decimal integer or a rational a/b and at least one piece of
the term is present.  Whitespace is insignificant.  The letter l stands for
the step parameter.  Parsing round-trips with the canonical rendering:
parse_poly(str(p)) == p for every BiPoly p.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .bipoly import BiPoly


class ParseError(ValueError):
    """Malformed polynomial text; carries the 1-based offending column."""

    def __init__(self, message: str, column: int):
        super().__init__(f"{message} (column {column})")
        self.column = column


_DIGITS = re.compile(r"\d+")


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def fail(self, message: str) -> None:
        raise ParseError(message, self.pos + 1)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        return self.pos >= len(self.text)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def take_int(self) -> int | None:
        m = _DIGITS.match(self.text, self.pos)
        if m is None:
            return None
        self.pos = m.end()
        return int(m.group())


def parse_poly(text: str) -> BiPoly:
    """Parse the grammar above into a canonical BiPoly."""
    s = _Scanner(text)
    terms: dict[tuple[int, int], Fraction] = {}
    s.skip_ws()
    if s.at_end():
        s.fail("empty polynomial")
    first = True
    while True:
        s.skip_ws()
        if s.at_end():
            break
        sign = 1
        if s.take("+"):
            pass
        elif s.take("-"):
            sign = -1
        elif not first:
            s.fail("expected '+' or '-' between terms")
        s.skip_ws()
        coeff, key = _parse_term(s)
        terms[key] = terms.get(key, Fraction(0)) + sign * coeff
        first = False
    return BiPoly(terms)


def _parse_term(s: _Scanner) -> tuple[Fraction, tuple[int, int]]:
    coeff = Fraction(1)
    have_any = False

    num = s.take_int()
    if num is not None:
        have_any = True
        if s.take("/"):
            den_col = s.pos
            den = s.take_int()
            if den is None:
                s.fail("expected denominator digits after '/'")
            if den == 0:
                raise ParseError("zero denominator", den_col + 1)
            coeff = Fraction(num, den)
        else:
            coeff = Fraction(num)
        s.skip_ws()
        star = s.take("*")
        s.skip_ws()
    else:
        star = False

    deg_x = 0
    if s.take("x"):
        have_any = True
        star = False
        deg_x = _parse_exponent(s)
        s.skip_ws()
        star = s.take("*")
        s.skip_ws()

    deg_l = 0
    if s.take("l"):
        have_any = True
        star = False
        deg_l = _parse_exponent(s)

    if star:
        s.fail("expected a variable after '*'")
    if not have_any:
        s.fail("expected a term")
    return coeff, (deg_x, deg_l)


def _parse_exponent(s: _Scanner) -> int:
    s.skip_ws()
    if not s.take("^"):
        return 1
    s.skip_ws()
    e = s.take_int()
    if e is None:
        s.fail("expected exponent digits after '^'")
    return e
