"""Canonical text form of bivariate polynomials.

Grammar (whitespace ignored between tokens)::

    poly  := ['-'] term (('+' | '-') term)*
    term  := INT ['*' mono] | mono
    mono  := var ['*' var]
    var   := ('x' | 'y') ['^' INT]

Canonical rendering lists terms by x exponent descending, then y exponent
ascending, e.g. ``x^3 + 3*x^2 + 2*x + 4*x*y + 2*y + 3*y^2 + y^3``.
"""

from tforge.poly.polynomial import BivariatePolynomial
from tforge.runtime.exceptions import PolynomialParseError


def _render_monomial(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("x" if i == 1 else f"x^{i}")
    if j:
        parts.append("y" if j == 1 else f"y^{j}")
    return "*".join(parts)


def render(p: BivariatePolynomial) -> str:
    """Canonical string; the zero polynomial renders as ``0``."""
    pieces = []
    for i, j, c in p.canonical_terms():
        mono = _render_monomial(i, j)
        magnitude = abs(c)
        if not mono:
            body = str(magnitude)
        elif magnitude == 1:
            body = mono
        else:
            body = f"{magnitude}*{mono}"

        if not pieces:
            pieces.append(f"-{body}" if c < 0 else body)
        else:
            pieces.append(f"{'-' if c < 0 else '+'} {body}")
    return " ".join(pieces) if pieces else "0"


class _Parser:
    """Recursive-descent parser over the canonical grammar."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, reason: str) -> PolynomialParseError:
        return PolynomialParseError(reason, self.pos)

    def skip_space(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_space()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, expected: str) -> bool:
        if self.peek() == expected:
            self.pos += 1
            return True
        return False

    def integer(self) -> int:
        self.skip_space()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected an integer")
        return int(self.text[start:self.pos])

    def variable(self) -> tuple[int, int]:
        ch = self.peek()
        if ch not in ("x", "y"):
            raise self.error("expected 'x' or 'y'")
        self.pos += 1
        power = self.integer() if self.take("^") else 1
        return (power, 0) if ch == "x" else (0, power)

    def term(self) -> tuple[int, int, int]:
        coefficient = 1
        i = j = 0
        if self.peek().isdigit():
            coefficient = self.integer()
            if not self.take("*"):
                return 0, 0, coefficient
        seen = set()
        while True:
            ch = self.peek()
            if ch in seen:
                raise self.error(f"variable '{ch}' repeated in one term")
            di, dj = self.variable()
            seen.add(ch)
            i, j = i + di, j + dj
            if not self.take("*"):
                break
        return i, j, coefficient

    def parse(self) -> BivariatePolynomial:
        if not self.peek():
            raise self.error("empty input")
        terms: dict[tuple[int, int], int] = {}
        sign = -1 if self.take("-") else 1
        while True:
            i, j, c = self.term()
            terms[(i, j)] = terms.get((i, j), 0) + sign * c
            ch = self.peek()
            if not ch:
                break
            if ch not in "+-":
                raise self.error(f"unexpected character {ch!r}")
            self.pos += 1
            sign = 1 if ch == "+" else -1
        return BivariatePolynomial(terms)


def parse(text: str) -> BivariatePolynomial:
    """Parse polynomial text; terms may appear in any order and repeat."""
    return _Parser(text).parse()
