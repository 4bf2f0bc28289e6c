"""Sparse bivariate polynomials in x and y with exact integer coefficients."""

from fractions import Fraction
from typing import Iterator, Mapping, Optional, Union

Exponents = tuple[int, int]
Scalar = Union[int, Fraction]


class BivariatePolynomial:
    """Immutable sparse polynomial: (i, j) -> coefficient of x^i y^j.

    Zero coefficients are never stored. Python ints give unbounded precision.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Exponents, int]] = None):
        clean: dict[Exponents, int] = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in term x^{i} y^{j}")
            if c:
                clean[(i, j)] = clean.get((i, j), 0) + int(c)
                if not clean[(i, j)]:
                    del clean[(i, j)]
        self._terms = clean
        self._hash = None

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def zero(cls) -> "BivariatePolynomial":
        return cls()

    @classmethod
    def one(cls) -> "BivariatePolynomial":
        return cls({(0, 0): 1})

    @classmethod
    def x(cls) -> "BivariatePolynomial":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "BivariatePolynomial":
        return cls({(0, 1): 1})

    @classmethod
    def monomial(cls, i: int, j: int, coefficient: int = 1) -> "BivariatePolynomial":
        return cls({(i, j): coefficient})

    @classmethod
    def constant(cls, c: int) -> "BivariatePolynomial":
        return cls({(0, 0): c})

    @classmethod
    def y_geometric(cls, k: int) -> "BivariatePolynomial":
        """1 + y + ... + y^(k-1)."""
        return cls({(0, j): 1 for j in range(k)})

    # ------------------------------------------------------------------
    # Inspection
    # ------------------------------------------------------------------

    @property
    def terms(self) -> dict[Exponents, int]:
        return dict(self._terms)

    def coefficient(self, i: int, j: int) -> int:
        return self._terms.get((i, j), 0)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree_x(self) -> int:
        """Largest x exponent; -1 for the zero polynomial."""
        return max((i for i, _ in self._terms), default=-1)

    @property
    def degree_y(self) -> int:
        """Largest y exponent; -1 for the zero polynomial."""
        return max((j for _, j in self._terms), default=-1)

    def y_adic_valuation(self) -> int:
        """Largest r with y^r dividing self (0 for the zero polynomial)."""
        if not self._terms:
            return 0
        return min(j for _, j in self._terms)

    def x_adic_valuation(self) -> int:
        if not self._terms:
            return 0
        return min(i for i, _ in self._terms)

    def canonical_terms(self) -> list[tuple[int, int, int]]:
        """(i, j, c) ordered by x exponent descending, then y exponent ascending."""
        ordered = sorted(self._terms, key=lambda t: (-t[0], t[1]))
        return [(i, j, self._terms[(i, j)]) for i, j in ordered]

    def __iter__(self) -> Iterator[tuple[int, int, int]]:
        return iter(self.canonical_terms())

    def __len__(self) -> int:
        return len(self._terms)

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    @staticmethod
    def _coerce(other: object) -> "BivariatePolynomial":
        if isinstance(other, BivariatePolynomial):
            return other
        if isinstance(other, int):
            return BivariatePolynomial.constant(other)
        return NotImplemented

    def __add__(self, other) -> "BivariatePolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for key, c in other._terms.items():
            terms[key] = terms.get(key, 0) + c
        return BivariatePolynomial(terms)

    __radd__ = __add__

    def __neg__(self) -> "BivariatePolynomial":
        return BivariatePolynomial({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> "BivariatePolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "BivariatePolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other) -> "BivariatePolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: dict[Exponents, int] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                terms[key] = terms.get(key, 0) + c1 * c2
        return BivariatePolynomial(terms)

    __rmul__ = __mul__

    def scale(self, c: int) -> "BivariatePolynomial":
        return BivariatePolynomial({k: v * c for k, v in self._terms.items()})

    def shift(self, a: int = 0, b: int = 0) -> "BivariatePolynomial":
        """Multiply by the monomial x^a y^b."""
        return BivariatePolynomial({(i + a, j + b): c for (i, j), c in self._terms.items()})

    def __pow__(self, n: int) -> "BivariatePolynomial":
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = BivariatePolynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # ------------------------------------------------------------------
    # Evaluation
    # ------------------------------------------------------------------

    def evaluate(self, x0: Scalar, y0: Scalar) -> Fraction:
        """Exact rational value at (x0, y0)."""
        x0, y0 = Fraction(x0), Fraction(y0)
        return sum(
            (c * x0**i * y0**j for (i, j), c in self._terms.items()),
            Fraction(0),
        )

    def substitute_x(self, x0: int) -> "BivariatePolynomial":
        """Polynomial in y obtained by fixing x = x0 (integer)."""
        terms: dict[Exponents, int] = {}
        for (i, j), c in self._terms.items():
            terms[(0, j)] = terms.get((0, j), 0) + c * x0**i
        return BivariatePolynomial(terms)

    # ------------------------------------------------------------------
    # Protocol
    # ------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = BivariatePolynomial.constant(other)
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def to_dict(self) -> dict:
        return {"terms": [[i, j, c] for i, j, c in self.canonical_terms()]}

    @classmethod
    def from_dict(cls, data: dict) -> "BivariatePolynomial":
        return cls({(i, j): c for i, j, c in data.get("terms", [])})

    def __str__(self) -> str:
        from tforge.poly.text import render

        return render(self)

    def __repr__(self) -> str:
        return f"BivariatePolynomial({str(self)!r})"
