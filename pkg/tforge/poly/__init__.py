"""Exact bivariate polynomials, the codomain of the Tutte map."""

from tforge.poly.polynomial import BivariatePolynomial
from tforge.poly.text import parse, render

__all__ = ["BivariatePolynomial", "parse", "render"]
