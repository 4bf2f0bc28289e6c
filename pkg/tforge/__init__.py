"""tutte-forge - exact Tutte polynomials and T-equivalent graph constructions."""

__version__ = "0.1.0"
