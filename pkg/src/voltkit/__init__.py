"""voltkit: exact construction and certification of generalized Volterra lattices.

The package builds symmetric Lax matrices from subsets of the positive
roots of a type-A root system, searches consistent sign assignments for
the companion skew matrix, derives quadratic Poisson structures and
first integrals, and certifies conservation both symbolically and with
an RK4 drift harness.
"""

from voltkit.symbolic import Poly, RationalFn, SymMatrix, char_poly, det, format_poly, parse_poly

__all__ = [
    "Poly",
    "RationalFn",
    "SymMatrix",
    "det",
    "char_poly",
    "format_poly",
    "parse_poly",
]
