"""Closed-form minors, determinants, inverses, and eigenvectors of banded
Toeplitz matrices through skew Schur polynomial evaluation.

Exact (rational string) inputs stay exact; float/complex inputs run on a
scaled complex backend whose cost is independent of the matrix order.
"""

from ._core import (
    MathError,
    ParseError,
    Symbol,
    adj_first_column,
    adjugate_entry,
    det,
    eigenvector,
    find_roots,
    inverse_entry,
    minor,
    pieri_expand,
    skew_schur,
    toeplitz_dense,
)

__all__ = [
    "MathError",
    "ParseError",
    "Symbol",
    "adj_first_column",
    "adjugate_entry",
    "det",
    "eigenvector",
    "find_roots",
    "inverse_entry",
    "minor",
    "pieri_expand",
    "skew_schur",
    "toeplitz_dense",
]
