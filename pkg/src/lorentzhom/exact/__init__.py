"""Exact rational matrices, linear algebra, signatures and polynomials."""
from lorentzhom.exact._backend import BACKEND
from lorentzhom.exact.linalg import (
    SignatureTriple,
    Subspace,
    congruent_diagonalize,
    determinant,
    inverse,
    kernel,
    rank,
    signature,
    solve_linear,
)
from lorentzhom.exact.matrix import Mat, MatrixFormatError, as_rat

__all__ = [
    "BACKEND",
    "Mat",
    "MatrixFormatError",
    "SignatureTriple",
    "Subspace",
    "as_rat",
    "congruent_diagonalize",
    "determinant",
    "inverse",
    "kernel",
    "rank",
    "signature",
    "solve_linear",
]
