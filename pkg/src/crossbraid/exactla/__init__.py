"""Exact linear algebra over Q (and Q(zeta_8) where a check needs it)."""

from .cyclotomic import I_UNIT, ZETA8, Cyc8, exact_div, exact_int, format_scalar, parse_scalar, sqrt_exact
from .matrix import Matrix, block_identity_kron, dense, kron, kron_all, vector
from .polysys import NonRationalSolution, UnresolvedSystem, solve_quadratic_system
from .solve import inverse, kernel_basis, rank, rref, solve_affine
from .tensor_index import TensorIndex

__all__ = [
    "Cyc8",
    "I_UNIT",
    "Matrix",
    "NonRationalSolution",
    "TensorIndex",
    "UnresolvedSystem",
    "ZETA8",
    "block_identity_kron",
    "dense",
    "exact_div",
    "exact_int",
    "format_scalar",
    "inverse",
    "kernel_basis",
    "kron",
    "kron_all",
    "parse_scalar",
    "rank",
    "rref",
    "solve_affine",
    "solve_quadratic_system",
    "sqrt_exact",
    "vector",
]
