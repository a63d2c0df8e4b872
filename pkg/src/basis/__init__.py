from .polynomials import (
    Basis,
    BasisKind,
    BasisLike,
    amplification_profile,
    basis_values,
    dense_grid,
    eval_basis,
    max_amplification,
    rescale_divisor,
)
from .vandermonde import BasisMatrix, vandermonde

__all__ = [
    "Basis",
    "BasisKind",
    "BasisLike",
    "BasisMatrix",
    "amplification_profile",
    "basis_values",
    "dense_grid",
    "eval_basis",
    "max_amplification",
    "rescale_divisor",
    "vandermonde",
]
