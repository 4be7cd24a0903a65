"""Exact Frobenius pushforward computations for hypersurfaces over F_p."""

from ._core import (
    DomainError,
    FrobeniusBasis,
    InstabilityError,
    MatrixFactorization,
    Poly,
    RelationMatrix,
    Ring,
    UsageError,
    bernoulli,
    decompose_monomial_quotient,
    default_precision,
    diagonal_entry_counts,
    diagonalize_monomial_matrix,
    faulhaber_sum,
    fedder_monomial_ideal,
    fedder_principal,
    free_rank_formula,
    local_inverse,
    signature_artin_schreier,
    signature_plus_z2,
    signature_uv_closed,
    signature_uv_empirical,
    split_power_factorization,
    split_trivial,
)

__all__ = [
    "DomainError",
    "FrobeniusBasis",
    "InstabilityError",
    "MatrixFactorization",
    "Poly",
    "RelationMatrix",
    "Ring",
    "UsageError",
    "bernoulli",
    "decompose_monomial_quotient",
    "default_precision",
    "diagonal_entry_counts",
    "diagonalize_monomial_matrix",
    "faulhaber_sum",
    "fedder_monomial_ideal",
    "fedder_principal",
    "free_rank_formula",
    "local_inverse",
    "signature_artin_schreier",
    "signature_plus_z2",
    "signature_uv_closed",
    "signature_uv_empirical",
    "split_power_factorization",
    "split_trivial",
]
