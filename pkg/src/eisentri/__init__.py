"""Heron-type triangles on the Eisenstein lattice.

Exact arithmetic in ℤ[ω], unique factorization, a constructive pipeline
that places a triangle with integer squared sides and area (√3/4)·n onto
the lattice whenever that is possible, and a brute-force oracle to check
it all against.
"""

from .core import (
    OMEGA,
    ONE,
    UNITS,
    ZERO,
    EisensteinInt,
    canonical_associate,
    gcd,
)
from .embedding import (
    DegenerateTriangleError,
    EmbeddingVerificationError,
    HeronData,
    LatticeTriangle,
    NonLatticeAreaError,
    NotRealizableError,
    RealizabilityReport,
    TriangleSpec,
    combine_uv,
    compute_uv,
    divisor_of_norm,
    embed,
    heron_data,
    heron_n,
    triangle_properties,
    validate,
    verify_embedding,
)
from .factorization import (
    RAMIFIED_PRIME,
    EisensteinFactorization,
    NormRepresentability,
    PrimeClass,
    classify_prime,
    factor_eisenstein,
    factor_integer,
    form_from_3m2n2,
    form_to_3m2n2,
    is_eisenstein_prime,
    is_prime,
    lift_split_prime,
    norm_representability,
    sqrt_mod,
)
from .oracle import (
    SymmetryClass,
    brute_force_embeddings,
    canonical_triangle,
    enumerate_norm_points,
)

__version__ = "0.1.0"

__all__ = [
    "EisensteinInt",
    "ZERO",
    "ONE",
    "OMEGA",
    "UNITS",
    "canonical_associate",
    "gcd",
    "PrimeClass",
    "EisensteinFactorization",
    "NormRepresentability",
    "RAMIFIED_PRIME",
    "is_prime",
    "sqrt_mod",
    "factor_integer",
    "classify_prime",
    "lift_split_prime",
    "factor_eisenstein",
    "is_eisenstein_prime",
    "norm_representability",
    "form_to_3m2n2",
    "form_from_3m2n2",
    "TriangleSpec",
    "HeronData",
    "LatticeTriangle",
    "RealizabilityReport",
    "DegenerateTriangleError",
    "NonLatticeAreaError",
    "NotRealizableError",
    "EmbeddingVerificationError",
    "heron_n",
    "heron_data",
    "compute_uv",
    "combine_uv",
    "divisor_of_norm",
    "validate",
    "embed",
    "verify_embedding",
    "triangle_properties",
    "SymmetryClass",
    "enumerate_norm_points",
    "brute_force_embeddings",
    "canonical_triangle",
]
