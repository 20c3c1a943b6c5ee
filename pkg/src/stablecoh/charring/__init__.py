"""Character rings: free bipartition ring, stable (tensor-product) ring,
λ-operations, and the finite-n Laurent oracle."""

from .laurent import (
    LaurentCharacter,
    dual_standard_character,
    irrep_character,
    kostka,
    peel,
    standard_character,
)
from .lambda_ops import (
    GradedCharacter,
    adams,
    exterior_power,
    graded_symmetric_algebra,
    symmetric_power,
)
from .vectors import (
    PairVector,
    SchurVector,
    StableCharacter,
    schur,
    stable_product,
    stable_product_at,
)

__all__ = [
    "GradedCharacter",
    "LaurentCharacter",
    "PairVector",
    "SchurVector",
    "StableCharacter",
    "adams",
    "dual_standard_character",
    "exterior_power",
    "graded_symmetric_algebra",
    "irrep_character",
    "kostka",
    "peel",
    "schur",
    "stable_product",
    "stable_product_at",
    "standard_character",
    "symmetric_power",
]
