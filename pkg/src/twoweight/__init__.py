"""Two-weight projective cyclic codes built from pairs of one-weight irreducible codes.

The package constructs finite-field towers, enumerates exact weight
distributions of two-zero cyclic codes in trace form, verifies the Gauss-sum,
Singer-difference-set, and digit-sum identities underlying the
characterization of such codes, and runs exhaustive searches confirming that
the arithmetic conditions match brute force at small parameters.
"""

from .tower import FieldTower, build_field_tower, cyclotomic_coset, minimal_polynomial

__all__ = [
    "FieldTower",
    "build_field_tower",
    "cyclotomic_coset",
    "minimal_polynomial",
]

__version__ = "0.1.0"
