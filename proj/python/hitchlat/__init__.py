"""Exact Picard-lattice computations for hyperelliptic tangential covers.

Thin package wrapper around the compiled extension. All rational values
cross the boundary as :class:`fractions.Fraction`, so every result is
exact.
"""

from hitchlat._core import (
    adjunction_genus,
    check_lambda_dot_K,
    check_lambda_self,
    dagger_pairing,
    dagger_pairing_coeffs,
    enumerate_cover_types,
    generator_names,
    genus_lambda,
    is_admissible,
    moduli_dimension,
    mu2_bound,
    rigidity_constant,
    verify_canonical_pullback,
    verify_cocycle,
    verify_lambda_pullback,
)

__all__ = [
    "adjunction_genus",
    "check_lambda_dot_K",
    "check_lambda_self",
    "dagger_pairing",
    "dagger_pairing_coeffs",
    "enumerate_cover_types",
    "generator_names",
    "genus_lambda",
    "is_admissible",
    "moduli_dimension",
    "mu2_bound",
    "rigidity_constant",
    "verify_canonical_pullback",
    "verify_cocycle",
    "verify_lambda_pullback",
]
