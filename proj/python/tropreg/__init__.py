"""Tropical linear regression: best-fit tropical hyperplanes, inner radii of
tropical polytopes, dominion checks and tender-price inference."""

from ._core import (
    CertificateError,
    DegenerateOperator,
    DimensionError,
    NonConvergence,
    ValidationError,
    best_hyperplane,
    cone_project,
    detect_dominions,
    determine_winners,
    hilbert_distance,
    hyperplane_distance,
    in_column_space,
    infer,
    inradius,
    regress_signed,
    regress_typed,
    signed_distance,
    simulate,
    spectral_radius,
)

NEG_INF = float("-inf")

__all__ = [name for name in dir() if not name.startswith("_")]
