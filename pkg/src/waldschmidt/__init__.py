"""Exact computation of initial degrees and asymptotic degree ratios for plane point schemes."""

from .bezout import (AuxCurveSet, BezoutSystem, LowerBoundCertificate,
                     build_system, solve_min_ratio, verify_certificate)
from .classify import ClassificationResult, classify
from .engine import (Engine, FormalDivisor, WaldschmidtResult, conclude, sweep,
                     verify_upper)
from .fatpoints import (AlphaResult, FatPointScheme, alpha, hilbert_function,
                        ideal_dimension, interpolation_matrix)
from .fixtures import FixtureSpec, fixture, fixture_names
from .geometry import (IncidenceProfile, PlaneCurve, ProjPoint,
                       concurrency_count_at, conic_through, cubic_with_double_point,
                       incidence_profile, is_irreducible_conic, is_smooth_cubic,
                       line_through, mult_at, q_collinear_set)
from .linalg import RatMatrix, nullspace, rank_exact, rank_modular

__all__ = [
    "AlphaResult", "AuxCurveSet", "BezoutSystem", "ClassificationResult",
    "Engine", "FatPointScheme", "FixtureSpec", "FormalDivisor",
    "IncidenceProfile", "LowerBoundCertificate", "PlaneCurve", "ProjPoint",
    "RatMatrix", "WaldschmidtResult", "alpha", "build_system", "classify",
    "conclude", "concurrency_count_at", "conic_through",
    "cubic_with_double_point", "fixture", "fixture_names", "hilbert_function",
    "ideal_dimension", "incidence_profile", "interpolation_matrix",
    "is_irreducible_conic", "is_smooth_cubic", "line_through", "mult_at",
    "nullspace", "q_collinear_set", "rank_exact", "rank_modular",
    "solve_min_ratio", "sweep", "verify_certificate", "verify_upper",
]
