"""curvebox: exact counting of points on congruence curves in small boxes.

The package combines exact brute-force counters with a geometry-of-numbers
pipeline (congruence lattices, weighted bodies, successive minima, dual
transference, lifting via short dual vectors) and power-sum system counting.
All arithmetic is integer/rational and exact.
"""
from .arith import (
    BoxRegion,
    ModPoly,
    eval_poly_mod,
    integer_nth_root,
    interval_residue_count,
    least_absolute_residue,
    least_nonnegative_residue,
    shift_normalize,
    shift_normalize_quadratic,
)
from .curvecount import (
    BudgetExceeded,
    VinogradovInstance,
    count_lifted_points,
    count_lifted_points_quadratic,
    count_points_curve,
    count_points_hyperelliptic,
    count_points_naive,
    vinogradov_count,
    vinogradov_count_full,
)
from .gon import (
    BodyKind,
    DimensionTooLarge,
    EnumerationBudgetExceeded,
    IntegerLattice,
    WeightedBody,
    body_norm,
    dual_body,
    dual_lattice,
    enumerate_lattice_points,
    lll_reduce,
    minkowski_second_ratio,
    successive_minima,
)
from .reduction import (
    CaseReport,
    LiftedCurve,
    LiftedQuadraticCurve,
    build_body,
    build_congruence_lattice,
    build_hyperelliptic_body,
    build_hyperelliptic_lattice,
    classify_case,
    classify_case_hyperelliptic,
    count_congruence_box,
    find_short_dual_vector,
    find_short_dual_vector_hyperelliptic,
    lift_curve,
    lift_hyperelliptic,
    reference_bounds,
    theorem3_bound,
    theorem4_bound,
)
from .rng import SplitMix64, random_modpoly, random_prime
from .verify import run_suite

__version__ = "0.1.0"
