"""Quantum intersection numbers on Grassmannians via residue sums.

The package evaluates degree-d genus-g intersection pairings on the space of
maps into G(r,k) by summing a weighted monomial over the critical points of a
deformed potential, and cross-checks the result against independent closed
forms where those exist.
"""

from .charclass import (
    GradedRingSpec,
    RingElement,
    RingSeries,
    diagonal_blowup_correction,
    even_degree_identity,
    theta_integral,
    wall_crossing_correction,
)
from .critical import (
    CriticalPoint,
    ValidationReport,
    enumerate_critical_points,
    validate_critical_points,
)
from .errors import (
    CrossCheckMismatch,
    DimensionMismatch,
    GwgrError,
    InvalidGrassmannian,
    NonIntegerResult,
    NonUnitConstantTerm,
    PipelineNotApplicable,
    PrecisionBudgetExceeded,
    TruncationTooLow,
    ValidationFailure,
)
from .invariants import (
    InvariantQuery,
    PipelineResult,
    applicable_pipelines,
    brute_force_r2,
    closed_form_r2_g1,
    flip_pipeline_r2_g1,
    invariant,
    projective_invariant,
    vafa_intriligator,
)
from .numerics import FLOATING_KD_BUDGET, GuardedComplex, UnityAngle, guarded_sum
from .sympoly import (
    MultiPoly,
    elementary_symmetric,
    hessian_class,
    lg_potential,
    lg_potential_via_log,
    power_sums,
    relation_polys,
)
from .verify import VerifyConfig, run_verify

__version__ = "0.1.0"

__all__ = [
    "CriticalPoint",
    "CrossCheckMismatch",
    "DimensionMismatch",
    "FLOATING_KD_BUDGET",
    "GradedRingSpec",
    "GuardedComplex",
    "GwgrError",
    "InvalidGrassmannian",
    "InvariantQuery",
    "MultiPoly",
    "NonIntegerResult",
    "NonUnitConstantTerm",
    "PipelineNotApplicable",
    "PipelineResult",
    "PrecisionBudgetExceeded",
    "RingElement",
    "RingSeries",
    "TruncationTooLow",
    "UnityAngle",
    "ValidationFailure",
    "ValidationReport",
    "VerifyConfig",
    "applicable_pipelines",
    "brute_force_r2",
    "closed_form_r2_g1",
    "diagonal_blowup_correction",
    "elementary_symmetric",
    "enumerate_critical_points",
    "even_degree_identity",
    "flip_pipeline_r2_g1",
    "guarded_sum",
    "hessian_class",
    "invariant",
    "lg_potential",
    "lg_potential_via_log",
    "power_sums",
    "projective_invariant",
    "relation_polys",
    "theta_integral",
    "vafa_intriligator",
    "validate_critical_points",
    "wall_crossing_correction",
]
