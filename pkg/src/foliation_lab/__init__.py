"""Ideal-theoretic invariants of codimension-one foliations on projective space."""

from .config import Config, DEFAULT_CONFIG
from .exterior import (
    PForm, VectorField, coefficient_ideal, contract, exterior_derivative,
    lie_radial, one_form, wedge,
)
from .foliation import (
    ChernPair, ComponentInfo, ConstructionError, ProjectiveForm, SchemeSummary,
    UnfoldingResult, ValidationError, chern_classes,
    complete_intersection_verdict, derivative_annihilator,
    derivative_coefficient_ideal, foliation_from_acm_curve, ideal_I, ideal_J,
    ideal_K, ideal_L, is_integrable, poly_gcd, pullback_linear,
    rational_foliation, scheme_summary, splitting_verdict,
    unfolding_dimensions, validate,
)
from .groebner import (
    Budget, BudgetExceeded, HilbertData, Ideal, buchberger, hilbert_data,
    ideal_quotient, intersection, irrelevant_saturation, minimal_generators,
    minimal_primes, normal_form, radical_equal, radical_membership, saturation,
)
from .linalg import QMatrix, rref_and_kernel
from .qalgebra import (
    DEGREVLEX, LEX, BlockElim, Polynomial, TermOrder, graded_basis, poly_str,
)
from .report import FoliationReport, analyze, hypothesis_check, theorem_suite
from .resolutions import (
    BettiTable, CohomologyWindow, FreeModule, ModuleMap, Resolution, graded_ext,
    hilbert_burch_presentation, is_acm, minimal_free_resolution,
    sheaf_cohomology_window, syzygies,
)

__version__ = "0.1.0"
