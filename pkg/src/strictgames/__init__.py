"""Strictly competitive games: exact detection, normalization, and solving.

Decides whether a finite two-player game's mixed extension is strictly
competitive, recovers the positive affine transform linking the payoffs,
normalizes to zero-sum form, and solves it by exact rational linear
programming, with randomized audits of the underpinning mixture-space
axioms and a strategic zero-sum feasibility extension.
"""

from .axioms import AxiomReport, InducedPreference, Lens, audit_mixture_axioms
from .detection import (
    AffineMismatch,
    AffineTransform,
    AlphaNonpositive,
    DetectionResult,
    OrdinalViolation,
    detect_affine,
    find_mixed_violation,
    is_adversarial,
    pure_ordinal_competitive,
    three_profile_compatibility,
    to_zero_sum,
)
from .games import (
    BimatrixGame,
    MixedProfile,
    MixedStrategy,
    expected_utility,
    mix,
    new_game,
    pure_profile,
    pure_strategy,
    uniform_profile,
    uniform_strategy,
    verify_bilinearity,
)
from .generators import Family, GenSpec, gen
from .io import load_game, save_game
from .rational import Rational, format_rational, parse_rational
from .solvers import (
    EquilibriumSet,
    MinimaxSolution,
    equilibrium_invariance_check,
    minimax_solve,
    support_enumeration,
)
from .strategic import MvDecomposition, strategically_zero_sum_detect

__all__ = [
    "AffineMismatch",
    "AffineTransform",
    "AlphaNonpositive",
    "AxiomReport",
    "BimatrixGame",
    "DetectionResult",
    "EquilibriumSet",
    "Family",
    "GenSpec",
    "InducedPreference",
    "Lens",
    "MinimaxSolution",
    "MixedProfile",
    "MixedStrategy",
    "MvDecomposition",
    "OrdinalViolation",
    "Rational",
    "audit_mixture_axioms",
    "detect_affine",
    "equilibrium_invariance_check",
    "expected_utility",
    "find_mixed_violation",
    "format_rational",
    "gen",
    "is_adversarial",
    "load_game",
    "minimax_solve",
    "mix",
    "new_game",
    "parse_rational",
    "pure_ordinal_competitive",
    "pure_profile",
    "pure_strategy",
    "save_game",
    "strategically_zero_sum_detect",
    "support_enumeration",
    "three_profile_compatibility",
    "to_zero_sum",
    "uniform_profile",
    "uniform_strategy",
    "verify_bilinearity",
]
