"""Boundary strata expansions of psi and omega class products on M_{0,n+3}."""

from .counts import (
    asym_multinomial,
    compositions,
    double_factorial_odd,
    is_almost_catalan,
    is_catalan,
    multinomial,
)
from .errors import StrataError
from .kappa import generalized_kappa, kappa_expansion, kappa_expansion_via_degrees
from .oracle import iterated_limit, oracle_slide
from .slides import (
    Flavor,
    PriorityOrder,
    admits_labeling,
    common_tree,
    generalized_slide,
    slide_i,
    slide_set,
    slide_set_omega,
    slide_set_psi,
    verify_labeling,
)
from .tournament import family_schedule, lazy_tournament, run_schedule, tour_set
from .trees import (
    A,
    B,
    C,
    StableTree,
    StrataSum,
    contract_split,
    enumerate_stable,
    enumerate_trivalent,
    forget_leaf,
    from_splits,
)

__version__ = "0.1.0"

__all__ = [
    "A", "B", "C", "Flavor", "PriorityOrder", "StableTree", "StrataError", "StrataSum",
    "admits_labeling", "asym_multinomial", "common_tree", "compositions", "contract_split",
    "double_factorial_odd", "enumerate_stable", "enumerate_trivalent", "family_schedule",
    "forget_leaf", "from_splits", "generalized_kappa", "generalized_slide", "is_almost_catalan",
    "is_catalan", "iterated_limit", "kappa_expansion", "kappa_expansion_via_degrees",
    "lazy_tournament", "multinomial", "oracle_slide", "run_schedule", "slide_i", "slide_set",
    "slide_set_omega", "slide_set_psi", "tour_set", "verify_labeling",
]
