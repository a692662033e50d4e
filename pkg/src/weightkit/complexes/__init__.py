"""
weightkit 复形模块

Bounded complexes of free modules: truncations, cones, minimization, weights
"""

from .complex import ChainComplex, ChainMap, Homotopy
from .operations import (
    Truncation,
    TwoTermInvariants,
    homology,
    homology_profile,
    shift,
    direct_sum,
    cone,
    weight_truncate,
    t_truncate,
    hom_complex,
    hom_upto_homotopy,
    placed_resolution,
    two_term_invariants,
)
from .minimal import MinimalModel, minimize, homotopy_equivalent, weight_range
from .axioms import verify_weight_axioms

__all__ = [
    "ChainComplex",
    "ChainMap",
    "Homotopy",
    "Truncation",
    "TwoTermInvariants",
    "homology",
    "homology_profile",
    "shift",
    "direct_sum",
    "cone",
    "weight_truncate",
    "t_truncate",
    "hom_complex",
    "hom_upto_homotopy",
    "placed_resolution",
    "two_term_invariants",
    "MinimalModel",
    "minimize",
    "homotopy_equivalent",
    "weight_range",
    "verify_weight_axioms",
]
