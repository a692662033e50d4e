"""
weightkit 反模模块

Contramodules: the telescope model of R[s⁻¹], s- and I-contramodule
certificates, the completion Δ and flatness of element localizations
"""

from .telescope import (
    TelescopeOperator,
    TowerLimits,
    tower_limits,
    stabilization_depth,
    projective_dimension_bound,
)
from .contramodule import (
    CertificateKind,
    ContraCertificate,
    IdealCertificate,
    SplitByS,
    split_by_s,
    nilpotency_exponent,
    obstruction_period,
    is_s_contramodule,
    is_ideal_contramodule,
    is_localization_contramodule,
    verify_certificate,
    verify_ideal_certificate,
)
from .completion import CompletedModule, delta_completion, reduce_completed, hom_from_completed
from .flatness import verify_flatness

__all__ = [
    "TelescopeOperator",
    "TowerLimits",
    "tower_limits",
    "stabilization_depth",
    "projective_dimension_bound",
    "CertificateKind",
    "ContraCertificate",
    "IdealCertificate",
    "SplitByS",
    "split_by_s",
    "nilpotency_exponent",
    "obstruction_period",
    "is_s_contramodule",
    "is_ideal_contramodule",
    "is_localization_contramodule",
    "verify_certificate",
    "verify_ideal_certificate",
    "CompletedModule",
    "delta_completion",
    "reduce_completed",
    "hom_from_completed",
    "verify_flatness",
]
