"""
weightkit 心模块

Hearts: localization specs, the universal localization, heart membership,
local complexes and the commuting square
"""

from .spec import (
    LocalizationSpec,
    MatrixFamily,
    Telescope,
    matrix_family,
    telescope,
    parse_localization_spec,
)
from .localized_ring import LocalizedElement, LocalizedModule, LocalizedRing, universal_localization
from .membership import (
    HeartCertificate,
    ConeOrthogonality,
    ConeVerdict,
    LocalComplexVerdict,
    heart_membership,
    heart_membership_via_cone,
    cone_orthogonality,
    sigma_cone,
    is_local_complex,
)
from .square import verify_square, verify_heart_projectives

__all__ = [
    "LocalizationSpec",
    "MatrixFamily",
    "Telescope",
    "matrix_family",
    "telescope",
    "parse_localization_spec",
    "LocalizedElement",
    "LocalizedModule",
    "LocalizedRing",
    "universal_localization",
    "HeartCertificate",
    "ConeOrthogonality",
    "ConeVerdict",
    "LocalComplexVerdict",
    "heart_membership",
    "heart_membership_via_cone",
    "cone_orthogonality",
    "sigma_cone",
    "is_local_complex",
    "verify_square",
    "verify_heart_projectives",
]
