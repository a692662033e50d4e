"""
weightkit - 欧几里得整环上权结构、反模与心的精确计算引擎

weightkit - Exact computation engine for weight structures, contramodules and hearts over Euclidean domains
"""

import logging

__version__ = "0.1.0"

# 导入主要的公共接口 | Import main public interfaces
from .ring import (
    RingSpec,
    RingElement,
    Matrix,
    SmithDecomposition,
    LinearSolution,
    smith_normal_form,
    linear_solve,
)
from .modules import (
    FpModule,
    ModuleHom,
    ShortExactSequence,
    ProjectiveDimension,
    is_isomorphic,
    hom_module,
    ext1,
    tor1,
    projective_dimension,
)
from .complexes import (
    ChainComplex,
    ChainMap,
    Homotopy,
    homology,
    shift,
    cone,
    weight_truncate,
    t_truncate,
    hom_upto_homotopy,
    minimize,
    homotopy_equivalent,
    weight_range,
    verify_weight_axioms,
)
from .contra import (
    ContraCertificate,
    CompletedModule,
    is_s_contramodule,
    is_ideal_contramodule,
    is_localization_contramodule,
    tower_limits,
    delta_completion,
    reduce_completed,
    hom_from_completed,
    verify_flatness,
)
from .hearts import (
    MatrixFamily,
    Telescope,
    LocalizedRing,
    universal_localization,
    heart_membership,
    heart_membership_via_cone,
    is_local_complex,
    verify_square,
    verify_heart_projectives,
)
from .common.exceptions import (
    WeightKitError,
    InputError,
    ValidationError,
    PreconditionError,
    VerificationError,
)
from .common.language import Language, set_language, get_language, use_language, get_message
from .common.logging import BilingualLogger, WeightKitLogger, get_logger
from .common.checks import VerificationReport
from .utils import DocumentCoder

logging.getLogger("weightkit").addHandler(logging.NullHandler())

__all__ = [
    # 环 | Ring
    "RingSpec",
    "RingElement",
    "Matrix",
    "SmithDecomposition",
    "LinearSolution",
    "smith_normal_form",
    "linear_solve",

    # 模 | Modules
    "FpModule",
    "ModuleHom",
    "ShortExactSequence",
    "ProjectiveDimension",
    "is_isomorphic",
    "hom_module",
    "ext1",
    "tor1",
    "projective_dimension",

    # 复形 | Complexes
    "ChainComplex",
    "ChainMap",
    "Homotopy",
    "homology",
    "shift",
    "cone",
    "weight_truncate",
    "t_truncate",
    "hom_upto_homotopy",
    "minimize",
    "homotopy_equivalent",
    "weight_range",
    "verify_weight_axioms",

    # 反模 | Contramodules
    "ContraCertificate",
    "CompletedModule",
    "is_s_contramodule",
    "is_ideal_contramodule",
    "is_localization_contramodule",
    "tower_limits",
    "delta_completion",
    "reduce_completed",
    "hom_from_completed",
    "verify_flatness",

    # 心 | Hearts
    "MatrixFamily",
    "Telescope",
    "LocalizedRing",
    "universal_localization",
    "heart_membership",
    "heart_membership_via_cone",
    "is_local_complex",
    "verify_square",
    "verify_heart_projectives",

    # 通用模块 | Common Module
    "WeightKitError",
    "InputError",
    "ValidationError",
    "PreconditionError",
    "VerificationError",
    "Language",
    "set_language",
    "get_language",
    "use_language",
    "get_message",
    "BilingualLogger",
    "WeightKitLogger",
    "get_logger",
    "VerificationReport",

    # 工具模块 | Utils Module
    "DocumentCoder",
]
