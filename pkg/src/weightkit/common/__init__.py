"""
weightkit 通用模块

weightkit Common Module
"""

from .exceptions import (
    WeightKitError,
    InputError,
    ValidationError,
    PreconditionError,
    VerificationError,
    DocumentSyntaxError,
    DeclarationError,
    RingMismatchError,
    DimensionError,
    ComplexError,
    ModuleHomError,
    LocalizationError,
    SequenceError,
    NotContramoduleError,
)
from .language import Language, set_language, get_language, use_language, get_message
from .logging import BilingualLogger, WeightKitLogger, get_logger
from .checks import CheckResult, VerificationReport

__all__ = [
    "WeightKitError",
    "InputError",
    "ValidationError",
    "PreconditionError",
    "VerificationError",
    "DocumentSyntaxError",
    "DeclarationError",
    "RingMismatchError",
    "DimensionError",
    "ComplexError",
    "ModuleHomError",
    "LocalizationError",
    "SequenceError",
    "NotContramoduleError",
    "Language",
    "set_language",
    "get_language",
    "use_language",
    "get_message",
    "BilingualLogger",
    "WeightKitLogger",
    "get_logger",
    "CheckResult",
    "VerificationReport",
]
