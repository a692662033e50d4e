"""
weightkit 工具模块

weightkit Utils Module
"""

from .coder import DocumentCoder
from .samples import (
    SampleGenerator,
    abelian_groups,
    divisor_chains,
    heart_sequences,
    nonsingular_matrices,
    two_term_matrices,
)

__all__ = [
    "DocumentCoder",
    "SampleGenerator",
    "abelian_groups",
    "divisor_chains",
    "heart_sequences",
    "nonsingular_matrices",
    "two_term_matrices",
]
