"""
weightkit 环核心模块

Ring core: exact arithmetic, matrices and Smith normal form over Euclidean domains
"""

from .arithmetic import (
    EuclideanArithmetic,
    IntegerArithmetic,
    RationalArithmetic,
    PrimeFieldArithmetic,
    PolynomialArithmetic,
)
from .spec import RingKind, RingSpec
from .element import RingElement
from .matrix import Matrix
from .smith import SmithDecomposition, LinearSolution, smith_normal_form, linear_solve

__all__ = [
    "EuclideanArithmetic",
    "IntegerArithmetic",
    "RationalArithmetic",
    "PrimeFieldArithmetic",
    "PolynomialArithmetic",
    "RingKind",
    "RingSpec",
    "RingElement",
    "Matrix",
    "SmithDecomposition",
    "LinearSolution",
    "smith_normal_form",
    "linear_solve",
]
