"""
weightkit 万有局部化环

The universal localization ring

在交换欧几里得环上，普遍地求逆一族方阵等价于求逆它们行列式生成的乘法集，
因此 U = R[1/f]，f 为行列式之积的规范相伴元。元素以 a/fⁿ 表示，n 最小。

Over a commutative Euclidean ring, universally inverting a family of square
matrices is inverting the multiplicative set generated by their
determinants, so U = R[1/f] with f the canonical product of the
determinants. Elements are stored as a/fⁿ with n minimal.
"""

from dataclasses import dataclass
from typing import Any, Dict, NamedTuple

from .spec import MatrixFamily
from ..contra import split_by_s
from ..modules import FpModule, ModuleHom
from ..ring import RingElement, RingSpec
from ..common.exceptions import RingMismatchError
from ..common.logging import get_logger

logger = get_logger("hearts.localized_ring")


@dataclass(frozen=True)
class LocalizedElement:
    """
    规范分式 a/fⁿ：n = 0 或 f ∤ a

    Canonical fraction a/fⁿ: n = 0 or f ∤ a
    """

    ring: "LocalizedRing"
    numerator: RingElement
    exponent: int

    def __add__(self, other: "LocalizedElement") -> "LocalizedElement":
        f = self.ring.inverted
        n = max(self.exponent, other.exponent)
        a = self.numerator * f ** (n - self.exponent) + other.numerator * f ** (n - other.exponent)
        return self.ring.fraction(a, n)

    def __mul__(self, other: "LocalizedElement") -> "LocalizedElement":
        return self.ring.fraction(self.numerator * other.numerator, self.exponent + other.exponent)

    def __neg__(self) -> "LocalizedElement":
        return self.ring.fraction(-self.numerator, self.exponent)

    def __sub__(self, other: "LocalizedElement") -> "LocalizedElement":
        return self + (-other)

    @property
    def is_zero(self) -> bool:
        return self.numerator.is_zero

    def __str__(self) -> str:
        if self.exponent == 0:
            return str(self.numerator)
        return f"{self.numerator}/({self.ring.inverted})^{self.exponent}"


class LocalizedModule(NamedTuple):
    """U ⊗ N ≅ U^rank ⊕ torsion，f 在 torsion 上可逆 | with f invertible on torsion"""
    rank: int
    torsion: FpModule


@dataclass(frozen=True)
class LocalizedRing:
    """
    R[1/f]

    inverted 为规范相伴元；f = 1 时就是 R 本身。

    inverted is the canonical associate; f = 1 gives R itself.
    """

    base: RingSpec
    inverted: RingElement

    def __post_init__(self) -> None:
        if self.inverted.spec != self.base:
            raise RingMismatchError(
                cn=f"被求逆元素属于 {self.inverted.spec}，基环为 {self.base}",
                en=f"The inverted element lives in {self.inverted.spec}, the base ring is {self.base}"
            )

    @property
    def is_trivial(self) -> bool:
        """f 为单位，U = R | f is a unit, U = R"""
        return self.inverted.is_unit

    def fraction(self, numerator: Any, exponent: int = 0) -> LocalizedElement:
        """a/fⁿ 的规范形 | Canonical form of a/fⁿ"""
        a = self.base.element(numerator)
        f = self.inverted
        if self.is_trivial:
            return LocalizedElement(self, a * f.inverse() ** exponent, 0)
        if a.is_zero:
            return LocalizedElement(self, a, 0)
        while exponent > 0 and f.divides(a):
            a = a.exact_div(f)
            exponent -= 1
        return LocalizedElement(self, a, exponent)

    def is_unit(self, x: Any) -> bool:
        """
        a/fⁿ 在 R[1/f] 中可逆当且仅当 a 整除 f 的某个幂，即 a 与 f 互素的部分是单位

        a/fⁿ is invertible in R[1/f] iff a divides a power of f, i.e. the part
        of a coprime to f is a unit
        """
        value = x if isinstance(x, LocalizedElement) else self.fraction(x)
        if value.is_zero:
            return False
        split = split_by_s(FpModule.cyclic(self.base, value.numerator), self.inverted)
        return split.invertible.is_zero

    def acts_invertibly_on(self, N: FpModule) -> bool:
        """N 是 U-模当且仅当乘 f 在 N 上双射 | N is a U-module iff multiplication by f is bijective on N"""
        if N.spec != self.base:
            raise RingMismatchError(cn=f"模属于 {N.spec}", en=f"The module lives over {N.spec}")
        return ModuleHom.scalar(N, self.inverted).is_bijective

    def localize_module(self, N: FpModule) -> LocalizedModule:
        """
        U ⊗ N：自由秩不变，挠部分只保留 f 可逆的部分

        U ⊗ N: the free rank is unchanged and only the f-invertible torsion survives
        """
        split = split_by_s(N, self.inverted)
        return LocalizedModule(split.free_rank, split.invertible)

    def describe(self) -> str:
        if self.is_trivial:
            return self.base.short_name
        return f"{self.base.short_name}[1/{self.inverted}]"

    def to_dict(self) -> Dict[str, Any]:
        return {"base": self.base.short_name, "inverted": str(self.inverted), "ring": self.describe()}

    def __str__(self) -> str:
        return self.describe()


def universal_localization(family: MatrixFamily) -> LocalizedRing:
    """
    R[1/∏det σ]

    Args:
        family: 行列式非零的方阵族 | Family of square matrices with nonzero determinant
    """
    f = family.spec.one()
    for d in family.determinants:
        f = f * d
    ring = LocalizedRing(family.spec, f.canonical())
    logger.debug(f"万有局部化: {ring.describe()}", f"Universal localization: {ring.describe()}")
    return ring
