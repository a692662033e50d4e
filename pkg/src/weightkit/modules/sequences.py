"""
weightkit 短正合列

Short exact sequences of finitely presented modules
"""

from dataclasses import dataclass
from typing import Any, Dict

from .fpmodule import FpModule
from .hom import ModuleHom
from ..ring import Matrix
from ..common.exceptions import SequenceError


@dataclass(frozen=True, eq=False)
class ShortExactSequence:
    """
    短正合列 0 → A --i--> B --p--> C → 0

    构造时检查正合性，出错时 SequenceError.position 为
    "injective"、"composite"、"middle" 或 "surjective"。

    Short exact sequence 0 → A --i--> B --p--> C → 0

    Exactness is checked at construction; on failure SequenceError.position
    is one of "injective", "composite", "middle" or "surjective".
    """

    inclusion: ModuleHom
    projection: ModuleHom
    check: bool = True

    def __post_init__(self) -> None:
        if self.check:
            self.validate()

    @property
    def left(self) -> FpModule:
        return self.inclusion.source

    @property
    def middle(self) -> FpModule:
        return self.inclusion.target

    @property
    def right(self) -> FpModule:
        return self.projection.target

    def validate(self) -> None:
        """
        逐个位置检查正合性 | Check exactness position by position

        Raises:
            SequenceError: 第一个不正合的位置 | The first position that is not exact
        """
        if self.projection.source.generators != self.inclusion.target.generators:
            raise SequenceError(
                "composite",
                cn="两个映射不可复合",
                en="The two maps are not composable"
            )
        if not self.inclusion.is_injective:
            raise SequenceError("injective", cn="左边的映射不是单射", en="The left map is not injective")
        if not self.projection.compose(self.inclusion).is_zero:
            raise SequenceError("composite", cn="p∘i 不为零", en="p∘i is not zero")
        # p 诱导 coker(i) → C，中间正合当且仅当它是双射
        cokernel, _ = self.inclusion.cokernel()
        induced = ModuleHom(cokernel, self.right, self.projection.matrix, check=False)
        if not induced.is_injective:
            raise SequenceError("middle", cn="ker p ≠ im i", en="ker p ≠ im i")
        if not self.projection.is_surjective:
            raise SequenceError("surjective", cn="右边的映射不是满射", en="The right map is not surjective")

    @classmethod
    def split(cls, A: FpModule, C: FpModule) -> "ShortExactSequence":
        """A → A ⊕ C → C"""
        spec = A.spec
        a, c = A.generators, C.generators
        inclusion = Matrix.identity(spec, a).vstack(Matrix.zeros(spec, c, a))
        projection = Matrix.zeros(spec, c, a).hstack(Matrix.identity(spec, c))
        middle = A.direct_sum(C)
        return cls(ModuleHom(A, middle, inclusion, check=False), ModuleHom(middle, C, projection, check=False))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "left": self.left.to_dict(),
            "middle": self.middle.to_dict(),
            "right": self.right.to_dict(),
            "inclusion": self.inclusion.matrix.to_strings(),
            "projection": self.projection.matrix.to_strings(),
        }
