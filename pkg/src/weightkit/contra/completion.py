"""
weightkit 完备化函子 Δ

The completion functor Δ

对有限表现模，Δ_s(C) 取为 s-进完备化 lim C/sⁿC：自由部分变成完备环上的秩 k
（符号表示，从不具体化），s 幂零部分保持不变，s 可逆部分被消去。
关于完备模的一切断言都通过有限层约化 reduce_completed 给出。

For finitely presented modules Δ_s(C) is the s-adic completion lim C/sⁿC:
the free part becomes rank k over the completed ring (symbolic, never
materialized), the s-nilpotent part is unchanged and the s-invertible part
is killed. Every statement about completed modules goes through the finite
reductions of reduce_completed.
"""

from dataclasses import dataclass
from typing import Any, Dict

from .contramodule import is_s_contramodule, nilpotency_exponent, split_by_s
from ..modules import FpModule, ModuleHom, hom_module
from ..ring import RingElement
from ..common.exceptions import NotContramoduleError, PreconditionError, RingMismatchError
from ..common.logging import get_logger

logger = get_logger("contra.completion")


@dataclass(frozen=True)
class CompletedModule:
    """
    完备化结果 Δ_s(C) ≅ (R̂_s)^k ⊕ finite_part

    killed_part_record 记录被完备化消去的 s 可逆部分；exponent 是 s 在
    finite_part 上的幂零指数。

    Completion Δ_s(C) ≅ (R̂_s)^k ⊕ finite_part

    killed_part_record keeps the s-invertible part that completion kills;
    exponent is the nilpotency exponent of s on finite_part.
    """

    s: RingElement
    completed_rank: int
    finite_part: FpModule
    killed_part_record: FpModule
    exponent: int

    @property
    def is_zero(self) -> bool:
        return self.completed_rank == 0 and self.finite_part.is_zero

    def describe(self) -> str:
        ring = self.s.spec.short_name
        parts = []
        if self.completed_rank:
            parts.append(f"{ring}_({self.s})^^{self.completed_rank}")
        if not self.finite_part.is_zero:
            parts.append(self.finite_part.describe())
        return " ⊕ ".join(parts) if parts else "0"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "s": str(self.s),
            "completed_rank": self.completed_rank,
            "finite_part": self.finite_part.describe(),
            "killed_part": self.killed_part_record.describe(),
            "exponent": self.exponent,
        }

    def __str__(self) -> str:
        return self.describe()


def delta_completion(C: FpModule, s: Any) -> CompletedModule:
    """
    Δ_s(C)；s 为单位时结果为零（C 全部被消去），s = 0 时 Δ = C

    Δ_s(C); zero when s is a unit (all of C is killed) and Δ = C when s = 0
    """
    spec = C.spec
    s = spec.element(s)
    if s.is_unit:
        return CompletedModule(s, 0, FpModule.zero(spec), C.normalize(), 0)
    split = split_by_s(C, s)
    exponent = nilpotency_exponent(split.nilpotent, s)
    completed = CompletedModule(s, split.free_rank, split.nilpotent, split.invertible, exponent or 0)
    logger.debug(
        f"Δ_{s}({C.describe()}) = {completed.describe()}，消去 {split.invertible.describe()}",
        f"Δ_{s}({C.describe()}) = {completed.describe()}, killed {split.invertible.describe()}"
    )
    return completed


def reduce_completed(completed: CompletedModule, N: int) -> FpModule:
    """
    Ĉ/s^N·Ĉ = (R/s^N)^k ⊕ finite_part/s^N·finite_part

    Raises:
        PreconditionError: N 不是正整数 | N is not a positive integer
    """
    if N < 1:
        raise PreconditionError(
            cn=f"约化层数必须为正整数，收到 {N}",
            en=f"The reduction level must be a positive integer, got {N}"
        )
    spec = completed.s.spec
    power = completed.s ** N
    free_shadow = FpModule.from_cyclic_orders(spec, [power.payload] * completed.completed_rank)
    finite_shadow = ModuleHom.scalar(completed.finite_part, power).cokernel()[0]
    return free_shadow.direct_sum(finite_shadow).normalize()


def hom_from_completed(completed: CompletedModule, N: FpModule) -> FpModule:
    """
    Hom(Ĉ, N) = Hom(Ĉ/s^e·Ĉ, N)，e 为 s 在 N 上的幂零指数

    Hom(Ĉ, N) = Hom(Ĉ/s^e·Ĉ, N) where e is the nilpotency exponent of s on N

    Raises:
        RingMismatchError: 环不同 | Different rings
        NotContramoduleError: N 不是 s-反模 | N is not an s-contramodule
    """
    if N.spec != completed.s.spec:
        raise RingMismatchError(
            cn=f"完备模属于 {completed.s.spec}，N 属于 {N.spec}",
            en=f"The completed module lives over {completed.s.spec}, N over {N.spec}"
        )
    certificate = is_s_contramodule(N, completed.s)
    if not certificate.verdict:
        raise NotContramoduleError(
            cn=f"{N.describe()} 不是 {completed.s}-反模，Hom(Δ(−), N) 的约化公式不适用",
            en=f"{N.describe()} is not an {completed.s}-contramodule, "
               f"the reduction formula for Hom(Δ(−), N) does not apply"
        )
    level = max(certificate.exponent or 0, 1)
    return hom_module(reduce_completed(completed, level), N)
