"""
weightkit 望远镜算子与截断塔

Telescope operator and truncated towers

R[s⁻¹] 有长度为 1 的自由分解 0 → ⊕R·e_n → ⊕R·e_n → R[s⁻¹] → 0，
e_n ↦ e_n − s·e_{n+1}。对 C 取 Hom 得到塔 C ←s− C ←s− …，其 lim 与 lim¹
分别是 Hom(R[s⁻¹], C) 与 Ext¹(R[s⁻¹], C)。算子从不展开为无穷矩阵，
只作用于有限塔。

R[s⁻¹] has the length-1 free resolution 0 → ⊕R·e_n → ⊕R·e_n → R[s⁻¹] → 0
with e_n ↦ e_n − s·e_{n+1}. Applying Hom(−, C) gives the tower
C ←s− C ←s− …, whose lim and lim¹ are Hom(R[s⁻¹], C) and Ext¹(R[s⁻¹], C).
The operator is never expanded into an infinite matrix; it only acts on
finite towers.
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence

from ..modules import FpModule, ModuleHom, ProjectiveDimension, is_isomorphic
from ..ring import Matrix, RingElement, RingSpec
from ..common.exceptions import DimensionError, RingMismatchError
from ..common.logging import get_logger

logger = get_logger("contra.telescope")


def _as_element(spec: RingSpec, s: Any) -> RingElement:
    return spec.element(s)


@dataclass(frozen=True)
class TelescopeOperator:
    """
    形式算子 "1 − s·shift"

    作用于塔 (c_0, c_1, …)：(c_n) ↦ (c_n − s·c_{n+1})。

    Formal operator "1 − s·shift"

    Acts on towers (c_0, c_1, …) by (c_n) ↦ (c_n − s·c_{n+1}).
    """

    s: RingElement

    @property
    def spec(self) -> RingSpec:
        return self.s.spec

    def apply(self, tower: Sequence[Matrix]) -> List[Matrix]:
        """
        作用于有限塔；结果比输入短一项

        Apply to a finite tower; the result is one term shorter
        """
        return [tower[n] - tower[n + 1].scale(self.s) for n in range(len(tower) - 1)]

    def back_substitute(self, values: Sequence[Matrix], top: Optional[Matrix] = None) -> List[Matrix]:
        """
        解 c_n − s·c_{n+1} = b_n，自顶向下：c_n = b_n + s·c_{n+1}

        Solve c_n − s·c_{n+1} = b_n from the top down: c_n = b_n + s·c_{n+1}

        Args:
            values: 有限支撑的 b_0 … b_{L−1} | Finitely supported b_0 … b_{L−1}
            top: c_L，缺省为零 | c_L, zero by default
        """
        if not values:
            return [top] if top is not None else []
        current = top if top is not None else Matrix.zeros(self.spec, values[-1].nrows, values[-1].ncols)
        solution = [current]
        for b in reversed(values):
            current = b + current.scale(self.s)
            solution.append(current)
        solution.reverse()
        return solution

    def truncated_matrix(self, C: FpModule, depth: int) -> ModuleHom:
        """
        截断算子 C^{depth+1} → C^{depth} 作为模同态

        The truncated operator C^{depth+1} → C^{depth} as a module homomorphism
        """
        if C.spec != self.spec:
            raise RingMismatchError(
                cn=f"塔属于 {C.spec}，算子属于 {self.spec}",
                en=f"Tower lives over {C.spec}, the operator over {self.spec}"
            )
        if depth < 0:
            raise DimensionError(cn="截断深度必须非负", en="Truncation depth must be nonnegative")
        ar = self.spec.arithmetic
        b = C.generators
        rows = [[ar.zero] * ((depth + 1) * b) for _ in range(depth * b)]
        minus_s = ar.neg(self.s.payload)
        for n in range(depth):
            for j in range(b):
                rows[n * b + j][n * b + j] = ar.one
                rows[n * b + j][(n + 1) * b + j] = minus_s
        matrix = Matrix.from_payloads(self.spec, rows, depth * b, (depth + 1) * b)
        return ModuleHom(C.power(depth + 1), C.power(depth), matrix, check=False)

    def tensor_matrix(self, M: FpModule, length: int) -> ModuleHom:
        """
        分解张量 M 后的截断：M^length → M^{length+1}，
        (x_n) ↦ (x_n − s·x_{n−1})，x_{−1} = x_length = 0

        The resolution tensored with M, truncated: M^length → M^{length+1},
        (x_n) ↦ (x_n − s·x_{n−1}) with x_{−1} = x_length = 0
        """
        ar = self.spec.arithmetic
        b = M.generators
        rows = [[ar.zero] * (length * b) for _ in range((length + 1) * b)]
        minus_s = ar.neg(self.s.payload)
        for n in range(length):
            for j in range(b):
                rows[n * b + j][n * b + j] = ar.one
                rows[(n + 1) * b + j][n * b + j] = minus_s
        matrix = Matrix.from_payloads(self.spec, rows, (length + 1) * b, length * b)
        return ModuleHom(M.power(length), M.power(length + 1), matrix, check=False)

    def recover(self, image: Sequence[Matrix]) -> List[Matrix]:
        """
        由 y = (1 − s·shift)(x) 自底向上回代：x_0 = y_0，x_n = y_n + s·x_{n−1}

        Back-substitute x from y = (1 − s·shift)(x): x_0 = y_0, x_n = y_n + s·x_{n−1}
        """
        recovered: List[Matrix] = []
        for n, y in enumerate(image[:-1]):
            recovered.append(y if n == 0 else y + recovered[-1].scale(self.s))
        return recovered

    def to_dict(self) -> Dict[str, Any]:
        return {"s": str(self.s), "operator": "1 - s*shift"}


def _torsion_part(C: FpModule) -> FpModule:
    return FpModule.from_cyclic_orders(C.spec, [d.payload for d in C.invariant_factors])


def _image_of_power(C: FpModule, s: RingElement, n: int) -> FpModule:
    return ModuleHom.scalar(C, s ** n).image()[0]


def stabilization_depth(C: FpModule, s: Any) -> int:
    """
    挠部分 T 上像链 s^n·T 稳定的最小 n（s^{n+1}·T = s^n·T）

    像链递减且 T 长度有限，因此同构即相等。

    Smallest n at which the image chain s^n·T on the torsion part T
    stabilizes (s^{n+1}·T = s^n·T)

    The chain is decreasing and T has finite length, so isomorphic means equal.
    """
    s = _as_element(C.spec, s)
    T = _torsion_part(C)
    if T.is_zero:
        return 0
    n = 0
    current = T
    while True:
        following = _image_of_power(T, s, n + 1)
        if is_isomorphic(current, following):
            logger.debug(
                f"像链在深度 {n} 处稳定 (s = {s})",
                f"Image chain stabilizes at depth {n} (s = {s})"
            )
            return n
        current = following
        n += 1


@dataclass(frozen=True)
class TowerLimits:
    """
    截断塔 C ←s− C ←s− … 的 lim 与 lim¹ 数据

    stable_image = s^L·C；quotients = (C/s^L·C, C/s^{L+1}·C)。

    lim and lim¹ data of the truncated tower C ←s− C ←s− …

    stable_image = s^L·C; quotients = (C/s^L·C, C/s^{L+1}·C).
    """

    s: RingElement
    depth: int
    stable_image: FpModule
    quotients: tuple

    @property
    def lim_vanishes(self) -> bool:
        """
        s 可逆时 lim = C；否则 lim 是稳定像的挠部分（Krull 交定理消去自由方向）

        For a unit s, lim = C; otherwise lim is the torsion of the stable image
        (Krull's intersection theorem kills the free directions)
        """
        if self.s.is_unit:
            return self.stable_image.is_zero
        return self.stable_image.normal_form.torsion_count == 0

    @property
    def lim1_vanishes(self) -> bool:
        """C/s^n·C 的塔已经稳定 | The tower C/s^n·C has stabilized"""
        return is_isomorphic(*self.quotients)

    @property
    def is_contramodule(self) -> bool:
        return self.lim_vanishes and self.lim1_vanishes

    def to_dict(self) -> Dict[str, Any]:
        return {
            "s": str(self.s),
            "depth": self.depth,
            "stable_image": self.stable_image.describe(),
            "quotients": [q.describe() for q in self.quotients],
            "lim_vanishes": self.lim_vanishes,
            "lim1_vanishes": self.lim1_vanishes,
        }


def _tower_heads(C: FpModule, s: RingElement, depth: int) -> ModuleHom:
    """
    ker(截断算子) → C^{depth+1} → C 取首项；像为 s^depth·C

    ker(truncated operator) → C^{depth+1} → C onto the head; the image is s^depth·C
    """
    spec = C.spec
    b = C.generators
    if depth == 0 or b == 0:
        return ModuleHom(C, C, Matrix.identity(spec, b), check=False)
    head = Matrix.identity(spec, b).hstack(Matrix.zeros(spec, b, depth * b))
    projection = ModuleHom(C.power(depth + 1), C, head, check=False)
    _, inclusion = TelescopeOperator(s).truncated_matrix(C, depth).kernel()
    return projection @ inclusion


def tower_limits(C: FpModule, s: Any, depth: Optional[int] = None) -> TowerLimits:
    """
    由截断算子的核与余核计算 lim / lim¹

    相容序列 (c_0, …, c_L) 构成截断算子 C^{L+1} → C^L 的核，其首项给出 s^L·C。
    塔在深度 L 之后再多截一层，用来确认商已经稳定。

    Truncated lim / lim¹ from kernels and cokernels of the truncated operator

    Compatible sequences (c_0, …, c_L) form the kernel of the truncated
    operator C^{L+1} → C^L and their heads give s^L·C. The tower is cut one
    level past L to confirm the quotients have stabilized.

    Args:
        C: 有限表现模 | Finitely presented module
        s: 环元素 | Ring element
        depth: 截断深度，缺省取 C 的长度界加一（不小于稳定深度） |
            Truncation depth, by default the length bound of C plus one
            (never below the stabilization depth)
    """
    s = _as_element(C.spec, s)
    L = C.length_bound() + 1 if depth is None else depth
    heads = _tower_heads(C, s, L)
    padded = _tower_heads(C, s, L + 1)
    logger.debug(f"截断塔深度 {L} (s = {s})", f"Truncated tower at depth {L} (s = {s})")
    return TowerLimits(s, L, heads.image()[0], (heads.cokernel()[0], padded.cokernel()[0]))


def projective_dimension_bound(s: Any, spec: RingSpec) -> ProjectiveDimension:
    """
    pd R[s⁻¹]：s 可逆时为 0（R[s⁻¹] = R），s = 0 时为 −∞（R[s⁻¹] = 0），
    否则望远镜分解给出 1（R[s⁻¹] 不是投射模）

    pd R[s⁻¹]: 0 for a unit s (R[s⁻¹] = R), −∞ for s = 0 (R[s⁻¹] = 0),
    otherwise 1 from the telescope resolution (R[s⁻¹] is not projective)
    """
    s = _as_element(spec, s)
    if s.is_zero:
        return ProjectiveDimension.MINUS_INFINITY
    if s.is_unit:
        return ProjectiveDimension.ZERO
    return ProjectiveDimension.ONE
