"""
weightkit 局部化规格

Localization specifications

两种变体：
- MatrixFamily：有限个行列式非零的方阵 σ: R^a → R^a；
- Telescope：有限个环元素 s_j，对应望远镜型局部化 R[s_j⁻¹]。

Two variants:
- MatrixFamily: finitely many square matrices σ: R^a → R^a with nonzero determinant;
- Telescope: finitely many ring elements s_j, the telescope localizations R[s_j⁻¹].
"""

from dataclasses import dataclass
from typing import Any, Callable, Dict, Tuple, Union
from typing_extensions import TypeAlias

from ..ring import Matrix, RingElement, RingSpec
from ..common.exceptions import LocalizationError, RingMismatchError


@dataclass(frozen=True)
class MatrixFamily:
    """
    方阵族；构造时检查每个矩阵为方阵且行列式非零

    Family of square matrices; every matrix is checked to be square with nonzero determinant
    """

    spec: RingSpec
    mats: Tuple[Matrix, ...]

    variant = "matrices"

    def __post_init__(self) -> None:
        for index, sigma in enumerate(self.mats):
            if sigma.spec != self.spec:
                raise RingMismatchError(
                    cn=f"第 {index} 个矩阵属于 {sigma.spec}",
                    en=f"Matrix {index} lives in {sigma.spec}"
                )
            if not sigma.is_square:
                raise LocalizationError(
                    cn=f"第 {index} 个矩阵形状为 {sigma.shape}，必须是方阵",
                    en=f"Matrix {index} has shape {sigma.shape}; it must be square"
                )
            if sigma.determinant().is_zero:
                raise LocalizationError(
                    cn=f"第 {index} 个矩阵的行列式为零",
                    en=f"Matrix {index} has zero determinant"
                )

    @property
    def determinants(self) -> Tuple[RingElement, ...]:
        return tuple(sigma.determinant() for sigma in self.mats)

    def to_dict(self) -> Dict[str, Any]:
        return {"variant": self.variant, "mats": [sigma.to_strings() for sigma in self.mats]}


@dataclass(frozen=True)
class Telescope:
    """
    望远镜型规格；生成元可以是零或单位

    Telescope specification; generators may be zero or units
    """

    spec: RingSpec
    gens: Tuple[RingElement, ...]

    variant = "telescope"

    def __post_init__(self) -> None:
        if not self.gens:
            raise LocalizationError(cn="望远镜规格至少需要一个生成元", en="A telescope spec needs at least one generator")
        for s in self.gens:
            if s.spec != self.spec:
                raise RingMismatchError(cn=f"生成元 {s} 属于 {s.spec}", en=f"Generator {s} lives in {s.spec}")

    def to_dict(self) -> Dict[str, Any]:
        return {"variant": self.variant, "gens": [str(s) for s in self.gens]}


LocalizationSpec: TypeAlias = Union[MatrixFamily, Telescope]


def _matrix_family(spec: RingSpec, data: Dict[str, Any]) -> MatrixFamily:
    return MatrixFamily(spec, tuple(Matrix.from_rows(spec, rows) for rows in data["mats"]))


def _telescope(spec: RingSpec, data: Dict[str, Any]) -> Telescope:
    return Telescope(spec, tuple(spec.element(s) for s in data["gens"]))


# 变体名称 → 构造函数 | Variant name → constructor
_VARIANTS: Dict[str, Callable[[RingSpec, Dict[str, Any]], Any]] = {
    MatrixFamily.variant: _matrix_family,
    Telescope.variant: _telescope,
}


def matrix_family(spec: RingSpec, mats: Any) -> MatrixFamily:
    """由嵌套列表构造 | Build from nested lists"""
    return MatrixFamily(spec, tuple(m if isinstance(m, Matrix) else Matrix.from_rows(spec, m) for m in mats))


def telescope(spec: RingSpec, gens: Any) -> Telescope:
    return Telescope(spec, tuple(spec.element(s) for s in gens))


def parse_localization_spec(spec: RingSpec, data: Dict[str, Any]) -> LocalizationSpec:
    """
    解析 {"variant": "matrices", "mats": [...]} 或 {"variant": "telescope", "gens": [...]}

    Parse {"variant": "matrices", "mats": [...]} or {"variant": "telescope", "gens": [...]}

    Raises:
        LocalizationError: 未知变体或缺少字段 | Unknown variant or missing field
    """
    variant = data.get("variant")
    builder = _VARIANTS.get(variant)
    if builder is None:
        raise LocalizationError(
            cn=f"未知的局部化变体: {variant!r}（可选 {sorted(_VARIANTS)}）",
            en=f"Unknown localization variant: {variant!r} (expected one of {sorted(_VARIANTS)})"
        )
    try:
        return builder(spec, data)
    except KeyError as exc:
        raise LocalizationError(
            cn=f"局部化规格缺少字段 {exc}",
            en=f"Localization spec is missing the field {exc}"
        ) from exc
