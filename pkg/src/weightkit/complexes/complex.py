"""
weightkit 有界上链复形

Bounded cochain complexes of finite-rank free modules

约定：微分升高上同调次数，d_i: R^rank(i) → R^rank(i+1) 是 rank(i+1)×rank(i) 矩阵。
Convention: differentials raise cohomological degree, d_i: R^rank(i) → R^rank(i+1)
is a rank(i+1)×rank(i) matrix.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, Mapping, Optional, Sequence, Tuple

from ..ring import Matrix, RingSpec
from ..common.exceptions import ComplexError, DimensionError, RingMismatchError


@dataclass(frozen=True, eq=False)
class ChainComplex:
    """
    有界自由模上链复形

    low 为最低次数，ranks[k] 为次数 low+k 的秩，differentials[k] 为 d_{low+k}。
    范围外的秩为 0。构造时检查 d∘d = 0。

    Bounded cochain complex of free modules

    low is the lowest degree, ranks[k] the rank in degree low+k and
    differentials[k] is d_{low+k}. Ranks outside the range are 0. d∘d = 0 is
    checked at construction.
    """

    spec: RingSpec
    low: int
    ranks: Tuple[int, ...]
    differentials: Tuple[Matrix, ...]

    def __post_init__(self) -> None:
        if len(self.differentials) != max(len(self.ranks) - 1, 0):
            raise ComplexError(
                cn=f"{len(self.ranks)} 个项需要 {max(len(self.ranks) - 1, 0)} 个微分，收到 {len(self.differentials)}",
                en=f"{len(self.ranks)} terms need {max(len(self.ranks) - 1, 0)} differentials, got {len(self.differentials)}"
            )
        for k, d in enumerate(self.differentials):
            degree = self.low + k
            if d.spec != self.spec:
                raise RingMismatchError(
                    cn=f"次数 {degree} 的微分属于 {d.spec}",
                    en=f"Differential in degree {degree} lives in {d.spec}"
                )
            if d.shape != (self.ranks[k + 1], self.ranks[k]):
                raise ComplexError(
                    cn=f"次数 {degree} 的微分形状 {d.shape} 与秩 {self.ranks[k]} → {self.ranks[k + 1]} 不符",
                    en=f"Differential in degree {degree} has shape {d.shape}, "
                       f"ranks are {self.ranks[k]} → {self.ranks[k + 1]}",
                    degree=degree
                )
        for k in range(len(self.differentials) - 1):
            if not (self.differentials[k + 1] @ self.differentials[k]).is_zero:
                degree = self.low + k
                raise ComplexError(
                    cn=f"d∘d ≠ 0：d_{degree + 1}∘d_{degree} 不为零",
                    en=f"d∘d ≠ 0: d_{degree + 1}∘d_{degree} is nonzero",
                    degree=degree
                )

    # --- 构造器 | Constructors ---

    @classmethod
    def build(
            cls,
            spec: RingSpec,
            low: int,
            ranks: Sequence[int],
            differentials: Sequence[Matrix] = ()
    ) -> "ChainComplex":
        ranks = tuple(ranks)
        if not differentials and len(ranks) > 1:
            differentials = [Matrix.zeros(spec, ranks[k + 1], ranks[k]) for k in range(len(ranks) - 1)]
        return cls(spec, low, ranks, tuple(differentials)).trimmed()

    @classmethod
    def zero(cls, spec: RingSpec) -> "ChainComplex":
        return cls(spec, 0, (), ())

    @classmethod
    def concentrated(cls, spec: RingSpec, degree: int, rank: int) -> "ChainComplex":
        """自由模 R^rank 集中于一个次数 | Free module R^rank concentrated in one degree"""
        return cls.build(spec, degree, [rank])

    @classmethod
    def two_term(cls, matrix: Matrix, degree: int = 0) -> "ChainComplex":
        """[R^a --matrix--> R^b]，位于次数 {degree, degree+1} | in degrees {degree, degree+1}"""
        return cls.build(matrix.spec, degree, [matrix.ncols, matrix.nrows], [matrix])

    @classmethod
    def from_degrees(cls, spec: RingSpec, ranks: Mapping[int, int], differentials: Mapping[int, Matrix]) -> "ChainComplex":
        """从次数字典构造 | Build from degree-indexed dictionaries"""
        degrees = [i for i, r in ranks.items() if r]
        if not degrees:
            return cls.zero(spec)
        low, high = min(degrees), max(degrees)
        rank_list = [ranks.get(i, 0) for i in range(low, high + 1)]
        diffs = []
        for i in range(low, high):
            d = differentials.get(i)
            diffs.append(d if d is not None else Matrix.zeros(spec, rank_list[i + 1 - low], rank_list[i - low]))
        return cls(spec, low, tuple(rank_list), tuple(diffs))

    def trimmed(self) -> "ChainComplex":
        """去掉两端秩为 0 的项 | Drop zero-rank terms at both ends"""
        nonzero = [k for k, r in enumerate(self.ranks) if r]
        if not nonzero:
            return ChainComplex(self.spec, 0, (), ())
        a, b = nonzero[0], nonzero[-1]
        if a == 0 and b == len(self.ranks) - 1:
            return self
        return ChainComplex(self.spec, self.low + a, self.ranks[a:b + 1], self.differentials[a:b])

    # --- 访问 | Access ---

    @property
    def high(self) -> int:
        return self.low + len(self.ranks) - 1

    @property
    def support(self) -> Optional[Tuple[int, int]]:
        """非零项所在的最小区间；零复形返回 None | Smallest interval holding nonzero terms; None for zero"""
        nonzero = [self.low + k for k, r in enumerate(self.ranks) if r]
        if not nonzero:
            return None
        return nonzero[0], nonzero[-1]

    def degrees(self) -> Iterable[int]:
        return range(self.low, self.high + 1)

    def rank(self, i: int) -> int:
        k = i - self.low
        if 0 <= k < len(self.ranks):
            return self.ranks[k]
        return 0

    def differential(self, i: int) -> Matrix:
        """d_i: M^i → M^{i+1}"""
        k = i - self.low
        if 0 <= k < len(self.differentials):
            return self.differentials[k]
        return Matrix.zeros(self.spec, self.rank(i + 1), self.rank(i))

    @property
    def is_zero(self) -> bool:
        return all(r == 0 for r in self.ranks)

    @property
    def total_rank(self) -> int:
        return sum(self.ranks)

    def to_dict(self) -> Dict[str, Any]:
        support = self.support
        if support is None:
            return {"ring": self.spec.short_name, "support": None, "ranks": [], "differentials": []}
        a, b = support
        return {
            "ring": self.spec.short_name,
            "support": [a, b],
            "ranks": [self.rank(i) for i in range(a, b + 1)],
            "differentials": [self.differential(i).to_strings() for i in range(a, b)],
        }

    def __repr__(self) -> str:
        return f"ChainComplex(low={self.low}, ranks={list(self.ranks)})"


def _degree_span(*complexes: ChainComplex) -> range:
    lows = [c.low for c in complexes if c.ranks]
    highs = [c.high for c in complexes if c.ranks]
    if not lows:
        return range(0)
    return range(min(lows) - 1, max(highs) + 2)


@dataclass(frozen=True, eq=False)
class ChainMap:
    """
    链映射 f: S → T，components[i] 为 rank_T(i)×rank_S(i) 矩阵，缺省为零

    Chain map f: S → T; components[i] is a rank_T(i)×rank_S(i) matrix, zero when missing
    """

    source: ChainComplex
    target: ChainComplex
    components: Dict[int, Matrix] = field(default_factory=dict)
    check: bool = True

    def __post_init__(self) -> None:
        for i, m in self.components.items():
            if m.shape != (self.target.rank(i), self.source.rank(i)):
                raise DimensionError(
                    cn=f"次数 {i} 的分量形状 {m.shape} 与 {(self.target.rank(i), self.source.rank(i))} 不符",
                    en=f"Component in degree {i} has shape {m.shape}, expected "
                       f"{(self.target.rank(i), self.source.rank(i))}"
                )
        if self.check:
            for i in _degree_span(self.source, self.target):
                left = self.target.differential(i) @ self.component(i)
                right = self.component(i + 1) @ self.source.differential(i)
                if not (left - right).is_zero:
                    raise ComplexError(
                        cn=f"链映射在次数 {i} 与微分不交换",
                        en=f"Chain map does not commute with the differentials in degree {i}",
                        degree=i
                    )

    @classmethod
    def identity(cls, M: ChainComplex) -> "ChainMap":
        return cls(M, M, {i: Matrix.identity(M.spec, M.rank(i)) for i in M.degrees()}, check=False)

    @classmethod
    def zero(cls, source: ChainComplex, target: ChainComplex) -> "ChainMap":
        return cls(source, target, {}, check=False)

    def component(self, i: int) -> Matrix:
        m = self.components.get(i)
        if m is not None:
            return m
        return Matrix.zeros(self.source.spec, self.target.rank(i), self.source.rank(i))

    def compose(self, other: "ChainMap") -> "ChainMap":
        """self ∘ other"""
        degrees = _degree_span(other.source, self.target)
        return ChainMap(other.source, self.target,
                        {i: self.component(i) @ other.component(i) for i in degrees}, check=False)

    def __matmul__(self, other: "ChainMap") -> "ChainMap":
        return self.compose(other)

    def __sub__(self, other: "ChainMap") -> "ChainMap":
        degrees = _degree_span(self.source, self.target)
        return ChainMap(self.source, self.target,
                        {i: self.component(i) - other.component(i) for i in degrees}, check=False)

    def to_dict(self) -> Dict[str, Any]:
        return {str(i): m.to_strings() for i, m in sorted(self.components.items()) if m.nrows and m.ncols}


@dataclass(frozen=True, eq=False)
class Homotopy:
    """
    同伦 h: f ≃ g，h_i: S^i → T^{i−1}，满足 f − g = d∘h + h∘d

    Homotopy h: f ≃ g with h_i: S^i → T^{i−1} and f − g = d∘h + h∘d
    """

    first: ChainMap
    second: ChainMap
    components: Dict[int, Matrix] = field(default_factory=dict)

    def component(self, i: int) -> Matrix:
        m = self.components.get(i)
        if m is not None:
            return m
        source, target = self.first.source, self.first.target
        return Matrix.zeros(source.spec, target.rank(i - 1), source.rank(i))

    def failing_degree(self) -> Optional[int]:
        """恒等式不成立的第一个次数；全部成立返回 None | First degree where the identity fails, None if it holds"""
        source, target = self.first.source, self.first.target
        for i in _degree_span(source, target):
            lhs = self.first.component(i) - self.second.component(i)
            rhs = target.differential(i - 1) @ self.component(i) + self.component(i + 1) @ source.differential(i)
            if not (lhs - rhs).is_zero:
                return i
        return None

    def verify(self) -> bool:
        return self.failing_degree() is None

    def to_dict(self) -> Dict[str, Any]:
        return {str(i): m.to_strings() for i, m in sorted(self.components.items()) if m.nrows and m.ncols}
