"""
weightkit 有限表现模

Finitely presented modules over the active Euclidean domain

模 M = coker(R^a → R^b)。relations 按序列化约定存储为 a×b（每行一个关系），
其转置 relation_map 才是 R^a → R^b 的矩阵。

A module M = coker(R^a → R^b). relations is stored as in the serialization,
a×b with one relation per row; its transpose relation_map is the matrix of
R^a → R^b.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Any, Dict, List, Sequence, Tuple

from ..ring import Matrix, RingElement, RingSpec, smith_normal_form
from ..common.exceptions import DimensionError, RingMismatchError
from ..common.logging import get_logger

logger = get_logger("modules.fpmodule")


@dataclass(frozen=True)
class NormalForm:
    """
    不变因子标准形及坐标变换

    to_normal (k×b) 把原生成元坐标映到标准坐标，from_normal (b×k) 反之。
    标准生成元顺序：先挠部分（按不变因子顺序），后自由部分。

    Invariant-factor normal form with its change of coordinates

    to_normal (k×b) maps original generator coordinates to normal
    coordinates and from_normal (b×k) goes back. Normal generators come
    torsion first (in invariant-factor order), then the free part.
    """

    free_rank: int
    invariant_factors: Tuple[RingElement, ...]
    to_normal: Matrix
    from_normal: Matrix

    @property
    def torsion_count(self) -> int:
        return len(self.invariant_factors)

    @property
    def key(self) -> Tuple[int, Tuple[Any, ...]]:
        return self.free_rank, tuple(d.payload for d in self.invariant_factors)


@dataclass(frozen=True, eq=False)
class FpModule:
    """
    有限表现模

    相等判定按标准形进行（同构类），哈希同理。

    Finitely presented module

    Equality and hashing go through the normal form (isomorphism class).
    """

    spec: RingSpec
    generators: int
    relations: Matrix

    def __post_init__(self) -> None:
        if self.relations.spec != self.spec:
            raise RingMismatchError(
                cn=f"关系矩阵属于 {self.relations.spec}，模属于 {self.spec}",
                en=f"Relation matrix lives in {self.relations.spec}, the module in {self.spec}"
            )
        if self.relations.ncols != self.generators:
            raise DimensionError(
                cn=f"关系矩阵有 {self.relations.ncols} 列，但生成元个数为 {self.generators}",
                en=f"Relation matrix has {self.relations.ncols} columns but there are {self.generators} generators"
            )

    # --- 构造器 | Constructors ---

    @classmethod
    def from_relations(cls, spec: RingSpec, rows: Sequence[Sequence[Any]], generators: int = None) -> "FpModule":
        """
        从关系行构造 | Build from relation rows

        Args:
            spec: 系数环 | Coefficient ring
            rows: 每行一个关系 | One relation per row
            generators: 生成元个数（无关系时必需） | Generator count (needed when there are no relations)
        """
        matrix = Matrix.from_rows(spec, rows, ncols=generators)
        return cls(spec, matrix.ncols if generators is None else generators, matrix)

    @classmethod
    def from_relation_map(cls, relation_map: Matrix) -> "FpModule":
        """coker(relation_map: R^a → R^b)"""
        return cls(relation_map.spec, relation_map.nrows, relation_map.transpose())

    @classmethod
    def free(cls, spec: RingSpec, rank: int) -> "FpModule":
        return cls(spec, rank, Matrix.zeros(spec, 0, rank))

    @classmethod
    def zero(cls, spec: RingSpec) -> "FpModule":
        return cls.free(spec, 0)

    @classmethod
    def cyclic(cls, spec: RingSpec, order: Any) -> "FpModule":
        """R/(order)；order = 0 给出 R | R/(order); order 0 gives R"""
        return cls.from_cyclic_orders(spec, [order])

    @classmethod
    def from_cyclic_orders(cls, spec: RingSpec, orders: Sequence[Any]) -> "FpModule":
        """
        ⊕ R/(d_i)，d_i = 0 表示自由直和项

        ⊕ R/(d_i) where d_i = 0 stands for a free summand
        """
        elements = [spec.element(d) for d in orders]
        rows = []
        for i, d in enumerate(elements):
            if d.is_zero:
                continue
            row = [spec.arithmetic.zero] * len(elements)
            row[i] = d.payload
            rows.append(row)
        return cls(spec, len(elements), Matrix.from_payloads(spec, rows, len(rows), len(elements)))

    def direct_sum(self, *others: "FpModule") -> "FpModule":
        relations = self.relations
        generators = self.generators
        for other in others:
            if other.spec != self.spec:
                raise RingMismatchError(
                    cn=f"不能对 {self.spec} 与 {other.spec} 上的模取直和",
                    en=f"Cannot take the direct sum of modules over {self.spec} and {other.spec}"
                )
            relations = relations.direct_sum(other.relations)
            generators += other.generators
        return FpModule(self.spec, generators, relations)

    def power(self, n: int) -> "FpModule":
        """M^n"""
        if n == 0:
            return FpModule.zero(self.spec)
        return self.direct_sum(*([self] * (n - 1)))

    # --- 标准形 | Normal form ---

    @property
    def relation_map(self) -> Matrix:
        return self.relations.transpose()

    @cached_property
    def normal_form(self) -> NormalForm:
        """
        由关系映射的 SNF 得到：坐标变换 x ↦ U·x，丢弃单位不变因子对应的坐标

        From the SNF of the relation map: coordinates change by x ↦ U·x and
        the coordinates of unit invariant factors are dropped
        """
        snf = smith_normal_form(self.relation_map)
        torsion = [i for i, d in enumerate(snf.invariant_factors) if not d.is_unit]
        free = list(range(snf.rank, self.generators))
        kept = torsion + free
        to_normal = snf.U.submatrix(kept, range(self.generators))
        from_normal = snf.U_inv.submatrix(range(self.generators), kept)
        factors = tuple(snf.invariant_factors[i] for i in torsion)
        logger.debug(
            f"模标准形: {self.generators} 个生成元 → 自由秩 {len(free)}，不变因子 {[str(d) for d in factors]}",
            f"Module normal form: {self.generators} generators → free rank {len(free)}, factors {[str(d) for d in factors]}"
        )
        return NormalForm(len(free), factors, to_normal, from_normal)

    def normalize(self) -> "FpModule":
        """
        同构类中对角不变因子形式的表现

        The presentation in diagonal invariant-factor form within the isomorphism class
        """
        nf = self.normal_form
        orders = [d.payload for d in nf.invariant_factors] + [self.spec.arithmetic.zero] * nf.free_rank
        return FpModule.from_cyclic_orders(self.spec, orders)

    @property
    def free_rank(self) -> int:
        return self.normal_form.free_rank

    @property
    def invariant_factors(self) -> List[RingElement]:
        return list(self.normal_form.invariant_factors)

    @property
    def is_zero(self) -> bool:
        nf = self.normal_form
        return nf.free_rank == 0 and nf.torsion_count == 0

    @property
    def is_free(self) -> bool:
        return self.normal_form.torsion_count == 0

    @property
    def minimal_generators(self) -> int:
        nf = self.normal_form
        return nf.free_rank + nf.torsion_count

    def length_bound(self) -> int:
        """挠部分合成长度的上界 | Upper bound on the composition length of the torsion part"""
        return sum(d.length_bound for d in self.normal_form.invariant_factors)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FpModule):
            return NotImplemented
        return self.spec == other.spec and self.normal_form.key == other.normal_form.key

    def __hash__(self) -> int:
        return hash((self.spec, self.normal_form.key))

    # --- 元素 | Elements ---

    def vector(self, values: Sequence[Any]) -> Matrix:
        """生成元坐标下的元素（列向量） | Element in generator coordinates (column vector)"""
        if len(values) != self.generators:
            raise DimensionError(
                cn=f"元素需要 {self.generators} 个坐标，收到 {len(values)}",
                en=f"An element needs {self.generators} coordinates, got {len(values)}"
            )
        return Matrix.column(self.spec, values)

    def reduce(self, x: Matrix) -> Tuple[RingElement, ...]:
        """
        元素的规范代表：标准坐标，挠坐标取模 d_i

        Canonical representative of an element: normal coordinates with the
        torsion coordinates taken mod d_i
        """
        nf = self.normal_form
        y = nf.to_normal @ x
        coords = []
        for i in range(y.nrows):
            value = y[i, 0]
            if i < nf.torsion_count:
                value = value % nf.invariant_factors[i]
            coords.append(value)
        return tuple(coords)

    def is_zero_element(self, x: Matrix) -> bool:
        return all(c.is_zero for c in self.reduce(x))

    def elements_equal(self, x: Matrix, y: Matrix) -> bool:
        return self.is_zero_element(x - y)

    # --- 展示 | Presentation ---

    def describe(self) -> str:
        """例如 "Z/2 ⊕ Z/6 ⊕ Z^1" | e.g. "Z/2 ⊕ Z/6 ⊕ Z^1" """
        nf = self.normal_form
        ring = self.spec.short_name
        parts = []
        for d in nf.invariant_factors:
            label = str(d)
            parts.append(f"{ring}/{label}" if label.isdigit() else f"{ring}/({label})")
        if nf.free_rank:
            parts.append(f"{ring}^{nf.free_rank}")
        return " ⊕ ".join(parts) if parts else "0"

    def to_dict(self) -> Dict[str, Any]:
        nf = self.normal_form
        return {
            "ring": self.spec.short_name,
            "generators": self.generators,
            "relations": self.relations.to_strings(),
            "normal_form": {
                "free_rank": nf.free_rank,
                "invariant_factors": [str(d) for d in nf.invariant_factors],
            },
        }

    def __str__(self) -> str:
        return self.describe()

    def __repr__(self) -> str:
        return f"FpModule({self.describe()})"


def is_isomorphic(M: FpModule, N: FpModule) -> bool:
    """
    同构判定：标准形一致

    Isomorphism test: the normal forms agree

    Raises:
        RingMismatchError: 环不同 | Different rings
    """
    if M.spec != N.spec:
        raise RingMismatchError(
            cn=f"不能比较 {M.spec} 与 {N.spec} 上的模",
            en=f"Cannot compare modules over {M.spec} and {N.spec}"
        )
    return M.normal_form.key == N.normal_form.key


def normalize(M: FpModule) -> FpModule:
    return M.normalize()
