"""
weightkit 精确矩阵

Exact matrices over the active ring

矩阵作用于列向量：表示 R^a → R^b 的矩阵有 b 行 a 列。
Matrices act on column vectors: a matrix for R^a → R^b has b rows and a columns.
"""

from dataclasses import dataclass
from typing import Any, Dict, Hashable, Iterable, List, Sequence, Tuple

from .spec import RingSpec
from .element import RingElement
from ..common.exceptions import DimensionError, RingMismatchError

Rows = Tuple[Tuple[Hashable, ...], ...]


@dataclass(frozen=True)
class Matrix:
    """
    不可变的精确矩阵，允许 0 行或 0 列（表示零模 / 零映射）

    Immutable exact matrix; zero rows or columns are allowed (zero modules / zero maps)
    """

    spec: RingSpec
    nrows: int
    ncols: int
    entries: Rows

    def __post_init__(self) -> None:
        if self.nrows < 0 or self.ncols < 0:
            raise DimensionError(
                cn=f"矩阵维数不能为负: {self.nrows}×{self.ncols}",
                en=f"Matrix dimensions must be nonnegative: {self.nrows}×{self.ncols}"
            )
        if len(self.entries) != self.nrows or any(len(row) != self.ncols for row in self.entries):
            raise DimensionError(
                cn=f"矩阵条目与声明的形状 {self.nrows}×{self.ncols} 不符",
                en=f"Matrix entries do not match the declared shape {self.nrows}×{self.ncols}"
            )

    # --- 构造器 | Constructors ---

    @classmethod
    def from_rows(cls, spec: RingSpec, rows: Sequence[Sequence[Any]], ncols: int = None) -> "Matrix":
        """
        从行列表构造；条目可以是 int、str、Fraction 或 RingElement

        Build from a list of rows; entries may be int, str, Fraction or RingElement

        Args:
            spec: 系数环 | Coefficient ring
            rows: 行列表 | List of rows
            ncols: 行列表为空时的列数 | Column count when the row list is empty
        """
        arithmetic = spec.arithmetic

        def convert(value: Any) -> Hashable:
            if isinstance(value, RingElement):
                if value.spec != spec:
                    raise RingMismatchError(
                        cn=f"矩阵条目属于 {value.spec}，而不是 {spec}",
                        en=f"Matrix entry lives in {value.spec}, not {spec}"
                    )
                return value.payload
            return arithmetic.coerce(value)

        entries = tuple(tuple(convert(v) for v in row) for row in rows)
        width = len(entries[0]) if entries else (ncols or 0)
        return cls(spec, len(entries), width, entries)

    @classmethod
    def from_payloads(cls, spec: RingSpec, rows: Iterable[Iterable[Hashable]], nrows: int, ncols: int) -> "Matrix":
        return cls(spec, nrows, ncols, tuple(tuple(row) for row in rows))

    @classmethod
    def zeros(cls, spec: RingSpec, nrows: int, ncols: int) -> "Matrix":
        z = spec.arithmetic.zero
        return cls(spec, nrows, ncols, tuple((z,) * ncols for _ in range(nrows)))

    @classmethod
    def identity(cls, spec: RingSpec, n: int) -> "Matrix":
        return cls.diagonal(spec, [spec.arithmetic.one] * n)

    @classmethod
    def diagonal(cls, spec: RingSpec, values: Sequence[Any], nrows: int = None, ncols: int = None) -> "Matrix":
        """
        （矩形）对角矩阵 | (Rectangular) diagonal matrix
        """
        arithmetic = spec.arithmetic
        payloads = [v.payload if isinstance(v, RingElement) else arithmetic.coerce(v) for v in values]
        nrows = len(payloads) if nrows is None else nrows
        ncols = len(payloads) if ncols is None else ncols
        rows = [[arithmetic.zero] * ncols for _ in range(nrows)]
        for i, value in enumerate(payloads):
            rows[i][i] = value
        return cls.from_payloads(spec, rows, nrows, ncols)

    @classmethod
    def column(cls, spec: RingSpec, values: Sequence[Any]) -> "Matrix":
        return cls.from_rows(spec, [[v] for v in values], ncols=1)

    @classmethod
    def from_blocks(
            cls,
            spec: RingSpec,
            row_sizes: Sequence[int],
            col_sizes: Sequence[int],
            blocks: Dict[Tuple[int, int], "Matrix"]
    ) -> "Matrix":
        """
        按块拼装；未给出的块为零

        Assemble from blocks; missing blocks are zero

        Args:
            row_sizes: 各块行的高度 | Heights of the block rows
            col_sizes: 各块列的宽度 | Widths of the block columns
            blocks: (块行, 块列) → 矩阵 | (block row, block column) → matrix
        """
        row_offsets = [sum(row_sizes[:k]) for k in range(len(row_sizes))]
        col_offsets = [sum(col_sizes[:k]) for k in range(len(col_sizes))]
        nrows, ncols = sum(row_sizes), sum(col_sizes)
        grid = [[spec.arithmetic.zero] * ncols for _ in range(nrows)]
        for (bi, bj), block in blocks.items():
            if block.shape != (row_sizes[bi], col_sizes[bj]):
                raise DimensionError(
                    cn=f"块 ({bi}, {bj}) 的形状 {block.shape} 与 {(row_sizes[bi], col_sizes[bj])} 不符",
                    en=f"Block ({bi}, {bj}) has shape {block.shape}, expected {(row_sizes[bi], col_sizes[bj])}"
                )
            for i, row in enumerate(block.entries):
                grid[row_offsets[bi] + i][col_offsets[bj]:col_offsets[bj] + len(row)] = row
        return cls.from_payloads(spec, grid, nrows, ncols)

    # --- 访问 | Access ---

    @property
    def shape(self) -> Tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, index: Tuple[int, int]) -> RingElement:
        i, j = index
        return RingElement(self.spec, self.entries[i][j])

    def row(self, i: int) -> List[RingElement]:
        return [RingElement(self.spec, v) for v in self.entries[i]]

    def col(self, j: int) -> List[RingElement]:
        return [RingElement(self.spec, row[j]) for row in self.entries]

    def column_matrix(self, j: int) -> "Matrix":
        return self.submatrix(range(self.nrows), [j])

    def to_lists(self) -> List[List[List[Any]]]:
        return [list(row) for row in self.entries]

    def to_strings(self) -> List[List[str]]:
        fmt = self.spec.arithmetic.format
        return [[fmt(v) for v in row] for row in self.entries]

    @property
    def is_zero(self) -> bool:
        arithmetic = self.spec.arithmetic
        return all(arithmetic.is_zero(v) for row in self.entries for v in row)

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    # --- 代数运算 | Algebra ---

    def _check_same_ring(self, other: "Matrix") -> None:
        if other.spec != self.spec:
            raise RingMismatchError(
                cn=f"矩阵属于不同的环: {self.spec} 与 {other.spec}",
                en=f"Matrices live over different rings: {self.spec} and {other.spec}"
            )

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check_same_ring(other)
        if self.ncols != other.nrows:
            raise DimensionError(
                cn=f"无法相乘: {self.nrows}×{self.ncols} 与 {other.nrows}×{other.ncols}",
                en=f"Cannot multiply {self.nrows}×{self.ncols} by {other.nrows}×{other.ncols}"
            )
        arithmetic = self.spec.arithmetic
        add, mul, zero = arithmetic.add, arithmetic.mul, arithmetic.zero
        columns = list(zip(*other.entries)) if other.nrows else [()] * other.ncols
        rows = []
        for row in self.entries:
            out = []
            for column in columns:
                total = zero
                for a, b in zip(row, column):
                    if a != zero and b != zero:
                        total = add(total, mul(a, b))
                out.append(total)
            rows.append(tuple(out))
        return Matrix(self.spec, self.nrows, other.ncols, tuple(rows))

    def _entrywise(self, other: "Matrix", op) -> "Matrix":
        self._check_same_ring(other)
        if self.shape != other.shape:
            raise DimensionError(
                cn=f"形状不同: {self.shape} 与 {other.shape}",
                en=f"Shapes differ: {self.shape} and {other.shape}"
            )
        rows = tuple(tuple(op(a, b) for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries))
        return Matrix(self.spec, self.nrows, self.ncols, rows)

    def __add__(self, other: "Matrix") -> "Matrix":
        return self._entrywise(other, self.spec.arithmetic.add)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self._entrywise(other, self.spec.arithmetic.sub)

    def __neg__(self) -> "Matrix":
        neg = self.spec.arithmetic.neg
        return Matrix(self.spec, self.nrows, self.ncols, tuple(tuple(neg(v) for v in row) for row in self.entries))

    def scale(self, c: Any) -> "Matrix":
        arithmetic = self.spec.arithmetic
        factor = c.payload if isinstance(c, RingElement) else arithmetic.coerce(c)
        return Matrix(self.spec, self.nrows, self.ncols,
                      tuple(tuple(arithmetic.mul(factor, v) for v in row) for row in self.entries))

    def transpose(self) -> "Matrix":
        rows = tuple(zip(*self.entries)) if self.nrows else tuple(() for _ in range(self.ncols))
        return Matrix(self.spec, self.ncols, self.nrows, tuple(tuple(r) for r in rows))

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> "Matrix":
        rows, cols = list(rows), list(cols)
        return Matrix(self.spec, len(rows), len(cols),
                      tuple(tuple(self.entries[i][j] for j in cols) for i in rows))

    def hstack(self, *others: "Matrix") -> "Matrix":
        result = self
        for other in others:
            result._check_same_ring(other)
            if other.nrows != result.nrows:
                raise DimensionError(
                    cn=f"水平拼接要求行数相同: {result.nrows} 与 {other.nrows}",
                    en=f"Horizontal stacking needs equal row counts: {result.nrows} and {other.nrows}"
                )
            rows = tuple(a + b for a, b in zip(result.entries, other.entries))
            result = Matrix(self.spec, result.nrows, result.ncols + other.ncols, rows)
        return result

    def vstack(self, *others: "Matrix") -> "Matrix":
        result = self
        for other in others:
            result._check_same_ring(other)
            if other.ncols != result.ncols:
                raise DimensionError(
                    cn=f"垂直拼接要求列数相同: {result.ncols} 与 {other.ncols}",
                    en=f"Vertical stacking needs equal column counts: {result.ncols} and {other.ncols}"
                )
            result = Matrix(self.spec, result.nrows + other.nrows, result.ncols, result.entries + other.entries)
        return result

    def direct_sum(self, *others: "Matrix") -> "Matrix":
        """分块对角 | Block diagonal"""
        result = self
        for other in others:
            top = result.hstack(Matrix.zeros(self.spec, result.nrows, other.ncols))
            bottom = Matrix.zeros(self.spec, other.nrows, result.ncols).hstack(other)
            result = top.vstack(bottom)
        return result

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker 积 | Kronecker product"""
        self._check_same_ring(other)
        mul = self.spec.arithmetic.mul
        rows = []
        for row in self.entries:
            for other_row in other.entries:
                rows.append(tuple(mul(a, b) for a in row for b in other_row))
        return Matrix(self.spec, self.nrows * other.nrows, self.ncols * other.ncols, tuple(rows))

    def determinant(self) -> RingElement:
        """
        用欧几里得行消元计算行列式（精确）

        Determinant by Euclidean row reduction (exact)

        Raises:
            DimensionError: 非方阵 | Not square
        """
        if not self.is_square:
            raise DimensionError(
                cn=f"行列式需要方阵，收到 {self.nrows}×{self.ncols}",
                en=f"Determinant needs a square matrix, got {self.nrows}×{self.ncols}"
            )
        arithmetic = self.spec.arithmetic
        a = [list(row) for row in self.entries]
        n = self.nrows
        sign = arithmetic.one
        for col in range(n):
            while True:
                nonzero = [i for i in range(col, n) if not arithmetic.is_zero(a[i][col])]
                if not nonzero:
                    return RingElement(self.spec, arithmetic.zero)
                pivot = min(nonzero, key=lambda i: (arithmetic.norm(a[i][col]), i))
                if pivot != col:
                    a[col], a[pivot] = a[pivot], a[col]
                    sign = arithmetic.neg(sign)
                done = True
                for i in range(col + 1, n):
                    if arithmetic.is_zero(a[i][col]):
                        continue
                    q, _ = arithmetic.divmod(a[i][col], a[col][col])
                    a[i] = [arithmetic.sub(x, arithmetic.mul(q, y)) for x, y in zip(a[i], a[col])]
                    if not arithmetic.is_zero(a[i][col]):
                        done = False
                if done:
                    break
        result = sign
        for i in range(n):
            result = arithmetic.mul(result, a[i][i])
        return RingElement(self.spec, result)

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(row) + "]" for row in self.to_strings()) + "]"
