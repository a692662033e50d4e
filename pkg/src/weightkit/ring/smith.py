"""
weightkit Smith 标准形与线性方程组

Smith normal form and linear systems over a Euclidean domain

所有更高层的计算（同调、Hom/Ext/Tor、模的标准形）最终都归结到这里。
Every higher computation (homology, Hom/Ext/Tor, module normal forms) reduces to this file.
"""

from dataclasses import dataclass
from typing import Hashable, List, Optional

from .matrix import Matrix
from .element import RingElement
from ..common.exceptions import DimensionError
from ..common.logging import get_logger

logger = get_logger("ring.smith")


@dataclass(frozen=True)
class SmithDecomposition:
    """
    Smith 分解 D = U·A·V

    U、V 为可逆方阵（行列式为单位），同时给出其逆矩阵；D 为矩形对角矩阵，
    前 r 个对角元非零、规范化且依次整除，其余为零。

    Smith decomposition D = U·A·V

    U and V are invertible square matrices (unit determinant) and come with
    their inverses; D is rectangular-diagonal, its first r diagonal entries
    are nonzero, canonical and divide each other in order, the rest are zero.
    """

    source: Matrix
    U: Matrix
    D: Matrix
    V: Matrix
    U_inv: Matrix
    V_inv: Matrix
    invariant_factors: List[RingElement]

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    def kernel_basis(self) -> Matrix:
        """ker A 的基（矩阵的列） | Basis of ker A (as matrix columns)"""
        return self.V.submatrix(range(self.V.nrows), range(self.rank, self.V.ncols))

    def image_basis(self) -> Matrix:
        """
        im A 的基：d_i · (U⁻¹ 的第 i 列)，i < r

        Basis of im A: d_i · (column i of U⁻¹) for i < r
        """
        columns = self.U_inv.submatrix(range(self.U_inv.nrows), range(self.rank))
        return columns @ Matrix.diagonal(self.source.spec, self.invariant_factors)

    def unit_count(self) -> int:
        """单位不变因子的个数 | Number of unit invariant factors"""
        return sum(1 for d in self.invariant_factors if d.is_unit)


class _SmithReducer:
    """
    [内部] 在载荷网格上执行初等变换并同时维护 U、U⁻¹、V、V⁻¹

    [Internal] Runs elementary operations on payload grids while keeping U, U⁻¹, V, V⁻¹ in step
    """

    def __init__(self, A: Matrix) -> None:
        self.spec = A.spec
        self.ar = A.spec.arithmetic
        self.m, self.n = A.nrows, A.ncols
        self.a = [list(row) for row in A.entries]
        zero, one = self.ar.zero, self.ar.one
        self.U = [[one if i == j else zero for j in range(self.m)] for i in range(self.m)]
        self.U_inv = [[one if i == j else zero for j in range(self.m)] for i in range(self.m)]
        self.V = [[one if i == j else zero for j in range(self.n)] for i in range(self.n)]
        self.V_inv = [[one if i == j else zero for j in range(self.n)] for i in range(self.n)]
        self.operations = 0

    # --- 行变换 | Row operations ---

    def swap_rows(self, i: int, j: int) -> None:
        if i == j:
            return
        for grid in (self.a, self.U):
            grid[i], grid[j] = grid[j], grid[i]
        for row in self.U_inv:
            row[i], row[j] = row[j], row[i]
        self.operations += 1

    def add_row(self, target: int, source: int, c: Hashable) -> None:
        """row_target += c · row_source"""
        ar = self.ar
        for grid in (self.a, self.U):
            grid[target] = [ar.add(x, ar.mul(c, y)) for x, y in zip(grid[target], grid[source])]
        # U⁻¹ ← U⁻¹ · (I − c·e_ts): col_source -= c · col_target
        for row in self.U_inv:
            row[source] = ar.sub(row[source], ar.mul(c, row[target]))
        self.operations += 1

    def scale_row(self, i: int, u: Hashable) -> None:
        ar = self.ar
        u_inv = ar.inverse(u)
        for grid in (self.a, self.U):
            grid[i] = [ar.mul(u, x) for x in grid[i]]
        for row in self.U_inv:
            row[i] = ar.mul(row[i], u_inv)

    # --- 列变换 | Column operations ---

    def swap_cols(self, i: int, j: int) -> None:
        if i == j:
            return
        for grid in (self.a, self.V):
            for row in grid:
                row[i], row[j] = row[j], row[i]
        self.V_inv[i], self.V_inv[j] = self.V_inv[j], self.V_inv[i]
        self.operations += 1

    def add_col(self, target: int, source: int, c: Hashable) -> None:
        """col_target += c · col_source"""
        ar = self.ar
        for grid in (self.a, self.V):
            for row in grid:
                row[target] = ar.add(row[target], ar.mul(c, row[source]))
        # V⁻¹ ← (I − c·e_st) · V⁻¹: row_source -= c · row_target
        self.V_inv[source] = [ar.sub(x, ar.mul(c, y)) for x, y in zip(self.V_inv[source], self.V_inv[target])]
        self.operations += 1

    # --- 主循环 | Main loop ---

    def _pick_pivot(self, t: int) -> Optional[tuple]:
        ar = self.ar
        best = None
        for i in range(t, self.m):
            for j in range(t, self.n):
                value = self.a[i][j]
                if ar.is_zero(value):
                    continue
                key = (ar.norm(value), i, j)
                if best is None or key < best:
                    best = key
        return best

    def _clear_cross(self, t: int) -> bool:
        """消去主元所在行列；若仍有非零余数返回 False | Clear the pivot row and column; False if remainders survive"""
        ar = self.ar
        pivot = self.a[t][t]
        clean = True
        for i in range(t + 1, self.m):
            if ar.is_zero(self.a[i][t]):
                continue
            q, _ = ar.divmod(self.a[i][t], pivot)
            if not ar.is_zero(q):
                self.add_row(i, t, ar.neg(q))
            if not ar.is_zero(self.a[i][t]):
                clean = False
        for j in range(t + 1, self.n):
            if ar.is_zero(self.a[t][j]):
                continue
            q, _ = ar.divmod(self.a[t][j], pivot)
            if not ar.is_zero(q):
                self.add_col(j, t, ar.neg(q))
            if not ar.is_zero(self.a[t][j]):
                clean = False
        return clean

    def _first_non_divisible(self, t: int) -> Optional[int]:
        ar = self.ar
        pivot = self.a[t][t]
        for i in range(t + 1, self.m):
            for j in range(t + 1, self.n):
                if not ar.divides(pivot, self.a[i][j]):
                    return i
        return None

    def run(self) -> int:
        ar = self.ar
        t = 0
        while t < min(self.m, self.n):
            while True:
                best = self._pick_pivot(t)
                if best is None:
                    return t
                _, i, j = best
                self.swap_rows(t, i)
                self.swap_cols(t, j)
                if not self._clear_cross(t):
                    continue
                row = self._first_non_divisible(t)
                if row is not None:
                    self.add_row(t, row, ar.one)
                    continue
                unit = ar.unit_part(self.a[t][t])
                if unit != ar.one:
                    self.scale_row(t, ar.inverse(unit))
                break
            t += 1
        return t

    def grid(self, rows: List[List[Hashable]], nrows: int, ncols: int) -> Matrix:
        return Matrix.from_payloads(self.spec, rows, nrows, ncols)


def smith_normal_form(A: Matrix) -> SmithDecomposition:
    """
    计算 Smith 标准形 D = U·A·V

    主元选取：最小欧几里得范数，相同时取最小 (行, 列)。对角元规范化为
    规范相伴元（非负 / 首一 / 1），因此 D 唯一。

    Compute the Smith normal form D = U·A·V

    Pivot rule: smallest Euclidean norm, ties broken by lowest (row, col).
    Diagonal entries are normalized to canonical associates (nonnegative /
    monic / one), which makes D unique.

    Args:
        A: 输入矩阵（可以为空） | Input matrix (may be empty)

    Returns:
        SmithDecomposition
    """
    reducer = _SmithReducer(A)
    rank = reducer.run()
    spec = A.spec
    D = reducer.grid(reducer.a, A.nrows, A.ncols)
    factors = [RingElement(spec, reducer.a[i][i]) for i in range(rank)]
    logger.debug(
        f"SNF: {A.nrows}×{A.ncols} 矩阵，秩 {rank}，{reducer.operations} 次初等变换",
        f"SNF: {A.nrows}×{A.ncols} matrix, rank {rank}, {reducer.operations} elementary operations"
    )
    return SmithDecomposition(
        source=A,
        U=reducer.grid(reducer.U, A.nrows, A.nrows),
        D=D,
        V=reducer.grid(reducer.V, A.ncols, A.ncols),
        U_inv=reducer.grid(reducer.U_inv, A.nrows, A.nrows),
        V_inv=reducer.grid(reducer.V_inv, A.ncols, A.ncols),
        invariant_factors=factors,
    )


@dataclass(frozen=True)
class LinearSolution:
    """
    A·X = B 的解：特解（若存在）与 ker A 的基

    Solution of A·X = B: a particular solution (if any) and a basis of ker A
    """

    solution: Optional[Matrix]
    kernel: Matrix

    @property
    def solvable(self) -> bool:
        return self.solution is not None

    @property
    def kernel_rank(self) -> int:
        return self.kernel.ncols


def linear_solve(A: Matrix, B: Matrix, decomposition: Optional[SmithDecomposition] = None) -> LinearSolution:
    """
    在环上求解 A·X = B（B 可以有多列）

    D·Y = U·B，X = V·Y：前 r 个分量需被 d_i 整除，其余行需为零；自由分量取零。
    无解不是错误状态，solution 为 None。

    Solve A·X = B over the ring (B may have several columns)

    D·Y = U·B with X = V·Y: the first r components must be divisible by d_i and
    the remaining rows must vanish; free components are set to zero. No
    solution is not an error state; solution is then None.

    Args:
        A: 系数矩阵 | Coefficient matrix
        B: 右端（列或多列） | Right-hand side (one or more columns)
        decomposition: 可复用的 A 的 Smith 分解 | Reusable Smith decomposition of A

    Raises:
        DimensionError: 行数不一致 | Row counts differ
    """
    if A.nrows != B.nrows:
        raise DimensionError(
            cn=f"线性方程组维数不符: A 有 {A.nrows} 行，右端有 {B.nrows} 行",
            en=f"Linear system dimensions differ: A has {A.nrows} rows, right-hand side has {B.nrows}"
        )
    snf = decomposition or smith_normal_form(A)
    ar = A.spec.arithmetic
    C = snf.U @ B
    r = snf.rank
    kernel = snf.kernel_basis()

    for i in range(r, A.nrows):
        if any(not ar.is_zero(v) for v in C.entries[i]):
            return LinearSolution(None, kernel)

    rows = []
    for i in range(A.ncols):
        if i < r:
            d = snf.invariant_factors[i].payload
            row = []
            for v in C.entries[i]:
                q, rem = ar.divmod(v, d)
                if not ar.is_zero(rem):
                    return LinearSolution(None, kernel)
                row.append(q)
            rows.append(row)
        else:
            rows.append([ar.zero] * B.ncols)
    Y = Matrix.from_payloads(A.spec, rows, A.ncols, B.ncols)
    return LinearSolution(snf.V @ Y, kernel)
