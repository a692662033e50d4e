"""
weightkit 极小化、同伦等价与权范围

Minimization, homotopy equivalence and weight range

极小化逐个消去微分中的单位元（高斯消元引理），同时累积两个链映射与同伦：
g∘f ≃ id_M（同伦 H），f∘g = id_{M'}（零同伦）。

Minimization eliminates unit entries of the differentials one at a time
(Gaussian elimination lemma) and accumulates two chain maps and homotopies:
g∘f ≃ id_M (homotopy H) and f∘g = id_{M'} (zero homotopy).
"""

from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from .complex import ChainComplex, ChainMap, Homotopy
from .operations import homology
from ..modules import is_isomorphic
from ..ring import Matrix, RingSpec, smith_normal_form
from ..common.exceptions import RingMismatchError, VerificationError
from ..common.logging import get_logger

logger = get_logger("complexes.minimal")


@dataclass(frozen=True)
class MinimalModel:
    """
    极小化结果与等价数据

    Minimization result together with the equivalence data
    """

    source: ChainComplex
    complex: ChainComplex
    forward: ChainMap
    backward: ChainMap
    source_homotopy: Homotopy
    target_homotopy: Homotopy
    eliminated: int

    def verify(self) -> bool:
        """逐项检查同伦恒等式 | Check the homotopy identities entrywise"""
        return self.source_homotopy.verify() and self.target_homotopy.verify()


class _Minimizer:
    """
    [内部] 在可变的分次矩阵上执行消元并累积 f、g、H

    [Internal] Runs eliminations on mutable graded matrices while accumulating f, g, H
    """

    def __init__(self, M: ChainComplex) -> None:
        self.spec: RingSpec = M.spec
        self.original = M
        self.low, self.high = M.low, M.high
        self.ranks: Dict[int, int] = {i: M.rank(i) for i in M.degrees()}
        self.diffs: Dict[int, Matrix] = {i: M.differential(i) for i in M.degrees()}
        # F_i: M^i → cur^i, G_i: cur^i → M^i, H_i: M^i → M^{i−1}
        self.F: Dict[int, Matrix] = {i: Matrix.identity(M.spec, M.rank(i)) for i in M.degrees()}
        self.G: Dict[int, Matrix] = {i: Matrix.identity(M.spec, M.rank(i)) for i in M.degrees()}
        self.H: Dict[int, Matrix] = {}
        self.eliminated = 0

    def rank(self, i: int) -> int:
        return self.ranks.get(i, 0)

    def d(self, i: int) -> Matrix:
        m = self.diffs.get(i)
        return m if m is not None else Matrix.zeros(self.spec, self.rank(i + 1), self.rank(i))

    def h_total(self, i: int) -> Matrix:
        m = self.H.get(i)
        return m if m is not None else Matrix.zeros(self.spec, self.original.rank(i - 1), self.original.rank(i))

    def _apply(self, i: int, f_i: Matrix, f_next: Matrix, g_i: Matrix, g_next: Matrix,
               h_next: Optional[Matrix], new_diffs: Dict[int, Matrix], new_ranks: Dict[int, int]) -> None:
        """
        合成一步 (f, g, h)，其中 f、g 只在次数 i 与 i+1 非平凡，h 只在 i+1 处

        Compose one step (f, g, h) where f and g are nontrivial only in
        degrees i and i+1 and h only in degree i+1
        """
        if h_next is not None:
            # H ← H + G ∘ h ∘ F
            self.H[i + 1] = self.h_total(i + 1) + self.G[i] @ h_next @ self.F[i + 1]
        self.F[i] = f_i @ self.F[i]
        self.F[i + 1] = f_next @ self.F[i + 1]
        self.G[i] = self.G[i] @ g_i
        self.G[i + 1] = self.G[i + 1] @ g_next
        self.ranks.update(new_ranks)
        self.diffs.update(new_diffs)

    def change_basis(self, i: int) -> None:
        """
        用 SNF 换基使 d_i 成为对角形：cur^i 用 V，cur^{i+1} 用 U

        Change bases with the SNF so that d_i becomes diagonal: V on cur^i, U on cur^{i+1}
        """
        snf = smith_normal_form(self.d(i))
        new_diffs = {
            i: snf.D,
            i - 1: snf.V_inv @ self.d(i - 1),
            i + 1: self.d(i + 1) @ snf.U_inv,
        }
        self._apply(i, snf.V_inv, snf.U, snf.V, snf.U_inv, None, new_diffs, {})

    def eliminate(self, i: int, r: int, c: int) -> None:
        """
        消去 d_i 在 (r, c) 处的单位 u

        Eliminate the unit u at position (r, c) of d_i
        """
        ar = self.spec.arithmetic
        d = self.d(i)
        n_i, n_next = self.rank(i), self.rank(i + 1)
        keep_cols = [j for j in range(n_i) if j != c]
        keep_rows = [j for j in range(n_next) if j != r]
        u_inv = ar.inverse(d.entries[r][c])
        delta = d.submatrix([r], keep_cols)
        gamma = d.submatrix(keep_rows, [c])
        epsilon = d.submatrix(keep_rows, keep_cols)
        gamma_u = gamma.scale(u_inv)

        previous, following = self.d(i - 1), self.d(i + 1)
        new_diffs = {
            i: epsilon - gamma_u @ delta,
            i - 1: previous.submatrix(keep_cols, range(previous.ncols)),
            i + 1: following.submatrix(range(following.nrows), keep_rows),
        }

        # f_i: 投影 | projection; f_{i+1} = [−γu⁻¹ | I]
        f_i = Matrix.identity(self.spec, n_i).submatrix(keep_cols, range(n_i))
        f_next = Matrix.identity(self.spec, n_next).submatrix(keep_rows, range(n_next))
        f_next = _replace_column(f_next, r, -gamma_u)
        # g_i = [−u⁻¹δ ; I]，g_{i+1}: 包含 | inclusion
        g_i = Matrix.identity(self.spec, n_i).submatrix(range(n_i), keep_cols)
        g_i = _replace_row(g_i, c, -delta.scale(u_inv))
        g_next = Matrix.identity(self.spec, n_next).submatrix(range(n_next), keep_rows)
        # h_{i+1}: cur^{i+1} → cur^i，唯一非零元 (c, r) = u⁻¹
        h_rows = [[ar.zero] * n_next for _ in range(n_i)]
        h_rows[c][r] = u_inv
        h_next = Matrix.from_payloads(self.spec, h_rows, n_i, n_next)

        self._apply(i, f_i, f_next, g_i, g_next, h_next, new_diffs, {i: n_i - 1, i + 1: n_next - 1})
        self.eliminated += 1

    def _unit_position(self, i: int) -> Optional[Tuple[int, int]]:
        ar = self.spec.arithmetic
        d = self.d(i)
        for r, row in enumerate(d.entries):
            for c, value in enumerate(row):
                if ar.is_unit(value):
                    return r, c
        return None

    def run(self) -> None:
        changed = True
        while changed:
            changed = False
            for i in range(self.low, self.high):
                while self.rank(i) and self.rank(i + 1):
                    position = self._unit_position(i)
                    if position is None:
                        if smith_normal_form(self.d(i)).unit_count() == 0:
                            break
                        self.change_basis(i)
                        position = self._unit_position(i)
                    self.eliminate(i, *position)
                    changed = True

    def result(self) -> MinimalModel:
        spec, M = self.spec, self.original
        minimal = ChainComplex.from_degrees(spec, self.ranks, {i: self.d(i) for i in range(self.low, self.high)})
        forward = ChainMap(M, minimal, {i: self.F[i] for i in M.degrees() if minimal.rank(i) or M.rank(i)})
        backward = ChainMap(minimal, M, {i: self.G[i] for i in M.degrees() if minimal.rank(i) or M.rank(i)})
        identity_m = ChainMap.identity(M)
        identity_min = ChainMap.identity(minimal)
        source_homotopy = Homotopy(identity_m, backward.compose(forward), dict(self.H))
        target_homotopy = Homotopy(identity_min, forward.compose(backward), {})
        return MinimalModel(M, minimal, forward, backward, source_homotopy, target_homotopy, self.eliminated)


def _replace_column(matrix: Matrix, j: int, column: Matrix) -> Matrix:
    rows = [list(row) for row in matrix.entries]
    for i in range(matrix.nrows):
        rows[i][j] = column.entries[i][0]
    return Matrix.from_payloads(matrix.spec, rows, matrix.nrows, matrix.ncols)


def _replace_row(matrix: Matrix, i: int, row: Matrix) -> Matrix:
    rows = [list(r) for r in matrix.entries]
    rows[i] = list(row.entries[0])
    return Matrix.from_payloads(matrix.spec, rows, matrix.nrows, matrix.ncols)


def minimize(M: ChainComplex, verify: bool = True) -> MinimalModel:
    """
    极小化：同伦等价于 M 且微分无单位不变因子的复形，连同等价数据

    Minimize: a complex homotopy equivalent to M whose differentials have no
    unit invariant factor, together with the equivalence data

    Args:
        M: 输入复形 | Input complex
        verify: 是否逐项检查返回的同伦 | Whether to check the returned homotopies entrywise

    Raises:
        VerificationError: 同伦恒等式不成立（内部错误） | A homotopy identity fails (internal error)
    """
    minimizer = _Minimizer(M)
    minimizer.run()
    model = minimizer.result()
    logger.debug(
        f"极小化: 总秩 {M.total_rank} → {model.complex.total_rank}，消去 {model.eliminated} 个单位主元",
        f"Minimize: total rank {M.total_rank} → {model.complex.total_rank}, {model.eliminated} unit pivots eliminated"
    )
    if verify and not model.verify():
        raise VerificationError(
            cn="极小化返回的同伦不满足 f − g = dh + hd",
            en="The homotopies returned by minimize do not satisfy f − g = dh + hd"
        )
    return model


def homotopy_equivalent(M: ChainComplex, N: ChainComplex) -> bool:
    """
    同伦等价判定：所有次数的同调同构

    在遗传的欧几里得整环上，有界自由复形同伦等价于其同调的平移自由分解之直和，
    因此同调决定同伦型。

    Homotopy equivalence test: homology is isomorphic in every degree

    Over a hereditary Euclidean domain a bounded complex of free modules is
    homotopy equivalent to the direct sum of shifted free resolutions of its
    homology, so homology determines the homotopy type.
    """
    if M.spec != N.spec:
        raise RingMismatchError(cn="两个复形属于不同的环", en="The two complexes live over different rings")
    degrees = set(M.degrees()) | set(N.degrees())
    return all(is_isomorphic(homology(M, i), homology(N, i)) for i in sorted(degrees))


def weight_range(M: ChainComplex) -> Optional[Tuple[int, int]]:
    """
    权范围：极小形支撑 [a, b] 给出 (−b, −a)；零对象返回 None

    Weight range: the minimal form supported in [a, b] gives (−b, −a); None for the zero object
    """
    support = minimize(M, verify=False).complex.support
    if support is None:
        return None
    a, b = support
    return -b, -a
