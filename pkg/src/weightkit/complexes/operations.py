"""
weightkit 复形运算：同调、平移、锥、截断、Hom 复形

Complex operations: homology, shift, cone, truncations, Hom complex

约定 | Conventions
- (M[1])^i = M^{i+1}，微分取 −d | differential −d
- cone(f)^i = T^i ⊕ S^{i+1}，d = [[d_T, f], [0, −d_S]]
- 权截断：L 为次数 ≥ −n 的子复形，R 为次数 ≤ −n−1 的商复形
  weight truncation: L is the subcomplex in degrees ≥ −n, R the quotient in degrees ≤ −n−1
- Homⁿ(X, Y) = ⊕ Hom(Xⁱ, Y^{i+n})，D(φ) = d_Y∘φ − (−1)ⁿ φ∘d_X
"""

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .complex import ChainComplex, ChainMap
from ..modules import FpModule
from ..ring import Matrix, RingElement, linear_solve, smith_normal_form
from ..common.exceptions import RingMismatchError
from ..common.logging import get_logger

logger = get_logger("complexes.operations")


def homology(M: ChainComplex, i: int) -> FpModule:
    """
    H^i = ker d_i / im d_{i−1}

    核在主理想整环上是自由的；表现为 im d_{i−1} 在核基下的原像矩阵。

    The kernel is free over a PID; the presentation is the preimage matrix of
    im d_{i−1} in the kernel basis.
    """
    if M.rank(i) == 0:
        return FpModule.zero(M.spec)
    kernel = smith_normal_form(M.differential(i)).kernel_basis()
    incoming = M.differential(i - 1)
    coordinates = linear_solve(kernel, incoming).solution
    return FpModule.from_relation_map(coordinates)


def homology_profile(M: ChainComplex) -> Dict[int, FpModule]:
    """所有非零同调 | Every nonzero homology module"""
    profile = {}
    for i in M.degrees():
        H = homology(M, i)
        if not H.is_zero:
            profile[i] = H
    return profile


def shift(M: ChainComplex, k: int = 1) -> ChainComplex:
    """M[k]：(M[k])^i = M^{i+k}，微分乘 (−1)^k | differential times (−1)^k"""
    if M.is_zero:
        return M
    sign = -1 if k % 2 else 1
    return ChainComplex(M.spec, M.low - k, M.ranks, tuple(d.scale(sign) for d in M.differentials))


def direct_sum(*complexes: ChainComplex) -> ChainComplex:
    spec = complexes[0].spec
    nonzero = [c for c in complexes if not c.is_zero]
    if not nonzero:
        return ChainComplex.zero(spec)
    low = min(c.low for c in nonzero)
    high = max(c.high for c in nonzero)
    ranks = {i: sum(c.rank(i) for c in nonzero) for i in range(low, high + 1)}
    diffs = {}
    for i in range(low, high):
        d = nonzero[0].differential(i)
        for c in nonzero[1:]:
            d = d.direct_sum(c.differential(i))
        diffs[i] = d
    return ChainComplex.from_degrees(spec, ranks, diffs)


def cone(f: ChainMap) -> ChainComplex:
    """
    映射锥 cone(f)^i = T^i ⊕ S^{i+1}，d = [[d_T, f_{i+1}], [0, −d_S]]

    Mapping cone cone(f)^i = T^i ⊕ S^{i+1} with d = [[d_T, f_{i+1}], [0, −d_S]]
    """
    S, T = f.source, f.target
    spec = S.spec
    if S.spec != T.spec:
        raise RingMismatchError(cn="链映射的源与目标属于不同的环", en="Chain map source and target live over different rings")
    if S.is_zero and T.is_zero:
        return ChainComplex.zero(spec)
    lows = [c.low for c in (S, T) if not c.is_zero]
    highs = [c.high for c in (S, T) if not c.is_zero]
    low, high = min(lows) - 1, max(highs)
    ranks = {i: T.rank(i) + S.rank(i + 1) for i in range(low, high + 1)}
    diffs = {}
    for i in range(low, high):
        diffs[i] = Matrix.from_blocks(
            spec,
            [T.rank(i + 1), S.rank(i + 2)],
            [T.rank(i), S.rank(i + 1)],
            {
                (0, 0): T.differential(i),
                (0, 1): f.component(i + 1),
                (1, 1): -S.differential(i + 1),
            },
        )
    return ChainComplex.from_degrees(spec, ranks, diffs)


# =========================================================================
# 截断 | Truncations
# =========================================================================

@dataclass(frozen=True)
class Truncation:
    """
    截断三角 lower → M → upper 的数据

    Data of a truncation triangle lower → M → upper
    """

    lower: ChainComplex
    upper: ChainComplex
    inclusion: ChainMap
    projection: ChainMap


def weight_truncate(M: ChainComplex, n: int) -> Truncation:
    """
    粗暴截断给出的权分解

    L = 次数 ≥ −n 的子复形（L ∈ C_{w≤n}），R = 次数 ≤ −n−1 的商复形（R ∈ C_{w≥n+1}）。
    L → M → R 逐次分裂正合，故给出所需的三角。

    Weight decomposition by brutal truncation

    L = the subcomplex in degrees ≥ −n (L ∈ C_{w≤n}), R = the quotient in
    degrees ≤ −n−1 (R ∈ C_{w≥n+1}). L → M → R is degreewise split exact and
    yields the required triangle.
    """
    cut = -n
    spec = M.spec
    upper_degrees = [i for i in M.degrees() if i >= cut]
    lower_degrees = [i for i in M.degrees() if i < cut]
    L = ChainComplex.from_degrees(
        spec,
        {i: M.rank(i) for i in upper_degrees},
        {i: M.differential(i) for i in upper_degrees},
    )
    R = ChainComplex.from_degrees(
        spec,
        {i: M.rank(i) for i in lower_degrees},
        {i: M.differential(i) for i in lower_degrees if i + 1 < cut},
    )
    inclusion = ChainMap(L, M, {i: Matrix.identity(spec, M.rank(i)) for i in upper_degrees}, check=False)
    projection = ChainMap(M, R, {i: Matrix.identity(spec, M.rank(i)) for i in lower_degrees}, check=False)
    return Truncation(L, R, inclusion, projection)


def t_truncate(M: ChainComplex, n: int) -> Truncation:
    """
    典范 t-结构的软截断（同调约定），切点 c = −n

    lower: 次数 < c 的项，以及次数 c 处 d_c 的自由核；同调只在次数 ≤ c。
    upper: 次数 c 处为 d_c 的自由像（基 B），之后为原来的项；同调只在次数 ≥ c+1。
    投影在次数 c 处为 π，满足 B·π = d_c。两者逐次分裂正合。

    Soft truncation for the canonical t-structure (homological convention), cut c = −n

    lower: the terms below c and the free kernel of d_c in degree c; homology
    only in degrees ≤ c. upper: the free image of d_c (basis B) in degree c
    followed by the original terms; homology only in degrees ≥ c+1. The
    projection in degree c is π with B·π = d_c. The pair is degreewise split exact.
    """
    c = -n
    spec = M.spec
    if M.is_zero:
        zero = ChainComplex.zero(spec)
        return Truncation(zero, zero, ChainMap.zero(zero, M), ChainMap.zero(M, zero))

    d_c = M.differential(c)
    snf = smith_normal_form(d_c)
    kernel = snf.kernel_basis()
    image = snf.image_basis()

    lower_ranks = {i: M.rank(i) for i in M.degrees() if i < c}
    lower_ranks[c] = kernel.ncols
    lower_diffs = {i: M.differential(i) for i in M.degrees() if i < c - 1}
    lower_diffs[c - 1] = linear_solve(kernel, M.differential(c - 1)).solution
    lower = ChainComplex.from_degrees(spec, lower_ranks, lower_diffs)

    upper_ranks = {i: M.rank(i) for i in M.degrees() if i > c}
    upper_ranks[c] = image.ncols
    upper_diffs = {i: M.differential(i) for i in M.degrees() if i > c}
    upper_diffs[c] = image
    upper = ChainComplex.from_degrees(spec, upper_ranks, upper_diffs)
    pi = linear_solve(image, d_c).solution

    include = {i: Matrix.identity(spec, M.rank(i)) for i in M.degrees() if i < c}
    if lower.rank(c):
        include[c] = kernel
    project = {i: Matrix.identity(spec, M.rank(i)) for i in M.degrees() if i > c}
    if upper.rank(c):
        project[c] = pi
    logger.debug(
        f"t-截断于次数 {c}: 核秩 {kernel.ncols}，像秩 {image.ncols}",
        f"t-truncation at degree {c}: kernel rank {kernel.ncols}, image rank {image.ncols}"
    )
    return Truncation(lower, upper, ChainMap(lower, M, include), ChainMap(M, upper, project))


# =========================================================================
# Hom 复形 | Hom complex
# =========================================================================

def _hom_blocks(X: ChainComplex, Y: ChainComplex, n: int) -> List[Tuple[int, int]]:
    """Homⁿ(X, Y) 的块 (i, 大小) | Blocks (i, size) of Homⁿ(X, Y)"""
    return [(i, Y.rank(i + n) * X.rank(i)) for i in X.degrees()]


def hom_complex(X: ChainComplex, Y: ChainComplex) -> ChainComplex:
    """
    全 Hom 复形：φ_i 按列展开，D(φ)_i = d_Y φ_i − (−1)ⁿ φ_{i+1} d_X

    Total Hom complex with φ_i vectorized column-major and
    D(φ)_i = d_Y φ_i − (−1)ⁿ φ_{i+1} d_X
    """
    spec = X.spec
    if X.spec != Y.spec:
        raise RingMismatchError(cn="Hom 复形的两端属于不同的环", en="The two sides of the Hom complex live over different rings")
    if X.is_zero or Y.is_zero:
        return ChainComplex.zero(spec)
    low, high = Y.low - X.high, Y.high - X.low
    ranks = {n: sum(size for _, size in _hom_blocks(X, Y, n)) for n in range(low, high + 1)}
    diffs = {}
    for n in range(low, high):
        source_blocks = _hom_blocks(X, Y, n)
        target_blocks = _hom_blocks(X, Y, n + 1)
        position = {i: k for k, (i, _) in enumerate(source_blocks)}
        blocks = {}
        sign = -1 if n % 2 == 0 else 1
        for k, (i, _) in enumerate(target_blocks):
            # φ_i ↦ d_Y φ_i
            blocks[(k, position[i])] = Matrix.identity(spec, X.rank(i)).kron(Y.differential(i + n))
            # φ_{i+1} ↦ −(−1)ⁿ φ_{i+1} d_X
            if i + 1 in position:
                blocks[(k, position[i + 1])] = (
                    X.differential(i).transpose().kron(Matrix.identity(spec, Y.rank(i + n + 1))).scale(sign)
                )
        diffs[n] = Matrix.from_blocks(
            spec, [size for _, size in target_blocks], [size for _, size in source_blocks], blocks
        )
    return ChainComplex.from_degrees(spec, ranks, diffs)


def hom_upto_homotopy(X: ChainComplex, Y: ChainComplex) -> FpModule:
    """
    Hom_K(X, Y) = H⁰ of the total Hom complex（链映射模同伦 | chain maps modulo homotopy）
    """
    return homology(hom_complex(X, Y), 0)


# =========================================================================
# 构造 | Constructions
# =========================================================================

def placed_resolution(M: FpModule, degree: int = 0) -> ChainComplex:
    """
    M 的长度为 1 的极小自由分解，余核位于给定次数

    The minimal length-1 free resolution of M with its cokernel in the given degree

    R^t --diag(d_1..d_t)--> R^{t+f}，位于次数 {degree−1, degree}
    """
    nf = M.normal_form
    t, f = nf.torsion_count, nf.free_rank
    matrix = Matrix.diagonal(M.spec, list(nf.invariant_factors), nrows=t + f, ncols=t)
    return ChainComplex.build(M.spec, degree - 1, [t, t + f], [matrix])


@dataclass(frozen=True)
class TwoTermInvariants:
    """
    两项复形 [A --f--> B] 同伦类的完全不变量

    Complete invariants of the homotopy class of a two-term complex [A --f--> B]
    """

    factors: Tuple[RingElement, ...]
    cokernel_free_rank: int
    kernel_rank: int


def two_term_invariants(f: Matrix) -> TwoTermInvariants:
    """
    (f 的非单位非零不变因子, 余核自由秩, 核秩)

    (non-unit nonzero invariant factors of f, cokernel free rank, kernel rank)
    """
    snf = smith_normal_form(f)
    return TwoTermInvariants(
        factors=tuple(d for d in snf.invariant_factors if not d.is_unit),
        cokernel_free_rank=f.nrows - snf.rank,
        kernel_rank=f.ncols - snf.rank,
    )
