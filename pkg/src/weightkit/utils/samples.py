"""
weightkit 确定性样本生成器

Deterministic sample generators

所有随机样本都来自以种子初始化的 random.Random，相同种子给出相同样本；
穷举族按固定顺序产生。

Every random sample comes from a seeded random.Random, so equal seeds give
equal samples; exhaustive families are produced in a fixed order.
"""

import itertools
import random
from typing import Iterator, List, Optional, Sequence, Tuple

from ..complexes import ChainComplex, placed_resolution
from ..modules import FpModule, ModuleHom, ShortExactSequence
from ..ring import Matrix, RingElement, RingSpec


def divisor_chains(values: Sequence[int], max_length: int) -> Iterator[Tuple[int, ...]]:
    """
    取自 values 的整除链 d_1 | d_2 | …，长度不超过 max_length（含空链）

    Divisibility chains d_1 | d_2 | … drawn from values, at most max_length long (the empty chain included)
    """
    yield ()
    frontier: List[Tuple[int, ...]] = [()]
    for _ in range(max_length):
        grown = []
        for chain in frontier:
            for v in values:
                if not chain or v % chain[-1] == 0:
                    grown.append(chain + (v,))
        yield from grown
        frontier = grown


def abelian_groups(max_factor: int = 16, max_free: int = 2, max_torsion: int = 2) -> Iterator[FpModule]:
    """
    不变因子取自 {2, …, max_factor}、自由秩 ≤ max_free 的有限表现阿贝尔群

    Finitely presented abelian groups with invariant factors in
    {2, …, max_factor} and free rank ≤ max_free
    """
    spec = RingSpec.integers()
    for chain in divisor_chains(range(2, max_factor + 1), max_torsion):
        for free in range(max_free + 1):
            yield FpModule.from_cyclic_orders(spec, list(chain) + [0] * free)


def two_term_matrices(spec: RingSpec, max_rank: int = 2, bound: int = 4) -> Iterator[Matrix]:
    """
    行列数 ≤ max_rank、条目绝对值 ≤ bound 的全部矩阵

    Every matrix with at most max_rank rows and columns and entries bounded by bound
    """
    values = range(-bound, bound + 1)
    for nrows in range(1, max_rank + 1):
        for ncols in range(1, max_rank + 1):
            for entries in itertools.product(values, repeat=nrows * ncols):
                rows = [entries[i * ncols:(i + 1) * ncols] for i in range(nrows)]
                yield Matrix.from_rows(spec, rows)


def nonsingular_matrices(spec: RingSpec, max_rank: int = 2, bound: int = 4) -> Iterator[Matrix]:
    """两端规模相同、行列式非零的方阵 | Square matrices with nonzero determinant"""
    for matrix in two_term_matrices(spec, max_rank, bound):
        if matrix.is_square and not matrix.determinant().is_zero:
            yield matrix


class SampleGenerator:
    """
    以种子初始化的随机样本生成器

    Seeded random sample generator
    """

    def __init__(self, spec: RingSpec, seed: int = 0, bound: int = 4) -> None:
        self.spec = spec
        self.seed = seed
        self.bound = bound
        self.rng = random.Random(seed)

    def element(self, nonzero: bool = False) -> RingElement:
        ar = self.spec.arithmetic
        while True:
            value = ar.random(self.rng, self.bound)
            if not nonzero or not ar.is_zero(value):
                return self.spec.element(value)

    def matrix(self, nrows: int, ncols: int) -> Matrix:
        ar = self.spec.arithmetic
        rows = [[ar.random(self.rng, self.bound) for _ in range(ncols)] for _ in range(nrows)]
        return Matrix.from_payloads(self.spec, rows, nrows, ncols)

    def unimodular(self, n: int, steps: Optional[int] = None) -> Tuple[Matrix, Matrix]:
        """
        随机可逆矩阵 P 及其逆：若干初等行变换的乘积

        Random invertible matrix P with its inverse: a product of elementary row operations
        """
        ar = self.spec.arithmetic
        P = [[ar.one if i == j else ar.zero for j in range(n)] for i in range(n)]
        P_inv = [[ar.one if i == j else ar.zero for j in range(n)] for i in range(n)]
        for _ in range(steps if steps is not None else 2 * n):
            if n < 2:
                break
            i, j = self.rng.sample(range(n), 2)
            c = ar.random(self.rng, 2)
            # P ← E·P，E = I + c·e_ij；P⁻¹ ← P⁻¹·E⁻¹
            P[i] = [ar.add(x, ar.mul(c, y)) for x, y in zip(P[i], P[j])]
            for row in P_inv:
                row[j] = ar.sub(row[j], ar.mul(c, row[i]))
        return Matrix.from_payloads(self.spec, P, n, n), Matrix.from_payloads(self.spec, P_inv, n, n)

    def module(self, max_generators: int = 3, max_relations: int = 3) -> FpModule:
        b = self.rng.randint(0, max_generators)
        a = self.rng.randint(0, max_relations)
        return FpModule(self.spec, b, self.matrix(a, b))

    def cyclic_module(self, max_summands: int = 3, free: bool = True) -> FpModule:
        """小阶循环直和 | Direct sum of cyclic modules of small order"""
        orders = []
        for _ in range(self.rng.randint(0, max_summands)):
            d = self.element(nonzero=not free)
            orders.append(d.payload)
        return FpModule.from_cyclic_orders(self.spec, orders)

    def complex(self, max_length: int = 4, max_rank: int = 2, low: Optional[int] = None) -> ChainComplex:
        """
        有界自由复形：初等两项块 [R --a--> R] 与单项 R 的直和，再在每个次数上随机换基

        Bounded free complex: a direct sum of elementary blocks [R --a--> R]
        and single terms R, followed by a random change of basis in every degree
        """
        length = self.rng.randint(1, max_length)
        start = self.rng.randint(-2, 1) if low is None else low
        ranks = {i: 0 for i in range(start, start + length)}
        entries: List[Tuple[int, int, int]] = []
        for i in range(start, start + length):
            for _ in range(self.rng.randint(0, max_rank)):
                if i + 1 < start + length and self.rng.random() < 0.5:
                    entries.append((i, ranks[i], ranks[i + 1]))
                    ranks[i] += 1
                    ranks[i + 1] += 1
                else:
                    ranks[i] += 1
        ar = self.spec.arithmetic
        diffs = {}
        for i in range(start, start + length - 1):
            rows = [[ar.zero] * ranks[i] for _ in range(ranks[i + 1])]
            for degree, column, row in entries:
                if degree == i:
                    rows[row][column] = self.element(nonzero=True).payload
            diffs[i] = Matrix.from_payloads(self.spec, rows, ranks[i + 1], ranks[i])
        bases = {i: self.unimodular(ranks[i]) for i in ranks}
        changed = {i: bases[i + 1][0] @ d @ bases[i][1] for i, d in diffs.items()}
        return ChainComplex.from_degrees(self.spec, ranks, changed)

    def resolution(self, M: FpModule, degree: int = 0) -> ChainComplex:
        return placed_resolution(M, degree)


def heart_sequences(spec: RingSpec, gens: Sequence[RingElement], count: int, seed: int = 0,
                    max_power: int = 3) -> List[ShortExactSequence]:
    """
    心中的短正合列样本：R/q^a → R/q^{a+b} → R/q^b（q 为生成元的 gcd）及其分裂版本

    Sample short exact sequences of the heart: R/q^a → R/q^{a+b} → R/q^b
    (q the gcd of the generators) and split ones

    q 的每个素因子整除每个生成元，因此三项都是所有 s_j 上的反模；q 为单位时只给出零模的分裂序列。
    Every prime of q divides every generator, so all three terms are
    s_j-contramodules for every j; a unit q only gives split sequences of zero modules.
    """
    rng = random.Random(seed)
    q = spec.zero()
    for s in gens:
        q = q.gcd(s)
    sequences: List[ShortExactSequence] = []
    zero = FpModule.zero(spec)
    if q.is_zero or q.is_unit:
        return [ShortExactSequence.split(zero, zero) for _ in range(count)]
    for index in range(count):
        a, b = rng.randint(1, max_power), rng.randint(1, max_power)
        if index % 3 == 2:
            A = FpModule.cyclic(spec, q ** a)
            C = FpModule.cyclic(spec, q ** b)
            sequences.append(ShortExactSequence.split(A, C))
            continue
        A = FpModule.cyclic(spec, q ** a)
        B = FpModule.cyclic(spec, q ** (a + b))
        C = FpModule.cyclic(spec, q ** b)
        inclusion = ModuleHom(A, B, Matrix.from_rows(spec, [[q ** b]]))
        projection = ModuleHom(B, C, Matrix.identity(spec, 1))
        sequences.append(ShortExactSequence(inclusion, projection))
    return sequences
