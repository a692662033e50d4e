"""
weightkit Hom、Ext¹、Tor₁ 与投射维数

Hom, Ext¹, Tor₁ and projective dimension

两条独立的计算路径：
- 表格路径：在标准形上按循环直和项相加，Hom(R/d, R/e) = R/gcd(d,e) 等；
- 表现路径：直接由表现 R^a → R^b → M → 0 构造核与余核。
测试对两条路径交叉验证。

Two independent paths:
- table path: additive over the cyclic summands of the normal forms,
  Hom(R/d, R/e) = R/gcd(d,e) and so on;
- presentation path: kernels and cokernels built straight from the
  presentation R^a → R^b → M → 0.
The tests cross-check the two.
"""

from enum import IntEnum
from typing import Any, List, Tuple

from .fpmodule import FpModule
from .hom import ModuleHom
from ..ring import Matrix, smith_normal_form
from ..common.exceptions import RingMismatchError


class ProjectiveDimension(IntEnum):
    """
    投射维数；零模记为 MINUS_INFINITY，使 "pd ≤ j" 的判定保持单调

    Projective dimension; the zero module gets MINUS_INFINITY so that
    "pd ≤ j" tests stay monotone
    """
    MINUS_INFINITY = -1
    ZERO = 0
    ONE = 1

    def __str__(self) -> str:
        return "-inf" if self is ProjectiveDimension.MINUS_INFINITY else str(int(self))


def _check_same_ring(M: FpModule, N: FpModule) -> None:
    if M.spec != N.spec:
        raise RingMismatchError(
            cn=f"模属于不同的环: {M.spec} 与 {N.spec}",
            en=f"Modules live over different rings: {M.spec} and {N.spec}"
        )


def _summands(M: FpModule) -> List[Any]:
    """循环直和项的阶，0 表示自由 | Orders of the cyclic summands, 0 for free"""
    nf = M.normal_form
    return [d.payload for d in nf.invariant_factors] + [M.spec.arithmetic.zero] * nf.free_rank


# =========================================================================
# 表格路径 | Table path
# =========================================================================

def hom_module(M: FpModule, N: FpModule) -> FpModule:
    """
    Hom_R(M, N)，按循环直和项计算

    Hom(R/d, R/e) = R/gcd(d,e)，Hom(R/d, R) = 0，Hom(R, X) = X。

    Hom_R(M, N) from the cyclic summands

    Hom(R/d, R/e) = R/gcd(d,e), Hom(R/d, R) = 0, Hom(R, X) = X.
    """
    _check_same_ring(M, N)
    ar = M.spec.arithmetic
    orders = []
    for d in _summands(M):
        for e in _summands(N):
            if ar.is_zero(d):
                orders.append(e)
            elif not ar.is_zero(e):
                orders.append(ar.gcd(d, e))
    return FpModule.from_cyclic_orders(M.spec, orders)


def ext1(M: FpModule, N: FpModule) -> FpModule:
    """
    Ext¹_R(M, N)：Ext¹(R/d, R/e) = R/gcd(d,e)，Ext¹(R/d, R) = R/d，Ext¹(R, −) = 0

    Ext¹_R(M, N): Ext¹(R/d, R/e) = R/gcd(d,e), Ext¹(R/d, R) = R/d, Ext¹(R, −) = 0
    """
    _check_same_ring(M, N)
    ar = M.spec.arithmetic
    orders = []
    for d in _summands(M):
        if ar.is_zero(d):
            continue
        for e in _summands(N):
            orders.append(d if ar.is_zero(e) else ar.gcd(d, e))
    return FpModule.from_cyclic_orders(M.spec, orders)


def tor1(M: FpModule, N: FpModule) -> FpModule:
    """
    Tor₁(M, N)：Tor₁(R/d, R/e) = R/gcd(d,e)，有自由因子时为 0

    Tor₁(M, N): Tor₁(R/d, R/e) = R/gcd(d,e), zero as soon as one side is free
    """
    _check_same_ring(M, N)
    ar = M.spec.arithmetic
    orders = []
    for d in _summands(M):
        for e in _summands(N):
            if not ar.is_zero(d) and not ar.is_zero(e):
                orders.append(ar.gcd(d, e))
    return FpModule.from_cyclic_orders(M.spec, orders)


def projective_dimension(M: FpModule) -> ProjectiveDimension:
    if M.is_zero:
        return ProjectiveDimension.MINUS_INFINITY
    return ProjectiveDimension.ZERO if M.is_free else ProjectiveDimension.ONE


# =========================================================================
# 表现路径 | Presentation path
# =========================================================================

def precomposition_map(A: Matrix, N: FpModule) -> ModuleHom:
    """
    φ ↦ φ·A，作为 N^b → N^a 的同态（按列展开，矩阵 Aᵀ ⊗ I_n）

    φ ↦ φ·A as a homomorphism N^b → N^a (column-major, matrix Aᵀ ⊗ I_n)
    """
    source = N.power(A.nrows)
    target = N.power(A.ncols)
    return ModuleHom(source, target, A.transpose().kron(Matrix.identity(N.spec, N.generators)), check=False)


def _injective_relations(M: FpModule) -> Matrix:
    """im A 的一组基 A′，给出长度为 1 的自由分解 | Basis A′ of im A, the length-1 free resolution"""
    return smith_normal_form(M.relation_map).image_basis()


def hom_presentation(M: FpModule, N: FpModule) -> Tuple[FpModule, ModuleHom]:
    """
    Hom(M, N) = ker(N^b → N^a)，连同到 N^b 的包含映射

    Hom(M, N) = ker(N^b → N^a) together with its inclusion into N^b
    """
    _check_same_ring(M, N)
    return precomposition_map(M.relation_map, N).kernel()


def ext1_presentation(M: FpModule, N: FpModule) -> FpModule:
    """Ext¹(M, N) = coker(N^b → N^r)"""
    _check_same_ring(M, N)
    return precomposition_map(_injective_relations(M), N).cokernel()[0]


def tor1_presentation(M: FpModule, N: FpModule) -> FpModule:
    """Tor₁(M, N) = ker(N^r → N^b)，矩阵 A′ ⊗ I_n | matrix A′ ⊗ I_n"""
    _check_same_ring(M, N)
    relations = _injective_relations(M)
    source = N.power(relations.ncols)
    target = N.power(relations.nrows)
    tensor = ModuleHom(source, target, relations.kron(Matrix.identity(N.spec, N.generators)), check=False)
    return tensor.kernel()[0]


def hom_induced(Q: FpModule, h: ModuleHom) -> ModuleHom:
    """
    Hom(Q, h): Hom(Q, X) → Hom(Q, Y)

    在 X^b 上以 I_b ⊗ H 作用，再沿 Hom(Q, Y) ⊂ Y^b 的包含映射提升。
    Acts by I_b ⊗ H on X^b, then lifts through the inclusion Hom(Q, Y) ⊂ Y^b.
    """
    hom_x, include_x = hom_presentation(Q, h.source)
    hom_y, include_y = hom_presentation(Q, h.target)
    spread = Matrix.identity(Q.spec, Q.generators).kron(h.matrix)
    pushed = ModuleHom(hom_x, include_y.target, spread @ include_x.matrix, check=False)
    lifted = pushed.lift_through(include_y)
    # φ 的像满足 φ∘A = 0，因此总能提升
    assert lifted is not None
    return lifted
