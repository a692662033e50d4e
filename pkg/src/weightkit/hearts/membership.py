"""
weightkit 心的成员判定与局部复形

Heart membership and local complexes

两条独立的判定路径：
- heart_membership：对每个 σ: R^a → R^b，预复合 N^b → N^a（φ ↦ φ∘σ）是双射；
  望远镜规格交给 I-反模判定；
- heart_membership_via_cone：对 U = cone(σ)，Hom_D(U, N) 与 Hom_D(U[−1], N)
  都为零，经由 U 的同调上的 Hom 与 Ext¹ 计算。

Two independent paths:
- heart_membership: for every σ: R^a → R^b the precomposition N^b → N^a
  (φ ↦ φ∘σ) is bijective; telescope specs go to the I-contramodule test;
- heart_membership_via_cone: for U = cone(σ) both Hom_D(U, N) and
  Hom_D(U[−1], N) vanish, computed from Hom and Ext¹ on the homology of U.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from .spec import LocalizationSpec, MatrixFamily, Telescope
from ..complexes import ChainComplex, ChainMap, cone, homology
from ..contra import IdealCertificate, is_ideal_contramodule
from ..modules import (
    BijectivityCertificate,
    FpModule,
    ext1,
    hom_map_bijective,
    hom_module,
    precomposition_map,
)
from ..ring import Matrix
from ..common.exceptions import PreconditionError, RingMismatchError
from ..common.logging import get_logger

logger = get_logger("hearts.membership")


@dataclass(frozen=True)
class HeartCertificate:
    """
    心成员判定的证书

    矩阵族：每个 σ 的双射证书，failing 为第一个失败的 σ 的下标；
    望远镜：I-反模证书。

    Certificate of a heart-membership verdict

    Matrix family: one bijectivity certificate per σ, failing is the index of
    the first σ that fails; telescope: the I-contramodule certificate.
    """

    verdict: bool
    variant: str
    failing: Optional[int] = None
    bijectivity: Tuple[BijectivityCertificate, ...] = ()
    contra: Optional[IdealCertificate] = None

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"verdict": self.verdict, "variant": self.variant}
        if self.failing is not None:
            data["failing"] = self.failing
        if self.bijectivity:
            data["bijectivity"] = [c.to_dict() for c in self.bijectivity]
        if self.contra is not None:
            data["contra"] = self.contra.to_dict()
        return data


def _check_ring(N: FpModule, spec: LocalizationSpec) -> None:
    if N.spec != spec.spec:
        raise RingMismatchError(
            cn=f"模属于 {N.spec}，局部化规格属于 {spec.spec}",
            en=f"The module lives over {N.spec}, the localization spec over {spec.spec}"
        )


def _matrix_membership(N: FpModule, family: MatrixFamily) -> HeartCertificate:
    certificates: List[BijectivityCertificate] = []
    for index, sigma in enumerate(family.mats):
        certificate = hom_map_bijective(precomposition_map(sigma, N))
        certificates.append(certificate)
        if not certificate.bijective:
            return HeartCertificate(False, family.variant, failing=index, bijectivity=tuple(certificates))
    return HeartCertificate(True, family.variant, bijectivity=tuple(certificates))


def _telescope_membership(N: FpModule, spec: Telescope) -> HeartCertificate:
    certificate = is_ideal_contramodule(N, spec.gens)
    return HeartCertificate(certificate.verdict, spec.variant, failing=certificate.failing, contra=certificate)


def heart_membership(N: FpModule, spec: LocalizationSpec) -> HeartCertificate:
    """
    判断 N 是否属于局部化规格决定的心

    Decide whether N belongs to the heart determined by the localization spec

    Args:
        N: 有限表现模 | Finitely presented module
        spec: MatrixFamily 或 Telescope | MatrixFamily or Telescope

    Returns:
        HeartCertificate
    """
    _check_ring(N, spec)
    if isinstance(spec, MatrixFamily):
        result = _matrix_membership(N, spec)
    else:
        result = _telescope_membership(N, spec)
    logger.debug(
        f"心成员判定 {N.describe()} / {spec.variant}: {result.verdict}",
        f"Heart membership {N.describe()} / {spec.variant}: {result.verdict}"
    )
    return result


@dataclass(frozen=True)
class ConeOrthogonality:
    """
    单个 σ 的锥正交性数据：Hom_D(U, N) 与 Hom_D(U[−1], N) 的直和项

    Cone orthogonality data for one σ: the summands of Hom_D(U, N) and Hom_D(U[−1], N)
    """

    index: int
    homology: Dict[int, FpModule]
    hom_u: Tuple[FpModule, FpModule]
    hom_u_shifted: Tuple[FpModule, FpModule]

    @property
    def vanishes(self) -> bool:
        return all(M.is_zero for M in self.hom_u + self.hom_u_shifted)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "index": self.index,
            "homology": {str(i): H.describe() for i, H in sorted(self.homology.items())},
            "hom_u": [M.describe() for M in self.hom_u],
            "hom_u_shifted": [M.describe() for M in self.hom_u_shifted],
            "vanishes": self.vanishes,
        }


def sigma_cone(sigma: Matrix) -> ChainComplex:
    """cone(σ)，σ 视为集中在次数 0 的复形之间的链映射 | with σ a chain map between complexes concentrated in degree 0"""
    spec = sigma.spec
    source = ChainComplex.concentrated(spec, 0, sigma.ncols)
    target = ChainComplex.concentrated(spec, 0, sigma.nrows)
    return cone(ChainMap(source, target, {0: sigma}))


def cone_orthogonality(N: FpModule, sigma: Matrix, index: int = 0) -> ConeOrthogonality:
    """
    Hom_D(U, N) = Hom(H⁰U, N) ⊕ Ext¹(H¹U, N)；
    Hom_D(U[−1], N) = Hom(H⁻¹U, N) ⊕ Ext¹(H⁰U, N)
    """
    U = sigma_cone(sigma)
    H = {i: homology(U, i) for i in (-1, 0, 1)}
    hom_u = (hom_module(H[0], N), ext1(H[1], N))
    hom_u_shifted = (hom_module(H[-1], N), ext1(H[0], N))
    return ConeOrthogonality(index, H, hom_u, hom_u_shifted)


@dataclass(frozen=True)
class ConeVerdict:
    verdict: bool
    details: Tuple[ConeOrthogonality, ...] = field(default_factory=tuple)

    def to_dict(self) -> Dict[str, Any]:
        return {"verdict": self.verdict, "cones": [d.to_dict() for d in self.details]}


def heart_membership_via_cone(N: FpModule, spec: LocalizationSpec) -> ConeVerdict:
    """
    第二条路径：(U₀ ∪ U₀[−1]) ⊥ N，U₀ 为 σ 的锥

    Second path: (U₀ ∪ U₀[−1]) ⊥ N with U₀ the cones of the σ

    Raises:
        PreconditionError: 望远镜规格的锥是无穷秩的 | Telescope cones have infinite rank
    """
    if isinstance(spec, Telescope):
        raise PreconditionError(
            cn="望远镜规格的锥是无穷秩复形，请改用 lim/lim¹ 判定（反模路径）",
            en="Telescope cones are infinite-rank complexes; use the lim/lim¹ test (contramodule path) instead"
        )
    _check_ring(N, spec)
    details = tuple(cone_orthogonality(N, sigma, index) for index, sigma in enumerate(spec.mats))
    return ConeVerdict(all(d.vanishes for d in details), details)


@dataclass(frozen=True)
class LocalComplexVerdict:
    """
    局部复形判定：每个次数的同调及其心成员判定

    Local-complex verdict: the homology in every degree with its membership verdict
    """

    verdict: bool
    per_degree: Dict[int, HeartCertificate]
    homology: Dict[int, FpModule]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "verdict": self.verdict,
            "degrees": {
                str(i): {"homology": self.homology[i].describe(), "member": c.verdict}
                for i, c in sorted(self.per_degree.items())
            },
        }


def is_local_complex(M: ChainComplex, spec: LocalizationSpec) -> LocalComplexVerdict:
    """
    M 是局部的当且仅当它在支撑中每个次数的同调都属于心

    M is local iff its homology in every degree of the support lies in the heart
    """
    per_degree: Dict[int, HeartCertificate] = {}
    modules: Dict[int, FpModule] = {}
    for i in M.degrees():
        H = homology(M, i)
        modules[i] = H
        per_degree[i] = heart_membership(H, spec)
    return LocalComplexVerdict(all(c.verdict for c in per_degree.values()), per_degree, modules)
