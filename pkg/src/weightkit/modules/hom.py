"""
weightkit 模同态

Homomorphisms between finitely presented modules

同态由生成元上的矩阵 H 给出（target.generators × source.generators），
并须把源的关系映入目标的关系子模。

A homomorphism is given by a matrix H on generators (target.generators ×
source.generators) that must carry source relations into the relation
submodule of the target.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Any, Dict, Optional, Tuple

from .fpmodule import FpModule
from ..ring import Matrix, RingElement, linear_solve, smith_normal_form
from ..common.exceptions import DimensionError, ModuleHomError, RingMismatchError


@dataclass(frozen=True)
class BijectivityCertificate:
    """
    双射判定的见证

    失败时给出非零核元素（源的生成元坐标）或不被击中的余核代表（目标的生成元坐标）。

    Witness of a bijectivity test

    On failure carries a nonzero kernel element (source generator
    coordinates) or a cokernel representative that is not hit (target
    generator coordinates).
    """

    bijective: bool
    kind: Optional[str] = None
    element: Optional[Tuple[RingElement, ...]] = None

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"bijective": self.bijective}
        if self.kind is not None:
            data["witness"] = {"kind": self.kind, "element": [str(v) for v in self.element]}
        return data


@dataclass(frozen=True, eq=False)
class ModuleHom:
    """
    有限表现模之间的同态

    Homomorphism between finitely presented modules
    """

    source: FpModule
    target: FpModule
    matrix: Matrix
    check: bool = True

    def __post_init__(self) -> None:
        if self.source.spec != self.target.spec or self.matrix.spec != self.source.spec:
            raise RingMismatchError(
                cn="同态的源、目标与矩阵必须属于同一个环",
                en="Source, target and matrix of a homomorphism must share one ring"
            )
        if self.matrix.shape != (self.target.generators, self.source.generators):
            raise DimensionError(
                cn=f"同态矩阵形状 {self.matrix.shape} 与 {self.target.generators}×{self.source.generators} 不符",
                en=f"Homomorphism matrix shape {self.matrix.shape} does not match "
                   f"{self.target.generators}×{self.source.generators}"
            )
        if self.check and not self._is_compatible():
            raise ModuleHomError(
                cn="矩阵没有把源的关系映入目标的关系子模",
                en="The matrix does not map source relations into the target relation submodule"
            )

    def _is_compatible(self) -> bool:
        images = self.matrix @ self.source.relation_map
        return all(self.target.is_zero_element(images.column_matrix(j)) for j in range(images.ncols))

    # --- 构造器 | Constructors ---

    @classmethod
    def identity(cls, M: FpModule) -> "ModuleHom":
        return cls(M, M, Matrix.identity(M.spec, M.generators), check=False)

    @classmethod
    def zero(cls, source: FpModule, target: FpModule) -> "ModuleHom":
        return cls(source, target, Matrix.zeros(source.spec, target.generators, source.generators), check=False)

    @classmethod
    def scalar(cls, M: FpModule, c: Any) -> "ModuleHom":
        """乘以环元素 c | Multiplication by the ring element c"""
        return cls(M, M, Matrix.identity(M.spec, M.generators).scale(c), check=False)

    # --- 代数 | Algebra ---

    def __call__(self, x: Matrix) -> Matrix:
        return self.matrix @ x

    def compose(self, other: "ModuleHom") -> "ModuleHom":
        """self ∘ other"""
        return ModuleHom(other.source, self.target, self.matrix @ other.matrix, check=False)

    def __matmul__(self, other: "ModuleHom") -> "ModuleHom":
        return self.compose(other)

    def __sub__(self, other: "ModuleHom") -> "ModuleHom":
        return ModuleHom(self.source, self.target, self.matrix - other.matrix, check=False)

    @property
    def is_zero(self) -> bool:
        return all(self.target.is_zero_element(self.matrix.column_matrix(j)) for j in range(self.matrix.ncols))

    def equals(self, other: "ModuleHom") -> bool:
        return (self - other).is_zero

    # --- 核、像、余核 | Kernel, image, cokernel ---

    @cached_property
    def _preimage_basis(self) -> Matrix:
        """
        {x ∈ R^b_s : H·x ∈ im B_t} 的基 Sb（列）

        Basis Sb (as columns) of {x ∈ R^b_s : H·x ∈ im B_t}
        """
        b_s = self.source.generators
        stacked = self.matrix.hstack(self.target.relation_map)
        kernel = smith_normal_form(stacked).kernel_basis()
        projected = kernel.submatrix(range(b_s), range(kernel.ncols))
        return smith_normal_form(projected).image_basis()

    def kernel(self) -> Tuple[FpModule, "ModuleHom"]:
        """
        ker h 及其包含映射 | ker h with its inclusion

        ker h = span(Sb)/im A_s，A_s = Sb·Z，故 ker h ≅ coker(Z)。
        ker h = span(Sb)/im A_s with A_s = Sb·Z, hence ker h ≅ coker(Z).
        """
        basis = self._preimage_basis
        solved = linear_solve(basis, self.source.relation_map)
        K = FpModule.from_relation_map(solved.solution)
        return K, ModuleHom(K, self.source, basis, check=False)

    def image(self) -> Tuple[FpModule, "ModuleHom"]:
        """im h ≅ R^b_s / span(Sb)，包含映射由 H 给出 | with inclusion given by H"""
        image = FpModule.from_relation_map(self._preimage_basis)
        return image, ModuleHom(image, self.target, self.matrix, check=False)

    def cokernel(self) -> Tuple[FpModule, "ModuleHom"]:
        """coker h = coker([H | B_t])，投影为恒等坐标 | projection is the identity on coordinates"""
        Q = FpModule.from_relation_map(self.matrix.hstack(self.target.relation_map))
        return Q, ModuleHom(self.target, Q, Matrix.identity(self.target.spec, self.target.generators), check=False)

    @property
    def is_injective(self) -> bool:
        return self.kernel()[0].is_zero

    @property
    def is_surjective(self) -> bool:
        return self.cokernel()[0].is_zero

    @property
    def is_bijective(self) -> bool:
        return self.is_injective and self.is_surjective

    # --- 提升 | Lifting ---

    def lift_through(self, inclusion: "ModuleHom") -> Optional["ModuleHom"]:
        """
        沿单射 i: K → Y 提升 f: Q → Y，得到 g 使 i∘g = f；像不在 im i 中时返回 None

        Lift f: Q → Y along an injection i: K → Y to g with i∘g = f; None when
        the image of f does not lie in im i
        """
        if inclusion.target.generators != self.target.generators:
            raise DimensionError(
                cn="提升要求共同的目标模",
                en="Lifting needs a common target module"
            )
        stacked = inclusion.matrix.hstack(self.target.relation_map)
        solved = linear_solve(stacked, self.matrix)
        if not solved.solvable:
            return None
        k = inclusion.source.generators
        g = solved.solution.submatrix(range(k), range(self.source.generators))
        return ModuleHom(self.source, inclusion.source, g, check=False)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "source": self.source.to_dict(),
            "target": self.target.to_dict(),
            "matrix": self.matrix.to_strings(),
        }


def hom_map_bijective(h: ModuleHom) -> BijectivityCertificate:
    """
    判断同态是否双射，失败时给出核元素或余核代表

    Decide whether a homomorphism is bijective; on failure return a kernel
    element or a cokernel representative

    Args:
        h: 有效的模同态 | A valid module homomorphism

    Returns:
        BijectivityCertificate
    """
    K, inclusion = h.kernel()
    if not K.is_zero:
        generator = K.normal_form.from_normal.column_matrix(0)
        witness = inclusion(generator)
        return BijectivityCertificate(False, "kernel", tuple(witness.col(0)))
    Q, _ = h.cokernel()
    if not Q.is_zero:
        representative = Q.normal_form.from_normal.column_matrix(0)
        return BijectivityCertificate(False, "cokernel", tuple(representative.col(0)))
    return BijectivityCertificate(True)


def verify_bijectivity_certificate(h: ModuleHom, certificate: BijectivityCertificate) -> bool:
    """
    重新检验证书：核元素非零且映为零；余核代表不在像中

    Re-check a certificate: the kernel element is nonzero and maps to zero;
    the cokernel representative is not in the image
    """
    if certificate.bijective:
        return h.is_bijective
    vector = Matrix.column(h.source.spec, list(certificate.element))
    if certificate.kind == "kernel":
        return not h.source.is_zero_element(vector) and h.target.is_zero_element(h(vector))
    Q, projection = h.cokernel()
    return not Q.is_zero_element(projection(vector))
