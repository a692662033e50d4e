"""
weightkit s-反模与 I-反模判定

s- and I-contramodule membership with certificates

C 是 s-反模当且仅当 Hom(R[s⁻¹], C) = 0 = Ext¹(R[s⁻¹], C)。在支持的环上，
这等价于 C 没有自由部分，且 s 在 C 上幂零。每个判定都附带可独立复核的证书：
- exponent：s^N·C = 0；
- hom：种子 c 与乘子 t，满足 s·t·c = c 且 c ≠ 0，由此 c_n = tⁿ·c 是非零的相容序列；
- ext1：自由方向上的周期塔 (b_n = 1 当 m | n)，其唯一的 s-进提升满足
  (1 − s^m)·c = 1，而 1 − s^m 是非零非单位。

C is an s-contramodule iff Hom(R[s⁻¹], C) = 0 = Ext¹(R[s⁻¹], C). Over the
supported rings this means C has no free part and s acts nilpotently on C.
Every verdict carries a certificate that can be re-checked on its own:
- exponent: s^N·C = 0;
- hom: a seed c and multiplier t with s·t·c = c and c ≠ 0, so c_n = tⁿ·c is a
  nonzero compatible sequence;
- ext1: a periodic tower (b_n = 1 when m | n) along a free direction whose only
  s-adic lift would satisfy (1 − s^m)·c = 1, while 1 − s^m is a nonzero non-unit.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, NamedTuple, Optional, Sequence, Tuple

from .telescope import TelescopeOperator
from ..modules import FpModule, ModuleHom
from ..ring import Matrix, RingElement, RingSpec
from ..common.logging import get_logger

logger = get_logger("contra.contramodule")


class CertificateKind(str, Enum):
    """证书类型 | Certificate kind"""
    EXPONENT = "exponent"
    HOM = "hom"
    EXT1 = "ext1"


class SplitByS(NamedTuple):
    """C ≅ R^k ⊕ (s 幂零部分) ⊕ (s 可逆部分) | C ≅ R^k ⊕ (s-nilpotent part) ⊕ (s-invertible part)"""
    free_rank: int
    nilpotent: FpModule
    invertible: FpModule


def _primary_split(d: RingElement, s: RingElement) -> Tuple[RingElement, RingElement, int]:
    """
    d = g · h，g = gcd(s^∞, d)，h 与 s 互素；返回 (g, h, 稳定步数)

    d = g · h with g = gcd(s^∞, d) and h coprime to s; returns (g, h, steps to stabilize)

    g_{n+1} = gcd(g_n·s, d) 等于 gcd(s^{n+1}, d)，理想链 (g_n) 在有限步内稳定。
    g_{n+1} = gcd(g_n·s, d) equals gcd(s^{n+1}, d); the chain (g_n) stabilizes
    after finitely many steps.
    """
    g = d.spec.one()
    steps = 0
    while True:
        following = (g * s).gcd(d)
        if following == g:
            return g, d.exact_div(g), steps
        g = following
        steps += 1


def split_by_s(C: FpModule, s: Any) -> SplitByS:
    """
    把 C 分解为自由部分、s 幂零部分与 s 可逆部分

    Split C into its free part, its s-nilpotent part and its s-invertible part

    Args:
        C: 有限表现模 | Finitely presented module
        s: 非零环元素 | Nonzero ring element

    Returns:
        SplitByS(free_rank, nilpotent, invertible)，两个挠部分以循环直和形式给出 |
        with both torsion parts in cyclic-sum form
    """
    spec = C.spec
    s = spec.element(s)
    nilpotent: List[Any] = []
    invertible: List[Any] = []
    for d in C.invariant_factors:
        g, h, _ = _primary_split(d, s)
        if not g.is_unit:
            nilpotent.append(g.payload)
        if not h.is_unit:
            invertible.append(h.payload)
    return SplitByS(
        C.free_rank,
        FpModule.from_cyclic_orders(spec, nilpotent),
        FpModule.from_cyclic_orders(spec, invertible),
    )


def nilpotency_exponent(C: FpModule, s: Any) -> Optional[int]:
    """
    使 s^N·C = 0 的最小 N；不存在时返回 None

    Smallest N with s^N·C = 0; None when there is none
    """
    s = C.spec.element(s)
    if C.is_zero:
        return 0
    if s.is_zero:
        return 1
    if C.free_rank:
        return None
    exponent = 0
    for d in C.invariant_factors:
        _, h, steps = _primary_split(d, s)
        if not h.is_unit:
            return None
        exponent = max(exponent, steps)
    return exponent


@dataclass(frozen=True)
class ContraCertificate:
    """
    反模判定的证书

    element 以 C 的生成元坐标给出；multiplier 是 hom 证书中的 t；
    period 是 ext1 证书中的 m。

    Certificate of a contramodule verdict

    element is in the generator coordinates of C; multiplier is the t of a
    hom certificate and period the m of an ext1 certificate.
    """

    verdict: bool
    s: RingElement
    kind: CertificateKind
    exponent: Optional[int] = None
    element: Optional[Tuple[RingElement, ...]] = None
    multiplier: Optional[RingElement] = None
    period: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"verdict": self.verdict, "s": str(self.s), "kind": self.kind.value}
        if self.exponent is not None:
            data["exponent"] = self.exponent
        if self.element is not None:
            data["element"] = [str(v) for v in self.element]
        if self.multiplier is not None:
            data["multiplier"] = str(self.multiplier)
        if self.period is not None:
            data["period"] = self.period
        return data

    @classmethod
    def from_dict(cls, spec: RingSpec, data: Dict[str, Any]) -> "ContraCertificate":
        element = data.get("element")
        multiplier = data.get("multiplier")
        return cls(
            verdict=bool(data["verdict"]),
            s=spec.element(data["s"]),
            kind=CertificateKind(data["kind"]),
            exponent=data.get("exponent"),
            element=tuple(spec.element(v) for v in element) if element is not None else None,
            multiplier=spec.element(multiplier) if multiplier is not None else None,
            period=data.get("period"),
        )


def _normal_generator(C: FpModule, index: int, factor: Optional[RingElement] = None) -> Tuple[RingElement, ...]:
    column = C.normal_form.from_normal.column_matrix(index)
    if factor is not None:
        column = column.scale(factor)
    return tuple(column.col(0))


def _inverse_modulo(s: RingElement, e: RingElement) -> RingElement:
    """t 使 s·t ≡ 1 (mod e)，要求 gcd(s, e) = 1 | t with s·t ≡ 1 (mod e), needs gcd(s, e) = 1"""
    ar = s.spec.arithmetic
    g, x, _ = ar.gcdex(s.payload, e.payload)
    return s.spec.element(ar.mul(x, ar.inverse(g)))


def obstruction_period(s: Any, spec: RingSpec) -> Optional[int]:
    """
    使 1 − s^m 为非零非单位的最小 m ∈ {1, 2}；s 为零或单位时返回 None

    Smallest m ∈ {1, 2} with 1 − s^m a nonzero non-unit; None when s is zero or a unit
    """
    s = spec.element(s)
    if s.is_zero or s.is_unit:
        return None
    for m in (1, 2):
        value = spec.one() - s ** m
        if not value.is_zero and not value.is_unit:
            return m
    return None


def is_s_contramodule(C: FpModule, s: Any) -> ContraCertificate:
    """
    判断 C 是否为 s-反模，并给出证书

    Decide whether C is an s-contramodule and return a certificate

    Args:
        C: 有限表现模 | Finitely presented module
        s: 环元素（零与单位按 R[0⁻¹] = 0、R[u⁻¹] = R 处理） |
            Ring element (zero and units follow R[0⁻¹] = 0 and R[u⁻¹] = R)

    Returns:
        ContraCertificate
    """
    spec = C.spec
    s = spec.element(s)
    if s.is_zero:
        return ContraCertificate(True, s, CertificateKind.EXPONENT, exponent=1)
    if s.is_unit:
        if C.is_zero:
            return ContraCertificate(True, s, CertificateKind.EXPONENT, exponent=0)
        return ContraCertificate(False, s, CertificateKind.HOM,
                                 element=_normal_generator(C, 0), multiplier=s.inverse())

    nf = C.normal_form
    exponent = 0
    for index, d in enumerate(nf.invariant_factors):
        g, h, steps = _primary_split(d, s)
        if not h.is_unit:
            certificate = ContraCertificate(False, s, CertificateKind.HOM,
                                            element=_normal_generator(C, index, g),
                                            multiplier=_inverse_modulo(s, h))
            logger.debug(
                f"{C.describe()} 不是 {s}-反模：可逆部分 {spec.short_name}/{h} 给出 Hom 见证",
                f"{C.describe()} is not an {s}-contramodule: invertible part {spec.short_name}/{h} gives a Hom witness"
            )
            return certificate
        exponent = max(exponent, steps)
    if nf.free_rank:
        return ContraCertificate(False, s, CertificateKind.EXT1,
                                 element=_normal_generator(C, nf.torsion_count),
                                 period=obstruction_period(s, spec))
    return ContraCertificate(True, s, CertificateKind.EXPONENT, exponent=exponent)


def verify_certificate(C: FpModule, certificate: ContraCertificate) -> bool:
    """
    代入检验证书，不依赖判定过程

    Re-check a certificate by substitution, independently of the decision procedure
    """
    spec = C.spec
    s = certificate.s
    if certificate.kind is CertificateKind.EXPONENT:
        if not certificate.verdict or certificate.exponent is None:
            return False
        return ModuleHom.scalar(C, s ** certificate.exponent).is_zero
    if certificate.verdict or certificate.element is None:
        return False
    vector = Matrix.column(spec, list(certificate.element))
    if C.is_zero_element(vector):
        return False
    if certificate.kind is CertificateKind.HOM:
        t = certificate.multiplier
        if t is None:
            return False
        # c_n = tⁿ·c 满足 c_n = s·c_{n+1}
        return C.elements_equal(vector.scale(s * t), vector)
    m = certificate.period
    if m is None or m != obstruction_period(s, spec):
        return False
    # 塔沿着无挠方向：最大不变因子不能零化 c
    factors = C.invariant_factors
    if factors and C.is_zero_element(vector.scale(factors[-1])):
        return False
    # 周期塔 b 的部分提升 x 满足 (1 − s·shift)(x) = b 且 (1 − s^m)·x_0 = (1 − s^L)·c
    length = 2 * m
    zero = vector.scale(spec.zero())
    tower = [vector if n % m == 0 else zero for n in range(length)]
    operator = TelescopeOperator(s)
    lift = operator.back_substitute(tower)
    if operator.apply(lift) != tower:
        return False
    obstruction = spec.one() - s ** m
    return C.elements_equal(lift[0].scale(obstruction), vector.scale(spec.one() - s ** length))


@dataclass(frozen=True)
class IdealCertificate:
    """
    I-反模判定：逐个生成元的证书；failing 为第一个失败的生成元下标

    I-contramodule verdict: one certificate per generator; failing is the
    index of the first generator that fails
    """

    verdict: bool
    certificates: Tuple[ContraCertificate, ...]
    failing: Optional[int] = None
    vacuous: bool = False

    @property
    def exponents(self) -> List[Optional[int]]:
        return [c.exponent for c in self.certificates]

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "verdict": self.verdict,
            "certificates": [c.to_dict() for c in self.certificates],
        }
        if self.failing is not None:
            data["failing_generator"] = str(self.certificates[self.failing].s)
        if self.vacuous:
            data["vacuous"] = True
        return data


def is_ideal_contramodule(C: FpModule, gens: Sequence[Any]) -> IdealCertificate:
    """
    I = (gens) 时 C 是 I-反模当且仅当它对每个生成元都是 s_j-反模；空生成元组时真值平凡（I = 0）

    C is an I-contramodule for I = (gens) iff it is an s_j-contramodule for
    every generator; vacuously true for an empty list (I = 0)
    """
    certificates = tuple(is_s_contramodule(C, s) for s in gens)
    if not certificates:
        logger.debug("空生成元组：I = 0，平凡为真", "Empty generator list: I = 0, vacuously true")
        return IdealCertificate(True, (), vacuous=True)
    for index, certificate in enumerate(certificates):
        if not certificate.verdict:
            return IdealCertificate(False, certificates, failing=index)
    return IdealCertificate(True, certificates)


def is_localization_contramodule(C: FpModule, gens: Sequence[Any]) -> ContraCertificate:
    """
    U = R[S⁻¹]（S 由 gens 生成）时的 u-反模条件，等价于对乘积 ∏gens 的 s-反模条件

    The u-contramodule condition for U = R[S⁻¹] with S generated by gens; it
    equals the s-contramodule condition for the product ∏gens
    """
    product = C.spec.one()
    for s in gens:
        product = product * C.spec.element(s)
    return is_s_contramodule(C, product)


def verify_ideal_certificate(C: FpModule, certificate: IdealCertificate) -> bool:
    if certificate.vacuous:
        return certificate.verdict and not certificate.certificates
    verdicts = [c.verdict for c in certificate.certificates]
    if certificate.verdict != all(verdicts):
        return False
    return all(verify_certificate(C, c) for c in certificate.certificates)
