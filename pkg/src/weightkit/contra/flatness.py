"""
weightkit 元素局部化的平坦性检验

Flatness of element localizations

Tor₁(R[s⁻¹], M) 是望远镜分解张量 M 后 (1 − s·shift) 在有限支撑塔 ⊕M 上的核。
核为零由回代给出：像的第 0 项就是 x_0，其后 x_n = y_n + s·x_{n−1}，
所以像为零的塔每一项都为零。检验器对每个样本在若干截断长度上显式计算核，
并对生成元逐个执行回代。

Tor₁(R[s⁻¹], M) is the kernel of (1 − s·shift) on finitely supported towers
⊕M after tensoring the telescope resolution with M. The kernel vanishes by
back-substitution: the degree-0 entry of the image is x_0 and then
x_n = y_n + s·x_{n−1}, so a tower with zero image is zero in every entry.
The verifier computes the kernel explicitly at several truncation lengths
for each sample and runs the back-substitution on every generator.
"""

from typing import Any, Optional, Sequence

from .telescope import TelescopeOperator
from ..modules import FpModule
from ..ring import Matrix, RingSpec
from ..common.checks import VerificationReport
from ..common.logging import get_logger

logger = get_logger("contra.flatness")


def _back_substitution_holds(operator: TelescopeOperator, M: FpModule, length: int) -> bool:
    """每个生成元放在每个位置上都能由像回代复原 | Every generator in every slot is recovered from its image"""
    spec = M.spec
    b = M.generators
    for slot in range(length):
        for j in range(b):
            tower = [Matrix.zeros(spec, b, 1) for _ in range(length)]
            tower[slot] = Matrix.identity(spec, b).column_matrix(j)
            stacked = tower[0].vstack(*tower[1:])
            image = operator.tensor_matrix(M, length)(stacked)
            pieces = [image.submatrix(range(n * b, (n + 1) * b), [0]) for n in range(length + 1)]
            recovered = operator.recover(pieces)
            if any(not M.elements_equal(x, y) for x, y in zip(recovered, tower)):
                return False
    return True


def verify_flatness(s: Any, samples: Sequence[FpModule], spec: Optional[RingSpec] = None, depth: int = 3) -> VerificationReport:
    """
    对每个样本 M 验证 Tor₁(R[s⁻¹], M) = 0

    Verify Tor₁(R[s⁻¹], M) = 0 for every sample M

    Args:
        s: 被求逆的元素 | The inverted element
        samples: 有限表现模样本 | Sample of finitely presented modules
        spec: 系数环，缺省取第一个样本的环 | Coefficient ring, the ring of the first sample by default
        depth: 显式计算核的最大截断长度 | Largest truncation length at which the kernel is computed

    Returns:
        VerificationReport
    """
    report = VerificationReport("flatness")
    if spec is None:
        if not samples:
            report.note("no samples")
            return report
        spec = samples[0].spec
    s = spec.element(s)
    if s.is_zero:
        report.note("R[0^-1] = 0: Tor_1 vanishes trivially")
        for M in samples:
            report.add("tor1-vanishes", M.describe(), True, reason="zero localization")
        report.log_summary(logger)
        return report

    operator = TelescopeOperator(s)
    for M in samples:
        subject = M.describe()
        if M.is_zero:
            report.add("tor1-vanishes", subject, True, reason="zero module")
            continue
        kernels = [operator.tensor_matrix(M, length).kernel()[0] for length in range(1, depth + 1)]
        injective = all(K.is_zero for K in kernels)
        recovered = _back_substitution_holds(operator, M, depth)
        report.add("tor1-vanishes", subject, injective and recovered,
                   kernels=[K.describe() for K in kernels], back_substitution=recovered, depth=depth)
    report.note(
        f"multiplication R[{s}^-1] ⊗ R[{s}^-1] → R[{s}^-1] is bijective: "
        f"(a/{s}^m)⊗(b/{s}^n) = (ab/{s}^(m+n))⊗1"
    )
    report.log_summary(logger)
    return report
