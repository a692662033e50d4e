"""
weightkit 权结构公理检验器

Weight-structure axiom verifier

检查权分解的两块落在所述的类中、三角一致性 cone(incl) ≃ R、
正交性 Hom_K(C_{w≤0}, C_{w≥1}) = 0，以及连通性 Hom_K(P, Q[i]) = 0（i > 0）。

Checks that the two pieces of the weight decomposition land in the stated
classes, triangle consistency cone(incl) ≃ R, orthogonality
Hom_K(C_{w≤0}, C_{w≥1}) = 0 and connectivity Hom_K(P, Q[i]) = 0 for i > 0.
"""

from typing import Callable, Iterable, List, Sequence
from typing_extensions import TypeAlias

from .complex import ChainComplex
from .minimal import homotopy_equivalent, weight_range
from .operations import Truncation, cone, hom_upto_homotopy, shift, weight_truncate
from ..common.checks import VerificationReport
from ..common.logging import get_logger

logger = get_logger("complexes.axioms")

TruncateFunction: TypeAlias = Callable[[ChainComplex, int], Truncation]


def _label(index: int, M: ChainComplex) -> str:
    return f"sample[{index}] ranks={list(M.ranks)} low={M.low}"


def verify_weight_axioms(
        sample: Sequence[ChainComplex],
        n_range: Iterable[int],
        truncate: TruncateFunction = weight_truncate,
        connectivity_shifts: Sequence[int] = (1, 2),
) -> VerificationReport:
    """
    在样本上检验权结构公理

    Verify the weight-structure axioms on a sample

    Args:
        sample: 复形样本 | Sample of complexes
        n_range: 截断位置 | Truncation positions
        truncate: 权截断函数（测试可注入损坏的版本） | Weight truncation (tests inject corrupted ones)
        connectivity_shifts: 连通性检查所用的正平移 | Positive shifts for the connectivity check

    Returns:
        VerificationReport，违例逐条列出 | with every violation listed
    """
    report = VerificationReport("weight-axioms")
    n_values = list(n_range)
    lower_pieces: List[ChainComplex] = []
    upper_pieces: List[ChainComplex] = []

    for index, M in enumerate(sample):
        subject = _label(index, M)
        for n in n_values:
            pieces = truncate(M, n)
            lower_range = weight_range(pieces.lower)
            upper_range = weight_range(pieces.upper)
            report.add(
                "lower-in-w<=n", f"{subject} n={n}",
                lower_range is None or lower_range[1] <= n,
                weight_range=lower_range,
            )
            report.add(
                "upper-in-w>=n+1", f"{subject} n={n}",
                upper_range is None or upper_range[0] >= n + 1,
                weight_range=upper_range,
            )
            report.add(
                "triangle", f"{subject} n={n}",
                homotopy_equivalent(cone(pieces.inclusion), pieces.upper),
            )
        zero_cut = truncate(M, 0)
        lower_pieces.append(zero_cut.lower)
        upper_pieces.append(zero_cut.upper)

    for a, X in enumerate(lower_pieces):
        if X.is_zero:
            continue
        for b, Y in enumerate(upper_pieces):
            if Y.is_zero:
                continue
            H = hom_upto_homotopy(X, Y)
            report.add("orthogonality", f"L(sample[{a}]) → R(sample[{b}])", H.is_zero, hom=H.describe())

    if sample:
        spec = sample[0].spec
        P = ChainComplex.concentrated(spec, 0, 1)
        for i in connectivity_shifts:
            H = hom_upto_homotopy(P, shift(P, i))
            report.add("connectivity", f"Hom(R, R[{i}])", H.is_zero, hom=H.describe())

    report.log_summary(logger)
    return report
