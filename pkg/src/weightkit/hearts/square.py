"""
weightkit 交换方块与心的投射对象

The commuting square and projectives of the heart

对自由模 P = R^k 比较两条路径：先取心的截断再完备化（Δ∘H_t），与先局部化
再取截断。两条路径都只通过对心中测试模 N 的 Hom 来观察。

For the free module P = R^k two paths are compared: truncate to the heart
then complete (Δ∘H_t), or localize then truncate. Both paths are observed
only through Hom into test modules N of the heart.
"""

from typing import List, Sequence

from .localized_ring import universal_localization
from .membership import heart_membership
from .spec import LocalizationSpec, MatrixFamily, Telescope
from ..contra import (
    delta_completion,
    hom_from_completed,
    nilpotency_exponent,
    reduce_completed,
    tower_limits,
)
from ..modules import (
    FpModule,
    ModuleHom,
    ShortExactSequence,
    hom_induced,
    hom_module,
    is_isomorphic,
)
from ..ring import RingElement
from ..common.checks import VerificationReport
from ..common.exceptions import PreconditionError, SequenceError
from ..common.logging import get_logger

logger = get_logger("hearts.square")


def _members(report: VerificationReport, spec: LocalizationSpec, tests: Sequence[FpModule]) -> List[FpModule]:
    members = []
    for N in tests:
        if heart_membership(N, spec).verdict:
            members.append(N)
        else:
            report.note(f"skipped {N.describe()}: not in the heart")
    return members


def _matrix_square(report: VerificationReport, k: int, family: MatrixFamily, tests: Sequence[FpModule]) -> None:
    ring = universal_localization(family)
    P = FpModule.free(family.spec, k)
    localized = ring.localize_module(P)
    report.add("U⊗P≅U^k", f"k={k} U={ring}", localized.rank == k and localized.torsion.is_zero,
               rank=localized.rank, torsion=localized.torsion.describe())
    for N in _members(report, family, tests):
        # N 是 U-模，Hom_R(U, N) 为塔 N ←f− N ←f− … 的 lim，lim¹ 为零
        tower = tower_limits(N, ring.inverted)
        hom_u = tower.stable_image.power(k)
        direct = hom_module(P, N)
        report.add("Hom(U^k,N)≅N^k", f"k={k} N={N.describe()}",
                   is_isomorphic(hom_u, N.power(k)) and tower.lim1_vanishes,
                   hom=hom_u.describe(), lim1_vanishes=tower.lim1_vanishes)
        report.add("N^k≅Hom(P,N)", f"k={k} N={N.describe()}", is_isomorphic(direct, N.power(k)),
                   hom=direct.describe())


def _telescope_square(report: VerificationReport, k: int, spec: Telescope,
                      tests: Sequence[FpModule], n_max: int) -> None:
    P = FpModule.free(spec.spec, k)
    members = _members(report, spec, tests)
    for s in spec.gens:
        completed = delta_completion(P, s)
        report.add("Δ(P)", f"k={k} s={s}", completed.completed_rank == (0 if s.is_unit else k)
                   and completed.finite_part.is_zero, completed=completed.describe())
        for N in members:
            completed_hom = hom_from_completed(completed, N)
            direct = hom_module(P, N)
            report.add("Hom(Δ(P),N)≅Hom(P,N)", f"k={k} s={s} N={N.describe()}",
                       is_isomorphic(completed_hom, direct) and is_isomorphic(direct, N.power(k)),
                       completed=completed_hom.describe(), direct=direct.describe())
        for n in range(1, n_max + 1):
            reduced = reduce_completed(completed, n)
            quotient = ModuleHom.scalar(P, s ** n).cokernel()[0]
            report.add("Δ(P)/s^n≅P/s^n", f"k={k} s={s} n={n}", is_isomorphic(reduced, quotient),
                       reduced=reduced.describe(), quotient=quotient.describe())


def verify_square(k: int, spec: LocalizationSpec, tests: Sequence[FpModule], n_max: int = 6) -> VerificationReport:
    """
    在 P = R^k 上检验方块交换

    Verify that the square commutes on P = R^k

    Args:
        k: 自由秩 | Free rank
        spec: 局部化规格 | Localization spec
        tests: 测试模，非心成员被跳过并记录 | Test modules; non-members are skipped with a note
        n_max: 约化层数上限 | Highest reduction level

    Returns:
        VerificationReport
    """
    report = VerificationReport("square")
    report.note(f"levels 1..{n_max}")
    if isinstance(spec, MatrixFamily):
        _matrix_square(report, k, spec, tests)
    else:
        _telescope_square(report, k, spec, tests, n_max)
    report.log_summary(logger)
    return report


def _completed_free_images(k: int, s: RingElement, sequence: ShortExactSequence) -> ShortExactSequence:
    """
    对 Hom(Δ_s(R^k), −) 作用于序列：Hom(Δ, X) = Hom(Δ/s^e, X)，e 取三项幂零指数的最大值

    Apply Hom(Δ_s(R^k), −) to the sequence: Hom(Δ, X) = Hom(Δ/s^e, X) with e
    the largest nilpotency exponent of the three terms
    """
    terms = (sequence.left, sequence.middle, sequence.right)
    level = max([nilpotency_exponent(X, s) or 0 for X in terms] + [1])
    Q = reduce_completed(delta_completion(FpModule.free(sequence.left.spec, k), s), level)
    return ShortExactSequence(hom_induced(Q, sequence.inclusion), hom_induced(Q, sequence.projection))


def verify_heart_projectives(spec: LocalizationSpec, k_max: int,
                             sample_ses: Sequence[ShortExactSequence]) -> VerificationReport:
    """
    完备化自由模 Δ(R^k) 对心中短正合列是投射的：Hom(Δ(R^k), −) 保持正合

    The completed free modules Δ(R^k) are projective for short exact
    sequences of the heart: Hom(Δ(R^k), −) keeps them exact

    Raises:
        PreconditionError: 规格不是望远镜型，或序列的某一项不在心中 |
            The localization is not a telescope, or a term of a sequence is not in the heart
        SequenceError: 样本序列不正合（构造时给出位置） | A sample sequence is not exact (position from construction)
    """
    if not isinstance(spec, Telescope):
        raise PreconditionError(
            cn="投射性检验只适用于望远镜规格",
            en="The projectivity check only applies to telescope specs"
        )
    report = VerificationReport("heart-projectives")
    for index, sequence in enumerate(sample_ses):
        sequence.validate()
        for X in (sequence.left, sequence.middle, sequence.right):
            if not heart_membership(X, spec).verdict:
                raise PreconditionError(
                    cn=f"第 {index} 个序列的项 {X.describe()} 不在心中",
                    en=f"Term {X.describe()} of sequence {index} is not in the heart"
                )
        label = f"{sequence.left.describe()} → {sequence.middle.describe()} → {sequence.right.describe()}"
        for k in range(k_max + 1):
            for s in spec.gens:
                subject = f"#{index} {label} k={k} s={s}"
                if k == 0 or s.is_unit:
                    report.add("hom-exact", subject, True, reason="sequence of zeros")
                    continue
                try:
                    image = _completed_free_images(k, s, sequence)
                except SequenceError as exc:
                    report.add("hom-exact", subject, False, position=exc.position)
                    continue
                consistent = all(
                    is_isomorphic(hom_from_completed(delta_completion(FpModule.free(X.spec, k), s), X), Y)
                    for X, Y in ((sequence.left, image.left), (sequence.middle, image.middle),
                                 (sequence.right, image.right))
                )
                report.add("hom-exact", subject, consistent,
                           image=f"{image.left.describe()} → {image.middle.describe()} → {image.right.describe()}")
    report.log_summary(logger)
    return report
