"""
weightkit 验收电池

Acceptance battery

十一项准则各自生成一份 VerificationReport；准则之间相互独立，可在线程池中
并行求值，汇总顺序固定，与线程数无关。

Each of the eleven criteria produces its own VerificationReport. The
criteria are independent and may be evaluated in a thread pool; they are
aggregated in a fixed order whatever the thread count.
"""

import contextvars
import dataclasses
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple
from typing_extensions import TypeAlias

from ..complexes import (
    ChainComplex,
    ChainMap,
    cone,
    direct_sum,
    homology,
    homotopy_equivalent,
    placed_resolution,
    two_term_invariants,
    verify_weight_axioms,
    weight_range,
)
from ..contra import is_s_contramodule, tower_limits, verify_certificate, verify_flatness
from ..hearts import (
    LocalizationSpec,
    MatrixFamily,
    Telescope,
    heart_membership,
    heart_membership_via_cone,
    is_local_complex,
    verify_heart_projectives,
    verify_square,
)
from ..modules import FpModule, ProjectiveDimension, projective_dimension
from ..ring import Matrix, RingSpec, smith_normal_form
from ..utils import (
    SampleGenerator,
    abelian_groups,
    heart_sequences,
    nonsingular_matrices,
    two_term_matrices,
)
from ..common.checks import VerificationReport
from ..common.exceptions import InputError
from ..common.logging import get_logger

logger = get_logger("cli.battery")

# 汇总报告中每项准则保留的失败条目数 | Failures kept per criterion in the aggregate report
FAILURE_SAMPLES = 5


@dataclass(frozen=True)
class BatteryConfig:
    """
    验收电池的全部样本规模与界

    All sample sizes and bounds of the acceptance battery
    """

    seed: int = 0
    # 1. SNF
    snf_samples: int = 1000
    snf_max_dim: int = 4
    snf_bound: int = 9
    # 2-3. 两项复形与随机复形 | Two-term and random complexes
    two_term_rank: int = 2
    two_term_bound: int = 4
    random_complexes: int = 200
    axiom_batch: int = 8
    axiom_n_min: int = -2
    axiom_n_max: int = 1
    # 4-5, 11. 有限表现阿贝尔群 | Finitely presented abelian groups
    group_max_factor: int = 16
    group_max_free: int = 2
    group_max_torsion: int = 2
    contra_elements: Tuple[int, ...] = (2, 3, 4, 6)
    # 6. 矩阵族 | Matrix families
    family_rank: int = 2
    family_bound: int = 4
    heart_max_factor: int = 16
    heart_max_free: int = 2
    heart_max_torsion: int = 2
    # 7. 局部复形 | Local complexes
    local_complexes: int = 200
    # 8. 交换方块 | Commuting square
    square_ranks: Tuple[int, ...] = (0, 1, 2, 3)
    square_gens: Tuple[int, ...] = (2, 3, 5)
    square_tests: Tuple[int, ...] = (2, 4, 8, 9, 25)
    n_max: int = 6
    # 9. 投射对象 | Projectives
    projective_sequences: int = 20
    projective_k_max: int = 2
    # 10. 平坦性 | Flatness
    flatness_elements: Tuple[int, ...] = (2, 3, 6)
    flatness_samples: int = 50

    @classmethod
    def from_args(cls, args: Dict[str, Any], **overrides: Any) -> "BatteryConfig":
        """
        由命令参数覆盖默认值；未知字段视为输入错误

        Override defaults from command arguments; unknown fields are input errors
        """
        names = {f.name for f in dataclasses.fields(cls)}
        values: Dict[str, Any] = dict(overrides)
        for key, value in args.items():
            if key not in names:
                raise InputError(cn=f"未知的电池参数 {key}", en=f"Unknown battery parameter {key}")
            values[key] = tuple(value) if isinstance(value, list) else value
        return cls(**values)

    def to_dict(self) -> Dict[str, Any]:
        return {key: list(value) if isinstance(value, tuple) else value
                for key, value in dataclasses.asdict(self).items()}


def _integers() -> RingSpec:
    return RingSpec.integers()


def _test_ring_kinds() -> List[RingSpec]:
    return [RingSpec.parse(name) for name in ("Z", "Q", "GF(5)", "GF(3)[x]", "Q[x]")]


# =========================================================================
# 准则 | Criteria
# =========================================================================

def _snf_holds(A: Matrix) -> Tuple[bool, Dict[str, Any]]:
    snf = smith_normal_form(A)
    spec = A.spec
    product = snf.U @ A @ snf.V == snf.D
    units = (snf.U @ snf.U_inv == Matrix.identity(spec, A.nrows)
             and snf.V @ snf.V_inv == Matrix.identity(spec, A.ncols))
    factors = snf.invariant_factors
    diagonal = all(
        snf.D[i, j].is_zero or (i == j and i < len(factors) and snf.D[i, j] == factors[i])
        for i in range(A.nrows) for j in range(A.ncols)
    )
    chain = all(not d.is_zero and d == d.canonical() for d in factors) and all(
        factors[i].divides(factors[i + 1]) for i in range(len(factors) - 1)
    )
    return product and units and diagonal and chain, {
        "product": product, "units": units, "diagonal": diagonal, "chain": chain,
    }


def snf_soundness(config: BatteryConfig) -> VerificationReport:
    """D = U·A·V、可逆变换与整除链 | D = U·A·V, invertible transforms and the divisibility chain"""
    report = VerificationReport("snf-soundness")
    for index, spec in enumerate(_test_ring_kinds()):
        generator = SampleGenerator(spec, seed=config.seed + index, bound=config.snf_bound)
        for sample in range(config.snf_samples):
            nrows = generator.rng.randint(0, config.snf_max_dim)
            ncols = generator.rng.randint(0, config.snf_max_dim)
            ok, detail = _snf_holds(generator.matrix(nrows, ncols))
            report.add("snf", f"{spec.short_name} #{sample} {nrows}×{ncols}", ok, **detail)
    return report


def _two_term_complexes(config: BatteryConfig) -> List[ChainComplex]:
    return [ChainComplex.two_term(m) for m in two_term_matrices(_integers(), config.two_term_rank,
                                                                  config.two_term_bound)]


def weight_axiom_suite(config: BatteryConfig) -> VerificationReport:
    """
    两项复形穷举加随机有界复形；正交性按批次成对检查

    Exhaustive two-term complexes plus random bounded complexes; orthogonality
    is checked pairwise within batches
    """
    report = VerificationReport("weight-axioms")
    generator = SampleGenerator(_integers(), seed=config.seed)
    samples = _two_term_complexes(config) + [generator.complex() for _ in range(config.random_complexes)]
    n_range = range(config.axiom_n_min, config.axiom_n_max + 1)
    for start in range(0, len(samples), config.axiom_batch):
        report.extend(verify_weight_axioms(samples[start:start + config.axiom_batch], n_range))
    report.note(f"{len(samples)} samples in batches of {config.axiom_batch}")
    return report


def _matrix_cone(f: Matrix) -> ChainComplex:
    spec = f.spec
    return cone(ChainMap(ChainComplex.concentrated(spec, 0, f.ncols), ChainComplex.concentrated(spec, 0, f.nrows),
                         {0: f}))


def two_term_classification(config: BatteryConfig) -> VerificationReport:
    """
    锥的同伦等价当且仅当 (非单位不变因子, 余核秩, 核秩) 相同

    Cones are homotopy equivalent iff (non-unit invariant factors, cokernel rank, kernel rank) agree

    每个样本与其不变量类的代表比较，代表之间两两比较。
    Every sample is compared with the representative of its invariant class
    and the representatives are compared pairwise.
    """
    report = VerificationReport("two-term-classification")
    representatives: Dict[Tuple[Any, ...], ChainComplex] = {}
    for f in two_term_matrices(_integers(), config.two_term_rank, config.two_term_bound):
        invariants = two_term_invariants(f)
        key = (tuple(str(d) for d in invariants.factors), invariants.cokernel_free_rank, invariants.kernel_rank)
        C = _matrix_cone(f)
        representative = representatives.setdefault(key, C)
        if representative is not C:
            report.add("same-invariants⇒heq", f"{f.to_strings()} key={key}", homotopy_equivalent(C, representative))
    keys = list(representatives)
    for a in range(len(keys)):
        for b in range(a + 1, len(keys)):
            equivalent = homotopy_equivalent(representatives[keys[a]], representatives[keys[b]])
            report.add("different-invariants⇒not-heq", f"{keys[a]} vs {keys[b]}", not equivalent)
    report.note(f"{len(keys)} invariant classes")
    return report


def _groups(config: BatteryConfig) -> List[FpModule]:
    return list(abelian_groups(config.group_max_factor, config.group_max_free, config.group_max_torsion))


def pd_weight_correspondence(config: BatteryConfig) -> VerificationReport:
    """放置的自由分解的权范围为 (0, pd) | The placed free resolution has weight range (0, pd)"""
    report = VerificationReport("pd-weight")
    for M in _groups(config):
        pd = projective_dimension(M)
        expected = None if pd is ProjectiveDimension.MINUS_INFINITY else (0, int(pd))
        actual = weight_range(placed_resolution(M, 0))
        report.add("weight-range=(0,pd)", M.describe(), actual == expected, pd=str(pd), weight_range=actual)
    return report


def contra_oracle_agreement(config: BatteryConfig) -> VerificationReport:
    """判定与截断 lim/lim¹ 谕示一致，证书可复验 | Verdict matches the truncated lim/lim¹ oracle, certificates re-verify"""
    report = VerificationReport("contra-oracle")
    spec = _integers()
    for M in _groups(config):
        for value in config.contra_elements:
            s = spec.element(value)
            certificate = is_s_contramodule(M, s)
            oracle = tower_limits(M, s)
            subject = f"{M.describe()} s={s}"
            report.add("oracle-agreement", subject, certificate.verdict == oracle.is_contramodule,
                       verdict=certificate.verdict, oracle=oracle.is_contramodule)
            report.add("certificate", subject, verify_certificate(M, certificate), kind=certificate.kind.value)
    return report


def _heart_tests(config: BatteryConfig) -> List[FpModule]:
    return list(abelian_groups(config.heart_max_factor, max_free=config.heart_max_free,
                               max_torsion=config.heart_max_torsion))


def heart_predicate_equivalence(config: BatteryConfig) -> VerificationReport:
    """双射路径与锥正交路径一致 | The bijectivity path agrees with the cone-orthogonality path"""
    report = VerificationReport("heart-equivalence")
    spec = _integers()
    tests = _heart_tests(config)
    for sigma in nonsingular_matrices(spec, config.family_rank, config.family_bound):
        family = MatrixFamily(spec, (sigma,))
        for N in tests:
            direct = heart_membership(N, family).verdict
            via_cone = heart_membership_via_cone(N, family).verdict
            report.add("bijective⇔orthogonal", f"σ={sigma.to_strings()} N={N.describe()}", direct == via_cone,
                       direct=direct, via_cone=via_cone)
    return report


def _member_oracle(spec: LocalizationSpec) -> Callable[[FpModule], bool]:
    """与 heart_membership 独立的逐次判定 | Per-degree test independent of heart_membership"""
    if isinstance(spec, Telescope):
        return lambda H: all(tower_limits(H, s).is_contramodule for s in spec.gens)
    return lambda H: heart_membership_via_cone(H, spec).verdict


def _local_pools(spec: LocalizationSpec) -> Tuple[List[FpModule], List[FpModule]]:
    Z = _integers()
    if isinstance(spec, Telescope):
        members, others = (2, 4, 8, 16), (0, 3, 6, 10)
    else:
        members, others = (3, 5, 9, 15), (0, 2, 6, 4)
    return [FpModule.cyclic(Z, d) for d in members], [FpModule.cyclic(Z, d) for d in others]


def local_complex_criterion(config: BatteryConfig) -> VerificationReport:
    """
    is_local_complex 与逐次同调的心成员判定一致，正反例都出现

    is_local_complex agrees with per-degree heart membership of the
    homology, with both positive and negative instances
    """
    report = VerificationReport("local-complex")
    Z = _integers()
    specs: List[LocalizationSpec] = [Telescope(Z, (Z.element(2),)), MatrixFamily(Z, (Matrix.from_rows(Z, [[2]]),))]
    rng = random.Random(config.seed)
    polarity = {True: 0, False: 0}
    for index in range(config.local_complexes):
        spec = specs[index % len(specs)]
        members, others = _local_pools(spec)
        pieces = []
        for degree in range(rng.randint(-1, 0), rng.randint(1, 2)):
            pool = members if index % 4 < 2 or rng.random() < 0.6 else others
            pieces.append(placed_resolution(rng.choice(pool), degree))
        M = direct_sum(*pieces)
        oracle = _member_oracle(spec)
        expected = all(oracle(homology(M, i)) for i in M.degrees())
        verdict = is_local_complex(M, spec).verdict
        polarity[verdict] += 1
        report.add("local⇔homology-in-heart", f"#{index} {spec.variant} ranks={list(M.ranks)}",
                   verdict == expected, verdict=verdict, expected=expected)
    report.add("both-polarities", "constructed complexes", polarity[True] > 0 and polarity[False] > 0,
               positive=polarity[True], negative=polarity[False])
    return report


def commuting_square(config: BatteryConfig) -> VerificationReport:
    """望远镜与矩阵族两类规格上的交换方块 | The commuting square for telescope and matrix-family specs"""
    report = VerificationReport("commuting-square")
    Z = _integers()
    tests = [FpModule.cyclic(Z, d) for d in config.square_tests]
    for g in config.square_gens:
        spec = Telescope(Z, (Z.element(g),))
        for k in config.square_ranks:
            report.extend(verify_square(k, spec, tests, n_max=config.n_max))
    families = [
        (MatrixFamily(Z, (Matrix.from_rows(Z, [[2]]),)), (3, 5, 9)),
        (MatrixFamily(Z, (Matrix.from_rows(Z, [[1, 1], [0, 3]]),)), (2, 4, 5, 25)),
    ]
    for family, orders in families:
        family_tests = [FpModule.cyclic(Z, d) for d in orders]
        for k in config.square_ranks:
            report.extend(verify_square(k, family, family_tests, n_max=config.n_max))
    return report


def heart_projectives(config: BatteryConfig) -> VerificationReport:
    """Hom(Δ(R^k), −) 在心中短正合列上正合 | Hom(Δ(R^k), −) is exact on heart sequences"""
    report = VerificationReport("heart-projectives")
    Z = _integers()
    for index, gens in enumerate(((2,), (3,), (4, 6))):
        spec = Telescope(Z, tuple(Z.element(g) for g in gens))
        sequences = heart_sequences(Z, spec.gens, config.projective_sequences, seed=config.seed + index)
        report.extend(verify_heart_projectives(spec, config.projective_k_max, sequences))
    return report


def flatness(config: BatteryConfig) -> VerificationReport:
    """Tor₁(R[s⁻¹], M) = 0 的回代证明 | Back-substitution proof of Tor₁(R[s⁻¹], M) = 0"""
    report = VerificationReport("flatness")
    Z = _integers()
    generator = SampleGenerator(Z, seed=config.seed)
    samples = [generator.module() for _ in range(config.flatness_samples)]
    for value in config.flatness_elements:
        report.extend(verify_flatness(Z.element(value), samples, spec=Z))
    return report


def cross_path_consistency(config: BatteryConfig) -> VerificationReport:
    """单生成元望远镜：心路径、反模路径与谕示一致 | Single-generator telescope: heart path, contra path and oracle agree"""
    report = VerificationReport("cross-path")
    Z = _integers()
    for M in _groups(config):
        for value in config.contra_elements:
            s = Z.element(value)
            heart = heart_membership(M, Telescope(Z, (s,))).verdict
            contra = is_s_contramodule(M, s).verdict
            oracle = tower_limits(M, s).is_contramodule
            report.add("heart=contra=oracle", f"{M.describe()} s={s}", heart == contra == oracle,
                       heart=heart, contra=contra, oracle=oracle)
    return report


Criterion: TypeAlias = Callable[[BatteryConfig], VerificationReport]

# 固定顺序的准则表 | Criteria in their fixed order
CRITERIA: Sequence[Tuple[str, Criterion]] = (
    ("1-snf-soundness", snf_soundness),
    ("2-weight-axioms", weight_axiom_suite),
    ("3-two-term-classification", two_term_classification),
    ("4-pd-weight", pd_weight_correspondence),
    ("5-contra-oracle", contra_oracle_agreement),
    ("6-heart-equivalence", heart_predicate_equivalence),
    ("7-local-complex", local_complex_criterion),
    ("8-commuting-square", commuting_square),
    ("9-heart-projectives", heart_projectives),
    ("10-flatness", flatness),
    ("11-cross-path", cross_path_consistency),
)


def run_criteria(config: BatteryConfig, jobs: int = 1,
                 selected: Optional[Sequence[str]] = None) -> List[Tuple[str, VerificationReport]]:
    """
    求值准则，结果顺序与 CRITERIA 相同

    Evaluate the criteria; results come back in the order of CRITERIA
    """
    chosen = [(name, criterion) for name, criterion in CRITERIA if selected is None or name in selected]
    if jobs <= 1:
        reports = [criterion(config) for _, criterion in chosen]
    else:
        # 工作线程沿用调用方的语言上下文 | Workers keep the caller's language context
        contexts = [contextvars.copy_context() for _ in chosen]
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(lambda pair: pair[0].run(pair[1][1], config), zip(contexts, chosen)))
    return [(name, report) for (name, _), report in zip(chosen, reports)]


def run_battery(config: BatteryConfig, jobs: int = 1,
                selected: Optional[Sequence[str]] = None) -> VerificationReport:
    """
    运行验收电池并汇总：每项准则一条检查，附带前几个失败条目

    Run the acceptance battery and aggregate: one check per criterion with
    its first few failures attached
    """
    battery = VerificationReport("acceptance")
    for name, report in run_criteria(config, jobs=jobs, selected=selected):
        battery.add(
            name, report.title, report.passed,
            total=len(report.checks),
            failed=len(report.failures),
            failures=[failure.to_dict() for failure in report.failures[:FAILURE_SAMPLES]],
        )
        battery.notes.extend(f"{name}: {note}" for note in report.notes)
    battery.log_summary(logger)
    return battery
