"""
weightkit 命令分发器

Command dispatcher

每个动词对应一个处理器：从文档中取出参数，调用相应的模块运算，把判定、
见证与证书装入 Outcome。前置条件错误原样向上抛出。

Every verb maps to a handler that takes its arguments from the document,
calls the module operation and packs verdicts, witnesses and certificates
into an Outcome. Precondition errors propagate unchanged.
"""

import time
from typing import Any, Callable, Dict, List

from .. import __version__
from .battery import BatteryConfig, run_battery
from .document import InputDocument
from .report import Outcome, Report
from ..complexes import (
    ChainComplex,
    ChainMap,
    cone,
    homology_profile,
    homotopy_equivalent,
    minimize,
    t_truncate,
    verify_weight_axioms,
    weight_range,
    weight_truncate,
)
from ..contra import (
    ContraCertificate,
    delta_completion,
    is_ideal_contramodule,
    is_localization_contramodule,
    is_s_contramodule,
    reduce_completed,
    tower_limits,
    verify_certificate,
    verify_flatness,
)
from ..hearts import (
    LocalizationSpec,
    LocalizedRing,
    MatrixFamily,
    Telescope,
    heart_membership,
    heart_membership_via_cone,
    is_local_complex,
    universal_localization,
    verify_heart_projectives,
    verify_square,
)
from ..modules import (
    FpModule,
    ext1,
    ext1_presentation,
    hom_module,
    hom_presentation,
    projective_dimension,
    tor1,
    tor1_presentation,
)
from ..ring import Matrix, RingElement, RingSpec, linear_solve, smith_normal_form
from ..utils import DocumentCoder, SampleGenerator, heart_sequences
from ..common.checks import VerificationReport
from ..common.exceptions import InputError, WeightKitError
from ..common.logging import get_logger

logger = get_logger("cli.dispatcher")

_MISSING = object()


class CommandContext:
    """
    命令参数的类型化访问器

    Typed accessors for command arguments
    """

    def __init__(self, document: InputDocument, level: int = 6, seed: int = 0, jobs: int = 1) -> None:
        self.document = document
        self.level = level
        self.seed = seed
        self.jobs = jobs

    @property
    def spec(self) -> RingSpec:
        return self.document.ring

    @property
    def args(self) -> Dict[str, Any]:
        return self.document.command.args

    def arg(self, key: str, default: Any = _MISSING) -> Any:
        if key in self.args:
            return self.args[key]
        if default is _MISSING:
            raise InputError(
                cn=f"命令 {self.document.command.verb} 缺少参数 {key}",
                en=f"Verb {self.document.command.verb} needs the argument {key}"
            )
        return default

    def has(self, key: str) -> bool:
        return key in self.args

    def matrix(self, key: str = "matrix") -> Matrix:
        return self.document.lookup(self.arg(key), "matrix")

    def module(self, key: str = "module") -> FpModule:
        return self.document.lookup(self.arg(key), "module")

    def modules(self, key: str) -> List[FpModule]:
        names = self.arg(key)
        return [self.document.lookup(name, "module") for name in (names if isinstance(names, list) else [names])]

    def complex(self, key: str = "complex") -> ChainComplex:
        return self.document.lookup(self.arg(key), "complex")

    def complexes(self, key: str) -> List[ChainComplex]:
        names = self.arg(key)
        return [self.document.lookup(name, "complex") for name in (names if isinstance(names, list) else [names])]

    def chain_map(self, key: str = "map") -> ChainMap:
        return self.document.lookup(self.arg(key), "map")

    def localization(self, key: str = "spec") -> LocalizationSpec:
        return self.document.lookup(self.arg(key), "spec")

    def certificate(self, key: str = "certificate") -> ContraCertificate:
        return self.document.lookup(self.arg(key), "certificate")

    def element(self, key: str = "s", default: Any = _MISSING) -> RingElement:
        """声明名或字面值 | A declaration name or a literal"""
        return self._element(self.arg(key, default))

    def elements(self, key: str = "gens") -> List[RingElement]:
        values = self.arg(key)
        return [self._element(v) for v in (values if isinstance(values, list) else [values])]

    def _element(self, raw: Any) -> RingElement:
        declaration = self.document.declarations.get(raw) if isinstance(raw, str) else None
        if declaration is not None and declaration.kind == "element":
            return declaration.value
        try:
            return self.spec.element(raw)
        except (WeightKitError, TypeError, ValueError) as exc:
            raise InputError(cn=f"无法解析环元素 {raw!r}", en=f"Cannot parse ring element {raw!r}") from exc

    def integer(self, key: str, default: Any = _MISSING) -> int:
        value = self.arg(key, default)
        if isinstance(value, bool) or not isinstance(value, int):
            raise InputError(cn=f"参数 {key} 必须是整数", en=f"Argument {key} must be an integer")
        return value


# =========================================================================
# 环与模 | Ring and modules
# =========================================================================

def _snf(ctx: CommandContext) -> Outcome:
    snf = smith_normal_form(ctx.matrix())
    encode = DocumentCoder.encode_matrix
    return Outcome(result={
        "D": encode(snf.D),
        "U": encode(snf.U),
        "V": encode(snf.V),
        "U_inv": encode(snf.U_inv),
        "V_inv": encode(snf.V_inv),
        "invariant_factors": [str(d) for d in snf.invariant_factors],
        "rank": snf.rank,
    })


def _solve(ctx: CommandContext) -> Outcome:
    solution = linear_solve(ctx.matrix(), ctx.matrix("rhs"))
    return Outcome(
        result={
            "solution": DocumentCoder.encode_matrix(solution.solution) if solution.solvable else None,
            "kernel": DocumentCoder.encode_matrix(solution.kernel),
        },
        verdict=solution.solvable,
    )


def _module_nf(ctx: CommandContext) -> Outcome:
    M = ctx.module()
    return Outcome(result={
        "module": M.describe(),
        "invariant_factors": [str(d) for d in M.invariant_factors],
        "free_rank": M.free_rank,
        "normalized": DocumentCoder.encode_module(M.normalize()),
    })


# 函子名 → (表格路径, 表现路径) | Functor name → (table path, presentation path)
_FUNCTORS: Dict[str, Any] = {
    "hom": (hom_module, lambda M, N: hom_presentation(M, N)[0]),
    "ext1": (ext1, ext1_presentation),
    "tor1": (tor1, tor1_presentation),
}


def _functor(name: str) -> Callable[[CommandContext], Outcome]:
    table, presentation = _FUNCTORS[name]

    def handler(ctx: CommandContext) -> Outcome:
        M, N = ctx.module(), ctx.module("other")
        value, cross = table(M, N), presentation(M, N)
        checks = VerificationReport(name)
        checks.add("table≅presentation", f"{M.describe()}, {N.describe()}",
                   value == cross, table=value.describe(), presentation=cross.describe())
        return Outcome(
            result={"module": DocumentCoder.encode_module(value), "describe": value.describe()},
            verdict=checks.passed,
            checks=checks,
        )

    return handler


def _pd(ctx: CommandContext) -> Outcome:
    M = ctx.module()
    return Outcome(result={"module": M.describe(), "pd": str(projective_dimension(M))})


# =========================================================================
# 复形 | Complexes
# =========================================================================

def _truncate(function: Callable[..., Any]) -> Callable[[CommandContext], Outcome]:
    def handler(ctx: CommandContext) -> Outcome:
        M, n = ctx.complex(), ctx.integer("n", 0)
        pieces = function(M, n)
        return Outcome(result={
            "n": n,
            "lower": DocumentCoder.encode_complex(pieces.lower),
            "upper": DocumentCoder.encode_complex(pieces.upper),
            "inclusion": DocumentCoder.encode_chain_map(pieces.inclusion)["components"],
            "projection": DocumentCoder.encode_chain_map(pieces.projection)["components"],
            "homology": {
                "lower": {str(i): H.describe() for i, H in homology_profile(pieces.lower).items()},
                "upper": {str(i): H.describe() for i, H in homology_profile(pieces.upper).items()},
            },
        })

    return handler


def _cone(ctx: CommandContext) -> Outcome:
    return Outcome(result={"cone": DocumentCoder.encode_complex(cone(ctx.chain_map()))})


def _minimize(ctx: CommandContext) -> Outcome:
    model = minimize(ctx.complex())
    return Outcome(
        result={
            "minimal": DocumentCoder.encode_complex(model.complex),
            "eliminated": model.eliminated,
            "forward": DocumentCoder.encode_chain_map(model.forward)["components"],
            "backward": DocumentCoder.encode_chain_map(model.backward)["components"],
        },
        verdict=model.verify(),
        certificates=[model.source_homotopy.to_dict(), model.target_homotopy.to_dict()],
    )


def _heq(ctx: CommandContext) -> Outcome:
    return Outcome(verdict=homotopy_equivalent(ctx.complex(), ctx.complex("other")))


def _homology(ctx: CommandContext) -> Outcome:
    profile = homology_profile(ctx.complex())
    return Outcome(result={
        "homology": {str(i): H.describe() for i, H in profile.items()},
        "modules": {str(i): DocumentCoder.encode_module(H) for i, H in profile.items()},
    })


def _weight_range(ctx: CommandContext) -> Outcome:
    value = weight_range(ctx.complex())
    return Outcome(result={"weight_range": None if value is None else list(value)})


# =========================================================================
# 反模 | Contramodules
# =========================================================================

def _contra(ctx: CommandContext) -> Outcome:
    C, s = ctx.module(), ctx.element()
    certificate = is_s_contramodule(C, s)
    return Outcome(
        result={
            "module": C.describe(),
            "s": str(s),
            "oracle": tower_limits(C, s).to_dict(),
            "reverified": verify_certificate(C, certificate),
        },
        verdict=certificate.verdict,
        certificates=[certificate.to_dict()],
    )


def _ideal_contra(ctx: CommandContext) -> Outcome:
    C, gens = ctx.module(), ctx.elements()
    certificate = is_ideal_contramodule(C, gens)
    result: Dict[str, Any] = {"module": C.describe(), "gens": [str(s) for s in gens], "vacuous": certificate.vacuous}
    if gens:
        result["localization_contramodule"] = is_localization_contramodule(C, gens).to_dict()
    return Outcome(result=result, verdict=certificate.verdict, certificates=[certificate.to_dict()])


def _complete(ctx: CommandContext) -> Outcome:
    return Outcome(result=delta_completion(ctx.module(), ctx.element()).to_dict())


def _reduce(ctx: CommandContext) -> Outcome:
    C, s, n = ctx.module(), ctx.element(), ctx.integer("n", ctx.level)
    reduced = reduce_completed(delta_completion(C, s), n)
    return Outcome(result={"n": n, "describe": reduced.describe(), "module": DocumentCoder.encode_module(reduced)})


def _flatness(ctx: CommandContext) -> Outcome:
    if ctx.has("samples"):
        samples = ctx.modules("samples")
    else:
        generator = SampleGenerator(ctx.spec, seed=ctx.seed)
        samples = [generator.cyclic_module() for _ in range(ctx.integer("count", 20))]
    checks = verify_flatness(ctx.element(), samples, spec=ctx.spec, depth=ctx.integer("depth", 3))
    return Outcome(verdict=checks.passed, checks=checks)


def _check_certificate(ctx: CommandContext) -> Outcome:
    C, certificate = ctx.module(), ctx.certificate()
    return Outcome(
        result={"module": C.describe(), "claimed": certificate.verdict},
        verdict=verify_certificate(C, certificate),
        certificates=[certificate.to_dict()],
    )


# =========================================================================
# 心 | Hearts
# =========================================================================

def _localized_ring(ctx: CommandContext) -> LocalizedRing:
    if ctx.has("spec"):
        spec = ctx.localization()
        if isinstance(spec, MatrixFamily):
            return universal_localization(spec)
        gens = list(spec.gens)
    else:
        gens = ctx.elements()
    product = ctx.spec.one()
    for s in gens:
        product = product * s
    return LocalizedRing(ctx.spec, product.canonical())


def _localize(ctx: CommandContext) -> Outcome:
    ring = _localized_ring(ctx)
    result: Dict[str, Any] = {"ring": ring.to_dict()}
    if ctx.has("module"):
        N = ctx.module()
        localized = ring.localize_module(N)
        result["module"] = {
            "source": N.describe(),
            "rank": localized.rank,
            "torsion": localized.torsion.describe(),
            "acts_invertibly": ring.acts_invertibly_on(N),
        }
    return Outcome(result=result)


def _heart(ctx: CommandContext) -> Outcome:
    certificate = heart_membership(ctx.module(), ctx.localization())
    return Outcome(verdict=certificate.verdict, certificates=[certificate.to_dict()])


def _heart_cone(ctx: CommandContext) -> Outcome:
    verdict = heart_membership_via_cone(ctx.module(), ctx.localization())
    return Outcome(result=verdict.to_dict(), verdict=verdict.verdict)


def _local_complex(ctx: CommandContext) -> Outcome:
    verdict = is_local_complex(ctx.complex(), ctx.localization())
    return Outcome(result=verdict.to_dict(), verdict=verdict.verdict)


def _square(ctx: CommandContext) -> Outcome:
    checks = verify_square(ctx.integer("k", 1), ctx.localization(), ctx.modules("tests"),
                           n_max=ctx.integer("n", ctx.level))
    return Outcome(verdict=checks.passed, checks=checks)


def _projectives(ctx: CommandContext) -> Outcome:
    spec = ctx.localization()
    gens = spec.gens if isinstance(spec, Telescope) else ()
    sequences = heart_sequences(ctx.spec, gens, ctx.integer("count", 20), seed=ctx.seed)
    checks = verify_heart_projectives(spec, ctx.integer("k", 2), sequences)
    return Outcome(verdict=checks.passed, checks=checks)


# =========================================================================
# 校验 | Verification
# =========================================================================

def _verify_axioms(ctx: CommandContext) -> Outcome:
    if ctx.has("samples"):
        samples = ctx.complexes("samples")
    else:
        generator = SampleGenerator(ctx.spec, seed=ctx.seed)
        samples = [generator.complex() for _ in range(ctx.integer("count", 20))]
    n_range = range(ctx.integer("n_min", -2), ctx.integer("n_max", 2) + 1)
    checks = verify_weight_axioms(samples, n_range)
    return Outcome(verdict=checks.passed, checks=checks)


def _verify_all(ctx: CommandContext) -> Outcome:
    config = BatteryConfig.from_args(ctx.args, seed=ctx.seed, n_max=ctx.level)
    checks = run_battery(config, jobs=ctx.jobs)
    return Outcome(result={"config": config.to_dict()}, verdict=checks.passed, checks=checks)


# 动词 → 处理器 | Verb → handler
HANDLERS: Dict[str, Callable[[CommandContext], Outcome]] = {
    "snf": _snf,
    "solve": _solve,
    "module-nf": _module_nf,
    "hom": _functor("hom"),
    "ext1": _functor("ext1"),
    "tor1": _functor("tor1"),
    "pd": _pd,
    "truncate-w": _truncate(weight_truncate),
    "truncate-t": _truncate(t_truncate),
    "cone": _cone,
    "minimize": _minimize,
    "heq": _heq,
    "homology": _homology,
    "weight-range": _weight_range,
    "contra": _contra,
    "ideal-contra": _ideal_contra,
    "complete": _complete,
    "reduce": _reduce,
    "flatness": _flatness,
    "localize": _localize,
    "heart": _heart,
    "heart-cone": _heart_cone,
    "local-complex": _local_complex,
    "square": _square,
    "projectives": _projectives,
    "verify-axioms": _verify_axioms,
    "verify-all": _verify_all,
    "check-certificate": _check_certificate,
}


def run(document: InputDocument, level: int = 6, seed: int = 0, jobs: int = 1) -> Report:
    """
    执行文档中的命令并生成报告

    Run the document's command and build the report

    Args:
        document: 已校验的输入文档 | Validated input document
        level: 约化层数上限 N_max | Highest reduction level N_max
        seed: 生成样本的种子 | Seed for generated samples
        jobs: 电池的并行线程数 | Thread count for the battery

    Raises:
        WeightKitError: 输入或前置条件错误，原样抛出 | Input or precondition errors, unchanged
    """
    verb = document.command.verb
    handler = HANDLERS[verb]
    logger.info(f"执行命令 {verb}", f"Running verb {verb}")
    started = time.perf_counter()
    outcome = handler(CommandContext(document, level=level, seed=seed, jobs=jobs))
    elapsed = time.perf_counter() - started
    logger.debug(f"命令 {verb} 用时 {elapsed:.3f} 秒", f"Verb {verb} took {elapsed:.3f} s")
    return Report(document.command, document.ring.short_name, __version__, outcome, elapsed)
