"""
weightkit 输入文档

Input documents

一个文档声明一个系数环、若干具名对象和一条命令：

    {
      "ring": "Z",
      "declarations": {
        "M": {"type": "module", "value": {"orders": [8]}},
        "s": {"type": "element", "value": "2"}
      },
      "command": {"verb": "contra", "args": {"module": "M", "s": "s"}, "expect": true}
    }

A document declares a coefficient ring, some named objects and one command.
Declarations are decoded and checked at load time; every name a command
refers to must be declared.
"""

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple
from typing_extensions import TypeAlias

from ..complexes import ChainComplex, ChainMap
from ..contra import ContraCertificate
from ..hearts import LocalizationSpec, parse_localization_spec
from ..ring import RingSpec
from ..utils import DocumentCoder
from ..common.exceptions import DeclarationError, InputError, WeightKitError

# 全部命令动词 | Every command verb
VERBS: Tuple[str, ...] = (
    "snf", "solve", "module-nf", "hom", "ext1", "tor1", "pd",
    "truncate-w", "truncate-t", "cone", "minimize", "heq", "homology", "weight-range",
    "contra", "ideal-contra", "complete", "reduce", "flatness",
    "localize", "heart", "heart-cone", "local-complex", "square", "projectives",
    "verify-axioms", "verify-all", "check-certificate",
)

# 取值总是声明名（或声明名列表）的参数 | Arguments whose values are always declaration names (or lists of them)
REFERENCE_ARGS = frozenset({
    "matrix", "rhs", "module", "other", "complex", "map", "spec",
    "tests", "samples", "certificate",
})


@dataclass(frozen=True)
class Declaration:
    """
    具名声明；相等性按规范化后的载荷比较

    Named declaration; equality compares the canonical payload
    """

    name: str
    kind: str
    payload: Any
    value: Any = field(compare=False, repr=False)

    def to_dict(self) -> Dict[str, Any]:
        return {"type": self.kind, "value": self.payload}


@dataclass(frozen=True)
class Command:
    verb: str
    args: Dict[str, Any] = field(default_factory=dict)
    expect: Optional[bool] = None

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"verb": self.verb, "args": self.args}
        if self.expect is not None:
            data["expect"] = self.expect
        return data


@dataclass(frozen=True)
class InputDocument:
    """
    完全校验过的输入文档

    Fully validated input document
    """

    ring: RingSpec
    declarations: Dict[str, Declaration]
    command: Command

    def lookup(self, name: str, kind: Optional[str] = None) -> Any:
        """
        按名称取出声明的对象

        Raises:
            DeclarationError: 未声明或类型不符 | Undeclared or of the wrong type
        """
        declaration = self.declarations.get(name)
        if declaration is None:
            raise DeclarationError(name, cn="未声明", en="not declared")
        if kind is not None and declaration.kind != kind:
            raise DeclarationError(
                name,
                cn=f"类型为 {declaration.kind}，需要 {kind}",
                en=f"has type {declaration.kind}, {kind} is required"
            )
        return declaration.value

    def to_dict(self) -> Dict[str, Any]:
        return {
            "ring": self.ring.short_name,
            "declarations": {name: d.to_dict() for name, d in sorted(self.declarations.items())},
            "command": self.command.to_dict(),
        }


# --- 声明解码器 | Declaration decoders ---
# 每个解码器返回 (对象, 规范载荷) | Every decoder returns (object, canonical payload)

Decoder: TypeAlias = Callable[[RingSpec, Any, Dict[str, Declaration]], Tuple[Any, Any]]


def _decode_matrix(spec: RingSpec, raw: Any, _: Dict[str, Declaration]) -> Tuple[Any, Any]:
    matrix = DocumentCoder.decode_matrix(spec, raw)
    return matrix, DocumentCoder.encode_matrix(matrix)


def _decode_module(spec: RingSpec, raw: Any, _: Dict[str, Declaration]) -> Tuple[Any, Any]:
    module = DocumentCoder.decode_module(spec, raw)
    return module, DocumentCoder.encode_module(module)


def _decode_complex(spec: RingSpec, raw: Any, _: Dict[str, Declaration]) -> Tuple[Any, Any]:
    complex_ = DocumentCoder.decode_complex(spec, raw)
    return complex_, DocumentCoder.encode_complex(complex_)


def _decode_spec(spec: RingSpec, raw: Any, _: Dict[str, Declaration]) -> Tuple[Any, Any]:
    localization: LocalizationSpec = parse_localization_spec(spec, raw)
    return localization, localization.to_dict()


def _decode_element(spec: RingSpec, raw: Any, _: Dict[str, Declaration]) -> Tuple[Any, Any]:
    element = DocumentCoder.decode_element(spec, raw)
    return element, DocumentCoder.encode_element(element)


def _decode_hom(spec: RingSpec, raw: Any, _: Dict[str, Declaration]) -> Tuple[Any, Any]:
    h = DocumentCoder.decode_hom(spec, raw)
    return h, DocumentCoder.encode_hom(h)


def _decode_certificate(spec: RingSpec, raw: Any, _: Dict[str, Declaration]) -> Tuple[Any, Any]:
    certificate = ContraCertificate.from_dict(spec, raw)
    return certificate, certificate.to_dict()


def _decode_map(spec: RingSpec, raw: Any, known: Dict[str, Declaration]) -> Tuple[Any, Any]:
    """{"source": 复形名, "target": 复形名, "components": {...}} | complex names"""
    ends: List[ChainComplex] = []
    for end in ("source", "target"):
        name = raw[end]
        declaration = known.get(name)
        if declaration is None or declaration.kind != "complex":
            raise DeclarationError(
                name,
                cn=f"链映射的 {end} 必须是已声明的复形",
                en=f"The {end} of a chain map must be a declared complex"
            )
        ends.append(declaration.value)
    f: ChainMap = DocumentCoder.decode_chain_map(spec, raw, ends[0], ends[1])
    encoded = DocumentCoder.encode_chain_map(f)
    return f, {"source": raw["source"], "target": raw["target"], "components": encoded["components"]}


# 声明类型 → 解码器 | Declaration type → decoder
DECODERS: Dict[str, Decoder] = {
    "matrix": _decode_matrix,
    "module": _decode_module,
    "complex": _decode_complex,
    "spec": _decode_spec,
    "element": _decode_element,
    "hom": _decode_hom,
    "certificate": _decode_certificate,
    "map": _decode_map,
}


def _declare(spec: RingSpec, name: str, raw: Any, known: Dict[str, Declaration]) -> Declaration:
    if not isinstance(raw, dict) or "type" not in raw or "value" not in raw:
        raise DeclarationError(name, cn="声明需要 type 与 value 字段", en="a declaration needs type and value fields")
    kind = raw["type"]
    decoder = DECODERS.get(kind)
    if decoder is None:
        raise DeclarationError(
            name,
            cn=f"未知类型 {kind!r}（可选 {sorted(DECODERS)}）",
            en=f"unknown type {kind!r} (expected one of {sorted(DECODERS)})"
        )
    try:
        value, payload = decoder(spec, raw["value"], known)
    except DeclarationError:
        raise
    except WeightKitError as exc:
        raise DeclarationError(name, cn=exc.cn, en=exc.en) from exc
    except (KeyError, TypeError, ValueError) as exc:
        raise DeclarationError(name, cn=f"格式错误: {exc}", en=f"malformed value: {exc}") from exc
    return Declaration(name, kind, payload, value)


def _referenced_names(args: Dict[str, Any]) -> List[str]:
    names: List[str] = []
    for key, value in args.items():
        if key not in REFERENCE_ARGS:
            continue
        names.extend(value if isinstance(value, list) else [value])
    return names


def _command(raw: Any, declarations: Dict[str, Declaration], verb: Optional[str]) -> Command:
    raw = {} if raw is None and verb is not None else raw
    if not isinstance(raw, dict):
        raise InputError(cn="文档缺少 command", en="The document has no command")
    if verb is not None and raw.setdefault("verb", verb) != verb:
        raise InputError(
            cn=f"命令行动词 {verb!r} 与文档中的 {raw['verb']!r} 不一致",
            en=f"Command-line verb {verb!r} differs from the document's {raw['verb']!r}"
        )
    if "verb" not in raw:
        raise InputError(cn="文档缺少 command.verb", en="The document has no command.verb")
    verb = raw["verb"]
    if verb not in VERBS:
        raise InputError(cn=f"未知命令 {verb!r}", en=f"Unknown verb {verb!r}")
    args = raw.get("args", {})
    if not isinstance(args, dict):
        raise InputError(cn="command.args 必须是对象", en="command.args must be an object")
    for name in _referenced_names(args):
        if not isinstance(name, str) or name not in declarations:
            raise DeclarationError(str(name), cn="被命令引用但未声明", en="referenced by the command but not declared")
    expect = raw.get("expect")
    return Command(verb, args, None if expect is None else bool(expect))


def parse(text: str, verb: Optional[str] = None) -> InputDocument:
    """
    解析并校验输入文档

    Parse and validate an input document

    Args:
        text: JSON 文本 | JSON text
        verb: 命令行给出的动词；文档可以省略 command | Verb given on the command line; the document may then omit command

    Raises:
        DocumentSyntaxError: JSON 语法错误（行、列） | JSON syntax error (line, column)
        DeclarationError: 声明无效或名称未声明 | Invalid declaration or undeclared name
        InputError: 缺少环或命令 | Missing ring or command
    """
    data = DocumentCoder.loads(text)
    if not isinstance(data, dict) or "ring" not in data:
        raise InputError(cn="文档缺少 ring 字段", en="The document has no ring field")
    try:
        ring = RingSpec.parse(data["ring"])
    except WeightKitError as exc:
        raise InputError(cn=exc.cn, en=exc.en) from exc
    declarations: Dict[str, Declaration] = {}
    raw_declarations = data.get("declarations", {})
    if not isinstance(raw_declarations, dict):
        raise InputError(cn="declarations 必须是对象", en="declarations must be an object")
    # 链映射最后解码，以便引用任意复形 | Chain maps are decoded last so they can refer to any complex
    ordered = sorted(raw_declarations.items(), key=lambda item: isinstance(item[1], dict) and item[1].get("type") == "map")
    for name, raw in ordered:
        declarations[name] = _declare(ring, name, raw, declarations)
    return InputDocument(ring, declarations, _command(data.get("command"), declarations, verb))


def serialize(document: InputDocument) -> str:
    """规范文本；parse(serialize(doc)) == doc | Canonical text; parse(serialize(doc)) == doc"""
    return DocumentCoder.dumps(document.to_dict())
