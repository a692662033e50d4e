"""
weightkit JSON 文档编解码器

weightkit JSON Document Encoder/Decoder

在 JSON 值与引擎对象（环元素、矩阵、有限表现模、复形、链映射）之间转换。
编码输出只含字符串、整数、列表与字典，并按键排序，保证同一对象的编码逐字节相同。

Converts between JSON values and engine objects (ring elements, matrices,
finitely presented modules, complexes, chain maps). Encoded output holds
only strings, integers, lists and dicts, with sorted keys, so the same
object always encodes to the same bytes.
"""

import json
from typing import Any, Dict, List, Sequence

from ..complexes import ChainComplex, ChainMap
from ..modules import FpModule, ModuleHom
from ..ring import Matrix, RingElement, RingSpec
from ..common.exceptions import DocumentSyntaxError, ValidationError


class DocumentCoder:
    """
    JSON 文档编解码器

    所有方法均为静态方法；解码时的类型错误统一抛出 ValidationError，
    由调用方补上出错的声明名。

    JSON document encoder/decoder

    Every method is static; type errors while decoding raise ValidationError
    and the caller attaches the offending declaration name.
    """

    INDENT = 2  # 输出缩进 | Output indentation

    # --- 文本 | Text ---

    @staticmethod
    def loads(text: str) -> Any:
        """
        解析 JSON 文本 | Parse JSON text

        Raises:
            DocumentSyntaxError: 语法错误，带行列号 | Syntax error with line and column
        """
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise DocumentSyntaxError(exc.lineno, exc.colno, exc.msg) from exc

    @staticmethod
    def dumps(value: Any) -> str:
        return json.dumps(value, indent=DocumentCoder.INDENT, sort_keys=True, ensure_ascii=False)

    # --- 元素与矩阵 | Elements and matrices ---

    @staticmethod
    def encode_element(value: RingElement) -> str:
        return str(value)

    @staticmethod
    def decode_element(spec: RingSpec, value: Any) -> RingElement:
        return spec.element(value)

    @staticmethod
    def encode_matrix(matrix: Matrix) -> Dict[str, Any]:
        return {"rows": matrix.nrows, "cols": matrix.ncols, "entries": matrix.to_strings()}

    @staticmethod
    def decode_matrix(spec: RingSpec, value: Any) -> Matrix:
        """
        接受行列表，或带显式形状的 {"rows", "cols", "entries"}（空矩阵需要后者）

        Accepts a list of rows, or {"rows", "cols", "entries"} with an explicit
        shape (needed for empty matrices)
        """
        if isinstance(value, list):
            return Matrix.from_rows(spec, value)
        if isinstance(value, dict) and "entries" in value:
            nrows, ncols = int(value.get("rows", len(value["entries"]))), value.get("cols")
            matrix = Matrix.from_rows(spec, value["entries"], ncols=ncols)
            if matrix.nrows != nrows:
                raise ValidationError(
                    cn=f"矩阵声明 {nrows} 行，实际 {matrix.nrows} 行",
                    en=f"Matrix declares {nrows} rows but has {matrix.nrows}"
                )
            return matrix
        raise ValidationError(cn=f"无法解释为矩阵: {value!r}", en=f"Cannot be read as a matrix: {value!r}")

    # --- 模与同态 | Modules and homomorphisms ---

    @staticmethod
    def encode_module(module: FpModule) -> Dict[str, Any]:
        return {"generators": module.generators, "relations": module.relations.to_strings()}

    @staticmethod
    def decode_module(spec: RingSpec, value: Dict[str, Any]) -> FpModule:
        """
        {"orders": [...]}（0 表示自由项）或 {"generators": b, "relations": [[...], ...]}

        {"orders": [...]} (0 for a free summand) or {"generators": b, "relations": [[...], ...]}
        """
        if "orders" in value:
            return FpModule.from_cyclic_orders(spec, value["orders"])
        if "generators" not in value:
            raise ValidationError(
                cn="模需要 orders 或 generators 字段",
                en="A module needs an orders or generators field"
            )
        return FpModule.from_relations(spec, value.get("relations", []), generators=int(value["generators"]))

    @staticmethod
    def encode_hom(h: ModuleHom) -> Dict[str, Any]:
        return {
            "source": DocumentCoder.encode_module(h.source),
            "target": DocumentCoder.encode_module(h.target),
            "matrix": DocumentCoder.encode_matrix(h.matrix),
        }

    @staticmethod
    def decode_hom(spec: RingSpec, value: Dict[str, Any]) -> ModuleHom:
        source = DocumentCoder.decode_module(spec, value["source"])
        target = DocumentCoder.decode_module(spec, value["target"])
        matrix = DocumentCoder.decode_matrix(spec, value["matrix"])
        return ModuleHom(source, target, matrix)

    # --- 复形与链映射 | Complexes and chain maps ---

    @staticmethod
    def encode_complex(M: ChainComplex) -> Dict[str, Any]:
        return {
            "low": M.low,
            "ranks": list(M.ranks),
            "differentials": [DocumentCoder.encode_matrix(d) for d in M.differentials],
        }

    @staticmethod
    def decode_complex(spec: RingSpec, value: Dict[str, Any]) -> ChainComplex:
        """
        {"low": a, "ranks": [...], "differentials": [...]}；缺省微分为零

        {"low": a, "ranks": [...], "differentials": [...]}; missing differentials are zero

        Raises:
            ComplexError: 形状不符或 d∘d ≠ 0（带次数） | Shape mismatch or d∘d ≠ 0 (with the degree)
        """
        ranks: List[int] = [int(r) for r in value["ranks"]]
        low = int(value.get("low", 0))
        raw = value.get("differentials")
        if raw is None:
            raw = [[] for _ in range(max(len(ranks) - 1, 0))]
        differentials: Sequence[Matrix] = [
            DocumentCoder._decode_differential(spec, d, ranks[k + 1] if k + 1 < len(ranks) else 0, ranks[k])
            for k, d in enumerate(raw)
        ]
        return ChainComplex(spec, low, tuple(ranks), tuple(differentials))

    @staticmethod
    def _decode_differential(spec: RingSpec, value: Any, nrows: int, ncols: int) -> Matrix:
        if isinstance(value, list) and not value:
            return Matrix.zeros(spec, nrows, ncols)
        if isinstance(value, list):
            return Matrix.from_rows(spec, value, ncols=ncols)
        return DocumentCoder.decode_matrix(spec, value)

    @staticmethod
    def encode_chain_map(f: ChainMap) -> Dict[str, Any]:
        return {
            "source": DocumentCoder.encode_complex(f.source),
            "target": DocumentCoder.encode_complex(f.target),
            "components": {str(i): DocumentCoder.encode_matrix(m) for i, m in sorted(f.components.items())},
        }

    @staticmethod
    def decode_chain_map(spec: RingSpec, value: Dict[str, Any], source: ChainComplex,
                         target: ChainComplex) -> ChainMap:
        components = {}
        for degree, raw in value.get("components", {}).items():
            i = int(degree)
            components[i] = DocumentCoder._decode_differential(spec, raw, target.rank(i), source.rank(i))
        return ChainMap(source, target, components)
