"""
weightkit 系数环规格

Coefficient ring specification
"""

import re
from enum import Enum
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Union

from sympy import isprime

from .arithmetic import (
    EuclideanArithmetic,
    IntegerArithmetic,
    PolynomialArithmetic,
    PrimeFieldArithmetic,
    RationalArithmetic,
)
from ..common.exceptions import ValidationError


class RingKind(str, Enum):
    """
    支持的欧几里得整环种类

    Supported kinds of Euclidean domain
    """
    INTEGERS = "integers"
    RATIONALS = "rationals"
    PRIME_FIELD = "prime_field"
    POLY_PRIME_FIELD = "poly_prime_field"
    POLY_RATIONALS = "poly_rationals"

    @property
    def needs_prime(self) -> bool:
        return self in (RingKind.PRIME_FIELD, RingKind.POLY_PRIME_FIELD)


_SHORT_NAME = re.compile(r"^\s*(?:GF|F)\((\d+)\)\s*(\[x\])?\s*$")


@dataclass(frozen=True)
class RingSpec:
    """
    当前使用的系数环

    Z、Q、F_p、F_p[x]、Q[x] 之一；p 在构造时检查为素数。

    The active coefficient ring

    One of Z, Q, F_p, F_p[x], Q[x]; p is checked to be prime at construction.
    """

    kind: RingKind
    p: Optional[int] = None
    _arithmetic: EuclideanArithmetic = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        kind = RingKind(self.kind)
        object.__setattr__(self, "kind", kind)
        if kind.needs_prime:
            if not isinstance(self.p, int) or self.p < 2 or not isprime(self.p):
                raise ValidationError(
                    cn=f"p 必须是素数，收到: {self.p!r}",
                    en=f"p must be prime, got: {self.p!r}"
                )
        elif self.p is not None:
            raise ValidationError(
                cn=f"{kind.value} 不接受参数 p",
                en=f"{kind.value} takes no parameter p"
            )
        object.__setattr__(self, "_arithmetic", self._make_arithmetic())

    def _make_arithmetic(self) -> EuclideanArithmetic:
        if self.kind is RingKind.INTEGERS:
            return IntegerArithmetic()
        if self.kind is RingKind.RATIONALS:
            return RationalArithmetic()
        if self.kind is RingKind.PRIME_FIELD:
            return PrimeFieldArithmetic(self.p)
        if self.kind is RingKind.POLY_PRIME_FIELD:
            return PolynomialArithmetic(PrimeFieldArithmetic(self.p), modulus=self.p)
        return PolynomialArithmetic(RationalArithmetic())

    # --- 构造器 | Constructors ---

    @classmethod
    def integers(cls) -> "RingSpec":
        return cls(RingKind.INTEGERS)

    @classmethod
    def rationals(cls) -> "RingSpec":
        return cls(RingKind.RATIONALS)

    @classmethod
    def prime_field(cls, p: int) -> "RingSpec":
        return cls(RingKind.PRIME_FIELD, p)

    @classmethod
    def poly_prime_field(cls, p: int) -> "RingSpec":
        return cls(RingKind.POLY_PRIME_FIELD, p)

    @classmethod
    def poly_rationals(cls) -> "RingSpec":
        return cls(RingKind.POLY_RATIONALS)

    @classmethod
    def parse(cls, value: Union[str, Dict[str, Any], "RingSpec"]) -> "RingSpec":
        """
        从短名（"Z", "Q", "GF(5)", "GF(2)[x]", "Q[x]"）或字典解析

        Parse from a short name ("Z", "Q", "GF(5)", "GF(2)[x]", "Q[x]") or a dict

        Raises:
            ValidationError: 无法识别的环 | Unrecognized ring
        """
        if isinstance(value, RingSpec):
            return value
        if isinstance(value, dict):
            try:
                return cls(RingKind(value["kind"]), value.get("p"))
            except (KeyError, ValueError):
                raise ValidationError(
                    cn=f"无法识别的环描述: {value!r}",
                    en=f"Unrecognized ring description: {value!r}"
                )
        text = str(value).strip()
        simple = {"Z": RingKind.INTEGERS, "Q": RingKind.RATIONALS, "Q[x]": RingKind.POLY_RATIONALS}
        if text in simple:
            return cls(simple[text])
        match = _SHORT_NAME.match(text)
        if match:
            kind = RingKind.POLY_PRIME_FIELD if match.group(2) else RingKind.PRIME_FIELD
            return cls(kind, int(match.group(1)))
        try:
            return cls(RingKind(text))
        except ValueError:
            raise ValidationError(
                cn=f"无法识别的环: {text!r}",
                en=f"Unrecognized ring: {text!r}"
            )

    # --- 属性 | Properties ---

    @property
    def arithmetic(self) -> EuclideanArithmetic:
        return self._arithmetic

    @property
    def is_field(self) -> bool:
        return self._arithmetic.is_field

    @property
    def short_name(self) -> str:
        return {
            RingKind.INTEGERS: "Z",
            RingKind.RATIONALS: "Q",
            RingKind.PRIME_FIELD: f"GF({self.p})",
            RingKind.POLY_PRIME_FIELD: f"GF({self.p})[x]",
            RingKind.POLY_RATIONALS: "Q[x]",
        }[self.kind]

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"kind": self.kind.value}
        if self.p is not None:
            data["p"] = self.p
        return data

    def __str__(self) -> str:
        return self.short_name

    # --- 元素 | Elements ---

    def element(self, value: Any) -> "RingElement":
        """
        把 int / str / Fraction / 系数序列 / RingElement 转换为本环元素

        Convert an int / str / Fraction / coefficient sequence / RingElement into an element of this ring
        """
        from .element import RingElement

        if isinstance(value, RingElement):
            if value.spec != self:
                from ..common.exceptions import RingMismatchError
                raise RingMismatchError(
                    cn=f"元素属于 {value.spec}，而不是 {self}",
                    en=f"Element lives in {value.spec}, not {self}"
                )
            return value
        return RingElement(self, self._arithmetic.coerce(value))

    def zero(self) -> "RingElement":
        return self.element(self._arithmetic.zero)

    def one(self) -> "RingElement":
        return self.element(self._arithmetic.one)
