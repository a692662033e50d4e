"""
weightkit 环元素

Ring elements in canonical form
"""

from dataclasses import dataclass
from typing import Any, Hashable

from .spec import RingSpec
from ..common.exceptions import RingMismatchError


@dataclass(frozen=True)
class RingElement:
    """
    规范形式的环元素

    载荷的规范形式唯一，因此相等就是载荷相等。

    Ring element in canonical form

    The payload representation is unique, so equality is payload equality.
    """

    spec: RingSpec
    payload: Hashable

    def _other(self, other: Any) -> Hashable:
        if isinstance(other, RingElement):
            if other.spec != self.spec:
                raise RingMismatchError(
                    cn=f"不能混合 {self.spec} 与 {other.spec} 的元素",
                    en=f"Cannot mix elements of {self.spec} and {other.spec}"
                )
            return other.payload
        return self.spec.arithmetic.coerce(other)

    def _wrap(self, payload: Hashable) -> "RingElement":
        return RingElement(self.spec, payload)

    def __add__(self, other: Any) -> "RingElement":
        return self._wrap(self.spec.arithmetic.add(self.payload, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other: Any) -> "RingElement":
        return self._wrap(self.spec.arithmetic.sub(self.payload, self._other(other)))

    def __rsub__(self, other: Any) -> "RingElement":
        return self._wrap(self.spec.arithmetic.sub(self._other(other), self.payload))

    def __mul__(self, other: Any) -> "RingElement":
        return self._wrap(self.spec.arithmetic.mul(self.payload, self._other(other)))

    __rmul__ = __mul__

    def __neg__(self) -> "RingElement":
        return self._wrap(self.spec.arithmetic.neg(self.payload))

    def __pow__(self, n: int) -> "RingElement":
        return self._wrap(self.spec.arithmetic.power(self.payload, n))

    def __divmod__(self, other: Any) -> tuple:
        q, r = self.spec.arithmetic.divmod(self.payload, self._other(other))
        return self._wrap(q), self._wrap(r)

    def __floordiv__(self, other: Any) -> "RingElement":
        return divmod(self, other)[0]

    def __mod__(self, other: Any) -> "RingElement":
        return divmod(self, other)[1]

    def __bool__(self) -> bool:
        return not self.is_zero

    @property
    def is_zero(self) -> bool:
        return self.spec.arithmetic.is_zero(self.payload)

    @property
    def is_unit(self) -> bool:
        return self.spec.arithmetic.is_unit(self.payload)

    def inverse(self) -> "RingElement":
        return self._wrap(self.spec.arithmetic.inverse(self.payload))

    def canonical(self) -> "RingElement":
        """规范相伴元（非负 / 首一 / 1） | Canonical associate (nonnegative / monic / one)"""
        return self._wrap(self.spec.arithmetic.canonical(self.payload))

    def divides(self, other: Any) -> bool:
        return self.spec.arithmetic.divides(self.payload, self._other(other))

    def exact_div(self, other: Any) -> "RingElement":
        return self._wrap(self.spec.arithmetic.exact_div(self.payload, self._other(other)))

    def gcd(self, other: Any) -> "RingElement":
        return self._wrap(self.spec.arithmetic.gcd(self.payload, self._other(other)))

    @property
    def norm(self) -> int:
        return self.spec.arithmetic.norm(self.payload)

    @property
    def length_bound(self) -> int:
        return self.spec.arithmetic.length_bound(self.payload)

    def __str__(self) -> str:
        return self.spec.arithmetic.format(self.payload)

    def __repr__(self) -> str:
        return f"RingElement({self.spec.short_name}, {self})"
