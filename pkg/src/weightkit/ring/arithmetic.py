"""
weightkit 欧几里得环算术后端

Euclidean ring arithmetic backends

每个后端只处理规范形式的原始载荷（int / Fraction / 模 p 剩余 / 系数元组），
RingElement 与 Matrix 把运算委托给这里。

Each backend works on raw canonical payloads (int / Fraction / residue mod p /
coefficient tuple); RingElement and Matrix delegate their arithmetic here.
"""

import random
from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Any, Hashable, Tuple

from sympy import Poly, Rational, Symbol, sympify
from sympy.polys.domains import QQ, ZZ
from typing_extensions import TypeAlias

from ..common.exceptions import InputError, ValidationError

Payload: TypeAlias = Hashable

# 多项式环的不定元 | Indeterminate of the polynomial rings
X = Symbol("x")


class EuclideanArithmetic(ABC):
    """
    欧几里得整环算术抽象基类

    所有后端都必须保证载荷的规范形式唯一：相等即载荷相等。

    Euclidean domain arithmetic abstract base class

    Every backend keeps payloads in a unique canonical form: equality is payload equality.
    """

    is_field: bool = False

    @property
    @abstractmethod
    def zero(self) -> Payload:
        """加法单位元 | Additive identity"""

    @property
    @abstractmethod
    def one(self) -> Payload:
        """乘法单位元 | Multiplicative identity"""

    @abstractmethod
    def coerce(self, value: Any) -> Payload:
        """
        把 int / str / Fraction 等转换为规范载荷

        Convert an int / str / Fraction / ... into a canonical payload

        Raises:
            ValidationError: 值不属于该环 | The value does not belong to this ring
        """

    @abstractmethod
    def add(self, a: Payload, b: Payload) -> Payload: ...

    @abstractmethod
    def sub(self, a: Payload, b: Payload) -> Payload: ...

    @abstractmethod
    def mul(self, a: Payload, b: Payload) -> Payload: ...

    @abstractmethod
    def neg(self, a: Payload) -> Payload: ...

    @abstractmethod
    def divmod(self, a: Payload, b: Payload) -> Tuple[Payload, Payload]:
        """
        带余除法 a = q·b + r，且 r = 0 或 norm(r) < norm(b)

        Division with remainder a = q·b + r with r = 0 or norm(r) < norm(b)
        """

    @abstractmethod
    def norm(self, a: Payload) -> int:
        """欧几里得范数（用于选主元） | Euclidean norm (used for pivot choice)"""

    @abstractmethod
    def is_unit(self, a: Payload) -> bool: ...

    @abstractmethod
    def inverse(self, a: Payload) -> Payload:
        """单位的逆 | Inverse of a unit"""

    @abstractmethod
    def unit_part(self, a: Payload) -> Payload:
        """
        单位 u 使得 a = u · canonical(a)；零元返回 1

        The unit u with a = u · canonical(a); one for zero
        """

    @abstractmethod
    def gcdex(self, a: Payload, b: Payload) -> Tuple[Payload, Payload, Payload]:
        """
        扩展欧几里得: 返回 (g, x, y)，x·a + y·b = g 且 g 为规范相伴元

        Extended Euclid: returns (g, x, y) with x·a + y·b = g and g canonical
        """

    @abstractmethod
    def length_bound(self, a: Payload) -> int:
        """
        非零元素素因子个数（计重数）的上界

        Upper bound on the number of prime factors (with multiplicity) of a nonzero element
        """

    @abstractmethod
    def format(self, a: Payload) -> str: ...

    @abstractmethod
    def random(self, rng: random.Random, bound: int) -> Payload:
        """有界随机元素 | Bounded random element"""

    def is_zero(self, a: Payload) -> bool:
        return a == self.zero

    def canonical(self, a: Payload) -> Payload:
        if self.is_zero(a):
            return a
        return self.mul(a, self.inverse(self.unit_part(a)))

    def divides(self, a: Payload, b: Payload) -> bool:
        """a | b"""
        if self.is_zero(a):
            return self.is_zero(b)
        return self.is_zero(self.divmod(b, a)[1])

    def exact_div(self, a: Payload, b: Payload) -> Payload:
        q, r = self.divmod(a, b)
        if not self.is_zero(r):
            raise ValidationError(
                cn=f"{self.format(b)} 不整除 {self.format(a)}",
                en=f"{self.format(b)} does not divide {self.format(a)}"
            )
        return q

    def power(self, a: Payload, n: int) -> Payload:
        result = self.one
        for _ in range(n):
            result = self.mul(result, a)
        return result

    def gcd(self, a: Payload, b: Payload) -> Payload:
        return self.gcdex(a, b)[0]


class IntegerArithmetic(EuclideanArithmetic):
    """
    整数环 Z，任意精度；规范相伴元非负

    The integers Z, arbitrary precision; canonical associates are nonnegative
    """

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def coerce(self, value: Any) -> int:
        if isinstance(value, bool):
            return int(value)
        if isinstance(value, int):
            return value
        if isinstance(value, Fraction) and value.denominator == 1:
            return value.numerator
        if isinstance(value, str):
            try:
                return int(value.strip())
            except ValueError:
                pass
        raise ValidationError(
            cn=f"无法解释为整数: {value!r}",
            en=f"Cannot be read as an integer: {value!r}"
        )

    def add(self, a: int, b: int) -> int:
        return a + b

    def sub(self, a: int, b: int) -> int:
        return a - b

    def mul(self, a: int, b: int) -> int:
        return a * b

    def neg(self, a: int) -> int:
        return -a

    def divmod(self, a: int, b: int) -> Tuple[int, int]:
        return divmod(a, b)

    def norm(self, a: int) -> int:
        return abs(a)

    def is_unit(self, a: int) -> bool:
        return a in (1, -1)

    def inverse(self, a: int) -> int:
        if not self.is_unit(a):
            raise ValidationError(cn=f"{a} 不是单位", en=f"{a} is not a unit")
        return a

    def unit_part(self, a: int) -> int:
        return -1 if a < 0 else 1

    def gcdex(self, a: int, b: int) -> Tuple[int, int, int]:
        s, t, h = ZZ.gcdex(ZZ(a), ZZ(b))
        g, x, y = int(h), int(s), int(t)
        if g < 0:
            g, x, y = -g, -x, -y
        return g, x, y

    def length_bound(self, a: int) -> int:
        return abs(a).bit_length()

    def format(self, a: int) -> str:
        return str(a)

    def random(self, rng: random.Random, bound: int) -> int:
        return rng.randint(-bound, bound)


class RationalArithmetic(EuclideanArithmetic):
    """
    有理数域 Q（约分的分数，分母为正）

    The rationals Q (reduced fractions with positive denominator)
    """

    is_field = True

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def coerce(self, value: Any) -> Fraction:
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return Fraction(value)
        if isinstance(value, str):
            try:
                return Fraction(value.strip())
            except ValueError:
                pass
        raise ValidationError(
            cn=f"无法解释为有理数: {value!r}",
            en=f"Cannot be read as a rational number: {value!r}"
        )

    def add(self, a: Fraction, b: Fraction) -> Fraction:
        return a + b

    def sub(self, a: Fraction, b: Fraction) -> Fraction:
        return a - b

    def mul(self, a: Fraction, b: Fraction) -> Fraction:
        return a * b

    def neg(self, a: Fraction) -> Fraction:
        return -a

    def divmod(self, a: Fraction, b: Fraction) -> Tuple[Fraction, Fraction]:
        return a / b, Fraction(0)

    def norm(self, a: Fraction) -> int:
        return 0

    def is_unit(self, a: Fraction) -> bool:
        return a != 0

    def inverse(self, a: Fraction) -> Fraction:
        if a == 0:
            raise ValidationError(cn="0 不是单位", en="0 is not a unit")
        return 1 / a

    def unit_part(self, a: Fraction) -> Fraction:
        return a if a != 0 else Fraction(1)

    def gcdex(self, a: Fraction, b: Fraction) -> Tuple[Fraction, Fraction, Fraction]:
        if a != 0:
            return Fraction(1), 1 / a, Fraction(0)
        if b != 0:
            return Fraction(1), Fraction(0), 1 / b
        return Fraction(0), Fraction(1), Fraction(0)

    def length_bound(self, a: Fraction) -> int:
        return 0

    def format(self, a: Fraction) -> str:
        return str(a)

    def random(self, rng: random.Random, bound: int) -> Fraction:
        return Fraction(rng.randint(-bound, bound), rng.randint(1, max(bound, 1)))


class PrimeFieldArithmetic(EuclideanArithmetic):
    """
    素域 F_p，剩余取 [0, p)

    The prime field F_p with residues in [0, p)
    """

    is_field = True

    def __init__(self, p: int) -> None:
        self.p = p

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1 % self.p

    def coerce(self, value: Any) -> int:
        if isinstance(value, int) and not isinstance(value, bool):
            return value % self.p
        if isinstance(value, str):
            try:
                value = Fraction(value.strip())
            except (ValueError, ZeroDivisionError):
                pass
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise InputError(
                    cn=f"分母 {value.denominator} 在 F_{self.p} 中不可逆: {value}",
                    en=f"Denominator {value.denominator} is not invertible in F_{self.p}: {value}"
                )
            return (value.numerator * pow(value.denominator, -1, self.p)) % self.p
        raise ValidationError(
            cn=f"无法解释为 F_{self.p} 的元素: {value!r}",
            en=f"Cannot be read as an element of F_{self.p}: {value!r}"
        )

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def divmod(self, a: int, b: int) -> Tuple[int, int]:
        return self.mul(a, self.inverse(b)), 0

    def norm(self, a: int) -> int:
        return 0

    def is_unit(self, a: int) -> bool:
        return a != 0

    def inverse(self, a: int) -> int:
        if a == 0:
            raise ValidationError(cn="0 不是单位", en="0 is not a unit")
        return pow(a, -1, self.p)

    def unit_part(self, a: int) -> int:
        return a if a != 0 else 1

    def gcdex(self, a: int, b: int) -> Tuple[int, int, int]:
        if a != 0:
            return 1, self.inverse(a), 0
        if b != 0:
            return 1, 0, self.inverse(b)
        return 0, 1, 0

    def length_bound(self, a: int) -> int:
        return 0

    def format(self, a: int) -> str:
        return str(a)

    def random(self, rng: random.Random, bound: int) -> int:
        return rng.randrange(self.p)


class PolynomialArithmetic(EuclideanArithmetic):
    """
    域上的一元多项式环 k[x]（k = F_p 或 Q）

    系数元组从低次到高次排列，去掉高次零系数；规范相伴元为首一多项式。
    乘法、带余除法与扩展欧几里得交给 sympy 的 Poly。

    Univariate polynomial ring k[x] over k = F_p or Q

    Coefficient tuples run from low to high degree with zero leading
    coefficients stripped; canonical associates are monic. Products, division
    with remainder and extended Euclid are delegated to sympy's Poly.
    """

    def __init__(self, base: EuclideanArithmetic, modulus: int = 0) -> None:
        self.base = base
        self.modulus = modulus

    @property
    def zero(self) -> tuple:
        return ()

    @property
    def one(self) -> tuple:
        return (self.base.one,)

    # --- sympy 转换 | sympy conversion ---

    def _to_poly(self, a: tuple) -> Poly:
        if self.modulus:
            coeffs = list(reversed(a)) or [0]
            return Poly(coeffs, X, modulus=self.modulus)
        coeffs = [Rational(c.numerator, c.denominator) for c in reversed(a)] or [Rational(0)]
        return Poly(coeffs, X, domain=QQ)

    def _from_poly(self, poly: Poly) -> tuple:
        if self.modulus:
            coeffs = [int(c) % self.modulus for c in poly.all_coeffs()]
        else:
            coeffs = [Fraction(int(c.p), int(c.q)) for c in poly.all_coeffs()]
        return self._strip(tuple(reversed(coeffs)))

    def _strip(self, coeffs: tuple) -> tuple:
        end = len(coeffs)
        while end and self.base.is_zero(coeffs[end - 1]):
            end -= 1
        return tuple(coeffs[:end])

    def coerce(self, value: Any) -> tuple:
        if isinstance(value, tuple):
            return self._strip(tuple(self.base.coerce(c) for c in value))
        if isinstance(value, (list,)):
            return self.coerce(tuple(value))
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return self._strip((self.base.coerce(value),))
        if isinstance(value, str):
            try:
                expr = sympify(value.replace("^", "**"), locals={"x": X})
                if self.modulus:
                    poly = Poly(expr, X, modulus=self.modulus)
                else:
                    poly = Poly(expr, X, domain=QQ)
                return self._from_poly(poly)
            except Exception:
                pass
        raise ValidationError(
            cn=f"无法解释为多项式: {value!r}",
            en=f"Cannot be read as a polynomial: {value!r}"
        )

    def add(self, a: tuple, b: tuple) -> tuple:
        n = max(len(a), len(b))
        zero = self.base.zero
        return self._strip(tuple(
            self.base.add(a[i] if i < len(a) else zero, b[i] if i < len(b) else zero)
            for i in range(n)
        ))

    def sub(self, a: tuple, b: tuple) -> tuple:
        return self.add(a, self.neg(b))

    def neg(self, a: tuple) -> tuple:
        return tuple(self.base.neg(c) for c in a)

    def mul(self, a: tuple, b: tuple) -> tuple:
        if not a or not b:
            return ()
        if len(a) == 1:
            return self._strip(tuple(self.base.mul(a[0], c) for c in b))
        if len(b) == 1:
            return self._strip(tuple(self.base.mul(c, b[0]) for c in a))
        return self._from_poly(self._to_poly(a) * self._to_poly(b))

    def divmod(self, a: tuple, b: tuple) -> Tuple[tuple, tuple]:
        if not b:
            raise ZeroDivisionError("polynomial division by zero")
        q, r = self._to_poly(a).div(self._to_poly(b))
        return self._from_poly(q), self._from_poly(r)

    def norm(self, a: tuple) -> int:
        return len(a) - 1

    def is_unit(self, a: tuple) -> bool:
        return len(a) == 1

    def inverse(self, a: tuple) -> tuple:
        if len(a) != 1:
            raise ValidationError(
                cn=f"{self.format(a)} 不是单位",
                en=f"{self.format(a)} is not a unit"
            )
        return (self.base.inverse(a[0]),)

    def unit_part(self, a: tuple) -> tuple:
        return (a[-1],) if a else self.one

    def gcdex(self, a: tuple, b: tuple) -> Tuple[tuple, tuple, tuple]:
        if not a and not b:
            return (), self.one, ()
        s, t, h = self._to_poly(a).gcdex(self._to_poly(b))
        g, x, y = self._from_poly(h), self._from_poly(s), self._from_poly(t)
        u = self.inverse(self.unit_part(g))
        return self.mul(g, u), self.mul(x, u), self.mul(y, u)

    def length_bound(self, a: tuple) -> int:
        return max(len(a) - 1, 0)

    def format(self, a: tuple) -> str:
        """c0 + c1*x + c2*x^2 + …，系数取基环的字符串形式，零系数省略 | zero coefficients are omitted"""
        if not a:
            return "0"
        terms = []
        for k, c in enumerate(a):
            if self.base.is_zero(c):
                continue
            coefficient = self.base.format(c)
            if k == 0:
                terms.append(coefficient)
            elif k == 1:
                terms.append(f"{coefficient}*x")
            else:
                terms.append(f"{coefficient}*x^{k}")
        return " + ".join(terms)

    def random(self, rng: random.Random, bound: int) -> tuple:
        degree = rng.randint(-1, 2)
        return self._strip(tuple(self.base.random(rng, bound) for _ in range(degree + 1)))

