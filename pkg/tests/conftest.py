"""
weightkit 测试公共夹具

Shared test fixtures
"""

import pytest

from weightkit import FpModule, Matrix, RingSpec
from weightkit.common.language import use_language


@pytest.fixture(scope="session", autouse=True)
def english_messages():
    """断言使用英文消息 | Assertions read the English messages"""
    with use_language("EN"):
        yield


@pytest.fixture(scope="session")
def Z() -> RingSpec:
    return RingSpec.integers()


@pytest.fixture(scope="session")
def Q() -> RingSpec:
    return RingSpec.rationals()


@pytest.fixture(scope="session")
def Qx() -> RingSpec:
    return RingSpec.poly_rationals()


@pytest.fixture(scope="session")
def F5() -> RingSpec:
    return RingSpec.prime_field(5)


@pytest.fixture(scope="session")
def F3x() -> RingSpec:
    return RingSpec.poly_prime_field(3)


@pytest.fixture
def cyclic(Z):
    """Z 上的循环直和构造器 | Builder for cyclic sums over Z"""

    def build(*orders: int) -> FpModule:
        return FpModule.from_cyclic_orders(Z, list(orders))

    return build


@pytest.fixture
def matrix(Z):
    def build(rows) -> Matrix:
        return Matrix.from_rows(Z, rows)

    return build
