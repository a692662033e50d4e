"""
有限表现模测试：标准形、同态、短正合列与 Hom/Ext¹/Tor₁

Finitely presented module tests: normal forms, homomorphisms, short exact
sequences and Hom/Ext¹/Tor₁
"""

import itertools
from math import prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weightkit import FpModule, Matrix, ModuleHom, ProjectiveDimension, RingSpec, ShortExactSequence
from weightkit import ext1, hom_module, is_isomorphic, projective_dimension, tor1
from weightkit.modules import (
    ext1_presentation,
    hom_induced,
    hom_map_bijective,
    hom_presentation,
    tor1_presentation,
    verify_bijectivity_certificate,
)
from weightkit.common.exceptions import ModuleHomError, RingMismatchError, SequenceError

INTEGERS = RingSpec.integers()


@st.composite
def integer_modules(draw, max_generators: int = 3, max_relations: int = 3, bound: int = 6) -> FpModule:
    generators = draw(st.integers(0, max_generators))
    count = draw(st.integers(0, max_relations))
    rows = draw(st.lists(
        st.lists(st.integers(-bound, bound), min_size=generators, max_size=generators),
        min_size=count, max_size=count,
    ))
    return FpModule.from_relations(INTEGERS, rows, generators=generators)


def _order(M: FpModule) -> int:
    assert M.free_rank == 0
    return prod(int(d.payload) for d in M.invariant_factors)


def _count_homs(orders_m, orders_n) -> int:
    """穷举生成元的像 | Enumerate the images of the generators"""
    M = FpModule.from_cyclic_orders(INTEGERS, orders_m)
    N = FpModule.from_cyclic_orders(INTEGERS, orders_n)
    count = 0
    ranges = [range(e) for e in orders_n for _ in orders_m]
    for values in itertools.product(*ranges):
        rows = [list(values[j * len(orders_m):(j + 1) * len(orders_m)]) for j in range(len(orders_n))]
        try:
            ModuleHom(M, N, Matrix.from_rows(INTEGERS, rows))
        except ModuleHomError:
            continue
        count += 1
    return count


@st.composite
def finite_presentations(draw, bound: int = 3):
    """行列式非零的方阵关系，M 有限 | Square relations with nonzero determinant, so M is finite"""
    generators = draw(st.integers(1, 2))
    rows = draw(st.lists(
        st.lists(st.integers(-bound, bound), min_size=generators, max_size=generators),
        min_size=generators, max_size=generators,
    ).filter(lambda r: Matrix.from_rows(INTEGERS, r).determinant().payload != 0))
    return rows


def _elements(orders):
    return list(itertools.product(*[range(n) for n in orders]))


def _combine(rows, vectors, orders):
    """(Σ_j rows[i][j]·vectors[j])_i，在 ⊕Z/n 中逐元素计算 | computed entrywise in ⊕Z/n"""
    return tuple(
        tuple(sum(r * v[k] for r, v in zip(row, vectors)) % n for k, n in enumerate(orders))
        for row in rows
    )


def _oracle_orders(rows, orders_n):
    """
    关系 rows 的像集枚举：|Hom| = |核|，|Ext¹| = |N|^g / |像|，|Tor₁| = |转置的核|

    Enumerate the map of relations: |Hom| = |kernel|, |Ext¹| = |N|^g / |image|,
    |Tor₁| = |kernel of the transpose|
    """
    elements = _elements(orders_n)
    zero = tuple(0 for _ in orders_n)
    g = len(rows)
    columns = [list(column) for column in zip(*rows)]
    images = set()
    homs = tors = 0
    for vectors in itertools.product(elements, repeat=g):
        value = _combine(rows, vectors, orders_n)
        images.add(value)
        homs += all(v == zero for v in value)
        tors += all(v == zero for v in _combine(columns, vectors, orders_n))
    return homs, len(elements) ** g // len(images), tors


# =========================================================================
# 标准形 | Normal forms
# =========================================================================

class TestNormalForm:

    def test_cyclic_sum_description(self, cyclic):
        assert cyclic(2, 4, 0).describe() == "Z/2 ⊕ Z/4 ⊕ Z^1"

    def test_chinese_remainder(self, Z, cyclic):
        assert FpModule.from_relations(Z, [[2, 0], [0, 3]]) == cyclic(6)
        assert cyclic(2, 3) == cyclic(6)
        assert cyclic(2, 2) != cyclic(4)

    def test_general_relations_normalize(self, Z):
        M = FpModule.from_relations(Z, [[2, 4], [6, 8]])
        assert M.describe() == "Z/2 ⊕ Z/4"
        assert M.normalize() == M
        assert M.normalize().relations.nrows == 2

    def test_unit_factors_are_dropped(self, Z, cyclic):
        M = FpModule.from_relations(Z, [[1, 1], [0, 5]])
        assert M == cyclic(5)
        assert M.minimal_generators == 1

    def test_zero_and_free(self, Z, cyclic):
        assert cyclic(1).is_zero
        assert FpModule.zero(Z).describe() == "0"
        assert FpModule.free(Z, 3).is_free
        assert FpModule.free(Z, 3).free_rank == 3
        assert not cyclic(2, 0).is_free

    def test_polynomial_labels_are_bracketed(self, Qx):
        assert FpModule.cyclic(Qx, "x - 1").describe() == "Q[x]/(-1 + 1*x)"

    def test_power_and_direct_sum(self, Z, cyclic):
        assert cyclic(2).power(3) == cyclic(2, 2, 2)
        assert cyclic(2).power(0).is_zero
        assert cyclic(3).direct_sum(cyclic(0), cyclic(4)) == cyclic(12, 0)

    def test_length_bound(self, cyclic):
        assert cyclic(8).length_bound() >= 3
        assert cyclic(0).length_bound() == 0

    def test_elements(self, cyclic):
        M = cyclic(6)
        assert M.is_zero_element(M.vector([12]))
        assert M.elements_equal(M.vector([7]), M.vector([1]))
        assert not M.is_zero_element(M.vector([3]))

    def test_mixed_rings(self, Z, Q):
        with pytest.raises(RingMismatchError):
            is_isomorphic(FpModule.free(Z, 1), FpModule.free(Q, 1))

    def test_to_dict(self, cyclic):
        data = cyclic(2, 0).to_dict()
        assert data["ring"] == "Z"
        assert data["normal_form"] == {"free_rank": 1, "invariant_factors": ["2"]}

    @given(integer_modules())
    @settings(max_examples=60, deadline=None)
    def test_normalize_preserves_the_class(self, M):
        N = M.normalize()
        assert is_isomorphic(M, N)
        factors = N.invariant_factors
        assert all(factors[i].divides(factors[i + 1]) for i in range(len(factors) - 1))
        assert all(not d.is_unit for d in factors)


# =========================================================================
# Hom / Ext¹ / Tor₁
# =========================================================================

class TestFunctorTables:

    @pytest.mark.parametrize("m, n, hom, ext, tor", [
        ((4,), (6,), (2,), (2,), (2,)),
        ((4,), (0,), (), (4,), ()),
        ((0,), (4,), (4,), (), ()),
        ((0,), (0,), (0,), (), ()),
        ((2, 3), (9,), (3,), (3,), (3,)),
        ((5,), (7,), (), (), ()),
    ])
    def test_cyclic_tables(self, cyclic, m, n, hom, ext, tor):
        M, N = cyclic(*m), cyclic(*n)
        assert hom_module(M, N) == cyclic(*hom)
        assert ext1(M, N) == cyclic(*ext)
        assert tor1(M, N) == cyclic(*tor)

    def test_polynomial_tables(self, Qx):
        M = FpModule.cyclic(Qx, "x^2 - 1")
        N = FpModule.cyclic(Qx, "x - 1")
        assert hom_module(M, N) == FpModule.cyclic(Qx, "x - 1")
        assert ext1(M, FpModule.free(Qx, 1)) == M

    @pytest.mark.parametrize("orders_m, orders_n", [
        ((2,), (4,)),
        ((4,), (6,)),
        ((2, 4), (4,)),
        ((3,), (2, 6)),
    ])
    def test_hom_order_by_enumeration(self, cyclic, orders_m, orders_n):
        assert _order(hom_module(cyclic(*orders_m), cyclic(*orders_n))) == _count_homs(orders_m, orders_n)

    @pytest.mark.parametrize("orders, expected", [
        ((1,), ProjectiveDimension.MINUS_INFINITY),
        ((0, 0), ProjectiveDimension.ZERO),
        ((2, 0), ProjectiveDimension.ONE),
    ])
    def test_projective_dimension(self, cyclic, orders, expected):
        assert projective_dimension(cyclic(*orders)) is expected

    def test_projective_dimension_text(self):
        assert str(ProjectiveDimension.MINUS_INFINITY) == "-inf"
        assert str(ProjectiveDimension.ONE) == "1"

    def test_mixed_rings(self, Z, Q):
        with pytest.raises(RingMismatchError):
            hom_module(FpModule.free(Z, 1), FpModule.free(Q, 1))


class TestEnumerationOracle:

    @given(finite_presentations(), st.lists(st.integers(2, 6), min_size=1, max_size=2))
    @settings(max_examples=60, deadline=None)
    def test_orders_match_set_enumeration(self, rows, orders_n):
        M = FpModule.from_relations(INTEGERS, rows, generators=len(rows))
        N = FpModule.from_cyclic_orders(INTEGERS, orders_n)
        homs, exts, tors = _oracle_orders(rows, orders_n)
        assert _order(hom_module(M, N)) == homs
        assert _order(ext1(M, N)) == exts
        assert _order(tor1(M, N)) == tors

    @pytest.mark.parametrize("rows, orders_n, expected", [
        ([[4]], [6], (2, 2, 2)),
        ([[2, 0], [0, 2]], [4], (4, 4, 4)),
        ([[3, 1], [0, 3]], [3], (3, 3, 3)),
        ([[5]], [2, 3], (1, 1, 1)),
    ])
    def test_known_orders(self, rows, orders_n, expected):
        assert _oracle_orders(rows, orders_n) == expected


class TestFunctorIdentities:

    @given(integer_modules(), integer_modules(max_generators=2, max_relations=2))
    @settings(max_examples=60, deadline=None)
    def test_tor_is_symmetric(self, M, N):
        assert tor1(M, N) == tor1(N, M)

    @given(integer_modules(max_generators=2), integer_modules(max_generators=2), integer_modules(max_generators=2))
    @settings(max_examples=40, deadline=None)
    def test_additive_in_direct_sums(self, M, M2, N):
        assert hom_module(M.direct_sum(M2), N) == hom_module(M, N).direct_sum(hom_module(M2, N))
        assert ext1(M.direct_sum(M2), N) == ext1(M, N).direct_sum(ext1(M2, N))
        assert ext1(N, M.direct_sum(M2)) == ext1(N, M).direct_sum(ext1(N, M2))
        assert tor1(M.direct_sum(M2), N) == tor1(M, N).direct_sum(tor1(M2, N))

    @given(integer_modules(), integer_modules(max_generators=2, max_relations=2))
    @settings(max_examples=60, deadline=None)
    def test_projective_modules_have_no_extensions(self, M, N):
        if projective_dimension(M) <= ProjectiveDimension.ZERO:
            assert ext1(M, N).is_zero
            assert tor1(M, N).is_zero
        else:
            assert not M.is_free

    @pytest.mark.parametrize("rank", [0, 1, 3])
    def test_free_modules(self, Z, cyclic, rank):
        F = FpModule.free(Z, rank)
        assert projective_dimension(F) <= ProjectiveDimension.ZERO
        for N in (cyclic(4), cyclic(0, 6), cyclic(2, 2)):
            assert ext1(F, N).is_zero
            assert tor1(F, N).is_zero


class TestPresentationPath:

    @pytest.mark.parametrize("m, n", [
        ((4,), (6,)),
        ((2, 0), (4, 0)),
        ((0,), (3,)),
        ((6,), (0,)),
    ])
    def test_agrees_with_tables(self, cyclic, m, n):
        M, N = cyclic(*m), cyclic(*n)
        assert hom_presentation(M, N)[0] == hom_module(M, N)
        assert ext1_presentation(M, N) == ext1(M, N)
        assert tor1_presentation(M, N) == tor1(M, N)

    @given(integer_modules(), integer_modules(max_generators=2, max_relations=2))
    @settings(max_examples=40, deadline=None)
    def test_agrees_on_arbitrary_presentations(self, M, N):
        assert hom_presentation(M, N)[0] == hom_module(M, N)
        assert ext1_presentation(M, N) == ext1(M, N)
        assert tor1_presentation(M, N) == tor1(M, N)

    def test_hom_induced(self, Z, cyclic):
        h = ModuleHom(cyclic(4), cyclic(2), Matrix.from_rows(Z, [[1]]))
        induced = hom_induced(FpModule.free(Z, 1), h)
        assert induced.source == cyclic(4)
        assert induced.target == cyclic(2)
        assert induced.is_surjective
        assert not induced.is_injective


# =========================================================================
# 同态 | Homomorphisms
# =========================================================================

class TestModuleHom:

    def test_incompatible_matrix(self, Z, cyclic):
        with pytest.raises(ModuleHomError):
            ModuleHom(cyclic(4), cyclic(6), Matrix.from_rows(Z, [[1]]))

    def test_kernel_image_cokernel(self, cyclic):
        h = ModuleHom.scalar(cyclic(12), 4)
        assert h.kernel()[0] == cyclic(4)
        assert h.image()[0] == cyclic(3)
        assert h.cokernel()[0] == cyclic(4)

    def test_multiplication_on_the_integers(self, Z, cyclic):
        h = ModuleHom.scalar(FpModule.free(Z, 1), 3)
        assert h.is_injective
        assert not h.is_surjective
        assert h.cokernel()[0] == cyclic(3)

    def test_units_act_bijectively(self, cyclic):
        assert ModuleHom.scalar(cyclic(9), 2).is_bijective
        assert not ModuleHom.scalar(cyclic(9), 3).is_bijective

    def test_kernel_witness(self, cyclic):
        h = ModuleHom.scalar(cyclic(4), 2)
        certificate = hom_map_bijective(h)
        assert not certificate.bijective
        assert certificate.kind == "kernel"
        assert verify_bijectivity_certificate(h, certificate)

    def test_cokernel_witness(self, Z):
        h = ModuleHom.scalar(FpModule.free(Z, 1), 2)
        certificate = hom_map_bijective(h)
        assert certificate.kind == "cokernel"
        assert verify_bijectivity_certificate(h, certificate)
        assert certificate.to_dict()["witness"]["kind"] == "cokernel"

    def test_bijective_certificate(self, cyclic):
        h = ModuleHom.identity(cyclic(2, 0))
        certificate = hom_map_bijective(h)
        assert certificate.bijective
        assert verify_bijectivity_certificate(h, certificate)
        assert certificate.to_dict() == {"bijective": True}

    def test_lift_through(self, Z):
        free = FpModule.free(Z, 1)
        inclusion = ModuleHom.scalar(free, 2)
        lifted = ModuleHom.scalar(free, 4).lift_through(inclusion)
        assert lifted is not None
        assert lifted.matrix == Matrix.from_rows(Z, [[2]])
        assert ModuleHom.scalar(free, 3).lift_through(inclusion) is None

    def test_composition(self, cyclic):
        double = ModuleHom.scalar(cyclic(8), 2)
        assert (double @ double).equals(ModuleHom.scalar(cyclic(8), 4))
        assert (double @ double @ double).is_zero


# =========================================================================
# 短正合列 | Short exact sequences
# =========================================================================

class TestShortExactSequence:

    def test_split(self, cyclic):
        sequence = ShortExactSequence.split(cyclic(2), cyclic(0))
        assert sequence.middle == cyclic(2, 0)
        assert sequence.right == cyclic(0)

    def test_nonsplit(self, Z, cyclic):
        free = FpModule.free(Z, 1)
        sequence = ShortExactSequence(
            ModuleHom.scalar(free, 2),
            ModuleHom(free, cyclic(2), Matrix.from_rows(Z, [[1]])),
        )
        assert sequence.left == free
        assert sequence.to_dict()["inclusion"] == [["2"]]

    def _sequences(self, Z, cyclic):
        free = FpModule.free(Z, 1)
        return {
            "injective": (
                ModuleHom.scalar(cyclic(4), 2),
                ModuleHom(cyclic(4), cyclic(2), Matrix.from_rows(Z, [[1]])),
            ),
            "composite": (
                ModuleHom(cyclic(2), cyclic(4), Matrix.from_rows(Z, [[2]])),
                ModuleHom.identity(cyclic(4)),
            ),
            "middle": (
                ModuleHom(cyclic(2), cyclic(2, 2), Matrix.from_rows(Z, [[1], [0]])),
                ModuleHom.zero(cyclic(2, 2), cyclic(2)),
            ),
            "surjective": (
                ModuleHom.identity(free),
                ModuleHom.zero(free, cyclic(2)),
            ),
        }

    @pytest.mark.parametrize("position", ["injective", "composite", "middle", "surjective"])
    def test_failure_positions(self, Z, cyclic, position):
        inclusion, projection = self._sequences(Z, cyclic)[position]
        with pytest.raises(SequenceError) as excinfo:
            ShortExactSequence(inclusion, projection)
        assert excinfo.value.position == position

    def test_maps_that_do_not_compose(self, Z, cyclic):
        with pytest.raises(SequenceError) as excinfo:
            ShortExactSequence(ModuleHom.identity(cyclic(2)), ModuleHom.identity(cyclic(2, 2)))
        assert excinfo.value.position == "composite"
