"""
环核心测试：算术后端、矩阵与 Smith 标准形

Ring core tests: arithmetic backends, matrices and the Smith normal form
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weightkit import Matrix, RingSpec, linear_solve, smith_normal_form
from weightkit.ring import RingKind
from weightkit.common.exceptions import DimensionError, InputError, RingMismatchError, ValidationError

INTEGERS = RingSpec.integers()


@st.composite
def integer_matrices(draw, max_dim: int = 4, bound: int = 9) -> Matrix:
    nrows = draw(st.integers(0, max_dim))
    ncols = draw(st.integers(0, max_dim))
    rows = draw(st.lists(
        st.lists(st.integers(-bound, bound), min_size=ncols, max_size=ncols),
        min_size=nrows, max_size=nrows,
    ))
    return Matrix.from_rows(INTEGERS, rows, ncols=ncols)


# =========================================================================
# 环规格 | Ring specs
# =========================================================================

class TestRingSpec:

    @pytest.mark.parametrize("name", ["Z", "Q", "GF(5)", "GF(3)[x]", "Q[x]"])
    def test_short_names_parse_back(self, name):
        assert RingSpec.parse(name).short_name == name

    def test_parse_accepts_dicts(self):
        assert RingSpec.parse({"kind": "prime_field", "p": 7}) == RingSpec.prime_field(7)

    @pytest.mark.parametrize("text", ["GF(4)", "GF(1)[x]", "R", "Z[x]"])
    def test_unrecognized_or_composite_rings_are_rejected(self, text):
        with pytest.raises(ValidationError):
            RingSpec.parse(text)

    def test_p_is_only_accepted_where_needed(self):
        with pytest.raises(ValidationError):
            RingSpec(RingKind.INTEGERS, 5)

    def test_field_flag(self, Z, Q, F5, Qx):
        assert Q.is_field and F5.is_field
        assert not Z.is_field and not Qx.is_field


# =========================================================================
# 元素 | Elements
# =========================================================================

class TestElements:

    def test_integer_division_with_remainder(self, Z):
        q, r = divmod(Z.element(7), Z.element(3))
        assert (q, r) == (Z.element(2), Z.element(1))

    def test_integer_canonical_and_gcd(self, Z):
        assert Z.element(-6).canonical() == Z.element(6)
        assert Z.element(-4).gcd(6) == Z.element(2)
        assert Z.element(3).divides(12)
        assert not Z.element(5).divides(12)

    def test_integer_units(self, Z):
        assert Z.element(-1).is_unit
        assert not Z.element(2).is_unit
        with pytest.raises(ValidationError):
            Z.element(2).inverse()

    def test_exact_division_refuses_remainders(self, Z):
        assert Z.element(12).exact_div(4) == Z.element(3)
        with pytest.raises(ValidationError):
            Z.element(12).exact_div(5)

    def test_integers_reject_fractions(self, Z):
        with pytest.raises(ValidationError):
            Z.element("1/2")

    def test_rationals(self, Q):
        assert Q.element("3/4") * Q.element("4/3") == Q.one()
        assert Q.element(Fraction(2, 6)) == Q.element("1/3")
        assert Q.element("-5/2").canonical() == Q.one()

    def test_prime_field(self, F5):
        assert F5.element(3).inverse() == F5.element(2)
        assert F5.element("1/2") == F5.element(3)
        assert F5.element(7) == F5.element(2)
        assert (F5.element(4) + 3) == F5.element(2)

    @pytest.mark.parametrize("value", [Fraction(1, 5), "3/10", Fraction(2, 25)])
    def test_prime_field_rejects_denominators_divisible_by_p(self, F5, value):
        with pytest.raises(InputError) as info:
            F5.element(value)
        assert "not invertible in F_5" in str(info.value)

    def test_polynomials_over_the_rationals(self, Qx):
        f, g = Qx.element("x^2 - 1"), Qx.element("x - 1")
        assert f // g == Qx.element("x + 1")
        assert (f % g).is_zero
        assert f.gcd(Qx.element("2*x - 2")) == g
        assert str(g) == "-1 + 1*x"
        assert str(Qx.element("x^2/2 - 3")) == "-3 + 1/2*x^2"
        assert Qx.element(str(f)) == f

    def test_polynomials_over_a_prime_field(self, F3x):
        f = F3x.element("x^2 + 1")
        assert not f.is_unit
        assert F3x.element(2).is_unit
        # x² + 1 没有 F_3 中的根 | x² + 1 has no root in F_3
        assert f.gcd("x - 1") == F3x.one()
        assert f.gcd("x + 1") == F3x.one()

    def test_length_bound_counts_prime_factors(self, Z, Qx):
        assert Z.element(8).length_bound >= 3
        assert Qx.element("x^3 + x").length_bound == 3

    def test_mixed_rings_raise(self, Z, Q):
        with pytest.raises(RingMismatchError):
            Z.element(1) + Q.element(1)


# =========================================================================
# 矩阵 | Matrices
# =========================================================================

class TestMatrix:

    def test_shape_and_product(self, matrix):
        A = matrix([[1, 2, 3]])
        B = matrix([[1], [0], [-1]])
        assert A.shape == (1, 3)
        assert A @ B == matrix([[-2]])

    def test_empty_shapes(self, Z):
        A = Matrix.zeros(Z, 0, 3)
        B = Matrix.zeros(Z, 3, 2)
        assert (A @ B).shape == (0, 2)
        assert (B @ Matrix.zeros(Z, 2, 0)).shape == (3, 0)

    def test_product_shape_mismatch(self, matrix):
        with pytest.raises(DimensionError):
            matrix([[1, 2]]) @ matrix([[1, 2]])

    def test_mixed_rings(self, Z, Q):
        with pytest.raises(RingMismatchError):
            Matrix.identity(Z, 2) @ Matrix.identity(Q, 2)

    @pytest.mark.parametrize("rows, det", [
        ([[2, 1], [1, 1]], 1),
        ([[1, 2], [2, 4]], 0),
        ([[2, 4, 4], [-6, 6, 12], [10, -4, -16]], -144),
        ([[0, 1], [1, 0]], -1),
    ])
    def test_determinant(self, matrix, Z, rows, det):
        assert matrix(rows).determinant() == Z.element(det)

    def test_determinant_needs_a_square_matrix(self, matrix):
        with pytest.raises(DimensionError):
            matrix([[1, 2]]).determinant()

    def test_blocks_and_kron(self, matrix, Z):
        A = matrix([[1, 2]])
        assert A.direct_sum(matrix([[3]])) == matrix([[1, 2, 0], [0, 0, 3]])
        assert Matrix.identity(Z, 2).kron(matrix([[5]])) == matrix([[5, 0], [0, 5]])
        assert A.T == matrix([[1], [2]])


# =========================================================================
# Smith 标准形 | Smith normal form
# =========================================================================

def _is_smith_form(A: Matrix) -> bool:
    snf = smith_normal_form(A)
    spec = A.spec
    factors = snf.invariant_factors
    if snf.U @ A @ snf.V != snf.D:
        return False
    if snf.U @ snf.U_inv != Matrix.identity(spec, A.nrows) or snf.V @ snf.V_inv != Matrix.identity(spec, A.ncols):
        return False
    for i in range(A.nrows):
        for j in range(A.ncols):
            expected = factors[i] if i == j and i < len(factors) else spec.zero()
            if snf.D[i, j] != expected:
                return False
    if any(d.is_zero or d != d.canonical() for d in factors):
        return False
    return all(factors[i].divides(factors[i + 1]) for i in range(len(factors) - 1))


class TestSmithNormalForm:

    def test_known_invariant_factors(self, matrix, Z):
        snf = smith_normal_form(matrix([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]))
        assert snf.invariant_factors == [Z.element(2), Z.element(6), Z.element(12)]
        assert snf.rank == 3

    def test_rank_deficient(self, matrix, Z):
        snf = smith_normal_form(matrix([[1, 2], [2, 4]]))
        assert snf.invariant_factors == [Z.element(1)]
        assert snf.kernel_basis().ncols == 1
        assert (matrix([[1, 2], [2, 4]]) @ snf.kernel_basis()).is_zero

    def test_empty_matrix(self, Z):
        snf = smith_normal_form(Matrix.zeros(Z, 0, 3))
        assert snf.rank == 0
        assert snf.kernel_basis() == Matrix.identity(Z, 3)
        assert snf.U.shape == (0, 0)

    @pytest.mark.parametrize("name", ["Q", "GF(5)", "GF(3)[x]", "Q[x]"])
    def test_other_rings(self, name):
        spec = RingSpec.parse(name)
        values = {
            "Q": [["1/2", "2"], ["3", "0"]],
            "GF(5)": [[2, 4], [1, 2]],
            "GF(3)[x]": [["x", "x^2"], ["1", "x + 1"]],
            "Q[x]": [["x^2 - 1", "0"], ["x - 1", "x + 1"]],
        }[name]
        assert _is_smith_form(Matrix.from_rows(spec, values))

    @given(integer_matrices())
    @settings(max_examples=80, deadline=None)
    def test_decomposition_over_the_integers(self, A):
        assert _is_smith_form(A)

    @given(integer_matrices())
    @settings(max_examples=80, deadline=None)
    def test_transforms_are_unimodular_over_the_integers(self, A):
        snf = smith_normal_form(A)
        assert snf.U.determinant().payload in (1, -1)
        assert snf.V.determinant().payload in (1, -1)

    @given(integer_matrices())
    @settings(max_examples=80, deadline=None)
    def test_normal_form_is_idempotent(self, A):
        snf = smith_normal_form(A)
        again = smith_normal_form(snf.D)
        assert again.D == snf.D
        assert again.invariant_factors == snf.invariant_factors

    @pytest.mark.parametrize("name", ["Q", "GF(5)", "Q[x]"])
    def test_normal_form_is_idempotent_on_other_rings(self, name):
        spec = RingSpec.parse(name)
        values = {
            "Q": [["1/2", "2"], ["3", "0"]],
            "GF(5)": [[2, 4], [1, 3]],
            "Q[x]": [["x^2 - 1", "0"], ["x - 1", "x + 1"]],
        }[name]
        D = smith_normal_form(Matrix.from_rows(spec, values)).D
        assert smith_normal_form(D).D == D


# =========================================================================
# 线性方程组 | Linear systems
# =========================================================================

class TestLinearSolve:

    def test_extended_euclid_example(self, matrix):
        A = matrix([[2, 3]])
        solution = linear_solve(A, matrix([[1]]))
        assert solution.solvable
        assert solution.solution == matrix([[-1], [1]])
        assert solution.kernel == matrix([[3], [-2]])

    def test_unsolvable_over_the_integers(self, matrix):
        solution = linear_solve(matrix([[2, 4]]), matrix([[1]]))
        assert not solution.solvable
        assert solution.kernel_rank == 1

    def test_solvable_over_the_rationals(self, Q):
        A = Matrix.from_rows(Q, [[2, 4]])
        solution = linear_solve(A, Matrix.from_rows(Q, [[1]]))
        assert solution.solvable
        assert A @ solution.solution == Matrix.from_rows(Q, [[1]])

    def test_row_mismatch(self, matrix):
        with pytest.raises(DimensionError):
            linear_solve(matrix([[1, 2]]), matrix([[1], [2]]))

    @given(integer_matrices(max_dim=3), st.lists(st.integers(-9, 9), min_size=3, max_size=3))
    @settings(max_examples=60, deadline=None)
    def test_solutions_satisfy_the_system(self, A, x):
        # 构造一个必有解的右端 | Build a right-hand side that is always solvable
        vector = Matrix.column(INTEGERS, x[:A.ncols])
        B = A @ vector
        solution = linear_solve(A, B)
        assert solution.solvable
        assert A @ solution.solution == B
        assert (A @ solution.kernel).is_zero
