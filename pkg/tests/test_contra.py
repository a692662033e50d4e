"""
反模测试：证书、截断塔、完备化与平坦性

Contramodule tests: certificates, truncated towers, completion and flatness
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weightkit import FpModule, Matrix, ModuleHom, ProjectiveDimension, RingSpec, hom_module
from weightkit.contra import (
    CertificateKind,
    ContraCertificate,
    TelescopeOperator,
    delta_completion,
    hom_from_completed,
    is_ideal_contramodule,
    is_localization_contramodule,
    is_s_contramodule,
    nilpotency_exponent,
    obstruction_period,
    projective_dimension_bound,
    reduce_completed,
    split_by_s,
    stabilization_depth,
    tower_limits,
    verify_certificate,
    verify_flatness,
    verify_ideal_certificate,
)
from weightkit.common.exceptions import NotContramoduleError, PreconditionError, RingMismatchError
from weightkit.utils import abelian_groups

INTEGERS = RingSpec.integers()

cyclic_orders = st.lists(st.integers(0, 48), max_size=3)
elements = st.integers(-12, 12)


# =========================================================================
# s-反模判定 | s-contramodule verdicts
# =========================================================================

class TestContramoduleVerdicts:

    def test_nilpotent_torsion(self, cyclic):
        certificate = is_s_contramodule(cyclic(8), 2)
        assert certificate.verdict
        assert certificate.kind is CertificateKind.EXPONENT
        assert certificate.exponent == 3

    def test_invertible_part_gives_a_hom_witness(self, cyclic):
        certificate = is_s_contramodule(cyclic(6), 2)
        assert not certificate.verdict
        assert certificate.kind is CertificateKind.HOM
        assert verify_certificate(cyclic(6), certificate)

    def test_free_part_gives_an_ext_witness(self, cyclic):
        certificate = is_s_contramodule(cyclic(0), 2)
        assert not certificate.verdict
        assert certificate.kind is CertificateKind.EXT1
        assert certificate.period == 2

    def test_period_one(self, cyclic):
        assert is_s_contramodule(cyclic(0), 3).period == 1

    def test_zero_element(self, cyclic):
        certificate = is_s_contramodule(cyclic(0, 5), 0)
        assert certificate.verdict
        assert certificate.exponent == 1

    def test_units(self, cyclic):
        assert not is_s_contramodule(cyclic(3), -1).verdict
        assert is_s_contramodule(cyclic(3), -1).kind is CertificateKind.HOM
        assert is_s_contramodule(cyclic(1), 1).verdict

    def test_polynomial_ring(self, Qx):
        C = FpModule.cyclic(Qx, "x^2")
        assert is_s_contramodule(C, "x").exponent == 2
        assert not is_s_contramodule(C, "x - 1").verdict

    def test_certificate_dict_round_trip(self, Z, cyclic):
        for C, s in [(cyclic(8), 2), (cyclic(6), 2), (cyclic(0), 2)]:
            certificate = is_s_contramodule(C, s)
            restored = ContraCertificate.from_dict(Z, certificate.to_dict())
            assert restored == certificate
            assert verify_certificate(C, restored)

    def test_forged_certificates_are_rejected(self, Z, cyclic):
        forged = ContraCertificate(True, Z.element(2), CertificateKind.EXPONENT, exponent=2)
        assert not verify_certificate(cyclic(8), forged)
        wrong_seed = ContraCertificate(False, Z.element(2), CertificateKind.HOM,
                                       element=(Z.element(0),), multiplier=Z.element(1))
        assert not verify_certificate(cyclic(6), wrong_seed)
        bad_period = ContraCertificate(False, Z.element(2), CertificateKind.EXT1,
                                       element=(Z.element(1),), period=1)
        assert not verify_certificate(cyclic(0), bad_period)

    @pytest.mark.parametrize("s, period", [(3, 7), (3, 2), (2, 1), (2, 4), (-2, 2)])
    def test_ext_certificates_need_the_obstruction_period(self, Z, cyclic, s, period):
        forged = ContraCertificate(False, Z.element(s), CertificateKind.EXT1,
                                   element=(Z.element(1),), period=period)
        assert not verify_certificate(cyclic(0), forged)

    @pytest.mark.parametrize("s", [2, 3, -2, 5])
    def test_ext_certificates_verify_by_back_substitution(self, cyclic, s):
        certificate = is_s_contramodule(cyclic(0, 0), s)
        assert certificate.kind is CertificateKind.EXT1
        assert certificate.period == obstruction_period(s, INTEGERS)
        assert verify_certificate(cyclic(0, 0), certificate)

    def test_ext_certificates_on_a_torsion_direction_fail(self, Z, cyclic):
        forged = ContraCertificate(False, Z.element(3), CertificateKind.EXT1,
                                   element=(Z.element(1), Z.element(0)), period=1)
        assert not verify_certificate(cyclic(4, 0), forged)

    @given(cyclic_orders, elements)
    @settings(max_examples=150, deadline=None)
    def test_certificates_verify(self, orders, s):
        C = FpModule.from_cyclic_orders(INTEGERS, orders)
        certificate = is_s_contramodule(C, s)
        assert verify_certificate(C, certificate)
        # R[0⁻¹] = 0，任何模都是 0-反模 | R[0⁻¹] = 0, so every module is a 0-contramodule
        expected = s == 0 or (C.free_rank == 0 and nilpotency_exponent(C, s) is not None)
        assert certificate.verdict == expected


class TestIdealAndLocalization:

    def test_every_generator_must_pass(self, cyclic):
        certificate = is_ideal_contramodule(cyclic(8), [2, 4])
        assert certificate.verdict
        assert certificate.exponents == [3, 2]
        assert verify_ideal_certificate(cyclic(8), certificate)

    def test_first_failing_generator(self, cyclic):
        certificate = is_ideal_contramodule(cyclic(8), [2, 3, 5])
        assert not certificate.verdict
        assert certificate.failing == 1
        assert certificate.to_dict()["failing_generator"] == "3"
        assert verify_ideal_certificate(cyclic(8), certificate)

    def test_empty_generators_are_vacuous(self, cyclic):
        certificate = is_ideal_contramodule(cyclic(0), [])
        assert certificate.verdict
        assert certificate.vacuous
        assert certificate.to_dict()["vacuous"] is True

    def test_localization_uses_the_product(self, cyclic):
        assert is_localization_contramodule(cyclic(12), [2, 3]).verdict
        assert is_localization_contramodule(cyclic(12), [2, 3]).exponent == 2
        assert not is_localization_contramodule(cyclic(10), [2, 3]).verdict


# =========================================================================
# 分解与塔 | Splittings and towers
# =========================================================================

class TestTowers:

    def test_split_by_s(self, cyclic):
        split = split_by_s(cyclic(24, 0), 2)
        assert split.free_rank == 1
        assert split.nilpotent == cyclic(8)
        assert split.invertible == cyclic(3)

    def test_nilpotency_exponent(self, cyclic):
        assert nilpotency_exponent(cyclic(8, 4), 2) == 3
        assert nilpotency_exponent(cyclic(8, 3), 2) is None
        assert nilpotency_exponent(cyclic(0), 2) is None
        assert nilpotency_exponent(cyclic(1), 7) == 0

    def test_stabilization_depth(self, cyclic):
        assert stabilization_depth(cyclic(8, 3), 2) == 3
        assert stabilization_depth(cyclic(0), 2) == 0

    def test_tower_limits(self, cyclic):
        assert tower_limits(cyclic(8), 2).is_contramodule
        free = tower_limits(cyclic(0), 2)
        assert free.lim_vanishes
        assert not free.lim1_vanishes
        invertible = tower_limits(cyclic(3), 2)
        assert not invertible.lim_vanishes
        assert invertible.lim1_vanishes

    def test_default_depth(self, cyclic):
        assert tower_limits(cyclic(8), 2).depth == 5
        assert tower_limits(cyclic(8), 2, depth=2).to_dict()["depth"] == 2

    @pytest.mark.parametrize("orders, s, depth", [
        ([8], 2, 2), ([12, 0], 2, 3), ([9, 4], 3, 1), ([0, 0], 5, 2), ([6], -2, 4),
    ])
    def test_limits_come_from_truncated_operator_kernels(self, Z, orders, s, depth):
        C = FpModule.from_cyclic_orders(Z, orders)
        limits = tower_limits(C, s, depth=depth)
        power = ModuleHom.scalar(C, s ** depth)
        assert limits.stable_image == power.image()[0]
        assert limits.quotients[0] == power.cokernel()[0]
        assert limits.quotients[1] == ModuleHom.scalar(C, s ** (depth + 1)).cokernel()[0]
        truncated = TelescopeOperator(Z.element(s)).truncated_matrix(C, depth)
        _, inclusion = truncated.kernel()
        assert (truncated @ inclusion).is_zero

    @pytest.mark.parametrize("s", [2, 3, 4, 6, -2])
    def test_towers_agree_with_certificates(self, s):
        for C in abelian_groups(max_factor=12, max_free=1, max_torsion=2):
            assert tower_limits(C, s).is_contramodule == is_s_contramodule(C, s).verdict, C.describe()

    def test_projective_dimension_bound(self, Z):
        assert projective_dimension_bound(2, Z) is ProjectiveDimension.ONE
        assert projective_dimension_bound(-1, Z) is ProjectiveDimension.ZERO
        assert projective_dimension_bound(0, Z) is ProjectiveDimension.MINUS_INFINITY


class TestTelescopeOperator:

    def test_apply_and_back_substitute(self, Z):
        operator = TelescopeOperator(Z.element(2))
        values = [Matrix.from_rows(Z, [[v]]) for v in (1, 5, -3)]
        solution = operator.back_substitute(values)
        assert len(solution) == 4
        assert solution[0] == Matrix.from_rows(Z, [[1 + 2 * 5 + 4 * -3]])
        assert operator.apply(solution) == values

    def test_recover_inverts_the_tensored_operator(self, Z, cyclic):
        operator = TelescopeOperator(Z.element(3))
        M = cyclic(0)
        x = Matrix.from_rows(Z, [[4], [-1]])
        y = operator.tensor_matrix(M, 2)(x)
        assert y == Matrix.from_rows(Z, [[4], [-13], [3]])
        pieces = [y.submatrix([n], [0]) for n in range(3)]
        assert operator.recover(pieces) == [x.submatrix([0], [0]), x.submatrix([1], [0])]

    def test_truncated_matrix(self, Z, cyclic):
        truncated = TelescopeOperator(Z.element(2)).truncated_matrix(cyclic(0), 2)
        assert truncated.matrix == Matrix.from_rows(Z, [[1, -2, 0], [0, 1, -2]])
        assert truncated.is_surjective

    def test_truncated_matrix_checks_the_ring(self, Q, cyclic):
        with pytest.raises(RingMismatchError):
            TelescopeOperator(Q.element(2)).truncated_matrix(cyclic(0), 1)


# =========================================================================
# 完备化 | Completion
# =========================================================================

class TestCompletion:

    def test_delta(self, cyclic):
        completed = delta_completion(cyclic(0, 12), 2)
        assert completed.completed_rank == 1
        assert completed.finite_part == cyclic(4)
        assert completed.killed_part_record == cyclic(3)
        assert completed.exponent == 2
        assert completed.describe() == "Z_(2)^^1 ⊕ Z/4"

    def test_delta_at_a_unit_kills_everything(self, cyclic):
        completed = delta_completion(cyclic(5, 0), -1)
        assert completed.is_zero
        assert completed.killed_part_record == cyclic(5, 0)
        assert completed.describe() == "0"

    def test_reduce(self, cyclic):
        completed = delta_completion(cyclic(0, 12), 2)
        assert reduce_completed(completed, 1) == cyclic(2, 2)
        assert reduce_completed(completed, 3) == cyclic(8, 4)

    def test_reduce_needs_a_positive_level(self, cyclic):
        with pytest.raises(PreconditionError):
            reduce_completed(delta_completion(cyclic(0), 2), 0)

    def test_hom_from_completed(self, cyclic):
        completed = delta_completion(cyclic(0, 12), 2)
        assert hom_from_completed(completed, cyclic(2)) == cyclic(2, 2)
        assert hom_from_completed(completed, cyclic(8)) == cyclic(8, 4)

    def test_hom_from_completed_needs_a_contramodule(self, cyclic):
        completed = delta_completion(cyclic(0), 2)
        with pytest.raises(NotContramoduleError):
            hom_from_completed(completed, cyclic(3))
        with pytest.raises(NotContramoduleError):
            hom_from_completed(completed, cyclic(0))

    @given(cyclic_orders, st.sampled_from([2, 3, 4, 6]), st.integers(1, 8))
    @settings(max_examples=80, deadline=None)
    def test_completion_is_idempotent(self, orders, s, N):
        C = FpModule.from_cyclic_orders(INTEGERS, orders)
        completed = delta_completion(C, s)
        again = delta_completion(completed.finite_part.direct_sum(FpModule.free(INTEGERS, completed.completed_rank)), s)
        assert again.completed_rank == completed.completed_rank
        assert again.finite_part == completed.finite_part
        assert again.killed_part_record.is_zero
        assert reduce_completed(again, N) == reduce_completed(completed, N)
        # 有限层约化已是 s-反模，再完备化不变 | Finite reductions are s-contramodules already
        level = reduce_completed(completed, N)
        reduced = delta_completion(level, s)
        assert reduced.completed_rank == 0
        assert reduced.finite_part == level
        assert reduce_completed(reduced, N) == level

    @given(cyclic_orders, st.sampled_from([2, 3, 4, 6]), st.lists(st.integers(1, 3), max_size=2))
    @settings(max_examples=80, deadline=None)
    def test_hom_from_the_completion_is_adjoint(self, orders, s, exponents):
        C = FpModule.from_cyclic_orders(INTEGERS, orders)
        N = FpModule.from_cyclic_orders(INTEGERS, [s ** e for e in exponents])
        assert hom_from_completed(delta_completion(C, s), N) == hom_module(C, N)

    def test_hom_from_completed_checks_the_ring(self, Q, cyclic):
        with pytest.raises(RingMismatchError):
            hom_from_completed(delta_completion(cyclic(4), 2), FpModule.zero(Q))


# =========================================================================
# 平坦性 | Flatness
# =========================================================================

class TestFlatness:

    def test_samples_are_flat(self, cyclic):
        report = verify_flatness(2, [cyclic(4), cyclic(0, 3), cyclic(1)])
        assert report.passed
        assert len(report.checks) == 3

    def test_zero_element(self, cyclic):
        report = verify_flatness(0, [cyclic(2)])
        assert report.passed
        assert report.checks[0].detail["reason"] == "zero localization"

    def test_without_samples(self, Z):
        assert verify_flatness(2, []).notes == ["no samples"]
        assert verify_flatness(2, [], spec=Z).passed

    def test_polynomial_ring(self, F3x):
        samples = [FpModule.cyclic(F3x, "x^2"), FpModule.free(F3x, 1)]
        assert verify_flatness("x + 1", samples, depth=2).passed
