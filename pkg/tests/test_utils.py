"""
工具测试：确定性样本与 JSON 文档编解码

Utils tests: deterministic samples and the JSON document coder
"""

import pytest

from weightkit import Matrix
from weightkit.utils import (
    DocumentCoder,
    SampleGenerator,
    abelian_groups,
    divisor_chains,
    heart_sequences,
    nonsingular_matrices,
    two_term_matrices,
)
from weightkit.common.exceptions import ComplexError, DocumentSyntaxError, ValidationError


# =========================================================================
# 样本 | Samples
# =========================================================================

class TestExhaustiveFamilies:

    def test_divisor_chains(self):
        assert list(divisor_chains((2, 4), 2)) == [(), (2,), (4,), (2, 2), (2, 4), (4, 4)]

    def test_abelian_groups(self, cyclic):
        groups = list(abelian_groups(max_factor=4, max_free=1, max_torsion=1))
        assert len(groups) == 8
        assert groups[0].is_zero
        assert groups[-1] == cyclic(4, 0)

    def test_two_term_matrices(self, Z):
        assert len(list(two_term_matrices(Z, max_rank=1, bound=1))) == 3
        assert [m.shape for m in two_term_matrices(Z, max_rank=2, bound=0)] == [(1, 1), (1, 2), (2, 1), (2, 2)]

    def test_nonsingular_matrices(self, Z):
        values = sorted(int(str(m[0, 0])) for m in nonsingular_matrices(Z, max_rank=1, bound=2))
        assert values == [-2, -1, 1, 2]


class TestSampleGenerator:

    def test_same_seed_same_samples(self, Z):
        first, second = SampleGenerator(Z, seed=11), SampleGenerator(Z, seed=11)
        for _ in range(5):
            assert DocumentCoder.encode_complex(first.complex()) == DocumentCoder.encode_complex(second.complex())
        assert first.module() == second.module()

    def test_unimodular_pairs(self, Z, Qx):
        for spec in (Z, Qx):
            generator = SampleGenerator(spec, seed=3)
            for n in range(4):
                P, P_inv = generator.unimodular(n)
                assert P @ P_inv == Matrix.identity(spec, n)

    def test_nonzero_elements(self, F5):
        generator = SampleGenerator(F5, seed=0)
        assert all(not generator.element(nonzero=True).is_zero for _ in range(30))

    def test_resolution(self, Z, cyclic):
        resolution = SampleGenerator(Z).resolution(cyclic(4), degree=-1)
        assert (resolution.low, resolution.high) == (-2, -1)


class TestHeartSequences:

    def test_sequences_are_exact(self, Z):
        sequences = heart_sequences(Z, [Z.element(2)], 6, seed=4)
        assert len(sequences) == 6
        for sequence in sequences:
            sequence.validate()
            for X in (sequence.left, sequence.middle, sequence.right):
                assert X.free_rank == 0

    def test_every_third_sequence_splits(self, Z):
        sequence = heart_sequences(Z, [Z.element(4), Z.element(6)], 3, seed=2)[2]
        assert sequence.middle == sequence.left.direct_sum(sequence.right)

    @pytest.mark.parametrize("gens", [[3, 5], [0], [-1]])
    def test_degenerate_generators(self, Z, gens):
        sequences = heart_sequences(Z, [Z.element(g) for g in gens], 2)
        assert all(sequence.middle.is_zero for sequence in sequences)

    def test_seed_is_deterministic(self, Z):
        first = heart_sequences(Z, [Z.element(3)], 5, seed=9)
        second = heart_sequences(Z, [Z.element(3)], 5, seed=9)
        assert [s.middle for s in first] == [s.middle for s in second]


# =========================================================================
# 文档编解码 | Document coder
# =========================================================================

class TestDocumentCoder:

    def test_syntax_errors_carry_the_position(self):
        with pytest.raises(DocumentSyntaxError) as info:
            DocumentCoder.loads('{\n"a": ]\n}')
        assert (info.value.line, info.value.column) == (2, 6)
        assert "line 2" in str(info.value)

    def test_dumps_is_sorted_and_indented(self):
        assert DocumentCoder.dumps({"b": 1, "a": [1]}) == '{\n  "a": [\n    1\n  ],\n  "b": 1\n}'
        assert "Δ" in DocumentCoder.dumps({"name": "Δ"})

    def test_matrices(self, Z, matrix):
        assert DocumentCoder.decode_matrix(Z, [[1, "2"]]) == matrix([[1, 2]])
        empty = DocumentCoder.decode_matrix(Z, {"rows": 0, "cols": 3, "entries": []})
        assert empty.shape == (0, 3)
        assert DocumentCoder.encode_matrix(empty) == {"rows": 0, "cols": 3, "entries": []}

    @pytest.mark.parametrize("value", [
        {"rows": 2, "cols": 1, "entries": [[1]]},
        5,
        {"rows": 1},
    ])
    def test_bad_matrices(self, Z, value):
        with pytest.raises(ValidationError):
            DocumentCoder.decode_matrix(Z, value)

    def test_modules(self, Z, cyclic):
        assert DocumentCoder.decode_module(Z, {"orders": [2, 0]}) == cyclic(2, 0)
        module = DocumentCoder.decode_module(Z, {"generators": 2, "relations": [[2, 0]]})
        assert module == cyclic(2, 0)
        assert DocumentCoder.encode_module(module) == {"generators": 2, "relations": [["2", "0"]]}
        assert DocumentCoder.decode_module(Z, {"generators": 1}) == cyclic(0)
        with pytest.raises(ValidationError):
            DocumentCoder.decode_module(Z, {})

    def test_homs(self, Z, cyclic):
        value = {"source": {"orders": [4]}, "target": {"orders": [2]}, "matrix": [[1]]}
        h = DocumentCoder.decode_hom(Z, value)
        assert h.is_surjective and not h.is_injective
        assert DocumentCoder.decode_hom(Z, DocumentCoder.encode_hom(h)).source == cyclic(4)

    def test_complexes(self, Z):
        M = DocumentCoder.decode_complex(Z, {"low": -1, "ranks": [1, 1]})
        assert M.differential(-1).is_zero
        encoded = DocumentCoder.encode_complex(M)
        assert encoded["low"] == -1 and encoded["ranks"] == [1, 1]

    def test_complexes_are_checked(self, Z):
        with pytest.raises(ComplexError) as info:
            DocumentCoder.decode_complex(Z, {"low": 2, "ranks": [1, 1, 1], "differentials": [[[1]], [[1]]]})
        assert info.value.degree == 2

    def test_chain_maps(self, Z):
        M = DocumentCoder.decode_complex(Z, {"ranks": [1]})
        f = DocumentCoder.decode_chain_map(Z, {"components": {"0": [[3]]}}, M, M)
        assert DocumentCoder.encode_chain_map(f)["components"] == {"0": {"rows": 1, "cols": 1, "entries": [["3"]]}}
