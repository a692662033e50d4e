"""
命令行测试：输入文档、分发器、报告、退出码与验收电池

CLI tests: input documents, dispatcher, reports, exit codes and the acceptance battery
"""

import importlib
import io
import json
from typing import Any, Dict, Optional

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weightkit.cli import BatteryConfig, CRITERIA, parse, run, run_battery, run_criteria, serialize
from weightkit.cli.main import EXIT_FAILED, EXIT_INPUT, EXIT_OK, main

# `weightkit.cli.main` resolves to the re-exported function; patch the submodule itself
cli_main = importlib.import_module("weightkit.cli.main")
from weightkit.common.exceptions import (
    ComplexError,
    DeclarationError,
    DocumentSyntaxError,
    InputError,
    PreconditionError,
    VerificationError,
)
from weightkit.common.language import use_language


def _document(declarations: Dict[str, Any], verb: Optional[str] = None, args: Optional[Dict[str, Any]] = None,
              expect: Optional[bool] = None, ring: str = "Z") -> str:
    data: Dict[str, Any] = {"ring": ring, "declarations": declarations}
    if verb is not None:
        command: Dict[str, Any] = {"verb": verb, "args": args or {}}
        if expect is not None:
            command["expect"] = expect
        data["command"] = command
    return json.dumps(data)


def _module(*orders: int) -> Dict[str, Any]:
    return {"type": "module", "value": {"orders": list(orders)}}


CONTRA_DOC = _document(
    {"M": _module(8), "s": {"type": "element", "value": "2"}},
    "contra", {"module": "M", "s": "s"}, expect=True,
)

small = st.integers(-6, 6)


def _grid(rows: int, cols: int):
    return st.lists(st.lists(small, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


declarations = st.one_of(
    st.builds(lambda rows: {"type": "matrix", "value": rows},
              st.integers(1, 3).flatmap(lambda r: st.integers(1, 3).flatmap(lambda c: _grid(r, c)))),
    st.builds(lambda orders: _module(*orders), st.lists(st.integers(0, 12), max_size=3)),
    st.builds(lambda g, rows: {"type": "module", "value": {"generators": g, "relations": rows}},
              st.just(2), st.lists(st.lists(small, min_size=2, max_size=2), max_size=2)),
    st.builds(lambda v: {"type": "element", "value": str(v)}, small),
    st.builds(lambda gens: {"type": "spec", "value": {"variant": "telescope", "gens": gens}},
              st.lists(small, min_size=1, max_size=2)),
    st.builds(lambda low, a: {"type": "complex", "value": {"low": low, "ranks": [1, 1], "differentials": [[[a]]]}},
              st.integers(-2, 2), small),
)


@st.composite
def documents(draw) -> str:
    ring = draw(st.sampled_from(["Z", "Q", "GF(5)"]))
    entries = draw(st.lists(declarations, max_size=4))
    named = {f"D{i}": entry for i, entry in enumerate(entries)}
    named["M"] = _module(*draw(st.lists(st.integers(0, 12), min_size=1, max_size=2)))
    expect = draw(st.sampled_from([None, True, False]))
    return _document(named, "hom", {"module": "M", "other": "M"}, expect=expect, ring=ring)


TINY_BATTERY = {
    "snf_samples": 3,
    "two_term_rank": 1,
    "two_term_bound": 1,
    "random_complexes": 4,
    "axiom_n_min": -1,
    "axiom_n_max": 0,
    "group_max_factor": 4,
    "group_max_free": 1,
    "group_max_torsion": 1,
    "contra_elements": [2, 3],
    "family_rank": 1,
    "family_bound": 2,
    "heart_max_factor": 4,
    "heart_max_free": 1,
    "heart_max_torsion": 1,
    "local_complexes": 40,
    "square_ranks": [0, 1],
    "square_gens": [2],
    "square_tests": [2, 4, 3],
    "projective_sequences": 3,
    "projective_k_max": 1,
    "flatness_elements": [2],
    "flatness_samples": 4,
}


# =========================================================================
# 输入文档 | Input documents
# =========================================================================

class TestDocuments:

    def test_parse(self, Z, cyclic):
        document = parse(CONTRA_DOC)
        assert document.ring == Z
        assert document.command.verb == "contra"
        assert document.command.expect is True
        assert document.lookup("M", "module") == cyclic(8)

    def test_serialize_round_trip(self):
        text = _document(
            {
                "A": {"type": "complex", "value": {"low": -1, "ranks": [1, 1], "differentials": [[[2]]]}},
                "f": {"type": "map", "value": {"source": "A", "target": "A", "components": {"-1": [[1]], "0": [[1]]}}},
            },
            "cone", {"map": "f"},
        )
        document = parse(text)
        assert parse(serialize(document)) == document
        assert serialize(parse(serialize(document))) == serialize(document)

    @given(documents())
    @settings(max_examples=60, deadline=None)
    def test_generated_documents_round_trip(self, text):
        document = parse(text)
        assert parse(serialize(document)) == document
        assert serialize(parse(serialize(document))) == serialize(document)
        assert set(document.declarations) == set(json.loads(text)["declarations"])

    def test_command_line_verb_fills_a_missing_command(self):
        document = parse(_document({"A": {"type": "matrix", "value": [[2]]}}), verb="snf")
        assert document.command.verb == "snf"
        assert document.command.args == {}

    def test_conflicting_verbs(self):
        with pytest.raises(InputError):
            parse(CONTRA_DOC, verb="snf")

    def test_unknown_verb(self):
        with pytest.raises(InputError):
            parse(_document({}, "integrate"))

    def test_syntax_error(self):
        with pytest.raises(DocumentSyntaxError) as info:
            parse('{"ring": "Z",\n "declarations": {,}}')
        assert info.value.line == 2

    @pytest.mark.parametrize("text", [
        '["Z"]',
        json.dumps({"declarations": {}}),
        json.dumps({"ring": "Z[x]", "command": {"verb": "snf"}}),
        json.dumps({"ring": "Z", "declarations": []}),
        json.dumps({"ring": "Z", "declarations": {}}),
    ])
    def test_malformed_documents(self, text):
        with pytest.raises(InputError):
            parse(text)

    def test_undeclared_reference(self):
        with pytest.raises(DeclarationError) as info:
            parse(_document({"M": _module(2)}, "hom", {"module": "M", "other": "N"}))
        assert info.value.name == "N"

    def test_declaration_errors_keep_the_cause(self):
        bad = {"type": "complex", "value": {"low": 3, "ranks": [1, 1, 1], "differentials": [[[1]], [[1]]]}}
        with pytest.raises(DeclarationError) as info:
            parse(_document({"C": bad}, "homology", {"complex": "C"}))
        assert info.value.name == "C"
        assert isinstance(info.value.__cause__, ComplexError)
        assert info.value.__cause__.degree == 3

    @pytest.mark.parametrize("declaration", [
        {"type": "tensor", "value": 1},
        {"value": 1},
        {"type": "module", "value": {"relations": []}},
        {"type": "spec", "value": {"variant": "matrices", "mats": [[[0]]]}},
    ])
    def test_invalid_declarations(self, declaration):
        with pytest.raises(DeclarationError):
            parse(_document({"X": declaration}, "snf", {}))

    def test_maps_need_declared_complexes(self):
        with pytest.raises(DeclarationError) as info:
            parse(_document({"f": {"type": "map", "value": {"source": "A", "target": "A"}}}, "cone", {"map": "f"}))
        assert info.value.name == "A"

    def test_wrong_declaration_type(self):
        document = parse(_document({"M": _module(2)}, "homology", {"complex": "M"}))
        with pytest.raises(DeclarationError):
            run(document)

    def test_chinese_messages(self):
        with use_language("CN"):
            with pytest.raises(InputError) as info:
                parse(_document({}, "integrate"))
            assert "未知命令" in str(info.value)
        assert "Unknown verb" in str(info.value)


# =========================================================================
# 分发器 | Dispatcher
# =========================================================================

class TestDispatcher:

    def test_snf(self):
        text = _document({"A": {"type": "matrix", "value": [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]}},
                         "snf", {"matrix": "A"})
        report = run(parse(text))
        assert report.outcome.result["invariant_factors"] == ["2", "6", "12"]
        assert report.outcome.verdict is None
        assert report.exit_code == 0

    def test_contra_report(self):
        report = run(parse(CONTRA_DOC))
        data = report.to_dict()
        assert data["verdict"] is True and data["satisfied"] is True
        assert data["certificates"][0]["kind"] == "exponent"
        assert data["result"]["reverified"] is True
        assert data["engine"]["name"] == "weightkit"
        assert "t-structure" in data["conventions"]
        assert "timing" in data

    def test_unmet_expectation(self):
        text = _document({"M": _module(6)}, "contra", {"module": "M", "s": 2}, expect=True)
        report = run(parse(text))
        assert report.outcome.verdict is False
        assert report.exit_code == 1
        assert "Result differs from the assertion" in report.render()

    def test_functors_cross_check(self):
        text = _document({"M": _module(4, 0), "N": _module(6)}, "ext1", {"module": "M", "other": "N"})
        report = run(parse(text))
        assert report.outcome.result["describe"] == "Z/2"
        assert report.outcome.checks.passed

    def test_weight_truncation(self):
        text = _document({"C": {"type": "complex", "value": {"low": -1, "ranks": [1, 1], "differentials": [[[2]]]}}},
                         "truncate-w", {"complex": "C", "n": 0})
        result = run(parse(text)).outcome.result
        assert (result["lower"]["low"], result["lower"]["ranks"]) == (0, [1])
        assert (result["upper"]["low"], result["upper"]["ranks"]) == (-1, [1])

    def test_localize(self):
        text = _document({"M": _module(12, 5, 0)}, "localize", {"gens": [2, 3], "module": "M"})
        result = run(parse(text)).outcome.result
        assert result["ring"]["ring"] == "Z[1/6]"
        assert result["module"]["rank"] == 1
        assert result["module"]["torsion"] == "Z/5"

    def test_vacuous_ideal(self):
        text = _document({"M": _module(0)}, "ideal-contra", {"module": "M", "gens": []})
        report = run(parse(text))
        assert report.outcome.verdict is True
        assert report.outcome.result["vacuous"] is True

    def test_heart_and_square(self):
        declarations = {
            "U": {"type": "spec", "value": {"variant": "matrices", "mats": [[[2]]]}},
            "A": _module(3),
            "B": _module(4),
        }
        assert run(parse(_document(declarations, "heart", {"module": "A", "spec": "U"}))).outcome.verdict
        report = run(parse(_document(declarations, "square", {"k": 2, "spec": "U", "tests": ["A", "B"]})))
        assert report.outcome.verdict and report.satisfied
        assert "skipped Z/4: not in the heart" in report.outcome.checks.notes

    def test_preconditions_propagate(self):
        declarations = {"T": {"type": "spec", "value": {"variant": "telescope", "gens": [2]}}, "A": _module(2)}
        with pytest.raises(PreconditionError):
            run(parse(_document(declarations, "heart-cone", {"module": "A", "spec": "T"})))

    def test_forged_certificate(self):
        declarations = {
            "M": _module(8),
            "c": {"type": "certificate", "value": {"verdict": True, "s": "2", "kind": "exponent", "exponent": 2}},
        }
        report = run(parse(_document(declarations, "check-certificate", {"module": "M", "certificate": "c"})))
        assert report.outcome.verdict is False
        assert report.outcome.result["claimed"] is True

    def test_verifiers_assert_success_by_default(self):
        text = _document({}, "verify-axioms", {"count": 3, "n_min": -1, "n_max": 1})
        report = run(parse(text), seed=5)
        assert report.expected is True
        assert report.satisfied

    def test_missing_argument(self):
        with pytest.raises(InputError):
            run(parse(_document({"M": _module(2)}, "hom", {"module": "M"})))

    def test_reports_are_deterministic(self):
        text = _document({}, "flatness", {"s": 2, "count": 5})
        first, second = run(parse(text), seed=3), run(parse(text), seed=3)
        assert first.to_dict(timing=False) == second.to_dict(timing=False)


# =========================================================================
# 入口 | Entry point
# =========================================================================

class TestMain:

    @pytest.fixture(autouse=True)
    def quiet_logging(self, mocker):
        """保持会话的语言与日志处理器 | Keep the session language and log handlers"""
        return mocker.patch.object(cli_main.WeightKitLogger, "setup_logging")

    def test_report_to_stdout(self, tmp_path, capsys, quiet_logging):
        path = tmp_path / "contra.json"
        path.write_text(CONTRA_DOC, encoding="utf-8")
        assert main(["contra", "--in", str(path)]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["verdict"] is True
        quiet_logging.assert_called_once()

    def test_report_to_file(self, tmp_path, capsys):
        source, target = tmp_path / "in.json", tmp_path / "out.json"
        source.write_text(CONTRA_DOC, encoding="utf-8")
        assert main(["contra", "--in", str(source), "--out", str(target)]) == EXIT_OK
        assert json.loads(target.read_text(encoding="utf-8"))["satisfied"] is True
        assert "Verdict: True" in capsys.readouterr().out

    def test_standard_input(self, monkeypatch, capsys):
        monkeypatch.setattr("sys.stdin", io.StringIO(CONTRA_DOC))
        assert main(["contra", "--in", "-"]) == EXIT_OK

    def test_failed_assertion(self, tmp_path):
        path = tmp_path / "contra.json"
        path.write_text(_document({"M": _module(0)}, "contra", {"module": "M", "s": 2}, expect=True), encoding="utf-8")
        assert main(["contra", "--in", str(path)]) == EXIT_FAILED

    def test_input_errors(self, tmp_path, capsys):
        assert main(["snf", "--in", str(tmp_path / "missing.json")]) == EXIT_INPUT
        path = tmp_path / "broken.json"
        path.write_text('{"ring": ', encoding="utf-8")
        assert main(["snf", "--in", str(path)]) == EXIT_INPUT
        assert "[error]" in capsys.readouterr().err

    def test_precondition_errors_are_input_errors(self, tmp_path):
        path = tmp_path / "cone.json"
        declarations = {"T": {"type": "spec", "value": {"variant": "telescope", "gens": [2]}}, "A": _module(2)}
        path.write_text(_document(declarations, "heart-cone", {"module": "A", "spec": "T"}), encoding="utf-8")
        assert main(["heart-cone", "--in", str(path)]) == EXIT_INPUT

    def test_internal_failures_exit_as_failed_checks(self, tmp_path, capsys, mocker):
        path = tmp_path / "contra.json"
        path.write_text(CONTRA_DOC, encoding="utf-8")
        failure = VerificationError(cn="同伦恒等式不成立", en="homotopy identity fails")
        mocker.patch.object(cli_main, "run", side_effect=failure)
        assert main(["contra", "--in", str(path)]) == EXIT_FAILED
        assert "[internal error] homotopy identity fails" in capsys.readouterr().err

    def test_unknown_verb_on_the_command_line(self):
        with pytest.raises(SystemExit) as info:
            main(["integrate", "--in", "-"])
        assert info.value.code == 2


# =========================================================================
# 验收电池 | Acceptance battery
# =========================================================================

class TestBattery:

    def test_default_bounds_cover_the_exhaustive_battery(self):
        config = BatteryConfig()
        assert (config.family_rank, config.family_bound) == (2, 4)
        assert (config.heart_max_factor, config.heart_max_free, config.heart_max_torsion) == (16, 2, 2)
        assert (config.group_max_factor, config.group_max_free) == (16, 2)
        assert config.contra_elements == (2, 3, 4, 6)

    def test_config_from_args(self):
        config = BatteryConfig.from_args({"square_gens": [2, 3]}, seed=4)
        assert config.square_gens == (2, 3)
        assert config.seed == 4
        assert config.to_dict()["square_gens"] == [2, 3]
        with pytest.raises(InputError):
            BatteryConfig.from_args({"criteria": ["1-snf-soundness"]})

    def test_selected_criteria_keep_their_order(self):
        config = BatteryConfig.from_args(TINY_BATTERY)
        names = [name for name, _ in run_criteria(config, selected=["5-contra-oracle", "1-snf-soundness"])]
        assert names == ["1-snf-soundness", "5-contra-oracle"]

    def test_tiny_battery(self):
        config = BatteryConfig.from_args(TINY_BATTERY, seed=1)
        report = run_battery(config)
        assert [check.name for check in report.checks] == [name for name, _ in CRITERIA]
        assert report.passed, [check.to_dict() for check in report.failures]

    def test_thread_count_does_not_change_the_report(self):
        config = BatteryConfig.from_args(TINY_BATTERY, seed=2)
        assert run_battery(config, jobs=1).to_dict() == run_battery(config, jobs=3).to_dict()

    def test_verify_all_verb(self):
        text = _document({}, "verify-all", dict(TINY_BATTERY, flatness_samples=2))
        report = run(parse(text), level=3, jobs=2)
        assert report.outcome.result["config"]["n_max"] == 3
        assert report.satisfied

    @pytest.mark.slow
    def test_full_battery(self):
        report = run_battery(BatteryConfig(), jobs=4)
        assert report.passed, [check.to_dict() for check in report.failures]
