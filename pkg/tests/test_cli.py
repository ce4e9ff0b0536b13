"""Command line: problem files, exit codes and reports"""
import json
from pathlib import Path

import pytest

from main import main
from src.algebra import ProblemFormatError, QuantificationPolicy, Ring
from src.helpers import (
    load_problem,
    parse_module_text,
    parse_policy,
    parse_problem,
    resolve_input,
    serialize_problem,
)

PROBLEMS = Path(__file__).resolve().parent.parent / "problems"


def write_problem(tmp_path, data, name="problem.json"):
    path = tmp_path / name
    path.write_text(json.dumps(data), encoding="utf-8")
    return str(path)


def z4_problem(*checks):
    return {"ring": "Z/4", "ambient_rank": 1, "relations": [[4]],
            "submodules": {"N": [[2]]}, "checks": list(checks)}


def run_machine(capsys, *argv):
    code = main([*argv, "--format", "machine", "--quiet"])
    return code, json.loads(capsys.readouterr().out)


class TestProblemFiles:
    def test_bundled_problems_load(self):
        z4 = load_problem(str(PROBLEMS / "z4.json"))
        assert z4.ring == Ring.mod(4)
        assert [c.check for c in z4.checks] == ["pure", "n-pure"]
        z = load_problem(str(PROBLEMS / "z.json"))
        assert z.ring == Ring.integers()
        assert z.checks[0].policy == "bounded:8"

    def test_serialized_problem_reads_back(self):
        problem = load_problem(str(PROBLEMS / "z4.json"))
        assert parse_problem(serialize_problem(problem)) == problem

    def test_level_shorthand(self):
        problem = parse_problem(json.dumps(z4_problem({"check": "3-pure", "submodule": "N"})))
        assert problem.checks[0].check == "n-pure"
        assert problem.checks[0].n == 3
        agreeing = parse_problem(json.dumps(z4_problem({"check": "3-pure", "submodule": "N", "n": 3})))
        assert agreeing.checks[0].n == 3

    @pytest.mark.parametrize("data", [
        [],
        {"ambient_rank": 1},
        {"ring": "Q", "ambient_rank": 1},
        {"ring": "Z", "ambient_rank": -1},
        {"ring": "Z", "ambient_rank": 2, "relations": [[1]]},
        {"ring": "Z", "ambient_rank": 1, "relations": [["a"]]},
        z4_problem({"check": "perfect", "submodule": "N"}),
        z4_problem({"check": "pure", "submodule": "K"}),
        z4_problem({"check": "pure", "colour": "red"}),
        z4_problem({"check": "n-pure", "n": 0}),
        z4_problem({"check": "pure", "policy": "sometimes"}),
        z4_problem({"check": "3-pure", "submodule": "N", "n": 2}),
        z4_problem({"check": "n-pure", "submodule": "N", "n": True}),
        z4_problem({"check": "maximal-pure", "submodule": "N", "strict": "no"}),
        z4_problem({"check": "product-characterization", "unrestricted": 1}),
        z4_problem({"check": "pure", "submodule": "N", "policy": 8}),
    ])
    def test_malformed(self, data):
        with pytest.raises(ProblemFormatError):
            parse_problem(json.dumps(data))

    def test_not_json(self):
        with pytest.raises(ProblemFormatError):
            parse_problem("{ring: Z")

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_problem(str(tmp_path / "absent.json"))


class TestShortForms:
    def test_policies(self):
        assert parse_policy(None) is None
        assert parse_policy("auto") is None
        assert parse_policy("residue") is None
        assert parse_policy("exhaustive") == QuantificationPolicy.exhaustive()
        assert parse_policy("residue:6") == QuantificationPolicy.residue(6)
        assert parse_policy("bounded:5") == QuantificationPolicy.bounded(5)

    @pytest.mark.parametrize("text", ["bounded:x", "exhaustive:3", "everything"])
    def test_bad_policies(self, text):
        with pytest.raises(ProblemFormatError):
            parse_policy(text)

    def test_module_text(self):
        z12 = parse_module_text("Z12")
        assert z12.ring == Ring.mod(12)
        assert z12.relations == ((12,),)
        pair = parse_module_text("Z8+Z4 over Z")
        assert pair.ring == Ring.integers()
        assert pair.relations == ((8, 0), (0, 4))
        assert parse_module_text("Z+Z2").ring == Ring.integers()
        assert parse_module_text("Z4+Z6").ring == Ring.mod(12)

    def test_module_text_errors(self):
        with pytest.raises(ProblemFormatError):
            parse_module_text("Q8")
        with pytest.raises(ProblemFormatError):
            parse_module_text("Z8 over R")

    def test_resolve_input(self):
        assert resolve_input(str(PROBLEMS / "z4.json")).checks
        assert resolve_input("Z6").ring == Ring.mod(6)


class TestCheckCommand:
    def test_failure_exit_code(self, capsys):
        code, report = run_machine(capsys, "check", str(PROBLEMS / "z4.json"))
        assert code == 1
        assert [v["outcome"] for v in report["verdicts"]] == ["fails", "holds"]
        assert [v["check"] for v in report["verdicts"]] == ["pure(N)", "2-pure(N)"]
        assert "witness" in report["verdicts"][0]

    def test_all_hold(self, tmp_path, capsys):
        path = write_problem(tmp_path, z4_problem({"check": "n-pure", "submodule": "N", "n": 2}))
        assert main(["check", path, "--quiet"]) == 0
        assert capsys.readouterr().out.startswith("✓ 2-pure(N)")

    def test_unknown_exit_code(self, tmp_path, capsys):
        data = {"ring": "Z", "ambient_rank": 1, "submodules": {"N": [[1]]},
                "checks": [{"check": "n-pure", "submodule": "N", "policy": "bounded:6"}]}
        code, report = run_machine(capsys, "check", write_problem(tmp_path, data))
        assert code == 2
        assert report["verdicts"][0]["outcome"] == "unknown"
        assert report["verdicts"][0]["bound"] == 6

    def test_two_z_is_refuted_within_the_bound(self, capsys):
        code, report = run_machine(capsys, "check", str(PROBLEMS / "z.json"))
        assert code == 1
        assert report["verdicts"][0]["outcome"] == "fails"

    def test_no_checks(self, tmp_path, capsys):
        code, report = run_machine(capsys, "check", write_problem(tmp_path, z4_problem()))
        assert code == 0
        assert report["verdicts"] == []

    def test_run_wide_level(self, tmp_path, capsys):
        path = write_problem(tmp_path, {"ring": "Z/8", "ambient_rank": 1, "relations": [[8]],
                                        "submodules": {"N": [[2]]},
                                        "checks": [{"check": "n-pure", "submodule": "N"}]})
        assert main(["check", path, "--n", "3", "--quiet"]) == 0
        assert main(["check", path, "--n", "2", "--quiet"]) == 1

    def test_machine_output_is_reproducible(self, capsys):
        main(["check", str(PROBLEMS / "z.json"), "--format", "machine", "--quiet"])
        first = capsys.readouterr().out
        main(["check", str(PROBLEMS / "z.json"), "--format", "machine", "--quiet"])
        assert capsys.readouterr().out == first
        report = json.loads(first)
        assert list(report) == ["command", "inputs_digest", "verdicts", "violations", "timing"]
        assert report["timing"] is None

    def test_timing_on_request(self, capsys):
        _, report = run_machine(capsys, "check", str(PROBLEMS / "z4.json"), "--timing")
        assert report["timing"] is not None

    @pytest.mark.parametrize("data", [{"ring": "Q", "ambient_rank": 1}, "not a problem"])
    def test_bad_problem(self, tmp_path, capsys, data):
        path = tmp_path / "bad.json"
        path.write_text(data if isinstance(data, str) else json.dumps(data), encoding="utf-8")
        assert main(["check", str(path), "--quiet"]) == 3
        assert capsys.readouterr().err.startswith("Error:")

    def test_missing_file(self, tmp_path):
        assert main(["check", str(tmp_path / "absent.json"), "--quiet"]) == 3

    def test_residue_policy_must_cover_the_module(self, tmp_path):
        path = write_problem(tmp_path, {"ring": "Z", "ambient_rank": 1, "relations": [[8]],
                                        "submodules": {"N": [[2]]},
                                        "checks": [{"check": "pure", "submodule": "N"}]})
        assert main(["check", path, "--policy", "residue:2", "--quiet"]) == 3
        assert main(["check", path, "--policy", "residue:16", "--quiet"]) == 1
        assert main(["check", path, "--quiet"]) == 1

    def test_budget_limits_enumerating_checks(self, tmp_path, capsys):
        path = write_problem(tmp_path, {"ring": "Z/12", "ambient_rank": 1, "relations": [[12]],
                                        "submodules": {"N": [[2]]},
                                        "checks": [{"check": "fully-n-pure"}]})
        assert main(["check", path, "--budget", "4", "--quiet"]) == 3
        assert "Error:" in capsys.readouterr().err
        assert main(["check", path, "--budget", "12", "--quiet"]) in (0, 1)

    def test_argument_errors(self):
        with pytest.raises(SystemExit) as exc:
            main(["check"])
        assert exc.value.code == 3
        with pytest.raises(SystemExit) as exc:
            main(["transmogrify"])
        assert exc.value.code == 3


class TestOtherCommands:
    def test_scan_clean(self, capsys):
        code, report = run_machine(capsys, "scan", "pure-implies-2pure", "cyclic:2-12")
        assert code == 0
        assert report["violations"] == []

    def test_scan_with_violations(self, capsys):
        code, report = run_machine(capsys, "scan", "local-global", "cyclic-z:8-8", "--n", "3")
        assert code == 1
        assert report["violations"]
        assert report["violations"][0]["claim"] == "local-global"

    def test_unknown_claim(self, capsys):
        assert main(["scan", "everything-holds", "cyclic:2-4", "--quiet"]) == 3
        assert "Error:" in capsys.readouterr().err

    def test_mine(self, capsys):
        code, report = run_machine(capsys, "mine", "n-pure-not-(n-1)-pure", "cyclic:2-8")
        assert code == 0
        assert any(line.startswith("Z4 over Z/4: <(2)>") for line in report["verdicts"][0]["result"])

    def test_enumerate(self, capsys):
        code, report = run_machine(capsys, "enumerate", "Z12")
        assert code == 0
        assert len(report["verdicts"][0]["result"]) == 6

    def test_enumerate_infinite(self):
        assert main(["enumerate", "Z", "--quiet"]) == 3

    def test_maximal_pure_over_a_field(self, capsys):
        code, report = run_machine(capsys, "maximal-pure", "Z2+Z2 over Z/2")
        assert code == 0
        assert len(report["verdicts"][0]["result"]) == 3

    def test_maximal_pure_budget(self):
        assert main(["maximal-pure", "Z12", "--budget", "4", "--quiet"]) == 3
