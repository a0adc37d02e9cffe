import json

import pytest

from core.errors import InputError
from data.loaders import parse_frame
from main import EXIT_CAP, EXIT_INPUT, EXIT_PASS, EXIT_REFUTED, dispatch
from utils.cli import parse_arguments, parse_valuation


def run(capsys, *argv):
    """Dispatch in machine format; return the exit code and the decoded report."""
    code = dispatch([*argv, "--format", "machine"])
    out = capsys.readouterr().out
    return code, json.loads(out) if out else None


class TestArguments:
    def test_defaults(self):
        args = parse_arguments(["mv", "check", "x.frame"])
        assert (args.group, args.action) == ("mv", "check")
        assert args.format == "human"
        assert args.root == 0 and args.independence is None and not args.s42

    def test_valuation_text(self):
        assert parse_valuation("0, 2") == [0, 2]
        assert parse_valuation("  ") == []
        with pytest.raises(InputError):
            parse_valuation("0,x")


class TestFormulaCommands:
    def test_eval(self, capsys, samples):
        code, report = run(capsys, "fml", "eval", str(samples / "formulas.txt"), "--valuation", "0,2")
        assert code == EXIT_PASS
        assert report["mu"] == 3
        assert [r["value"] for r in report["results"]] == [True] * 4

    def test_eval_refuted(self, capsys, samples):
        code, report = run(capsys, "fml", "eval", str(samples / "formulas.txt"), "--valuation", "0")
        assert code == EXIT_REFUTED
        assert report["results"][1] == {"formula": "(or a1 a2)", "value": False}

    def test_entails(self, capsys, samples):
        code, report = run(capsys, "fml", "entails", "a1", "--hyp", str(samples / "mp_hyps.txt"))
        assert code == EXIT_PASS
        assert report["countermodel"] is None

    def test_countermodel(self, capsys):
        code, report = run(capsys, "fml", "entails", "(imp a0 a1)")
        assert code == EXIT_REFUTED
        assert report["countermodel"] == [0]

    def test_mu_cap(self, capsys):
        assert dispatch(["fml", "entails", "a0", "--mu", "25"]) == EXIT_CAP
        assert "max_mu" in capsys.readouterr().err

    def test_atom_outside_mu(self, capsys):
        assert dispatch(["fml", "entails", "a3", "--mu", "2"]) == EXIT_INPUT

    def test_syntax_error(self, capsys):
        assert dispatch(["fml", "entails", "(or a0"]) == EXIT_INPUT
        assert capsys.readouterr().err.startswith("error:")

    def test_deep_nesting(self, capsys):
        deep = "(not " * 3000 + "a0" + ")" * 3000
        assert dispatch(["fml", "entails", deep]) == EXIT_INPUT
        assert "nested too deeply" in capsys.readouterr().err

    def test_bad_valuation(self, capsys, samples):
        assert dispatch(["fml", "eval", str(samples / "formulas.txt"), "--valuation", "one"]) == EXIT_INPUT

    def test_fragment(self, capsys):
        code, report = run(capsys, "fml", "fragment", "--mu", "1", "--ops", "neg", "--depth", "1")
        assert code == EXIT_PASS
        assert report["formulas"] == ["(not (not a0))", "(not a0)", "a0"]


class TestProofCommands:
    def test_modus_ponens(self, capsys, samples):
        code, report = run(
            capsys, "proof", "check", str(samples / "mp_proof.sexp"), "--hyp", str(samples / "mp_hyps.txt")
        )
        assert code == EXIT_PASS
        assert report["accepted"] and report["conclusion"] == "a1"
        assert report["soundness_violation"] is None

    def test_incomplete_r1(self, capsys, samples):
        code, report = run(
            capsys, "proof", "check", str(samples / "r1_bad.sexp"), "--hyp", str(samples / "r1_hyps.txt")
        )
        assert code == EXIT_REFUTED
        assert report["failure"] == {"path": [], "reason": "premises do not match rule R1"}

    def test_missing_file(self, capsys, tmp_path):
        assert dispatch(["proof", "check", str(tmp_path / "none.sexp")]) == EXIT_INPUT

    def test_sample(self, capsys):
        code, report = run(capsys, "proof", "sample", "--count", "15", "--seed", "4")
        assert code == EXIT_PASS
        assert report["count"] == report["accepted"] == report["sound"] == 15


class TestPipelineCommand:
    def test_literal_pairs(self, capsys, samples):
        code, report = run(capsys, "buk", "run", str(samples / "pipeline_mu2.json"))
        assert code == EXIT_PASS
        assert report["poset"]["theory_models"] == [1]
        assert report["poset"]["classes"] == 1
        assert all(claim["passed"] for claim in report["claims"].values())

    def test_corrupt_covering(self, capsys, samples):
        code, report = run(capsys, "buk", "run", str(samples / "pipeline_corrupt.json"))
        assert code == EXIT_REFUTED
        assert report["covering"]["violations"][0]["kind"] == "adequacy"
        assert not report["claims"]["models"]["passed"]

    def test_bad_config(self, capsys, write_file):
        path = write_file("cfg.json", json.dumps({"mu": 2, "A": [], "kappa": 1}))
        assert dispatch(["buk", "run", path]) == EXIT_INPUT

    def test_poset_cap(self, capsys, samples):
        assert dispatch(["buk", "run", str(samples / "pipeline_mu2.json"), "--max-poset", "2"]) == EXIT_CAP


class TestPosetCommands:
    def test_fn(self, capsys):
        code, report = run(capsys, "poset", "fn", "3", "2", "2")
        assert code == EXIT_PASS
        assert report["elements"] == 7
        assert report["max_antichain"]["size"] == 2
        assert report["compatibility_agrees"]

    def test_analyze(self, capsys, samples):
        code, report = run(capsys, "poset", "analyze", str(samples / "diamond.poset"))
        assert code == EXIT_PASS
        # left and right meet in bottom, so no two elements are incompatible
        assert report["max_antichain"] == {"size": 1, "witness": [0], "labels": ["bottom"]}
        assert report["minimal_elements"] == ["bottom"]
        assert not report["atomless"]

    def test_analyze_without_bottom(self, capsys, samples):
        code, report = run(capsys, "poset", "analyze", str(samples / "vee.poset"))
        assert code == EXIT_PASS
        assert report["max_antichain"]["labels"] == ["left", "right"]
        assert report["minimal_elements"] == ["left", "right"]


class TestPlots:
    def test_preorder_drawing(self, capsys, samples, tmp_path):
        target = tmp_path / "diamond.png"
        code, _ = run(capsys, "poset", "analyze", str(samples / "diamond.poset"), "--plot", str(target))
        assert code == EXIT_PASS
        assert target.stat().st_size > 0

    def test_fn_drawing(self, capsys, tmp_path):
        target = tmp_path / "figures" / "fn.png"
        code, _ = run(capsys, "poset", "fn", "3", "2", "2", "--plot", str(target))
        assert code == EXIT_PASS
        assert target.is_file()

    def test_frame_drawing(self, capsys, samples, tmp_path):
        target = tmp_path / "fork.png"
        run(capsys, "mv", "check", str(samples / "fork.frame"), "--plot", str(target))
        assert target.stat().st_size > 0


class TestFrameCommands:
    def test_fork_fails_confluence(self, capsys, samples):
        code, report = run(capsys, "mv", "check", str(samples / "fork.frame"), "--s42")
        assert code == EXIT_REFUTED
        assert report["s42"]["axioms"][".2"]["witness"] == {"world": 0, "labeling": {"p0": "010"}}
        assert report["buttons_at_root"] == [False]

    def test_two_buttons(self, capsys, samples):
        code, report = run(
            capsys, "mv", "check", str(samples / "two_buttons.frame"), "--independence", "2", "--s42"
        )
        assert code == EXIT_PASS
        assert report["buttons_at_root"] == [True, True]
        assert report["independence"]["passed"]

    def test_gen_writes_frame(self, capsys, tmp_path, samples):
        target = tmp_path / "model.frame"
        code, report = run(capsys, "mv", "gen", "2", "0", "--output", str(target))
        assert code == EXIT_PASS
        assert report["worlds"] == 4 and report["pairs"] == 9
        frame, labeling = parse_frame(target.read_text(encoding="utf-8"))
        expected, _ = parse_frame((samples / "two_buttons.frame").read_text(encoding="utf-8"))
        assert frame.edges() == expected.edges()
        assert labeling.rows() == ["0101", "0011"]

    def test_world_cap(self, capsys):
        assert dispatch(["mv", "gen", "4", "4", "--max-worlds", "100"]) == EXIT_CAP


class TestOutput:
    def test_usage_errors(self, capsys):
        assert dispatch(["proof"]) == EXIT_INPUT
        assert dispatch(["poset", "fn", "3", "two", "2"]) == EXIT_INPUT
        assert dispatch(["fml", "eval", "x", "--format", "xml"]) == EXIT_INPUT

    def test_help(self, capsys):
        assert dispatch(["--help"]) == EXIT_PASS

    def test_bad_cap(self, capsys):
        assert dispatch(["poset", "fn", "2", "2", "2", "--max-poset", "0"]) == EXIT_INPUT

    def test_machine_output_is_deterministic(self, capsys, samples):
        argv = ["buk", "run", str(samples / "pipeline_mu3.json"), "--format", "machine"]
        dispatch(argv)
        first = capsys.readouterr().out
        dispatch(argv)
        assert capsys.readouterr().out == first

    def test_human_banner(self, capsys, samples):
        assert dispatch(["poset", "analyze", str(samples / "diamond.poset")]) == EXIT_PASS
        out = capsys.readouterr().out
        assert out.startswith("=" * 80 + "\nPreorder analysis\n" + "=" * 80)
        assert "atomless: no" in out
