import pytest

from algorithms.proof_kernel import Justification, check_proof
from core.errors import (
    AtomRangeError,
    ConfigurationError,
    FormulaSyntaxError,
    FrameError,
    InputError,
    PosetError,
    ProofFormatError,
)
from core.formula import Atom, AtomUniverse, BigOr, Neg, implies
from data.loaders import (
    format_frame,
    format_poset,
    format_proof,
    infer_universe,
    parse_formula_lines,
    parse_frame,
    parse_poset,
    parse_proof,
    read_formula_file,
    read_frame_file,
    read_pipeline_config,
    read_poset_file,
    read_proof_file,
)

a0, a1, a2 = Atom(0), Atom(1), Atom(2)


class TestFormulaFiles:
    def test_sample(self, samples):
        formulas = read_formula_file(samples / "formulas.txt")
        assert formulas[0] == a0
        assert formulas[1] == BigOr([a1, a2])
        assert infer_universe(formulas).mu == 3

    def test_comments_and_blank_lines(self):
        text = "# header\n\na0\n   \n(not a1)\n"
        assert parse_formula_lines(text) == [a0, Neg(a1)]

    def test_error_names_the_line(self):
        with pytest.raises(FormulaSyntaxError) as caught:
            parse_formula_lines("a0\n# note\n(or a0\n")
        assert str(caught.value).startswith("line 3:")

    def test_universe_bound(self):
        with pytest.raises(AtomRangeError):
            parse_formula_lines("a0\na4\n", AtomUniverse(3))

    def test_empty_file_infers_one_atom(self):
        assert infer_universe([]).mu == 1

    def test_missing_file(self, tmp_path):
        with pytest.raises(InputError, match="cannot read"):
            read_formula_file(tmp_path / "absent.txt")


class TestProofFiles:
    def test_sample_proof(self, samples):
        tree = read_proof_file(samples / "mp_proof.sexp")
        hypotheses = read_formula_file(samples / "mp_hyps.txt")
        assert tree.label == a1
        assert tree.just is Justification.MP
        assert check_proof(tree, hypotheses).accepted

    def test_format_round_trip(self, samples):
        tree = read_proof_file(samples / "r1_bad.sexp")
        text = format_proof(tree)
        assert text.splitlines()[1].startswith("  (node")
        assert parse_proof(text) == tree

    @pytest.mark.parametrize(
        "text",
        [
            "(leaf a0 hyp)",
            "(node a0)",
            "(node a0 (hyp))",
            "(node a0 lemma)",
            "a0",
        ],
    )
    def test_bad_shapes(self, text):
        with pytest.raises(ProofFormatError):
            parse_proof(text)

    def test_bad_formula_inside_a_proof(self):
        with pytest.raises(FormulaSyntaxError):
            parse_proof("(node (imp a0) MP)")

    def test_unbalanced(self):
        with pytest.raises(FormulaSyntaxError):
            parse_proof("(node a0 hyp")

    def test_implication_label(self):
        tree = parse_proof("(node (imp a0 a1) hyp)")
        assert tree.label == implies(a0, a1)
        assert tree.children == ()


class TestPosetFiles:
    def test_diamond(self, samples):
        preorder = read_poset_file(samples / "diamond.poset")
        assert preorder.labels == ("bottom", "left", "right", "top")
        assert preorder.leq[preorder.index("bottom"), preorder.index("top")]
        assert not preorder.leq[preorder.index("left"), preorder.index("right")]

    def test_format_round_trip(self, samples):
        preorder = read_poset_file(samples / "diamond.poset")
        again = parse_poset(format_poset(preorder))
        assert again.labels == preorder.labels
        assert (again.leq == preorder.leq).all()

    def test_unknown_directive(self):
        with pytest.raises(PosetError, match="line 2"):
            parse_poset("element x\nbelow x x\n")

    def test_unknown_element(self):
        with pytest.raises(PosetError):
            parse_poset("element x\nleq x y\n")

    def test_not_transitive(self):
        with pytest.raises(PosetError):
            parse_poset("element x\nelement y\nelement z\nleq x y\nleq y z\n")


class TestFrameFiles:
    def test_fork(self, samples):
        frame, labeling = read_frame_file(samples / "fork.frame")
        assert len(frame) == 3
        assert labeling.n_buttons == 1 and labeling.n_switches == 0
        assert labeling.rows() == ["010"]

    def test_format_round_trip(self, samples):
        frame, labeling = read_frame_file(samples / "two_buttons.frame")
        again, relabeled = parse_frame(format_frame(frame, labeling))
        assert again.edges() == frame.edges()
        assert relabeled.rows() == labeling.rows()

    @pytest.mark.parametrize(
        "text, message",
        [
            ("buttons 0\n", "no 'worlds N'"),
            ("worlds 2\nedge 0 0\nedge 1 1\nletter 012\n", "0/1"),
            ("worlds 2\nedge 0 0\nedge 1 1\nletter 1\n", "characters"),
            ("worlds two\n", "natural numbers"),
            ("worlds 2\nedge 0 0\n", "not reflexive"),
            ("worlds 1\nedge 0 0\ncolour 1\n", "unknown frame directive"),
            ("worlds 1\nbuttons 1\nedge 0 0\n", "truth rows"),
        ],
    )
    def test_errors(self, text, message):
        with pytest.raises(FrameError, match=message):
            parse_frame(text)


class TestPipelineConfigFiles:
    def test_samples(self, samples):
        cfg = read_pipeline_config(samples / "pipeline_mu3.json")
        assert cfg.universe.mu == 3
        assert cfg.target.to_list() == [0, 2]
        assert cfg.kappa == 3
        assert cfg.selection.pad_to == 2

    def test_invalid_json(self, write_file):
        path = write_file("broken.json", '{"mu": 2,')
        with pytest.raises(ConfigurationError, match="invalid JSON"):
            read_pipeline_config(path)

    def test_not_an_object(self, write_file):
        with pytest.raises(ConfigurationError):
            read_pipeline_config(write_file("list.json", "[1, 2]"))
