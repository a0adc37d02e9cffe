import pytest

from algorithms.proof_kernel import (
    Justification,
    ProofTree,
    audit_soundness,
    axiom,
    build_mp,
    build_r1,
    build_r2,
    check_proof,
    hypotheses_of,
    hypothesis,
    is_a1_instance,
    is_a2_instance,
    is_a3_instance,
    is_a4_instance,
    is_axiom_instance,
    recognize_axiom,
    skeletonize,
)
from algorithms.proof_sampler import sample_proofs
from core.errors import RuleShapeError
from core.formula import Atom, AtomUniverse, BigAnd, BigOr, Neg, conj, disj, iff, implies
from core.semantics import Theory

a0, a1, a2, a3 = (Atom(i) for i in range(4))
U3 = AtomUniverse(3)

A2_OR = implies(a0, BigOr([a0, a1, a2]))
A2_AND = implies(BigAnd([a0, a1]), a1)
A3_AND = iff(Neg(BigAnd([a0, a1, a2])), BigOr([Neg(a0), Neg(a1), Neg(a2)]))
A3_OR = iff(Neg(BigOr([a0, a1])), BigAnd([Neg(a0), Neg(a1)]))
A4_AND = iff(conj(a0, BigOr([a1, a2, a3])), BigOr([conj(a0, a1), conj(a0, a2), conj(a0, a3)]))
A4_OR = iff(disj(a0, BigAnd([a1, a2])), BigAnd([disj(a0, a1), disj(a0, a2)]))
EXCLUDED_MIDDLE = disj(Neg(BigOr([a0, a1, a2])), BigOr([a0, a1, a2]))


class TestRecognizers:
    @pytest.mark.parametrize(
        "formula, tag",
        [
            (A2_OR, Justification.A2),
            (A2_AND, Justification.A2),
            (A3_AND, Justification.A3),
            (A3_OR, Justification.A3),
            (A4_AND, Justification.A4),
            (A4_OR, Justification.A4),
            (EXCLUDED_MIDDLE, Justification.A1),
        ],
    )
    def test_first_matching_schema(self, formula, tag):
        assert recognize_axiom(formula) == tag
        assert is_axiom_instance(formula, tag)

    def test_non_axioms(self):
        assert recognize_axiom(implies(a0, a1)) is None
        assert recognize_axiom(a0) is None
        assert not is_a2_instance(implies(a2, BigOr([a0, a1])))
        assert not is_a3_instance(iff(Neg(BigAnd([a0, a1])), BigOr([Neg(a0), a1])))
        assert not is_a4_instance(iff(conj(a0, BigOr([a1, a2])), BigOr([conj(a0, a1), a2])))

    def test_a1_accepts_every_propositional_tautology_shape(self):
        assert is_a1_instance(iff(Neg(Neg(a0)), a0))
        assert is_a1_instance(implies(a0, implies(a1, a0)))
        assert not is_a1_instance(implies(a0, a1))

    def test_skeleton_shares_letters(self):
        big = BigOr([a0, a1, a2])
        skeleton, count = skeletonize(disj(Neg(big), conj(big, a0)))
        assert count == 2
        assert skeleton == disj(Neg(Atom(0)), conj(Atom(0), Atom(1)))

    def test_letter_cap(self):
        formula = disj(Neg(a0), disj(a0, a1))
        assert is_a1_instance(formula)
        assert skeletonize(formula, letter_cap=1) is None
        assert not is_a1_instance(formula, letter_cap=1)

    def test_justification_tags(self):
        assert Justification.parse("MP") is Justification.MP
        assert Justification.parse("hyp") is Justification.HYP
        with pytest.raises(ValueError):
            Justification.parse("mp")


def mp_example():
    return build_mp(hypothesis(a0), hypothesis(implies(a0, a1)))


class TestCheckProof:
    def test_accepts_modus_ponens(self):
        report = check_proof(mp_example(), Theory((a0, implies(a0, a1))))
        assert report.accepted
        assert report.conclusion == a1
        assert report.failure is None

    def test_duplicate_premises_are_one_set(self):
        tree = ProofTree(a1, Justification.MP, (hypothesis(a0), hypothesis(a0), hypothesis(implies(a0, a1))))
        assert check_proof(tree, [a0, implies(a0, a1)]).accepted

    def test_missing_hypothesis(self):
        report = check_proof(mp_example(), [a0])
        assert not report.accepted
        assert report.failure == ((1,), "hypothesis not in the theory")

    def test_first_failure_in_depth_first_order(self):
        inner = ProofTree(implies(a0, a1), Justification.MP, (hypothesis(a2), hypothesis(implies(a2, implies(a0, a1)))))
        tree = ProofTree(a1, Justification.MP, (hypothesis(a0), inner))
        report = check_proof(tree, [a0])
        assert report.failure[0] == (1, 0)

    def test_incomplete_r1(self):
        tree = ProofTree(implies(BigOr([a0, a1]), a2), Justification.R1, (hypothesis(implies(a0, a2)),))
        report = check_proof(tree, [implies(a0, a2)])
        assert report.failure == ((), "premises do not match rule R1")

    def test_rule_leaf_and_hypothesis_node(self):
        leaf = ProofTree(a0, Justification.MP)
        assert "no premises" in check_proof(leaf, [a0]).failure[1]
        node = ProofTree(a0, Justification.HYP, (hypothesis(a0),))
        assert "justification on a node with premises" in check_proof(node, [a0]).failure[1]

    def test_wrong_axiom_tag(self):
        tree = ProofTree(A2_OR, Justification.A3)
        assert check_proof(tree, []).failure == ((), "not an instance of A3")

    def test_axiom_leaf(self):
        assert check_proof(axiom(A4_OR), []).accepted

    def test_r1_and_r2(self):
        r1 = build_r1([hypothesis(implies(a0, a2)), hypothesis(implies(a1, a2))], [a0, a1], a2)
        assert r1.label == implies(BigOr([a0, a1]), a2)
        assert check_proof(r1, hypotheses_of(r1)).accepted

        r2 = build_r2([hypothesis(implies(a0, a1)), hypothesis(implies(a0, a2))], a0, [a1, a2])
        assert r2.label == implies(a0, BigAnd([a1, a2]))
        assert check_proof(r2, hypotheses_of(r2)).accepted

    def test_r2_with_an_axiom_premise(self):
        premise = axiom(implies(BigAnd([a0, a1]), a0))
        tree = build_r2([premise], BigAnd([a0, a1]), [a0])
        assert check_proof(tree, []).accepted
        assert audit_soundness(tree, [], AtomUniverse(2)) is None


class TestBuilders:
    def test_mp_shape(self):
        with pytest.raises(RuleShapeError):
            build_mp(hypothesis(a1), hypothesis(implies(a0, a1)))

    def test_r1_needs_premises(self):
        with pytest.raises(RuleShapeError):
            build_r1([], [a0], a1)

    def test_r1_mismatch(self):
        with pytest.raises(RuleShapeError):
            build_r1([hypothesis(implies(a0, a2))], [a0, a1], a2)

    def test_r2_mismatch(self):
        with pytest.raises(RuleShapeError):
            build_r2([hypothesis(implies(a1, a2))], a0, [a2])

    def test_axiom_builder_rejects_non_axioms(self):
        with pytest.raises(RuleShapeError):
            axiom(implies(a0, a1))
        assert axiom(A3_OR).just is Justification.A3


class TestSoundnessAudit:
    def test_accepted_proof_is_sound(self):
        tree = mp_example()
        assert audit_soundness(tree, [a0, implies(a0, a1)], AtomUniverse(2)) is None

    def test_reports_first_unentailed_node(self):
        assert audit_soundness(mp_example(), [a0], AtomUniverse(2)) == ()

    def test_tree_helpers(self):
        tree = mp_example()
        assert tree.size() == 3
        assert [path for path, _ in tree.walk()] == [(), (0,), (1,)]
        assert set(hypotheses_of(tree)) == {a0, implies(a0, a1)}


def test_rejections_are_stable():
    rejected = 0
    for sampled in sample_proofs(30, seed=11):
        first = check_proof(sampled.tree, [])
        if first.accepted:
            continue
        rejected += 1
        for _ in range(3):
            assert check_proof(sampled.tree, []).failure == first.failure
    assert rejected
