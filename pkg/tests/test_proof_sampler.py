from algorithms.proof_kernel import audit_soundness, check_proof, hypotheses_of, recognize_axiom
from algorithms.proof_sampler import ProofSampler, sample_axiom_instances, sample_proofs
from core.semantics import truth_table


def test_same_seed_same_proofs():
    first = sample_proofs(20, seed=3)
    second = sample_proofs(20, seed=3)
    assert [p.tree for p in first] == [p.tree for p in second]
    assert [p.hypotheses for p in first] == [p.hypotheses for p in second]


def test_different_seeds_differ():
    assert [p.tree for p in sample_proofs(10, seed=1)] != [p.tree for p in sample_proofs(10, seed=2)]


def test_sampled_proofs_are_accepted_and_sound():
    for sampled in sample_proofs(50, seed=11):
        report = check_proof(sampled.tree, sampled.hypotheses)
        assert report.accepted, report.failure
        assert audit_soundness(sampled.tree, sampled.hypotheses, sampled.universe) is None


def test_hypotheses_cover_the_leaves():
    for sampled in sample_proofs(30, seed=5):
        assert set(hypotheses_of(sampled.tree)) <= set(sampled.hypotheses)


def test_universes_within_bounds():
    sampler = ProofSampler(seed=0, max_mu=2, max_depth=1)
    for _ in range(20):
        sampled = sampler.sample()
        assert 1 <= sampled.universe.mu <= 2
        for _, node in sampled.tree.walk():
            assert max(node.label.atoms(), default=-1) < sampled.universe.mu


def test_axiom_instances_are_recognized_and_valid():
    for universe, formula in sample_axiom_instances(100, seed=9):
        assert recognize_axiom(formula) is not None, str(formula)
        assert truth_table(formula, universe).all(), str(formula)
