"""
Proof kernel for the deduction system with axioms A1-A4 and rules MP, R1, R2.

A proof is a finite labeled tree. Leaves are hypotheses or axiom instances;
every internal node is a rule instance whose premise SET is the set of its
children's labels (the same premise may be proved by several children).
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from core.errors import RuleShapeError
from core.formula import (
    Atom,
    AtomUniverse,
    BigAnd,
    BigOr,
    Neg,
    biconditional_splits,
    conj,
    conjunction_splits,
    disj,
    disjunction_splits,
    implication_splits,
    implies,
)
from core.limits import DEFAULT_LETTER_CAP, DEFAULT_MAX_MU
from core.semantics import Theory, TruthTable

LOGGER = logging.getLogger(__name__)


class Justification(str, Enum):
    HYP = "hyp"
    A1 = "A1"
    A2 = "A2"
    A3 = "A3"
    A4 = "A4"
    MP = "MP"
    R1 = "R1"
    R2 = "R2"

    @classmethod
    def parse(cls, text):
        for tag in cls:
            if tag.value == text:
                return tag
        raise ValueError(f"unknown justification {text!r}")


AXIOM_TAGS = (Justification.A2, Justification.A3, Justification.A4, Justification.A1)
RULE_TAGS = (Justification.MP, Justification.R1, Justification.R2)


@dataclass(frozen=True)
class ProofTree:
    label: object
    just: Justification
    children: tuple = ()

    def walk(self, path=()):
        """Yield (path, node) depth-first, children in order; path is a tuple of child indices."""
        yield path, self
        for k, child in enumerate(self.children):
            yield from child.walk(path + (k,))

    def size(self):
        return sum(1 for _ in self.walk())


@dataclass(frozen=True)
class CheckReport:
    """
    Attributes:
        accepted (bool): Whether the tree is a proof
        conclusion (Formula or None): Root label when accepted
        failure (tuple or None): (path, reason) of the first offending node
    """

    accepted: bool
    conclusion: Optional[object] = None
    failure: Optional[tuple] = None


# ---------------------------------------------------------------------------
# Axiom recognizers

def is_a2_instance(formula):
    """φ → ⋁Φ with φ ∈ Φ, or ⋀Φ → φ with φ ∈ Φ."""
    for antecedent, consequent in implication_splits(formula):
        if isinstance(consequent, BigOr) and antecedent in consequent.args:
            return True
        if isinstance(antecedent, BigAnd) and consequent in antecedent.args:
            return True
    return False


def is_a3_instance(formula):
    """¬⋀Φ ↔ ⋁{¬φ : φ∈Φ}, or ¬⋁Φ ↔ ⋀{¬φ : φ∈Φ}."""
    for left, right in biconditional_splits(formula):
        if not isinstance(left, Neg):
            continue
        inner = left.operand
        if isinstance(inner, BigAnd) and right == BigOr(Neg(phi) for phi in inner.args):
            return True
        if isinstance(inner, BigOr) and right == BigAnd(Neg(phi) for phi in inner.args):
            return True
    return False


def is_a4_instance(formula):
    """φ ∧ ⋁Ψ ↔ ⋁{φ∧ψ : ψ∈Ψ}, or φ ∨ ⋀Ψ ↔ ⋀{φ∨ψ : ψ∈Ψ}."""
    for left, right in biconditional_splits(formula):
        for phi, rest in conjunction_splits(left):
            if isinstance(rest, BigOr) and right == BigOr(conj(phi, psi) for psi in rest.args):
                return True
        for phi, rest in disjunction_splits(left):
            if isinstance(rest, BigAnd) and right == BigAnd(disj(phi, psi) for psi in rest.args):
                return True
    return False


def skeletonize(formula, letter_cap=DEFAULT_LETTER_CAP):
    """
    Propositional skeleton of a formula.

    Negations and two-argument disjunctions/conjunctions are kept; every other
    subformula becomes a letter, identical subformulas sharing one letter.

    Returns:
        tuple or None: (skeleton over atoms a0.., letter count), or None past letter_cap
    """
    letters = {}

    def walk(node):
        if isinstance(node, Neg):
            inner = walk(node.operand)
            return None if inner is None else Neg(inner)
        if isinstance(node, (BigOr, BigAnd)) and len(node.args) == 2:
            parts = [walk(arg) for arg in node.args]
            if None in parts:
                return None
            return type(node)(parts)
        if node not in letters:
            if len(letters) >= letter_cap:
                return None
            letters[node] = len(letters)
        return Atom(letters[node])

    skeleton = walk(formula)
    if skeleton is None:
        return None
    return skeleton, len(letters)


def is_a1_instance(formula, letter_cap=DEFAULT_LETTER_CAP):
    """Substitution instance of a finitary tautology, found through the skeleton."""
    found = skeletonize(formula, letter_cap)
    if found is None:
        return False
    skeleton, count = found
    return bool(TruthTable(AtomUniverse(count), max_mu=letter_cap).vector(skeleton).all())


_RECOGNIZERS = {
    Justification.A2: is_a2_instance,
    Justification.A3: is_a3_instance,
    Justification.A4: is_a4_instance,
}


def is_axiom_instance(formula, tag, letter_cap=DEFAULT_LETTER_CAP):
    if tag == Justification.A1:
        return is_a1_instance(formula, letter_cap)
    return _RECOGNIZERS[tag](formula)


def recognize_axiom(formula, letter_cap=DEFAULT_LETTER_CAP):
    """First matching schema in the order A2, A3, A4, A1, or None."""
    for tag in AXIOM_TAGS:
        if is_axiom_instance(formula, tag, letter_cap):
            return tag
    return None


# ---------------------------------------------------------------------------
# Checking

def check_proof(tree, hypotheses, letter_cap=DEFAULT_LETTER_CAP):
    """
    Check a proof tree against the hypotheses.

    Args:
        tree (ProofTree): Candidate proof
        hypotheses (Theory or iterable of Formula): Γ
        letter_cap (int): Skeleton letter cap for A1

    Returns:
        CheckReport: Accepted with the root label as conclusion, or the path and
                     reason of the first offending node in depth-first order
    """
    gamma = set(hypotheses)
    for path, node in tree.walk():
        reason = _node_problem(node, gamma, letter_cap)
        if reason is not None:
            LOGGER.debug("Proof rejected at %s: %s", path, reason)
            return CheckReport(False, None, (path, reason))
    return CheckReport(True, tree.label, None)


def _node_problem(node, gamma, letter_cap):
    if not node.children:
        if node.just == Justification.HYP:
            return None if node.label in gamma else "hypothesis not in the theory"
        if node.just in AXIOM_TAGS:
            if is_axiom_instance(node.label, node.just, letter_cap):
                return None
            return f"not an instance of {node.just.value}"
        return f"{node.just.value} node has no premises; leaves must be hypotheses or axioms"

    if node.just not in RULE_TAGS:
        return f"{node.just.value} justification on a node with premises"

    premises = {child.label for child in node.children}
    if node.just == Justification.MP:
        matched = _matches_mp(node.label, premises)
    elif node.just == Justification.R1:
        matched = _matches_r1(node.label, premises)
    else:
        matched = _matches_r2(node.label, premises)
    return None if matched else f"premises do not match rule {node.just.value}"


def _matches_mp(label, premises):
    return any(premises == {phi, implies(phi, label)} for phi in premises)


def _matches_r1(label, premises):
    for antecedent, consequent in implication_splits(label):
        if isinstance(antecedent, BigOr):
            if premises == {implies(phi, consequent) for phi in antecedent.args}:
                return True
    return False


def _matches_r2(label, premises):
    for antecedent, consequent in implication_splits(label):
        if isinstance(consequent, BigAnd):
            if premises == {implies(antecedent, psi) for psi in consequent.args}:
                return True
    return False


def audit_soundness(tree, hypotheses, universe, max_mu=DEFAULT_MAX_MU):
    """
    Semantic audit: every node label must follow from the hypotheses.

    Returns:
        tuple or None: Path of the first node whose label is not entailed
    """
    table = TruthTable(universe, max_mu)
    gamma_models = table.models(hypotheses)
    for path, node in tree.walk():
        if not table.entails((), node.label, gamma_models=gamma_models).holds:
            return path
    return None


# ---------------------------------------------------------------------------
# Builders

def hypothesis(formula):
    return ProofTree(formula, Justification.HYP)


def axiom(formula, letter_cap=DEFAULT_LETTER_CAP):
    """Axiom leaf tagged with the first matching schema."""
    tag = recognize_axiom(formula, letter_cap)
    if tag is None:
        raise RuleShapeError(f"{formula} is not a recognized axiom instance")
    return ProofTree(formula, tag)


def build_mp(premise, implication):
    """From proofs of φ and φ → ψ, a proof of ψ."""
    for antecedent, consequent in implication_splits(implication.label):
        if antecedent == premise.label:
            return ProofTree(consequent, Justification.MP, (premise, implication))
    raise RuleShapeError(f"{implication.label} is not an implication from {premise.label}")


def build_r1(premises, phis, psi):
    """From proofs of φ → ψ for every φ ∈ Φ, a proof of ⋁Φ → ψ."""
    required = {implies(phi, psi) for phi in phis}
    _check_premises(premises, required, "R1")
    return ProofTree(implies(BigOr(phis), psi), Justification.R1, tuple(premises))


def build_r2(premises, phi, psis):
    """From proofs of φ → ψ for every ψ ∈ Ψ, a proof of φ → ⋀Ψ."""
    required = {implies(phi, psi) for psi in psis}
    _check_premises(premises, required, "R2")
    return ProofTree(implies(phi, BigAnd(psis)), Justification.R2, tuple(premises))


def _check_premises(premises, required, rule):
    if not premises:
        raise RuleShapeError(f"{rule} needs at least one premise")
    labels = {p.label for p in premises}
    if labels != required:
        missing = sorted(str(f) for f in required - labels)
        extra = sorted(str(f) for f in labels - required)
        raise RuleShapeError(f"{rule} premises mismatch: missing {missing}, unexpected {extra}")


def hypotheses_of(tree):
    """Theory of all hypothesis leaves of a tree."""
    return Theory(tuple(node.label for _, node in tree.walk() if node.just == Justification.HYP))
