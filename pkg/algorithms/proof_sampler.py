"""
Seeded random proofs for soundness sweeps.

Proofs are assembled only through the rule builders, so every sampled tree is
well-shaped by construction; the hypotheses it uses are collected on the way.
"""

import logging
from dataclasses import dataclass

import numpy as np

from algorithms.proof_kernel import axiom, build_mp, build_r1, build_r2, hypothesis
from core.formula import AtomUniverse, BigAnd, BigOr, Neg, conj, disj, iff, implies, literals
from core.semantics import Theory

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class SampledProof:
    universe: AtomUniverse
    hypotheses: Theory
    tree: object


class ProofSampler:
    """
    Random proof generator over small universes.

    Attributes:
        rng (numpy.random.Generator): Source of randomness
        max_mu (int): Universes have 1..max_mu atoms
        max_depth (int): Largest rule nesting
    """

    def __init__(self, seed=0, max_mu=4, max_depth=3):
        self.rng = np.random.default_rng(seed)
        self.max_mu = max_mu
        self.max_depth = max_depth

    def _pick(self, items):
        return items[int(self.rng.integers(len(items)))]

    def _coin(self, p=0.5):
        return bool(self.rng.random() < p)

    def random_formula(self, universe):
        """A literal, or a small negation/conjunction/disjunction of literals."""
        pool = literals(universe)
        first = self._pick(pool)
        roll = int(self.rng.integers(4))
        if roll == 0:
            return first
        if roll == 1:
            return Neg(first)
        second = self._pick(pool)
        return conj(first, second) if roll == 2 else disj(first, second)

    def random_set(self, universe, low=1, high=3):
        size = int(self.rng.integers(low, high + 1))
        return [self.random_formula(universe) for _ in range(size)]

    def random_axiom(self, universe):
        """An instance of one of the four schemas, chosen at random."""
        roll = int(self.rng.integers(6))
        phis = self.random_set(universe)
        phi = self._pick(phis)
        if roll == 0:
            return implies(phi, BigOr(phis))
        if roll == 1:
            return implies(BigAnd(phis), phi)
        if roll == 2:
            return iff(Neg(BigAnd(phis)), BigOr(Neg(f) for f in phis))
        if roll == 3:
            return iff(Neg(BigOr(phis)), BigAnd(Neg(f) for f in phis))
        if roll == 4:
            other = self.random_formula(universe)
            return iff(conj(other, BigOr(phis)), BigOr(conj(other, f) for f in phis))
        # Tautologies with a two-letter skeleton
        other = self.random_formula(universe)
        if other == phi:
            return disj(Neg(phi), phi)
        return self._pick([
            disj(Neg(phi), phi),
            implies(conj(phi, other), phi),
            implies(phi, implies(other, phi)),
            iff(Neg(Neg(phi)), phi),
        ])

    def prove_implication(self, antecedent, consequent, gamma):
        """A leaf proving antecedent → consequent: an axiom when one fits, else a hypothesis."""
        target = implies(antecedent, consequent)
        fits_a2 = (isinstance(consequent, BigOr) and antecedent in consequent.args) or (
            isinstance(antecedent, BigAnd) and consequent in antecedent.args
        )
        if fits_a2 and self._coin(0.8):
            return axiom(target)
        gamma.append(target)
        return hypothesis(target)

    def sample_tree(self, universe, depth, gamma):
        """Random proof of bounded depth; hypotheses used are appended to gamma."""
        if depth == 0 or self._coin(0.25):
            if self._coin():
                return axiom(self.random_axiom(universe))
            formula = self.random_formula(universe)
            gamma.append(formula)
            return hypothesis(formula)

        rule = int(self.rng.integers(3))
        if rule == 0:
            premise = self.sample_tree(universe, depth - 1, gamma)
            if self._coin():
                target = BigOr([premise.label, self.random_formula(universe)])
            else:
                target = self.random_formula(universe)
            return build_mp(premise, self.prove_implication(premise.label, target, gamma))

        if rule == 1:
            phis = self.random_set(universe)
            extra = self.random_set(universe, 0, 1)
            psi = BigOr(phis + extra) if self._coin() else self.random_formula(universe)
            premises = [self.prove_implication(phi, psi, gamma) for phi in phis]
            if self._coin(0.3):
                premises.append(premises[0])
            return build_r1(premises, phis, psi)

        psis = self.random_set(universe)
        if self._coin():
            phi = BigAnd(psis + self.random_set(universe, 0, 1))
        else:
            phi = self.random_formula(universe)
        premises = [self.prove_implication(phi, psi, gamma) for psi in psis]
        if self._coin(0.3):
            premises.append(premises[-1])
        return build_r2(premises, phi, psis)

    def sample(self):
        universe = AtomUniverse(int(self.rng.integers(1, self.max_mu + 1)))
        gamma = []
        tree = self.sample_tree(universe, self.max_depth, gamma)
        # Unused hypotheses are harmless and widen the checked theories
        gamma.extend(self.random_set(universe, 0, 2))
        return SampledProof(universe, Theory(tuple(gamma)), tree)


def sample_proofs(count, seed=0, max_mu=4, max_depth=3):
    """Return `count` sampled proofs; identical seeds give identical lists."""
    sampler = ProofSampler(seed, max_mu, max_depth)
    proofs = [sampler.sample() for _ in range(count)]
    LOGGER.info("Sampled %d proofs (seed %d)", count, seed)
    return proofs


def sample_axiom_instances(count, seed=0, max_mu=4):
    """Random axiom instances paired with their universes."""
    sampler = ProofSampler(seed, max_mu)
    instances = []
    for _ in range(count):
        universe = AtomUniverse(int(sampler.rng.integers(1, max_mu + 1)))
        instances.append((universe, sampler.random_axiom(universe)))
    return instances
