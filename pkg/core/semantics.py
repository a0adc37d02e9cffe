"""
Brute-force semantics for finite mu.

Valuations are subsets B of {0..mu-1}; valuation number i (0 <= i < 2^mu) is the
set of bits of i, so the "least" valuation is the one with the smallest bitmask.
A formula's truth table is a numpy boolean vector indexed by that number, which
turns entailment into a handful of vector operations.
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from core.errors import AtomRangeError, check_cap
from core.formula import Atom, BigAnd, BigOr, Neg
from core.limits import DEFAULT_MAX_MU

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class Valuation:
    """A set B of true atoms, with the ambient mu."""

    members: frozenset
    mu: int

    def __post_init__(self):
        members = frozenset(self.members)
        bad = [m for m in members if not 0 <= m < self.mu]
        if bad:
            raise AtomRangeError(f"valuation members {sorted(bad)} out of range for mu={self.mu}")
        object.__setattr__(self, "members", members)

    @classmethod
    def from_mask(cls, mask, mu):
        return cls(frozenset(i for i in range(mu) if mask >> i & 1), mu)

    @property
    def mask(self):
        return sum(1 << i for i in self.members)

    def to_list(self):
        return sorted(self.members)

    def __str__(self):
        return "{" + ",".join(str(i) for i in self.to_list()) + "}"


@dataclass(frozen=True)
class Theory:
    """Duplicate-free formula set, sorted by compare."""

    formulas: tuple = ()

    def __post_init__(self):
        unique = {f.key: f for f in self.formulas}
        object.__setattr__(self, "formulas", tuple(unique[k] for k in sorted(unique)))

    def __iter__(self):
        return iter(self.formulas)

    def __len__(self):
        return len(self.formulas)

    def __contains__(self, formula):
        return formula in self.formulas

    def union(self, other):
        return Theory(self.formulas + tuple(other))


@dataclass(frozen=True)
class EntailmentVerdict:
    holds: bool
    countermodel: Optional[Valuation] = None


@dataclass(frozen=True)
class ConsistencyVerdict:
    consistent: bool
    model: Optional[Valuation] = None


def evaluate(valuation, formula):
    """
    Decide B ⊨ φ.

    Empty disjunctions are false and empty conjunctions are true.

    Raises:
        AtomRangeError: If the formula mentions an atom >= valuation.mu
    """
    if isinstance(formula, Atom):
        if formula.index >= valuation.mu:
            raise AtomRangeError(f"atom a{formula.index} out of range for mu={valuation.mu}")
        return formula.index in valuation.members
    if isinstance(formula, Neg):
        return not evaluate(valuation, formula.operand)
    if isinstance(formula, BigOr):
        return any(evaluate(valuation, arg) for arg in formula.args)
    return all(evaluate(valuation, arg) for arg in formula.args)


class TruthTable:
    """
    Memoized truth vectors over all 2^mu valuations of one universe.

    Attributes:
        universe (AtomUniverse): The ambient atoms
        size (int): Number of valuations, 2^mu
    """

    def __init__(self, universe, max_mu=DEFAULT_MAX_MU):
        check_cap("max_mu", max_mu, universe.mu)
        self.universe = universe
        self.size = 2 ** universe.mu
        numbers = np.arange(self.size, dtype=np.int64)
        self._atom_vectors = [((numbers >> i) & 1).astype(bool) for i in range(universe.mu)]
        self._cache = {}

    def vector(self, formula):
        """Boolean vector v with v[i] = (valuation i ⊨ formula)."""
        cached = self._cache.get(formula)
        if cached is not None:
            return cached

        if isinstance(formula, Atom):
            if formula.index >= self.universe.mu:
                raise AtomRangeError(
                    f"atom a{formula.index} out of range for mu={self.universe.mu}"
                )
            result = self._atom_vectors[formula.index]
        elif isinstance(formula, Neg):
            result = ~self.vector(formula.operand)
        elif isinstance(formula, BigOr):
            result = np.zeros(self.size, dtype=bool)
            for arg in formula.args:
                result = result | self.vector(arg)
        else:
            result = np.ones(self.size, dtype=bool)
            for arg in formula.args:
                result = result & self.vector(arg)

        result.setflags(write=False)
        self._cache[formula] = result
        return result

    def mask(self, formula):
        """The set of satisfying valuations as a Python int bitset."""
        return vector_to_mask(self.vector(formula))

    def models(self, gamma):
        """Boolean vector of the valuations satisfying every member of gamma."""
        result = np.ones(self.size, dtype=bool)
        for formula in gamma:
            result = result & self.vector(formula)
        return result

    def entails(self, gamma, formula, gamma_models=None):
        """
        Decide Γ ⊨ φ, returning the least countermodel when it fails.

        Args:
            gamma (iterable of Formula): Hypotheses
            formula (Formula): Conclusion
            gamma_models (numpy.ndarray, optional): Precomputed models(gamma)
        """
        models = self.models(gamma) if gamma_models is None else gamma_models
        bad = models & ~self.vector(formula)
        if not bad.any():
            return EntailmentVerdict(True)
        first = int(np.argmax(bad))
        return EntailmentVerdict(False, Valuation.from_mask(first, self.universe.mu))

    def consistent(self, gamma):
        """Return the least model of gamma, if there is one."""
        models = self.models(gamma)
        if not models.any():
            return ConsistencyVerdict(False)
        first = int(np.argmax(models))
        return ConsistencyVerdict(True, Valuation.from_mask(first, self.universe.mu))


def vector_to_mask(vector):
    """Pack a boolean vector into an int whose bit i is vector[i]."""
    packed = np.packbits(np.asarray(vector, dtype=bool), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def truth_table(formula, universe, max_mu=DEFAULT_MAX_MU):
    """Truth vector of a single formula."""
    return TruthTable(universe, max_mu).vector(formula)


def entails(gamma, formula, universe, max_mu=DEFAULT_MAX_MU):
    """
    Semantic consequence Γ ⊨ φ over all 2^mu valuations.

    Raises:
        ResourceCapError: When mu > max_mu
    """
    return TruthTable(universe, max_mu).entails(gamma, formula)


def consistent(gamma, universe, max_mu=DEFAULT_MAX_MU):
    """Least model of gamma, or an inconsistent verdict."""
    return TruthTable(universe, max_mu).consistent(gamma)


def models(gamma, universe, max_mu=DEFAULT_MAX_MU):
    """All models of gamma, in valuation order."""
    vector = TruthTable(universe, max_mu).models(gamma)
    return [Valuation.from_mask(int(i), universe.mu) for i in np.flatnonzero(vector)]
