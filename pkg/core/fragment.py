"""
Finite fragments of the language: a deterministic, capped closure of the
literals under negation and small disjunctions/conjunctions.
"""

import heapq
import itertools
import logging
from dataclasses import dataclass, field

from core.errors import ConfigurationError
from core.formula import BigAnd, BigOr, Neg, diagram, literals
from core.limits import DEFAULT_FRAGMENT_SIZE_CAP

LOGGER = logging.getLogger(__name__)

NEG = "neg"
BIG_OR = "big_or"
BIG_AND = "big_and"
CLOSURE_OPS = (NEG, BIG_OR, BIG_AND)


@dataclass(frozen=True)
class FragmentSpec:
    """
    Recipe for a fragment.

    Attributes:
        seed_literals (bool): Start from all atoms and negated atoms
        closure_ops (frozenset): Subset of {"neg", "big_or", "big_and"}
        arity_cap (int): Largest argument set formed by big_or/big_and
        depth_cap (int): Number of closure rounds
        size_cap (int): Largest fragment (diagrams not counted)
        min_arity (int): Smallest argument set formed by big_or/big_and
        diagrams (bool): Append one complete literal conjunction per valuation
    """

    seed_literals: bool = True
    closure_ops: frozenset = field(default_factory=frozenset)
    arity_cap: int = 2
    depth_cap: int = 0
    size_cap: int = DEFAULT_FRAGMENT_SIZE_CAP
    min_arity: int = 2
    diagrams: bool = False

    def __post_init__(self):
        object.__setattr__(self, "closure_ops", frozenset(self.closure_ops))
        unknown = self.closure_ops - set(CLOSURE_OPS)
        if unknown:
            raise ConfigurationError(f"unknown closure operations: {sorted(unknown)}")
        for name in ("arity_cap", "depth_cap", "size_cap", "min_arity"):
            if getattr(self, name) < 0:
                raise ConfigurationError(f"{name} must be non-negative")

    @classmethod
    def for_pipeline(cls, size_cap=64):
        """
        Default fragment for the forcing-poset pipeline: one round of negation,
        binary conjunction and binary disjunction over the literals, plus the
        complete literal conjunctions.
        """
        return cls(
            closure_ops=frozenset(CLOSURE_OPS),
            arity_cap=2,
            depth_cap=1,
            size_cap=size_cap,
            diagrams=True,
        )


@dataclass(frozen=True)
class Fragment:
    """Sorted formula list plus the truncation flag."""

    formulas: tuple
    truncated: bool = False

    def __iter__(self):
        return iter(self.formulas)

    def __len__(self):
        return len(self.formulas)

    def __contains__(self, formula):
        return formula in self._members

    def __getitem__(self, index):
        return self.formulas[index]

    @property
    def _members(self):
        members = self.__dict__.get("_member_set")
        if members is None:
            members = frozenset(self.formulas)
            object.__setattr__(self, "_member_set", members)
        return members


def generate_fragment(spec, universe):
    """
    Generate the fragment described by spec.

    Each closure round applies the requested operations to everything produced so
    far. When a round would overflow size_cap, only the compare-least new
    formulas are kept and the fragment is flagged truncated.

    Args:
        spec (FragmentSpec): Generation recipe
        universe (AtomUniverse): Ambient atoms

    Returns:
        Fragment: Formulas sorted by compare, with the truncation flag
    """
    current = set(literals(universe)) if spec.seed_literals else set()
    if spec.size_cap < len(current):
        raise ConfigurationError(
            f"size_cap {spec.size_cap} is smaller than the {len(current)} seed literals"
        )

    truncated = False
    for depth in range(1, spec.depth_cap + 1):
        base = sorted(current)
        room = spec.size_cap - len(current)
        fresh = (f for f in _closure_candidates(base, spec) if f not in current)
        # Candidates can repeat across operations; dedupe before taking the least ones
        unique = {f.key: f for f in fresh}
        if len(unique) > room:
            chosen = heapq.nsmallest(room, unique.values())
            truncated = True
        else:
            chosen = list(unique.values())
        current.update(chosen)
        LOGGER.debug("Closure round %d added %d formulas", depth, len(chosen))
        if truncated or not chosen:
            break

    if spec.diagrams:
        for mask in range(2 ** universe.mu):
            current.add(diagram((i for i in range(universe.mu) if mask >> i & 1), universe))

    if truncated:
        LOGGER.info("Fragment truncated at %d formulas", spec.size_cap)
    return Fragment(tuple(sorted(current)), truncated)


def _closure_candidates(base, spec):
    if NEG in spec.closure_ops:
        for formula in base:
            yield Neg(formula)
    for op, node_type in ((BIG_OR, BigOr), (BIG_AND, BigAnd)):
        if op not in spec.closure_ops:
            continue
        for size in range(spec.min_arity, spec.arity_cap + 1):
            for combo in itertools.combinations(base, size):
                yield node_type(combo)
