"""
Covering function → theory → forcing poset → generic filter, at finite scale.

Given a target valuation A and a covering function g on a finite family of
fragment subsets, the theory T holds one implication ⋁Γ → ⋁g(Γ) per covered Γ.
The poset P collects the fragment formulas T does not refute, preordered by
T-entailed implication, and G(A) is the set of members true under A. Every
claim about P and G(A) is then checked by enumeration; checks that range over
subsets of P (antichains, dense sets) range over the covered family dom(g).

Entailment is the semantic relation over all 2^mu valuations.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from core.errors import AtomRangeError, ConfigurationError, check_cap
from core.formula import (
    Atom,
    AtomUniverse,
    BigAnd,
    BigOr,
    Neg,
    iff,
    implies,
    literals,
    parse_formula,
)
from core.fragment import CLOSURE_OPS, FragmentSpec, generate_fragment
from core.limits import DEFAULT_MAX_MU, DEFAULT_MAX_POSET
from core.poset import FinitePreorder, filter_violation, quotient
from core.semantics import Theory, TruthTable, Valuation, evaluate, vector_to_mask

LOGGER = logging.getLogger(__name__)

SUBSETS = "subsets"
EXPLICIT = "explicit"
LEAST_TRUE = "least-true"


def set_key(formulas):
    """Canonical order on formula sets: by size, then by member keys."""
    return (len(formulas), tuple(f.key for f in formulas))


def as_formula_set(formulas):
    return tuple(sorted(set(formulas)))


# ---------------------------------------------------------------------------
# Configuration

@dataclass(frozen=True)
class DomainPolicy:
    """Which fragment subsets g is defined on."""

    kind: str = SUBSETS
    max_size: int = 3
    sets: tuple = ()


@dataclass(frozen=True)
class SelectionPolicy:
    """How g picks its values; explicit overrides win over the least-true selector."""

    kind: str = LEAST_TRUE
    pad_to: int = 1
    overrides: tuple = ()


@dataclass(frozen=True)
class PipelineConfig:
    """
    Everything a pipeline run needs.

    Attributes:
        universe (AtomUniverse): Atoms a0 .. a(mu-1)
        target (Valuation): The set A
        kappa (int): Covering bound, |g(Γ)| < kappa
        fragment (FragmentSpec): Fragment recipe
        domain (DomainPolicy): dom(g)
        selection (SelectionPolicy): Values of g
        extra_dense (tuple): Additional formula sets to test for density and meeting
    """

    universe: AtomUniverse
    target: Valuation
    kappa: int
    fragment: FragmentSpec = field(default_factory=FragmentSpec.for_pipeline)
    domain: DomainPolicy = field(default_factory=DomainPolicy)
    selection: SelectionPolicy = field(default_factory=SelectionPolicy)
    extra_dense: tuple = ()

    def __post_init__(self):
        if self.kappa < 2:
            raise ConfigurationError(f"kappa must be at least 2, got {self.kappa}", "kappa")
        if self.target.mu != self.universe.mu:
            raise ConfigurationError("target valuation and universe disagree on mu", "A")
        if not 1 <= self.selection.pad_to < self.kappa:
            raise ConfigurationError(
                f"pad_to must satisfy 1 <= pad_to < kappa, got {self.selection.pad_to}", "pad_to"
            )

    @classmethod
    def from_dict(cls, document):
        """
        Build a configuration from a decoded JSON document.

        Raises:
            ConfigurationError: Missing or unknown keys, bad values
            FormulaSyntaxError, AtomRangeError: Bad formulas inside the document
        """
        known = {"mu", "A", "kappa", "fragment", "g_domain", "selection", "extra_dense"}
        if not isinstance(document, dict):
            raise ConfigurationError("pipeline configuration must be a JSON object")
        unknown = sorted(set(document) - known)
        if unknown:
            raise ConfigurationError(f"unknown configuration keys: {unknown}", unknown[0])
        for key in ("mu", "A", "kappa"):
            if key not in document:
                raise ConfigurationError(f"missing configuration key {key!r}", key)

        universe = AtomUniverse(_natural(document["mu"], "mu"))
        members = [_natural(x, "A") for x in _list(document["A"], "A")]
        try:
            target = Valuation(frozenset(members), universe.mu)
        except AtomRangeError as error:
            raise ConfigurationError(str(error), "A") from None

        def parse_sets(raw, name):
            return tuple(
                as_formula_set(parse_formula(text, universe) for text in _list(entry, name))
                for entry in _list(raw, name)
            )

        fragment = _fragment_spec(document.get("fragment", {}))

        raw_domain = _object(document.get("g_domain", {}), "g_domain")
        kind = raw_domain.get("policy", SUBSETS)
        if kind == SUBSETS:
            domain = DomainPolicy(SUBSETS, _natural(raw_domain.get("max_size", 3), "max_size"))
        elif kind == EXPLICIT:
            domain = DomainPolicy(EXPLICIT, 0, parse_sets(raw_domain.get("sets", []), "sets"))
        else:
            raise ConfigurationError(f"unknown g_domain policy {kind!r}", "g_domain")

        raw_selection = _object(document.get("selection", {}), "selection")
        kind = raw_selection.get("policy", LEAST_TRUE)
        if kind not in (LEAST_TRUE, EXPLICIT):
            raise ConfigurationError(f"unknown selection policy {kind!r}", "selection")
        overrides = []
        for entry in _list(raw_selection.get("map", []), "map"):
            if not isinstance(entry, dict) or "gamma" not in entry or "image" not in entry:
                raise ConfigurationError("selection map entries need 'gamma' and 'image'", "map")
            gamma, image = parse_sets([entry["gamma"], entry["image"]], "map")
            overrides.append((gamma, image))
        selection = SelectionPolicy(
            kind, _natural(raw_selection.get("pad_to", 1), "pad_to"), tuple(overrides)
        )

        return cls(
            universe=universe,
            target=target,
            kappa=_natural(document["kappa"], "kappa"),
            fragment=fragment,
            domain=domain,
            selection=selection,
            extra_dense=parse_sets(document.get("extra_dense", []), "extra_dense"),
        )

    def to_dict(self):
        """JSON-ready echo of the configuration."""
        return {
            "mu": self.universe.mu,
            "A": self.target.to_list(),
            "kappa": self.kappa,
            "fragment": {
                "closure_ops": sorted(self.fragment.closure_ops),
                "arity_cap": self.fragment.arity_cap,
                "depth_cap": self.fragment.depth_cap,
                "size_cap": self.fragment.size_cap,
                "diagrams": self.fragment.diagrams,
            },
            "g_domain": (
                {"policy": SUBSETS, "max_size": self.domain.max_size}
                if self.domain.kind == SUBSETS
                else {"policy": EXPLICIT, "sets": [[str(f) for f in s] for s in self.domain.sets]}
            ),
            "selection": {
                "policy": self.selection.kind,
                "pad_to": self.selection.pad_to,
                "map": [
                    {"gamma": [str(f) for f in gamma], "image": [str(f) for f in image]}
                    for gamma, image in self.selection.overrides
                ],
            },
            "extra_dense": [[str(f) for f in d] for d in self.extra_dense],
        }


def _natural(value, name):
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise ConfigurationError(f"{name} must be a natural number, got {value!r}", name)
    return value


def _object(value, name):
    if not isinstance(value, dict):
        raise ConfigurationError(f"{name} must be an object", name)
    return value


def _list(value, name):
    if not isinstance(value, list):
        raise ConfigurationError(f"{name} must be a list", name)
    return value


def _fragment_spec(raw):
    if not isinstance(raw, dict):
        raise ConfigurationError("fragment must be an object", "fragment")
    default = FragmentSpec.for_pipeline()
    unknown = sorted(set(raw) - {"closure_ops", "arity_cap", "depth_cap", "size_cap", "diagrams"})
    if unknown:
        raise ConfigurationError(f"unknown fragment keys: {unknown}", unknown[0])
    ops = raw.get("closure_ops", sorted(default.closure_ops))
    if not set(_list(ops, "closure_ops")) <= set(CLOSURE_OPS):
        raise ConfigurationError(f"closure_ops must be drawn from {list(CLOSURE_OPS)}", "closure_ops")
    return FragmentSpec(
        closure_ops=frozenset(ops),
        arity_cap=_natural(raw.get("arity_cap", default.arity_cap), "arity_cap"),
        depth_cap=_natural(raw.get("depth_cap", default.depth_cap), "depth_cap"),
        size_cap=_natural(raw.get("size_cap", default.size_cap), "size_cap"),
        diagrams=bool(raw.get("diagrams", default.diagrams)),
    )


# ---------------------------------------------------------------------------
# Covering functions

class CoveringFunction:
    """
    A finite covering function: dom(g) with one image per set.

    Attributes:
        domain (tuple): Covered sets (sorted formula tuples) in canonical order
        kappa (int): Size bound for images
    """

    def __init__(self, mapping, kappa):
        self._map = {as_formula_set(gamma): as_formula_set(image) for gamma, image in mapping}
        self.domain = tuple(sorted(self._map, key=set_key))
        self.kappa = kappa

    def __len__(self):
        return len(self.domain)

    def __contains__(self, gamma):
        return as_formula_set(gamma) in self._map

    def __call__(self, gamma):
        return self._map[as_formula_set(gamma)]

    def items(self):
        return ((gamma, self._map[gamma]) for gamma in self.domain)


def covered_sets(cfg, fragment):
    """dom(g) per the configured policy, plus any sets named by selection overrides."""
    members = set(fragment)
    if cfg.domain.kind == SUBSETS:
        sets = [
            combo
            for size in range(1, cfg.domain.max_size + 1)
            for combo in itertools.combinations(fragment.formulas, size)
        ]
    else:
        sets = list(cfg.domain.sets)
    sets.extend(gamma for gamma, _ in cfg.selection.overrides)

    for gamma in sets:
        if not gamma:
            raise ConfigurationError("covered sets must be nonempty", "g_domain")
        for formula in gamma:
            if formula not in members:
                raise ConfigurationError(
                    f"covered set mentions {formula}, which is not in the fragment", str(formula)
                )
    return sorted(set(as_formula_set(gamma) for gamma in sets), key=set_key)


def synthesize_covering(cfg, fragment, max_mu=DEFAULT_MAX_MU):
    """
    Build g from the least-true selector.

    g(Γ) starts from the compare-least member of Γ true under A (or the
    compare-least member when none is true) and is padded with further
    compare-least members up to pad_to elements. Explicit overrides replace the
    computed value.

    Raises:
        ConfigurationError: kappa < 2 or a covered set outside the fragment
    """
    if cfg.kappa < 2:
        raise ConfigurationError(f"kappa must be at least 2, got {cfg.kappa}", "kappa")
    table = TruthTable(cfg.universe, max_mu)
    point = cfg.target.mask
    overrides = {as_formula_set(gamma): image for gamma, image in cfg.selection.overrides}

    mapping = []
    for gamma in covered_sets(cfg, fragment):
        if gamma in overrides:
            mapping.append((gamma, overrides[gamma]))
            continue
        true_members = [phi for phi in gamma if table.vector(phi)[point]]
        first = true_members[0] if true_members else gamma[0]
        rest = [phi for phi in gamma if phi != first]
        mapping.append((gamma, (first,) + tuple(rest[: cfg.selection.pad_to - 1])))

    LOGGER.info("Synthesized covering function on %d sets", len(mapping))
    return CoveringFunction(mapping, cfg.kappa)


@dataclass(frozen=True)
class CoveringViolation:
    kind: str
    gamma: tuple
    detail: str


@dataclass(frozen=True)
class CoveringReport:
    checked: int
    violations: tuple = ()

    @property
    def passed(self):
        return not self.violations


def validate_covering(g, target):
    """
    Check g(Γ) ⊆ Γ, 1 <= |g(Γ)| < kappa and A-adequacy for every covered Γ.

    A-adequacy: if A ⊨ ⋁Γ then some member of g(Γ) is true under A.
    """
    violations = []
    for gamma, image in g.items():
        if not set(image) <= set(gamma):
            extra = sorted(str(f) for f in set(image) - set(gamma))
            violations.append(CoveringViolation("subset", gamma, f"image has {extra} outside the set"))
        if not 1 <= len(image) < g.kappa:
            violations.append(
                CoveringViolation("size", gamma, f"image size {len(image)} not in [1, {g.kappa})")
            )
        if any(evaluate(target, phi) for phi in gamma) and not any(
            evaluate(target, phi) for phi in image
        ):
            violations.append(CoveringViolation("adequacy", gamma, "no image member is true under A"))
    return CoveringReport(len(g), tuple(violations))


def build_theory(g):
    """T = {⋁Γ → ⋁g(Γ) : Γ ∈ dom(g)}."""
    theory = Theory(tuple(implies(BigOr(gamma), BigOr(image)) for gamma, image in g.items()))
    LOGGER.info("Built theory with %d implications from %d covered sets", len(theory), len(g))
    return theory


# ---------------------------------------------------------------------------
# The poset and its generic filter

@dataclass(frozen=True, eq=False)
class ConstructedPoset:
    """
    P with its preorder.

    Attributes:
        fragment (Fragment): Candidate formulas
        theory (Theory): T
        membership (tuple): membership[k] iff fragment[k] ∈ P
        members (tuple): Fragment positions of the members of P
        preorder (FinitePreorder): ≤_P on the members; labels are the formulas
        quotient (Quotient): Classes under mutual ≤_P
        table (TruthTable): Truth vectors over the universe
        theory_models (numpy.ndarray): Models of T
    """

    fragment: object
    theory: Theory
    membership: tuple
    members: tuple
    preorder: FinitePreorder
    quotient: object
    table: TruthTable
    theory_models: np.ndarray

    @property
    def universe(self):
        return self.table.universe

    def formula(self, i):
        return self.preorder.labels[i]

    def position(self, formula):
        """Preorder index of a member, or None for non-members."""
        return self.preorder.lookup(formula)


def build_poset(theory, fragment, universe, max_mu=DEFAULT_MAX_MU, max_poset=DEFAULT_MAX_POSET):
    """
    P = {φ in the fragment : T ⊭ ¬φ}, with φ ≤ ψ iff T ⊨ φ → ψ.

    Raises:
        ConfigurationError: T has no model
        ResourceCapError: mu or the member count is over its cap
    """
    table = TruthTable(universe, max_mu)
    models = table.models(theory)
    if not models.any():
        raise ConfigurationError("the theory is inconsistent, so P would be empty", "T")

    vectors = np.array([table.vector(f) for f in fragment], dtype=bool).reshape(
        len(fragment), table.size
    )
    restricted = vectors & models
    membership = restricted.any(axis=1)
    members = tuple(int(k) for k in np.flatnonzero(membership))
    check_cap("max_poset", max_poset, len(members))

    inside = restricted[list(members)]
    # φ ≤ ψ iff no model of T satisfies φ and falsifies ψ
    leq = ~(inside[:, None, :] & ~inside[None, :, :]).any(axis=2)
    preorder = FinitePreorder([fragment[k] for k in members], leq)
    classes = quotient(preorder)
    LOGGER.info(
        "P has %d of %d fragment formulas, %d classes",
        len(members), len(fragment), len(classes.classes),
    )
    return ConstructedPoset(
        fragment=fragment,
        theory=theory,
        membership=tuple(bool(x) for x in membership),
        members=members,
        preorder=preorder,
        quotient=classes,
        table=table,
        theory_models=models,
    )


def generic_filter(target, cp):
    """G(A) = {φ ∈ P : A ⊨ φ}, as sorted preorder indices."""
    if target.mu != cp.universe.mu:
        raise AtomRangeError(f"valuation over mu={target.mu} used with mu={cp.universe.mu}")
    return tuple(i for i, phi in enumerate(cp.preorder.labels) if evaluate(target, phi))


# ---------------------------------------------------------------------------
# Claims

@dataclass(frozen=True)
class ClaimResult:
    """
    Outcome of one claim.

    Attributes:
        key (str): Short identifier
        title (str): What was checked
        passed (bool): Whether every instance held
        checked (int): Number of instances examined
        witness (tuple or None): Formula texts of the first failing instance
        note (str): Extra information (skipped sets, family sizes)
    """

    key: str
    title: str
    passed: bool
    checked: int
    witness: Optional[tuple] = None
    note: str = ""


@dataclass(frozen=True)
class GenericFilterReport:
    checked_family: str
    generic: tuple
    claims: tuple

    @property
    def passed(self):
        return all(claim.passed for claim in self.claims)

    def claim(self, key):
        for result in self.claims:
            if result.key == key:
                return result
        raise KeyError(key)


def closure_requirements(universe, kappa):
    """
    Formulas a fragment must hold to be closed at the literal level.

    Yields every literal, then its negation, then every binary conjunction of
    distinct literals, then every disjunction of 2 to kappa-1 literals.
    """
    seed = sorted(literals(universe))
    yield from seed
    yield from (Neg(formula) for formula in seed)
    yield from (BigAnd(pair) for pair in itertools.combinations(seed, 2))
    for size in range(2, kappa):
        yield from (BigOr(combo) for combo in itertools.combinations(seed, size))


def check_preconditions(fragment, universe, kappa):
    """
    Check the fragment is closed under negation, binary conjunction and
    disjunctions of fewer than kappa formulas, applied to the literals.

    Raises:
        ConfigurationError: Naming the first missing formula
    """
    for formula in closure_requirements(universe, kappa):
        if formula not in fragment:
            raise ConfigurationError(f"fragment is missing required formula {formula}", str(formula))


def _texts(formulas):
    return tuple(str(f) for f in formulas)


def verify_claims(cp, generic, g, target, extra_dense=()):
    """
    Check every claim about P and G(A).

    Args:
        cp (ConstructedPoset): The poset
        generic (tuple): G(A) as preorder indices
        g (CoveringFunction): The covering function T was built from
        target (Valuation): A
        extra_dense (iterable): Further formula sets to test for density

    Returns:
        GenericFilterReport: One ClaimResult per claim

    Raises:
        ConfigurationError: The fragment is not closed at the literal level
    """
    check_preconditions(cp.fragment, cp.universe, g.kappa)
    checker = _ClaimChecker(cp, generic, g, target)
    claims = (
        checker.in_poset(),
        checker.compatibility(),
        checker.antichain_bound(),
        checker.filter(),
        checker.genericity(),
        checker.dense_meeting(extra_dense),
        checker.target_models_theory(),
        checker.generic_identity(),
        checker.reconstruction(),
    )
    for claim in claims:
        LOGGER.info("Claim %s: %s (%d checked)", claim.key, "pass" if claim.passed else "FAIL", claim.checked)
    family = f"dom(g): {len(g)} covered sets"
    return GenericFilterReport(family, _texts(cp.formula(i) for i in generic), claims)


class _ClaimChecker:
    def __init__(self, cp, generic, g, target):
        self.cp = cp
        self.g = g
        self.target = target
        self.point = target.mask
        self.generic = frozenset(generic)
        self.generic_mask = sum(1 << i for i in generic)
        preorder = cp.preorder
        self.everything = (1 << len(preorder)) - 1
        self.compat_masks = [vector_to_mask(row) for row in preorder.compatibility]
        self.up_masks = [vector_to_mask(row) for row in preorder.leq]
        self.covered = [(gamma, self._mask_of(gamma)) for gamma in g.domain]
        self.fragment_tables = {self._restricted_table(phi) for phi in cp.fragment}

    def _mask_of(self, formulas):
        """Bitmask of preorder indices, or None when some formula is not in P."""
        mask = 0
        for phi in formulas:
            i = self.cp.position(phi)
            if i is None:
                return None
            mask |= 1 << i
        return mask

    def _is_antichain(self, mask):
        rest = mask
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            if self.compat_masks[i] & mask != low:
                return False
            rest ^= low
        return True

    def _union(self, masks, mask):
        total = 0
        rest = mask
        while rest:
            low = rest & -rest
            total |= masks[low.bit_length() - 1]
            rest ^= low
        return total

    def _true(self, phi):
        return bool(self.cp.table.vector(phi)[self.point])

    def in_poset(self):
        checked = 0
        for k, phi in enumerate(self.cp.fragment):
            if not self._true(phi):
                continue
            checked += 1
            if not self.cp.membership[k]:
                return ClaimResult("a", "A ⊨ φ implies φ ∈ P", False, checked, (str(phi),))
        return ClaimResult("a", "A ⊨ φ implies φ ∈ P", True, checked)

    def compatibility(self):
        title = "compatible(φ,ψ) iff T ⊭ ¬(φ∧ψ) iff T ⊭ φ→¬ψ"
        table = self.cp.table
        models = self.cp.theory_models
        labels = self.cp.preorder.labels
        checked = 0
        for i, j in itertools.combinations(range(len(labels)), 2):
            phi, psi = labels[i], labels[j]
            if BigAnd((phi, psi)) not in self.cp.fragment:
                continue
            checked += 1
            joint = not table.entails((), Neg(BigAnd((phi, psi))), gamma_models=models).holds
            reformulated = not table.entails((), implies(phi, Neg(psi)), gamma_models=models).holds
            order = bool(self.cp.preorder.compatibility[i, j])
            if not order == joint == reformulated:
                return ClaimResult("b", title, False, checked, (str(phi), str(psi)))
        return ClaimResult("b", title, True, checked)

    def antichain_bound(self):
        title = "covered antichains Γ ⊆ P have g(Γ) = Γ and |Γ| < kappa"
        checked = 0
        for gamma, mask in self.covered:
            if mask is None or not self._is_antichain(mask):
                continue
            checked += 1
            if set(self.g(gamma)) != set(gamma) or len(gamma) >= self.g.kappa:
                return ClaimResult("c", title, False, checked, _texts(gamma))
        return ClaimResult("c", title, True, checked)

    def filter(self):
        title = "G(A) is a filter: nonempty, upward closed, directed"
        problem = filter_violation(sorted(self.generic), self.cp.preorder)
        if problem is None:
            return ClaimResult("d", title, True, len(self.generic))
        reason, pair = problem
        return ClaimResult("d", title, False, len(self.generic), _texts(self.cp.formula(i) for i in pair), reason)

    def _restricted_table(self, phi):
        return vector_to_mask(self.cp.table.vector(phi) & self.cp.theory_models)

    def _negated_join_expressible(self, gamma):
        """¬⋁Γ is T-equivalent to some fragment formula."""
        return self._restricted_table(Neg(BigOr(gamma))) in self.fragment_tables

    def genericity(self):
        title = "G(A) meets every covered maximal antichain Γ of P with ¬⋁Γ expressible in the fragment"
        checked = 0
        for gamma, mask in self.covered:
            if mask is None or not self._is_antichain(mask):
                continue
            if self._union(self.compat_masks, mask) != self.everything:
                continue
            if not self._negated_join_expressible(gamma):
                continue
            checked += 1
            if not mask & self.generic_mask:
                return ClaimResult("e", title, False, checked, _texts(gamma))
        return ClaimResult("e", title, True, checked)

    def dense_meeting(self, extra_dense):
        title = "G(A) meets every dense set D checked with ¬⋁D expressible; T ⊨ ⋁D ↔ ⋁g(D) for covered D"
        cp = self.cp
        candidates = [("supplied", as_formula_set(d)) for d in extra_dense]
        minimal = as_formula_set(cp.formula(i) for i in cp.preorder.minimal_elements())
        candidates.append(("minimal elements", minimal))
        candidates += [("covered", gamma) for gamma, mask in self.covered if mask is not None]

        checked = 0
        skipped = 0
        for origin, dense in candidates:
            mask = self._mask_of(dense)
            if mask is None or self._union(self.up_masks, mask) != self.everything:
                if origin == "supplied":
                    skipped += 1
                continue
            checked += 1
            if self._negated_join_expressible(dense) and not mask & self.generic_mask:
                return ClaimResult("f", title, False, checked, _texts(dense), f"{origin} set")
            if dense in self.g:
                equivalence = iff(BigOr(dense), BigOr(self.g(dense)))
                if not cp.table.entails((), equivalence, gamma_models=cp.theory_models).holds:
                    return ClaimResult("f", title, False, checked, _texts(dense), "⋁D ↔ ⋁g(D) fails")
        note = f"{skipped} supplied set(s) not dense in P" if skipped else ""
        return ClaimResult("f", title, True, checked, None, note)

    def target_models_theory(self):
        title = "A ⊨ T"
        for phi in self.cp.theory:
            if not self._true(phi):
                return ClaimResult("models", title, False, len(self.cp.theory), (str(phi),))
        return ClaimResult("models", title, True, len(self.cp.theory))

    def generic_identity(self):
        title = "G(A) = {φ in the fragment : A ⊨ φ}"
        expected = {phi for phi in self.cp.fragment if self._true(phi)}
        actual = {self.cp.formula(i) for i in self.generic}
        difference = sorted(expected ^ actual)
        if difference:
            return ClaimResult("identity", title, False, len(expected), (str(difference[0]),))
        return ClaimResult("identity", title, True, len(expected))

    def reconstruction(self):
        title = "A = {α : aα ∈ G(A)}"
        actual = {self.cp.formula(i) for i in self.generic}
        rebuilt = {alpha for alpha in range(self.cp.universe.mu) if Atom(alpha) in actual}
        if rebuilt != set(self.target.members):
            wrong = sorted(rebuilt ^ set(self.target.members))
            return ClaimResult("reconstruction", title, False, self.cp.universe.mu, (str(Atom(wrong[0])),))
        return ClaimResult("reconstruction", title, True, self.cp.universe.mu)


# ---------------------------------------------------------------------------
# Whole pipeline

@dataclass(frozen=True)
class PipelineResult:
    config: PipelineConfig
    fragment: object
    covering: CoveringFunction
    covering_report: CoveringReport
    theory: Theory
    poset: ConstructedPoset
    generic: tuple
    report: GenericFilterReport

    @property
    def passed(self):
        return self.covering_report.passed and self.report.passed


def run_pipeline(cfg, max_mu=DEFAULT_MAX_MU, max_poset=DEFAULT_MAX_POSET):
    """Run every stage in order and collect the results."""
    check_cap("max_mu", max_mu, cfg.universe.mu)
    LOGGER.info("Running pipeline: mu=%d, A=%s, kappa=%d", cfg.universe.mu, cfg.target, cfg.kappa)
    fragment = generate_fragment(cfg.fragment, cfg.universe)
    check_preconditions(fragment, cfg.universe, cfg.kappa)
    covering = synthesize_covering(cfg, fragment, max_mu)
    covering_report = validate_covering(covering, cfg.target)
    if not covering_report.passed:
        LOGGER.warning("Covering function has %d violation(s)", len(covering_report.violations))
    theory = build_theory(covering)
    poset = build_poset(theory, fragment, cfg.universe, max_mu, max_poset)
    generic = generic_filter(cfg.target, poset)
    report = verify_claims(poset, generic, covering, cfg.target, cfg.extra_dense)
    return PipelineResult(cfg, fragment, covering, covering_report, theory, poset, generic, report)
