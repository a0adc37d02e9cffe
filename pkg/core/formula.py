"""
Canonical formulas of the infinitary propositional language over mu atoms.

A formula is one of four immutable node types: Atom, Neg, BigOr and BigAnd.
The argument collections of BigOr/BigAnd are sets: they are deduplicated and
sorted by the total formula order on construction, so two formulas are equal
exactly when their canonical serializations are equal. Implication,
biconditional and binary connectives exist only as sugar built from the four
primitives; the split helpers at the bottom recognize that sugar again.
"""

import re
from dataclasses import dataclass, field

from core import sexpr
from core.errors import AtomRangeError, ConfigurationError, FormulaSyntaxError

_ATOM_NAME = re.compile(r"a(\d+)$")


@dataclass(frozen=True)
class AtomUniverse:
    """Atomic sentences a0 .. a(mu-1)."""

    mu: int

    def __post_init__(self):
        if isinstance(self.mu, bool) or not isinstance(self.mu, int) or self.mu < 0:
            raise ConfigurationError(f"mu must be a natural number, got {self.mu!r}")


@dataclass(frozen=True, eq=False, repr=False)
class Formula:
    """
    Base node. Equality, hashing and ordering go through the cached canonical
    serialization `key`.
    """

    key: str = field(init=False, compare=False)

    def __eq__(self, other):
        return isinstance(other, Formula) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __lt__(self, other):
        return self.key < other.key

    def __repr__(self):
        return f"Formula({self.key})"

    def __str__(self):
        return self.key

    def atoms(self):
        """Return the frozenset of atom indices occurring in the formula."""
        found = set()
        stack = [self]
        while stack:
            node = stack.pop()
            if isinstance(node, Atom):
                found.add(node.index)
            elif isinstance(node, Neg):
                stack.append(node.operand)
            else:
                stack.extend(node.args)
        return frozenset(found)

    def depth(self):
        """Connective nesting depth; atoms have depth 0."""
        if isinstance(self, Atom):
            return 0
        if isinstance(self, Neg):
            return 1 + self.operand.depth()
        return 1 + max((arg.depth() for arg in self.args), default=0)


@dataclass(frozen=True, eq=False, repr=False)
class Atom(Formula):
    index: int

    def __post_init__(self):
        if isinstance(self.index, bool) or not isinstance(self.index, int) or self.index < 0:
            raise ValueError(f"atom index must be a natural number, got {self.index!r}")
        object.__setattr__(self, "key", f"a{self.index}")


@dataclass(frozen=True, eq=False, repr=False)
class Neg(Formula):
    operand: Formula

    def __post_init__(self):
        _require_formula(self.operand)
        object.__setattr__(self, "key", f"(not {self.operand.key})")


@dataclass(frozen=True, eq=False, repr=False)
class BigOr(Formula):
    args: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "args", _canonical_args(self.args))
        object.__setattr__(self, "key", _join("or", self.args))


@dataclass(frozen=True, eq=False, repr=False)
class BigAnd(Formula):
    args: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "args", _canonical_args(self.args))
        object.__setattr__(self, "key", _join("and", self.args))


def _require_formula(value):
    if not isinstance(value, Formula):
        raise TypeError(f"expected a Formula, got {type(value).__name__}")


def _canonical_args(args):
    unique = {}
    for arg in args:
        _require_formula(arg)
        unique[arg.key] = arg
    return tuple(unique[k] for k in sorted(unique))


def _join(word, args):
    if not args:
        return f"({word})"
    return f"({word} " + " ".join(arg.key for arg in args) + ")"


# ---------------------------------------------------------------------------
# Sugar

def implies(antecedent, consequent):
    """φ → ψ, i.e. ⋁{¬φ, ψ}."""
    return BigOr((Neg(antecedent), consequent))


def conj(left, right):
    """Binary conjunction ⋀{φ, ψ}."""
    return BigAnd((left, right))


def disj(left, right):
    """Binary disjunction ⋁{φ, ψ}."""
    return BigOr((left, right))


def iff(left, right):
    """φ ↔ ψ, i.e. ⋀{φ → ψ, ψ → φ}."""
    return BigAnd((implies(left, right), implies(right, left)))


def literals(universe):
    """Atoms and negated atoms of the universe, in canonical order."""
    found = [Atom(i) for i in range(universe.mu)] + [Neg(Atom(i)) for i in range(universe.mu)]
    return sorted(found)


def diagram(members, universe):
    """
    Complete literal conjunction describing the valuation `members`.

    Args:
        members (iterable of int): Atoms that are true
        universe (AtomUniverse): Ambient universe

    Returns:
        BigAnd: ⋀ of aα for α in members and ¬aα for the rest
    """
    chosen = set(members)
    return BigAnd(Atom(i) if i in chosen else Neg(Atom(i)) for i in range(universe.mu))


# ---------------------------------------------------------------------------
# Parsing, printing, ordering

def parse_formula(text, universe):
    """
    Parse surface syntax into a canonical formula.

    Grammar: aN | (not φ) | (or φ*) | (and φ*) | (imp φ φ) | (iff φ φ)

    Args:
        text (str): Formula text
        universe (AtomUniverse): Atoms must be below universe.mu

    Returns:
        Formula: Canonical formula

    Raises:
        FormulaSyntaxError: With the character position of the problem
        AtomRangeError: When an atom index is >= mu
    """
    return from_sexpr(sexpr.read(text), universe)


def from_sexpr(node, universe):
    """Convert an already-read s-expression node into a formula."""
    if isinstance(node, sexpr.Symbol):
        match = _ATOM_NAME.match(node.text)
        if match is None:
            raise FormulaSyntaxError(f"expected an atom aN, got {node.text!r}", node.position)
        index = int(match.group(1))
        if index >= universe.mu:
            raise AtomRangeError(
                f"atom a{index} out of range for mu={universe.mu} (at position {node.position})"
            )
        return Atom(index)

    head = node.head()
    if head is None:
        raise FormulaSyntaxError("expected a connective after '('", node.position)
    operands = [from_sexpr(item, universe) for item in node.items[1:]]

    if head == "or":
        return BigOr(operands)
    if head == "and":
        return BigAnd(operands)
    if head == "not":
        _expect_arity(head, operands, 1, node)
        return Neg(operands[0])
    if head == "imp":
        _expect_arity(head, operands, 2, node)
        return implies(*operands)
    if head == "iff":
        _expect_arity(head, operands, 2, node)
        return iff(*operands)
    raise FormulaSyntaxError(f"unknown connective {head!r}", node.items[0].position)


def _expect_arity(head, operands, arity, node):
    if len(operands) != arity:
        raise FormulaSyntaxError(
            f"'{head}' takes {arity} argument(s), got {len(operands)}", node.position
        )


def print_formula(formula):
    """Canonical text; parse_formula(print_formula(f)) == f."""
    return formula.key


def compare(left, right):
    """
    Total order on formulas: lexicographic order of canonical serializations.

    Returns:
        int: -1, 0 or 1
    """
    if left.key < right.key:
        return -1
    if left.key > right.key:
        return 1
    return 0


def canonical(formula):
    """Rebuild a formula bottom-up through the canonicalizing constructors."""
    if isinstance(formula, Atom):
        return Atom(formula.index)
    if isinstance(formula, Neg):
        return Neg(canonical(formula.operand))
    rebuilt = [canonical(arg) for arg in formula.args]
    return BigOr(rebuilt) if isinstance(formula, BigOr) else BigAnd(rebuilt)


def subformulas(formula):
    """Yield every node of the formula tree (pre-order, repeats included)."""
    stack = [formula]
    while stack:
        node = stack.pop()
        yield node
        if isinstance(node, Neg):
            stack.append(node.operand)
        elif isinstance(node, (BigOr, BigAnd)):
            stack.extend(reversed(node.args))


def check_atoms(formula, universe):
    """Raise AtomRangeError if some atom index is >= universe.mu."""
    atoms = formula.atoms()
    if atoms and max(atoms) >= universe.mu:
        raise AtomRangeError(f"atom a{max(atoms)} out of range for mu={universe.mu}")


# ---------------------------------------------------------------------------
# Recognizing sugar in canonical trees

def implication_splits(formula):
    """
    All (φ, ψ) with implies(φ, ψ) == formula.

    A canonical ⋁{¬φ, ψ} can be read several ways (⋁{¬p, ¬q} is both p→¬q and
    q→¬p), and implies(φ, ¬φ) collapses to the singleton ⋁{¬φ}.
    """
    if not isinstance(formula, BigOr) or len(formula.args) > 2:
        return []
    splits = []
    for arg in formula.args:
        if not isinstance(arg, Neg):
            continue
        rest = [other for other in formula.args if other != arg]
        if len(rest) == 1:
            splits.append((arg.operand, rest[0]))
        elif not rest:
            splits.append((arg.operand, arg))
    return splits


def conjunction_splits(formula):
    """All (φ, ψ) with conj(φ, ψ) == formula."""
    return _binary_splits(formula, BigAnd)


def disjunction_splits(formula):
    """All (φ, ψ) with disj(φ, ψ) == formula."""
    return _binary_splits(formula, BigOr)


def _binary_splits(formula, node_type):
    if not isinstance(formula, node_type):
        return []
    if len(formula.args) == 1:
        only = formula.args[0]
        return [(only, only)]
    if len(formula.args) == 2:
        first, second = formula.args
        return [(first, second), (second, first)]
    return []


def biconditional_splits(formula):
    """All (φ, ψ) with iff(φ, ψ) == formula."""
    if not isinstance(formula, BigAnd) or not 1 <= len(formula.args) <= 2:
        return []
    splits = []
    if len(formula.args) == 1:
        for left, right in implication_splits(formula.args[0]):
            if left == right:
                splits.append((left, right))
        return splits

    first, second = formula.args
    for one, other in ((first, second), (second, first)):
        for left, right in implication_splits(one):
            if implies(right, left) == other and (left, right) not in splits:
                splits.append((left, right))
    return splits
