"""
Finite preorders and the forcing combinatorics on them.

Orders are stored as numpy boolean matrices with leq[i, j] meaning
"element i is below (stronger than) element j". Preorders, not partial orders:
equivalent elements are collapsed only by `quotient`.
"""

import itertools
import logging
import math
from dataclasses import dataclass

import numpy as np

from core.errors import PosetError, check_cap
from core.limits import DEFAULT_MAX_POSET

LOGGER = logging.getLogger(__name__)


class FinitePreorder:
    """
    Labeled finite preorder.

    A truncated enumeration of a larger order may pass its compatibility matrix
    explicitly; two elements may then be compatible through an extension that
    lies outside the enumerated elements.

    Attributes:
        labels (tuple): Element labels, distinct
        leq (numpy.ndarray): Read-only boolean matrix, leq[i, j] iff i <= j
    """

    def __init__(self, labels, leq, compatibility=None):
        self.labels = tuple(labels)
        size = len(self.labels)
        matrix = np.array(leq, dtype=bool).reshape(size, size)

        index = {}
        for i, label in enumerate(self.labels):
            if label in index:
                raise PosetError(f"duplicate element label {label!r}")
            index[label] = i

        if size and not matrix.diagonal().all():
            bad = int(np.flatnonzero(~matrix.diagonal())[0])
            raise PosetError(f"relation is not reflexive at {self.labels[bad]!r}")
        composed = (matrix.astype(np.int64) @ matrix.astype(np.int64)) > 0
        broken = composed & ~matrix
        if broken.any():
            i, k = (int(x) for x in np.argwhere(broken)[0])
            raise PosetError(
                f"relation is not transitive: {self.labels[i]!r} <= ... <= {self.labels[k]!r}"
            )

        matrix.setflags(write=False)
        self.leq = matrix
        self._index = index
        self._compat = None
        self.explicit_compatibility = compatibility is not None
        if compatibility is not None:
            self._compat = self._check_compatibility(compatibility)

    def _check_compatibility(self, compatibility):
        size = len(self)
        compat = np.array(compatibility, dtype=bool).reshape(size, size)
        if (compat != compat.T).any():
            raise PosetError("compatibility matrix is not symmetric")
        as_int = self.leq.astype(np.int64)
        missing = ((as_int.T @ as_int) > 0) & ~compat
        if missing.any():
            i, j = (int(x) for x in np.argwhere(missing)[0])
            raise PosetError(
                f"{self.labels[i]!r} and {self.labels[j]!r} share a lower bound but are marked incompatible"
            )
        compat.setflags(write=False)
        return compat

    @classmethod
    def from_pairs(cls, labels, pairs):
        """Build from explicit (lower, upper) label pairs; reflexive pairs are implied."""
        labels = tuple(labels)
        index = {label: i for i, label in enumerate(labels)}
        matrix = np.eye(len(labels), dtype=bool)
        for lower, upper in pairs:
            if lower not in index or upper not in index:
                raise PosetError(f"pair ({lower!r}, {upper!r}) names an unknown element")
            matrix[index[lower], index[upper]] = True
        return cls(labels, matrix)

    def __len__(self):
        return len(self.labels)

    def __repr__(self):
        return f"FinitePreorder({len(self)} elements)"

    def index(self, label):
        try:
            return self._index[label]
        except KeyError:
            raise PosetError(f"unknown element {label!r}") from None

    def lookup(self, label):
        """Index of label, or None when absent."""
        return self._index.get(label)

    def check_indices(self, indices):
        """Return indices as a sorted tuple, raising PosetError on any out of range."""
        found = sorted(set(int(i) for i in indices))
        for i in found:
            if not 0 <= i < len(self):
                raise PosetError(f"element index {i} out of range for {len(self)} elements")
        return tuple(found)

    @property
    def compatibility(self):
        """C[p, q] iff some r is below both p and q, unless given explicitly."""
        if self._compat is None:
            as_int = self.leq.astype(np.int64)
            compat = (as_int.T @ as_int) > 0
            compat.setflags(write=False)
            self._compat = compat
        return self._compat

    def below(self, i):
        """Indices r with r <= i."""
        return tuple(int(r) for r in np.flatnonzero(self.leq[:, i]))

    def above(self, i):
        """Indices r with i <= r (the up-set of i)."""
        return tuple(int(r) for r in np.flatnonzero(self.leq[i, :]))

    def minimal_elements(self):
        """Elements i such that every r <= i is equivalent to i."""
        minimal = ~(self.leq & ~self.leq.T).any(axis=0)
        return tuple(int(i) for i in np.flatnonzero(minimal))

    def restrict(self, indices):
        """Sub-preorder on the given indices (in the given order)."""
        chosen = list(indices)
        block = np.ix_(chosen, chosen)
        compat = self.compatibility[block] if self.explicit_compatibility else None
        return FinitePreorder([self.labels[i] for i in chosen], self.leq[block], compat)


def one_point(label=()):
    """The trivial preorder with a single element."""
    return FinitePreorder([label], [[True]])


def chain(length):
    """Chain 0 < 1 < ... < length-1 (0 is the strongest element)."""
    numbers = np.arange(length)
    return FinitePreorder(list(range(length)), numbers[:, None] <= numbers[None, :])


# ---------------------------------------------------------------------------
# Compatibility, density, filters

def compatible(p, q, preorder):
    """True iff some r in the preorder has r <= p and r <= q."""
    p, q = (int(x) for x in (p, q))
    preorder.check_indices([p, q])
    return bool(preorder.compatibility[p, q])


def is_antichain(subset, preorder):
    """Pairwise incompatible (a single element or the empty set counts)."""
    members = list(preorder.check_indices(subset))
    block = preorder.compatibility[np.ix_(members, members)]
    return not (block & ~np.eye(len(members), dtype=bool)).any()


def is_maximal_antichain(subset, preorder):
    """Antichain such that every element is compatible with one of its members."""
    members = list(preorder.check_indices(subset))
    if not is_antichain(members, preorder):
        return False
    if not members:
        return len(preorder) == 0
    return bool(preorder.compatibility[:, members].any(axis=1).all())


def density_violation(subset, preorder):
    """Index of the first element with nothing from subset below it, or None."""
    members = list(preorder.check_indices(subset))
    covered = preorder.leq[members, :].any(axis=0) if members else np.zeros(len(preorder), bool)
    missing = np.flatnonzero(~covered)
    return int(missing[0]) if missing.size else None


def is_dense(subset, preorder):
    """Every p has some d in subset with d <= p."""
    return density_violation(subset, preorder) is None


def filter_violation(subset, preorder):
    """
    Explain why subset is not a filter.

    Returns:
        tuple or None: ("empty", ()), ("not upward closed", (f, g)) or
                       ("not directed", (f, g)); None for a filter
    """
    members = list(preorder.check_indices(subset))
    if not members:
        return ("empty", ())
    inside = np.zeros(len(preorder), dtype=bool)
    inside[members] = True

    for f in members:
        escaped = np.flatnonzero(preorder.leq[f] & ~inside)
        if escaped.size:
            return ("not upward closed", (f, int(escaped[0])))
    for f, g in itertools.combinations(members, 2):
        if not (preorder.leq[:, f] & preorder.leq[:, g] & inside).any():
            return ("not directed", (f, g))
    return None


def is_filter(subset, preorder):
    """Nonempty, upward closed, and every pair has a common lower bound inside."""
    return filter_violation(subset, preorder) is None


@dataclass(frozen=True)
class MeetReport:
    """Which sets of a family a subset fails to meet (indices into the family)."""

    missed: tuple

    @property
    def passed(self):
        return not self.missed


def meets_all(subset, family):
    """
    Check that subset intersects every set of the family.

    Args:
        subset (iterable): Element indices
        family (list of iterables): Sets of element indices
    """
    members = set(subset)
    return MeetReport(tuple(k for k, other in enumerate(family) if not members & set(other)))


def is_atomless(preorder):
    """Every element has two incompatible extensions below it."""
    compat = preorder.compatibility
    for p in range(len(preorder)):
        below = list(preorder.below(p))
        block = compat[np.ix_(below, below)]
        if block.all():
            return False
    return True


# ---------------------------------------------------------------------------
# Quotient and products

@dataclass(frozen=True)
class Quotient:
    """
    Separative-style quotient by mutual <=.

    Attributes:
        preorder (FinitePreorder): Partial order on classes; labels are tuples of member labels
        classes (tuple): Member index tuples, one per class
        class_of (tuple): class_of[i] is the class number of element i
    """

    preorder: FinitePreorder
    classes: tuple
    class_of: tuple


def quotient(preorder):
    """Collapse elements that are below each other."""
    equivalent = preorder.leq & preorder.leq.T
    class_of = [-1] * len(preorder)
    classes = []
    for i in range(len(preorder)):
        if class_of[i] >= 0:
            continue
        members = tuple(int(j) for j in np.flatnonzero(equivalent[i]))
        for j in members:
            class_of[j] = len(classes)
        classes.append(members)

    representatives = [members[0] for members in classes]
    labels = [tuple(preorder.labels[j] for j in members) for members in classes]
    order = preorder.leq[np.ix_(representatives, representatives)]
    return Quotient(FinitePreorder(labels, order), tuple(classes), tuple(class_of))


def product(preorders, max_elements=DEFAULT_MAX_POSET):
    """
    Full product with the coordinatewise order.

    Labels are tuples of factor labels in itertools.product order; the empty
    product is the one-element preorder labeled ().
    """
    size = math.prod(len(p) for p in preorders)
    check_cap("max_poset", max_elements, size)

    matrix = np.ones((1, 1), dtype=np.uint8)
    for factor in preorders:
        matrix = np.kron(matrix, factor.leq.astype(np.uint8))
    labels = list(itertools.product(*(factor.labels for factor in preorders)))
    return FinitePreorder(labels, matrix.astype(bool))


def drop_coordinates(label, positions):
    """Remove the given coordinate positions from a product label."""
    skip = set(positions)
    return tuple(value for k, value in enumerate(label) if k not in skip)


def is_isomorphism(source, target, mapping):
    """
    Check that mapping (label -> label) is an order isomorphism.

    Args:
        source (FinitePreorder): Domain
        target (FinitePreorder): Codomain
        mapping (callable or dict): Label translation
    """
    translate = mapping if callable(mapping) else mapping.__getitem__
    if len(source) != len(target):
        return False
    try:
        images = [target.index(translate(label)) for label in source.labels]
    except (PosetError, KeyError):
        return False
    if len(set(images)) != len(images):
        return False
    return bool((target.leq[np.ix_(images, images)] == source.leq).all())


# ---------------------------------------------------------------------------
# Fn(kappa, lambda, mu)

@dataclass(frozen=True)
class PartialFunctionPoset:
    """
    Partial functions from kappa to lam with fewer than mu points, ordered by
    reverse inclusion. Functions are tuples of (argument, value) pairs.
    """

    kappa: int
    lam: int
    mu: int
    functions: tuple
    preorder: FinitePreorder

    def compatible_fast(self, i, j):
        """Union-is-a-function test."""
        return functions_compatible(self.functions[i], self.functions[j])


def fn_element_count(kappa, lam, mu):
    """Sum over k < mu of C(kappa, k) * lam^k."""
    return sum(math.comb(kappa, k) * lam ** k for k in range(min(mu, kappa + 1)))


def fn_antichain_bound(lam, mu):
    """lam^{<mu} for finite parameters: the largest lam^nu with nu < mu."""
    return max((lam ** nu for nu in range(mu)), default=0)


def functions_compatible(first, second):
    values = dict(first)
    return all(values.get(x, y) == y for x, y in second)


def format_function(function):
    return "{" + ",".join(f"{x}:{y}" for x, y in function) + "}"


def fn_poset(kappa, lam, mu, max_elements=DEFAULT_MAX_POSET):
    """
    Enumerate Fn(kappa, lam, mu).

    Elements are listed by domain size, then domain, then values. p <= q iff
    q is a restriction of p.

    Raises:
        ResourceCapError: When the element count exceeds max_elements
    """
    for name, value in (("kappa", kappa), ("lambda", lam), ("mu", mu)):
        if value < 0:
            raise PosetError(f"{name} must be a natural number")
    check_cap("max_poset", max_elements, fn_element_count(kappa, lam, mu))

    functions = []
    for size in range(min(mu, kappa + 1)):
        for domain in itertools.combinations(range(kappa), size):
            for values in itertools.product(range(lam), repeat=size):
                functions.append(tuple(zip(domain, values)))

    size = len(functions)
    as_sets = [frozenset(f) for f in functions]
    matrix = np.array([[q <= p for q in as_sets] for p in as_sets], dtype=bool).reshape(size, size)
    # Compatibility is measured in the full Fn: the union p | q need not have
    # fewer than mu points, so it may be missing from the enumeration.
    compat = np.array(
        [[functions_compatible(p, q) for q in functions] for p in functions], dtype=bool
    ).reshape(size, size)
    LOGGER.debug("Fn(%d,%d,%d) has %d elements", kappa, lam, mu, size)
    preorder = FinitePreorder([format_function(f) for f in functions], matrix, compat)
    return PartialFunctionPoset(kappa, lam, mu, tuple(functions), preorder)
