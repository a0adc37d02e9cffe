"""
Finite Kripke frames for the modal logic of forcing buttons.

Accessibility abstracts "is a further extension of": frames are reflexive and
transitive. A labeling assigns each letter a truth row over the worlds; the
first n_buttons letters are buttons, the remaining n_switches are switches.
Modal truth is computed as numpy boolean vectors over the worlds.
"""

import logging
from dataclasses import dataclass

import numpy as np

from core.errors import FrameError, check_cap
from core.limits import DEFAULT_MAX_WORLDS

LOGGER = logging.getLogger(__name__)


class KripkeFrame:
    """
    Reflexive, transitive frame.

    Attributes:
        worlds (tuple): World names
        relation (numpy.ndarray): Read-only boolean matrix, relation[u, v] iff u sees v
    """

    def __init__(self, relation, worlds=None):
        matrix = np.array(relation, dtype=bool)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise FrameError(f"accessibility must be a square matrix, got shape {matrix.shape}")
        size = matrix.shape[0]
        self.worlds = tuple(range(size)) if worlds is None else tuple(worlds)
        if len(self.worlds) != size:
            raise FrameError(f"{len(self.worlds)} world names for {size} worlds")

        if not matrix.diagonal().all():
            bad = int(np.flatnonzero(~matrix.diagonal())[0])
            raise FrameError(f"accessibility is not reflexive at world {bad}")
        as_int = matrix.astype(np.int64)
        broken = ((as_int @ as_int) > 0) & ~matrix
        if broken.any():
            u, w = (int(x) for x in np.argwhere(broken)[0])
            raise FrameError(f"accessibility is not transitive: {u} reaches {w} in two steps only")

        matrix.setflags(write=False)
        self.relation = matrix

    @classmethod
    def from_edges(cls, size, edges, worlds=None):
        """Frame from explicit (u, v) pairs; every pair must be listed, reflexive ones included."""
        matrix = np.zeros((size, size), dtype=bool)
        for u, v in edges:
            if not (0 <= u < size and 0 <= v < size):
                raise FrameError(f"edge ({u}, {v}) names a world outside 0..{size - 1}")
            matrix[u, v] = True
        return cls(matrix, worlds)

    def __len__(self):
        return len(self.worlds)

    def __repr__(self):
        return f"KripkeFrame({len(self)} worlds, {int(self.relation.sum())} pairs)"

    def check_world(self, w):
        if not 0 <= w < len(self):
            raise FrameError(f"world {w} out of range for {len(self)} worlds")
        return w

    def successors(self, w):
        """Worlds reachable from w, w included."""
        return tuple(int(v) for v in np.flatnonzero(self.relation[self.check_world(w)]))

    def edges(self):
        return [(int(u), int(v)) for u, v in np.argwhere(self.relation)]

    def is_directed(self):
        """Any two successors of a world have a common successor."""
        as_int = self.relation.astype(np.int64)
        joinable = (as_int @ as_int.T) > 0
        for row in self.relation:
            if (np.outer(row, row) & ~joinable).any():
                return False
        return True

    def remove_world(self, w):
        """Frame with world w deleted."""
        keep = [v for v in range(len(self)) if v != self.check_world(w)]
        return KripkeFrame(self.relation[np.ix_(keep, keep)], [self.worlds[v] for v in keep])


@dataclass(frozen=True, eq=False)
class WorldLabeling:
    """
    Attributes:
        n_buttons (int): Letters 0 .. n_buttons-1 are buttons
        n_switches (int): The following letters are switches
        truth (numpy.ndarray): truth[letter, world]
    """

    n_buttons: int
    n_switches: int
    truth: np.ndarray

    def __post_init__(self):
        truth = np.array(self.truth, dtype=bool)
        letters = self.n_buttons + self.n_switches
        if truth.ndim != 2 or truth.shape[0] != letters:
            raise FrameError(f"labeling needs {letters} truth rows, got shape {truth.shape}")
        truth.setflags(write=False)
        object.__setattr__(self, "truth", truth)

    @property
    def letters(self):
        return self.n_buttons + self.n_switches

    @property
    def world_count(self):
        return self.truth.shape[1]

    def check_frame(self, frame):
        if self.world_count != len(frame):
            raise FrameError(f"labeling covers {self.world_count} worlds, frame has {len(frame)}")

    def check_letter(self, i):
        if not 0 <= i < self.letters:
            raise FrameError(f"letter {i} out of range for {self.letters} letters")
        return i

    def check_button(self, i):
        if not 0 <= i < self.n_buttons:
            raise FrameError(f"button {i} out of range for {self.n_buttons} buttons")
        return i

    def remove_world(self, w):
        return WorldLabeling(self.n_buttons, self.n_switches, np.delete(self.truth, w, axis=1))

    def rows(self):
        """Truth rows as 0/1 strings, one per letter."""
        return ["".join("1" if x else "0" for x in row) for row in self.truth]


# ---------------------------------------------------------------------------
# Modal formulas

@dataclass(frozen=True)
class Letter:
    index: int

    def __str__(self):
        return f"p{self.index}"


@dataclass(frozen=True)
class MNeg:
    operand: object

    def __str__(self):
        return f"¬{self.operand}"


@dataclass(frozen=True)
class MAnd:
    left: object
    right: object

    def __str__(self):
        return f"({self.left} ∧ {self.right})"


@dataclass(frozen=True)
class MOr:
    left: object
    right: object

    def __str__(self):
        return f"({self.left} ∨ {self.right})"


@dataclass(frozen=True)
class MImp:
    left: object
    right: object

    def __str__(self):
        return f"({self.left} → {self.right})"


@dataclass(frozen=True)
class Box:
    operand: object

    def __str__(self):
        return f"□{self.operand}"


@dataclass(frozen=True)
class Diamond:
    operand: object

    def __str__(self):
        return f"◇{self.operand}"


def box_vector(relation, vector):
    """Worlds all of whose successors satisfy the vector."""
    return ~(relation & ~vector[None, :]).any(axis=1)


def diamond_vector(relation, vector):
    return (relation & vector[None, :]).any(axis=1)


def truth_set(frame, labeling, formula):
    """Boolean vector of the worlds where formula holds."""
    labeling.check_frame(frame)
    return _truth(frame.relation, labeling, formula)


def _truth(relation, labeling, formula):
    if isinstance(formula, Letter):
        return labeling.truth[labeling.check_letter(formula.index)]
    if isinstance(formula, MNeg):
        return ~_truth(relation, labeling, formula.operand)
    if isinstance(formula, MAnd):
        return _truth(relation, labeling, formula.left) & _truth(relation, labeling, formula.right)
    if isinstance(formula, MOr):
        return _truth(relation, labeling, formula.left) | _truth(relation, labeling, formula.right)
    if isinstance(formula, MImp):
        return ~_truth(relation, labeling, formula.left) | _truth(relation, labeling, formula.right)
    if isinstance(formula, Box):
        return box_vector(relation, _truth(relation, labeling, formula.operand))
    if isinstance(formula, Diamond):
        return diamond_vector(relation, _truth(relation, labeling, formula.operand))
    raise TypeError(f"not a modal formula: {formula!r}")


def eval_modal(frame, labeling, w, formula):
    """Truth of formula at world w."""
    return bool(truth_set(frame, labeling, formula)[frame.check_world(w)])


# ---------------------------------------------------------------------------
# Buttons

def pushed_matrix(frame, labeling, n=None):
    """pushed[i, w] iff button i holds at every successor of w, for i < n."""
    labeling.check_frame(frame)
    count = labeling.n_buttons if n is None else n
    rows = labeling.truth[:count]
    return ~(frame.relation[None, :, :] & ~rows[:, None, :]).any(axis=2)


def pushed(frame, labeling, w, i):
    """Button i is true at w and at every world w sees."""
    labeling.check_button(i)
    frame.check_world(w)
    return bool(pushed_matrix(frame, labeling)[i, w])


def pushed_set(frame, labeling, w):
    """Buttons pushed at w."""
    frame.check_world(w)
    column = pushed_matrix(frame, labeling)[:, w]
    return frozenset(int(i) for i in np.flatnonzero(column))


def is_button(frame, labeling, w0, i):
    """From every world reachable from w0, some further world has button i pushed."""
    labeling.check_button(i)
    reachable = frame.relation[frame.check_world(w0)]
    row = pushed_matrix(frame, labeling)[i]
    can_push = (frame.relation & row[None, :]).any(axis=1)
    return bool(can_push[reachable].all())


def is_persistent(frame, labeling, i):
    """Once letter i is true it stays true along accessibility."""
    labeling.check_frame(frame)
    row = labeling.truth[labeling.check_letter(i)]
    return not (row[:, None] & frame.relation & ~row[None, :]).any()


# ---------------------------------------------------------------------------
# Canonical model

def world_name(buttons, switches, n, m):
    members = ",".join(str(i) for i in range(n) if buttons >> i & 1)
    bits = "".join(str(switches >> j & 1) for j in range(m))
    return f"{{{members}}}/{bits}"


def canonical_button_model(n, m, max_worlds=DEFAULT_MAX_WORLDS):
    """
    Frame of pairs (X, s), X ⊆ {0..n-1}, s ∈ {0,1}^m, with (X,s) seeing (X',s') iff X ⊆ X'.

    Worlds are ordered by the bitmask of X, then of s; world 0 is the root (∅, 0...0).
    Button i is true where i ∈ X and switch j where s_j = 1.

    Raises:
        ResourceCapError: When 2^n * 2^m exceeds max_worlds
    """
    if n < 0 or m < 0:
        raise FrameError("button and switch counts must be natural numbers")
    check_cap("max_worlds", max_worlds, 2 ** (n + m))
    xs = np.repeat(np.arange(2 ** n), 2 ** m)
    ss = np.tile(np.arange(2 ** m), 2 ** n)
    relation = (xs[:, None] & ~xs[None, :]) == 0

    buttons = [((xs >> i) & 1).astype(bool) for i in range(n)]
    switches = [((ss >> j) & 1).astype(bool) for j in range(m)]
    truth = np.array(buttons + switches, dtype=bool).reshape(n + m, len(xs))
    names = [world_name(int(x), int(s), n, m) for x, s in zip(xs, ss)]
    LOGGER.debug("Canonical model with %d buttons, %d switches: %d worlds", n, m, len(xs))
    return KripkeFrame(relation, names), WorldLabeling(n, m, truth)
