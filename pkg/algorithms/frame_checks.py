"""
Frame-level checks: independence of buttons and validity of the S4.2 axioms.
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from core.errors import FrameError, check_cap
from core.limits import S42_MAX_LETTERS, S42_MAX_WORLDS
from core.multiverse import box_vector, diamond_vector, pushed_matrix

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class IndependenceReport:
    """
    Attributes:
        passed (bool): Whether the first n buttons are independent at the root
        counterexample (tuple or None): (world, target set X as a sorted tuple)
        reason (str): Which condition failed
    """

    passed: bool
    counterexample: Optional[tuple] = None
    reason: str = ""


def check_independence(frame, labeling, w0, n):
    """
    Independence of buttons 0..n-1 at w0.

    Holds iff no button is pushed at w0 and, from every world w reachable from w0,
    every X with pushed(w) ⊆ X ⊆ {0..n-1} is the exact pushed set of some world
    w sees. The counterexample is the least (world, X) in world-then-bitmask order.

    Raises:
        FrameError: n larger than the number of buttons, or w0 out of range
    """
    if not 0 <= n <= labeling.n_buttons:
        raise FrameError(f"n={n} out of range for {labeling.n_buttons} buttons")
    frame.check_world(w0)
    matrix = pushed_matrix(frame, labeling, n)
    weights = 1 << np.arange(n, dtype=np.int64)
    masks = [int(x) for x in (weights[:, None] * matrix).sum(axis=0)] if n else [0] * len(frame)

    if masks[w0]:
        already = tuple(i for i in range(n) if masks[w0] >> i & 1)
        return IndependenceReport(False, (w0, already), "buttons already pushed at the root")

    full = (1 << n) - 1
    for w in frame.successors(w0):
        seen = {masks[v] for v in frame.successors(w)}
        free = full & ~masks[w]
        for target in sorted(_supersets(masks[w], free)):
            if target not in seen:
                members = tuple(i for i in range(n) if target >> i & 1)
                LOGGER.debug("Pushed set %s unreachable from world %d", members, w)
                return IndependenceReport(False, (w, members), "target pushed set unreachable")
    return IndependenceReport(True)


def _supersets(base, free):
    """Every base | sub for sub a submask of free."""
    sub = free
    while True:
        yield base | sub
        if sub == 0:
            return
        sub = (sub - 1) & free


# ---------------------------------------------------------------------------
# S4.2

@dataclass(frozen=True)
class AxiomCheck:
    """
    Attributes:
        name (str): K, T, 4 or .2
        formula (str): The schema instance swept
        checked (bool): False when the schema needs more letters than allowed
        valid (bool or None): Result of the sweep
        witness (dict or None): {"world": w, "labeling": {letter: row}} for the least counterexample
        labelings (int): Number of labelings swept
    """

    name: str
    formula: str
    checked: bool
    valid: Optional[bool] = None
    witness: Optional[dict] = None
    labelings: int = 0


@dataclass(frozen=True)
class S42Report:
    reflexive: bool
    transitive: bool
    directed: bool
    letter_cap: int
    axioms: tuple

    @property
    def passed(self):
        return all(a.valid for a in self.axioms if a.checked)

    def axiom(self, name):
        for check in self.axioms:
            if check.name == name:
                return check
        raise KeyError(name)


def _all_rows(size):
    """Every truth row over `size` worlds, row number k listing the bits of k."""
    numbers = np.arange(2 ** size, dtype=np.int64)
    return ((numbers[:, None] >> np.arange(size)) & 1).astype(bool)


def _batch_box(relation, rows):
    return ~(relation[None, :, :] & ~rows[:, None, :]).any(axis=2)


def _batch_diamond(relation, rows):
    return (relation[None, :, :] & rows[:, None, :]).any(axis=2)


def _axiom_k(relation, p, q):
    return ~_batch_box(relation, ~p | q) | ~_batch_box(relation, p) | _batch_box(relation, q)


def _axiom_t(relation, p):
    return ~_batch_box(relation, p) | p


def _axiom_4(relation, p):
    boxed = _batch_box(relation, p)
    return ~boxed | _batch_box(relation, boxed)


def _axiom_2(relation, p):
    return ~_batch_diamond(relation, _batch_box(relation, p)) | _batch_box(
        relation, _batch_diamond(relation, p)
    )


_AXIOMS = (
    ("K", "□(p0 → p1) → (□p0 → □p1)", 2, _axiom_k),
    ("T", "□p0 → p0", 1, _axiom_t),
    ("4", "□p0 → □□p0", 1, _axiom_4),
    (".2", "◇□p0 → □◇p0", 1, _axiom_2),
)


def check_s42(frame, letter_cap=S42_MAX_LETTERS, max_worlds=S42_MAX_WORLDS, max_letters=S42_MAX_LETTERS):
    """
    Sweep K, T, 4 and .2 over every labeling of up to letter_cap letters.

    Each schema is swept over the letters it mentions, which covers every
    labeling of letter_cap letters. The least counterexample is reported in
    world-then-labeling order, labelings numbered with letter 0 least
    significant. .2 is always swept; the report states whether the frame is
    directed.

    Raises:
        ResourceCapError: More than max_worlds worlds or letter_cap above max_letters
    """
    check_cap("s42_worlds", max_worlds, len(frame))
    check_cap("s42_letters", max_letters, letter_cap)
    relation = frame.relation
    size = len(frame)
    rows = _all_rows(size)

    checks = []
    for name, text, letters, schema in _AXIOMS:
        if letters > letter_cap:
            checks.append(AxiomCheck(name, text, False))
            continue
        if letters == 1:
            truth = schema(relation, rows)
            labelings = [(k,) for k in range(len(rows))]
        else:
            labelings = [(k0, k1) for k1 in range(len(rows)) for k0 in range(len(rows))]
            first = rows[[k0 for k0, _ in labelings]]
            second = rows[[k1 for _, k1 in labelings]]
            truth = schema(relation, first, second)
        failures = np.argwhere(~truth)
        if not failures.size:
            checks.append(AxiomCheck(name, text, True, True, None, len(labelings)))
            continue
        # argwhere yields (labeling, world) pairs; the least is taken world first
        world, labeling = min((int(w), int(k)) for k, w in failures)
        witness = {
            "world": world,
            "labeling": {
                f"p{letter}": "".join("1" if x else "0" for x in rows[k])
                for letter, k in enumerate(labelings[labeling])
            },
        }
        LOGGER.info("Axiom %s refuted at world %d", name, world)
        checks.append(AxiomCheck(name, text, True, False, witness, len(labelings)))

    return S42Report(
        reflexive=bool(relation.diagonal().all()),
        transitive=not bool((((relation.astype(np.int64) @ relation.astype(np.int64)) > 0) & ~relation).any()),
        directed=frame.is_directed(),
        letter_cap=letter_cap,
        axioms=tuple(checks),
    )


def refuting_worlds_2(frame, row):
    """Worlds where ◇□p0 → □◇p0 fails when p0 has the given truth row."""
    p = np.array([c == "1" for c in row] if isinstance(row, str) else row, dtype=bool)
    return tuple(
        int(w)
        for w in np.flatnonzero(
            diamond_vector(frame.relation, box_vector(frame.relation, p))
            & ~box_vector(frame.relation, diamond_vector(frame.relation, p))
        )
    )
