"""
Readers and writers for the text file formats used by the command line.

Formula files hold one formula per line. Proof files hold one s-expression
(node <formula> <just> <child>*). Poset files list `element LABEL` and
`leq LABEL LABEL` lines. Frame files list `worlds N`, `buttons B`,
`switches S`, `edge U V` and `letter BITS` lines. Pipeline configurations are
JSON objects. In every line-based format blank lines and lines starting with
`#` are ignored.
"""

import json
import logging
from pathlib import Path

import numpy as np

from algorithms.bukovsky import PipelineConfig
from algorithms.proof_kernel import Justification, ProofTree
from core import sexpr
from core.errors import (
    ConfigurationError,
    FormulaSyntaxError,
    FrameError,
    InputError,
    PosetError,
    ProofFormatError,
)
from core.formula import AtomUniverse, from_sexpr, parse_formula
from core.multiverse import KripkeFrame, WorldLabeling
from core.poset import FinitePreorder

LOGGER = logging.getLogger(__name__)

# Parsing universe for files whose mu is inferred afterwards
UNBOUNDED = AtomUniverse(2 ** 31)


def read_text(path):
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as error:
        raise InputError(f"cannot read {path}: {error.strerror}") from None


def _content_lines(text):
    """Yield (line number, stripped line) for non-blank, non-comment lines."""
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield number, line


def infer_universe(formulas):
    """Smallest universe holding every atom mentioned (at least one atom)."""
    highest = max((max(f.atoms(), default=-1) for f in formulas), default=-1)
    return AtomUniverse(max(highest + 1, 1))


# ---------------------------------------------------------------------------
# Formulas

def parse_formula_lines(text, universe=UNBOUNDED):
    formulas = []
    for number, line in _content_lines(text):
        try:
            formulas.append(parse_formula(line, universe))
        except FormulaSyntaxError as error:
            raise FormulaSyntaxError(f"line {number}: {error.message}", error.position) from None
    return formulas


def read_formula_file(path, universe=UNBOUNDED):
    """
    Load a formula list.

    Args:
        path (str): File with one formula per line
        universe (AtomUniverse): Atoms must be below universe.mu

    Returns:
        list of Formula: In file order
    """
    formulas = parse_formula_lines(read_text(path), universe)
    LOGGER.debug("Read %d formulas from %s", len(formulas), path)
    return formulas


# ---------------------------------------------------------------------------
# Proofs

def proof_from_sexpr(node, universe):
    """Convert a read (node <formula> <just> <child>*) expression into a ProofTree."""
    if not isinstance(node, sexpr.SList) or node.head() != "node":
        raise ProofFormatError(f"expected (node <formula> <just> ...) at position {node.position}")
    if len(node.items) < 3:
        raise ProofFormatError(f"proof node at position {node.position} needs a formula and a tag")
    label = from_sexpr(node.items[1], universe)
    tag = node.items[2]
    if not isinstance(tag, sexpr.Symbol):
        raise ProofFormatError(f"justification tag expected at position {tag.position}")
    try:
        just = Justification.parse(tag.text)
    except ValueError as error:
        raise ProofFormatError(f"{error} at position {tag.position}") from None
    children = tuple(proof_from_sexpr(child, universe) for child in node.items[3:])
    return ProofTree(label, just, children)


def parse_proof(text, universe=UNBOUNDED):
    return proof_from_sexpr(sexpr.read(text), universe)


def read_proof_file(path, universe=UNBOUNDED):
    text = "\n".join(line for _, line in _content_lines(read_text(path)))
    return parse_proof(text, universe)


def format_proof(tree, indent=0):
    """Proof file text; nested nodes on their own indented lines."""
    pad = "  " * indent
    head = f"{pad}(node {tree.label} {tree.just.value}"
    if not tree.children:
        return head + ")"
    inner = "\n".join(format_proof(child, indent + 1) for child in tree.children)
    return f"{head}\n{inner})"


# ---------------------------------------------------------------------------
# Posets

def parse_poset(text):
    """
    Read a preorder from `element` and `leq` lines.

    Raises:
        PosetError: Unknown directives, unknown elements, or a non-transitive relation
    """
    labels = []
    pairs = []
    for number, line in _content_lines(text):
        words = line.split()
        if words[0] == "element" and len(words) == 2:
            labels.append(words[1])
        elif words[0] == "leq" and len(words) == 3:
            pairs.append((words[1], words[2]))
        else:
            raise PosetError(f"line {number}: expected 'element L' or 'leq L L', got {line!r}")
    return FinitePreorder.from_pairs(labels, pairs)


def read_poset_file(path):
    preorder = parse_poset(read_text(path))
    LOGGER.debug("Read preorder with %d elements from %s", len(preorder), path)
    return preorder


def format_poset(preorder):
    lines = [f"element {label}" for label in preorder.labels]
    for i, j in np.argwhere(preorder.leq):
        if i != j:
            lines.append(f"leq {preorder.labels[i]} {preorder.labels[j]}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Frames

def parse_frame(text):
    """
    Read a frame and its labeling.

    Returns:
        tuple: (KripkeFrame, WorldLabeling)

    Raises:
        FrameError: Missing world count, bad edges or rows, or a relation that is
                    not reflexive and transitive
    """
    size = None
    counts = {"buttons": 0, "switches": 0}
    edges = []
    rows = []
    for number, line in _content_lines(text):
        words = line.split()
        try:
            if words[0] == "worlds" and len(words) == 2:
                size = int(words[1])
            elif words[0] in counts and len(words) == 2:
                counts[words[0]] = int(words[1])
            elif words[0] == "edge" and len(words) == 3:
                edges.append((int(words[1]), int(words[2])))
            elif words[0] == "letter" and len(words) == 2:
                if set(words[1]) - {"0", "1"}:
                    raise FrameError(f"line {number}: letter rows are 0/1 strings")
                rows.append([c == "1" for c in words[1]])
            else:
                raise FrameError(f"line {number}: unknown frame directive {line!r}")
        except FrameError:
            raise
        except ValueError:
            raise FrameError(f"line {number}: expected natural numbers in {line!r}") from None

    if size is None:
        raise FrameError("frame file has no 'worlds N' line")
    if size < 0 or min(counts.values()) < 0:
        raise FrameError("world, button and switch counts must be natural numbers")
    if any(len(row) != size for row in rows):
        raise FrameError(f"every letter row must have {size} characters")
    frame = KripkeFrame.from_edges(size, edges)
    truth = np.array(rows, dtype=bool).reshape(len(rows), size)
    labeling = WorldLabeling(counts["buttons"], counts["switches"], truth)
    return frame, labeling


def read_frame_file(path):
    frame, labeling = parse_frame(read_text(path))
    LOGGER.debug("Read frame with %d worlds from %s", len(frame), path)
    return frame, labeling


def format_frame(frame, labeling):
    lines = [
        f"worlds {len(frame)}",
        f"buttons {labeling.n_buttons}",
        f"switches {labeling.n_switches}",
    ]
    lines += [f"edge {u} {v}" for u, v in frame.edges()]
    lines += [f"letter {row}" for row in labeling.rows()]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Pipeline configuration

def read_pipeline_config(path):
    """
    Load a JSON pipeline configuration.

    Raises:
        ConfigurationError: Invalid JSON or an invalid document
    """
    try:
        document = json.loads(read_text(path))
    except json.JSONDecodeError as error:
        raise ConfigurationError(f"{path}: invalid JSON ({error.msg} at line {error.lineno})") from None
    return PipelineConfig.from_dict(document)
