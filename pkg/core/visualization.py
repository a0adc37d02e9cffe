"""
Drawings of preorders and Kripke frames.

Figures are always written to a file; nothing is shown interactively.
"""

import logging
import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from core.poset import quotient  # noqa: E402

LOGGER = logging.getLogger(__name__)


def strict_covers(leq):
    """Pairs (i, j) with i < j strictly and nothing strictly between (on a partial order)."""
    strict = leq & ~leq.T
    between = (strict.astype(np.int64) @ strict.astype(np.int64)) > 0
    return [(int(i), int(j)) for i, j in np.argwhere(strict & ~between)]


def layers(leq):
    """Height of every element: length of the longest strict chain below it."""
    strict = leq & ~leq.T
    height = np.zeros(len(leq), dtype=int)
    # Heights stabilise after at most n rounds
    for _ in range(len(leq)):
        below = np.where(strict.T, height[None, :] + 1, 0).max(axis=1)
        if (below == height).all():
            break
        height = below
    return height


def _positions(heights):
    positions = {}
    for level in sorted(set(heights.tolist())):
        members = [i for i, h in enumerate(heights) if h == level]
        for k, i in enumerate(members):
            positions[i] = (k - (len(members) - 1) / 2, level)
    return positions


def _save(fig, save_path):
    folder = os.path.dirname(save_path)
    if folder:
        os.makedirs(folder, exist_ok=True)
    fig.savefig(save_path)
    plt.close(fig)
    LOGGER.info("Figure saved to %s", save_path)


def plot_preorder(preorder, save_path, title="Preorder"):
    """
    Draw the Hasse diagram of the quotient of a preorder.

    Stronger (smaller) elements are drawn at the bottom; each node lists the
    labels of its equivalence class.

    Args:
        preorder (FinitePreorder): The preorder to draw
        save_path (str): Output image path
        title (str): Figure title
    """
    classes = quotient(preorder)
    leq = classes.preorder.leq
    heights = layers(leq)
    positions = _positions(heights)

    fig, ax = plt.subplots(figsize=(10, 8))
    for i, j in strict_covers(leq):
        (x0, y0), (x1, y1) = positions[i], positions[j]
        ax.plot([x0, x1], [y0, y1], "k-", alpha=0.5, zorder=1)
    for i, members in enumerate(classes.classes):
        x, y = positions[i]
        ax.scatter([x], [y], c="red", s=150, edgecolor="black", zorder=3, alpha=0.7)
        label = " = ".join(str(preorder.labels[k]) for k in members)
        ax.annotate(label, (x, y), xytext=(8, 8), textcoords="offset points", fontsize=9,
                    bbox=dict(boxstyle="round,pad=0.3", fc="white", ec="gray", alpha=0.5))

    ax.set_title(title, pad=15, fontsize=14)
    ax.axis("off")
    _save(fig, save_path)


def plot_frame(frame, labeling, save_path, title="Kripke frame"):
    """
    Draw a frame with its non-reflexive accessibility covers; each world shows
    the letters true there.
    """
    heights = layers(frame.relation)
    positions = _positions(heights)

    fig, ax = plt.subplots(figsize=(10, 8))
    for u, v in strict_covers(frame.relation):
        (x0, y0), (x1, y1) = positions[u], positions[v]
        ax.annotate("", xy=(x1, y1), xytext=(x0, y0),
                    arrowprops=dict(arrowstyle="->", color="gray", alpha=0.7))
    for w, name in enumerate(frame.worlds):
        x, y = positions[w]
        true_letters = [f"p{i}" for i in range(labeling.letters) if labeling.truth[i, w]]
        ax.scatter([x], [y], c="green" if w == 0 else "red", s=150, edgecolor="black", zorder=3)
        ax.annotate(f"{name}\n{' '.join(true_letters)}", (x, y), xytext=(8, 8),
                    textcoords="offset points", fontsize=9)

    ax.set_title(title, pad=15, fontsize=14)
    ax.axis("off")
    _save(fig, save_path)
