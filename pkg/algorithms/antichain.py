"""
Exact maximum antichain search for finite preorders.

Antichains are independent sets of the compatibility graph. The search walks
candidate sets in lexicographic order of their sorted index tuples, keeping the
best set found so far and pruning branches that cannot beat it, so the witness
returned is the lexicographically least maximum antichain.
"""

import logging
from dataclasses import dataclass

from core.errors import check_cap
from core.limits import DEFAULT_MAX_POSET

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class AntichainResult:
    """
    Attributes:
        size (int): Maximum antichain size
        witness (tuple): Indices of one maximum antichain (lexicographically least)
        labels (tuple): Labels of the witness elements
    """

    size: int
    witness: tuple
    labels: tuple


def incompatibility_masks(preorder):
    """For each element, the bitmask of elements incompatible with it."""
    masks = []
    for row in preorder.compatibility:
        mask = 0
        for j, joint in enumerate(row):
            if not joint:
                mask |= 1 << j
        masks.append(mask)
    return masks


def max_antichain(preorder, max_elements=DEFAULT_MAX_POSET):
    """
    Find a maximum pairwise-incompatible subset.

    Args:
        preorder (FinitePreorder): The preorder to search
        max_elements (int): Refuse preorders larger than this

    Returns:
        AntichainResult: Size and least witness

    Raises:
        ResourceCapError: When the preorder has more than max_elements elements
    """
    check_cap("max_poset", max_elements, len(preorder))
    incompatible = incompatibility_masks(preorder)
    best = ()
    nodes = 0

    def extend(chosen, candidates):
        nonlocal best, nodes
        nodes += 1
        if len(chosen) > len(best):
            best = chosen
        while candidates:
            # Bound: even taking every remaining candidate cannot beat the best
            if len(chosen) + candidates.bit_count() <= len(best):
                return
            lowest = candidates & -candidates
            vertex = lowest.bit_length() - 1
            candidates ^= lowest
            extend(chosen + (vertex,), candidates & incompatible[vertex])

    extend((), (1 << len(preorder)) - 1)
    LOGGER.debug("Antichain search visited %d nodes, best size %d", nodes, len(best))
    return AntichainResult(len(best), best, tuple(preorder.labels[i] for i in best))


def has_chain_condition(preorder, bound, max_elements=DEFAULT_MAX_POSET):
    """True iff every antichain has fewer than `bound` elements."""
    return max_antichain(preorder, max_elements).size < bound
