"""
h-switch neighbourhoods and first-improvement 2-switch local search.

A neighbour removes at most h labels and adds at most h labels. Only strictly
smaller neighbours matter, so a move removes r labels and adds a < r.
"""

import logging
from itertools import combinations
from typing import Iterator, Optional

from exceptions import InfeasibleInitError
from graph_core.label_subset import LabelSubset
from graph_core.labeled_graph import LabeledGraph, component_count
from heuristics.tie_break import TieBreaker, TieBreakPolicy

logger = logging.getLogger(__name__)


def in_h_switch(x1: LabelSubset, x2: LabelSubset, h: int) -> bool:
    """
    True iff |x1 - x2| <= h and |x2 - x1| <= h.

    Raises:
        WidthMismatchError: If the widths differ
    """
    return len(x1.difference(x2)) <= h and len(x2.difference(x1)) <= h


def smaller_neighbours(x: LabelSubset, h: int, chooser: TieBreaker) -> Iterator[LabelSubset]:
    """
    Strictly smaller members of the h-switch neighbourhood of x.

    Removal sets come first by size, then in lexicographic order of the scan
    order; for each, addition sets by size then lexicographically.
    """
    inside = chooser.order(x.labels())
    outside = chooser.order(x.unused_labels())
    for removed_count in range(1, h + 1):
        for removed in combinations(inside, removed_count):
            reduced = x.without_labels(*removed)
            for added_count in range(0, min(h, removed_count - 1) + 1):
                for added in combinations(outside, added_count):
                    yield reduced.with_labels(*added) if added else reduced


def _require_feasible(g: LabeledGraph, x: LabelSubset) -> None:
    count = component_count(g, x)
    if count != 1:
        raise InfeasibleInitError(f"Labels {x} leave {count} components")


def local_search_2switch(g: LabeledGraph, init: LabelSubset,
                         order: TieBreakPolicy = TieBreakPolicy()) -> LabelSubset:
    """
    Move to the first feasible strictly smaller 2-switch neighbour until none
    exists.

    Raises:
        InfeasibleInitError: If init is not feasible
    """
    _require_feasible(g, init)
    chooser = order.chooser()
    current = init
    moves = 0
    while True:
        improvement = _first_feasible(g, smaller_neighbours(current, 2, chooser))
        if improvement is None:
            break
        logger.debug("2-switch move %s -> %s", current, improvement)
        current = improvement
        moves += 1
    logger.info("2-switch local search stopped after %d moves at %d labels", moves, len(current))
    return current


def is_h_switch_local_optimum(g: LabeledGraph, x: LabelSubset, h: int) -> bool:
    """
    True iff no feasible y with |y| < |x| lies in the h-switch neighbourhood.

    Raises:
        InfeasibleInitError: If x is not feasible
    """
    _require_feasible(g, x)
    chooser = TieBreakPolicy().chooser()
    return _first_feasible(g, smaller_neighbours(x, h, chooser)) is None


def _first_feasible(g: LabeledGraph, candidates) -> Optional[LabelSubset]:
    for candidate in candidates:
        if component_count(g, candidate) == 1:
            return candidate
    return None
