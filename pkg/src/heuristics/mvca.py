"""
Greedy label selection: the modified MVCA and its contraction variant.

Both add, round by round, the unused label that leaves the fewest connected
components. The contraction variant keeps the current components as
supernodes and only looks at label edges between different supernodes.
"""

import logging
from typing import Dict, List, Set, Tuple

from graph_core.disjoint_set import DisjointSet
from graph_core.label_subset import LabelSubset
from graph_core.labeled_graph import LabeledGraph, component_count
from heuristics.tie_break import TieBreakPolicy

logger = logging.getLogger(__name__)


def modified_mvca(g: LabeledGraph, tie: TieBreakPolicy = TieBreakPolicy()) -> LabelSubset:
    """
    Greedy MVCA: start from no labels, add the label minimising the
    resulting component count until H is connected.

    Args:
        g: The instance (connected, so the loop terminates)
        tie: Choice among labels with the same resulting count

    Returns:
        The selected (feasible) label subset
    """
    chooser = tie.chooser()
    selected = LabelSubset.zeros(g.label_count)
    current = component_count(g, selected)

    while current > 1:
        counts = {label: component_count(g, selected.with_labels(label))
                  for label in selected.unused_labels()}
        best = min(counts.values())
        label = chooser.pick([label for label, count in counts.items() if count == best])
        selected = selected.with_labels(label)
        logger.debug("MVCA picks label %d: %d -> %d components", label, current, best)
        current = best

    return selected


def mvca_with_contraction(g: LabeledGraph, tie: TieBreakPolicy = TieBreakPolicy()) -> LabelSubset:
    """
    MVCA on an explicitly contracted supernode graph.

    Selection counts equal modified_mvca's under the same tie-break policy;
    only the bookkeeping differs.
    """
    chooser = tie.chooser()
    k = g.label_count
    supernode: List[int] = list(range(g.node_count))
    supernode_count = g.node_count
    contracted = _contract(g, supernode, range(1, k + 1))
    selected = LabelSubset.zeros(k)

    while supernode_count > 1:
        counts: Dict[int, int] = {}
        for label in selected.unused_labels():
            merge = DisjointSet(supernode_count)
            for a, b in contracted[label]:
                merge.union(a, b)
            counts[label] = merge.count
        best = min(counts.values())
        label = chooser.pick([label for label, count in counts.items() if count == best])
        selected = selected.with_labels(label)

        merge = DisjointSet(supernode_count)
        for a, b in contracted[label]:
            merge.union(a, b)
        supernode, supernode_count = _renumber(supernode, merge)
        contracted = _contract(g, supernode, selected.unused_labels())
        logger.debug("Contracted MVCA picks label %d: %d supernodes", label, supernode_count)

    return selected


def _renumber(supernode: List[int], merge: DisjointSet) -> Tuple[List[int], int]:
    ids: Dict[int, int] = {}
    renumbered = []
    for s in supernode:
        root = merge.find(s)
        renumbered.append(ids.setdefault(root, len(ids)))
    return renumbered, len(ids)


def _contract(g: LabeledGraph, supernode: List[int], labels) -> Dict[int, List[Tuple[int, int]]]:
    """Per-label edges between distinct supernodes, parallel edges collapsed."""
    contracted: Dict[int, List[Tuple[int, int]]] = {}
    for label in labels:
        seen: Set[Tuple[int, int]] = set()
        for u, v in g.label_pairs(label):
            a, b = supernode[u], supernode[v]
            if a != b:
                seen.add((min(a, b), max(a, b)))
        contracted[label] = sorted(seen)
    return contracted
