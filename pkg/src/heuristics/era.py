"""
Edge replacement: swap a non-tree edge into the tree and drop an edge of the
induced cycle whenever that lowers the number of distinct tree labels.
"""

import logging
from collections import Counter
from typing import List, Set

from graph_core.label_subset import LabelSubset
from graph_core.labeled_graph import LabeledGraph
from heuristics.spanning_tree import SpanningTree, tree_path, validate_tree
from heuristics.tie_break import TieBreakPolicy

logger = logging.getLogger(__name__)


def era(g: LabeledGraph, init: SpanningTree, order: TieBreakPolicy = TieBreakPolicy()) -> LabelSubset:
    """
    Run edge replacement from init until a full scan finds no improving swap.

    Among cycle edges whose removal lowers the distinct label count, the one
    whose label has the fewest tree edges is dropped; remaining ties are
    decided by the policy over edge indices.

    Returns:
        The labels of the final tree

    Raises:
        InvalidTreeError: If init is not a spanning tree of g
    """
    validate_tree(g, init)
    chooser = order.chooser()
    tree: Set[int] = set(init.edges)
    label_of = [label for _, _, label in g.edges]
    counts = Counter(label_of[i] for i in tree)
    swaps = 0

    while True:
        swapped = False
        non_tree = chooser.order([i for i in range(g.edge_count) if i not in tree])
        for entering in non_tree:
            u, v, new_label = g.edges[entering]
            cycle = tree_path(g, tree, u, v)
            distinct = len(counts)
            improving: List[int] = []
            for leaving in cycle:
                old_label = label_of[leaving]
                after = distinct
                if old_label != new_label:
                    after -= counts[old_label] == 1
                    after += counts[new_label] == 0
                if after < distinct:
                    improving.append(leaving)
            if not improving:
                continue

            fewest = min(counts[label_of[i]] for i in improving)
            leaving = chooser.pick(sorted(i for i in improving if counts[label_of[i]] == fewest))
            tree.remove(leaving)
            tree.add(entering)
            counts[label_of[leaving]] -= 1
            if counts[label_of[leaving]] == 0:
                del counts[label_of[leaving]]
            counts[new_label] += 1
            swaps += 1
            logger.debug("ERA swap: edge %d in, edge %d out, %d labels", entering, leaving, len(counts))
            swapped = True
            break
        if not swapped:
            break

    logger.info("ERA finished after %d swaps with %d labels", swaps, len(counts))
    return LabelSubset.from_labels(g.label_count, counts.keys())
