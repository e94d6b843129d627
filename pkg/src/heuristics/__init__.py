"""Greedy and local-search baselines."""

from heuristics.era import era
from heuristics.local_search import (
    in_h_switch,
    is_h_switch_local_optimum,
    local_search_2switch,
    smaller_neighbours,
)
from heuristics.mvca import modified_mvca, mvca_with_contraction
from heuristics.spanning_tree import SpanningTree, spanning_tree_of, tree_path, validate_tree
from heuristics.tie_break import (
    HIGHEST_INDEX,
    LOWEST_INDEX,
    SEEDED_RANDOM,
    TieBreakPolicy,
)

__all__ = [
    'era',
    'in_h_switch',
    'is_h_switch_local_optimum',
    'local_search_2switch',
    'smaller_neighbours',
    'modified_mvca',
    'mvca_with_contraction',
    'SpanningTree',
    'spanning_tree_of',
    'tree_path',
    'validate_tree',
    'HIGHEST_INDEX',
    'LOWEST_INDEX',
    'SEEDED_RANDOM',
    'TieBreakPolicy',
]
