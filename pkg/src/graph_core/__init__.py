"""Labeled graphs, label subsets and connectivity queries."""

from graph_core.disjoint_set import DisjointSet
from graph_core.label_subset import LabelSubset
from graph_core.labeled_graph import (
    LabeledGraph,
    build_graph,
    component_count,
    is_feasible,
    max_label_frequency,
)
from graph_core.instance_format import format_instance_text, parse_instance_text

__all__ = [
    'DisjointSet',
    'LabelSubset',
    'LabeledGraph',
    'build_graph',
    'component_count',
    'is_feasible',
    'max_label_frequency',
    'format_instance_text',
    'parse_instance_text',
]
