"""
Spanning trees as edge-index lists into the parent graph.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from exceptions import InfeasibleSolutionError, InvalidTreeError
from graph_core.disjoint_set import DisjointSet
from graph_core.label_subset import LabelSubset
from graph_core.labeled_graph import LabeledGraph


@dataclass(frozen=True)
class SpanningTree:
    edges: Tuple[int, ...]

    def labels(self, g: LabeledGraph) -> LabelSubset:
        """Distinct labels used by the tree."""
        return LabelSubset.from_labels(g.label_count, {g.edges[i][2] for i in self.edges})


def validate_tree(g: LabeledGraph, tree: SpanningTree) -> None:
    """
    Raises:
        InvalidTreeError: Unless tree has n-1 distinct valid edges and is acyclic
    """
    n = g.node_count
    if len(tree.edges) != n - 1:
        raise InvalidTreeError(f"Tree has {len(tree.edges)} edges, expected n-1={n - 1}")
    if len(set(tree.edges)) != len(tree.edges):
        raise InvalidTreeError("Tree repeats an edge")
    components = DisjointSet(n)
    for index in tree.edges:
        if not 0 <= index < g.edge_count:
            raise InvalidTreeError(f"Edge index {index} outside [0, {g.edge_count})")
        u, v, _ = g.edges[index]
        if not components.union(u - 1, v - 1):
            raise InvalidTreeError(f"Edge {index} ({u}, {v}) closes a cycle")


def spanning_tree_of(g: LabeledGraph, x: LabelSubset) -> SpanningTree:
    """
    A spanning tree of H(x), taking edges in index order.

    Raises:
        InfeasibleSolutionError: If H(x) is not connected
    """
    components = DisjointSet(g.node_count)
    chosen: List[int] = []
    for index, (u, v, label) in enumerate(g.edges):
        if label in x and components.union(u - 1, v - 1):
            chosen.append(index)
    if components.count != 1:
        raise InfeasibleSolutionError(
            f"Labels {x} leave {components.count} components; no spanning tree exists"
        )
    return SpanningTree(tuple(chosen))


def tree_path(g: LabeledGraph, tree_edges, source: int, target: int) -> Optional[List[int]]:
    """Edge indices on the tree path between two 1-based nodes."""
    adjacency: Dict[int, List[Tuple[int, int]]] = {}
    for index in tree_edges:
        u, v, _ = g.edges[index]
        adjacency.setdefault(u, []).append((v, index))
        adjacency.setdefault(v, []).append((u, index))

    parent: Dict[int, Tuple[int, int]] = {source: (source, -1)}
    frontier = [source]
    while frontier and target not in parent:
        next_frontier = []
        for node in frontier:
            for neighbour, index in adjacency.get(node, []):
                if neighbour not in parent:
                    parent[neighbour] = (node, index)
                    next_frontier.append(neighbour)
        frontier = next_frontier

    if target not in parent:
        return None
    path = []
    node = target
    while node != source:
        node, index = parent[node]
        path.append(index)
    return path
