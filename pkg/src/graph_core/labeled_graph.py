"""
Labeled graph representation and label-restricted connectivity queries.

This is the evaluation kernel: every algorithm ends up calling
component_count() many times, so the per-label edge lists are precomputed
once at construction and stored 0-based.
"""

from typing import Dict, Iterable, List, Sequence, Tuple

from exceptions import (
    DisconnectedInputError,
    DuplicateEdgeError,
    LabelOutOfRangeError,
    NodeOutOfRangeError,
    SelfLoopError,
    UnusedLabelError,
    WidthMismatchError,
)
from graph_core.disjoint_set import DisjointSet
from graph_core.label_subset import LabelSubset

Edge = Tuple[int, int, int]


class LabeledGraph:
    """
    Immutable simple undirected graph with one label per edge.

    Node ids are 1..n and label ids are 1..k at the API surface. Instances
    are only created through build_graph(), which validates the input.
    """

    __slots__ = ('_n', '_k', '_edges', '_per_label_edges', '_label_pairs')

    def __init__(self, node_count: int, label_count: int, edges: Sequence[Edge]):
        self._n = node_count
        self._k = label_count
        self._edges: Tuple[Edge, ...] = tuple((int(u), int(v), int(l)) for u, v, l in edges)

        per_label: List[List[int]] = [[] for _ in range(label_count)]
        for index, (_, _, label) in enumerate(self._edges):
            per_label[label - 1].append(index)
        self._per_label_edges: Tuple[Tuple[int, ...], ...] = tuple(tuple(ids) for ids in per_label)
        self._label_pairs: Tuple[Tuple[Tuple[int, int], ...], ...] = tuple(
            tuple((self._edges[i][0] - 1, self._edges[i][1] - 1) for i in ids)
            for ids in self._per_label_edges
        )

    @property
    def node_count(self) -> int:
        return self._n

    @property
    def label_count(self) -> int:
        return self._k

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> Tuple[Edge, ...]:
        """Edges as (u, v, label), 1-based, in construction order."""
        return self._edges

    def edges_with_label(self, label: int) -> Tuple[int, ...]:
        """Indices into edges of every edge carrying label (1-based)."""
        return self._per_label_edges[label - 1]

    def label_frequencies(self) -> Dict[int, int]:
        return {label + 1: len(ids) for label, ids in enumerate(self._per_label_edges)}

    def label_pairs(self, label: int) -> Tuple[Tuple[int, int], ...]:
        """0-based endpoint pairs of the edges with label (1-based)."""
        return self._label_pairs[label - 1]

    def canonical_edges(self) -> List[Edge]:
        """Edges with u < v, sorted by (u, v)."""
        return sorted((min(u, v), max(u, v), label) for u, v, label in self._edges)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LabeledGraph):
            return NotImplemented
        return (self._n == other._n and self._k == other._k
                and self.canonical_edges() == other.canonical_edges())

    def __hash__(self) -> int:
        return hash((self._n, self._k, tuple(self.canonical_edges())))

    def __reduce__(self):
        return LabeledGraph, (self._n, self._k, self._edges)

    def __repr__(self) -> str:
        return f"LabeledGraph(n={self._n}, k={self._k}, m={len(self._edges)})"


def build_graph(n: int, k: int, edges: Iterable[Edge]) -> LabeledGraph:
    """
    Validate an edge list and build a LabeledGraph.

    Args:
        n: Number of nodes (ids 1..n)
        k: Number of labels (ids 1..k)
        edges: Iterable of (u, v, label) triples, 1-based

    Returns:
        The validated graph

    Raises:
        NodeOutOfRangeError, SelfLoopError, LabelOutOfRangeError,
        DuplicateEdgeError, UnusedLabelError, DisconnectedInputError:
            naming the first offending edge, label or node
    """
    if n < 1:
        raise NodeOutOfRangeError(f"Node count must be positive, got {n}")
    if k < 1:
        raise LabelOutOfRangeError(f"Label count must be positive, got {k}")

    edge_list = [tuple(edge) for edge in edges]
    seen: Dict[Tuple[int, int], int] = {}
    used = [False] * k

    for index, (u, v, label) in enumerate(edge_list):
        for node in (u, v):
            if not 1 <= node <= n:
                raise NodeOutOfRangeError(f"Edge {index} ({u}, {v}, {label}): node {node} outside [1, {n}]", index)
        if u == v:
            raise SelfLoopError(f"Edge {index} ({u}, {v}, {label}) is a self-loop", index)
        if not 1 <= label <= k:
            raise LabelOutOfRangeError(f"Edge {index} ({u}, {v}, {label}): label outside [1, {k}]", index)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdgeError(
                f"Edge {index} ({u}, {v}, {label}) duplicates edge {seen[key]} on nodes {key}",
                index,
            )
        seen[key] = index
        used[label - 1] = True

    for label, present in enumerate(used, start=1):
        if not present:
            raise UnusedLabelError(f"Label {label} does not appear on any edge")

    components = DisjointSet(n)
    for u, v, _ in edge_list:
        components.union(u - 1, v - 1)
    if components.count != 1:
        root = components.find(0)
        isolated = next(node for node in range(n) if components.find(node) != root)
        raise DisconnectedInputError(
            f"Graph is disconnected: node {isolated + 1} is not reachable from node 1"
        )

    return LabeledGraph(n, k, edge_list)


def _check_width(g: LabeledGraph, x: LabelSubset) -> None:
    if x.width != g.label_count:
        raise WidthMismatchError(g.label_count, x.width)


def component_count(g: LabeledGraph, x: LabelSubset) -> int:
    """
    Number of connected components of H(x), the spanning subgraph restricted
    to edges whose labels are selected in x.

    Raises:
        WidthMismatchError: If x.width != g.label_count
    """
    _check_width(g, x)
    components = DisjointSet(g.node_count)
    mask = x.mask
    label = 0
    while mask:
        if mask & 1:
            for u, v in g.label_pairs(label + 1):
                components.union(u, v)
        mask >>= 1
        label += 1
    return components.count


def is_feasible(g: LabeledGraph, x: LabelSubset) -> bool:
    """True iff H(x) is a connected spanning subgraph."""
    return component_count(g, x) == 1


def max_label_frequency(g: LabeledGraph) -> int:
    """The maximum number of edges sharing one label (b)."""
    return max(g.label_frequencies().values())
