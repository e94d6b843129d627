"""
Generators for the adversarial instances G', G1, G2, G3 and for random
MLST_b instances.

Node ids are 1-based. Each generator returns an InstanceBundle carrying the
known optimum and the local optima that trap particular algorithms.
"""

import heapq
import logging
from math import factorial
from typing import Dict, List, Tuple

import numpy as np

from evolutionary.mutation import make_rng
from exceptions import (
    ConstructionVerificationFailedError,
    InfeasibleParamsError,
    ParamOutOfRangeError,
    RetriesExhaustedError,
)
from graph_core.label_subset import LabelSubset
from graph_core.labeled_graph import LabeledGraph, build_graph, component_count
from heuristics.local_search import is_h_switch_local_optimum
from instances.bundle import G1, G2, G3, G_PRIME, RANDOM_B, InstanceBundle, LocalOptimum
from oracle.exact import brute_force_opt

logger = logging.getLogger(__name__)

Edge = Tuple[int, int, int]

TRAPS_EA = '1+1-ea'
TRAPS_2SWITCH = '2-switch'
TRAPS_ERA = 'era'


def gen_g_prime(a: int, k: int) -> InstanceBundle:
    """
    G': k - a wheel-like subgraphs chained together.

    Subgraph i has an (a-1)-gon of outer nodes labeled a+i and an inner node
    with spokes labeled 1..a-1. Consecutive subgraphs are joined by
    inner_i-v1_{i+1} and v1_i-v1_{i+1} (label a+i) and inner_i-inner_{i+1}
    (label a); inner of the last subgraph is joined to v1 of the first by
    label k. Outer node v1 is the first polygon node of each subgraph.

    Args:
        a: Optimum size (mu * k), at least 4
        k: Number of labels, more than 2a

    Raises:
        ParamOutOfRangeError: If a < 4 or 2a >= k
    """
    if a < 4:
        raise ParamOutOfRangeError(f"G' needs a >= 4 (an (a-1)-gon with at least 3 sides), got a={a}")
    if 2 * a >= k:
        raise ParamOutOfRangeError(f"G' needs 2a < k, got a={a}, k={k}")

    blocks = k - a
    inner = [i * a + 1 for i in range(blocks)]
    outer = [[i * a + 1 + j for j in range(1, a)] for i in range(blocks)]
    edges: List[Edge] = []

    for i in range(blocks):
        polygon_label = a + i + 1
        ring = outer[i]
        for j in range(a - 1):
            edges.append((ring[j], ring[(j + 1) % (a - 1)], polygon_label))
        for j in range(a - 1):
            edges.append((inner[i], ring[j], j + 1))
        if i + 1 < blocks:
            edges.append((inner[i], outer[i + 1][0], polygon_label))
            edges.append((ring[0], outer[i + 1][0], polygon_label))
            edges.append((inner[i], inner[i + 1], a))
    edges.append((inner[-1], outer[0][0], k))

    graph = build_graph(a * blocks, k, edges)
    optimum = LabelSubset.from_labels(k, range(1, a + 1))
    trap = LabelSubset.from_labels(k, range(a + 1, k + 1))
    return InstanceBundle(
        graph=graph,
        family=G_PRIME,
        params={'a': a, 'k': k},
        known_opt=(a, optimum),
        known_local_opts=[LocalOptimum(trap, TRAPS_EA), LocalOptimum(trap, TRAPS_2SWITCH)],
        metadata={'inner_nodes': inner, 'v1_nodes': [ring[0] for ring in outer]},
    )


def gen_g1(k: int) -> InstanceBundle:
    """
    G1: a star from node 1 with labels 1..k-1 plus every other node pair
    labeled k (a complete graph on n = k nodes).

    Raises:
        ParamOutOfRangeError: If k < 3
    """
    if k < 3:
        raise ParamOutOfRangeError(f"G1 needs k >= 3, got k={k}")
    edges: List[Edge] = [(1, j + 1, j) for j in range(1, k)]
    edges.extend((u, v, k) for u in range(2, k + 1) for v in range(u + 1, k + 1))
    graph = build_graph(k, k, edges)
    return InstanceBundle(
        graph=graph,
        family=G1,
        params={'k': k},
        known_opt=(2, LabelSubset.from_labels(k, (1, k))),
        known_local_opts=[LocalOptimum(LabelSubset.from_labels(k, range(1, k)), TRAPS_ERA)],
    )


def gen_g2(k: int) -> InstanceBundle:
    """
    G2: 2k-5 nodes v0, x_0..x_{t-1}, y_0..y_{t-1} (t = k-3), 4k-12 edges.

    Labels k-1 (star v0-x_i) and k (matching x_i-y_i) form the optimal
    spanning tree. Labels 1..k-2 form a second spanning tree built so that
    dropping any two of them cannot be repaired by adding only one of k-1, k:
    label i+1 (i < t-1) carries y_i-x_{i+1} and x_i-x_{i+1}, label k-3 carries
    v0-y_{t-1} and label k-2 carries y_{t-1}-x_0. Hence {1..k-2} is a 2-switch
    local optimum. The generator re-checks all of this before returning.

    Raises:
        ParamOutOfRangeError: If k < 7
        ConstructionVerificationFailedError: If a self-check fails
        TooManyLabelsError: If k > 24, beyond what the self-check can enumerate
    """
    if k < 7:
        raise ParamOutOfRangeError(f"G2 needs k >= 7, got k={k}")
    t = k - 3
    v0 = 1
    x = [2 + i for i in range(t)]
    y = [2 + t + i for i in range(t)]

    edges: List[Edge] = []
    for i in range(t - 1):
        edges.append((y[i], x[i + 1], i + 1))
        edges.append((x[i], x[i + 1], i + 1))
    edges.append((v0, y[t - 1], k - 3))
    edges.append((y[t - 1], x[0], k - 2))
    edges.extend((v0, x[i], k - 1) for i in range(t))
    edges.extend((x[i], y[i], k) for i in range(t))

    graph = build_graph(2 * k - 5, k, edges)
    optimum = LabelSubset.from_labels(k, (k - 1, k))
    trap = LabelSubset.from_labels(k, range(1, k - 1))

    failures = check_g2_properties(graph)
    if failures:
        raise ConstructionVerificationFailedError(f"G2(k={k}): {'; '.join(failures)}")

    return InstanceBundle(
        graph=graph,
        family=G2,
        params={'k': k},
        known_opt=(2, optimum),
        known_local_opts=[LocalOptimum(trap, TRAPS_2SWITCH)],
        metadata={'v0': v0, 'x_nodes': x, 'y_nodes': y},
    )


def check_g2_properties(g: LabeledGraph) -> List[str]:
    """
    Check the G2 contract on g: OPT = 2 with witness {k-1, k}, and
    {1..k-2} feasible and 2-switch locally optimal.

    Returns:
        Descriptions of the violated properties, empty if all hold

    Raises:
        TooManyLabelsError: If k exceeds the oracle's default limit
    """
    k = g.label_count
    optimum = LabelSubset.from_labels(k, (k - 1, k))
    trap = LabelSubset.from_labels(k, range(1, k - 1))
    failures = []

    oracle = brute_force_opt(g)
    if oracle.opt_value != 2 or oracle.witness != optimum:
        failures.append(f"oracle found OPT={oracle.opt_value} with {oracle.witness}, expected 2 with {optimum}")
    if component_count(g, trap) != 1:
        failures.append(f"labels 1..{k - 2} are not feasible")
    elif not is_h_switch_local_optimum(g, trap, 2):
        failures.append(f"labels 1..{k - 2} are not a 2-switch local optimum")
    return failures


def g3_label_blocks(b: int) -> Dict[str, List[int]]:
    """Label ids of L_b, ..., L_2 and L_opt in G3(b)."""
    groups = factorial(b)
    blocks: Dict[str, List[int]] = {}
    next_label = 1
    for h in range(b, 1, -1):
        blocks[f"L{h}"] = list(range(next_label, next_label + groups // h))
        next_label += groups // h
    blocks['Lopt'] = list(range(next_label, next_label + groups))
    return blocks


def gen_g3(b: int) -> InstanceBundle:
    """
    G3: n = b*b!+1 nodes in b! overlapping groups of b+1 consecutive nodes.

    Each group's path edges carry one L_opt label. For h = b..2 the chord
    from the group's first node to the node h further is labeled in blocks
    of h consecutive groups, giving b!/h labels of L_h. L_h labels come first
    (h descending), L_opt labels last.

    Raises:
        ParamOutOfRangeError: If b < 2
    """
    if b < 2:
        raise ParamOutOfRangeError(f"G3 needs b >= 2, got b={b}")
    groups = factorial(b)
    blocks = g3_label_blocks(b)
    k = sum(len(labels) for labels in blocks.values())
    edges: List[Edge] = []

    for h in range(b, 1, -1):
        labels = blocks[f"L{h}"]
        for j in range(groups):
            start = j * b + 1
            edges.append((start, start + h, labels[j // h]))
    for j, label in enumerate(blocks['Lopt']):
        start = j * b + 1
        edges.extend((start + i, start + i + 1, label) for i in range(b))

    graph = build_graph(b * groups + 1, k, edges)
    return InstanceBundle(
        graph=graph,
        family=G3,
        params={'b': b},
        known_opt=(groups, LabelSubset.from_labels(k, blocks['Lopt'])),
        metadata={'label_blocks': blocks},
    )


def _random_tree(n: int, rng: np.random.Generator) -> List[Tuple[int, int]]:
    """Uniform random labeled tree on nodes 1..n via a Pruefer sequence."""
    if n == 1:
        return []
    if n == 2:
        return [(1, 2)]
    sequence = [int(v) + 1 for v in rng.integers(0, n, size=n - 2)]
    degree = [1] * (n + 1)
    for node in sequence:
        degree[node] += 1
    leaves = [node for node in range(1, n + 1) if degree[node] == 1]
    heapq.heapify(leaves)
    tree = []
    for node in sequence:
        leaf = heapq.heappop(leaves)
        tree.append((min(leaf, node), max(leaf, node)))
        degree[node] -= 1
        if degree[node] == 1:
            heapq.heappush(leaves, node)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    tree.append((min(u, v), max(u, v)))
    return tree


def gen_random_mlst_b(n: int, m: int, k: int, b: int, seed: int,
                      retries: int = 100) -> InstanceBundle:
    """
    Random connected MLST_b instance: a uniform random spanning tree, m-(n-1)
    extra random node pairs, and labels with every label used 1..b times.

    Each label is placed once; the remaining m-k edges draw without
    replacement from a pool holding every label b-1 more times, and the
    multiset is shuffled onto the edges. Any k*b >= m admits such a draw.

    Raises:
        InfeasibleParamsError: If the counts admit no instance
        RetriesExhaustedError: If retries label draws were all rejected
    """
    if n < 2 or not n - 1 <= m <= n * (n - 1) // 2:
        raise InfeasibleParamsError(f"Need n >= 2 and n-1 <= m <= n(n-1)/2, got n={n}, m={m}")
    if not 1 <= k <= m:
        raise InfeasibleParamsError(f"Need 1 <= k <= m, got k={k}, m={m}")
    if b < 1 or k * b < m:
        raise InfeasibleParamsError(f"k*b = {k * b} labels slots cannot cover m={m} edges")

    rng = make_rng(seed)
    tree = _random_tree(n, rng)
    tree_pairs = set(tree)
    others = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if (u, v) not in tree_pairs]
    extra_ids = rng.choice(len(others), size=m - (n - 1), replace=False) if m > n - 1 else []
    pairs = tree + [others[int(i)] for i in sorted(extra_ids)]

    every_label = np.arange(1, k + 1)
    pool = np.repeat(every_label, b - 1)
    for attempt in range(1, retries + 1):
        fill = rng.choice(pool, size=m - k, replace=False) if m > k else np.empty(0, dtype=int)
        labels = rng.permutation(np.concatenate([every_label, fill]))
        counts = np.bincount(labels, minlength=k + 1)[1:]
        if counts.min() >= 1 and counts.max() <= b:
            edges = [(u, v, int(label)) for (u, v), label in zip(pairs, labels)]
            logger.debug("Random MLST_b labels accepted on attempt %d", attempt)
            return InstanceBundle(
                graph=build_graph(n, k, edges),
                family=RANDOM_B,
                params={'n': n, 'm': m, 'k': k, 'b': b, 'seed': seed},
            )
    raise RetriesExhaustedError(f"No label assignment with frequency <= {b} after {retries} attempts")
