"""Shared fixtures for the test suite."""

import os
import sys
from collections import deque

import numpy as np
import pytest

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, ROOT)
sys.path.insert(0, os.path.join(ROOT, 'src'))

from graph_core.label_subset import LabelSubset  # noqa: E402
from instances.generators import gen_g1, gen_g2, gen_g3, gen_random_mlst_b  # noqa: E402

INSTANCES_DIR = os.path.join(ROOT, 'data', 'instances')
PLANS_DIR = os.path.join(ROOT, 'data', 'plans')


def fixture_path(name: str) -> str:
    return os.path.join(INSTANCES_DIR, name)


@pytest.fixture
def g3_b2():
    return gen_g3(2)


@pytest.fixture
def g3_b3():
    return gen_g3(3)


@pytest.fixture
def g1_k5():
    return gen_g1(5)


@pytest.fixture(scope='session')
def g2_k10():
    return gen_g2(10)


def random_instances(count: int, seed: int, max_n: int = 20, max_extra: int = 10, b=None):
    """Small connected random instances; b=None lets labels repeat freely."""
    rng = np.random.default_rng(seed)
    bundles = []
    for i in range(count):
        n = int(rng.integers(2, max_n + 1))
        m = int(rng.integers(n - 1, min(n * (n - 1) // 2, n - 1 + max_extra) + 1))
        k = int(rng.integers(1, m + 1))
        cap = m if b is None else b
        if k * cap < m:
            k = -(-m // cap)
        bundles.append(gen_random_mlst_b(n, m, k, cap, seed=seed * 1000 + i))
    return bundles


def random_subset(k: int, rng) -> LabelSubset:
    return LabelSubset.from_bits([int(bit) for bit in rng.integers(0, 2, size=k)])


def bfs_components(g, x) -> int:
    """Component count of H(x) by breadth-first search, independent of union-find."""
    adjacency = {node: [] for node in range(1, g.node_count + 1)}
    for u, v, label in g.edges:
        if label in x:
            adjacency[u].append(v)
            adjacency[v].append(u)
    seen = set()
    components = 0
    for start in adjacency:
        if start in seen:
            continue
        components += 1
        queue = deque([start])
        seen.add(start)
        while queue:
            node = queue.popleft()
            for neighbour in adjacency[node]:
                if neighbour not in seen:
                    seen.add(neighbour)
                    queue.append(neighbour)
    return components
