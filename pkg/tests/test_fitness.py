"""Scalar fitness, fitness vectors, domination and the evaluation memo."""

import numpy as np

from conftest import random_instances, random_subset
from fitness import FitnessEvaluator, FitnessVector, dominates, fitness_vector, penalised_fitness, scalar_fitness
from graph_core import LabelSubset, component_count


def test_penalised_fitness_values():
    assert penalised_fitness(1, 3, 5) == 3
    assert penalised_fitness(2, 0, 5) == 25
    assert penalised_fitness(3, 4, 10) == 204


def test_scalar_fitness_on_g3(g3_b2):
    g = g3_b2.graph
    assert scalar_fitness(g, LabelSubset.zeros(3)) == 4 * 9
    assert scalar_fitness(g, LabelSubset.from_labels(3, [2, 3])) == 2
    assert fitness_vector(g, LabelSubset.from_labels(3, [1])) == FitnessVector(3, 1)


def test_fewer_components_always_wins():
    rng = np.random.default_rng(5)
    for bundle in random_instances(20, seed=8):
        g = bundle.graph
        k = g.label_count
        if k < 2:
            continue
        for _ in range(10):
            x, y = random_subset(k, rng), random_subset(k, rng)
            cx, cy = component_count(g, x), component_count(g, y)
            if cx < cy:
                assert scalar_fitness(g, x) < scalar_fitness(g, y)


def test_domination():
    assert dominates(FitnessVector(1, 2), FitnessVector(2, 2))
    assert dominates(FitnessVector(1, 2), FitnessVector(1, 3))
    assert not dominates(FitnessVector(1, 3), FitnessVector(2, 2))
    assert not dominates(FitnessVector(2, 2), FitnessVector(2, 2))


def test_evaluator_memo_is_transparent(g1_k5):
    g = g1_k5.graph
    cached = FitnessEvaluator(g, cache_size=16)
    uncached = FitnessEvaluator(g, cache_size=0)
    for mask in range(32):
        x = LabelSubset(5, mask)
        assert cached.vector(x) == uncached.vector(x) == fitness_vector(g, x)
        assert cached.scalar(x) == scalar_fitness(g, x)
    assert cached.evaluations == 64
    assert uncached.evaluations == 32
