"""Fitness functions and domination."""

from fitness.fitness import (
    FitnessVector,
    dominates,
    fitness_vector,
    penalised_fitness,
    scalar_fitness,
)
from fitness.evaluator import FitnessEvaluator

__all__ = [
    'FitnessVector',
    'FitnessEvaluator',
    'dominates',
    'fitness_vector',
    'penalised_fitness',
    'scalar_fitness',
]
