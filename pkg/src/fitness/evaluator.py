"""
Per-run fitness evaluator with an optional bounded memo of component counts.
"""

import logging
from functools import lru_cache
from typing import Callable

from exceptions import WidthMismatchError
from fitness.fitness import FitnessVector, penalised_fitness
from graph_core.label_subset import LabelSubset
from graph_core.labeled_graph import LabeledGraph, component_count

logger = logging.getLogger(__name__)


class FitnessEvaluator:
    """
    Evaluates label subsets on one graph.

    The memo is keyed by subset mask and only stores component counts, so
    results are identical with and without it.
    """

    def __init__(self, g: LabeledGraph, cache_size: int = 65536):
        """
        Args:
            g: The instance
            cache_size: Maximum memoised subsets; 0 disables the memo
        """
        self.graph = g
        self.k = g.label_count
        self.evaluations = 0

        def count(mask: int) -> int:
            return component_count(g, LabelSubset(self.k, mask))

        if cache_size > 0:
            self._count: Callable[[int], int] = lru_cache(maxsize=cache_size)(count)
        else:
            logger.debug("Evaluation memo disabled")
            self._count = count

    def components(self, x: LabelSubset) -> int:
        if x.width != self.k:
            raise WidthMismatchError(self.k, x.width)
        self.evaluations += 1
        return self._count(x.mask)

    def vector(self, x: LabelSubset) -> FitnessVector:
        return FitnessVector(self.components(x), len(x))

    def scalar(self, x: LabelSubset) -> int:
        return penalised_fitness(self.components(x), len(x), self.k)

    def is_feasible(self, x: LabelSubset) -> bool:
        return self.components(x) == 1
