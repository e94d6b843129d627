"""
Scalar fitness, the bi-objective fitness vector and Pareto domination.

Both objectives are minimised. Values are exact Python integers.
"""

from typing import NamedTuple

from graph_core.label_subset import LabelSubset
from graph_core.labeled_graph import LabeledGraph, component_count


class FitnessVector(NamedTuple):
    """(c(H(X)), |X|) for a label subset X."""

    components: int
    labels_used: int

    def __str__(self) -> str:
        return f"({self.components}, {self.labels_used})"


def penalised_fitness(components: int, labels_used: int, k: int) -> int:
    """(components - 1) * k^2 + labels_used."""
    return (components - 1) * k * k + labels_used


def scalar_fitness(g: LabeledGraph, x: LabelSubset) -> int:
    """
    Fitness minimised by the (1+1) EA.

    Any reduction of the component count outweighs every label count
    difference because |X| <= k < k^2 (for k >= 2).

    Raises:
        WidthMismatchError: If x.width != g.label_count
    """
    return penalised_fitness(component_count(g, x), len(x), g.label_count)


def fitness_vector(g: LabeledGraph, x: LabelSubset) -> FitnessVector:
    """Raises WidthMismatchError if x.width != g.label_count."""
    return FitnessVector(component_count(g, x), len(x))


def dominates(a: FitnessVector, b: FitnessVector) -> bool:
    """
    True iff a dominates b: no worse in both objectives, strictly better in one.

    Examples:
        >>> dominates(FitnessVector(1, 2), FitnessVector(1, 3))
        True
        >>> dominates(FitnessVector(3, 5), FitnessVector(3, 5))
        False
    """
    return ((a.components < b.components and a.labels_used <= b.labels_used)
            or (a.components <= b.components and a.labels_used < b.labels_used))
