"""
The (1+1) EA minimising (c(H(X)) - 1) * k^2 + |X|.
"""

import logging
from typing import Optional, Sequence

from evolutionary.mutation import make_rng, mutation_mask, random_subset
from evolutionary.records import (
    TERMINATED_BUDGET,
    TERMINATED_TARGET,
    EventTracker,
    Ratio,
    RunRecord,
)
from exceptions import WidthMismatchError
from fitness.evaluator import FitnessEvaluator
from fitness.fitness import FitnessVector, penalised_fitness
from graph_core.label_subset import LabelSubset
from graph_core.labeled_graph import LabeledGraph

logger = logging.getLogger(__name__)

ALGORITHM = 'one-plus-one-ea'


def one_plus_one_ea(g: LabeledGraph,
                    init: Optional[LabelSubset] = None,
                    budget: int = 0,
                    target: Optional[int] = None,
                    seed: int = 0,
                    opt: Optional[int] = None,
                    ratios: Sequence[Ratio] = (),
                    accept_equal: bool = False,
                    cache_size: int = 65536) -> RunRecord:
    """
    Run the (1+1) EA for at most budget mutate-evaluate-select iterations.

    Args:
        g: The instance
        init: Starting subset; uniform random over {0,1}^k when None
        budget: Maximum number of offspring evaluations
        target: Stop once the scalar fitness is <= target
        seed: 64-bit seed of the run's random stream
        opt: Known optimum, enables ratio-reached/optimum-reached events
        ratios: Approximation ratios to log when first reached
        accept_equal: Also accept offspring of equal fitness (plateau moves)
        cache_size: Size of the per-run evaluation memo

    Returns:
        RunRecord of the run; best_solution is the final current solution

    Raises:
        WidthMismatchError: If init does not have width k
    """
    if budget < 0:
        raise ValueError(f"budget must be non-negative, got {budget}")
    k = g.label_count
    rng = make_rng(seed)
    evaluator = FitnessEvaluator(g, cache_size)

    x = init if init is not None else random_subset(k, rng)
    if x.width != k:
        raise WidthMismatchError(k, x.width)
    components = evaluator.components(x)
    fit = penalised_fitness(components, len(x), k)

    tracker = EventTracker(opt, ratios)
    tracker.observe(0, FitnessVector(components, len(x)), improved=False)

    terminated_by = TERMINATED_BUDGET
    iteration = 0
    if target is not None and fit <= target:
        terminated_by = TERMINATED_TARGET
    else:
        for iteration in range(1, budget + 1):
            flips = mutation_mask(k, rng)
            if not flips:
                continue
            y = x.flipped(flips)
            y_components = evaluator.components(y)
            y_fit = penalised_fitness(y_components, len(y), k)

            # Ties on fitness can only differ in components when k = 1
            improved = (y_fit, y_components) < (fit, components)
            if not (improved or (accept_equal and y_fit <= fit)):
                continue
            x, fit, components = y, y_fit, y_components
            if improved:
                logger.debug("Iteration %d: accepted %s with fitness %d", iteration, x.bits(), fit)
                tracker.observe(iteration, FitnessVector(components, len(x)))
            if target is not None and fit <= target:
                terminated_by = TERMINATED_TARGET
                break

    record = RunRecord(
        algorithm=ALGORITHM,
        seed=seed,
        budget=budget,
        iterations_used=iteration,
        best_solution=x,
        best_fitness=FitnessVector(components, len(x)),
        event_log=tracker.events,
        terminated_by=terminated_by,
    )
    logger.info("(1+1) EA seed=%d: fitness %d after %d iterations (%s)",
                seed, fit, iteration, terminated_by)
    return record
