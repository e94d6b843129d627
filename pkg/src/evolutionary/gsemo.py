"""
GSEMO over the fitness vector (c(H(X)), |X|).
"""

import logging
from typing import Optional, Sequence, Tuple

from evolutionary.archive import ParetoArchive
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
from fitness.fitness import penalised_fitness
from graph_core.label_subset import LabelSubset
from graph_core.labeled_graph import LabeledGraph

logger = logging.getLogger(__name__)

ALGORITHM = 'gsemo'


def gsemo(g: LabeledGraph,
          init: Optional[LabelSubset] = None,
          budget: int = 0,
          target: Optional[int] = None,
          seed: int = 0,
          opt: Optional[int] = None,
          ratios: Sequence[Ratio] = (),
          check_archive: bool = False,
          cache_size: int = 65536) -> Tuple[RunRecord, ParetoArchive]:
    """
    Run GSEMO for at most budget offspring evaluations.

    Each iteration picks an archive member uniformly, mutates it with
    standard bit mutation and offers the offspring to the archive. An
    offspring whose vector equals an archived vector is rejected.

    Args:
        g: The instance
        init: Starting subset; uniform random when None
        budget: Maximum number of offspring evaluations
        target: Stop once a feasible solution with <= target labels is archived
        seed: 64-bit seed of the run's random stream
        opt: Known optimum, enables ratio-reached/optimum-reached events
        ratios: Approximation ratios to log when first reached
        check_archive: Assert the archive invariants after every insert
        cache_size: Size of the per-run evaluation memo

    Returns:
        (record, archive); record.best_solution is the feasible archive entry
        with the fewest labels, or the entry of least scalar fitness
    """
    if budget < 0:
        raise ValueError(f"budget must be non-negative, got {budget}")
    k = g.label_count
    rng = make_rng(seed)
    evaluator = FitnessEvaluator(g, cache_size)
    archive = ParetoArchive(k, check_invariants=check_archive)

    x = init if init is not None else random_subset(k, rng)
    if x.width != k:
        raise WidthMismatchError(k, x.width)
    archive.offer(x, evaluator.vector(x))

    tracker = EventTracker(opt, ratios)
    best = archive.best()
    best_fit = penalised_fitness(*best.vector, k)
    tracker.observe(0, best.vector, improved=False)

    def target_hit() -> bool:
        return target is not None and best.vector.components == 1 and best.vector.labels_used <= target

    terminated_by = TERMINATED_BUDGET
    iteration = 0
    if target_hit():
        terminated_by = TERMINATED_TARGET
    else:
        for iteration in range(1, budget + 1):
            parent = archive[int(rng.integers(len(archive)))].subset
            flips = mutation_mask(k, rng)
            if not flips:
                continue
            offspring = parent.flipped(flips)
            if not archive.offer(offspring, evaluator.vector(offspring)):
                continue

            candidate = archive.best()
            candidate_fit = penalised_fitness(*candidate.vector, k)
            if candidate_fit < best_fit:
                best, best_fit = candidate, candidate_fit
                tracker.observe(iteration, best.vector)
                if target_hit():
                    terminated_by = TERMINATED_TARGET
                    break

    best = archive.best()
    record = RunRecord(
        algorithm=ALGORITHM,
        seed=seed,
        budget=budget,
        iterations_used=iteration,
        best_solution=best.subset,
        best_fitness=best.vector,
        event_log=tracker.events,
        terminated_by=terminated_by,
        archive=[(entry.subset, entry.vector) for entry in archive],
    )
    logger.info("GSEMO seed=%d: best %s after %d iterations, archive size %d (%s)",
                seed, best.vector, iteration, len(archive), terminated_by)
    return record, archive
