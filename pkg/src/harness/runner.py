"""
Seeded multi-trial experiment runner.

Trial i of a plan runs with seed derive_seed(master_seed, i), so results do
not depend on how trials are distributed across worker processes.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import pandas as pd

from evolutionary.gsemo import gsemo
from evolutionary.mutation import derive_seed
from evolutionary.one_plus_one_ea import one_plus_one_ea
from evolutionary.records import EventTracker, RunRecord, ratio_limit
from fitness.fitness import fitness_vector
from graph_core.label_subset import LabelSubset
from graph_core.labeled_graph import LabeledGraph, component_count
from heuristics.era import era
from heuristics.local_search import local_search_2switch
from heuristics.mvca import modified_mvca, mvca_with_contraction
from heuristics.spanning_tree import spanning_tree_of
from heuristics.tie_break import TieBreakPolicy
from instances.bundle import G1, G2, G3, G_PRIME, RANDOM_B, InstanceBundle
from instances.generators import (
    TRAPS_2SWITCH,
    TRAPS_EA,
    TRAPS_ERA,
    gen_g1,
    gen_g2,
    gen_g3,
    gen_g_prime,
    gen_random_mlst_b,
)
from instances.instance_store import load_bundle, load_instance
from harness.plan import (
    ERA,
    GSEMO,
    INIT_LOCAL_OPT,
    INIT_ONES,
    INIT_RANDOM,
    INIT_ZEROS,
    LS_2SWITCH,
    MVCA,
    MVCA_CONTRACT,
    ONE_PLUS_ONE_EA,
    TARGET_OPTIMUM,
    TARGET_RATIO,
    ExperimentPlan,
    Target,
)
from exceptions import ConfigError
from oracle.exact import brute_force_opt

logger = logging.getLogger(__name__)

GENERATORS = {
    G_PRIME: gen_g_prime,
    G1: gen_g1,
    G2: gen_g2,
    G3: gen_g3,
    RANDOM_B: gen_random_mlst_b,
}

TRAP_TAGS = {
    ONE_PLUS_ONE_EA: TRAPS_EA,
    GSEMO: TRAPS_EA,
    LS_2SWITCH: TRAPS_2SWITCH,
    ERA: TRAPS_ERA,
}

QUANTILES = {'min': 0.0, 'median': 0.5, 'p95': 0.95, 'max': 1.0}

INFEASIBLE = 'infeasible'


@dataclass
class ResolvedInstance:
    """The plan's instance, loaded or generated once per experiment."""

    graph: LabeledGraph
    name: str
    bundle: Optional[InstanceBundle] = None
    opt: Optional[int] = None

    @property
    def family(self) -> Optional[str]:
        return self.bundle.family if self.bundle else None


def generate_instance(family: str, params: Dict[str, Any], retries: int = 100) -> InstanceBundle:
    """
    Raises:
        ConfigError: On an unknown family or parameter names
    """
    if family not in GENERATORS:
        raise ConfigError(f"Unknown instance family {family!r}; expected one of {', '.join(GENERATORS)}")
    params = dict(params)
    if family == RANDOM_B:
        params.setdefault('retries', retries)
    try:
        return GENERATORS[family](**params)
    except TypeError as e:
        raise ConfigError(f"Invalid parameters for {family}: {e}") from e


def resolve_instance(plan: ExperimentPlan, retries: int = 100) -> ResolvedInstance:
    """Load or generate the plan's instance and settle OPT if any target needs it."""
    source = plan.instance
    bundle = None
    if isinstance(source, InstanceBundle):
        bundle = source
        graph = bundle.graph
    elif isinstance(source, str):
        bundle = load_bundle(source)
        graph = bundle.graph if bundle else load_instance(source)
    elif isinstance(source, dict):
        bundle = generate_instance(source.get('family', ''), source.get('params', {}), retries)
        graph = bundle.graph
    else:
        raise ConfigError(f"Cannot resolve instance {source!r}")

    opt = plan.opt
    if opt is None and bundle is not None:
        opt = bundle.opt_value
    if opt is None and plan.needs_opt:
        logger.info("No known optimum for %s; running the oracle", plan.instance_name())
        opt = brute_force_opt(graph, plan.oracle_k_limit).opt_value
    return ResolvedInstance(graph, plan.instance_name(), bundle, opt)


def initial_solution(plan: ExperimentPlan, resolved: ResolvedInstance) -> Optional[LabelSubset]:
    """
    Starting subset for the plan's init mode; None means uniform random.

    Local search and ERA need a feasible start, so random init falls back to
    all ones for them.
    """
    k = resolved.graph.label_count
    needs_feasible = plan.algorithm in (LS_2SWITCH, ERA)
    if plan.init == INIT_ZEROS:
        return LabelSubset.zeros(k)
    if plan.init == INIT_ONES or (plan.init == INIT_RANDOM and needs_feasible):
        return LabelSubset.ones(k)
    if plan.init == INIT_LOCAL_OPT:
        if resolved.bundle is None:
            raise ConfigError(f"init {INIT_LOCAL_OPT} needs an instance with known local optima")
        try:
            return resolved.bundle.local_optimum(TRAP_TAGS.get(plan.algorithm))
        except LookupError:
            return resolved.bundle.local_optimum()
    return None


def _heuristic_record(plan: ExperimentPlan, resolved: ResolvedInstance, solution: LabelSubset,
                      seed: Optional[int]) -> RunRecord:
    vector = fitness_vector(resolved.graph, solution)
    tracker = EventTracker(resolved.opt, plan.ratios)
    tracker.observe(0, vector, improved=False)
    return RunRecord(
        algorithm=plan.algorithm,
        seed=seed,
        budget=0,
        iterations_used=0,
        best_solution=solution,
        best_fitness=vector,
        event_log=tracker.events,
    )


def run_trial(plan: ExperimentPlan, resolved: ResolvedInstance, trial_index: int) -> RunRecord:
    """Run one trial of the plan with its derived seed."""
    return run_algorithm(plan, resolved, derive_seed(plan.master_seed, trial_index))


def run_algorithm(plan: ExperimentPlan, resolved: ResolvedInstance, seed: int) -> RunRecord:
    """
    Run the plan's algorithm once with an explicit seed.

    Deterministic heuristics only use the seed for seeded-random tie-breaking
    and record seed None otherwise.
    """
    g = resolved.graph
    init = initial_solution(plan, resolved)

    if plan.algorithm in (ONE_PLUS_ONE_EA, GSEMO):
        budget = plan.budget.evaluate(g.node_count, g.label_count, resolved.family, plan.algorithm)
        # Nothing improves on OPT, so runs stop there when it is known
        target = resolved.opt
        if plan.algorithm == ONE_PLUS_ONE_EA:
            return one_plus_one_ea(g, init, budget, target=target, seed=seed,
                                   opt=resolved.opt, ratios=plan.ratios,
                                   accept_equal=plan.accept_equal, cache_size=plan.cache_size)
        record, _ = gsemo(g, init, budget, target=target, seed=seed, opt=resolved.opt,
                          ratios=plan.ratios, check_archive=plan.check_archive,
                          cache_size=plan.cache_size)
        return record

    tie_seed = seed if plan.randomized else None
    policy = TieBreakPolicy.parse(plan.tie, tie_seed)
    if plan.algorithm == MVCA:
        solution = modified_mvca(g, policy)
    elif plan.algorithm == MVCA_CONTRACT:
        solution = mvca_with_contraction(g, policy)
    elif plan.algorithm == LS_2SWITCH:
        solution = local_search_2switch(g, init, policy)
    else:
        solution = era(g, spanning_tree_of(g, init), policy)
    return _heuristic_record(plan, resolved, solution, tie_seed)


def _trial_job(args: Tuple[ExperimentPlan, ResolvedInstance, int]) -> RunRecord:
    return run_trial(*args)


def validated_iterations(g: LabeledGraph, record: RunRecord, target: Target,
                         opt: Optional[int]) -> Optional[int]:
    """
    Iteration at which the record first met target, or None.

    The logged event is re-checked against the best solution itself, so a
    trace claiming success for an infeasible or too large solution does not
    count.
    """
    ratio = target.ratio if target.kind == TARGET_RATIO else None
    iteration = record.iterations_to(target.event_kind, ratio)
    if iteration is None:
        return None
    best = record.best_solution
    if component_count(g, best) != 1:
        logger.warning("Trial seed=%s logged %s but its best solution is infeasible", record.seed, target.label)
        return None
    if target.kind == TARGET_RATIO and len(best) > ratio_limit(target.ratio, opt):
        logger.warning("Trial seed=%s logged %s but kept %d labels", record.seed, target.label, len(best))
        return None
    if target.kind == TARGET_OPTIMUM and len(best) > opt:
        logger.warning("Trial seed=%s logged optimum but kept %d labels", record.seed, len(best))
        return None
    return iteration


@dataclass
class TrialRow:
    trial: int
    record: RunRecord
    iterations: Dict[str, Optional[int]]

    @property
    def seed(self) -> Optional[int]:
        return self.record.seed


@dataclass
class TargetStats:
    target: str
    successes: int
    quantiles: Dict[str, float] = field(default_factory=dict)


@dataclass
class TrialStats:
    """Aggregate over all trials of one experiment."""

    name: str
    algorithm: str
    instance: str
    trials: int
    budget: int
    opt: Optional[int]
    targets: List[TargetStats]
    cardinality_distribution: Dict[str, int]
    total_iterations: int
    wall_clock_seconds: float

    def successes(self, target_label: str) -> int:
        for stats in self.targets:
            if stats.target == target_label:
                return stats.successes
        raise KeyError(target_label)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'name': self.name,
            'algorithm': self.algorithm,
            'instance': self.instance,
            'trials': self.trials,
            'budget': self.budget,
            'opt': self.opt,
            'targets': [
                {'target': t.target, 'successes': t.successes, 'quantiles': t.quantiles}
                for t in self.targets
            ],
            'cardinality_distribution': self.cardinality_distribution,
            'total_iterations': self.total_iterations,
            'wall_clock_seconds': self.wall_clock_seconds,
        }


@dataclass
class ExperimentResult:
    plan: ExperimentPlan
    stats: TrialStats
    rows: List[TrialRow]

    @property
    def records(self) -> List[RunRecord]:
        return [row.record for row in self.rows]


def _target_stats(target: Target, rows: List[TrialRow]) -> TargetStats:
    reached = [row.iterations[target.label] for row in rows if row.iterations[target.label] is not None]
    quantiles: Dict[str, float] = {}
    if reached:
        values = pd.Series(reached, dtype=float).quantile(list(QUANTILES.values()))
        quantiles = {name: float(values.loc[q]) for name, q in QUANTILES.items()}
    return TargetStats(target.label, len(reached), quantiles)


def _cardinality_distribution(rows: List[TrialRow]) -> Dict[str, int]:
    cardinalities = pd.Series(
        [str(row.record.best_cardinality) if row.record.feasible else INFEASIBLE for row in rows]
    )
    counts = cardinalities.value_counts()
    keys = sorted(counts.index, key=lambda key: (key == INFEASIBLE, int(key) if key != INFEASIBLE else 0))
    return {key: int(counts[key]) for key in keys}


def run_experiment(plan: ExperimentPlan, jobs: int = 1, retries: int = 100,
                   store=None) -> ExperimentResult:
    """
    Run every trial of plan and aggregate per-target statistics.

    Args:
        plan: The experiment
        jobs: Worker processes; 1 runs trials in-process
        retries: Retry limit for random instance generation
        store: Optional RunStore receiving every trial's RunRecord

    Returns:
        ExperimentResult with stats and per-trial rows sorted by trial index
    """
    started = time.perf_counter()
    resolved = resolve_instance(plan, retries)
    g = resolved.graph
    logger.info("Experiment %s: %s on %s, %d trials", plan.name, plan.algorithm, resolved.name, plan.trials)

    jobs_args = [(plan, resolved, trial) for trial in range(plan.trials)]
    if jobs > 1 and plan.trials > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            records = list(executor.map(_trial_job, jobs_args))
    else:
        records = [_trial_job(args) for args in jobs_args]

    rows = []
    for trial, record in enumerate(records):
        iterations = {
            target.label: validated_iterations(g, record, target, resolved.opt)
            for target in plan.targets
        }
        rows.append(TrialRow(trial, record, iterations))
        if store is not None:
            store.save(plan.name, trial, record)

    budget = records[0].budget if records else 0
    stats = TrialStats(
        name=plan.name,
        algorithm=plan.algorithm,
        instance=resolved.name,
        trials=plan.trials,
        budget=budget,
        opt=resolved.opt,
        targets=[_target_stats(target, rows) for target in plan.targets],
        cardinality_distribution=_cardinality_distribution(rows),
        total_iterations=sum(record.iterations_used for record in records),
        wall_clock_seconds=time.perf_counter() - started,
    )
    for target_stats in stats.targets:
        logger.info("Target %s: %d/%d trials", target_stats.target, target_stats.successes, plan.trials)
    return ExperimentResult(plan, stats, rows)
