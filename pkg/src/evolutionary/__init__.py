"""The (1+1) EA and GSEMO with seeded randomness and run traces."""

from evolutionary.archive import ArchiveEntry, ParetoArchive
from evolutionary.gsemo import gsemo
from evolutionary.mutation import (
    derive_seed,
    make_rng,
    mutation_mask,
    random_subset,
    standard_mutation,
)
from evolutionary.one_plus_one_ea import one_plus_one_ea
from evolutionary.records import (
    FIRST_FEASIBLE,
    IMPROVED,
    OPTIMUM_REACHED,
    RATIO_REACHED,
    TERMINATED_BUDGET,
    TERMINATED_TARGET,
    EventTracker,
    RunEvent,
    RunRecord,
    ratio_limit,
)

__all__ = [
    'ArchiveEntry',
    'ParetoArchive',
    'gsemo',
    'one_plus_one_ea',
    'derive_seed',
    'make_rng',
    'mutation_mask',
    'random_subset',
    'standard_mutation',
    'FIRST_FEASIBLE',
    'IMPROVED',
    'OPTIMUM_REACHED',
    'RATIO_REACHED',
    'TERMINATED_BUDGET',
    'TERMINATED_TARGET',
    'EventTracker',
    'RunEvent',
    'RunRecord',
    'ratio_limit',
]
