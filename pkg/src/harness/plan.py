"""
Experiment plans: which algorithm runs on which instance, how often, for how
long, and which targets count as success.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Union

from evolutionary.records import (
    FIRST_FEASIBLE,
    OPTIMUM_REACHED,
    RATIO_REACHED,
    Ratio,
    as_fraction,
)
from exceptions import ConfigError
from harness.budgets import DEFAULT_BUDGET_CONSTANT, BudgetSpec
from instances.bundle import InstanceBundle

ONE_PLUS_ONE_EA = 'one-plus-one-ea'
GSEMO = 'gsemo'
MVCA = 'mvca'
MVCA_CONTRACT = 'mvca-contract'
LS_2SWITCH = 'ls-2switch'
ERA = 'era'

ALGORITHMS = (ONE_PLUS_ONE_EA, GSEMO, MVCA, MVCA_CONTRACT, LS_2SWITCH, ERA)
RANDOMIZED = (ONE_PLUS_ONE_EA, GSEMO)

INIT_RANDOM = 'random'
INIT_LOCAL_OPT = 'known-local-opt'
INIT_ZEROS = 'all-zeros'
INIT_ONES = 'all-ones'

INITS = (INIT_RANDOM, INIT_LOCAL_OPT, INIT_ZEROS, INIT_ONES)

TARGET_FEASIBLE = 'feasible'
TARGET_RATIO = 'ratio'
TARGET_OPTIMUM = 'optimum'

TARGET_KINDS = (TARGET_FEASIBLE, TARGET_RATIO, TARGET_OPTIMUM)


@dataclass(frozen=True)
class Target:
    kind: str
    ratio: Optional[Ratio] = None

    def __post_init__(self):
        if self.kind not in TARGET_KINDS:
            raise ConfigError(f"Unknown target {self.kind!r}; expected one of {', '.join(TARGET_KINDS)}")
        if self.kind == TARGET_RATIO:
            try:
                value = None if self.ratio is None else as_fraction(self.ratio)
            except (ValueError, TypeError, ZeroDivisionError) as e:
                raise ConfigError(f"A ratio target needs a rational r, got {self.ratio!r}") from e
            if value is None or value < 1:
                raise ConfigError(f"A ratio target needs r >= 1, got {self.ratio!r}")

    @classmethod
    def parse(cls, raw: Union[str, Dict[str, Any]]) -> 'Target':
        """'feasible', 'optimum', 'ratio=3/2' or {'kind': 'ratio', 'ratio': 1.5}."""
        if isinstance(raw, dict):
            return cls(raw.get('kind', ''), raw.get('ratio'))
        if raw.startswith(TARGET_RATIO + '='):
            return cls(TARGET_RATIO, raw.split('=', 1)[1])
        return cls(raw)

    @property
    def needs_opt(self) -> bool:
        return self.kind != TARGET_FEASIBLE

    @property
    def event_kind(self) -> str:
        return {
            TARGET_FEASIBLE: FIRST_FEASIBLE,
            TARGET_RATIO: RATIO_REACHED,
            TARGET_OPTIMUM: OPTIMUM_REACHED,
        }[self.kind]

    @property
    def label(self) -> str:
        if self.kind == TARGET_RATIO:
            return f"ratio={self.ratio}"
        return self.kind


@dataclass
class ExperimentPlan:
    """
    A multi-trial experiment.

    instance is a bundle, a path to an instance file (with an optional
    sidecar) or a generator spec {'family': ..., 'params': {...}}.
    """

    algorithm: str
    instance: Union[InstanceBundle, str, Dict[str, Any]]
    trials: int = 1
    budget: BudgetSpec = field(default_factory=lambda: BudgetSpec('fixed', value=1))
    init: str = INIT_RANDOM
    master_seed: int = 0
    targets: List[Target] = field(default_factory=lambda: [Target(TARGET_FEASIBLE)])
    tie: str = 'lowest'
    opt: Optional[int] = None
    name: str = 'experiment'
    accept_equal: bool = False
    check_archive: bool = False
    cache_size: int = 65536
    oracle_k_limit: int = 24

    def __post_init__(self):
        errors = []
        if self.algorithm not in ALGORITHMS:
            errors.append(f"algorithm must be one of {', '.join(ALGORITHMS)}, got {self.algorithm!r}")
        if isinstance(self.trials, bool) or not isinstance(self.trials, int) or self.trials < 1:
            errors.append(f"trials must be an integer >= 1, got {self.trials!r}")
        if self.init not in INITS:
            errors.append(f"init must be one of {', '.join(INITS)}, got {self.init!r}")
        if not isinstance(self.master_seed, int) or not 0 <= self.master_seed < 2 ** 64:
            errors.append(f"master_seed must be a 64-bit unsigned integer, got {self.master_seed!r}")
        if self.opt is not None and self.opt < 1:
            errors.append(f"opt must be >= 1, got {self.opt}")
        if errors:
            raise ConfigError(errors)

    @property
    def randomized(self) -> bool:
        return self.algorithm in RANDOMIZED or self.tie in ('random', 'seeded-random')

    @property
    def needs_opt(self) -> bool:
        return any(target.needs_opt for target in self.targets)

    @property
    def ratios(self) -> List[Ratio]:
        return [target.ratio for target in self.targets if target.kind == TARGET_RATIO]

    def instance_name(self) -> str:
        if isinstance(self.instance, str):
            return self.instance
        if isinstance(self.instance, InstanceBundle):
            params = ','.join(f"{key}={value}" for key, value in sorted(self.instance.params.items()))
            return f"{self.instance.family}({params})"
        params = ','.join(f"{key}={value}" for key, value in sorted(self.instance.get('params', {}).items()))
        return f"{self.instance.get('family')}({params})"

    @classmethod
    def from_dict(cls, data: Dict[str, Any], solver: Optional[Dict[str, Any]] = None,
                  oracle_k_limit: int = 24) -> 'ExperimentPlan':
        """
        Build a plan from its JSON form; solver holds config defaults.

        Raises:
            ConfigError: Listing every invalid field
        """
        solver = solver or {}
        budget_constant = solver.get('budget_constant', DEFAULT_BUDGET_CONSTANT)
        targets = [Target.parse(raw) for raw in data.get('targets', [TARGET_FEASIBLE])]
        return cls(
            algorithm=data.get('algorithm', ''),
            instance=data.get('instance', ''),
            trials=data.get('trials', 1),
            budget=BudgetSpec.parse(data.get('budget', 1), budget_constant),
            init=data.get('init', INIT_RANDOM),
            master_seed=data.get('master_seed', 0),
            targets=targets,
            tie=data.get('tie', 'lowest'),
            opt=data.get('opt'),
            name=data.get('name', 'experiment'),
            accept_equal=data.get('accept_equal', solver.get('ea_accept_equal', False)),
            check_archive=data.get('check_archive', solver.get('check_archive', False)),
            cache_size=solver.get('evaluation_cache_size', 65536),
            oracle_k_limit=oracle_k_limit,
        )
