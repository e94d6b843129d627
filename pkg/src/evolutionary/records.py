"""
Run traces shared by every solver: events, run records and the event tracker.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from fitness.fitness import FitnessVector, penalised_fitness
from graph_core.label_subset import LabelSubset

FIRST_FEASIBLE = 'first-feasible'
IMPROVED = 'improved'
RATIO_REACHED = 'ratio-reached'
OPTIMUM_REACHED = 'optimum-reached'

TERMINATED_BUDGET = 'budget'
TERMINATED_TARGET = 'target-hit'

Ratio = Union[int, float, str, Fraction]


def as_fraction(r: Ratio) -> Fraction:
    """Exact rational value of r; floats keep their binary value."""
    return r if isinstance(r, Fraction) else Fraction(r)


def ratio_limit(r: Ratio, opt: int) -> int:
    """
    Largest label count accepted at approximation ratio r: ceil(r * OPT).

    Examples:
        >>> ratio_limit('3/2', 2)
        3
    """
    return math.ceil(as_fraction(r) * opt)


@dataclass(frozen=True)
class RunEvent:
    iteration: int
    kind: str
    ratio: Optional[float] = None

    def to_dict(self) -> Dict[str, Any]:
        data = {'iteration': self.iteration, 'kind': self.kind}
        if self.ratio is not None:
            data['ratio'] = self.ratio
        return data


@dataclass
class RunRecord:
    """Per-trial trace feeding the harness statistics."""

    algorithm: str
    seed: Optional[int]
    budget: int
    iterations_used: int
    best_solution: LabelSubset
    best_fitness: FitnessVector
    event_log: List[RunEvent] = field(default_factory=list)
    terminated_by: str = TERMINATED_BUDGET
    archive: Optional[List[Tuple[LabelSubset, FitnessVector]]] = None

    @property
    def best_scalar(self) -> int:
        return penalised_fitness(self.best_fitness.components, self.best_fitness.labels_used,
                                 self.best_solution.width)

    @property
    def feasible(self) -> bool:
        return self.best_fitness.components == 1

    @property
    def best_cardinality(self) -> Optional[int]:
        """Label count of the best solution, or None if it is not feasible."""
        return len(self.best_solution) if self.feasible else None

    def iterations_to(self, kind: str, ratio: Optional[Ratio] = None) -> Optional[int]:
        """Iteration of the first event of this kind (and ratio), or None."""
        wanted = float(as_fraction(ratio)) if ratio is not None else None
        for event in self.event_log:
            if event.kind != kind:
                continue
            if wanted is not None and event.ratio != wanted:
                continue
            return event.iteration
        return None

    def count_events(self, kind: str) -> int:
        return sum(1 for event in self.event_log if event.kind == kind)

    def to_dict(self) -> Dict[str, Any]:
        data = {
            'algorithm': self.algorithm,
            'seed': self.seed,
            'budget': self.budget,
            'iterations_used': self.iterations_used,
            'best_solution': self.best_solution.bits(),
            'best_fitness': list(self.best_fitness),
            'best_scalar': self.best_scalar,
            'terminated_by': self.terminated_by,
            'event_log': [event.to_dict() for event in self.event_log],
        }
        if self.archive is not None:
            data['archive'] = [
                {'solution': subset.bits(), 'fitness': list(vector)}
                for subset, vector in self.archive
            ]
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'RunRecord':
        archive = None
        if 'archive' in data:
            archive = [
                (LabelSubset.from_bits(entry['solution']), FitnessVector(*entry['fitness']))
                for entry in data['archive']
            ]
        return cls(
            algorithm=data['algorithm'],
            seed=data['seed'],
            budget=data['budget'],
            iterations_used=data['iterations_used'],
            best_solution=LabelSubset.from_bits(data['best_solution']),
            best_fitness=FitnessVector(*data['best_fitness']),
            event_log=[RunEvent(e['iteration'], e['kind'], e.get('ratio')) for e in data['event_log']],
            terminated_by=data['terminated_by'],
            archive=archive,
        )


class EventTracker:
    """
    Turns a sequence of best-so-far states into the run's event log.

    ratio-reached and optimum-reached events need OPT; without it only
    first-feasible and improved are logged.
    """

    def __init__(self, opt: Optional[int] = None, ratios: Sequence[Ratio] = ()):
        self.opt = opt
        self.events: List[RunEvent] = []
        self._pending_ratios = sorted({as_fraction(r) for r in ratios}) if opt is not None else []
        self._feasible_seen = False
        self._optimum_seen = False

    def observe(self, iteration: int, vector: FitnessVector, improved: bool = True) -> None:
        """Record the best-so-far state reached at iteration."""
        if improved and iteration > 0:
            self.events.append(RunEvent(iteration, IMPROVED))
        if vector.components != 1:
            return
        if not self._feasible_seen:
            self._feasible_seen = True
            self.events.append(RunEvent(iteration, FIRST_FEASIBLE))
        if self.opt is None:
            return
        reached = [r for r in self._pending_ratios if vector.labels_used <= ratio_limit(r, self.opt)]
        for r in reached:
            self.events.append(RunEvent(iteration, RATIO_REACHED, float(r)))
        self._pending_ratios = [r for r in self._pending_ratios if r not in reached]
        if not self._optimum_seen and vector.labels_used <= self.opt:
            self._optimum_seen = True
            self.events.append(RunEvent(iteration, OPTIMUM_REACHED))
