"""
Tie-breaking policies for the deterministic baselines.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, TypeVar

import numpy as np

from evolutionary.mutation import make_rng

T = TypeVar('T')

LOWEST_INDEX = 'lowest-index'
HIGHEST_INDEX = 'highest-index'
SEEDED_RANDOM = 'seeded-random'

POLICY_KINDS = (LOWEST_INDEX, HIGHEST_INDEX, SEEDED_RANDOM)


@dataclass(frozen=True)
class TieBreakPolicy:
    """How a heuristic chooses among equally good candidates."""

    kind: str = LOWEST_INDEX
    seed: int = 0

    def __post_init__(self):
        if self.kind not in POLICY_KINDS:
            raise ValueError(f"Unknown tie-break policy {self.kind!r}; expected one of {', '.join(POLICY_KINDS)}")

    @classmethod
    def parse(cls, name: str, seed: Optional[int] = None) -> 'TieBreakPolicy':
        """Accepts 'lowest', 'highest', 'random' or the full kind names."""
        aliases = {'lowest': LOWEST_INDEX, 'highest': HIGHEST_INDEX, 'random': SEEDED_RANDOM}
        return cls(aliases.get(name, name), seed or 0)

    def chooser(self) -> 'TieBreaker':
        """A fresh stateful chooser; seeded choices restart from the seed."""
        return TieBreaker(self)


class TieBreaker:
    """Stateful helper created once per algorithm run."""

    def __init__(self, policy: TieBreakPolicy):
        self.policy = policy
        self._rng: Optional[np.random.Generator] = (
            make_rng(policy.seed) if policy.kind == SEEDED_RANDOM else None
        )

    def pick(self, candidates: Sequence[T]) -> T:
        """Choose one of candidates, which must be sorted ascending."""
        if not candidates:
            raise ValueError("No candidates to choose from")
        if self.policy.kind == LOWEST_INDEX:
            return candidates[0]
        if self.policy.kind == HIGHEST_INDEX:
            return candidates[-1]
        return candidates[int(self._rng.integers(len(candidates)))]

    def order(self, items: Sequence[T]) -> List[T]:
        """Scan order over items (sorted ascending on input)."""
        if self.policy.kind == LOWEST_INDEX:
            return list(items)
        if self.policy.kind == HIGHEST_INDEX:
            return list(reversed(items))
        permutation = self._rng.permutation(len(items))
        return [items[int(i)] for i in permutation]
