"""
Pareto archive (the GSEMO population).
"""

import logging
from typing import Iterator, List, NamedTuple, Optional

from fitness.fitness import FitnessVector, dominates, penalised_fitness
from graph_core.label_subset import LabelSubset

logger = logging.getLogger(__name__)


class ArchiveEntry(NamedTuple):
    subset: LabelSubset
    vector: FitnessVector


class ParetoArchive:
    """
    Mutually non-dominated solutions, at most one per fitness vector.

    Entries keep insertion order so uniform parent selection by index is
    reproducible for a given seed.
    """

    def __init__(self, k: int, check_invariants: bool = False):
        """
        Args:
            k: Label count; bounds the archive size by k + 1
            check_invariants: Re-verify every invariant after each insert
        """
        self.k = k
        self.check_invariants = check_invariants
        self._entries: List[ArchiveEntry] = []

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[ArchiveEntry]:
        return iter(self._entries)

    def __getitem__(self, index: int) -> ArchiveEntry:
        return self._entries[index]

    def offer(self, subset: LabelSubset, vector: FitnessVector) -> bool:
        """
        Insert subset unless an archived vector dominates or equals its vector.
        Entries the newcomer dominates are removed.

        Returns:
            True if the subset was inserted
        """
        for entry in self._entries:
            if entry.vector == vector or dominates(entry.vector, vector):
                return False
        removed = [entry for entry in self._entries if dominates(vector, entry.vector)]
        if removed:
            self._entries = [entry for entry in self._entries if not dominates(vector, entry.vector)]
        self._entries.append(ArchiveEntry(subset, vector))
        logger.debug("Archive insert %s %s (removed %d, size %d)",
                     subset.bits(), vector, len(removed), len(self._entries))
        if self.check_invariants:
            problems = self.violations()
            if problems:
                raise AssertionError('; '.join(problems))
        return True

    def violations(self) -> List[str]:
        """Every broken archive invariant, as readable messages."""
        problems = []
        vectors = [entry.vector for entry in self._entries]
        for i, a in enumerate(vectors):
            for j, b in enumerate(vectors):
                if i != j and dominates(a, b):
                    problems.append(f"entry {i} {a} dominates entry {j} {b}")
        if len(set(vectors)) != len(vectors):
            problems.append("duplicate fitness vectors")
        if len(vectors) > self.k + 1:
            problems.append(f"size {len(vectors)} exceeds k+1={self.k + 1}")
        return problems

    def best_feasible(self) -> Optional[ArchiveEntry]:
        """Feasible entry with the fewest labels, if any."""
        feasible = [entry for entry in self._entries if entry.vector.components == 1]
        return min(feasible, key=lambda entry: entry.vector.labels_used) if feasible else None

    def best(self) -> ArchiveEntry:
        """Best feasible entry, otherwise the entry of least scalar fitness."""
        feasible = self.best_feasible()
        if feasible is not None:
            return feasible
        return min(self._entries,
                   key=lambda entry: (penalised_fitness(*entry.vector, self.k), entry.vector.components))

    def snapshot(self) -> List[ArchiveEntry]:
        return list(self._entries)
