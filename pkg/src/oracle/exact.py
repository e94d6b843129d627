"""
Brute-force ground truth and exhaustive structural verifiers.

Enumeration goes by non-decreasing cardinality, so the first feasible subset
found is optimal and, within its cardinality, lexicographically smallest.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, Optional

from exceptions import PreconditionViolatedError, TooManyLabelsError
from graph_core.label_subset import LabelSubset
from graph_core.labeled_graph import LabeledGraph, component_count, max_label_frequency
from heuristics.local_search import smaller_neighbours
from heuristics.tie_break import TieBreakPolicy

logger = logging.getLogger(__name__)

DEFAULT_K_LIMIT = 24
COROLLARY_K_LIMIT = 14


@dataclass(frozen=True)
class OracleResult:
    opt_value: int
    witness: LabelSubset
    subsets_examined: int


@dataclass(frozen=True)
class SwitchCheckResult:
    """Outcome of the exhaustive 2-switch improvement check."""

    holds: bool
    opt_value: int
    b: int
    bound: Fraction
    solutions_checked: int
    counterexample: Optional[LabelSubset] = None


@dataclass(frozen=True)
class HalvingResult:
    holds: bool
    components: int
    bound: int
    opt_value: int
    label: Optional[int] = None
    resulting_components: Optional[int] = None


def _check_k(g: LabeledGraph, k_limit: int) -> None:
    if g.label_count > k_limit:
        raise TooManyLabelsError(g.label_count, k_limit)


def brute_force_opt(g: LabeledGraph, k_limit: int = DEFAULT_K_LIMIT) -> OracleResult:
    """
    Minimum number of labels of a feasible subset, with its witness.

    Raises:
        TooManyLabelsError: If k > k_limit
    """
    _check_k(g, k_limit)
    k = g.label_count
    examined = 0
    for size in range(0, k + 1):
        for labels in combinations(range(1, k + 1), size):
            examined += 1
            subset = LabelSubset.from_labels(k, labels)
            if component_count(g, subset) == 1:
                logger.info("OPT=%d witness %s after %d subsets", size, subset, examined)
                return OracleResult(size, subset, examined)
    # Unreachable for a validated (connected) graph
    raise AssertionError("No feasible label subset; graph is not connected")


class _FeasibilityMemo:

    def __init__(self, g: LabeledGraph):
        self.g = g
        self._feasible: Dict[int, bool] = {}

    def __call__(self, x: LabelSubset) -> bool:
        cached = self._feasible.get(x.mask)
        if cached is None:
            cached = self._feasible[x.mask] = component_count(self.g, x) == 1
        return cached


def verify_corollary_1(g: LabeledGraph, k_limit: int = COROLLARY_K_LIMIT,
                       opt: Optional[int] = None) -> SwitchCheckResult:
    """
    Check that every feasible x with |x| > OPT*(b+1)/2 has a feasible 2-switch
    neighbour with one or two labels fewer.

    Args:
        g: An MLST_b instance with b >= 2
        k_limit: Largest k accepted for exhaustive enumeration
        opt: Known optimum; computed by brute force when None

    Raises:
        TooManyLabelsError: If k > k_limit
        PreconditionViolatedError: If b < 2
    """
    _check_k(g, k_limit)
    b = max_label_frequency(g)
    if b < 2:
        raise PreconditionViolatedError(f"Maximum label frequency is {b}; the check needs b >= 2")
    if opt is None:
        opt = brute_force_opt(g, k_limit).opt_value
    bound = Fraction(opt * (b + 1), 2)
    k = g.label_count
    feasible = _FeasibilityMemo(g)
    chooser = TieBreakPolicy().chooser()
    checked = 0

    for size in range(k, 0, -1):
        if size <= bound:
            break
        for labels in combinations(range(1, k + 1), size):
            x = LabelSubset.from_labels(k, labels)
            if not feasible(x):
                continue
            checked += 1
            if not any(feasible(y) for y in smaller_neighbours(x, 2, chooser)):
                logger.warning("2-switch improvement missing for %s (OPT=%d, b=%d)", x, opt, b)
                return SwitchCheckResult(False, opt, b, bound, checked, x)

    return SwitchCheckResult(True, opt, b, bound, checked)


def verify_component_halving(g: LabeledGraph, x: LabelSubset, k_limit: int = DEFAULT_K_LIMIT,
                             opt: Optional[int] = None) -> HalvingResult:
    """
    Look for an unused label that cuts the r > 2 components of H(x) down to
    at most floor(r * (1 - 1/(2*OPT))).

    Labels of the oracle's optimal witness are tried first, then the other
    unused labels, each group in ascending order.

    Raises:
        PreconditionViolatedError: If r <= 2
        TooManyLabelsError: If OPT is needed and k > k_limit
    """
    r = component_count(g, x)
    if r <= 2:
        raise PreconditionViolatedError(f"H(x) has {r} components; the check needs more than 2")
    witness = None
    if opt is None:
        result = brute_force_opt(g, k_limit)
        opt, witness = result.opt_value, result.witness
    bound = r * (2 * opt - 1) // (2 * opt)

    unused = x.unused_labels()
    preferred = [label for label in unused if witness is not None and label in witness]
    candidates = preferred + [label for label in unused if label not in preferred]
    for label in candidates:
        after = component_count(g, x.with_labels(label))
        if after <= bound:
            return HalvingResult(True, r, bound, opt, label, after)
    return HalvingResult(False, r, bound, opt)
