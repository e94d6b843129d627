"""
Iteration budgets as formulas over (n, k), plus the known ratio and runtime
bounds the experiments check against.
"""

import math
from dataclasses import dataclass
from typing import Callable, Dict, Optional, Tuple, Union

from exceptions import ConfigError
from instances.bundle import G1, G2, G3, G_PRIME, RANDOM_B

DEFAULT_BUDGET_CONSTANT = 200


def _ln(x: float) -> float:
    return math.log(x) if x > 1 else 0.0


FORMULAS: Dict[str, Callable[[int, int], float]] = {
    'k_ln_k': lambda n, k: k * _ln(k),
    'k2': lambda n, k: k ** 2,
    'n_k': lambda n, k: n * k,
    'k2_ln_k': lambda n, k: k ** 2 * _ln(k),
    'k3': lambda n, k: k ** 3,
    'n_plus_k3_times_k': lambda n, k: (n + k ** 3) * k,
    'n_k2_plus_k5': lambda n, k: n * k ** 2 + k ** 5,
    'k3_ln_n_plus_k2_ln_k': lambda n, k: k ** 3 * _ln(n) + k ** 2 * _ln(k),
}

FIXED = 'fixed'
THEOREM = 'theorem'

# Known expected-time upper bounds per (family, algorithm)
THEOREM_BUDGETS: Dict[Tuple[str, str], str] = {
    (G_PRIME, 'gsemo'): 'k2_ln_k',
    (G1, 'one-plus-one-ea'): 'k_ln_k',
    (G1, 'gsemo'): 'k2_ln_k',
    (G2, 'one-plus-one-ea'): 'k2',
    (G2, 'gsemo'): 'k2_ln_k',
    (G3, 'one-plus-one-ea'): 'n_k',
    (G3, 'gsemo'): 'k3',
    (RANDOM_B, 'one-plus-one-ea'): 'n_plus_k3_times_k',
    (RANDOM_B, 'gsemo'): 'n_k2_plus_k5',
}


@dataclass(frozen=True)
class BudgetSpec:
    """c * formula(n, k), rounded up and optionally capped; or a fixed count."""

    formula: str = FIXED
    c: float = DEFAULT_BUDGET_CONSTANT
    cap: Optional[int] = None
    value: Optional[int] = None

    def __post_init__(self):
        if self.formula not in FORMULAS and self.formula not in (FIXED, THEOREM):
            raise ConfigError([f"Unknown budget formula {self.formula!r}; "
                               f"expected one of {', '.join(sorted(FORMULAS))}, {FIXED}, {THEOREM}"])
        if self.formula == FIXED and self.value is None:
            raise ConfigError(["A fixed budget needs a value"])

    @classmethod
    def parse(cls, raw: Union[int, str, Dict], default_c: float = DEFAULT_BUDGET_CONSTANT) -> 'BudgetSpec':
        """Accepts an integer, a formula name or {formula, c, cap, value}."""
        if isinstance(raw, bool):
            raise ConfigError([f"Invalid budget {raw!r}"])
        if isinstance(raw, int):
            return cls(FIXED, value=raw)
        if isinstance(raw, str):
            return cls(raw, default_c)
        if isinstance(raw, dict):
            return cls(raw.get('formula', FIXED), raw.get('c', default_c), raw.get('cap'), raw.get('value'))
        raise ConfigError([f"Invalid budget {raw!r}"])

    def evaluate(self, n: int, k: int, family: Optional[str] = None,
                 algorithm: Optional[str] = None) -> int:
        """
        Iteration count for an instance with n nodes and k labels.

        Raises:
            ConfigError: If the result is not positive, or 'theorem' has no
                known bound for (family, algorithm)
        """
        if self.formula == FIXED:
            budget = int(self.value)
        else:
            formula = self.formula
            if formula == THEOREM:
                formula = theorem_formula(family, algorithm)
            budget = math.ceil(self.c * FORMULAS[formula](n, k))
        if self.cap is not None:
            budget = min(budget, int(self.cap))
        if budget <= 0:
            raise ConfigError([f"Budget {self.describe()} evaluates to {budget} for n={n}, k={k}"])
        return budget

    def describe(self) -> str:
        if self.formula == FIXED:
            return str(self.value)
        text = f"{self.c:g}*{self.formula}"
        if self.cap is not None:
            text += f" (cap {self.cap})"
        return text


def theorem_formula(family: Optional[str], algorithm: Optional[str]) -> str:
    try:
        return THEOREM_BUDGETS[(family, algorithm)]
    except KeyError:
        raise ConfigError([f"No known runtime bound for {algorithm} on {family} instances"])


def harmonic_number(b: int) -> float:
    """
    H_b = 1 + 1/2 + ... + 1/b, the worst-case MVCA ratio on MLST_b.

    Examples:
        >>> harmonic_number(2)
        1.5
    """
    if b < 1:
        raise ValueError(f"b must be >= 1, got {b}")
    return sum(1.0 / i for i in range(1, b + 1))


def mvca_ratio_bound(n: int) -> float:
    """ln(n - 1) + 1, the general logarithmic MVCA guarantee."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return math.log(n - 1) + 1
