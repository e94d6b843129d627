"""
Descriptive least-squares fits of median iteration counts against runtime
models. The fits describe growth; they never gate an experiment.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Dict, List, NamedTuple, Optional, Sequence

import numpy as np

from exceptions import TooFewPointsError

logger = logging.getLogger(__name__)

FLAT_TREND_TOLERANCE = 0.01
MIN_POINTS = 3


class ScalingPoint(NamedTuple):
    k: int
    iterations: float
    n: Optional[int] = None


def _ln(x: float) -> float:
    return math.log(x) if x > 1 else 0.0


MODELS: Dict[str, Callable[[ScalingPoint], float]] = {
    'k_ln_k': lambda p: p.k * _ln(p.k),
    'k2': lambda p: p.k ** 2,
    'n_k': lambda p: p.n * p.k,
    'k2_ln_k': lambda p: p.k ** 2 * _ln(p.k),
}


@dataclass
class ScalingReport:
    model: str
    constant: float
    residuals: List[float]
    r_squared: float
    slope: float
    intercept: float
    flat_trend: bool
    points: List[ScalingPoint] = field(default_factory=list)

    def to_dict(self) -> Dict:
        return {
            'model': self.model,
            'constant': self.constant,
            'residuals': self.residuals,
            'r_squared': self.r_squared,
            'slope': self.slope,
            'intercept': self.intercept,
            'flat_trend': self.flat_trend,
            'points': [list(p) for p in self.points],
        }


def fit_scaling(points: Sequence, model: str) -> ScalingReport:
    """
    Fit iterations ~ C * model(k) through the origin, and a free line for the
    trend check.

    Args:
        points: (k, median_iterations) or (k, median_iterations, n) tuples
        model: One of k_ln_k, k2, n_k, k2_ln_k

    Returns:
        ScalingReport; flat_trend is set when the fitted line changes by less
        than 1% of the mean across the predictor's range

    Raises:
        TooFewPointsError: With fewer than 3 points
        ValueError: On an unknown model, or n_k without n
    """
    if model not in MODELS:
        raise ValueError(f"Unknown model {model!r}; expected one of {', '.join(MODELS)}")
    parsed = [ScalingPoint(*p) for p in points]
    if len(parsed) < MIN_POINTS:
        raise TooFewPointsError(f"Scaling fit needs at least {MIN_POINTS} points, got {len(parsed)}")
    if model == 'n_k' and any(p.n is None for p in parsed):
        raise ValueError("Model n_k needs n on every point")

    x = np.array([MODELS[model](p) for p in parsed], dtype=float)
    y = np.array([p.iterations for p in parsed], dtype=float)

    solution, _, _, _ = np.linalg.lstsq(x.reshape(-1, 1), y, rcond=None)
    constant = float(solution[0])
    residuals = y - constant * x

    if np.ptp(x) > 0:
        slope, intercept = np.polyfit(x, y, 1)
    else:
        slope, intercept = 0.0, float(y.mean())
    change = abs(slope) * np.ptp(x)
    flat = bool(change <= FLAT_TREND_TOLERANCE * max(abs(float(y.mean())), 1.0))

    total = float(((y - y.mean()) ** 2).sum())
    r_squared = 1.0 - float((residuals ** 2).sum()) / total if total > 0 else 0.0
    if flat:
        logger.warning("Iterations show no growth against %s; the fit constant is not meaningful", model)

    return ScalingReport(
        model=model,
        constant=constant,
        residuals=[float(r) for r in residuals],
        r_squared=r_squared,
        slope=float(slope),
        intercept=float(intercept),
        flat_trend=flat,
        points=parsed,
    )
