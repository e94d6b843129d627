"""Per-trial run dumps."""

from tracking.results_tracker import RunStore

__all__ = ['RunStore']
