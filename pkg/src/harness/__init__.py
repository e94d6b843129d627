"""Experiment plans, the trial runner, ratio checks and scaling fits."""

from harness.budgets import (
    FORMULAS,
    THEOREM_BUDGETS,
    BudgetSpec,
    harmonic_number,
    mvca_ratio_bound,
    theorem_formula,
)
from harness.plan import ALGORITHMS, INITS, ExperimentPlan, Target
from harness.ratio import check_ratio
from harness.runner import (
    ExperimentResult,
    ResolvedInstance,
    TargetStats,
    TrialRow,
    TrialStats,
    generate_instance,
    resolve_instance,
    run_experiment,
    run_trial,
    validated_iterations,
)
from harness.scaling import ScalingPoint, ScalingReport, fit_scaling

__all__ = [
    'FORMULAS',
    'THEOREM_BUDGETS',
    'BudgetSpec',
    'harmonic_number',
    'mvca_ratio_bound',
    'theorem_formula',
    'ALGORITHMS',
    'INITS',
    'ExperimentPlan',
    'Target',
    'check_ratio',
    'ExperimentResult',
    'ResolvedInstance',
    'TargetStats',
    'TrialRow',
    'TrialStats',
    'generate_instance',
    'resolve_instance',
    'run_experiment',
    'run_trial',
    'validated_iterations',
    'ScalingPoint',
    'ScalingReport',
    'fit_scaling',
]
