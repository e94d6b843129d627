"""
Configuration Manager

Loads config.json over built-in defaults, validates it, and loads
experiment plan files.
"""

import copy
import json
import logging
import os
import shutil
from typing import Any, Dict, List, Optional, Tuple

from evolutionary.records import as_fraction
from exceptions import ConfigError
from harness.budgets import FIXED, FORMULAS, THEOREM
from harness.plan import ALGORITHMS, INITS, RANDOMIZED, TARGET_KINDS, TARGET_RATIO, ExperimentPlan
from instances.bundle import FAMILIES

logger = logging.getLogger(__name__)

LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')

DEFAULT_CONFIG: Dict[str, Any] = {
    'solver': {
        'budget_constant': 200,
        'ea_accept_equal': False,
        'evaluation_cache_size': 65536,
        'check_archive': False,
    },
    'oracle': {
        'k_limit': 24,
    },
    'instances': {
        'random_retries': 100,
    },
    'harness': {
        'jobs': 1,
    },
    'output': {
        'results_directory': 'data/results',
        'reports_directory': 'data/reports',
    },
    'logging': {
        'level': 'WARNING',
    },
}


def _deep_merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _deep_merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


class ConfigManager:
    """Manages the JSON configuration and experiment plan files."""

    def load_config(self, path: Optional[str] = None) -> Dict[str, Any]:
        """
        Load configuration, falling back to defaults for missing keys.

        Args:
            path: Path to config.json; None or a missing file gives the defaults

        Returns:
            dict: Merged configuration

        Raises:
            ConfigError: If the merged configuration is invalid
            json.JSONDecodeError: If the file contains invalid JSON
        """
        user_config: Dict[str, Any] = {}
        if path:
            if os.path.exists(path):
                with open(path, 'r', encoding='utf-8') as f:
                    user_config = json.load(f)
            else:
                logger.warning("Config file %s not found; using defaults", path)

        config = _deep_merge(DEFAULT_CONFIG, user_config)
        is_valid, errors = self.validate_schema(config)
        if not is_valid:
            raise ConfigError(errors)
        return config

    def save_config(self, path: str, config: Dict[str, Any]) -> None:
        """
        Save configuration with validation, writing to a temp file first.

        Raises:
            ConfigError: If config fails validation
        """
        is_valid, errors = self.validate_schema(config)
        if not is_valid:
            raise ConfigError(errors)

        temp_path = f"{path}.tmp"
        try:
            with open(temp_path, 'w', encoding='utf-8') as f:
                json.dump(config, f, indent=2)
            shutil.move(temp_path, path)
        except Exception:
            if os.path.exists(temp_path):
                os.remove(temp_path)
            raise

    def validate_schema(self, config: Dict[str, Any]) -> Tuple[bool, List[str]]:
        """
        Validate a merged configuration.

        Returns:
            Tuple of (is_valid, list_of_errors)
        """
        errors = []

        for section in DEFAULT_CONFIG:
            if not isinstance(config.get(section), dict):
                errors.append(f"{section} must be an object")
        if errors:
            return False, errors

        solver = config['solver']
        constant = solver.get('budget_constant')
        if isinstance(constant, bool) or not isinstance(constant, (int, float)) or constant <= 0:
            errors.append("solver.budget_constant must be a positive number")
        for key in ('ea_accept_equal', 'check_archive'):
            if not isinstance(solver.get(key), bool):
                errors.append(f"solver.{key} must be true or false")
        cache_size = solver.get('evaluation_cache_size')
        if not _is_int(cache_size) or cache_size < 0:
            errors.append("solver.evaluation_cache_size must be an integer >= 0")

        k_limit = config['oracle'].get('k_limit')
        if not _is_int(k_limit) or k_limit < 1:
            errors.append("oracle.k_limit must be an integer >= 1")

        retries = config['instances'].get('random_retries')
        if not _is_int(retries) or retries < 1:
            errors.append("instances.random_retries must be an integer >= 1")

        jobs = config['harness'].get('jobs')
        if not _is_int(jobs) or jobs < 1:
            errors.append("harness.jobs must be an integer >= 1")

        for key in ('results_directory', 'reports_directory'):
            if not isinstance(config['output'].get(key), str):
                errors.append(f"output.{key} must be a path")

        level = config['logging'].get('level')
        if level not in LOG_LEVELS:
            errors.append(f"logging.level must be one of: {', '.join(LOG_LEVELS)}")

        return len(errors) == 0, errors

    def validate_plan(self, plan: Dict[str, Any]) -> Tuple[bool, List[str]]:
        """
        Validate an experiment plan in its JSON form.

        Returns:
            Tuple of (is_valid, list_of_errors)
        """
        errors = []

        if plan.get('algorithm') not in ALGORITHMS:
            errors.append(f"algorithm must be one of: {', '.join(ALGORITHMS)}")

        trials = plan.get('trials', 1)
        if not _is_int(trials) or trials < 1:
            errors.append(f"trials must be an integer >= 1, got {trials!r}")

        instance = plan.get('instance')
        if isinstance(instance, dict):
            if instance.get('family') not in FAMILIES:
                errors.append(f"instance.family must be one of: {', '.join(FAMILIES)}")
            if not isinstance(instance.get('params', {}), dict):
                errors.append("instance.params must be an object")
        elif not isinstance(instance, str) or not instance:
            errors.append("instance must be a file path or {family, params}")

        budget = plan.get('budget', 1)
        if isinstance(budget, dict):
            formula = budget.get('formula', FIXED)
            if formula not in FORMULAS and formula not in (FIXED, THEOREM):
                errors.append(f"budget.formula {formula!r} is unknown")
            if formula == FIXED and not _is_int(budget.get('value')):
                errors.append("a fixed budget needs an integer value")
            cap = budget.get('cap')
            if cap is not None and (not _is_int(cap) or cap < 1):
                errors.append("budget.cap must be an integer >= 1")
        elif isinstance(budget, str):
            if budget not in FORMULAS and budget != THEOREM:
                errors.append(f"budget formula {budget!r} is unknown")
        elif not _is_int(budget) or budget < 1:
            errors.append("budget must be a positive integer, a formula name or {formula, c, cap}")

        if plan.get('init', 'random') not in INITS:
            errors.append(f"init must be one of: {', '.join(INITS)}")

        randomized = plan.get('algorithm') in RANDOMIZED or plan.get('tie') == 'random'
        if randomized and 'master_seed' not in plan:
            errors.append("master_seed is required for randomized runs")
        seed = plan.get('master_seed', 0)
        if not _is_int(seed) or not 0 <= seed < 2 ** 64:
            errors.append("master_seed must be a 64-bit unsigned integer")

        for i, target in enumerate(plan.get('targets', ['feasible'])):
            kind = target.get('kind') if isinstance(target, dict) else str(target).split('=', 1)[0]
            if kind not in TARGET_KINDS:
                errors.append(f"targets[{i}] must be one of: {', '.join(TARGET_KINDS)}")
            elif kind == TARGET_RATIO:
                ratio = target.get('ratio') if isinstance(target, dict) else str(target).partition('=')[2]
                try:
                    valid = ratio not in (None, '') and as_fraction(ratio) >= 1
                except (ValueError, TypeError, ZeroDivisionError):
                    valid = False
                if not valid:
                    errors.append(f"targets[{i}] needs a rational ratio >= 1, got {ratio!r}")

        opt = plan.get('opt')
        if opt is not None and (not _is_int(opt) or opt < 1):
            errors.append("opt must be an integer >= 1")

        return len(errors) == 0, errors

    def load_plan(self, path: str, config: Optional[Dict[str, Any]] = None) -> ExperimentPlan:
        """
        Load and validate an experiment plan. Relative instance paths are
        resolved against the plan's directory.

        Raises:
            ConfigError: Listing every plan error
            OSError: If the file cannot be read
        """
        config = config or DEFAULT_CONFIG
        with open(path, 'r', encoding='utf-8') as f:
            try:
                data = json.load(f)
            except (json.JSONDecodeError, UnicodeDecodeError) as e:
                raise ConfigError(f"{path}: invalid JSON ({e})") from e
        if not isinstance(data, dict):
            raise ConfigError(f"{path}: a plan must be a JSON object")

        is_valid, errors = self.validate_plan(data)
        if not is_valid:
            raise ConfigError(errors)

        instance = data.get('instance')
        if isinstance(instance, str) and not os.path.isabs(instance):
            data['instance'] = os.path.join(os.path.dirname(path), instance)
        data.setdefault('name', os.path.splitext(os.path.basename(path))[0])
        return ExperimentPlan.from_dict(data, config['solver'], config['oracle']['k_limit'])
