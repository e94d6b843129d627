"""Configuration files and experiment plan files."""

import json

import pytest

from conftest import PLANS_DIR
from data import DEFAULT_CONFIG, ConfigManager
from exceptions import ConfigError
from harness import BudgetSpec


@pytest.fixture
def manager():
    return ConfigManager()


def write_json(path, data):
    path.write_text(json.dumps(data))
    return str(path)


def test_missing_file_gives_defaults(manager, tmp_path):
    assert manager.load_config(str(tmp_path / 'absent.json')) == DEFAULT_CONFIG


def test_partial_config_is_merged(manager, tmp_path):
    path = write_json(tmp_path / 'config.json', {'oracle': {'k_limit': 16}})
    config = manager.load_config(path)
    assert config['oracle']['k_limit'] == 16
    assert config['solver']['budget_constant'] == 200


def test_invalid_config_lists_errors(manager, tmp_path):
    path = write_json(tmp_path / 'config.json', {'harness': {'jobs': 0}, 'logging': {'level': 'LOUD'}})
    with pytest.raises(ConfigError) as excinfo:
        manager.load_config(path)
    assert len(excinfo.value.errors) == 2


def test_save_config_round_trip(manager, tmp_path):
    path = str(tmp_path / 'config.json')
    manager.save_config(path, DEFAULT_CONFIG)
    assert manager.load_config(path) == DEFAULT_CONFIG


def test_shipped_plans_load(manager):
    plan = manager.load_plan(f"{PLANS_DIR}/g1_ea_k16.json")
    assert plan.algorithm == 'one-plus-one-ea'
    assert plan.trials == 50
    assert plan.master_seed == 2024
    assert plan.name == 'g1_ea_k16'
    assert plan.budget == BudgetSpec('k_ln_k', 200)


def test_relative_instance_path(manager):
    plan = manager.load_plan(f"{PLANS_DIR}/g3_mvca_b2.json")
    assert plan.instance.endswith('instances/g3_b2.mlst')
    assert [target.label for target in plan.targets] == ['feasible', 'ratio=3/2', 'optimum']


def test_randomized_plan_needs_seed(manager, tmp_path):
    path = write_json(tmp_path / 'plan.json', {
        'algorithm': 'gsemo', 'instance': {'family': 'g1', 'params': {'k': 5}}, 'budget': 100,
    })
    with pytest.raises(ConfigError, match='master_seed'):
        manager.load_plan(path)


def test_plan_errors_are_collected(manager, tmp_path):
    path = write_json(tmp_path / 'plan.json', {
        'algorithm': 'mvca', 'instance': {'family': 'g9'}, 'trials': 0, 'targets': ['ratio'],
    })
    with pytest.raises(ConfigError) as excinfo:
        manager.load_plan(path)
    assert len(excinfo.value.errors) == 3


def test_plan_must_be_json(manager, tmp_path):
    path = tmp_path / 'plan.json'
    path.write_text('{not json')
    with pytest.raises(ConfigError):
        manager.load_plan(str(path))


@pytest.mark.parametrize('targets', [['ratio=abc'], ['ratio=3/0'], [{'kind': 'ratio', 'ratio': [1]}], ['ratio=1/2']])
def test_ratio_targets_must_be_rationals_of_at_least_one(manager, targets):
    is_valid, errors = manager.validate_plan({'algorithm': 'mvca', 'instance': 'x.mlst', 'targets': targets})
    assert not is_valid
    assert len(errors) == 1 and 'needs a rational ratio' in errors[0]
