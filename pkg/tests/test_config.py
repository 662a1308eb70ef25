#
# Copyright (c) 2023 Samuel J. McKelvie
#
# MIT License - See LICENSE file accompanying this package.
#

"""Tests for fibercover.config"""

import json

import pytest

from fibercover.config import FiberCoverConfig
from fibercover.exceptions import FiberCoverError
from fibercover.constants import (
    DEFAULT_DEGREE_CAP,
    DEFAULT_INDEX_CAP,
    DEFAULT_NODE_BUDGET,
    DEFAULT_WITNESS_ATTEMPTS,
    DEFAULT_GROUP_ORDER_CAP,
  )

ENV_VARS = ('FIBERCOVER_CONFIG_FILE', 'FIBERCOVER_DEGREE_CAP', 'FIBERCOVER_INDEX_CAP', 'FIBERCOVER_NODE_BUDGET')

@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ENV_VARS:
        monkeypatch.delenv(name, raising=False)

def test_defaults():
    config = FiberCoverConfig()
    assert config.degree_cap == DEFAULT_DEGREE_CAP
    assert config.index_cap == DEFAULT_INDEX_CAP
    assert config.node_budget == DEFAULT_NODE_BUDGET
    assert config.witness_attempts == DEFAULT_WITNESS_ATTEMPTS
    assert config.group_order_cap == DEFAULT_GROUP_ORDER_CAP
    assert config.use_swapped_invariants
    assert config.use_framing_transforms
    assert config.extra_transforms == []

def test_env_vars_override_defaults(monkeypatch):
    monkeypatch.setenv('FIBERCOVER_DEGREE_CAP', '32')
    monkeypatch.setenv('FIBERCOVER_INDEX_CAP', '0')
    config = FiberCoverConfig()
    assert config.degree_cap == 32
    assert config.index_cap == 0

def test_bad_env_var(monkeypatch):
    monkeypatch.setenv('FIBERCOVER_NODE_BUDGET', 'lots')
    with pytest.raises(FiberCoverError):
        FiberCoverConfig()

def test_config_file_then_env_then_args(monkeypatch, tmp_path):
    path = tmp_path / 'config.json'
    path.write_text(json.dumps(dict(degree_cap=16, index_cap=6, witness_attempts=3, use_framing_transforms=False)))
    monkeypatch.setenv('FIBERCOVER_CONFIG_FILE', str(path))
    monkeypatch.setenv('FIBERCOVER_INDEX_CAP', '8')
    config = FiberCoverConfig(witness_attempts=5)
    assert config.degree_cap == 16
    assert config.index_cap == 8
    assert config.witness_attempts == 5
    assert not config.use_framing_transforms
    assert FiberCoverConfig(use_config_file=False).degree_cap == DEFAULT_DEGREE_CAP

def test_from_config_file(tmp_path):
    path = tmp_path / 'config.json'
    path.write_text(json.dumps(dict(node_budget=1000)))
    config = FiberCoverConfig.from_config_file(str(path))
    assert config.node_budget == 1000
    assert config.degree_cap == DEFAULT_DEGREE_CAP

def test_base_config_is_copied():
    base = FiberCoverConfig(degree_cap=12, extra_transforms=[dict(source="Dx Dy", target="Dx Dy", slope_map=[[1, 0], [0, 1]])])
    derived = FiberCoverConfig(base_config=base, index_cap=3)
    assert derived.degree_cap == 12
    assert derived.index_cap == 3
    assert derived.extra_transforms == base.extra_transforms
    assert derived.extra_transforms is not base.extra_transforms

def test_json_round_trip():
    config = FiberCoverConfig(degree_cap=20, use_swapped_invariants=False)
    again = FiberCoverConfig.from_json(config.to_json(), use_config_file=False)
    assert again.to_jsonable() == config.to_jsonable()

@pytest.mark.parametrize("kwargs", [
    dict(degree_cap=0),
    dict(index_cap=-1),
    dict(node_budget=0),
    dict(witness_attempts=0),
    dict(group_order_cap=0),
    dict(max_relator_length=0),
  ])
def test_validate_rejects_bad_budgets(kwargs):
    with pytest.raises(FiberCoverError):
        FiberCoverConfig(**kwargs)

def test_extra_transforms_must_be_a_list():
    with pytest.raises(FiberCoverError):
        FiberCoverConfig.from_jsonable(dict(extra_transforms="Dx Dy"), use_config_file=False)

def test_caps_snapshot():
    caps = FiberCoverConfig(degree_cap=7).caps()
    assert caps['degree_cap'] == 7
    assert set(caps) == {'degree_cap', 'index_cap', 'node_budget', 'witness_attempts', 'group_order_cap', 'max_relator_length'}

def test_package_exports():
    import fibercover
    assert fibercover.DEFAULT_GROUP_ORDER_CAP == FiberCoverConfig(use_config_file=False).group_order_cap
    assert callable(fibercover.atomic_write_text)
    for name in ('full_class_name', 'full_name_of_class', 'JsonableTypes'):
        assert not hasattr(fibercover, name)
