# Copyright (c) 2023 Samuel J. McKelvie
#
# MIT License - See LICENSE file accompanying this package.
#

"""
Certifier configuration.

Holds the search budgets and certifier switches. Values are resolved from
package defaults, then an optional JSON config file, then environment
variables, then explicit arguments.
"""

from __future__ import annotations

import os
import json

from .internal_types import *
from .exceptions import FiberCoverError
from .constants import (
    DEFAULT_DEGREE_CAP,
    DEFAULT_INDEX_CAP,
    DEFAULT_NODE_BUDGET,
    DEFAULT_WITNESS_ATTEMPTS,
    DEFAULT_GROUP_ORDER_CAP,
    DEFAULT_MAX_RELATOR_LENGTH,
    CONFIG_FILE_ENV_VAR,
    DEGREE_CAP_ENV_VAR,
    INDEX_CAP_ENV_VAR,
    NODE_BUDGET_ENV_VAR,
  )
from .pkg_logging import logger

class FiberCoverConfig:
    """Search budgets and switches for the certifier."""
    degree_cap: int
    index_cap: int
    node_budget: int
    witness_attempts: int
    group_order_cap: int
    max_relator_length: int
    use_swapped_invariants: bool
    use_framing_transforms: bool
    extra_transforms: List[JsonableDict]
    """User framing transforms, each {"source": str, "target": str, "slope_map": [[a, b], [c, d]]}."""

    def __init__(
            self,
            *,
            degree_cap: Optional[int]=None,
            index_cap: Optional[int]=None,
            node_budget: Optional[int]=None,
            witness_attempts: Optional[int]=None,
            group_order_cap: Optional[int]=None,
            max_relator_length: Optional[int]=None,
            use_swapped_invariants: Optional[bool]=None,
            use_framing_transforms: Optional[bool]=None,
            extra_transforms: Optional[List[JsonableDict]]=None,
            base_config: Optional[FiberCoverConfig]=None,
            use_config_file: bool=True,
          ) -> None:
        """Creates a certifier configuration.

           Args:
             degree_cap: Maximum permutation degree for quotient searches. If None,
                   the base configuration, config file, FIBERCOVER_DEGREE_CAP or
                   DEFAULT_DEGREE_CAP is used, in that order.
             index_cap: Maximum index for low-index subgroup searches. 0 disables
                   the low-index fallback.
             node_budget: Maximum backtracking nodes visited by any one search.
             witness_attempts: Number of quotient witnesses tried per case plan.
             group_order_cap: Largest quotient group whose regular representation
                   is used to build a cover.
             max_relator_length: Longest mapping torus relator the homology engine
                   will rewrite.
             use_swapped_invariants: Try the invariants with the roles of the
                   x- and y-twists exchanged when the standard ones give no case.
             use_framing_transforms: Try the built-in framing transforms.
             extra_transforms: Additional user framing transforms.
             base_config: An optional base configuration to copy.
             use_config_file: If True and no base_config is given, read the JSON
                   file named by FIBERCOVER_CONFIG_FILE.
        """
        if base_config is None:
            self.init_from_defaults(use_config_file=use_config_file)
        else:
            self.init_from_base_config(base_config)

        if degree_cap is not None:
            self.degree_cap = degree_cap
        if index_cap is not None:
            self.index_cap = index_cap
        if node_budget is not None:
            self.node_budget = node_budget
        if witness_attempts is not None:
            self.witness_attempts = witness_attempts
        if group_order_cap is not None:
            self.group_order_cap = group_order_cap
        if max_relator_length is not None:
            self.max_relator_length = max_relator_length
        if use_swapped_invariants is not None:
            self.use_swapped_invariants = use_swapped_invariants
        if use_framing_transforms is not None:
            self.use_framing_transforms = use_framing_transforms
        if extra_transforms is not None:
            self.extra_transforms = list(extra_transforms)
        self.validate()

    def init_from_defaults(self, use_config_file: bool=True) -> None:
        """Initializes the configuration from defaults."""
        self.degree_cap = DEFAULT_DEGREE_CAP
        self.index_cap = DEFAULT_INDEX_CAP
        self.node_budget = DEFAULT_NODE_BUDGET
        self.witness_attempts = DEFAULT_WITNESS_ATTEMPTS
        self.group_order_cap = DEFAULT_GROUP_ORDER_CAP
        self.max_relator_length = DEFAULT_MAX_RELATOR_LENGTH
        self.use_swapped_invariants = True
        self.use_framing_transforms = True
        self.extra_transforms = []

        if use_config_file:
            config_file = os.environ.get(CONFIG_FILE_ENV_VAR)
            if config_file is not None and config_file != '':
                logger.debug(f"Loading config file {config_file}")
                with open(config_file, 'r') as f:
                    config_jsonable = json.load(f)
                self.update_from_jsonable(config_jsonable)

        for env_var, attr in (
                (DEGREE_CAP_ENV_VAR, 'degree_cap'),
                (INDEX_CAP_ENV_VAR, 'index_cap'),
                (NODE_BUDGET_ENV_VAR, 'node_budget'),
              ):
            value_str = os.environ.get(env_var)
            if value_str is not None and value_str != '':
                try:
                    setattr(self, attr, int(value_str))
                except ValueError as e:
                    raise FiberCoverError(f"Environment variable {env_var} is not an integer: {value_str!r}") from e

    def init_from_base_config(self, base_config: FiberCoverConfig) -> None:
        """Initializes the configuration from a base configuration."""
        self.degree_cap = base_config.degree_cap
        self.index_cap = base_config.index_cap
        self.node_budget = base_config.node_budget
        self.witness_attempts = base_config.witness_attempts
        self.group_order_cap = base_config.group_order_cap
        self.max_relator_length = base_config.max_relator_length
        self.use_swapped_invariants = base_config.use_swapped_invariants
        self.use_framing_transforms = base_config.use_framing_transforms
        self.extra_transforms = list(base_config.extra_transforms)

    def validate(self) -> None:
        """Raises FiberCoverError if any budget is out of range."""
        if self.degree_cap < 1:
            raise FiberCoverError(f"degree_cap must be >= 1, got {self.degree_cap}")
        if self.index_cap < 0:
            raise FiberCoverError(f"index_cap must be >= 0, got {self.index_cap}")
        if self.node_budget < 1:
            raise FiberCoverError(f"node_budget must be >= 1, got {self.node_budget}")
        if self.witness_attempts < 1:
            raise FiberCoverError(f"witness_attempts must be >= 1, got {self.witness_attempts}")
        if self.group_order_cap < 1:
            raise FiberCoverError(f"group_order_cap must be >= 1, got {self.group_order_cap}")
        if self.max_relator_length < 1:
            raise FiberCoverError(f"max_relator_length must be >= 1, got {self.max_relator_length}")

    def caps(self) -> Dict[str, Any]:
        """The search caps, as reported with search-exhausted results."""
        return dict(
            degree_cap=self.degree_cap,
            index_cap=self.index_cap,
            node_budget=self.node_budget,
            witness_attempts=self.witness_attempts,
            group_order_cap=self.group_order_cap,
            max_relator_length=self.max_relator_length,
          )

    def to_jsonable(self) -> JsonableDict:
        """Returns a JSON-serializable representation of the configuration."""
        result: JsonableDict = dict(
            degree_cap=self.degree_cap,
            index_cap=self.index_cap,
            node_budget=self.node_budget,
            witness_attempts=self.witness_attempts,
            group_order_cap=self.group_order_cap,
            max_relator_length=self.max_relator_length,
            use_swapped_invariants=self.use_swapped_invariants,
            use_framing_transforms=self.use_framing_transforms,
            extra_transforms=[dict(t) for t in self.extra_transforms],
          )
        return result

    def to_json(self) -> str:
        """Returns a JSON representation of the configuration."""
        return json.dumps(self.to_jsonable())

    def update_from_jsonable(self, jsonable: JsonableDict) -> None:
        """Updates the configuration from a JSON-serializable representation."""
        for name in ('degree_cap', 'index_cap', 'node_budget', 'witness_attempts', 'group_order_cap', 'max_relator_length'):
            value = jsonable.get(name)
            if value is not None and value != '':
                setattr(self, name, int(cast(Any, value)))
        for name in ('use_swapped_invariants', 'use_framing_transforms'):
            value = jsonable.get(name)
            if value is not None and value != '':
                setattr(self, name, bool(value))
        extra_transforms = jsonable.get('extra_transforms')
        if extra_transforms is not None:
            if not isinstance(extra_transforms, list):
                raise FiberCoverError("extra_transforms must be a list")
            self.extra_transforms = [dict(cast(JsonableDict, t)) for t in extra_transforms]

    @classmethod
    def from_jsonable(cls, jsonable: JsonableDict, use_config_file: bool=True) -> FiberCoverConfig:
        """Creates a configuration from a JSON-serializable representation."""
        result = cls(use_config_file=use_config_file)
        result.update_from_jsonable(jsonable)
        result.validate()
        return result

    @classmethod
    def from_json(cls, json_str: str, use_config_file: bool=True) -> FiberCoverConfig:
        """Creates a configuration from a JSON representation."""
        jsonable = json.loads(json_str)
        return cls.from_jsonable(jsonable, use_config_file=use_config_file)

    @classmethod
    def from_config_file(cls, filename: str) -> FiberCoverConfig:
        """Creates a configuration from a JSON-serialized config file."""
        with open(filename, 'r') as f:
            jsonable: JsonableDict = json.load(f)

        result = cls.from_jsonable(jsonable, use_config_file=False)
        return result

    def __str__(self) -> str:
        return (
            f"FiberCoverConfig("
            f"degree_cap={self.degree_cap}, "
            f"index_cap={self.index_cap}, "
            f"node_budget={self.node_budget}, "
            f"witness_attempts={self.witness_attempts}, "
            f"group_order_cap={self.group_order_cap})"
          )

    def __repr__(self) -> str:
        return str(self)
