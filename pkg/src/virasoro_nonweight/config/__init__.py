"""Configuration management for verification runs."""

from virasoro_nonweight.config.loader import (
    ConfigError,
    build_context,
    load_run_config,
    parse_run_config,
)
from virasoro_nonweight.config.schema import (
    HighestWeightConfig,
    MatricesConfig,
    ParamsConfig,
    ProbeConfig,
    RunConfig,
    TrivialConfig,
)

__all__ = [
    "RunConfig",
    "ParamsConfig",
    "HighestWeightConfig",
    "TrivialConfig",
    "MatricesConfig",
    "ProbeConfig",
    "ConfigError",
    "build_context",
    "load_run_config",
    "parse_run_config",
]
