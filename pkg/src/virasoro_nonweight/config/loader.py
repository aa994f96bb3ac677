"""Configuration loader for verification runs."""

from __future__ import annotations

import json
import logging
import os
from pathlib import Path
from typing import Any

import yaml
from pydantic import ValidationError

from virasoro_nonweight.algebra.errors import ModuleSpecError, ParameterError
from virasoro_nonweight.algebra.hmod import BModuleSpec
from virasoro_nonweight.algebra.tensor import TensorParams
from virasoro_nonweight.config.schema import RunConfig
from virasoro_nonweight.verify.context import SuiteContext

logger = logging.getLogger(__name__)

ENV_MAPPINGS: dict[str, tuple[str, ...]] = {
    "VIRASORO_SEED": ("seed",),
    "VIRASORO_SAMPLES": ("samples",),
    "VIRASORO_K_MAX": ("window", "k_max"),
    "VIRASORO_N_MAX": ("window", "n_max"),
}


class ConfigError(ValueError):
    """Missing, unreadable or invalid configuration; the message starts with the field path."""

    pass


def _deep_merge(base: dict[str, Any], override: dict[str, Any]) -> dict[str, Any]:
    """Deep merge two dictionaries, with override taking precedence."""
    result = base.copy()
    for key, value in override.items():
        if key in result and isinstance(result[key], dict) and isinstance(value, dict):
            result[key] = _deep_merge(result[key], value)
        else:
            result[key] = value
    return result


def _read_file(path: Path) -> dict[str, Any]:
    if not path.exists():
        raise ConfigError(f"config: file not found: {path}")
    text = path.read_text()
    try:
        if path.suffix == ".json":
            data = json.loads(text)
        elif path.suffix in (".yaml", ".yml"):
            data = yaml.safe_load(text) or {}
        else:
            raise ConfigError(f"config: unsupported file type '{path.suffix}' (use .json or .yaml)")
    except (json.JSONDecodeError, yaml.YAMLError) as e:
        raise ConfigError(f"config: cannot parse {path.name}: {e}") from e
    if not isinstance(data, dict):
        raise ConfigError("config: top level must be a mapping")
    return data


def _apply_env_overrides(config_data: dict[str, Any]) -> dict[str, Any]:
    """Apply environment variable overrides to configuration."""
    for env_var, path in ENV_MAPPINGS.items():
        if value := os.environ.get(env_var):
            current = config_data
            for depth, key in enumerate(path[:-1], start=1):
                current = current.setdefault(key, {})
                if not isinstance(current, dict):
                    where = ".".join(path[:depth])
                    raise ConfigError(f"{where}: must be a mapping to apply {env_var}")
            try:
                current[path[-1]] = int(value)
            except ValueError as e:
                raise ConfigError(f"{'.'.join(path)}: {env_var} must be an integer") from e
            logger.debug(f"{env_var} overrides {'.'.join(path)}")
    return config_data


def _format_validation_error(error: ValidationError) -> str:
    lines = []
    for item in error.errors():
        path = ".".join(str(part) for part in item["loc"]) or "config"
        message = item["msg"].removeprefix("Value error, ")
        lines.append(f"{path}: {message}")
    return "; ".join(lines)


def parse_run_config(data: dict[str, Any]) -> RunConfig:
    """Validate raw config data, raising ConfigError with field paths."""
    try:
        return RunConfig.model_validate(data)
    except ValidationError as e:
        raise ConfigError(_format_validation_error(e)) from e


def load_run_config(
    config_path: str | Path | None = None,
    overrides: dict[str, Any] | None = None,
) -> RunConfig:
    """
    Load a run configuration.

    Reads config_path (.json or .yaml) if given, applies the VIRASORO_* environment
    variables, then merges overrides (from the command line) on top.

    Args:
        config_path: Path to the configuration file. None means defaults only.
        overrides: Nested values that take precedence over file and environment.

    Returns:
        RunConfig: Validated configuration object.
    """
    config_data: dict[str, Any] = _read_file(Path(config_path)) if config_path else {}
    config_data = _apply_env_overrides(config_data)
    if overrides:
        config_data = _deep_merge(config_data, overrides)
    return parse_run_config(config_data)


def build_context(config: RunConfig) -> SuiteContext:
    """Turn a validated config into the algebraic objects the suites run on."""
    try:
        params: TensorParams = config.params.to_params()
    except ParameterError as e:
        raise ConfigError(f"params: {e}") from e
    try:
        spec: BModuleSpec = config.vb.to_spec()
    except (ModuleSpecError, ParameterError) as e:
        raise ConfigError(f"vb: {e}") from e
    return SuiteContext(
        params=params,
        spec=spec,
        window=config.window,
        seed=config.seed,
        samples=config.samples,
        p_max=config.p_max,
        probe_outer=config.probe.outer(config.window),
        probe_inner=config.probe.inner(),
    )
