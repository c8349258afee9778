# Copyright (c) 2026 The tropsing Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
"""Contains logic for reading tropsing configuration from the environment.

Every configuration key ``key`` can be overridden with the environment
variable ``TROPSING_<KEY>``. Two shorter aliases are provided for the values
users change most often: ``TROPSING_CACHE`` (the cache directory) and
``TROPSING_THREADS`` (the number of worker processes).
"""
import os

import jsonschema

from ..errors import ConfigKeyError, ParseError

_TROPSING_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "properties": {
        "cache_dir": {"type": "string", "minLength": 1},
        "threads": {"type": "integer", "minimum": 1},
        "output_format": {"type": "string", "enum": ["json", "csv", "text"]},
        "max_support": {"type": "integer", "minimum": 1},
        "max_degree": {"type": "integer", "minimum": 2},
        "max_resultant_degree": {"type": "integer", "minimum": 1},
        "max_polytope_points": {"type": "integer", "minimum": 1},
        "max_polytope_dim": {"type": "integer", "minimum": 1},
        "max_universal_degree": {"type": "integer", "minimum": 2},
        "probe_samples": {"type": "integer", "minimum": 0},
    },
}

_TROPSING_CONFIG_DEFAULTS = {
    "cache_dir": ".tropsing-cache",
    "threads": 1,
    "output_format": "json",
    "max_support": 16,
    "max_degree": 7,
    "max_resultant_degree": 5,
    "max_polytope_points": 400,
    "max_polytope_dim": 6,
    "max_universal_degree": 512,
    "probe_samples": 360,
}

_ENVIRONMENT_ALIASES = {
    "cache_dir": "TROPSING_CACHE",
    "threads": "TROPSING_THREADS",
}

_LIMIT_KEYS = (
    "max_support",
    "max_degree",
    "max_resultant_degree",
    "max_polytope_points",
    "max_polytope_dim",
    "max_universal_degree",
)


class _GetConfigValueNoneType:
    pass


_GET_CONFIG_VALUE_NONE = _GetConfigValueNoneType()


def _environment_names(key):
    names = [f"TROPSING_{key.upper()}"]
    if key in _ENVIRONMENT_ALIASES:
        names.insert(0, _ENVIRONMENT_ALIASES[key])
    return names


def _coerce(key, raw):
    """Convert an environment string to the type required by the schema."""
    expected = _TROPSING_SCHEMA["properties"].get(key, {}).get("type")
    if expected == "integer":
        try:
            return int(raw)
        except ValueError:
            raise ConfigKeyError(f"{key}: expected an integer, got '{raw}'")
    return raw


def require_config_value(key, default=_GET_CONFIG_VALUE_NONE):
    """Request a configuration value, failing if not available.

    Parameters
    ----------
    key : str
        The configuration key.
    default
        A default value in case the key is neither set in the environment
        nor has a package default.

    Returns
    -------
    object
        The value or default value.

    Raises
    ------
    :class:`~.ConfigKeyError`
        If the key is unknown and no default value is provided.

    """
    for name in _environment_names(key):
        if name in os.environ:
            return _coerce(key, os.environ[name])
    if key in _TROPSING_CONFIG_DEFAULTS:
        return _TROPSING_CONFIG_DEFAULTS[key]
    if default is _GET_CONFIG_VALUE_NONE:
        raise ConfigKeyError("tropsing." + str(key))
    return default


def get_config_value(key, default=None):
    """Request a configuration value.

    Parameters
    ----------
    key : str
        The configuration key.
    default
        A default value returned if the key cannot be found.

    Returns
    -------
    object
        The value if found, None if not found.

    """
    return require_config_value(key=key, default=default)


def load_config(**overrides):
    r"""Return the full configuration as a validated dictionary.

    Parameters
    ----------
    \*\*overrides
        Values that take precedence over the environment. Entries that are
        None are ignored.

    Returns
    -------
    dict
        The configuration.

    """
    config = {key: require_config_value(key) for key in _TROPSING_CONFIG_DEFAULTS}
    config.update({k: v for k, v in overrides.items() if v is not None})
    jsonschema.validate(
        config, _TROPSING_SCHEMA, format_checker=jsonschema.FormatChecker()
    )
    return config


class RunConfig:
    r"""Everything a single command needs to know about its environment.

    Parameters
    ----------
    regime : :class:`~.ValuationRegime` or str
        The valuation regime, or a regime spec such as ``"char:3"``.
    inputs : list of str
        Input file paths. (Default value = None)
    \*\*overrides
        Overrides for configuration keys (see ``_TROPSING_CONFIG_DEFAULTS``).

    """

    def __init__(self, regime=None, inputs=None, **overrides):
        from ..trop_core import ValuationRegime

        if isinstance(regime, str):
            regime = ValuationRegime.parse(regime)
        self.regime = regime
        self.inputs = list(inputs or [])
        try:
            config = load_config(**overrides)
        except jsonschema.ValidationError as error:
            raise ParseError(f"Invalid configuration: {error.message}") from error
        self.output_format = config["output_format"]
        self.cache_dir = config["cache_dir"]
        self.threads = config["threads"]
        self.probe_samples = config["probe_samples"]
        self.limits = {key: config[key] for key in _LIMIT_KEYS}

    @property
    def parallelization(self):
        """Return the executor mode matching the configured thread count."""
        return "process" if self.threads > 1 else "none"

    @property
    def max_workers(self):
        """Return the worker count for parallel executors, or None when serial."""
        return self.threads if self.threads > 1 else None

    def __repr__(self):
        return (
            f"{type(self).__name__}(regime={self.regime!r}, inputs={self.inputs!r}, "
            f"output_format={self.output_format!r}, threads={self.threads})"
        )
