"""
Default settings and the loader shared by the Flask app factory and the CLI.
"""

from typing import Mapping, Optional

from flask import Config

from .errors import ConfigError


class DefaultConfig:
    # resource caps
    MAX_MN = 12
    MAX_TENSOR_TUPLES = 50000

    # sampling
    SEED = 42
    SAMPLES = 30

    # multivalued law checker
    MULTI_MAX_SIZE = 2
    MULTI_MAX_DEGREE = 2
    MULTI_RANDOM = 500
    MULTI_INSTANCE_CAP = 250000

    # cech grid
    CECH_MAX_BASE = 3
    CECH_MAX_PIECES = 3
    CECH_MAX_PIECE_SIZE = 4
    CECH_DEPTH = 4
    CECH_RANDOM = 50

    # suites run on a thread pool of this size
    JOBS = 4

    GOLDEN_DIR = "goldens"


POSITIVE_KEYS = (
    "MAX_MN",
    "MAX_TENSOR_TUPLES",
    "SAMPLES",
    "MULTI_MAX_SIZE",
    "MULTI_RANDOM",
    "MULTI_INSTANCE_CAP",
    "CECH_MAX_BASE",
    "CECH_MAX_PIECES",
    "CECH_MAX_PIECE_SIZE",
    "JOBS",
)


def load_config(overrides: Optional[Mapping] = None, root_path: str = ".") -> Config:
    """
    Build the effective configuration.

    Params
    ------
    overrides: Mapping = None
        Explicit values, e.g. from command line flags. Keys whose value is None
        are ignored.

    Returns
    -------
    flask.Config
        Defaults, then SYMKERNEL_* environment variables, then overrides.
    """
    config = Config(root_path)
    config.from_object(DefaultConfig)
    config.from_prefixed_env("SYMKERNEL")
    if overrides:
        config.update({k: v for k, v in overrides.items() if v is not None})

    for key in POSITIVE_KEYS:
        if not isinstance(config[key], int) or config[key] < 1:
            raise ConfigError(f"{key} must be a positive integer", key=key)

    return config
