# twostep/soliton/config.py

"""
Settings of the numerical soliton search, read from a YAML mapping and
overridden by command-line flags.
"""

import os
from dataclasses import asdict, dataclass, fields, replace

from ruamel.yaml import YAML
from ruamel.yaml.error import YAMLError

from twostep.core.errors import ConfigError
from twostep.core.utils import get_logger

logger = get_logger("twostep.soliton")

UNIT_DETERMINANT = "unit-determinant"
FIXED_SCALAR_CURVATURE = "fixed-scalar-curvature"
NORMALIZATIONS = (UNIT_DETERMINANT, FIXED_SCALAR_CURVATURE)


@dataclass(frozen=True)
class FlowConfig:
    tol: float = 1e-8
    max_iters: int = 5000
    restarts: int = 8
    seed: int = 0
    step: float = 1.0
    normalization: str = UNIT_DETERMINANT
    fd_step: float = 1e-6
    workers: int = 4
    rational_denominator: int = 10000
    stall_window: int = 25
    stall_tol: float = 1e-2

    def __post_init__(self):
        for name in ("max_iters", "restarts", "seed", "workers", "rational_denominator",
                     "stall_window"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise ConfigError(f"{name} must be an integer, got {value!r}")
        for name in ("tol", "step", "fd_step"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise ConfigError(f"{name} must be a number, got {value!r}")
            if not value > 0:
                raise ConfigError(f"{name} must be positive, got {value!r}")
        if self.restarts < 1:
            raise ConfigError("restarts must be at least 1")
        if self.max_iters < 0:
            raise ConfigError("max_iters must not be negative")
        if self.workers < 1:
            raise ConfigError("workers must be at least 1")
        if self.rational_denominator < 1:
            raise ConfigError("rational_denominator must be at least 1")
        if self.stall_window < 1:
            raise ConfigError("stall_window must be at least 1")
        if isinstance(self.stall_tol, bool) or not isinstance(self.stall_tol, (int, float)) \
                or self.stall_tol < 0:
            raise ConfigError(f"stall_tol must be a non-negative number, got {self.stall_tol!r}")
        if self.normalization not in NORMALIZATIONS:
            raise ConfigError(f"normalization must be one of {NORMALIZATIONS}, "
                              f"got {self.normalization!r}")

    def as_dict(self):
        return asdict(self)

    def with_overrides(self, **overrides):
        """Copy with every non-None override applied."""
        given = {k: v for k, v in overrides.items() if v is not None}
        return replace(self, **given) if given else self


CONFIG_KEYS = tuple(f.name for f in fields(FlowConfig))


def load_flow_config(path):
    """
    FlowConfig from a YAML mapping. A missing, empty or non-mapping file
    falls back to the defaults; unknown keys are ignored with a warning.
    """
    if not os.path.exists(path):
        logger.warning(f"Config file '{path}' does not exist, using defaults")
        return FlowConfig()

    yaml = YAML(typ='safe', pure=True)
    try:
        with open(path, 'r', encoding="utf-8") as file:
            cfg = yaml.load(file)
    except YAMLError as e:
        raise ConfigError(f"Config file '{path}' is not valid YAML: {e}") from e

    if cfg is None:
        logger.warning(f"Config file '{path}' is empty, using defaults")
        return FlowConfig()

    if not isinstance(cfg, dict):
        logger.warning(f"Config file '{path}' must hold a mapping, using defaults")
        return FlowConfig()

    # Accept both `max_iters` and `max-iters`
    known = {}
    for key, value in cfg.items():
        name = str(key).replace("-", "_")
        if name not in CONFIG_KEYS:
            logger.warning(f"Ignoring unknown config key '{key}' in '{path}'")
            continue
        known[name] = value

    missing = [k for k in CONFIG_KEYS if k not in known]
    if missing:
        logger.debug(f"Config file '{path}' leaves defaults for {missing}")
    return FlowConfig(**known)
