"""Configuration defaults and their environment-variable overrides."""

from dataclasses import dataclass
import os
from typing import Dict, Literal, Optional, Tuple

from .errors import CertidomError


Setting = Literal["max_n"]

# Mapping of settings to 2-tuples of the form (envvar, default).
_SETTING_MAP: Dict[Setting, Tuple[str, int]] = {
    "max_n": ("CERTIDOM_MAX_N", 7),
}

DEFAULT_SEED = 20190901
DEFAULT_SAMPLES = 200
# Order bound for the base graph of sampled (graph, family) pairs.
DEFAULT_SAMPLE_ORDER = 5
JSON_SCHEMA_VERSION = 1


@dataclass(frozen=True)
class Limits:
    """Largest graph order each solver accepts (None means unlimited)."""

    gamma: Optional[int] = 20
    gamma_cer: Optional[int] = 20
    upper_gamma: Optional[int] = 14
    upper_gamma_cer: Optional[int] = 12

    @classmethod
    def unlimited(cls) -> "Limits":
        return cls(None, None, None, None)


def get_setting(setting: Setting) -> int:
    """Resolves @setting from its environment variable or its default."""
    assert (
        setting in _SETTING_MAP
    ), "Provided @setting parameter is not valid: {!r} not in {}".format(
        setting, list(_SETTING_MAP.keys())
    )

    envvar, default = _SETTING_MAP[setting]
    raw = os.environ.get(envvar)
    if raw is None or not raw.strip():
        return default

    try:
        value = int(raw)
    except ValueError as e:
        raise CertidomError(
            f"{envvar} must be an integer, not {raw!r}", cause=e
        ) from e
    if value < 1:
        raise CertidomError(f"{envvar} must be positive, not {value}")
    return value


def enumeration_cap() -> int:
    """The largest order the labeled-graph enumerator will accept."""
    return get_setting("max_n")
