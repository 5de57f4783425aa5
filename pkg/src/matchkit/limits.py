"""Resource guards for the exhaustive kernels.

Whole-space enumeration grows like (2m-1)!! and tree materialization is
worse in constants, so the expensive entry points refuse sizes above a
configurable limit instead of hanging.  The ``MATCHKIT_MAX_SIZE``
environment variable overrides both defaults.
"""
from __future__ import annotations

import os

DEFAULT_ENUMERATION_LIMIT = 8  # 2,027,025 matchings at m=8
DEFAULT_TREE_LIMIT = 7

ENV_VAR = "MATCHKIT_MAX_SIZE"


class BoundExceededError(RuntimeError):
    """A requested size is above the configured resource guard."""


def _env_limit() -> int | None:
    raw = os.environ.get(ENV_VAR)
    if raw is None or raw.strip() == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{ENV_VAR} must be an integer, got {raw!r}") from None


def enumeration_limit() -> int:
    env = _env_limit()
    return DEFAULT_ENUMERATION_LIMIT if env is None else env


def tree_limit() -> int:
    env = _env_limit()
    return DEFAULT_TREE_LIMIT if env is None else env


def check_size(m: int, limit: int, what: str) -> None:
    if m > limit:
        raise BoundExceededError(
            f"{what} for size {m} exceeds the limit {limit}"
            f" (set {ENV_VAR} to raise it)"
        )
