"""Exception types and resource limits shared across the package."""

from __future__ import annotations

import os

DEFAULT_ENUMERATION_BUDGET = 4**12
DEFAULT_SUBSET_CAP = 10**6


class LabelCapError(Exception):
    """Base class for all errors raised by labelcap."""


class InvalidLabelError(LabelCapError, ValueError):
    """A label or label set violates its construction invariants."""


class BudgetExceededError(LabelCapError):
    """An exact computation would exceed its configured budget."""


class UnsupportedScopeError(LabelCapError):
    """The request lies outside the range where a result is established."""


class NoRootInBracketError(LabelCapError, ValueError):
    """A polynomial has no real root inside the requested bracket."""


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    return int(float(raw))


def enumeration_budget() -> int:
    """Maximum number of source strings the brute-force oracle may visit."""
    return _env_int("LABELCAP_BUDGET", DEFAULT_ENUMERATION_BUDGET)


def subset_state_cap() -> int:
    """Maximum number of subset states produced by determinization."""
    return _env_int("LABELCAP_BUDGET", DEFAULT_SUBSET_CAP)
