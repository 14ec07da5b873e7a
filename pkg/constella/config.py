"""Resource caps, overridable through the environment."""

import os

# Largest carrier any enumeration or completion may produce
DEFAULT_MAX_SIZE = 1024

# Node budget for isomorphism backtracking
DEFAULT_SEARCH_BUDGET = 10_000_000

MAX_SIZE_ENV = "CONSTELLA_MAX_SIZE"
SEARCH_BUDGET_ENV = "CONSTELLA_SEARCH_BUDGET"


def _read_positive_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError as e:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from e
    if value <= 0:
        raise ValueError(f"{name} must be positive, got {value}")
    return value


def max_size() -> int:
    """Largest number of elements an enumerated structure may have."""
    return _read_positive_int(MAX_SIZE_ENV, DEFAULT_MAX_SIZE)


def search_budget() -> int:
    """Number of search nodes an isomorphism search may visit."""
    return _read_positive_int(SEARCH_BUDGET_ENV, DEFAULT_SEARCH_BUDGET)
