"""Cost guards and global limits.

Exhaustive computations in group algebras grow factorially; every expensive
entry point checks a guard and refuses (raising CostGuardExceeded) instead of
silently running for hours.  Guards are configuration, not constants: callers
can pass ``force=True`` or adjust DEFAULT_GUARDS.
"""

import os


class CostGuardExceeded(RuntimeError):
    """Raised when a computation exceeds its configured size guard."""


class ConsistencyError(RuntimeError):
    """Raised when two independent computations of the same object disagree."""


class ConventionUnresolved(RuntimeError):
    """Raised when no basis convention matches the pinned reference data."""


#: Largest degree for which each family of operations runs without ``force``.
DEFAULT_GUARDS = {
    "fqsym_rank": 7,       # exact ranks inside the n!-dimensional algebra
    "fqsym_table": 7,      # dense multiplication table of the symmetric group
    "lie_eigenbasis": 7,
    "s_sigma_matrix": 6,
    "pbt": 8,
    "saliola": 6,
    "wqsym_rank_oracle": 5,
    "v_filtration": 5,
    "radical_oracle": 6,
}


def max_degree(default: int = 8) -> int:
    """Series truncation degree; overridable via the HOPF_MAX_DEGREE env var."""
    value = os.environ.get("HOPF_MAX_DEGREE")
    if value is None:
        return default
    try:
        return int(value)
    except ValueError:
        return default


def check_guard(name: str, n: int, force: bool = False) -> None:
    limit = DEFAULT_GUARDS[name]
    if n > limit and not force:
        raise CostGuardExceeded(
            f"{name}: n={n} exceeds guard {limit}; pass force=True (CLI: --force) to override"
        )
