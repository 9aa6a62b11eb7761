"""Resource limits for the exhaustive enumeration routines.

Every brute-force path (automorphism enumeration, naive fixed-point
counting, orbit listing, matrix-group enumeration) checks its workload
against a budget before allocating anything, so oversized requests fail
fast with an error naming the limit that was hit.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, replace

ENV_VAR = "ESC_BUDGET"


class BudgetExceededError(RuntimeError):
    """Raised when a requested enumeration is larger than its budget allows."""

    def __init__(self, limit_name: str, limit: int, required: int):
        self.limit_name = limit_name
        self.limit = limit
        self.required = required
        super().__init__(
            f"budget exceeded: {limit_name} allows {limit}, request needs {required}"
        )


class IntegralityError(RuntimeError):
    """Raised when an orbit-count average fails to be an integer.

    The averages computed here are integral for mathematical reasons, so a
    non-integral result always indicates an implementation bug and is never
    silently rounded.
    """


@dataclass(frozen=True)
class Budget:
    """Caps on the enumeration workloads, tuned for desk-scale experiments.

    max_group_order:       largest group order for which automorphisms and
                           fixed subgroups are enumerated element by element.
    max_endo_candidates:   largest number of candidate endomorphism matrices
                           scanned when listing automorphisms.
    max_state_space:       largest number of configurations |G|^(2n) for the
                           naive fixed-point count and for orbit listing.
    max_naive_work:        largest total workload (group-pair count times
                           state-space size) for a full naive orbit count.
    max_matrix_candidates: largest number of candidate matrices p^(s*s)
                           scanned when listing an invertible matrix group.
    """

    max_group_order: int = 64
    max_endo_candidates: int = 1 << 20
    max_state_space: int = 1 << 16
    max_naive_work: int = 1 << 29
    max_matrix_candidates: int = 1 << 20

    def check(self, limit_name: str, required: int) -> None:
        """Raise BudgetExceededError if `required` exceeds the named limit."""
        limit = getattr(self, limit_name)
        if required > limit:
            raise BudgetExceededError(limit_name, limit, required)


DEFAULT_BUDGET = Budget()


def budget_from_env(base: Budget | None = None) -> Budget:
    """Return `base` with max_state_space overridden by ESC_BUDGET, if set."""
    budget = base if base is not None else DEFAULT_BUDGET
    raw = os.environ.get(ENV_VAR)
    if raw is None:
        return budget
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ValueError(f"{ENV_VAR} must be an integer, got {raw!r}") from exc
    if cap <= 0:
        raise ValueError(f"{ENV_VAR} must be positive, got {cap}")
    return replace(budget, max_state_space=cap)
