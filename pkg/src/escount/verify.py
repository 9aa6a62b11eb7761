"""Cross-validation of the independent counting methods.

Every group admits at least the naive scan and the congruence-style
average; cyclic, prime-power and elementary abelian groups add closed
forms.  cross_check runs all applicable methods on one case, sweep runs
every abelian group up to an order bound, and check_reference_values
recomputes a table of known counts from scratch.
"""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field

from .abelian import AbelianGroup, parse_group
from .budget import Budget, BudgetExceededError, DEFAULT_BUDGET
from .burnside import orbit_count_congruence, orbit_count_naive
from .closed_form import (
    formula_prime_power_n1,
    formula_prime_power_n2,
    formula_squarefree_n1,
    n_cyclic,
    n_cyclic_prime_power,
    n_elementary_abelian,
)
from .numtheory import factorize, integer_partitions


@dataclass
class CaseResult:
    """Each applicable method's count for one (group, n), plus agreement."""

    group: str
    n: int
    values: dict[str, int]
    skipped: dict[str, str]
    agree: bool
    elapsed_ms: dict[str, int]


@dataclass
class VerificationReport:
    """Outcome of a sweep: all cases, with the disagreeing ones singled out."""

    cases: list[CaseResult]
    disagreements: list[CaseResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements


@dataclass
class ReferenceRow:
    """A known count recomputed by every applicable method."""

    label: str
    group: str
    n: int
    expected: int
    computed: dict[str, int]
    match: bool


def _method_naive(group: AbelianGroup, n: int, budget: Budget) -> int:
    return orbit_count_naive(group, n, budget)


def _method_congruence(group: AbelianGroup, n: int, budget: Budget) -> int:
    return orbit_count_congruence(group, n, budget)


def _method_cyclic(group: AbelianGroup, n: int, budget: Budget) -> int:
    return n_cyclic(group.order, n)


def _method_prime_power(group: AbelianGroup, n: int, budget: Budget) -> int:
    ((p, e),) = group.factors
    return n_cyclic_prime_power(p, e, n)


def _method_elementary(group: AbelianGroup, n: int, budget: Budget) -> int:
    p = group.factors[0][0]
    return n_elementary_abelian(p, group.rank, n, budget)


METHODS = {
    "naive": _method_naive,
    "congruence": _method_congruence,
    "cyclic": _method_cyclic,
    "prime_power": _method_prime_power,
    "elementary": _method_elementary,
}


def applicable_methods(group: AbelianGroup) -> list[str]:
    """Names of the counting methods defined for this group, in run order."""
    names = ["naive", "congruence"]
    if group.is_cyclic():
        names.append("cyclic")
    if group.rank == 1:
        names.append("prime_power")
    if group.is_elementary():
        names.append("elementary")
    return names


def cross_check(
    group: AbelianGroup,
    n: int,
    methods: list[str] | None = None,
    budget: Budget = DEFAULT_BUDGET,
) -> CaseResult:
    """Run the requested (or all applicable) methods and compare the counts.

    Methods whose workload exceeds the budget are recorded as skipped, not
    failed; the agreement flag covers the methods that did run.
    """
    names = methods if methods is not None else applicable_methods(group)
    unknown = [name for name in names if name not in METHODS]
    if unknown:
        raise ValueError(f"unknown methods {unknown}; choose from {sorted(METHODS)}")
    values: dict[str, int] = {}
    skipped: dict[str, str] = {}
    elapsed: dict[str, int] = {}
    for name in names:
        start = time.perf_counter()
        try:
            values[name] = METHODS[name](group, n, budget)
        except BudgetExceededError as exc:
            skipped[name] = str(exc)
        finally:
            elapsed[name] = int(round((time.perf_counter() - start) * 1000))
    agree = len(set(values.values())) <= 1
    return CaseResult(str(group), n, values, skipped, agree, elapsed)


def abelian_groups_of_order(order: int) -> list[AbelianGroup]:
    """All abelian groups of the given order, one per isomorphism class."""
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    per_prime = [
        [tuple((p, part) for part in parts) for parts in integer_partitions(a)]
        for p, a in factorize(order)
    ]
    groups = []
    for combo in itertools.product(*per_prime):
        factors = tuple(sorted(itertools.chain.from_iterable(combo)))
        groups.append(AbelianGroup(factors))
    return groups


def sweep(max_order: int, max_n: int, budget: Budget = DEFAULT_BUDGET) -> VerificationReport:
    """Cross-check every abelian group of order <= max_order at every
    tuple length up to max_n."""
    if max_order < 1 or max_n < 1:
        raise ValueError("sweep needs max_order >= 1 and max_n >= 1")
    cases = []
    for order in range(1, max_order + 1):
        for group in abelian_groups_of_order(order):
            for n in range(1, max_n + 1):
                cases.append(cross_check(group, n, budget=budget))
    disagreements = [case for case in cases if not case.agree]
    return VerificationReport(cases, disagreements)


_PINNED_PAIR_COUNTS = (("C2", 10), ("C4", 76))

_PRIME_POWER_SINGLE = (
    (2, 1, 4),
    (2, 2, 10),
    (2, 3, 22),
    (2, 4, 46),
    (2, 5, 94),
    (3, 1, 5),
    (3, 2, 17),
    (3, 3, 53),
    (5, 1, 7),
    (7, 1, 9),
)

_SQUAREFREE_SINGLE = ((6, 20), (10, 28), (15, 35), (30, 140))


def check_reference_values(budget: Budget = DEFAULT_BUDGET) -> list[ReferenceRow]:
    """Recompute a table of known counts and flag any mismatch."""
    rows = []
    for spec, expected in _PINNED_PAIR_COUNTS:
        group = parse_group(spec)
        ((p, e),) = group.factors
        computed = {
            "naive": orbit_count_naive(group, 2, budget),
            "congruence": orbit_count_congruence(group, 2, budget),
            "prime_power": n_cyclic_prime_power(p, e, 2),
            "formula": formula_prime_power_n2(p, e),
        }
        rows.append(
            ReferenceRow(
                "two-pair pinned", spec, 2, expected, computed,
                all(v == expected for v in computed.values()),
            )
        )
    for p, e, expected in _PRIME_POWER_SINGLE:
        group = AbelianGroup(((p, e),))
        computed = {
            "formula": formula_prime_power_n1(p, e),
            "prime_power": n_cyclic_prime_power(p, e, 1),
            "congruence": orbit_count_congruence(group, 1, budget),
        }
        rows.append(
            ReferenceRow(
                "single-pair prime power", str(group), 1, expected, computed,
                all(v == expected for v in computed.values()),
            )
        )
    for order, expected in _SQUAREFREE_SINGLE:
        group = parse_group(f"C{order}")
        primes = [p for p, _ in group.factors]
        computed = {
            "formula": formula_squarefree_n1(primes),
            "cyclic": n_cyclic(order, 1),
            "congruence": orbit_count_congruence(group, 1, budget),
        }
        rows.append(
            ReferenceRow(
                "single-pair squarefree", str(group), 1, expected, computed,
                all(v == expected for v in computed.values()),
            )
        )
    return rows
