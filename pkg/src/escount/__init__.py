"""Exact counts of isomorphism classes of element systems with characters
over finite abelian groups.

An element system with characters on a group G is an n-tuple of group
elements together with an n-tuple of characters, considered up to a group
automorphism applied to everything at once and a relabeling of the n
positions.  This package counts the classes exactly, by several independent
methods that are cross-checked against each other.
"""
from .abelian import (
    ESC,
    AbelianGroup,
    Character,
    EndoMatrix,
    GroupElement,
    GroupParseError,
    canonical_spec,
    characters,
    count_character_solutions,
    count_element_solutions,
    elements,
    enumerate_automorphisms,
    invert_automorphism,
    pairing_exponent,
    parse_group,
    pullback_character,
    rank_mod_p,
)
from .budget import Budget, BudgetExceededError, DEFAULT_BUDGET, IntegralityError
from .burnside import (
    FixedPointReport,
    act,
    fixed_point_report,
    fixed_points_by_cycles,
    fixed_points_naive,
    orbit_count_congruence,
    orbit_count_naive,
    orbit_enumerate,
    orbit_sizes,
)
from .closed_form import (
    closed_count,
    formula_prime_any_n,
    formula_prime_power_n1,
    formula_prime_power_n2,
    formula_squarefree_n1,
    formula_value,
    f_2,
    f_p,
    general_linear_order,
    n_cyclic,
    n_cyclic_prime_power,
    n_cyclic_prime_power_alt,
    n_elementary_abelian,
    n_general,
)
from .numtheory import (
    CycleType,
    DeltaVector,
    cycle_types,
    delta_census,
    delta_vector,
    divisors,
    euler_phi,
    integer_partitions,
    multiplicative_order,
    primitive_root,
    shape_parameters,
    two_power_unit_decomposition,
)
from .verify import (
    CaseResult,
    ReferenceRow,
    VerificationReport,
    abelian_groups_of_order,
    applicable_methods,
    check_reference_values,
    cross_check,
    sweep,
)

__version__ = "0.1.0"

__all__ = [
    "ESC",
    "AbelianGroup",
    "Budget",
    "BudgetExceededError",
    "CaseResult",
    "Character",
    "CycleType",
    "DEFAULT_BUDGET",
    "DeltaVector",
    "EndoMatrix",
    "FixedPointReport",
    "GroupElement",
    "GroupParseError",
    "IntegralityError",
    "ReferenceRow",
    "VerificationReport",
    "abelian_groups_of_order",
    "act",
    "applicable_methods",
    "canonical_spec",
    "characters",
    "check_reference_values",
    "closed_count",
    "formula_prime_any_n",
    "formula_prime_power_n1",
    "formula_prime_power_n2",
    "formula_squarefree_n1",
    "formula_value",
    "count_character_solutions",
    "count_element_solutions",
    "cross_check",
    "cycle_types",
    "delta_census",
    "delta_vector",
    "divisors",
    "elements",
    "enumerate_automorphisms",
    "euler_phi",
    "f_2",
    "f_p",
    "fixed_point_report",
    "fixed_points_by_cycles",
    "fixed_points_naive",
    "general_linear_order",
    "integer_partitions",
    "invert_automorphism",
    "multiplicative_order",
    "n_cyclic",
    "n_cyclic_prime_power",
    "n_cyclic_prime_power_alt",
    "n_elementary_abelian",
    "n_general",
    "orbit_count_congruence",
    "orbit_count_naive",
    "orbit_enumerate",
    "orbit_sizes",
    "pairing_exponent",
    "parse_group",
    "primitive_root",
    "pullback_character",
    "rank_mod_p",
    "shape_parameters",
    "sweep",
    "two_power_unit_decomposition",
]
