"""Tests for the group action on configurations, fixed-point counting,
and the orbit-counting routines."""
import itertools
import math

import pytest

from escount.abelian import (
    ESC,
    EndoMatrix,
    element_list,
    enumerate_automorphisms,
    parse_group,
)
from escount.budget import Budget, BudgetExceededError
from escount.burnside import (
    act,
    compose_permutations,
    fixed_point_report,
    fixed_points_by_cycles,
    fixed_points_naive,
    identity_permutation,
    orbit_count_congruence,
    orbit_count_naive,
    orbit_enumerate,
    orbit_sizes,
    permutations_of,
)
from escount.numtheory import CycleType, cycle_types
from escount.verify import abelian_groups_of_order

# Orbit counts frozen from an independent exhaustive scan (constraint-level
# automorphism enumeration plus a full pass over all configurations).
ORACLE_COUNTS = {
    ("C1", 1): 1,
    ("C2", 1): 4,
    ("C2", 2): 10,
    ("C2", 3): 20,
    ("C3", 1): 5,
    ("C3", 2): 25,
    ("C4", 1): 10,
    ("C4", 2): 76,
    ("C5", 1): 7,
    ("C5", 2): 85,
    ("C7", 1): 9,
    ("C8", 1): 22,
    ("C8", 2): 580,
    ("C9", 1): 17,
    ("C16", 1): 46,
    ("C2^2", 1): 5,
    ("C2^2", 2): 31,
    ("C2^2", 3): 160,
    ("C2^3", 1): 5,
    ("C2xC4", 1): 19,
    ("C2xC4", 2): 364,
    ("C12", 1): 50,
    ("C12", 2): 2860,
    ("C6", 1): 20,
    ("C3^2", 1): 6,
    ("C2xC8", 1): 46,
    ("C15", 1): 35,
}


def small_groups(max_order):
    return [
        group
        for order in range(1, max_order + 1)
        for group in abelian_groups_of_order(order)
    ]


def flat(esc):
    return tuple(d for tup in esc.elements + esc.characters for d in tup)


def all_configurations(group, n):
    els = element_list(group)
    for elems in itertools.product(els, repeat=n):
        for chars in itertools.product(els, repeat=n):
            yield ESC(elems, chars)


def test_permutation_helpers():
    assert identity_permutation(3) == (0, 1, 2)
    assert list(permutations_of(2)) == [(0, 1), (1, 0)]
    assert compose_permutations((1, 2, 0), (0, 2, 1)) == (1, 0, 2)


def test_act_doubling_on_three_torsion():
    c3 = parse_group("C3")
    doubling = EndoMatrix(c3, ((2,),))
    moved = act((doubling, (0,)), ESC(((1,),), ((1,),)))
    assert moved == ESC(((2,),), ((2,),))


def test_act_swap_positions():
    c2 = parse_group("C2")
    identity = EndoMatrix.identity(c2)
    esc = ESC(((0,), (1,)), ((1,), (0,)))
    swapped = act((identity, (1, 0)), esc)
    assert swapped == ESC(((1,), (0,)), ((0,), (1,)))


def test_act_identity_fixes_everything():
    group = parse_group("C2xC4")
    pair = (EndoMatrix.identity(group), identity_permutation(2))
    for esc in itertools.islice(all_configurations(group, 2), 0, 4096, 97):
        assert act(pair, esc) == esc


def test_act_rejects_length_mismatch():
    c2 = parse_group("C2")
    with pytest.raises(ValueError):
        act((EndoMatrix.identity(c2), (0, 1)), ESC(((0,),), ((0,),)))


@pytest.mark.parametrize("spec", ["C1", "C2", "C3", "C4", "C5", "C2^2", "C6", "C8"])
@pytest.mark.parametrize("n", [1, 2])
def test_act_is_compatible_with_composition(spec, n):
    group = parse_group(spec)
    autos = enumerate_automorphisms(group)
    sigmas = list(permutations_of(n))
    configs = list(all_configurations(group, n))
    samples = configs[:: max(1, len(configs) // 5)]
    for auto1, auto2 in itertools.product(autos, repeat=2):
        for sigma1, sigma2 in itertools.product(sigmas, repeat=2):
            composite = (auto2.compose(auto1), compose_permutations(sigma2, sigma1))
            for esc in samples:
                assert act((auto2, sigma2), act((auto1, sigma1), esc)) == act(
                    composite, esc
                )


def test_act_composition_on_noncyclic_rank_three():
    group = parse_group("C2^3")
    autos = enumerate_automorphisms(group)[::17]
    configs = list(all_configurations(group, 1))
    samples = configs[:: len(configs) // 5]
    for auto1, auto2 in itertools.product(autos, repeat=2):
        composite = (auto2.compose(auto1), (0,))
        for esc in samples:
            assert act((auto2, (0,)), act((auto1, (0,)), esc)) == act(composite, esc)


def test_fixed_points_naive_identity_pair():
    for spec, n in (("C1", 1), ("C2", 2), ("C3", 2), ("C2xC4", 2)):
        group = parse_group(spec)
        pair = (EndoMatrix.identity(group), identity_permutation(n))
        assert fixed_points_naive(pair) == group.order ** (2 * n)


def test_fixed_points_naive_examples():
    c2 = parse_group("C2")
    assert fixed_points_naive((EndoMatrix.identity(c2), (1, 0))) == 4
    c4 = parse_group("C4")
    assert fixed_points_naive((EndoMatrix(c4, ((3,),)), (0,))) == 4


def test_fixed_points_naive_budget():
    c2 = parse_group("C2")
    pair = (EndoMatrix.identity(c2), identity_permutation(9))
    with pytest.raises(BudgetExceededError) as excinfo:
        fixed_points_naive(pair)
    assert excinfo.value.limit_name == "max_state_space"


def test_fixed_points_by_cycles_examples():
    c2 = parse_group("C2")
    assert fixed_points_by_cycles(EndoMatrix.identity(c2), CycleType((0, 1))) == 4
    c4 = parse_group("C4")
    assert fixed_points_by_cycles(EndoMatrix(c4, ((3,),)), CycleType((1,))) == 4
    for spec, n in (("C5", 2), ("C2xC4", 2)):
        group = parse_group(spec)
        all_fixed = CycleType((n,) + (0,) * (n - 1))
        assert (
            fixed_points_by_cycles(EndoMatrix.identity(group), all_fixed)
            == group.order ** (2 * n)
        )


def test_fixed_points_by_cycles_matches_naive_small():
    for group in small_groups(16):
        autos = enumerate_automorphisms(group)
        if len(autos) > 1000:
            autos = autos[::500]
        for n in (1, 2):
            for auto in autos:
                for sigma in permutations_of(n):
                    ctype = CycleType.from_permutation(sigma)
                    assert fixed_points_naive((auto, sigma)) == fixed_points_by_cycles(
                        auto, ctype
                    )


def test_fixed_points_by_cycles_matches_naive_length_three():
    budget = Budget(max_state_space=1 << 18)
    specs = ["C2", "C3", "C4", "C5", "C6", "C7", "C8", "C2^2", "C2xC4", "C2^3"]
    for spec in specs:
        group = parse_group(spec)
        autos = enumerate_automorphisms(group)
        if len(autos) > 20:
            autos = autos[::9]
        for auto in autos:
            for sigma in permutations_of(3):
                ctype = CycleType.from_permutation(sigma)
                assert fixed_points_naive((auto, sigma), budget) == (
                    fixed_points_by_cycles(auto, ctype, budget)
                )


def test_orbit_count_congruence_matches_oracle():
    for (spec, n), expected in ORACLE_COUNTS.items():
        assert orbit_count_congruence(parse_group(spec), n) == expected, (spec, n)


def test_orbit_count_naive_matches_oracle():
    for (spec, n), expected in ORACLE_COUNTS.items():
        assert orbit_count_naive(parse_group(spec), n) == expected, (spec, n)


def test_orbit_count_methods_agree():
    for group in small_groups(9):
        for n in (1, 2):
            assert orbit_count_naive(group, n) == orbit_count_congruence(group, n)


def test_fixed_point_report_invariants():
    for spec, n in (("C4", 2), ("C2^2", 2), ("C6", 2), ("C9", 1)):
        group = parse_group(spec)
        report = fixed_point_report(group, n)
        autos = enumerate_automorphisms(group)
        denominator = len(autos) * math.factorial(n)
        assert report.orbit_count * denominator == report.total
        assert len(report.counts) == len(autos) * len(list(cycle_types(n)))
        recomputed = sum(
            count * ctype.permutation_count()
            for (_, ctype), count in report.counts.items()
        )
        assert recomputed == report.total
        identity_idx = autos.index(EndoMatrix.identity(group))
        all_fixed = CycleType((n,) + (0,) * (n - 1))
        assert report.counts[(identity_idx, all_fixed)] == group.order ** (2 * n)


def test_fixed_point_report_c4_pairs():
    report = fixed_point_report(parse_group("C4"), 2)
    assert report.orbit_count == 76


def test_orbit_enumerate_smallest_cases():
    trivial = parse_group("C1")
    assert orbit_enumerate(trivial, 1) == [ESC(((),), ((),))]
    c2 = parse_group("C2")
    reps = orbit_enumerate(c2, 1)
    assert reps == [
        ESC(((0,),), ((0,),)),
        ESC(((0,),), ((1,),)),
        ESC(((1,),), ((0,),)),
        ESC(((1,),), ((1,),)),
    ]


def test_orbit_sizes_c3():
    c3 = parse_group("C3")
    sizes = orbit_sizes(c3, 1)
    assert sizes == [1, 2, 2, 2, 2]
    assert len(orbit_enumerate(c3, 1)) == 5


def test_orbit_enumerate_grid_invariants():
    for group in small_groups(9):
        m = group.order
        aut_size = len(enumerate_automorphisms(group))
        for n in (1, 2, 3):
            if m ** (2 * n) > 65536:
                continue
            reps = orbit_enumerate(group, n)
            sizes = orbit_sizes(group, n)
            assert len(reps) == orbit_count_congruence(group, n)
            assert len(sizes) == len(reps)
            assert sum(sizes) == m ** (2 * n)
            acting_order = aut_size * math.factorial(n)
            for size in sizes:
                assert acting_order % size == 0


def orbit_representatives_oracle(group, n):
    """Lexicographically least orbit representatives by breadth-first search."""
    autos = enumerate_automorphisms(group)
    sigmas = list(permutations_of(n))
    seen = set()
    reps = []
    for esc in all_configurations(group, n):
        key = flat(esc)
        if key in seen:
            continue
        reps.append(esc)
        frontier = [esc]
        seen.add(key)
        while frontier:
            current = frontier.pop()
            for auto in autos:
                for sigma in sigmas:
                    image = act((auto, sigma), current)
                    image_key = flat(image)
                    if image_key not in seen:
                        seen.add(image_key)
                        frontier.append(image)
    return reps


@pytest.mark.parametrize("spec,n", [("C4", 1), ("C2^2", 1), ("C5", 1), ("C2", 2)])
def test_orbit_enumerate_representatives_are_lex_least(spec, n):
    group = parse_group(spec)
    assert list(orbit_enumerate(group, n)) == orbit_representatives_oracle(group, n)


def test_orbit_count_at_least_element_only_orbits():
    # Forgetting the characters merges orbits, never splits them.
    for group in small_groups(8):
        els = element_list(group)
        autos = enumerate_automorphisms(group)
        for n in (1, 2):
            sigmas = list(permutations_of(n))
            seen = set()
            element_orbits = 0
            for tup in itertools.product(els, repeat=n):
                if tup in seen:
                    continue
                element_orbits += 1
                frontier = [tup]
                seen.add(tup)
                while frontier:
                    current = frontier.pop()
                    for auto in autos:
                        moved = tuple(auto.apply(x) for x in current)
                        for sigma in sigmas:
                            image = tuple(moved[sigma.index(j)] for j in range(n))
                            if image not in seen:
                                seen.add(image)
                                frontier.append(image)
            assert orbit_count_congruence(group, n) >= element_orbits
