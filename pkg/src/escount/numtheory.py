"""Number-theoretic utilities: totients, divisors, permutation cycle types,
orders in unit groups, and the classification of unit-order vectors over
prime-power moduli that drives the closed-form counting formulas.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence


def is_prime(n: int) -> bool:
    """Trial-division primality test, adequate for desk-scale moduli."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n >= 1 as ((p, multiplicity), ...), p ascending."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}")
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            e = 0
            while n % f == 0:
                n //= f
                e += 1
            out.append((f, e))
        f += 1 if f == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    """Number of units modulo n (Euler's totient)."""
    result = n
    for p, _ in factorize(n):
        result -= result // p
    return result


def divisors(n: int) -> list[int]:
    """All positive divisors of n in ascending order."""
    out = [1]
    for p, e in factorize(n):
        out = [d * p**i for d in out for i in range(e + 1)]
    return sorted(out)


def integer_partitions(n: int) -> Iterator[tuple[int, ...]]:
    """Partitions of n >= 0 as nonincreasing tuples, largest-first order."""
    if n < 0:
        raise ValueError(f"cannot partition {n}")

    def rec(remaining: int, largest: int, acc: tuple[int, ...]):
        if remaining == 0:
            yield acc
            return
        for part in range(min(largest, remaining), 0, -1):
            yield from rec(remaining - part, part, acc + (part,))

    yield from rec(n, n, ())


@dataclass(frozen=True)
class CycleType:
    """Cycle type of a permutation of n points.

    multiplicities[t-1] is the number of t-cycles; the tuple always has
    length n, so sum(t * multiplicities[t-1]) == n.
    """

    multiplicities: tuple[int, ...]

    def __post_init__(self):
        n = len(self.multiplicities)
        if any(m < 0 for m in self.multiplicities):
            raise ValueError(f"negative multiplicity in {self.multiplicities}")
        if sum(t * m for t, m in enumerate(self.multiplicities, start=1)) != n:
            raise ValueError(f"multiplicities {self.multiplicities} do not sum to {n}")

    @property
    def n(self) -> int:
        return len(self.multiplicities)

    def mult(self, t: int) -> int:
        """Number of t-cycles, 1 <= t <= n."""
        return self.multiplicities[t - 1]

    def symmetry_size(self) -> int:
        """Order of the centralizer of a permutation with this cycle type."""
        return math.prod(
            math.factorial(m) * t**m
            for t, m in enumerate(self.multiplicities, start=1)
        )

    def permutation_count(self) -> int:
        """Number of permutations of n points with this cycle type."""
        return math.factorial(self.n) // self.symmetry_size()

    def weight(self) -> Fraction:
        """Fraction of all permutations having this cycle type."""
        return Fraction(1, self.symmetry_size())

    @classmethod
    def from_permutation(cls, perm: Sequence[int]) -> "CycleType":
        """Cycle type of a permutation given as a tuple of 0-based images."""
        n = len(perm)
        mult = [0] * n
        seen = [False] * n
        for start in range(n):
            if seen[start]:
                continue
            length = 0
            j = start
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            mult[length - 1] += 1
        return cls(tuple(mult))


def cycle_types(n: int) -> Iterator[CycleType]:
    """All cycle types on n points, in a fixed documented order.

    The order is ascending lexicographic on the reversed multiplicity tuple
    (multiplicities of long cycles vary slowest), so the all-fixed-points
    type comes first and the single n-cycle comes last.
    """
    if n < 1:
        raise ValueError(f"cycle_types needs n >= 1, got {n}")

    def rec(t: int, remaining: int, suffix: tuple[int, ...]):
        if t == 1:
            yield CycleType((remaining,) + suffix)
            return
        for count in range(remaining // t + 1):
            yield from rec(t - 1, remaining - t * count, (count,) + suffix)

    yield from rec(n, n, ())


def multiplicative_order(i: int, modulus: int) -> int:
    """Least r >= 1 with i**r == 1 modulo `modulus`; i must be a unit."""
    if modulus < 1:
        raise ValueError(f"modulus must be positive, got {modulus}")
    i %= modulus
    if math.gcd(i, modulus) != 1:
        raise ValueError(f"{i} is not a unit modulo {modulus}")
    order = euler_phi(modulus)
    for q, _ in factorize(order):
        while order % q == 0 and pow(i, order // q, modulus) == 1:
            order //= q
    return order


@lru_cache(maxsize=None)
def primitive_root(p: int, e: int) -> int:
    """Smallest g >= 2 generating the units modulo p**s for every s <= e.

    Defined for odd primes p, where one generator works at every level of
    the tower; powers of 2 need the sign-and-power coordinates from
    two_power_unit_decomposition instead.
    """
    if p == 2 or not is_prime(p):
        raise ValueError(f"primitive_root needs an odd prime, got {p}")
    if e < 1:
        raise ValueError(f"exponent must be >= 1, got {e}")
    g = 2
    while True:
        if all(
            multiplicative_order(g, p**s) == euler_phi(p**s) for s in range(1, e + 1)
        ):
            return g
        g += 1


def two_power_unit_decomposition(e: int, i: int) -> tuple[int, int]:
    """Coordinates (sign, nu) of the unit i modulo 2**e, e >= 3.

    Every odd i modulo 2**e factors uniquely as sign * 5**nu with
    sign in {1, -1} and 0 <= nu < 2**(e-2); found by direct search.
    """
    if e < 3:
        raise ValueError(f"decomposition needs e >= 3, got {e}")
    mod = 1 << e
    i %= mod
    if i % 2 == 0:
        raise ValueError(f"{i} is not a unit modulo {mod}")
    power = 1
    for nu in range(1 << (e - 2)):
        if power == i:
            return (1, nu)
        if mod - power == i:
            return (-1, nu)
        power = power * 5 % mod
    raise AssertionError(f"no decomposition found for {i} mod {mod}")


@dataclass(frozen=True)
class DeltaVector:
    """Orders of a fixed unit at every level of a prime-power modulus tower.

    entries[s-1] is the multiplicative order of the unit modulo p**s.  Each
    vector matches exactly one admissible shape, recorded as (k, d): the
    order stays at d for the first k levels (after the forced 1 at the
    bottom level when p == 2) and then grows by a factor p per level.
    """

    entries: tuple[int, ...]
    shape: tuple[int, int]


def _classify_odd(entries: tuple[int, ...], p: int, e: int) -> tuple[int, int]:
    d = entries[0]
    if (p - 1) % d != 0:
        raise ValueError(f"order vector {entries} invalid modulo {p}**{e}")
    k = 1
    while k < e and entries[k] == d:
        k += 1
    for s in range(k + 1, e + 1):
        if entries[s - 1] != p ** (s - k) * d:
            raise ValueError(f"order vector {entries} invalid modulo {p}**{e}")
    return (k, d)


def _classify_two(entries: tuple[int, ...], e: int) -> tuple[int, int]:
    if entries[0] != 1:
        raise ValueError(f"order vector {entries} invalid modulo 2**{e}")
    d = entries[1]
    if d == 1:
        k = 1
        while k < e and entries[k] == 1:
            k += 1
        tail_start = k + 1
    elif d == 2:
        if all(entries[s] == 2 for s in range(1, e)):
            # The all-twos tail is shared by two parameterizations; report
            # the canonical one with the longest flat prefix.
            return (e, 2)
        last_two = max(s for s in range(2, e + 1) if entries[s - 1] == 2)
        k = last_two - 1
        if k < 2 or any(entries[s - 1] != 2 for s in range(2, k + 1)):
            raise ValueError(f"order vector {entries} invalid modulo 2**{e}")
        tail_start = k + 1
    else:
        raise ValueError(f"order vector {entries} invalid modulo 2**{e}")
    for s in range(tail_start, e + 1):
        if entries[s - 1] != 2 ** (s - k):
            raise ValueError(f"order vector {entries} invalid modulo 2**{e}")
    return (k, d)


def delta_vector(i: int, p: int, e: int) -> DeltaVector:
    """Order vector of the unit i over moduli p, p**2, ..., p**e, with shape."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if e < 1:
        raise ValueError(f"exponent must be >= 1, got {e}")
    if i % p == 0:
        raise ValueError(f"{i} is not a unit modulo {p}")
    entries = tuple(multiplicative_order(i, p**s) for s in range(1, e + 1))
    if p != 2 or e <= 2:
        shape = _classify_odd(entries, p, e)
    else:
        shape = _classify_two(entries, e)
    return DeltaVector(entries, shape)


def delta_census(p: int, e: int) -> dict[tuple[int, int], int]:
    """How many units modulo p**e fall into each order-vector shape."""
    census: dict[tuple[int, int], int] = {}
    for i in range(1, p**e):
        if i % p == 0:
            continue
        shape = delta_vector(i, p, e).shape
        census[shape] = census.get(shape, 0) + 1
    return census


def shape_parameters(p: int, e: int) -> list[tuple[int, int]]:
    """Shape parameters (k, d) in the order the counting formulas sum them.

    For p == 2 with e >= 3 the list follows the formula's index ranges
    verbatim, so the two parameterizations of the all-twos vector both
    appear; delta_census reports that vector only under its canonical key.
    """
    if p != 2 or e <= 2:
        return [(k, d) for k in range(1, e + 1) for d in divisors(p - 1)]
    return [(k, d) for k in range(2, e + 1) for d in (1, 2)]
