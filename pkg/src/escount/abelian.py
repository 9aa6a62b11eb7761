"""Finite abelian groups presented as direct sums of prime-power cyclic
factors, together with their characters and matrix-represented
endomorphisms.

An element of ``C_{m_1} + ... + C_{m_s}`` is a tuple of exponents, one per
factor.  A character is likewise a tuple ``(l_1, ..., l_s)``: it sends the
i-th generator to the ``l_i``-th power of a fixed primitive ``m_i``-th root
of unity.  Endomorphisms are integer matrices acting on exponent tuples,
with entry ``(i, j)`` constrained to be a multiple of
``m_i / gcd(m_i, m_j)`` so that the map respects factor orders.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

from .budget import Budget, DEFAULT_BUDGET
from .numtheory import factorize, is_prime

GroupElement = tuple[int, ...]
Character = tuple[int, ...]


class GroupParseError(ValueError):
    """Malformed group spec string; `position` is the offending index."""

    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position} in {text!r}")


@dataclass(frozen=True)
class AbelianGroup:
    """A finite abelian group as a sorted tuple of (prime, exponent) factors."""

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for p, e in self.factors:
            if not is_prime(p):
                raise ValueError(f"factor prime {p} is not prime")
            if e < 1:
                raise ValueError(f"factor exponent {e} must be >= 1")
        if tuple(sorted(self.factors)) != self.factors:
            raise ValueError(f"factors {self.factors} must be sorted by (prime, exponent)")

    @cached_property
    def moduli(self) -> tuple[int, ...]:
        return tuple(p**e for p, e in self.factors)

    @cached_property
    def order(self) -> int:
        return math.prod(self.moduli)

    @property
    def rank(self) -> int:
        return len(self.factors)

    def is_trivial(self) -> bool:
        return not self.factors

    def is_cyclic(self) -> bool:
        primes = [p for p, _ in self.factors]
        return len(primes) == len(set(primes))

    def is_elementary(self) -> bool:
        """True when all factors are C_p for one and the same prime p."""
        return bool(self.factors) and all(e == 1 for _, e in self.factors) and len(
            {p for p, _ in self.factors}
        ) == 1

    def __str__(self) -> str:
        return canonical_spec(self)


def canonical_spec(group: AbelianGroup) -> str:
    """Canonical spec string: prime-power factors sorted by (prime, exponent)."""
    if group.is_trivial():
        return "C1"
    return "x".join(f"C{p**e}" for p, e in group.factors)


_DIGITS = "0123456789"


def _scan_uint(text: str, pos: int, what: str) -> tuple[int, int]:
    start = pos
    while pos < len(text) and text[pos] in _DIGITS:
        pos += 1
    if start == pos:
        raise GroupParseError(f"expected {what}", text, pos)
    return int(text[start:pos]), pos


def parse_group(text: str) -> AbelianGroup:
    """Parse a spec like "C12" or "C2^3xC9" into its canonical group.

    Grammar: factors "C<uint>" with an optional "^<uint>" repeat count,
    joined by "x".  The "C" is case-insensitive; no whitespace is allowed.
    Composite moduli are split into prime-power factors, so "C12" and
    "C4xC3" denote the same group.
    """
    pos = 0
    factors: list[tuple[int, int]] = []
    while True:
        if pos >= len(text) or text[pos] not in "Cc":
            raise GroupParseError("expected 'C'", text, pos)
        pos += 1
        modulus_at = pos
        modulus, pos = _scan_uint(text, pos, "modulus")
        if modulus == 0:
            raise GroupParseError("modulus must be positive", text, modulus_at)
        repeat = 1
        if pos < len(text) and text[pos] == "^":
            pos += 1
            repeat, pos = _scan_uint(text, pos, "repeat count")
        factors.extend(factorize(modulus) * repeat)
        if pos == len(text):
            break
        if text[pos] != "x":
            raise GroupParseError("expected 'x' between factors", text, pos)
        pos += 1
    return AbelianGroup(tuple(sorted(factors)))


def elements(group: AbelianGroup) -> Iterator[GroupElement]:
    """All exponent tuples of the group in lexicographic order."""
    return itertools.product(*(range(m) for m in group.moduli))


def characters(group: AbelianGroup) -> Iterator[Character]:
    """All characters of the group, as exponent tuples in lexicographic order."""
    return itertools.product(*(range(m) for m in group.moduli))


@lru_cache(maxsize=None)
def element_list(group: AbelianGroup) -> tuple[GroupElement, ...]:
    return tuple(elements(group))


@lru_cache(maxsize=None)
def element_index(group: AbelianGroup) -> dict[GroupElement, int]:
    return {el: i for i, el in enumerate(element_list(group))}


def pairing_exponent(group: AbelianGroup, chi: Character, el: GroupElement) -> int:
    """Exponent k with chi(el) equal to the k-th power of a fixed primitive
    |G|-th root of unity."""
    m = group.order
    return sum((m // mi) * l * k for mi, l, k in zip(group.moduli, chi, el, strict=True)) % m


@dataclass(frozen=True)
class EndoMatrix:
    """An endomorphism of `group`, stored as rows of exponent coefficients.

    rows[i][j] tells how the j-th generator contributes to the i-th output
    coordinate; it must be a multiple of m_i / gcd(m_i, m_j), which is
    exactly the condition for the matrix to define a homomorphism.
    """

    group: AbelianGroup
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        mods = self.group.moduli
        s = len(mods)
        if len(self.rows) != s or any(len(row) != s for row in self.rows):
            raise ValueError(f"matrix must be {s}x{s} for {self.group}")
        for i, row in enumerate(self.rows):
            for j, a in enumerate(row):
                if not 0 <= a < mods[i]:
                    raise ValueError(f"entry ({i},{j})={a} out of range for modulus {mods[i]}")
                if a % (mods[i] // math.gcd(mods[i], mods[j])):
                    raise ValueError(
                        f"entry ({i},{j})={a} must be a multiple of "
                        f"{mods[i] // math.gcd(mods[i], mods[j])}"
                    )

    @classmethod
    def identity(cls, group: AbelianGroup) -> "EndoMatrix":
        s = group.rank
        return cls(group, tuple(tuple(int(i == j) for j in range(s)) for i in range(s)))

    def apply(self, el: Sequence[int]) -> GroupElement:
        """Image of an exponent tuple under this endomorphism."""
        return tuple(
            sum(a * k for a, k in zip(row, el, strict=True)) % m
            for row, m in zip(self.rows, self.group.moduli)
        )

    def compose(self, other: "EndoMatrix") -> "EndoMatrix":
        """Matrix of `self` after `other` (row i reduced modulo m_i)."""
        if other.group != self.group:
            raise ValueError("cannot compose endomorphisms of different groups")
        s = self.group.rank
        mods = self.group.moduli
        rows = tuple(
            tuple(
                sum(self.rows[i][t] * other.rows[t][j] for t in range(s)) % mods[i]
                for j in range(s)
            )
            for i in range(s)
        )
        return EndoMatrix(self.group, rows)

    def power(self, r: int) -> "EndoMatrix":
        """r-th compositional power, r >= 0 (0 gives the identity)."""
        if r < 0:
            raise ValueError(f"power must be >= 0, got {r}")
        result = EndoMatrix.identity(self.group)
        for _ in range(r):
            result = result.compose(self)
        return result


def _candidate_value_counts(group: AbelianGroup) -> list[list[int]]:
    """Number of admissible values per matrix cell (gcd of the two moduli)."""
    mods = group.moduli
    return [[math.gcd(mi, mj) for mj in mods] for mi in mods]


@lru_cache(maxsize=None)
def enumerate_automorphisms(
    group: AbelianGroup, budget: Budget = DEFAULT_BUDGET
) -> tuple[EndoMatrix, ...]:
    """All automorphisms of the group, in a fixed deterministic order.

    Scans every endomorphism matrix satisfying the per-cell divisibility
    constraint and keeps the ones that permute the elements.  The scan is
    vectorized; candidates are filtered in chunks to bound memory.
    """
    budget.check("max_group_order", group.order)
    s = group.rank
    if s == 0:
        return (EndoMatrix.identity(group),)
    counts = _candidate_value_counts(group)
    total = math.prod(c for row in counts for c in row)
    budget.check("max_endo_candidates", total)

    mods = np.array(group.moduli, dtype=np.int64)
    m = group.order
    basis = np.array(element_list(group), dtype=np.int64)
    # Weights that collapse an exponent tuple to its index in element_list.
    index_weights = np.array(
        [math.prod(group.moduli[i + 1 :]) for i in range(s)], dtype=np.int64
    )
    steps = np.array(
        [[group.moduli[i] // counts[i][j] for j in range(s)] for i in range(s)],
        dtype=np.int64,
    )
    flat_counts = [counts[i][j] for i in range(s) for j in range(s)]

    kept: list[EndoMatrix] = []
    chunk = max(1, (1 << 22) // max(1, m * s))
    for lo in range(0, total, chunk):
        hi = min(total, lo + chunk)
        idx = np.arange(lo, hi, dtype=np.int64)
        cand = np.empty((hi - lo, s, s), dtype=np.int64)
        stride = total
        for cell, c in enumerate(flat_counts):
            stride //= c
            i, j = divmod(cell, s)
            cand[:, i, j] = (idx // stride) % c * steps[i, j]
        images = np.einsum("nij,kj->nki", cand, basis) % mods
        keys = images @ index_weights
        keys.sort(axis=1)
        ok = (keys == np.arange(m, dtype=np.int64)).all(axis=1)
        for t in np.nonzero(ok)[0]:
            rows = tuple(tuple(int(v) for v in row) for row in cand[t])
            kept.append(EndoMatrix(group, rows))
    return tuple(kept)


@lru_cache(maxsize=None)
def invert_automorphism(auto: EndoMatrix) -> EndoMatrix:
    """Matrix of the inverse map; raises ValueError if `auto` is not bijective."""
    group = auto.group
    preimage: dict[GroupElement, GroupElement] = {}
    for el in element_list(group):
        preimage[auto.apply(el)] = el
    if len(preimage) != group.order:
        raise ValueError("endomorphism is not an automorphism")
    s = group.rank
    columns = [
        preimage[tuple(int(i == j) for i in range(s))] for j in range(s)
    ]
    rows = tuple(tuple(columns[j][i] for j in range(s)) for i in range(s))
    return EndoMatrix(group, rows)


def pullback_character(endo: EndoMatrix, chi: Character) -> Character:
    """The character chi composed with the map of `endo`.

    Working with the exponent of a common primitive |G|-th root of unity:
    the value of the composed character on the j-th generator is the
    chi-value of column j, rescaled from the common root to the
    m_j-th root.  The rescaling always divides exactly for a valid
    endomorphism matrix.
    """
    group = endo.group
    mods = group.moduli
    m = group.order
    out = []
    for j in range(group.rank):
        t = sum((m // mods[i]) * chi[i] * endo.rows[i][j] for i in range(group.rank)) % m
        scale = m // mods[j]
        quotient, remainder = divmod(t, scale)
        if remainder:
            raise ValueError("matrix does not define an endomorphism")
        out.append(quotient)
    return tuple(out)


@lru_cache(maxsize=None)
def element_permutation(auto: EndoMatrix) -> tuple[int, ...]:
    """The permutation of element indices induced by an automorphism."""
    group = auto.group
    idx = element_index(group)
    return tuple(idx[auto.apply(el)] for el in element_list(group))


@lru_cache(maxsize=None)
def character_permutation(auto: EndoMatrix) -> tuple[int, ...]:
    """The permutation of character indices: chi goes to chi composed with
    the inverse automorphism."""
    group = auto.group
    inverse = invert_automorphism(auto)
    idx = element_index(group)
    return tuple(
        idx[pullback_character(inverse, chi)] for chi in element_list(group)
    )


def count_element_solutions(
    auto: EndoMatrix, r: int, budget: Budget = DEFAULT_BUDGET
) -> int:
    """Number of group elements fixed by the r-th power of an automorphism."""
    budget.check("max_group_order", auto.group.order)
    power = auto.power(r)
    return sum(1 for el in element_list(auto.group) if power.apply(el) == el)


def count_character_solutions(
    auto: EndoMatrix, r: int, budget: Budget = DEFAULT_BUDGET
) -> int:
    """Number of characters fixed by the r-th power of the character action."""
    budget.check("max_group_order", auto.group.order)
    inverse_power = invert_automorphism(auto).power(r)
    return sum(
        1
        for chi in element_list(auto.group)
        if pullback_character(inverse_power, chi) == chi
    )


def rank_mod_p(rows: Iterable[Iterable[int]], p: int) -> int:
    """Rank of an integer matrix over the field with p elements."""
    mat = [[v % p for v in row] for row in rows]
    if not mat:
        return 0
    n_rows, n_cols = len(mat), len(mat[0])
    rank = 0
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if mat[r][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = pow(mat[rank][col], -1, p)
        mat[rank] = [(v * inv) % p for v in mat[rank]]
        for r in range(n_rows):
            if r != rank and mat[r][col]:
                f = mat[r][col]
                mat[r] = [(a - f * b) % p for a, b in zip(mat[r], mat[rank])]
        rank += 1
        if rank == n_rows:
            break
    return rank


@dataclass(frozen=True)
class ESC:
    """An element system with characters: n group elements paired with n
    characters, indexed by the same positions."""

    elements: tuple[GroupElement, ...]
    characters: tuple[Character, ...]

    def __post_init__(self):
        if len(self.elements) != len(self.characters):
            raise ValueError("element and character tuples must have equal length")
        if not self.elements:
            raise ValueError("an element system needs at least one position")

    @property
    def n(self) -> int:
        return len(self.elements)
