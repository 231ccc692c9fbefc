"""Numerical semigroups and their classical invariants."""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

import numpy as np

from . import _accel
from .errors import (
    EmptyGenerators,
    GcdNotOne,
    InconsistencyError,
    IsAllOfN,
    NotAdditivelyClosed,
    NotAMember,
    ZeroModulus,
)
from .relative_ideal import CofiniteSet, difference, multiple


class NumericalSemigroup:
    """A numerical semigroup other than ℕ, stored as a membership table.

    ``membership`` covers ``[0, F + 1]`` where ``F`` is the Frobenius number;
    every integer past the table is a member.  Instances are immutable; build
    them with :func:`from_generators` or :func:`from_gaps`.
    """

    __slots__ = ("membership", "frobenius", "__dict__")

    def __init__(self, membership: np.ndarray):
        membership = np.array(membership, dtype=np.bool_)
        holes = np.flatnonzero(~membership)
        if holes.size == 0:
            raise IsAllOfN("the semigroup is all of ℕ")
        frob = int(holes[-1])
        membership = membership[: frob + 2]
        if membership.size < frob + 2:
            membership = np.concatenate([membership, [True]])
        membership.flags.writeable = False
        self.membership = membership
        self.frobenius = frob

    # -- basic data ---------------------------------------------------------

    @property
    def conductor(self) -> int:
        return self.frobenius + 1

    @cached_property
    def gaps(self) -> tuple[int, ...]:
        return tuple(np.flatnonzero(~self.membership).tolist())

    @property
    def genus(self) -> int:
        return len(self.gaps)

    @cached_property
    def multiplicity(self) -> int:
        return int(np.flatnonzero(self.membership[1:])[0]) + 1

    @cached_property
    def small_elements(self) -> tuple[int, ...]:
        """Members in ``[0, F + 1]``."""
        return tuple(np.flatnonzero(self.membership).tolist())

    @cached_property
    def minimal_generators(self) -> tuple[int, ...]:
        e = self.multiplicity
        table = self.table(self.frobenius + e + 1)
        dec = _accel.decomposable(table, e)
        gens = np.flatnonzero(table & ~dec)
        return tuple(int(x) for x in gens if x > 0)

    @property
    def embedding_dimension(self) -> int:
        return len(self.minimal_generators)

    def table(self, length: int) -> np.ndarray:
        """Writable membership flags on ``[0, length)``."""
        out = np.ones(length, dtype=np.bool_)
        k = min(length, self.membership.size)
        out[:k] = self.membership[:k]
        return out

    def __contains__(self, x) -> bool:
        x = int(x)
        if x < 0:
            return False
        if x > self.frobenius:
            return True
        return bool(self.membership[x])

    def __eq__(self, other) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return np.array_equal(self.membership, other.membership)

    def __hash__(self) -> int:
        return hash(self.membership.tobytes())

    def __repr__(self) -> str:
        return f"<{','.join(map(str, self.minimal_generators))}>"

    def __str__(self) -> str:
        return str(self.as_set())

    # -- views as relative ideals --------------------------------------------

    @cached_property
    def _as_set(self) -> CofiniteSet:
        return CofiniteSet(0, self.membership[: self.conductor])

    def as_set(self) -> CofiniteSet:
        """S itself as a cofinite set (min 0, conductor F + 1)."""
        return self._as_set

    @cached_property
    def _maximal_ideal(self) -> CofiniteSet:
        m = self.membership[: self.conductor].copy()
        m[0] = False
        return CofiniteSet(0, m)

    def maximal_ideal(self) -> CofiniteSet:
        return self._maximal_ideal

    @cached_property
    def _canonical(self) -> CofiniteSet:
        f = self.frobenius
        flags = ~self.membership[: f + 1][::-1]  # x in Ω iff F - x not in S
        return CofiniteSet(0, flags)

    def canonical_ideal(self) -> CofiniteSet:
        return self._canonical


# ---------------------------------------------------------------------------
# construction


def from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    gens = sorted({int(g) for g in gens})
    if not gens:
        raise EmptyGenerators("at least one generator is required")
    if gens[0] <= 0:
        raise ValueError("generators must be positive integers")
    if math.gcd(*gens) != 1:
        raise GcdNotOne(f"gcd of {gens} is {math.gcd(*gens)}")
    if gens[0] == 1:
        raise IsAllOfN("generator 1 gives all of ℕ")
    # Frobenius number is below (min - 1)(max - 1)
    length = (gens[0] - 1) * (gens[-1] - 1) + gens[0] + 1
    return NumericalSemigroup(_accel.sieve(gens, length))


def from_gaps(gaps: Iterable[int]) -> NumericalSemigroup:
    gaps = sorted({int(g) for g in gaps})
    if not gaps:
        raise IsAllOfN("an empty gap set gives all of ℕ")
    if gaps[0] <= 0:
        raise ValueError("gaps must be positive integers")
    f = gaps[-1]
    member = np.ones(f + 2, dtype=np.bool_)
    member[gaps] = False
    closed = _accel.sumset(member, member, f + 1)
    bad = np.flatnonzero(closed & ~member[: f + 1])
    if bad.size:
        x = int(bad[0])
        s = next(s for s in range(x + 1) if member[s] and member[x - s])
        raise NotAdditivelyClosed(f"{s} + {x - s} = {x} is listed as a gap")
    return NumericalSemigroup(member)


def contains(S: NumericalSemigroup, x: int) -> bool:
    return x in S


# ---------------------------------------------------------------------------
# invariants


@dataclass(frozen=True)
class InvariantRecord:
    frobenius: int
    genus: int
    multiplicity: int
    sporadic_count: int
    type: int
    embedding_dimension: int
    reduction_number: int

    def as_dict(self) -> dict:
        return {
            "frobenius": self.frobenius,
            "genus": self.genus,
            "multiplicity": self.multiplicity,
            "sporadic_count": self.sporadic_count,
            "type": self.type,
            "embedding_dimension": self.embedding_dimension,
            "reduction_number": self.reduction_number,
        }


def semigroup_type(S: NumericalSemigroup) -> int:
    """``|(M − M) ∖ S|``."""
    M = S.maximal_ideal()
    return difference(M, M).count_not_in(S.as_set())


def pseudo_frobenius(S: NumericalSemigroup) -> list[int]:
    M = S.maximal_ideal()
    return difference(M, M).elements_not_in(S.as_set())


def reduction_number(S: NumericalSemigroup) -> int:
    """Least ``h`` with ``(h+1)M = hM + e``."""
    M, e = S.maximal_ideal(), S.multiplicity
    h, hM = 1, M
    while True:
        nxt = hM + M
        if nxt == hM.shift(e):
            return h
        h, hM = h + 1, nxt


def invariants(S: NumericalSemigroup) -> InvariantRecord:
    return InvariantRecord(
        frobenius=S.frobenius,
        genus=S.genus,
        multiplicity=S.multiplicity,
        sporadic_count=S.conductor - S.genus,
        type=semigroup_type(S),
        embedding_dimension=S.embedding_dimension,
        reduction_number=reduction_number(S),
    )


def apery_set(S: NumericalSemigroup, s: int) -> list[int]:
    """Members ``x`` of S with ``x - s`` not in S, ascending (0 included)."""
    s = int(s)
    if s == 0:
        raise ZeroModulus("the Apéry set needs a positive element")
    if s < 0 or s not in S:
        raise NotAMember(f"{s} is not a positive member of the semigroup")
    table = S.table(S.frobenius + s + 1)
    shifted = np.zeros_like(table)
    shifted[s:] = table[:-s]
    return np.flatnonzero(table & ~shifted).tolist()


def hilbert_function(S: NumericalSemigroup, h: int) -> int:
    """``|hM ∖ (h+1)M|`` with ``H(0) = 1``."""
    if h < 0:
        raise ValueError("h must be nonnegative")
    if h == 0:
        return 1
    M = S.maximal_ideal()
    hM = multiple(M, h)
    return hM.count_not_in(hM + M)


def hilbert_function_via_reduction(S: NumericalSemigroup, h: int) -> int:
    """Same values as :func:`hilbert_function`, computed as ``e - δ_h``.

    ``δ_h = |(h+1)(M - e) ∖ h(M - e)|`` where ``M - e`` is the translate of M
    by ``-e``; it vanishes from the reduction number on.
    """
    if h == 0:
        return 1
    e = S.multiplicity
    base = S.maximal_ideal().shift(-e)
    hB = multiple(base, h)
    return e - (hB + base).count_not_in(hB)


# ---------------------------------------------------------------------------
# predicates


@dataclass(frozen=True)
class Predicates:
    symmetric: bool
    med: bool
    arf: bool


def is_symmetric(S: NumericalSemigroup) -> bool:
    by_type = semigroup_type(S) == 1
    by_canonical = S.canonical_ideal() == S.as_set()
    if by_type != by_canonical:
        raise InconsistencyError(f"symmetry tests disagree on {S!r}")
    return by_type


def is_med(S: NumericalSemigroup) -> bool:
    return S.embedding_dimension == S.multiplicity


def is_arf(S: NumericalSemigroup) -> bool:
    return _accel.arf_closed(S.membership, 2 * S.frobenius + 2)


def predicates(S: NumericalSemigroup) -> Predicates:
    return Predicates(symmetric=is_symmetric(S), med=is_med(S), arf=is_arf(S))


# ---------------------------------------------------------------------------
# enumeration


def _children(member: np.ndarray, frob: int, genus: int) -> list[tuple[np.ndarray, int]]:
    # Minimal generators above F; gaps of the child stay below 2(g + 1).
    size = 2 * genus + 4
    table = np.ones(size, dtype=np.bool_)
    table[: member.size] = member[:size]
    table[member.size:] = True
    e = int(np.flatnonzero(table[1:])[0]) + 1
    dec = _accel.decomposable(table, e)
    out = []
    for x in range(frob + 1, size):
        if x > 0 and table[x] and not dec[x]:
            child = table.copy()
            child[x] = False
            out.append((child[: x + 2], x))
    return out


def enumerate_by_genus(g_max: int) -> dict[int, list[NumericalSemigroup]]:
    """All numerical semigroups of genus ``1..g_max``, keyed by genus.

    Walks the tree whose children remove one minimal generator larger than
    the Frobenius number.  Each genus list is sorted by gap sequence.
    """
    out: dict[int, list[NumericalSemigroup]] = {g: [] for g in range(1, g_max + 1)}
    if g_max < 1:
        return out
    level = [(np.ones(2, dtype=np.bool_), -1)]  # ℕ
    for g in range(1, g_max + 1):
        nxt = []
        for member, frob in level:
            nxt.extend(_children(member, frob, g - 1))
        out[g] = sorted((NumericalSemigroup(m) for m, _ in nxt), key=lambda S: S.gaps)
        level = nxt
    return out


def iter_semigroups(g_max: int):
    for g, group in enumerate_by_genus(g_max).items():
        yield from group
