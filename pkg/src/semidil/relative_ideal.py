"""Integer sets that are bounded below and contain every large enough integer.

A :class:`CofiniteSet` is stored in normal form: its least element, its
conductor (least ``c`` with ``[c, ∞)`` inside the set, taken minimal) and a
boolean mask over ``[min_element, conductor)``.  Window sizes used by the
arithmetic are derived from those two numbers, never padded by guesswork.
"""
from __future__ import annotations

from typing import Iterable

import numpy as np

from . import _accel


class CofiniteSet:
    __slots__ = ("_start", "_mask", "_conductor")

    def __init__(self, start: int, mask, *, _normal: bool = False):
        """Build the set ``{start + i : mask[i]} ∪ [start + len(mask), ∞)``."""
        mask = np.asarray(mask, dtype=np.bool_)
        start = int(start)
        if not _normal:
            hits = np.flatnonzero(mask)
            if hits.size == 0:
                start, mask = start + mask.size, mask[:0]
            else:
                start += int(hits[0])
                mask = mask[hits[0]:]
                holes = np.flatnonzero(~mask)
                mask = mask[: int(holes[-1]) + 1] if holes.size else mask[:0]
            mask = mask.copy()
        mask.flags.writeable = False
        self._start = start
        self._mask = mask
        self._conductor = start + mask.size

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_members(cls, members: Iterable[int], conductor: int) -> "CofiniteSet":
        """Finite ``members`` together with every integer ``>= conductor``."""
        members = sorted({int(x) for x in members if x < conductor})
        if not members:
            return cls(conductor, np.zeros(0, dtype=np.bool_))
        lo = members[0]
        mask = np.zeros(conductor - lo, dtype=np.bool_)
        mask[np.array(members) - lo] = True
        return cls(lo, mask)

    @classmethod
    def interval(cls, lo: int) -> "CofiniteSet":
        """``[lo, ∞)``."""
        return cls(lo, np.zeros(0, dtype=np.bool_), _normal=True)

    # -- accessors ----------------------------------------------------------

    @property
    def min_element(self) -> int:
        return self._start

    @property
    def conductor(self) -> int:
        return self._conductor

    @property
    def sporadic(self) -> tuple[int, ...]:
        return tuple(int(x) + self._start for x in np.flatnonzero(self._mask))

    def window(self, lo: int, hi: int) -> np.ndarray:
        """Membership flags for the integers ``lo, ..., hi - 1``."""
        n = max(hi - lo, 0)
        out = np.zeros(n, dtype=np.bool_)
        c_rel = self._conductor - lo
        if c_rel < n:
            out[max(c_rel, 0):] = True
        a = max(self._start, lo)
        b = min(self._conductor, hi)
        if a < b:
            out[a - lo:b - lo] = self._mask[a - self._start:b - self._start]
        return out

    def members_below(self, hi: int) -> list[int]:
        return [x + self._start for x in np.flatnonzero(self.window(self._start, hi)).tolist()]

    def __contains__(self, x) -> bool:
        x = int(x)
        if x >= self._conductor:
            return True
        if x < self._start:
            return False
        return bool(self._mask[x - self._start])

    def __eq__(self, other) -> bool:
        if not isinstance(other, CofiniteSet):
            return NotImplemented
        return self._start == other._start and np.array_equal(self._mask, other._mask)

    def __hash__(self) -> int:
        return hash((self._start, self._mask.tobytes()))

    def __le__(self, other: "CofiniteSet") -> bool:
        return self.issubset(other)

    def issubset(self, other: "CofiniteSet") -> bool:
        if self._start < other._start:
            return False
        hi = max(self._conductor, other._conductor)
        mine = self.window(self._start, hi)
        theirs = other.window(self._start, hi)
        return not np.any(mine & ~theirs)

    def count_not_in(self, other: "CofiniteSet") -> int:
        """``|self ∖ other|``, always finite."""
        lo = min(self._start, other._start)
        hi = max(self._conductor, other._conductor)
        return int(np.count_nonzero(self.window(lo, hi) & ~other.window(lo, hi)))

    def elements_not_in(self, other: "CofiniteSet") -> list[int]:
        lo = min(self._start, other._start)
        hi = max(self._conductor, other._conductor)
        return (np.flatnonzero(self.window(lo, hi) & ~other.window(lo, hi)) + lo).tolist()

    def shift(self, k: int) -> "CofiniteSet":
        """The translate ``self + k``."""
        return CofiniteSet(self._start + int(k), self._mask, _normal=True)

    def with_changes(self, add: Iterable[int] = (), remove: Iterable[int] = ()) -> "CofiniteSet":
        add, remove = [int(x) for x in add], [int(x) for x in remove]
        lo = min([self._start, *add, *remove])
        hi = max([self._conductor, *(x + 1 for x in add), *(x + 1 for x in remove)])
        w = self.window(lo, hi)
        for x in add:
            w[x - lo] = True
        for x in remove:
            w[x - lo] = False
        return CofiniteSet(lo, w)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "CofiniteSet") -> "CofiniteSet":
        return sum_(self, other)

    def __sub__(self, other: "CofiniteSet") -> "CofiniteSet":
        return difference(self, other)

    def __mul__(self, h: int) -> "CofiniteSet":
        return multiple(self, h)

    __rmul__ = __mul__

    # -- rendering ----------------------------------------------------------

    def __str__(self) -> str:
        parts = [str(x) for x in self.sporadic]
        parts.append(f"{self._conductor}→")
        return "{" + ",".join(parts) + "}"

    def __repr__(self) -> str:
        return f"CofiniteSet({self})"

    def to_json(self) -> dict:
        return {"sporadic": list(self.sporadic), "conductor": self._conductor}

    @classmethod
    def from_json(cls, data: dict) -> "CofiniteSet":
        return cls.from_members(data["sporadic"], data["conductor"])


def sum_(I: CofiniteSet, J: CofiniteSet) -> CofiniteSet:
    """Minkowski sum ``{i + j}``."""
    lo = I.min_element + J.min_element
    hi = min(I.conductor + J.min_element, J.conductor + I.min_element)
    width = hi - lo
    if width <= 0:
        return CofiniteSet.interval(lo)
    a = I.window(I.min_element, I.min_element + width)
    b = J.window(J.min_element, J.min_element + width)
    return CofiniteSet(lo, _accel.sumset(a, b, width))


def difference(I: CofiniteSet, J: CofiniteSet) -> CofiniteSet:
    """The quotient ``I − J = {z : z + J ⊆ I}``."""
    lo = I.min_element - J.min_element
    hi = I.conductor - J.min_element
    width = hi - lo
    if width <= 0:
        return CofiniteSet.interval(lo)
    # z + j >= c(I) is automatic, so only j < c(I) - lo matter
    offsets = np.array(J.members_below(J.min_element + width), dtype=np.int64) - J.min_element
    big = I.window(I.min_element, I.min_element + 2 * width)
    return CofiniteSet(lo, _accel.quotient(big, offsets, width))


def multiple(I: CofiniteSet, h: int) -> CofiniteSet:
    """``hI``, the h-fold sumset of ``I``."""
    if h < 1:
        raise ValueError("h must be positive")
    out = I
    for _ in range(h - 1):
        out = sum_(out, I)
    return out


# ``sum`` would shadow the builtin
sumset = sum_
