"""Hot integer kernels over boolean membership tables.

Every kernel exists twice: a numba ``@njit`` loop and a vectorised numpy
version.  The public names at the bottom of the module are bound to one of
the two at import time.  Set ``SEMIDIL_DISABLE_NUMBA=1`` to force the numpy
path (numba is also skipped when it cannot be imported).
"""
from __future__ import annotations

import os

import numpy as np

try:
    import numba as nb

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAS_NUMBA = False

USE_NUMBA = HAS_NUMBA and os.environ.get("SEMIDIL_DISABLE_NUMBA", "") not in ("1", "true", "yes")


# ---------------------------------------------------------------------------
# numpy implementations


def sieve_numpy(gens: np.ndarray, length: int) -> np.ndarray:
    member = np.zeros(length, dtype=np.bool_)
    member[0] = True
    for g in gens:
        g = int(g)
        if g >= length:
            continue
        for r in range(g):
            col = member[r::g]
            np.logical_or.accumulate(col, out=col)
    return member


def sumset_numpy(a: np.ndarray, b: np.ndarray, width: int) -> np.ndarray:
    if a.size == 0 or b.size == 0:
        return np.zeros(width, dtype=np.bool_)
    out = np.convolve(a.astype(np.int64), b.astype(np.int64))[:width] > 0
    if out.size < width:
        out = np.concatenate([out, np.zeros(width - out.size, dtype=np.bool_)])
    return out


def quotient_numpy(big: np.ndarray, offsets: np.ndarray, width: int) -> np.ndarray:
    if offsets.size == 0:
        return np.ones(width, dtype=np.bool_)
    idx = np.arange(width)[:, None] + offsets[None, :]
    return big[idx].all(axis=1)


def decomposable_numpy(member: np.ndarray, lo: int) -> np.ndarray:
    m = member.copy()
    m[:lo] = False
    return sumset_numpy(m, m, member.size)


def arf_numpy(member: np.ndarray, bound: int) -> bool:
    ext = np.ones(2 * bound + 1, dtype=np.bool_)
    ext[: member.size] = member
    elems = np.flatnonzero(ext[: bound + 1])
    for z in elems:
        ys = elems[elems >= z]
        total = ys[:, None] + ys[None, :] - z
        if not ext[total].all():
            return False
    return True


def components_numpy(adj: np.ndarray) -> int:
    k = adj.shape[0]
    reach = adj | np.eye(k, dtype=np.bool_)
    while True:
        nxt = (reach.astype(np.int64) @ reach.astype(np.int64)) > 0
        if np.array_equal(nxt, reach):
            break
        reach = nxt
    return len({row.tobytes() for row in reach})


def betti_numpy(member: np.ndarray, gens: np.ndarray, bound: int) -> np.ndarray:
    ext = np.ones(bound + 1, dtype=np.bool_)
    ext[: min(member.size, bound + 1)] = member[: bound + 1]
    out = np.zeros(bound + 1, dtype=np.int64)
    for n in range(bound + 1):
        if not ext[n]:
            continue
        diff = n - gens
        verts = gens[(diff >= 0) & ext[np.maximum(diff, 0)]]
        if verts.size < 2:
            continue
        pair = n - verts[:, None] - verts[None, :]
        adj = (pair >= 0) & ext[np.maximum(pair, 0)]
        out[n] = components_numpy(adj) - 1
    return out


# ---------------------------------------------------------------------------
# numba implementations

if HAS_NUMBA:

    @nb.njit(cache=True)
    def sieve_numba(gens, length):
        member = np.zeros(length, dtype=np.bool_)
        member[0] = True
        for x in range(1, length):
            for g in gens:
                if g <= x and member[x - g]:
                    member[x] = True
                    break
        return member

    @nb.njit(cache=True)
    def sumset_numba(a, b, width):
        out = np.zeros(width, dtype=np.bool_)
        for i in range(min(a.size, width)):
            if not a[i]:
                continue
            for j in range(min(b.size, width - i)):
                if b[j]:
                    out[i + j] = True
        return out

    @nb.njit(cache=True)
    def quotient_numba(big, offsets, width):
        out = np.ones(width, dtype=np.bool_)
        for z in range(width):
            for j in offsets:
                if not big[z + j]:
                    out[z] = False
                    break
        return out

    @nb.njit(cache=True)
    def decomposable_numba(member, lo):
        n = member.size
        out = np.zeros(n, dtype=np.bool_)
        for x in range(2 * lo, n):
            for y in range(lo, x // 2 + 1):
                if member[y] and member[x - y]:
                    out[x] = True
                    break
        return out

    @nb.njit(cache=True)
    def arf_numba(member, bound):
        ext = np.ones(2 * bound + 1, dtype=np.bool_)
        ext[: member.size] = member
        for z in range(bound + 1):
            if not ext[z]:
                continue
            for y in range(z, bound + 1):
                if not ext[y]:
                    continue
                for x in range(y, bound + 1):
                    if ext[x] and not ext[x + y - z]:
                        return False
        return True

    @nb.njit(cache=True)
    def _find(parent, i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    @nb.njit(cache=True)
    def betti_numba(member, gens, bound):
        ext = np.ones(bound + 1, dtype=np.bool_)
        m = min(member.size, bound + 1)
        ext[:m] = member[:m]
        k = gens.size
        out = np.zeros(bound + 1, dtype=np.int64)
        parent = np.empty(k, dtype=np.int64)
        for n in range(bound + 1):
            if not ext[n]:
                continue
            nverts = 0
            for i in range(k):
                d = n - gens[i]
                if d >= 0 and ext[d]:
                    parent[i] = i
                    nverts += 1
                else:
                    parent[i] = -1
            if nverts < 2:
                continue
            comps = nverts
            for i in range(k):
                if parent[i] < 0:
                    continue
                for j in range(i + 1, k):
                    if parent[j] < 0:
                        continue
                    d = n - gens[i] - gens[j]
                    if d >= 0 and ext[d]:
                        ri = _find(parent, i)
                        rj = _find(parent, j)
                        if ri != rj:
                            parent[ri] = rj
                            comps -= 1
            out[n] = comps - 1
        return out


# ---------------------------------------------------------------------------
# dispatch

if USE_NUMBA:
    _sieve, _sumset, _quotient = sieve_numba, sumset_numba, quotient_numba
    _decomposable, _arf, _betti = decomposable_numba, arf_numba, betti_numba
else:
    _sieve, _sumset, _quotient = sieve_numpy, sumset_numpy, quotient_numpy
    _decomposable, _arf, _betti = decomposable_numpy, arf_numpy, betti_numpy


def sieve(gens, length: int) -> np.ndarray:
    """Membership table of the monoid generated by ``gens`` on ``[0, length)``."""
    return _sieve(np.asarray(gens, dtype=np.int64), int(length))


def sumset(a: np.ndarray, b: np.ndarray, width: int) -> np.ndarray:
    """``out[k]`` is true iff ``a[i] and b[j]`` for some ``i + j == k < width``."""
    return _sumset(np.ascontiguousarray(a, dtype=np.bool_), np.ascontiguousarray(b, dtype=np.bool_), int(width))


def quotient(big: np.ndarray, offsets: np.ndarray, width: int) -> np.ndarray:
    """``out[z]`` is true iff ``big[z + j]`` for every ``j`` in ``offsets``.

    ``big`` must be long enough for ``width - 1 + max(offsets)``.
    """
    return _quotient(np.ascontiguousarray(big, dtype=np.bool_), np.asarray(offsets, dtype=np.int64), int(width))


def decomposable(member: np.ndarray, lo: int) -> np.ndarray:
    """Flags ``x`` that are a sum of two members that are both ``>= lo``."""
    return _decomposable(np.ascontiguousarray(member, dtype=np.bool_), int(lo))


def arf_closed(member: np.ndarray, bound: int) -> bool:
    """``x + y - z`` membership for members ``z <= y <= x <= bound``; beyond the table is all members."""
    return bool(_arf(np.ascontiguousarray(member, dtype=np.bool_), int(bound)))


def betti_counts(member: np.ndarray, gens, bound: int) -> np.ndarray:
    """Components-minus-one of each factorization graph for ``n`` in ``[0, bound]``."""
    return _betti(np.ascontiguousarray(member, dtype=np.bool_), np.asarray(gens, dtype=np.int64), int(bound))
