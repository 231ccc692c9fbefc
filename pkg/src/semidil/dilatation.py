"""Dilatations ``S + a = {0} ∪ (M + a)`` and their inverse contractions."""
from __future__ import annotations

import math
from dataclasses import dataclass, fields

import numpy as np

from .core import (
    NumericalSemigroup,
    apery_set,
    hilbert_function,
    invariants,
    is_arf,
    is_med,
)
from .errors import (
    BadParameters,
    IsAllOfN,
    NotContractible,
    NotRepresentable,
    ShiftNotInDomain,
    ShiftNotInSemigroup,
    ShiftTooLarge,
)
from .relative_ideal import CofiniteSet, difference


def dilatation_domain(S: NumericalSemigroup) -> CofiniteSet:
    """``M − 2M``; its nonnegative members are the admissible shifts."""
    M = S.maximal_ideal()
    return difference(M, M + M)


def valid_shifts(S: NumericalSemigroup, a_max: int) -> list[int]:
    D = dilatation_domain(S)
    return [a for a in range(a_max + 1) if a in D]


def _check_shift(S: NumericalSemigroup, a: int) -> int:
    a = int(a)
    if a < 0 or a not in dilatation_domain(S):
        raise ShiftNotInDomain(f"a={a} is not a nonnegative element of M-2M for {S!r}")
    return a


def dilate(S: NumericalSemigroup, a: int) -> NumericalSemigroup:
    a = _check_shift(S, a)
    if a == 0:
        return S
    member = np.zeros(S.frobenius + a + 2, dtype=np.bool_)
    member[0] = True
    member[a + 1:] = S.membership[1:]
    return NumericalSemigroup(member)


def _contract_unchecked(T: NumericalSemigroup, a: int) -> NumericalSemigroup:
    e = T.multiplicity
    if a > e:
        raise ShiftTooLarge(f"a={a} exceeds the multiplicity {e}")
    if a == e:
        raise NotContractible(f"a={a} equals the multiplicity; M_T - a would contain 0")
    M = T.maximal_ideal()
    if not (M + M).issubset(M.shift(a)):
        raise NotContractible(f"2M is not contained in M + {a}")
    member = np.zeros(T.frobenius - a + 2, dtype=np.bool_)
    member[0] = True
    member[1:] = T.membership[a + 1:]
    try:
        return NumericalSemigroup(member)
    except IsAllOfN:
        raise NotContractible(f"contracting by {a} gives all of ℕ") from None


def contract(T: NumericalSemigroup, a: int) -> NumericalSemigroup:
    """The semigroup S with ``dilate(S, a) == T``."""
    a = int(a)
    if a < 0:
        raise ShiftNotInDomain("shift must be nonnegative")
    if a == 0:
        return T
    return _contract_unchecked(T, a)


def contraction_candidates(T: NumericalSemigroup) -> list[int]:
    out = []
    for a in range(1, T.multiplicity):
        try:
            _contract_unchecked(T, a)
        except NotContractible:
            continue
        out.append(a)
    return out


# ---------------------------------------------------------------------------
# Apéry sets and generators of a dilatation


def definitional_apery(S: NumericalSemigroup, a: int) -> list[int]:
    """``{x ∈ S : x − a ∉ S}`` for any ``a >= 0``, member or not."""
    table = S.table(S.frobenius + a + 2)
    return [x for x in np.flatnonzero(table).tolist() if (x - a) not in S]


def apery_union(S: NumericalSemigroup, a: int, s: int) -> list[int]:
    """The three-part candidate for ``Ap(S + a, s + a)``.

    ``{0, s + 2a} ∪ (Ap(S, s)∖{0}) + a ∪ (Ap(S, a)∖{0}) + s + a``, evaluated
    without checking that ``a`` belongs to S.
    """
    out = {0, s + 2 * a}
    out.update(x + a for x in apery_set(S, s) if x)
    out.update(b + s + a for b in definitional_apery(S, a) if b)
    return sorted(out)


def _require_member(S: NumericalSemigroup, a: int, what: str = "a") -> int:
    a = int(a)
    if a <= 0 or a not in S:
        raise ShiftNotInSemigroup(f"{what}={a} must be a positive member of {S!r}")
    return a


def apery_of_dilatation(S: NumericalSemigroup, a: int, s: int) -> list[int]:
    """``Ap(S + a, s + a)`` from the Apéry sets of S; needs ``a ∈ S``."""
    a = _require_member(S, a)
    s = _require_member(S, s, "s")
    return apery_union(S, a, s)


def _is_decomposable(S: NumericalSemigroup, x: int) -> bool:
    """``x ∈ S ∖ (Γ(S) ∪ {0})``."""
    return x > 0 and x in S and x not in S.minimal_generators


def generators_of_dilatation(S: NumericalSemigroup, a: int) -> list[int]:
    a = _require_member(S, a)
    e = S.multiplicity
    out = {e + a, e + 2 * a}
    out.update(x + a for x in apery_set(S, e) if x and not _is_decomposable(S, x - a))
    out.update(b + e + a for b in apery_set(S, a) if not _is_decomposable(S, b + e - a))
    return sorted(out)


def apery_non_generators(S: NumericalSemigroup) -> list[int]:
    """``Ap(S, e) ∖ Γ(S)``; its size is ``e − ν + 1``."""
    gens = set(S.minimal_generators)
    return [x for x in apery_set(S, S.multiplicity) if x not in gens]


# ---------------------------------------------------------------------------
# two-generator closed forms


def canonical_decomposition(n: int, m: int, a: int) -> tuple[int, int]:
    """``(λ, μ)`` with ``a = λn + μm`` and ``0 <= μ < n``."""
    if not (2 <= n < m) or math.gcd(n, m) != 1:
        raise BadParameters(f"need coprime 2 <= n < m, got ({n}, {m})")
    if a <= 0:
        raise BadParameters("a must be positive")
    mu = (a * pow(m, -1, n)) % n
    lam, rem = divmod(a - mu * m, n)
    assert rem == 0
    if lam < 0:
        raise NotRepresentable(f"{a} is not in <{n},{m}>")
    return lam, mu


def two_gen_apery_closed_form(n: int, m: int, a: int) -> list[int]:
    lam, mu = canonical_decomposition(n, m, a)
    out = {x * n + y * m for x in range(lam) for y in range(n + mu)}
    out.update(x * n + y * m for x in range(lam, m) for y in range(mu))
    return sorted(out)


def two_gen_dilatation_generators(n: int, m: int, a: int) -> list[int]:
    lam, mu = canonical_decomposition(n, m, a)
    out = {n + 2 * a}
    if lam == 0:
        out.update(y * m + a for y in range(1, mu + 2))
        out.update(x * n + y * m + a for x in range(1, m) for y in range(mu))
    else:
        out.update(y * m + a for y in range(1, n))
        out.update(x * n + y * m + a for x in range(1, lam) for y in range(n + mu))
        out.update(lam * n + y * m + a for y in range(mu + 2))
        out.update(x * n + y * m + a for x in range(lam + 1, m + 1) for y in range(mu))
    return sorted(out)


# ---------------------------------------------------------------------------
# transfer of invariants


@dataclass(frozen=True)
class TransferReport:
    frobenius: bool
    genus: bool
    multiplicity: bool
    sporadic_count: bool
    type: bool
    hilbert: bool
    embedding_dimension: bool
    med_stable: bool
    arf_stable: bool
    wilf_transferred: bool
    hilbert_checked_up_to: int

    @property
    def passed(self) -> bool:
        return all(getattr(self, f.name) for f in fields(self) if f.name != "hilbert_checked_up_to")

    def failures(self) -> list[str]:
        return [f.name for f in fields(self) if f.name != "hilbert_checked_up_to" and not getattr(self, f.name)]

    def as_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def _wilf(inv) -> bool:
    return inv.frobenius + 1 <= inv.sporadic_count * inv.embedding_dimension


def transfer_report(S: NumericalSemigroup, a: int) -> TransferReport:
    T = dilate(S, a)
    iS, iT = invariants(S), invariants(T)
    top = iS.reduction_number + 2
    hilbert = all(hilbert_function(T, h) == hilbert_function(S, h) + a for h in range(1, top + 1))
    return TransferReport(
        frobenius=iT.frobenius == iS.frobenius + a,
        genus=iT.genus == iS.genus + a,
        multiplicity=iT.multiplicity == iS.multiplicity + a,
        sporadic_count=iT.sporadic_count == iS.sporadic_count,
        type=iT.type == iS.type + a,
        hilbert=hilbert,
        embedding_dimension=iT.embedding_dimension == iS.embedding_dimension + a,
        med_stable=is_med(S) == is_med(T),
        arf_stable=is_arf(S) == is_arf(T),
        wilf_transferred=(not _wilf(iS)) or _wilf(iT),
        hilbert_checked_up_to=top,
    )
