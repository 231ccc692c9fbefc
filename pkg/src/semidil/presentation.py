"""Size of a minimal presentation from factorization graphs.

For a member ``n`` the graph has the minimal generators ``g`` with
``n − g ∈ S`` as vertices, and joins ``g, h`` when ``n − g − h ∈ S``.  Each
graph contributes ``components − 1`` relations.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, TextIO

from . import _accel
from .core import NumericalSemigroup
from .dilatation import dilate, valid_shifts
from .errors import ShiftNotInSemigroup


@dataclass(frozen=True)
class PresentationProfile:
    betti_contributions: dict[int, int] = field(default_factory=dict)
    bound: int = 0

    @property
    def mu(self) -> int:
        return sum(self.betti_contributions.values())

    @property
    def betti_elements(self) -> list[int]:
        return sorted(self.betti_contributions)


def search_bound(S: NumericalSemigroup) -> int:
    # past F + 2 max(Γ) every graph is complete
    return S.frobenius + 2 * max(S.minimal_generators)


def betti_contributions(S: NumericalSemigroup, bound: int | None = None) -> PresentationProfile:
    if bound is None:
        bound = search_bound(S)
    counts = _accel.betti_counts(S.membership, S.minimal_generators, bound)
    contrib = {int(n): int(c) for n, c in enumerate(counts) if c > 0}
    return PresentationProfile(contrib, bound)


def presentation_size(S: NumericalSemigroup) -> int:
    return betti_contributions(S).mu


def question_2_8_gap(S: NumericalSemigroup, a: int, require_member: bool = False) -> int:
    """``μ(S + a) − μ(S) − aν(S) − a(a − 1)/2``; zero when the conjectured formula holds.

    With ``require_member`` the shift must also lie in S.
    """
    if require_member and a != 0 and a not in S:
        raise ShiftNotInSemigroup(f"a={a} is not in {S!r}")
    T = dilate(S, a)
    if a == 0:
        return 0
    return presentation_size(T) - presentation_size(S) - a * S.embedding_dimension - a * (a - 1) // 2


@dataclass(frozen=True)
class ScanRecord:
    generators: tuple[int, ...]
    a: int
    mu_s: int
    mu_t: int
    gap: int

    def log_line(self) -> str:
        gens = ",".join(map(str, self.generators))
        return f"gens={gens} a={self.a} mu_S={self.mu_s} mu_T={self.mu_t} gap={self.gap}"

    def as_dict(self) -> dict:
        return {"generators": list(self.generators), "a": self.a, "mu_S": self.mu_s, "mu_T": self.mu_t, "gap": self.gap}


def scan_pairs(
    semigroups: Iterable[NumericalSemigroup],
    a_max: int,
    members_only: bool = False,
    log: TextIO | None = None,
) -> list[ScanRecord]:
    """Measure the presentation-size gap for every ``(S, a)`` with ``1 <= a <= a_max``.

    Records are written to ``log`` as they are produced so that a nonzero gap
    survives an interrupted run.
    """
    out = []
    for S in semigroups:
        mu_s = presentation_size(S)
        nu = S.embedding_dimension
        for a in valid_shifts(S, a_max):
            if a == 0 or (members_only and a not in S):
                continue
            mu_t = presentation_size(dilate(S, a))
            rec = ScanRecord(S.minimal_generators, a, mu_s, mu_t, mu_t - mu_s - a * nu - a * (a - 1) // 2)
            out.append(rec)
            if log is not None:
                log.write(rec.log_line() + "\n")
                log.flush()
    return out
