"""Almost symmetric, 2-AGL and nearly Gorenstein semigroups.

Also checks, for a concrete pair ``(S, S + a)``, that the canonical and
trace ideals move the way the dilatation theory says they should.
"""
from __future__ import annotations

from dataclasses import dataclass, fields

from .core import NumericalSemigroup, invariants, is_arf, is_med, is_symmetric
from .dilatation import dilate
from .errors import InconsistencyError
from .relative_ideal import CofiniteSet, difference, multiple


@dataclass(frozen=True)
class ReductionData:
    reduction_number: int
    excess: int


def canonical_reduction_data(S: NumericalSemigroup) -> ReductionData:
    """Reduction number of Ω and ``|2Ω ∖ Ω|``."""
    omega = S.canonical_ideal()
    h, cur = 1, omega
    while True:
        nxt = cur + omega
        if nxt == cur:
            break
        h, cur = h + 1, nxt
    return ReductionData(h, (omega + omega).count_not_in(omega))


def trace_ideal(S: NumericalSemigroup) -> CofiniteSet:
    omega = S.canonical_ideal()
    return omega + difference(S.as_set(), omega)


def almost_symmetric_routes(S: NumericalSemigroup) -> tuple[bool, bool, bool]:
    """Three independent tests: ``Ω + M ⊆ M``, ``Ω ⊆ M − M``, and the reduction criterion."""
    omega, M = S.canonical_ideal(), S.maximal_ideal()
    by_sum = (omega + M).issubset(M)
    by_quotient = omega.issubset(difference(M, M))
    rd = canonical_reduction_data(S)
    by_reduction = rd.reduction_number == 1 or (rd.reduction_number == 2 and rd.excess == 1)
    return by_sum, by_quotient, by_reduction


def is_almost_symmetric(S: NumericalSemigroup) -> bool:
    routes = almost_symmetric_routes(S)
    if len(set(routes)) != 1:
        raise InconsistencyError(f"almost-symmetry tests disagree on {S!r}: {routes}")
    return routes[0]


def is_two_agl(S: NumericalSemigroup) -> bool:
    return canonical_reduction_data(S) == ReductionData(2, 2)


def is_nearly_gorenstein(S: NumericalSemigroup) -> bool:
    tr, M = trace_ideal(S), S.maximal_ideal()
    ng = M.issubset(tr)
    if not is_symmetric(S) and ng != (tr == M):
        raise InconsistencyError(f"trace tests disagree on {S!r}")
    return ng


def wilf_holds(S: NumericalSemigroup) -> bool:
    inv = invariants(S)
    return inv.frobenius + 1 <= inv.sporadic_count * inv.embedding_dimension


@dataclass(frozen=True)
class Classification:
    symmetric: bool
    almost_symmetric: bool
    two_agl: bool
    nearly_gorenstein: bool
    med: bool
    arf: bool
    wilf: bool

    def as_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def classify(S: NumericalSemigroup) -> Classification:
    return Classification(
        symmetric=is_symmetric(S),
        almost_symmetric=is_almost_symmetric(S),
        two_agl=is_two_agl(S),
        nearly_gorenstein=is_nearly_gorenstein(S),
        med=is_med(S),
        arf=is_arf(S),
        wilf=wilf_holds(S),
    )


@dataclass(frozen=True)
class IdealTransferChecks:
    canonical_ideal_forward: bool
    canonical_ideal_backward: bool
    canonical_multiples_equal: bool
    canonical_chain_stationary: bool
    almost_symmetric_equivalent: bool
    two_agl_equivalent: bool
    trace_ideal_shifted: bool
    nearly_gorenstein_equivalent: bool
    disjoint_classes_base: bool
    disjoint_classes_dilated: bool

    @property
    def passed(self) -> bool:
        return all(getattr(self, f.name) for f in fields(self))

    def failures(self) -> list[str]:
        return [f.name for f in fields(self) if not getattr(self, f.name)]

    def as_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def _stationary_from_reduction(S: NumericalSemigroup) -> bool:
    omega = S.canonical_ideal()
    r = canonical_reduction_data(S).reduction_number
    base = multiple(omega, r)
    return all(multiple(omega, r + k) == base for k in (1, 2))


def verify_section3(S: NumericalSemigroup, a: int) -> IdealTransferChecks:
    """Canonical/trace ideal identities and class equivalences for ``(S, S + a)``.

    The multiples and trace identities are only claimed for non-symmetric S;
    for symmetric S those fields are vacuously true.
    """
    T = dilate(S, a)
    fs, ft = S.frobenius, T.frobenius
    om_s, om_t = S.canonical_ideal(), T.canonical_ideal()
    sym = is_symmetric(S)

    multiples_ok = True
    trace_ok = True
    if not sym:
        multiples_ok = all(multiple(om_s, i) == multiple(om_t, i) for i in (2, 3, 4))
        multiples_ok &= (
            canonical_reduction_data(S).reduction_number == canonical_reduction_data(T).reduction_number
        )
        trace_ok = trace_ideal(T) == trace_ideal(S).shift(a)

    two_agl_s, two_agl_t = is_two_agl(S), is_two_agl(T)
    ng_s, ng_t = is_nearly_gorenstein(S), is_nearly_gorenstein(T)
    return IdealTransferChecks(
        canonical_ideal_forward=om_t == om_s.with_changes(add=[fs]).with_changes(remove=[ft]),
        canonical_ideal_backward=om_s == om_t.with_changes(add=[ft]).with_changes(remove=[fs]),
        canonical_multiples_equal=multiples_ok,
        canonical_chain_stationary=_stationary_from_reduction(S) and _stationary_from_reduction(T),
        almost_symmetric_equivalent=is_almost_symmetric(S) == is_almost_symmetric(T),
        two_agl_equivalent=two_agl_s == two_agl_t,
        trace_ideal_shifted=trace_ok,
        nearly_gorenstein_equivalent=ng_s == ng_t,
        disjoint_classes_base=not (two_agl_s and ng_s),
        disjoint_classes_dilated=not (two_agl_t and ng_t),
    )
