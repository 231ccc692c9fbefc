import pytest

from oracles import BruteSemigroup
from semidil.classify import (
    ReductionData,
    almost_symmetric_routes,
    canonical_reduction_data,
    classify,
    is_almost_symmetric,
    is_nearly_gorenstein,
    is_two_agl,
    trace_ideal,
    verify_section3,
    wilf_holds,
)
from semidil.core import invariants, is_symmetric
from semidil.dilatation import dilate, valid_shifts
from semidil.errors import ShiftNotInDomain
from semidil.relative_ideal import CofiniteSet

# first semigroups in genus order, found by scanning with canonical_reduction_data
FIRST_TWO_AGL_GAPS = (1, 2, 4, 5)
FIRST_NOT_NEARLY_GORENSTEIN_GAPS = (1, 2, 4, 5)


def test_canonical_reduction_data(s35, s479):
    assert canonical_reduction_data(s35) == ReductionData(1, 0)
    assert canonical_reduction_data(s479) == ReductionData(2, 1)


def test_first_two_agl(family_8):
    first = next(S for S in family_8 if is_two_agl(S))
    assert first.gaps == FIRST_TWO_AGL_GAPS
    assert first.minimal_generators == (3, 7, 8)
    assert canonical_reduction_data(first) == ReductionData(2, 2)
    # excess by explicit sets
    B = BruteSemigroup(first.gaps)
    om = B.canonical() | set(range(B.F + 1, 40))
    two = {x + y for x in om for y in om if x + y < 40}
    assert sorted(two - om) == [2, 5]


def test_first_not_nearly_gorenstein(family_8):
    first = next(S for S in family_8 if not is_nearly_gorenstein(S))
    assert first.gaps == FIRST_NOT_NEARLY_GORENSTEIN_GAPS
    tr = trace_ideal(first)
    assert tr == CofiniteSet.interval(6)
    assert tr.issubset(first.maximal_ideal()) and tr != first.maximal_ideal()


def test_almost_symmetric_examples(s35, s479, s_type8):
    assert is_almost_symmetric(s479)
    assert is_almost_symmetric(s35)
    assert is_almost_symmetric(s_type8)
    assert not is_two_agl(s35)
    assert not is_two_agl(s479)


def test_trace(s35, s479):
    assert trace_ideal(s35) == s35.as_set()
    assert trace_ideal(s479) == s479.maximal_ideal()
    assert str(trace_ideal(s479)) == "{4,7,8,9,11→}"
    assert trace_ideal(dilate(s35, 10)) == dilate(s35, 10).maximal_ideal()


def test_nearly_gorenstein(s35, family_8):
    assert is_nearly_gorenstein(s35)
    for S in family_8:
        if is_almost_symmetric(S):
            assert is_nearly_gorenstein(S)


def test_wilf(s35, s479):
    assert wilf_holds(s35)
    inv = invariants(s35)
    assert inv.frobenius + 1 == inv.sporadic_count * inv.embedding_dimension == 8
    assert wilf_holds(s479)
    inv = invariants(s479)
    assert (inv.frobenius + 1, inv.sporadic_count * inv.embedding_dimension) == (11, 15)


def test_wilf_genus_12():
    from semidil.core import iter_semigroups

    assert all(wilf_holds(S) for S in iter_semigroups(12))


def test_family_coherence(family_10):
    for S in family_10:
        c = classify(S)
        assert len(set(almost_symmetric_routes(S))) == 1
        assert not (c.two_agl and c.nearly_gorenstein)
        assert not (c.two_agl and c.almost_symmetric)
        if c.symmetric:
            assert c.almost_symmetric
        tr = trace_ideal(S)
        assert tr.issubset(S.as_set())
        assert (tr == S.as_set()) == (invariants(S).type == 1)
        if invariants(S).type > 1:
            assert tr.issubset(S.maximal_ideal())
        omega = S.canonical_ideal()
        assert 0 in omega and S.frobenius not in omega and omega.conductor <= S.frobenius + 1
        rd = canonical_reduction_data(S)
        assert (rd.excess == 0) == (rd.reduction_number == 1) == is_symmetric(S)


def test_verify_section3_examples(s35, s_type8):
    rep = verify_section3(s35, 10)
    assert rep.passed
    T = dilate(s35, 10)
    want = s35.canonical_ideal().with_changes(add=[7], remove=[17])
    assert T.canonical_ideal() == want
    assert 16 in want and 17 not in want and 7 in want
    rep = verify_section3(s_type8, 5)
    assert rep.passed and is_almost_symmetric(dilate(s_type8, 5))
    with pytest.raises(ShiftNotInDomain):
        verify_section3(s35, 1)


def test_symmetric_dilatations_almost_symmetric(family_8):
    for S in family_8:
        if not is_symmetric(S):
            continue
        for a in valid_shifts(S, 6):
            T = dilate(S, a)
            assert is_almost_symmetric(T) and is_nearly_gorenstein(T)


def test_almost_symmetric_not_dilatation(s479):
    from semidil.dilatation import contraction_candidates

    assert is_almost_symmetric(s479) and contraction_candidates(s479) == []
