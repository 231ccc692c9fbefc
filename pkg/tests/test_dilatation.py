import math

import pytest

from oracles import BruteSemigroup
from semidil import errors
from semidil.core import apery_set, from_gaps, from_generators, invariants
from semidil.dilatation import (
    apery_non_generators,
    apery_of_dilatation,
    apery_union,
    canonical_decomposition,
    contract,
    contraction_candidates,
    dilatation_domain,
    dilate,
    generators_of_dilatation,
    transfer_report,
    two_gen_apery_closed_form,
    two_gen_dilatation_generators,
    valid_shifts,
)
from semidil.relative_ideal import CofiniteSet

from conftest import EXAMPLE_33_DILATED


def test_domain_examples(s35):
    D = dilatation_domain(from_generators([4, 7]))
    assert 10 in D and 10 not in from_generators([4, 7])
    D = dilatation_domain(s35)
    assert all(x in D for x in range(0, 40) if x in s35)
    # z with z + 2M inside M, by hand over a wide window
    B = BruteSemigroup(s35.gaps)
    two_m = {x + y for x in B.members(80) if x for y in B.members(80) if y}
    want = [z for z in range(-30, 30) if all((z + t) in B and z + t > 0 for t in two_m if t <= 60)]
    assert [z for z in range(-30, 30) if z in D] == want
    assert D == CofiniteSet.from_members([0], 2)


def test_dilate_examples(s35, s_type8):
    T = dilate(s35, 10)
    assert str(T) == "{0,13,15,16,18→}"
    assert dilate(s35, 0) is s35
    assert list(dilate(s_type8, 5).minimal_generators) == EXAMPLE_33_DILATED


def test_dilate_rejects(s35):
    with pytest.raises(errors.ShiftNotInDomain):
        dilate(s35, 1)
    with pytest.raises(errors.ShiftNotInDomain):
        dilate(s35, -3)


def test_contract(s35, s479):
    T = dilate(s35, 10)
    assert contract(T, 10) == s35
    assert contract(T, 0) is T
    for a in range(1, 4):
        with pytest.raises(errors.NotContractible):
            contract(s479, a)
    with pytest.raises(errors.NotContractible):
        contract(s479, 4)
    with pytest.raises(errors.ShiftTooLarge):
        contract(s479, 5)


def test_contraction_candidates(s35, s479):
    assert contraction_candidates(s479) == []
    assert 10 in contraction_candidates(dilate(s35, 10))
    assert contraction_candidates(from_generators([2, 3])) == []


def test_round_trip(family_8):
    for S in family_8:
        for a in valid_shifts(S, 6):
            T = dilate(S, a)
            assert contract(T, a) == S
            if a:
                assert a in contraction_candidates(T)


def test_apery_of_dilatation_example(s35):
    want = sorted({0, 15, 20, 23} | {16, 18, 19, 21, 22, 24, 25, 27, 30})
    assert apery_of_dilatation(s35, 10, 3) == want
    assert apery_set(dilate(s35, 10), 13) == want


def test_apery_needs_member_shift():
    S = from_generators([4, 7])
    with pytest.raises(errors.ShiftNotInSemigroup):
        apery_of_dilatation(S, 10, 4)
    T = dilate(S, 10)
    assert 31 not in apery_set(T, 14)
    assert 31 in apery_union(S, 10, 4)


def test_apery_of_dilatation_e_e(family_8):
    for S in family_8[:40]:
        e = S.multiplicity
        ap = apery_of_dilatation(S, e, e)
        assert len(ap) == 2 * e and 0 in ap and 3 * e in ap


def test_generators_of_dilatation(s35, s479):
    assert generators_of_dilatation(s35, 10) == [13, 15, 16, 18, 19, 20, 21, 22, 23, 24, 25, 27]
    assert generators_of_dilatation(s479, 4) == [8, 11, 12, 13, 15, 17, 18]
    assert list(from_gaps(list(dilate(s479, 4).gaps)).minimal_generators) == [8, 11, 12, 13, 15, 17, 18]
    with pytest.raises(errors.ShiftNotInSemigroup):
        generators_of_dilatation(s35, 2)


def test_generators_and_apery_family(family_8):
    for S in family_8:
        for a in range(1, 7):
            if a not in S:
                continue
            T = dilate(S, a)
            gens = generators_of_dilatation(S, a)
            assert gens == list(T.minimal_generators)
            assert len(gens) == S.embedding_dimension + a
            for s in range(S.multiplicity, S.frobenius + S.multiplicity + 1):
                if s in S:
                    assert apery_of_dilatation(S, a, s) == apery_set(T, s + a)


def test_union_fails_somewhere_off_semigroup(family_8):
    """Off S the three-part union is not always the Apéry set.

    It does coincide for some pairs (e.g. <2,3>, a=1), so only existence
    of mismatches is asserted, plus the <4,7>, a=10 witness.
    """
    mismatched = agreeing = 0
    for S in family_8:
        for a in valid_shifts(S, 6):
            if a in S:
                continue
            T = dilate(S, a)
            ss = [s for s in range(1, S.frobenius + S.multiplicity + 1) if s in S]
            if any(apery_union(S, a, s) != apery_set(T, s + a) for s in ss):
                mismatched += 1
            else:
                agreeing += 1
    assert mismatched > 0
    assert apery_union(from_generators([2, 3]), 1, 2) == apery_set(dilate(from_generators([2, 3]), 1), 3)
    S = from_generators([4, 7])
    assert apery_union(S, 10, 4) != apery_set(dilate(S, 10), 14)


def test_apery_non_generator_bijection(family_8):
    for S in family_8:
        e = S.multiplicity
        for a in valid_shifts(S, 6):
            T = dilate(S, a)
            src = apery_non_generators(S)
            dst = apery_non_generators(T)
            assert len(src) == len(dst) == e - S.embedding_dimension + 1
            assert sorted({0} | {x + 2 * a for x in src if x}) == dst


@pytest.mark.parametrize("n, m, a, lam, mu", [(3, 5, 10, 0, 2), (3, 5, 3, 1, 0), (2, 3, 2, 1, 0), (4, 7, 15, 2, 1)])
def test_canonical_decomposition(n, m, a, lam, mu):
    assert canonical_decomposition(n, m, a) == (lam, mu)


def test_canonical_decomposition_errors():
    with pytest.raises(errors.BadParameters):
        canonical_decomposition(4, 6, 8)
    with pytest.raises(errors.BadParameters):
        canonical_decomposition(5, 3, 8)
    with pytest.raises(errors.NotRepresentable):
        canonical_decomposition(3, 5, 7)


def test_two_gen_closed_forms():
    assert two_gen_apery_closed_form(3, 5, 10) == [0, 3, 5, 6, 8, 9, 11, 12, 14, 17]
    for n, m in [(3, 5), (4, 7), (5, 9)]:
        assert two_gen_apery_closed_form(n, m, n) == [k * m for k in range(n)]
    assert two_gen_dilatation_generators(3, 5, 10) == sorted({23} | {15, 20, 25} | {13, 18, 16, 21, 19, 24, 22, 27})
    assert two_gen_dilatation_generators(3, 5, 3) == generators_of_dilatation(from_generators([3, 5]), 3)
    assert two_gen_dilatation_generators(3, 5, 3) == [6, 8, 9, 11, 13]
    assert len(two_gen_dilatation_generators(2, 3, 2)) == 4


def test_two_gen_grid_small():
    for n in range(2, 9):
        for m in range(n + 1, 12):
            if math.gcd(n, m) != 1:
                continue
            S = from_generators([n, m])
            for a in range(1, 2 * n * m + 1):
                if a not in S:
                    continue
                B = BruteSemigroup(S.gaps)
                assert two_gen_apery_closed_form(n, m, a) == B.apery(a)
                T = dilate(S, a)
                assert two_gen_dilatation_generators(n, m, a) == BruteSemigroup(T.gaps).minimal_generators()
                assert len(two_gen_dilatation_generators(n, m, a)) == a + 2


def test_transfer_report_examples(s35, s_type8):
    rep = transfer_report(s35, 10)
    assert rep.passed and rep.failures() == []
    T = dilate(s35, 10)
    assert (invariants(s35).type, invariants(T).type) == (1, 11)
    assert (invariants(s35).embedding_dimension, invariants(T).embedding_dimension) == (2, 12)
    T = dilate(s_type8, 5)
    assert transfer_report(s_type8, 5).passed
    assert (invariants(T).type, invariants(T).embedding_dimension) == (13, 14)
    assert transfer_report(s35, 0).passed


def test_transfer_hilbert_example(s35):
    from semidil.core import hilbert_function

    assert hilbert_function(dilate(s35, 10), 2) == 13
