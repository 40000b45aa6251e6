from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bounds import HSpec
from core import IntSet, dilate, generalized_union_sumset
from core.errors import HypothesisViolatedError, UnknownClaimKindError
from structure import ClaimKind, ExtremalKind, ap_witness, build_extremal, inverse_verdict, resolve_claim


def test_ap_witness():
    assert ap_witness([1, 3, 5]).to_dict() == {"is_ap": True, "first": 1, "diff": 2}
    assert not ap_witness(IntSet((1, 2, 4))).is_ap
    assert ap_witness([7]).diff == 0
    assert ap_witness(HSpec.of([2, 5])).diff == 3
    with pytest.raises(ValueError):
        ap_witness([])


@pytest.mark.parametrize(
    "kind, k, r, extras, A, expected",
    [
        (ExtremalKind.DIRECT_TIGHT, 5, 2, None, IntSet.interval(1, 5), 26),
        (ExtremalKind.FULL_RANGE_TIGHT, 4, 1, None, IntSet.interval(1, 4), 10),
        (ExtremalKind.HIGH_TIGHT, 5, 2, None, IntSet.interval(1, 5), 11),
        (ExtremalKind.ZERO_DIRECT_TIGHT, 5, 2, None, IntSet.interval(0, 4), 17),
        (ExtremalKind.ZERO_FULL_RANGE_TIGHT, 4, 1, [4], IntSet.interval(0, 3), 7),
        (ExtremalKind.ZERO_HIGH_TIGHT, 5, 2, None, IntSet.interval(0, 4), 15),
    ],
)
def test_extremal_constructions_are_tight(kind, k, r, extras, A, expected):
    built = build_extremal(kind, k=k, r=r, extras=extras)
    assert built.A == A
    assert built.expected == expected
    assert len(generalized_union_sumset(built.A, built.H, r)) == expected


def test_non_ap_gap():
    built = build_extremal("non_ap_gap", r=2, extras=[1, 2, 5])
    assert built.H == HSpec((1, 6)) and built.expected == 4
    top = build_extremal("non_ap_gap", r=2, extras=[1, 2, 5], top_pair=True)
    assert top.H == HSpec((5, 6))
    assert len(generalized_union_sumset(top.A, top.H, 2)) == 4
    with pytest.raises(HypothesisViolatedError):
        build_extremal("non_ap_gap", r=1, extras=[0, 1, 2])
    with pytest.raises(ValueError):
        build_extremal("non_ap_gap", k=4, r=1, extras=[1, 2, 5])


def test_non_ap_small():
    built = build_extremal("non_ap_small", extras=[1, 3])
    assert built.A == IntSet((1, 3, 4))
    assert built.expected == len(generalized_union_sumset(built.A, [1, 2, 3], 1))
    zero = build_extremal("non_ap_small", extras=[1, 3], H=[1, 2], with_zero=True)
    assert zero.A == IntSet((0, 1, 3, 4))
    with pytest.raises(HypothesisViolatedError):
        build_extremal("non_ap_small", r=2, extras=[1, 3])


def test_extremal_hypotheses():
    with pytest.raises(HypothesisViolatedError):
        build_extremal("direct_tight", k=2, r=2)
    with pytest.raises(HypothesisViolatedError):
        build_extremal("zero_full_range_tight", k=4, r=1, extras=[2])
    with pytest.raises(ValueError):
        build_extremal("high_tight", r=2)


def test_inverse_main_equality():
    report = inverse_verdict(IntSet.interval(1, 6), [2, 3], 2, "main")
    assert report.hypotheses_ok
    assert report.bound == 16 and report.cardinality == 16
    assert report.equality and report.conclusion_ok
    assert report.to_dict()["claim"] == "main"


def test_inverse_dilated_progression():
    report = inverse_verdict(dilate(IntSet.interval(1, 6), 2), [2, 3], 2, ClaimKind.MAIN)
    assert report.equality and report.conclusion_ok
    assert report.a_ap.diff == 2


def test_inverse_no_equality():
    report = inverse_verdict(IntSet((1, 2, 4, 8, 16, 32)), [2, 3], 2, "main")
    assert report.cardinality > report.bound
    assert report.conclusion_ok is None


def test_inverse_hypotheses():
    report = inverse_verdict(IntSet.interval(1, 5), [2, 3], 2, "main")
    assert not report.hypotheses_ok
    assert "k >= 6" in report.violations
    assert report.conclusion_ok is None
    with pytest.raises(UnknownClaimKindError):
        inverse_verdict(IntSet.interval(1, 6), [2, 3], 2, "bogus")


def test_inverse_single_fold_and_restricted():
    single = inverse_verdict(IntSet.interval(1, 5), [3], 2)
    assert single.claim_kind == ClaimKind.SINGLE_FOLD
    assert single.bound == 11 and single.conclusion_ok

    restricted = inverse_verdict(IntSet.interval(1, 6), [1, 2], 1, "restricted")
    assert restricted.bound == 11 and restricted.equality
    assert restricted.conclusion_ok


def test_resolve_claim():
    assert resolve_claim(IntSet.interval(1, 6), HSpec.of([2, 3]), 2) == ClaimKind.MAIN
    assert resolve_claim(IntSet.interval(1, 5), HSpec.of([2, 3, 9]), 2) == ClaimKind.LAST_HIGH
    assert resolve_claim(IntSet.interval(1, 5), HSpec.of([8, 9]), 2) == ClaimKind.ALL_HIGH
    assert resolve_claim(IntSet.interval(0, 5), HSpec.of([1, 2]), 2) == ClaimKind.ZERO_MAIN
    assert resolve_claim(IntSet.interval(1, 5), HSpec.of([4]), 2) == ClaimKind.SINGLE_FOLD


@pytest.mark.parametrize("k", [4, 5, 6])
@pytest.mark.parametrize("r", [1, 2, 3])
def test_extremal_families_over_k_and_r(k, r):
    for kind in ExtremalKind:
        if kind in (ExtremalKind.NON_AP_GAP, ExtremalKind.NON_AP_SMALL):
            continue
        built = build_extremal(kind, k=k, r=r)
        assert len(generalized_union_sumset(built.A, built.H, r)) == built.expected, kind.value


@settings(max_examples=50, deadline=None)
@given(elements=st.lists(st.integers(1, 9), min_size=3, max_size=5, unique=True), r=st.integers(1, 3))
def test_non_ap_gap_gives_k_plus_one(elements, r):
    for top_pair in (False, True):
        built = build_extremal("non_ap_gap", r=r, extras=elements, top_pair=top_pair)
        assert len(generalized_union_sumset(built.A, built.H, r)) == built.A.k + 1


@pytest.mark.parametrize("size", [1, 2, 3, 4, 5])
def test_ap_witness_agrees_with_pairwise_differences(size):
    for elements in combinations(range(10), size):
        witness = ap_witness(elements)
        pairwise = all(
            elements[j] - elements[i] == (j - i) * (elements[1] - elements[0])
            for i, j in combinations(range(size), 2)
        )
        assert witness.is_ap == pairwise, elements
        if witness.is_ap:
            assert tuple(witness.first + i * witness.diff for i in range(size)) == elements


@pytest.mark.parametrize("k", [3, 4, 5])
@pytest.mark.parametrize("r", [1, 2, 3])
def test_non_ap_gap_on_grid(k, r):
    for elements in combinations(range(1, 10), k):
        for top_pair in (False, True):
            built = build_extremal("non_ap_gap", r=r, extras=list(elements), top_pair=top_pair)
            assert len(generalized_union_sumset(built.A, built.H, r)) == k + 1, (elements, top_pair)
