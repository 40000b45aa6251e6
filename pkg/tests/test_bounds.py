from itertools import combinations

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from bounds import (
    ClassicalKind,
    HSpec,
    Regime,
    classical_lower,
    classify_regime,
    high_range_lower,
    pivot_lower,
    pivot_lower_single_sum,
    single_fold_lower,
    zero_main_lower,
)
from core import FoldParams, IntSet, generalized_fold_sumset, generalized_union_sumset
from core.errors import BadPivotError, EmptyInputError, HypothesisViolatedError, UnclassifiableError

h_specs = st.lists(st.integers(1, 12), min_size=1, max_size=4, unique=True).map(HSpec.of)


def test_hspec_basics():
    H = HSpec.of([5, 1, 3])
    assert H.hs == (1, 3, 5)
    assert H.with_sentinel() == (0, 1, 3, 5)
    assert H.decomposition(2) == [(0, 0), (0, 1), (1, 1), (2, 1)]
    assert H.pivot(2) == 2
    assert H.first_at_least(4) == 3 and H.first_at_least(6) is None
    assert str(HSpec.interval(2, 5)) == "[2,5]"
    with pytest.raises(EmptyInputError):
        HSpec(())
    with pytest.raises(ValueError):
        HSpec((0, 1))
    with pytest.raises(BadPivotError):
        H.pivot(6)


@pytest.mark.parametrize(
    "k, H, r, expected",
    [
        (5, [2, 3], 2, 13),
        (5, [1, 2], 1, 9),
        (4, [1, 3], 3, 11),
        (5, [3, 4, 5], 2, 18),
    ],
)
def test_pivot_lower_values(k, H, r, expected):
    report = pivot_lower(k, H, r)
    assert report.value == expected
    assert sum(term.value for term in report.terms) == expected
    assert pivot_lower_single_sum(k, H, r) == expected


def test_pivot_lower_rejects_r_above_max():
    with pytest.raises(BadPivotError):
        pivot_lower(5, [2, 3], 4)


def test_single_fold_lower():
    assert single_fold_lower(5, 3, 2).value == 11
    # r = 1 is hk - h^2 + 1
    assert single_fold_lower(6, 2, 1).value == 2 * 6 - 4 + 1
    with pytest.raises(HypothesisViolatedError) as err:
        single_fold_lower(5, 1, 2)
    assert err.value.violations == ["r <= h"]
    assert single_fold_lower(5, 1, 2, strict=False).violations == ("r <= h",)


def test_classical_lower():
    assert classical_lower(ClassicalKind.UNRESTRICTED_FOLD, 5, 3).value == 13
    assert classical_lower("restricted_fold", 5, 2).value == 7
    assert classical_lower("unrestricted_union", 5, [2, 3]).value == 14
    assert classical_lower("restricted_union", 5, [1, 2]).value == 9
    with pytest.raises(TypeError):
        classical_lower("unrestricted_fold", 5, [1, 2])
    with pytest.raises(TypeError):
        classical_lower("restricted_union", 5, 3)
    with pytest.raises(HypothesisViolatedError):
        classical_lower("restricted_union", 5, [2, 6])


def test_zero_main_lower():
    assert zero_main_lower(5, HSpec.interval(1, 5), 2).value == 17
    # the formula overshoots the enumerated cardinality on this instance
    assert zero_main_lower(6, [3, 4], 2).value == 19
    assert len(generalized_union_sumset(IntSet.interval(0, 5), [3, 4], 2)) == 18
    assert "k >= 4" in zero_main_lower(3, [1, 2], 2, strict=False).violations


def test_high_range_lower():
    assert high_range_lower("all_high", 5, [8, 9, 10], 2).value == 11
    split = high_range_lower(Regime.SPLIT_HIGH, 5, [2, 3, 9], 2)
    assert split.value == 15 and split.t0 == 3
    assert high_range_lower("split_high", 5, [2, 3, 9], 2, t0=3).value == 15
    assert high_range_lower("zero_all_high", 5, HSpec.interval(6, 8), 2).value == 15
    with pytest.raises(ValueError):
        high_range_lower("main", 5, [2, 3], 2)
    with pytest.raises(ValueError):
        high_range_lower("split_high", 5, [2, 3, 9], 2, t0=5)
    loose = high_range_lower("split_high", 5, [2, 3], 2, strict=False)
    assert "some h_i >= (k-1)r" in loose.violations


def test_classify_regime():
    main = classify_regime(5, 2, [2, 3], False)
    assert main.regime == Regime.MAIN and main.value == 13 and main.hypotheses_ok

    high = classify_regime(5, 2, [8, 9, 10], False)
    assert high.regime == Regime.ALL_HIGH and high.value == 11

    zero = classify_regime(5, 2, HSpec.interval(1, 5), True)
    assert zero.regime == Regime.ZERO_MAIN and zero.value == 17

    split = classify_regime(5, 2, [2, 3, 9], False)
    assert split.tag == "split_high(3)" and split.value == 15

    unrestricted = classify_regime(5, 4, [2, 3], False)
    assert unrestricted.regime == Regime.UNRESTRICTED and unrestricted.value == 14

    single = classify_regime(5, 2, [3], False)
    assert "t >= 2" in single.violations

    with pytest.raises(UnclassifiableError):
        classify_regime(3, 1, [4, 5], False)


@settings(max_examples=80, deadline=None)
@given(H=h_specs, k=st.integers(3, 8), r=st.integers(1, 6))
def test_pivot_forms_agree(H, k, r):
    assume(r <= H.max)
    assert pivot_lower(k, H, r).value == pivot_lower_single_sum(k, H, r)


@settings(max_examples=80, deadline=None)
@given(H=h_specs, k=st.integers(3, 8))
def test_special_case_reductions(H, k):
    assert pivot_lower(k, H, H.max).value == H.max * (k - 1) + H.t
    if H.max <= k - 1:
        restricted = classical_lower("restricted_union", k, H)
        assert pivot_lower(k, H, 1).value == restricted.value


@settings(max_examples=40, deadline=None)
@given(
    elements=st.lists(st.integers(1, 9), min_size=3, max_size=5, unique=True),
    r=st.integers(1, 3),
    data=st.data(),
)
def test_main_bound_holds(elements, r, data):
    A = IntSet(tuple(sorted(elements)))
    top = (A.k - 1) * r - 1
    assume(top >= max(r, 2))
    hs = data.draw(st.lists(st.integers(1, top), min_size=2, max_size=3, unique=True))
    H = HSpec.of(hs)
    assume(r <= H.max)
    assert len(generalized_union_sumset(A, H, r)) >= pivot_lower(A.k, H, r).value


@pytest.mark.parametrize("k", [2, 3, 4])
@pytest.mark.parametrize("r", [1, 2, 3])
def test_single_fold_bound_on_grid(k, r):
    for elements in combinations(range(1, 10), k):
        A = IntSet(elements)
        for h in range(r, k * r + 1):
            report = single_fold_lower(k, h, r, strict=False)
            assert not report.violations
            assert len(generalized_fold_sumset(A, FoldParams(h, r))) >= report.value, (elements, h)
