# Copyright (c) 2025, Kousheek Chakraborty
# All rights reserved.
#
# SPDX-License-Identifier: BSD-3-Clause

from __future__ import annotations

from collections.abc import Iterable
from enum import Enum
from typing import NamedTuple

from bounds import HSpec
from core import IntSet, generalized_union_sumset, normalize_set
from core.errors import HypothesisViolatedError


class ExtremalKind(str, Enum):
    DIRECT_TIGHT = "direct_tight"
    FULL_RANGE_TIGHT = "full_range_tight"
    HIGH_TIGHT = "high_tight"
    ZERO_DIRECT_TIGHT = "zero_direct_tight"
    ZERO_FULL_RANGE_TIGHT = "zero_full_range_tight"
    ZERO_HIGH_TIGHT = "zero_high_tight"
    NON_AP_GAP = "non_ap_gap"
    NON_AP_SMALL = "non_ap_small"


# smallest k each construction is stated for
MIN_K = {
    ExtremalKind.DIRECT_TIGHT: 3,
    ExtremalKind.FULL_RANGE_TIGHT: 3,
    ExtremalKind.HIGH_TIGHT: 3,
    ExtremalKind.ZERO_DIRECT_TIGHT: 4,
    ExtremalKind.ZERO_FULL_RANGE_TIGHT: 4,
    ExtremalKind.ZERO_HIGH_TIGHT: 4,
    ExtremalKind.NON_AP_GAP: 3,
}


class Extremal(NamedTuple):
    A: IntSet
    H: HSpec
    expected: int


def build_extremal(
    kind: ExtremalKind | str,
    k: int | None = None,
    r: int = 1,
    extras: Iterable[int] | None = None,
    H: Iterable[int] | None = None,
    top_pair: bool = False,
    with_zero: bool = False,
) -> Extremal:
    """Construct a set pair attaining a lower bound, with its exact sumset cardinality.

    Parameters:
    - kind: which construction.
    - k: cardinality of A. Derived from ``extras`` for the non-progression kinds.
    - r: multiplicity cap.
    - extras: ``zero_full_range_tight``: counts X in [(k-1)r+1, kr] appended to H;
      ``non_ap_gap``: the elements of A; ``non_ap_small``: the pair a_1 < a_2.
    - H: ``non_ap_small`` only, a subset of {1, 2, 3} (default all three).
    - top_pair: ``non_ap_gap`` only, use H = {rk-1, rk} instead of {1, rk}.
    - with_zero: ``non_ap_small`` only, add 0 to A.
    """
    kind = ExtremalKind(kind)
    if r < 1:
        raise ValueError(f"r must be a positive integer, got {r}.")

    if kind == ExtremalKind.NON_AP_SMALL:
        return _non_ap_small(extras, H, r, with_zero)
    if kind == ExtremalKind.NON_AP_GAP:
        if extras is None:
            raise ValueError("non_ap_gap needs the elements of A in extras.")
        A = normalize_set(extras)
        if k is not None and k != A.k:
            raise ValueError(f"k = {k} does not match |A| = {A.k}.")
        k = A.k
    elif k is None:
        raise ValueError(f"{kind.value} needs k.")

    if k < MIN_K[kind]:
        raise HypothesisViolatedError([f"k >= {MIN_K[kind]}"], context=kind.value)

    if kind == ExtremalKind.DIRECT_TIGHT:
        return Extremal(IntSet.interval(1, k), HSpec.interval(1, (k - 1) * r - 1), r * k * (k + 1) // 2 - r - 2)
    if kind == ExtremalKind.FULL_RANGE_TIGHT:
        return Extremal(IntSet.interval(1, k), HSpec.interval(1, r * k), r * k * (k + 1) // 2)
    if kind == ExtremalKind.HIGH_TIGHT:
        return Extremal(IntSet.interval(1, k), HSpec.interval((k - 1) * r, k * r), k * r + 1)
    if kind == ExtremalKind.ZERO_DIRECT_TIGHT:
        return Extremal(IntSet.interval(0, k - 1), HSpec.interval(1, (k - 2) * r - 1), r * k * (k - 1) // 2 - r - 1)
    if kind == ExtremalKind.ZERO_FULL_RANGE_TIGHT:
        extra = sorted(set(extras or ()))
        if any(not (k - 1) * r < x <= k * r for x in extra):
            raise HypothesisViolatedError([f"extras within [{(k - 1) * r + 1}, {k * r}]"], context=kind.value)
        H_ = HSpec(tuple(range(1, (k - 1) * r + 1)) + tuple(extra))
        return Extremal(IntSet.interval(0, k - 1), H_, r * k * (k - 1) // 2 + 1)
    if kind == ExtremalKind.ZERO_HIGH_TIGHT:
        return Extremal(IntSet.interval(0, k - 1), HSpec.interval((k - 2) * r, (k - 1) * r), (2 * k - 3) * r + 1)

    # non_ap_gap: A itself plus one top sum, or the k sums missing one element plus the top sum
    if A.min <= 0:
        raise HypothesisViolatedError(["A positive"], context=kind.value)
    H_ = HSpec((r * k - 1, r * k)) if top_pair else HSpec.of((1, r * k))
    return Extremal(A, H_, k + 1)


def _non_ap_small(extras: Iterable[int] | None, H: Iterable[int] | None, r: int, with_zero: bool) -> Extremal:
    pair = sorted(extras or ())
    if len(pair) != 2:
        raise ValueError(f"non_ap_small needs exactly two extras a_1 < a_2, got {pair}.")
    a1, a2 = pair
    violations = []
    if not 0 < a1 < a2:
        violations.append("0 < a_1 < a_2")
    if r != 1:
        violations.append("r = 1")
    H_ = HSpec.of(H) if H is not None else HSpec((1, 2, 3))
    if not set(H_) <= {1, 2, 3}:
        violations.append("H subset of {1,2,3}")
    if violations:
        raise HypothesisViolatedError(violations, context=ExtremalKind.NON_AP_SMALL.value)

    elements = (a1, a2, a1 + a2) + ((0,) if with_zero else ())
    A = normalize_set(elements)
    expected = len(generalized_union_sumset(A, H_, r))
    return Extremal(A, H_, expected)
