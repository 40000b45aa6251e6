# Copyright (c) 2025, Kousheek Chakraborty
# All rights reserved.
#
# SPDX-License-Identifier: BSD-3-Clause

"""Closed-form lower bounds on the cardinality of generalized sumsets.

Every evaluator returns a :class:`BoundReport` whose terms add up to the bound. With
``strict=True`` a failed hypothesis raises :class:`HypothesisViolatedError`; with
``strict=False`` the formula is evaluated anyway and the failures are listed in the report.
"""

from __future__ import annotations

from collections.abc import Iterable
from enum import Enum

from core.errors import BadPivotError, HypothesisViolatedError

from .hspec import HSpec
from .report import BoundReport, BoundTerm, Hypotheses, Regime


class ClassicalKind(str, Enum):
    UNRESTRICTED_FOLD = "unrestricted_fold"
    RESTRICTED_FOLD = "restricted_fold"
    UNRESTRICTED_UNION = "unrestricted_union"
    RESTRICTED_UNION = "restricted_union"


HIGH_RANGE_REGIMES = (Regime.SPLIT_HIGH, Regime.ALL_HIGH, Regime.ZERO_SPLIT_HIGH, Regime.ZERO_ALL_HIGH)


def as_hspec(H: HSpec | Iterable[int]) -> HSpec:
    return H if isinstance(H, HSpec) else HSpec.of(H)


def _finish(formula: str, terms: list[BoundTerm], hyp: Hypotheses, strict: bool, **extra) -> BoundReport:
    if strict and hyp.violations:
        raise HypothesisViolatedError(hyp.violations, context=formula)
    return BoundReport(formula=formula, terms=tuple(terms), violations=tuple(hyp.violations), **extra)


def _step(k: int, r: int, prev: tuple[int, int], cur: tuple[int, int]) -> int:
    """Contribution of h_i given the decompositions (m, eps) of h_{i-1} and h_i."""
    (m_prev, e_prev), (m, e) = prev, cur
    return r * (m - m_prev) * (k - m) + (e - e_prev) * (k - m - 1) - max(e, e_prev) * (m - m_prev) + 1


def _pivot_terms(k: int, H: HSpec, r: int, label: str = "") -> list[BoundTerm]:
    # beyond the pivot range every m_i is 0 and the sum collapses
    if r > H.max:
        return [BoundTerm(f"{label}h_t(k-1)+t", H.max * (k - 1) + H.t)]
    l = H.pivot(r)
    hs = H.with_sentinel()
    dec = H.decomposition(r)
    terms = [BoundTerm(f"{label}h_{l - 1}(k-1)+{l - 1}", hs[l - 1] * (k - 1) + (l - 1))]
    for i in range(l, H.t + 1):
        terms.append(BoundTerm(f"{label}i={i}", _step(k, r, dec[i - 1], dec[i])))
    return terms


def _single_fold_terms(k: int, h: int, r: int) -> list[BoundTerm]:
    m, eps = divmod(h, r)
    return [
        BoundTerm("mr(k-m)", m * r * (k - m)),
        BoundTerm("(h-mr)(k-2m-1)", eps * (k - 2 * m - 1)),
        BoundTerm("1", 1),
    ]


def _zero_prefix_terms(h1: int, r: int) -> list[BoundTerm]:
    m = -(-h1 // r)
    m1 = h1 // r
    return [
        BoundTerm("m1*r(m-m1+1)", m1 * r * (m - m1 + 1)),
        BoundTerm("(h1-m1*r)(m-2m1)", (h1 - m1 * r) * (m - 2 * m1)),
    ]


def pivot_lower(k: int, H: HSpec | Iterable[int], r: int, strict: bool = True) -> BoundReport:
    """Lower bound for |H^(r)A| split at the pivot index l (h_{l-1} < r <= h_l).

    Raises :class:`BadPivotError` when r > max(H), since l is then undefined.
    """
    H = as_hspec(H)
    if r < 1:
        raise ValueError(f"r must be a positive integer, got {r}.")
    if r > H.max:
        raise BadPivotError(f"r = {r} exceeds max(H) = {H.max}; use pivot_lower_single_sum.")
    hyp = Hypotheses()
    hyp.require(k >= 1, "k >= 1")
    return _finish("pivot_lower", _pivot_terms(k, H, r), hyp, strict)


def pivot_lower_single_sum(k: int, H: HSpec | Iterable[int], r: int) -> int:
    """The same bound written as one sum over i = 1..t; defined for every r >= 1."""
    H = as_hspec(H)
    if r < 1:
        raise ValueError(f"r must be a positive integer, got {r}.")
    dec = H.decomposition(r)
    return sum(_step(k, r, dec[i - 1], dec[i]) for i in range(1, H.t + 1))


def single_fold_lower(k: int, h: int, r: int, strict: bool = True) -> BoundReport:
    """mr(k-m) + (h-mr)(k-2m-1) + 1 with m = floor(h/r), for a single summand count."""
    if r < 1:
        raise ValueError(f"r must be a positive integer, got {r}.")
    hyp = Hypotheses()
    hyp.require(r <= h, "r <= h")
    hyp.require(h <= k * r, "h <= kr")
    return _finish("single_fold_lower", _single_fold_terms(k, h, r), hyp, strict)


def classical_lower(
    kind: ClassicalKind | str,
    k: int,
    H_or_h: int | HSpec | Iterable[int],
    contains_zero: bool = False,
    strict: bool = True,
) -> BoundReport:
    """Bounds for the unrestricted and restricted special cases (r = h and r = 1).

    Args:
        kind: which classical bound to evaluate.
        k: cardinality of A.
        H_or_h: a single count for the ``*_fold`` kinds, a set of counts for the ``*_union`` kinds.
        contains_zero: whether 0 belongs to A.
        strict: raise on failed hypotheses instead of recording them.

    Returns:
        The bound with its term breakdown.
    """
    kind = ClassicalKind(kind)
    formula = f"classical_lower:{kind.value}"
    hyp = Hypotheses()

    if kind in (ClassicalKind.UNRESTRICTED_FOLD, ClassicalKind.RESTRICTED_FOLD):
        if not isinstance(H_or_h, int):
            raise TypeError(f"{kind.value} takes a single summand count, got {H_or_h!r}.")
        h = H_or_h
        hyp.require(h >= 1, "h >= 1")
        if kind == ClassicalKind.UNRESTRICTED_FOLD:
            terms = [BoundTerm("hk-h+1", h * k - h + 1)]
        else:
            hyp.require(h <= k, "h <= k")
            terms = [BoundTerm("hk-h^2+1", h * k - h * h + 1)]
        return _finish(formula, terms, hyp, strict)

    if isinstance(H_or_h, int):
        raise TypeError(f"{kind.value} takes a set of summand counts, got {H_or_h!r}.")
    H = as_hspec(H_or_h)
    hs = H.with_sentinel()

    if kind == ClassicalKind.UNRESTRICTED_UNION:
        hyp.require(not contains_zero, "0 not in A")
        terms = [BoundTerm("h_t(k-1)", H.max * (k - 1)), BoundTerm("t", H.t)]
    elif not contains_zero:
        hyp.require(H.max <= k, "h_t <= k")
        terms = [BoundTerm(f"i={i}", (hs[i] - hs[i - 1]) * (k - hs[i])) for i in range(1, H.t + 1)]
        terms.append(BoundTerm("t", H.t))
    else:
        hyp.require(H.max <= k - 1, "h_t <= k-1")
        terms = [BoundTerm("h_1", H.min)]
        terms += [BoundTerm(f"i={i}", (hs[i] - hs[i - 1]) * (k - hs[i] - 1)) for i in range(1, H.t + 1)]
        terms.append(BoundTerm("t", H.t))
    return _finish(formula, terms, hyp, strict)


def zero_main_lower(k: int, H: HSpec | Iterable[int], r: int, strict: bool = True) -> BoundReport:
    """Bound for sets containing 0: a prefix term from min(H) plus the pivot bound over A without 0."""
    H = as_hspec(H)
    if r < 1:
        raise ValueError(f"r must be a positive integer, got {r}.")
    hyp = Hypotheses()
    hyp.require(k >= 4, "k >= 4")
    hyp.require(H.t >= 2, "t >= 2")
    hyp.require(r <= H.max, "r <= max(H)")
    hyp.require(H.max <= (k - 2) * r - 1, "max(H) <= (k-2)r-1")
    terms = _zero_prefix_terms(H.min, r) + _pivot_terms(k - 1, H, r, label="A\\0 ")
    return _finish("zero_main_lower", terms, hyp, strict)


def high_range_lower(
    regime: Regime | str,
    k: int,
    H: HSpec | Iterable[int],
    r: int,
    t0: int | None = None,
    strict: bool = True,
) -> BoundReport:
    """Bounds for H reaching into the top band of summand counts.

    The band starts at (k-1)r, or (k-2)r when 0 is in A. ``split_high`` regimes bound the
    counts below the band with the pivot bound and add one per count from h_{t0} on, plus one.
    ``all_high`` regimes use the single-fold bound at min(H) plus one per remaining count.
    ``t0`` defaults to the least index with h_{t0} in the band.
    """
    regime = Regime(regime)
    if regime not in HIGH_RANGE_REGIMES:
        raise ValueError(f"high_range_lower does not evaluate regime '{regime.value}'.")
    H = as_hspec(H)
    if r < 1:
        raise ValueError(f"r must be a positive integer, got {r}.")

    zero = regime.with_zero
    band = (k - 2) * r if zero else (k - 1) * r
    top = (k - 1) * r if zero else k * r
    band_label = "(k-2)r" if zero else "(k-1)r"
    top_label = "(k-1)r" if zero else "kr"

    hyp = Hypotheses()
    hyp.require(k >= (4 if zero else 3), "k >= 4" if zero else "k >= 3")
    hyp.require(H.max <= top, f"max(H) <= {top_label}")

    if regime in (Regime.ALL_HIGH, Regime.ZERO_ALL_HIGH):
        hyp.require(H.min >= band, f"min(H) >= {band_label}")
        terms = _single_fold_terms(k, H.min, r) + [BoundTerm("t-1", H.t - 1)]
        return _finish(f"high_range_lower:{regime.value}", terms, hyp, strict, regime=regime)

    if t0 is None:
        t0 = H.first_at_least(band)
        if t0 is None:
            hyp.require(False, f"some h_i >= {band_label}")
            t0 = H.t + 1
    elif not 1 <= t0 <= H.t:
        raise ValueError(f"t0 = {t0} outside [1, {H.t}].")

    hyp.require(t0 >= 2, "t0 >= 2")
    if t0 <= H.t:
        hyp.require(H[t0 - 1] >= band, f"h_t0 >= {band_label}")
    if t0 >= 2:
        hyp.require(H[t0 - 2] < band, f"h_(t0-1) < {band_label}")

    terms: list[BoundTerm] = []
    if zero:
        terms += _zero_prefix_terms(H.min, r)
    if t0 >= 2:
        below = H.prefix(min(t0 - 1, H.t))
        terms += _pivot_terms(k - 1 if zero else k, below, r, label="A\\0 " if zero else "")
    terms.append(BoundTerm("t-t0+2", H.t - t0 + 2))
    return _finish(f"high_range_lower:{regime.value}", terms, hyp, strict, regime=regime, t0=t0)
