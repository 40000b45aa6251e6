# Copyright (c) 2025, Kousheek Chakraborty
# All rights reserved.
#
# SPDX-License-Identifier: BSD-3-Clause

"""Equality-implies-structure checks.

For a claim, the checker evaluates the claim's hypotheses and bound expression, compares the
bound to the enumerated cardinality, and only on equality inspects whether H and A have the
progression structure the claim concludes.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable
from dataclasses import dataclass, field
from enum import Enum

from bounds import (
    ClassicalKind,
    HSpec,
    Regime,
    as_hspec,
    classical_lower,
    classify_regime,
    high_range_lower,
    pivot_lower_single_sum,
    single_fold_lower,
    zero_main_lower,
)
from bounds.report import Hypotheses
from core import IntSet, generalized_union_sumset
from core.errors import EmptyResultError, UnknownClaimKindError

from .ap import APWitness, ap_witness

logger = logging.getLogger(__name__)


class ClaimKind(str, Enum):
    SINGLE_FOLD = "single_fold"
    UNRESTRICTED = "unrestricted"
    RESTRICTED = "restricted"
    MAIN = "main"
    SPLIT_HIGH = "split_high"
    LAST_HIGH = "last_high"
    ALL_HIGH = "all_high"
    ZERO_MAIN = "zero_main"
    ZERO_SPLIT_HIGH = "zero_split_high"
    ZERO_LAST_HIGH = "zero_last_high"
    ZERO_ALL_HIGH = "zero_all_high"
    AUTO = "auto"

    @property
    def with_zero(self) -> bool:
        return self.value.startswith("zero_")


@dataclass(frozen=True)
class InverseReport:
    """Outcome of one inverse claim on one (A, H, r).

    ``conclusion_ok`` is None unless the hypotheses hold and the bound is attained.
    """

    claim_kind: ClaimKind
    bound: int
    cardinality: int
    h_ap: APWitness
    a_ap: APWitness
    violations: tuple[str, ...] = ()
    full_a_ap: APWitness | None = None
    conclusion_ok: bool | None = None
    failures: tuple[str, ...] = field(default_factory=tuple)

    @property
    def hypotheses_ok(self) -> bool:
        return not self.violations

    @property
    def equality(self) -> bool:
        return self.cardinality == self.bound

    def to_dict(self) -> dict:
        return {
            "claim": self.claim_kind.value,
            "bound": self.bound,
            "cardinality": self.cardinality,
            "hypotheses_ok": self.hypotheses_ok,
            "violations": list(self.violations),
            "equality": self.equality,
            "h_ap": self.h_ap.to_dict(),
            "a_ap": self.a_ap.to_dict(),
            "full_a_ap": None if self.full_a_ap is None else self.full_a_ap.to_dict(),
            "conclusion_ok": self.conclusion_ok,
            "failures": list(self.failures),
        }


_REGIME_CLAIMS = {
    Regime.MAIN: ClaimKind.MAIN,
    Regime.SPLIT_HIGH: ClaimKind.SPLIT_HIGH,
    Regime.ALL_HIGH: ClaimKind.ALL_HIGH,
    Regime.ZERO_MAIN: ClaimKind.ZERO_MAIN,
    Regime.ZERO_SPLIT_HIGH: ClaimKind.ZERO_SPLIT_HIGH,
    Regime.ZERO_ALL_HIGH: ClaimKind.ZERO_ALL_HIGH,
    Regime.UNRESTRICTED: ClaimKind.UNRESTRICTED,
}


def resolve_claim(A: IntSet, H: HSpec, r: int) -> ClaimKind:
    """Claim matching the regime of (|A|, r, H, 0 in A); a single count maps to ``single_fold``."""
    if H.t == 1:
        return ClaimKind.SINGLE_FOLD
    report = classify_regime(A.k, r, H, 0 in A)
    claim = _REGIME_CLAIMS[report.regime]
    # a split at the last count is its own claim
    if report.t0 == H.t:
        claim = ClaimKind.ZERO_LAST_HIGH if claim == ClaimKind.ZERO_SPLIT_HIGH else ClaimKind.LAST_HIGH
    return claim


def claim_bound(claim: ClaimKind, A: IntSet, H: HSpec, r: int) -> tuple[int, list[str]]:
    """The claim's bound expression and its failed hypotheses."""
    k, t = A.k, H.t
    zero = claim.with_zero
    hyp = Hypotheses()

    if claim == ClaimKind.SINGLE_FOLD:
        h = H.min
        hyp.require(k >= 3, "k >= 3")
        hyp.require(t == 1, "t = 1")
        hyp.require(h >= 2, "h >= 2")
        hyp.require(r <= h <= k * r - 2, "r <= h <= kr-2")
        hyp.require((k, h, r) != (4, 2, 1), "(k,h,r) != (4,2,1)")
        return single_fold_lower(k, h, r, strict=False).value, hyp.violations

    if claim == ClaimKind.UNRESTRICTED:
        hyp.require(k >= 2, "k >= 2")
        hyp.require(t >= 2, "t >= 2")
        hyp.require(A.min > 0, "A positive")
        hyp.require(r >= H.max, "r >= max(H)")
        return classical_lower(ClassicalKind.UNRESTRICTED_UNION, k, H, strict=False).value, hyp.violations

    if claim == ClaimKind.RESTRICTED:
        has_zero = 0 in A
        hyp.require(r == 1, "r = 1")
        hyp.require(A.min >= 0, "A nonnegative")
        if has_zero:
            hyp.require(k >= 7, "k >= 7")
            hyp.require(H.max <= k - 2, "h_t <= k-2")
        else:
            hyp.require(k >= 6, "k >= 6")
            hyp.require(H.max <= k - 1, "h_t <= k-1")
        report = classical_lower(ClassicalKind.RESTRICTED_UNION, k, H, has_zero, strict=False)
        return report.value, hyp.violations

    band = (k - 2) * r if zero else (k - 1) * r
    top = (k - 1) * r if zero else k * r
    band_label = "(k-2)r" if zero else "(k-1)r"
    top_label = "(k-1)r" if zero else "kr"
    if zero:
        hyp.require(k >= 7, "k >= 7")
        hyp.require(0 in A, "0 in A")
        hyp.require(A.min >= 0, "A nonnegative")
    else:
        hyp.require(k >= 6, "k >= 6")
        hyp.require(A.min > 0, "A positive")
    hyp.require(t >= 2, "t >= 2")

    if claim in (ClaimKind.MAIN, ClaimKind.ZERO_MAIN):
        hyp.require(r <= H.max, "r <= max(H)")
        hyp.require(H.max <= band - 1, f"max(H) <= {band_label}-1")
        if zero:
            return zero_main_lower(k, H, r, strict=False).value, hyp.violations
        return pivot_lower_single_sum(k, H, r), hyp.violations

    if claim in (ClaimKind.ALL_HIGH, ClaimKind.ZERO_ALL_HIGH):
        hyp.require(r >= 2, "r >= 2")
        hyp.require(H.min > band - 1, f"min(H) > {band_label}-1")
        hyp.require(H.max < top, f"max(H) < {top_label}")
        regime = Regime.ZERO_ALL_HIGH if zero else Regime.ALL_HIGH
        return high_range_lower(regime, k, H, r, strict=False).value, hyp.violations

    # split at t0 (least count in the band), or at the last count
    last = claim in (ClaimKind.LAST_HIGH, ClaimKind.ZERO_LAST_HIGH)
    if last:
        t0 = t
    else:
        t0 = H.first_at_least(band) or t
        hyp.require(t > t0 >= 2, "t > t0 >= 2")
    if t0 >= 2:
        hyp.require(H[t0 - 2] <= band - 1, f"h_(t0-1) <= {band_label}-1")
    hyp.require(H[t0 - 1] > band - 1, f"h_t0 > {band_label}-1")
    hyp.require(H.max < top, f"max(H) < {top_label}")
    hyp.require((t0, H.min) != (2, 1), "(t0,h_1) != (2,1)")
    regime = Regime.ZERO_SPLIT_HIGH if zero else Regime.SPLIT_HIGH
    return high_range_lower(regime, k, H, r, t0=t0, strict=False).value, hyp.violations


def _conclusion(claim: ClaimKind, A: IntSet, H: HSpec, r: int, h_ap: APWitness) -> tuple[list[str], APWitness | None]:
    failures: list[str] = []
    if claim == ClaimKind.SINGLE_FOLD:
        if not ap_witness(A).is_ap:
            failures.append("A is not an arithmetic progression")
        return failures, None

    if not h_ap.is_ap:
        return ["H is not an arithmetic progression"], None
    d = h_ap.diff

    if claim == ClaimKind.RESTRICTED:
        if d != 1:
            failures.append(f"H has difference {d}, expected 1")
        if 0 in A:
            a1 = A.without(0).min
            if tuple(A) != tuple(a1 * i for i in range(A.k)):
                failures.append(f"A != {a1}*[0,{A.k - 1}]")
        elif tuple(A) != tuple(A.min * i for i in range(1, A.k + 1)):
            failures.append(f"A != {A.min}*[1,{A.k}]")
        return failures, None

    if claim in (ClaimKind.ALL_HIGH, ClaimKind.ZERO_ALL_HIGH):
        if d > r - 1:
            failures.append(f"H difference {d} > r-1")
    elif claim != ClaimKind.UNRESTRICTED and d > r:
        failures.append(f"H difference {d} > r")

    full_ap = None
    if claim.with_zero:
        unit = A.without(0).min
        full_ap = ap_witness(A)
        if not full_ap.is_ap or full_ap.diff != d * unit:
            failures.append(f"A is not an arithmetic progression with difference {d}*{unit}")
        if claim in (ClaimKind.ZERO_MAIN, ClaimKind.ZERO_SPLIT_HIGH, ClaimKind.ZERO_LAST_HIGH):
            if H.min > 1 and d != 1:
                failures.append(f"min(H) > 1 but H difference {d} != 1")
    else:
        a_ap = ap_witness(A)
        if not a_ap.is_ap or a_ap.diff != d * A.min:
            failures.append(f"A is not an arithmetic progression with difference {d}*{A.min}")
    return failures, full_ap


def inverse_verdict(
    A: IntSet,
    H: HSpec | Iterable[int],
    r: int,
    claim_kind: ClaimKind | str = ClaimKind.AUTO,
    cardinality: int | None = None,
) -> InverseReport:
    """Check whether attaining the claim's bound forces the claimed progression structure.

    Args:
        A: the summand set.
        H: the summand counts.
        r: multiplicity cap.
        claim_kind: which claim to check; ``auto`` derives it from the bound regime.
        cardinality: |H^(r)A| when already known, otherwise it is enumerated.

    Returns:
        The report; the conclusion is only evaluated when hypotheses hold and equality is attained.
    """
    H = as_hspec(H)
    try:
        claim = ClaimKind(claim_kind)
    except ValueError:
        raise UnknownClaimKindError(f"Unknown claim kind '{claim_kind}'.") from None
    if claim == ClaimKind.AUTO:
        claim = resolve_claim(A, H, r)

    bound, violations = claim_bound(claim, A, H, r)
    if cardinality is None:
        try:
            cardinality = len(generalized_union_sumset(A, H, r))
        except EmptyResultError:
            cardinality = 0

    h_ap = ap_witness(H)
    a_ap = ap_witness(A.without(0)) if claim.with_zero and 0 in A and A.k > 1 else ap_witness(A)
    report = InverseReport(
        claim_kind=claim,
        bound=bound,
        cardinality=cardinality,
        h_ap=h_ap,
        a_ap=a_ap,
        violations=tuple(violations),
    )
    if not (report.hypotheses_ok and report.equality):
        return report

    failures, full_ap = _conclusion(claim, A, H, r, h_ap)
    if failures:
        logger.debug("claim %s fails its conclusion on A=%s H=%s r=%d: %s", claim.value, A, H, r, failures)
    return InverseReport(
        claim_kind=claim,
        bound=bound,
        cardinality=cardinality,
        h_ap=h_ap,
        a_ap=a_ap,
        violations=tuple(violations),
        full_a_ap=full_ap,
        conclusion_ok=not failures,
        failures=tuple(failures),
    )
