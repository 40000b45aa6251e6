# Copyright (c) 2025, Kousheek Chakraborty
# All rights reserved.
#
# SPDX-License-Identifier: BSD-3-Clause

from __future__ import annotations

import logging
from collections.abc import Iterable
from dataclasses import replace

from core.errors import UnclassifiableError

from .formulas import ClassicalKind, as_hspec, classical_lower, high_range_lower, pivot_lower, zero_main_lower
from .hspec import HSpec
from .report import BoundReport, Hypotheses, Regime

logger = logging.getLogger(__name__)


def classify_regime(k: int, r: int, H: HSpec | Iterable[int], contains_zero: bool) -> BoundReport:
    """Select the bound that governs (k, r, H, 0 in A) and evaluate it without raising.

    The band thresholds are (k-1)r for positive sets and (k-2)r when 0 is in A. When r exceeds
    max(H) the multiplicity cap never binds and the unrestricted union bound applies.

    Raises:
        UnclassifiableError: every count of H exceeds the largest feasible one, so the sumset is empty.
    """
    H = as_hspec(H)
    if r < 1:
        raise ValueError(f"r must be a positive integer, got {r}.")
    feasible = (k - 1) * r if contains_zero else k * r
    if H.min > feasible:
        raise UnclassifiableError(
            f"min(H) = {H.min} exceeds {'(k-1)r' if contains_zero else 'kr'} = {feasible}; H^(r)A is empty."
        )

    hyp = Hypotheses()
    hyp.require(H.t >= 2, "t >= 2")
    hyp.require(k >= 3, "k >= 3")

    if r > H.max:
        regime = Regime.UNRESTRICTED
        report = classical_lower(ClassicalKind.UNRESTRICTED_UNION, k, H, contains_zero, strict=False)
    else:
        band = (k - 2) * r if contains_zero else (k - 1) * r
        if H.max <= band - 1:
            regime = Regime.ZERO_MAIN if contains_zero else Regime.MAIN
        elif H.min >= band:
            regime = Regime.ZERO_ALL_HIGH if contains_zero else Regime.ALL_HIGH
        else:
            regime = Regime.ZERO_SPLIT_HIGH if contains_zero else Regime.SPLIT_HIGH

        if regime == Regime.MAIN:
            report = pivot_lower(k, H, r, strict=False)
        elif regime == Regime.ZERO_MAIN:
            report = zero_main_lower(k, H, r, strict=False)
        else:
            report = high_range_lower(regime, k, H, r, strict=False)

    violations = tuple(dict.fromkeys(tuple(hyp.violations) + report.violations))
    logger.debug("k=%d r=%d H=%s zero=%s -> %s", k, r, H, contains_zero, regime.value)
    return replace(report, regime=regime, violations=violations)
