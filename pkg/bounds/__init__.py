# Copyright (c) 2025, Kousheek Chakraborty
# All rights reserved.
#
# SPDX-License-Identifier: BSD-3-Clause

from .formulas import (  # noqa: F401
    HIGH_RANGE_REGIMES,
    ClassicalKind,
    as_hspec,
    classical_lower,
    high_range_lower,
    pivot_lower,
    pivot_lower_single_sum,
    single_fold_lower,
    zero_main_lower,
)
from .hspec import HSpec  # noqa: F401
from .regime import classify_regime  # noqa: F401
from .report import BoundReport, BoundTerm, Regime  # noqa: F401
