# Copyright (c) 2025, Kousheek Chakraborty
# All rights reserved.
#
# SPDX-License-Identifier: BSD-3-Clause

from .closed_form import ExtremalShape, SubseqKind, SubseqReport, closed_form, subsequence_verdict  # noqa: F401
from .sums import RepSequence, enumerate_subsequence_sums, subsequence_sum_set, subset_sum_set  # noqa: F401
