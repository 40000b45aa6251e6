# Copyright (c) 2025, Kousheek Chakraborty
# All rights reserved.
#
# SPDX-License-Identifier: BSD-3-Clause

from .engine import (  # noqa: F401
    FoldParams,
    SumsetTable,
    generalized_fold_sumset,
    generalized_union_sumset,
    sumset_extrema,
)
from .errors import *  # noqa: F401, F403
from .intset import IntSet, dilate, normalize_set  # noqa: F401
from .oracle import brute_force_hfold, brute_force_restricted, brute_force_sumset  # noqa: F401
