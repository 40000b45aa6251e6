# Copyright (c) 2025, Kousheek Chakraborty
# All rights reserved.
#
# SPDX-License-Identifier: BSD-3-Clause

"""Direct enumerators used as ground truth for the layered table."""

from __future__ import annotations

from itertools import combinations, combinations_with_replacement, product

from .engine import FoldParams, check_overflow
from .errors import TooLargeError
from .intset import IntSet

ORACLE_VECTOR_CAP = 10**7


def brute_force_sumset(A: IntSet, p: FoldParams, cap: int = ORACLE_VECTOR_CAP) -> IntSet | None:
    """h^(r)A by walking every multiplicity vector in [0, r]^k with sum h."""
    vectors = (p.r + 1) ** A.k
    if vectors > cap:
        raise TooLargeError(f"{vectors} multiplicity vectors exceed the oracle cap of {cap}.")
    if not p.is_feasible(A.k):
        return None
    check_overflow(A, p.h)
    sums = {
        sum(lam * a for lam, a in zip(lams, A))
        for lams in product(range(p.r + 1), repeat=A.k)
        if sum(lams) == p.h
    }
    return IntSet(tuple(sorted(sums)))


def brute_force_hfold(A: IntSet, h: int) -> IntSet:
    """Unrestricted hA from all multisets of size h."""
    if h == 0:
        return IntSet((0,))
    return IntSet(tuple(sorted({sum(c) for c in combinations_with_replacement(A, h)})))


def brute_force_restricted(A: IntSet, h: int) -> IntSet | None:
    """Restricted h^A from all h-subsets; ``None`` when h > k."""
    if h > A.k:
        return None
    if h == 0:
        return IntSet((0,))
    return IntSet(tuple(sorted({sum(c) for c in combinations(A, h)})))
