# Copyright (c) 2025, Kousheek Chakraborty
# All rights reserved.
#
# SPDX-License-Identifier: BSD-3-Clause

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from core import IntSet, generalized_union_sumset
from core.errors import BadAlphaError, TooLargeError
from core.oracle import ORACLE_VECTOR_CAP


@dataclass(frozen=True)
class RepSequence:
    """The sequence (a_1, ..., a_k)_r: every element of ``base`` repeated exactly ``r`` times."""

    base: IntSet
    r: int

    def __post_init__(self) -> None:
        if self.r < 1:
            raise ValueError(f"r must be a positive integer, got {self.r}.")

    @property
    def k(self) -> int:
        return self.base.k

    @property
    def length(self) -> int:
        return self.base.k * self.r

    @property
    def contains_zero(self) -> bool:
        return 0 in self.base

    def terms(self) -> tuple[int, ...]:
        return tuple(a for a in self.base for _ in range(self.r))

    def __str__(self) -> str:
        return f"({','.join(str(a) for a in self.base)})_{self.r}"


def subset_sum_set(A: IntSet, alpha: int = 1) -> IntSet:
    """Sums of the subsets of A with at least ``alpha`` elements."""
    if not 1 <= alpha <= A.k:
        raise BadAlphaError(f"alpha = {alpha} outside [1, {A.k}].")
    return generalized_union_sumset(A, range(alpha, A.k + 1), 1)


def subsequence_sum_set(S: RepSequence, alpha: int = 1) -> IntSet:
    """Sums of the subsequences of S with at least ``alpha`` terms."""
    if not 1 <= alpha <= S.length:
        raise BadAlphaError(f"alpha = {alpha} outside [1, {S.length}].")
    return generalized_union_sumset(S.base, range(alpha, S.length + 1), S.r)


def enumerate_subsequence_sums(S: RepSequence, alpha: int = 1, cap: int = ORACLE_VECTOR_CAP) -> IntSet:
    """Subsequence sums by walking every multiplicity vector in [0, r]^k of total at least ``alpha``."""
    if not 1 <= alpha <= S.length:
        raise BadAlphaError(f"alpha = {alpha} outside [1, {S.length}].")
    vectors = (S.r + 1) ** S.k
    if vectors > cap:
        raise TooLargeError(f"{vectors} multiplicity vectors exceed the oracle cap of {cap}.")
    sums = {
        sum(lam * a for lam, a in zip(lams, S.base))
        for lams in product(range(S.r + 1), repeat=S.k)
        if sum(lams) >= alpha
    }
    return IntSet(tuple(sorted(sums)))
