# Copyright (c) 2025, Kousheek Chakraborty
# All rights reserved.
#
# SPDX-License-Identifier: BSD-3-Clause

from __future__ import annotations

import logging
from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np

from .errors import EmptyResultError, OutOfRangeError, SumOverflowError
from .intset import INT64_MAX, IntSet

logger = logging.getLogger(__name__)

# Largest dense table (cells = (h_max + 1) * window) built before falling back to sparse sets.
DENSE_CELL_BUDGET = 2**24


@dataclass(frozen=True)
class FoldParams:
    """Number of summands ``h`` and per-element multiplicity cap ``r``."""

    h: int
    r: int

    def __post_init__(self) -> None:
        if self.r < 1:
            raise ValueError(f"r must be a positive integer, got {self.r}.")
        if self.h < 0:
            raise ValueError(f"h must be nonnegative, got {self.h}.")

    def decompose(self) -> tuple[int, int]:
        """Return (m, eps) with h = m*r + eps and 0 <= eps <= r-1."""
        return divmod(self.h, self.r)

    def is_feasible(self, k: int) -> bool:
        return self.h <= k * self.r


def check_overflow(A: IntSet, h_max: int) -> None:
    """Raise when some sum of at most ``h_max`` summands may leave the int64 range."""
    largest = max(abs(A.min), abs(A.max))
    if h_max * largest > INT64_MAX:
        raise SumOverflowError(
            f"Sums of {h_max} summands of magnitude up to {largest} exceed the 64-bit contract."
        )


class SumsetTable:
    """Layered reachability table for the bounded-multiplicity sums of a set.

    Layer ``c`` holds every sum of exactly ``c`` summands from ``A`` with no element used more
    than ``r`` times; layer 0 is {0}. Elements are folded in one at a time, OR-ing shifted copies
    of the previous layers for multiplicities 1..r.

    When the table fits ``dense_budget`` cells the layers are boolean numpy rows indexed by the
    offset ``s - c*min(A)``, so a fold is a handful of 2-D slice ORs over all layers at once.
    Otherwise the layers are python sets of sums.

    Parameters:
    - A: the set of summands.
    - h_max: largest summand count to keep. Counts above k*r are empty and are clipped.
    - r: multiplicity cap per element.
    - mode: "auto", "dense" or "sparse".
    - dense_budget: cell budget deciding "auto".
    """

    def __init__(
        self,
        A: IntSet,
        h_max: int,
        r: int,
        mode: str = "auto",
        dense_budget: int | None = None,
    ) -> None:
        if r < 1:
            raise ValueError(f"r must be a positive integer, got {r}.")
        if h_max < 0:
            raise ValueError(f"h_max must be nonnegative, got {h_max}.")
        if mode not in ("auto", "dense", "sparse"):
            raise ValueError(f"Unknown table mode '{mode}'.")

        self.A = A
        self.r = r
        self.h_max = h_max
        self.depth = min(h_max, A.k * r)
        check_overflow(A, self.depth)

        self._base = A.min
        self._span = A.max - A.min
        self._width = self.depth * self._span + 1
        cells = (self.depth + 1) * self._width
        budget = DENSE_CELL_BUDGET if dense_budget is None else dense_budget
        self.dense = mode == "dense" or (mode == "auto" and cells <= budget)

        self._table: np.ndarray | None = None
        self._layers: list[set[int]] | None = None
        if self.dense:
            self._table = self._build_dense()
        else:
            logger.debug("table of %d cells over budget, using sparse layers", cells)
            self._layers = self._build_sparse()

    def _build_dense(self) -> np.ndarray:
        depth, width = self.depth, self._width
        table = np.zeros((depth + 1, width), dtype=bool)
        table[0, 0] = True
        for a in self.A:
            offset = a - self._base
            previous = table.copy()
            for j in range(1, min(self.r, depth) + 1):
                shift = j * offset
                if shift >= width:
                    break
                table[j:, shift:] |= previous[: depth + 1 - j, : width - shift]
        return table

    def _build_sparse(self) -> list[set[int]]:
        layers: list[set[int]] = [set() for _ in range(self.depth + 1)]
        layers[0].add(0)
        for a in self.A:
            previous = [set(layer) for layer in layers]
            for j in range(1, min(self.r, self.depth) + 1):
                step = j * a
                for c in range(j, self.depth + 1):
                    layers[c].update(s + step for s in previous[c - j])
        return layers

    def layer(self, c: int) -> list[int]:
        """Sorted sums of exactly ``c`` summands (empty when c > k*r)."""
        if c < 0 or c > self.h_max:
            raise OutOfRangeError(f"Layer {c} outside the table range [0, {self.h_max}].")
        if c > self.depth:
            return []
        if self._table is not None:
            offsets = np.flatnonzero(self._table[c])
            return [int(i) + c * self._base for i in offsets]
        return sorted(self._layers[c])

    def cardinality(self, c: int) -> int:
        if c > self.depth:
            return 0
        if self._table is not None:
            return int(np.count_nonzero(self._table[c]))
        return len(self._layers[c])

    def union(self, counts: Iterable[int]) -> list[int]:
        """Sorted union of the layers listed in ``counts``."""
        sums: set[int] = set()
        for c in counts:
            sums.update(self.layer(c))
        return sorted(sums)


def generalized_fold_sumset(A: IntSet, p: FoldParams, mode: str = "auto") -> IntSet | None:
    """Return h^(r)A, or ``None`` when it is empty (h > k*r)."""
    if not p.is_feasible(A.k):
        return None
    sums = SumsetTable(A, p.h, p.r, mode=mode).layer(p.h)
    return IntSet(tuple(sums))


def generalized_union_sumset(A: IntSet, H: Iterable[int], r: int, mode: str = "auto") -> IntSet:
    """Return H^(r)A, the union of h^(r)A over h in H.

    Every count is read from a single table built up to max(H).
    """
    hs = sorted(set(H))
    if not hs:
        raise ValueError("H must be nonempty.")
    feasible = [h for h in hs if h <= A.k * r]
    if not feasible:
        raise EmptyResultError(f"Every h in {hs} exceeds k*r = {A.k * r}; H^(r)A is empty.")
    table = SumsetTable(A, feasible[-1], r, mode=mode)
    return IntSet(tuple(table.union(feasible)))


def sumset_extrema(A: IntSet, p: FoldParams) -> tuple[int, int]:
    """Closed-form (min, max) of h^(r)A.

    With h = m*r + eps the minimum takes the m smallest elements r times and a_{m+1} eps times;
    the maximum mirrors it on the largest elements.
    """
    if not p.is_feasible(A.k):
        raise OutOfRangeError(f"h = {p.h} exceeds k*r = {A.k * p.r}.")
    m, eps = p.decompose()
    a = A.elements
    k = A.k
    low = p.r * sum(a[:m]) + (eps * a[m] if eps else 0)
    high = p.r * sum(a[k - m :]) + (eps * a[k - m - 1] if eps else 0)
    return low, high
