# Copyright (c) 2025, Kousheek Chakraborty
# All rights reserved.
#
# SPDX-License-Identifier: BSD-3-Clause

from __future__ import annotations

from bisect import bisect_left
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from .errors import EmptyInputError, ZeroScaleError

INT64_MAX = 2**63 - 1


@dataclass(frozen=True)
class IntSet:
    """A finite set of distinct integers kept in ascending order.

    Parameters:
    - elements: strictly increasing tuple of integers, at least one element.
    """

    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.elements) == 0:
            raise EmptyInputError("IntSet needs at least one element.")
        if any(b <= a for a, b in zip(self.elements, self.elements[1:])):
            raise ValueError(f"IntSet elements must be strictly increasing, got {self.elements}.")

    @classmethod
    def interval(cls, lo: int, hi: int) -> IntSet:
        """The integer interval [lo, hi]."""
        if hi < lo:
            raise EmptyInputError(f"Empty interval [{lo}, {hi}].")
        return cls(tuple(range(lo, hi + 1)))

    @property
    def k(self) -> int:
        return len(self.elements)

    @property
    def min(self) -> int:
        return self.elements[0]

    @property
    def max(self) -> int:
        return self.elements[-1]

    def is_interval(self) -> bool:
        return self.max - self.min + 1 == self.k

    def without(self, value: int) -> IntSet:
        return IntSet(tuple(a for a in self.elements if a != value))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, value: object) -> bool:
        if not isinstance(value, int):
            return False
        i = bisect_left(self.elements, value)
        return i < len(self.elements) and self.elements[i] == value

    def __getitem__(self, index: int) -> int:
        return self.elements[index]

    def __str__(self) -> str:
        if self.k > 2 and self.is_interval():
            return f"[{self.min},{self.max}]"
        return "{" + ",".join(str(a) for a in self.elements) + "}"


def normalize_set(raw: Iterable[int]) -> IntSet:
    """Sort and deduplicate ``raw`` into an :class:`IntSet`."""
    values = sorted({int(v) for v in raw})
    if not values:
        raise EmptyInputError("Cannot build a set from an empty input.")
    return IntSet(tuple(values))


def dilate(A: IntSet, c: int) -> IntSet:
    """Return c*A = {c*a : a in A}, re-sorted."""
    if c == 0:
        raise ZeroScaleError("Dilation factor must be nonzero.")
    return IntSet(tuple(sorted(c * a for a in A)))

