# Copyright (c) 2025, Kousheek Chakraborty
# All rights reserved.
#
# SPDX-License-Identifier: BSD-3-Clause

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from core.errors import BadPivotError, EmptyInputError


@dataclass(frozen=True)
class HSpec:
    """Strictly increasing positive summand counts h_1 < ... < h_t.

    The sentinel h_0 = 0 is implicit: index 0 of :meth:`with_sentinel` and of
    :meth:`decomposition` refers to it.
    """

    hs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.hs) == 0:
            raise EmptyInputError("H must contain at least one summand count.")
        if self.hs[0] < 1:
            raise ValueError(f"H must contain positive integers only, got {self.hs}.")
        if any(b <= a for a, b in zip(self.hs, self.hs[1:])):
            raise ValueError(f"H must be strictly increasing, got {self.hs}.")

    @classmethod
    def of(cls, values: Iterable[int]) -> HSpec:
        return cls(tuple(sorted({int(v) for v in values})))

    @classmethod
    def interval(cls, lo: int, hi: int) -> HSpec:
        return cls(tuple(range(lo, hi + 1)))

    @property
    def t(self) -> int:
        return len(self.hs)

    @property
    def min(self) -> int:
        return self.hs[0]

    @property
    def max(self) -> int:
        return self.hs[-1]

    def __len__(self) -> int:
        return len(self.hs)

    def __iter__(self) -> Iterator[int]:
        return iter(self.hs)

    def __getitem__(self, index: int) -> int:
        return self.hs[index]

    def __str__(self) -> str:
        if self.t > 2 and self.max - self.min + 1 == self.t:
            return f"[{self.min},{self.max}]"
        return "{" + ",".join(str(h) for h in self.hs) + "}"

    def with_sentinel(self) -> tuple[int, ...]:
        """(h_0, h_1, ..., h_t) with h_0 = 0."""
        return (0,) + self.hs

    def decomposition(self, r: int) -> list[tuple[int, int]]:
        """[(m_i, eps_i)] for i = 0..t with h_i = m_i*r + eps_i, 0 <= eps_i <= r-1."""
        if r < 1:
            raise ValueError(f"r must be a positive integer, got {r}.")
        return [divmod(h, r) for h in self.with_sentinel()]

    def pivot(self, r: int) -> int:
        """The index l with h_{l-1} < r <= h_l (1 <= l <= t)."""
        if r > self.max:
            raise BadPivotError(f"r = {r} exceeds max(H) = {self.max}; the pivot index is undefined.")
        hs = self.with_sentinel()
        for l in range(1, len(hs)):
            if hs[l - 1] < r <= hs[l]:
                return l
        raise BadPivotError(f"No pivot for r = {r} in {self.hs}.")

    def prefix(self, n: int) -> HSpec:
        """H_n = {h_1, ..., h_n}."""
        if not 1 <= n <= self.t:
            raise ValueError(f"Prefix length {n} outside [1, {self.t}].")
        return HSpec(self.hs[:n])

    def first_at_least(self, threshold: int) -> int | None:
        """Least 1-based index i with h_i >= threshold, or None."""
        for i, h in enumerate(self.hs, start=1):
            if h >= threshold:
                return i
        return None
