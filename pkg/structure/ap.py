# Copyright (c) 2025, Kousheek Chakraborty
# All rights reserved.
#
# SPDX-License-Identifier: BSD-3-Clause

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass


@dataclass(frozen=True)
class APWitness:
    """Whether sorted values form {first, first+diff, ...}; ``first``/``diff`` are None otherwise."""

    is_ap: bool
    first: int | None
    diff: int | None

    def to_dict(self) -> dict:
        return {"is_ap": self.is_ap, "first": self.first, "diff": self.diff}


def ap_witness(values: Iterable[int]) -> APWitness:
    """Arithmetic-progression test on a strictly increasing sequence (an IntSet or HSpec).

    Sequences of one or two values are always progressions; a singleton has difference 0.
    """
    elements = list(values)
    if not elements:
        raise ValueError("An empty sequence has no progression witness.")
    if len(elements) == 1:
        return APWitness(True, elements[0], 0)
    diff = elements[1] - elements[0]
    if all(b - a == diff for a, b in zip(elements, elements[1:])):
        return APWitness(True, elements[0], diff)
    return APWitness(False, None, None)
