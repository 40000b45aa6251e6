# Copyright (c) 2025, Kousheek Chakraborty
# All rights reserved.
#
# SPDX-License-Identifier: BSD-3-Clause

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum


class Regime(str, Enum):
    """Which closed-form lower bound governs a (k, r, H, 0 in A) configuration."""

    MAIN = "main"
    SPLIT_HIGH = "split_high"
    ALL_HIGH = "all_high"
    ZERO_MAIN = "zero_main"
    ZERO_SPLIT_HIGH = "zero_split_high"
    ZERO_ALL_HIGH = "zero_all_high"
    UNRESTRICTED = "unrestricted"

    @property
    def with_zero(self) -> bool:
        return self in (Regime.ZERO_MAIN, Regime.ZERO_SPLIT_HIGH, Regime.ZERO_ALL_HIGH)


@dataclass(frozen=True)
class BoundTerm:
    label: str
    value: int


@dataclass(frozen=True)
class BoundReport:
    """A lower-bound value with its per-term breakdown and hypothesis check.

    ``value`` is always the sum of ``terms``. The formula is evaluated even when hypotheses fail;
    ``violations`` lists each failed condition.
    """

    formula: str
    terms: tuple[BoundTerm, ...]
    violations: tuple[str, ...] = ()
    regime: Regime | None = None
    t0: int | None = None

    @property
    def value(self) -> int:
        return sum(term.value for term in self.terms)

    @property
    def hypotheses_ok(self) -> bool:
        return not self.violations

    @property
    def tag(self) -> str:
        """Regime name with the split index, e.g. ``split_high(3)``."""
        if self.regime is None:
            return self.formula
        if self.t0 is not None:
            return f"{self.regime.value}({self.t0})"
        return self.regime.value

    def to_dict(self) -> dict:
        return {
            "formula": self.formula,
            "regime": self.tag,
            "value": self.value,
            "terms": [[term.label, term.value] for term in self.terms],
            "hypotheses_ok": self.hypotheses_ok,
            "violations": list(self.violations),
        }


@dataclass
class Hypotheses:
    """Collects named conditions while a formula is evaluated."""

    violations: list[str] = field(default_factory=list)

    def require(self, condition: bool, description: str) -> None:
        if not condition:
            self.violations.append(description)
