# Copyright (c) 2025, Kousheek Chakraborty
# All rights reserved.
#
# SPDX-License-Identifier: BSD-3-Clause

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum

from core.errors import HypothesisViolatedError

from .sums import RepSequence, subsequence_sum_set

logger = logging.getLogger(__name__)


class SubseqKind(str, Enum):
    FULL = "full"
    FULL_SHAPE = "full_shape"
    MIN_LENGTH = "min_length"
    MIN_LENGTH_SHAPE = "min_length_shape"


@dataclass(frozen=True)
class ExtremalShape:
    """The sequences d*[1,k]_r (or d*[0,k-1]_r with zero) for some positive d."""

    k: int
    r: int
    with_zero: bool

    def describe(self) -> str:
        return f"d*[0,{self.k - 1}]_{self.r}" if self.with_zero else f"d*[1,{self.k}]_{self.r}"

    def match(self, S: RepSequence) -> int | None:
        """The dilation d when S has this shape, otherwise None."""
        if S.k != self.k or S.r != self.r or (self.with_zero and S.k < 2):
            return None
        first = 0 if self.with_zero else 1
        d = S.base[1] if self.with_zero else S.base[0]
        if d <= 0:
            return None
        if tuple(S.base) == tuple(d * i for i in range(first, first + self.k)):
            return d
        return None


def _m_index(alpha: int, r: int) -> int:
    # the m with (m-1)r <= alpha < mr
    return alpha // r + 1


def closed_form(
    kind: SubseqKind | str,
    k: int,
    r: int,
    alpha: int = 1,
    contains_zero: bool = False,
    strict: bool = True,
) -> int | ExtremalShape:
    """Predicted minimum number of subsequence sums, or the shape attaining it.

    ``full`` and ``min_length`` give the lower bound on |Sigma_alpha| for k distinct nonnegative
    terms each repeated r times; the ``*_shape`` kinds give the only sequences attaining it.
    """
    kind = SubseqKind(kind)
    if r < 1:
        raise ValueError(f"r must be a positive integer, got {r}.")
    violations: list[str] = []

    if kind == SubseqKind.FULL:
        need = 4 if contains_zero else 3
        if k < need:
            violations.append(f"k >= {need}")
        value: int | ExtremalShape = r * k * (k - 1) // 2 + 1 if contains_zero else r * k * (k + 1) // 2
    elif kind == SubseqKind.FULL_SHAPE:
        need = 7 if contains_zero else 6
        if k < need:
            violations.append(f"k >= {need}")
        value = ExtremalShape(k, r, contains_zero)
    elif kind == SubseqKind.MIN_LENGTH:
        if k < 4:
            violations.append("k >= 4")
        if not 1 <= alpha < k * r:
            violations.append("1 <= alpha < kr")
        m = _m_index(alpha, r)
        if contains_zero:
            value = r * k * (k - 1) // 2 - r * m * (m - 1) // 2 + (m - 1) * (m * r - alpha) + 1
        else:
            value = r * k * (k + 1) // 2 - r * m * (m + 1) // 2 + m * (m * r - alpha) + 1
    else:
        if k < 7:
            violations.append("k >= 7")
        if not 1 <= alpha <= k * r - 2:
            violations.append("1 <= alpha <= kr-2")
        value = ExtremalShape(k, r, contains_zero)

    if strict and violations:
        raise HypothesisViolatedError(violations, context=kind.value)
    return value


@dataclass(frozen=True)
class SubseqReport:
    """Closed-form bound against the enumerated subsequence sums, with the shape check.

    ``shape_ok`` is None unless the shape hypotheses hold and the bound is attained.
    """

    alpha: int
    contains_zero: bool
    expected: int
    cardinality: int
    violations: tuple[str, ...]
    shape: ExtremalShape
    shape_violations: tuple[str, ...]
    shape_d: int | None
    shape_ok: bool | None

    @property
    def holds(self) -> bool:
        return self.cardinality >= self.expected

    @property
    def equality(self) -> bool:
        return self.cardinality == self.expected

    def to_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "contains_zero": self.contains_zero,
            "expected": self.expected,
            "cardinality": self.cardinality,
            "violations": list(self.violations),
            "holds": self.holds,
            "equality": self.equality,
            "shape": self.shape.describe(),
            "shape_violations": list(self.shape_violations),
            "shape_d": self.shape_d,
            "shape_ok": self.shape_ok,
        }


def _violations(kind: SubseqKind, k: int, r: int, alpha: int, zero: bool) -> tuple[str, ...]:
    try:
        closed_form(kind, k, r, alpha, zero)
    except HypothesisViolatedError as err:
        return tuple(err.violations)
    return ()


def subsequence_verdict(S: RepSequence, alpha: int = 1) -> SubseqReport:
    """Compare |Sigma_alpha(S)| with the minimum-length bound and test the extremal shape on equality."""
    zero = S.contains_zero
    expected = closed_form(SubseqKind.MIN_LENGTH, S.k, S.r, alpha, zero, strict=False)
    shape = closed_form(SubseqKind.MIN_LENGTH_SHAPE, S.k, S.r, alpha, zero, strict=False)
    cardinality = len(subsequence_sum_set(S, alpha))
    violations = _violations(SubseqKind.MIN_LENGTH, S.k, S.r, alpha, zero)
    shape_violations = _violations(SubseqKind.MIN_LENGTH_SHAPE, S.k, S.r, alpha, zero)
    if S.base.min < 0:
        violations += ("terms nonnegative",)
        shape_violations += ("terms nonnegative",)

    shape_d = shape.match(S)
    shape_ok = None
    if not shape_violations and cardinality == expected:
        shape_ok = shape_d is not None
        if not shape_ok:
            logger.debug("%s attains %d sums without the shape %s", S, cardinality, shape.describe())
    return SubseqReport(
        alpha=alpha,
        contains_zero=zero,
        expected=expected,
        cardinality=cardinality,
        violations=violations,
        shape=shape,
        shape_violations=shape_violations,
        shape_d=shape_d,
        shape_ok=shape_ok,
    )
