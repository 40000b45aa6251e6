# Copyright (c) 2025, Kousheek Chakraborty
# All rights reserved.
#
# SPDX-License-Identifier: BSD-3-Clause

"""Exceptions shared by every package of the project."""

from __future__ import annotations

from typing import Any

__all__ = [
    "BadAlphaError",
    "BadPivotError",
    "CapExceededError",
    "ConfigError",
    "EmptyInputError",
    "EmptyResultError",
    "HypothesisViolatedError",
    "OutOfRangeError",
    "PartialFailureError",
    "SumOverflowError",
    "SumsetError",
    "TooLargeError",
    "UnclassifiableError",
    "UnknownClaimKindError",
    "ZeroScaleError",
]


class SumsetError(Exception):
    """Base class of all errors raised by the sumset library."""


class EmptyInputError(SumsetError, ValueError):
    pass


class SumOverflowError(SumsetError, OverflowError):
    pass


class EmptyResultError(SumsetError, ValueError):
    pass


class OutOfRangeError(SumsetError, ValueError):
    pass


class TooLargeError(SumsetError, ValueError):
    pass


class ZeroScaleError(SumsetError, ValueError):
    pass


class BadPivotError(SumsetError, ValueError):
    pass


class HypothesisViolatedError(SumsetError, ValueError):
    def __init__(self, violations: list[str], context: str = ""):
        self.violations = list(violations)
        prefix = f"{context}: " if context else ""
        super().__init__(f"{prefix}hypotheses violated: {'; '.join(self.violations)}")


class UnclassifiableError(SumsetError, ValueError):
    pass


class UnknownClaimKindError(SumsetError, ValueError):
    pass


class BadAlphaError(SumsetError, ValueError):
    pass


class ConfigError(SumsetError, ValueError):
    pass


class CapExceededError(SumsetError, RuntimeError):
    pass


class PartialFailureError(SumsetError, RuntimeError):
    """Raised after a campaign finished with per-instance error records.

    The report is still produced and persisted; it is attached as ``report``.
    """

    def __init__(self, message: str, report: Any):
        super().__init__(message)
        self.report = report
