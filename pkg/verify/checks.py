# Copyright (c) 2025, Kousheek Chakraborty
# All rights reserved.
#
# SPDX-License-Identifier: BSD-3-Clause

"""Single-instance checks: every bound and inverse claim treated as falsifiable."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import asdict, dataclass
from enum import Enum
from typing import Any

from bounds import HSpec, as_hspec, classify_regime
from core import IntSet, generalized_union_sumset, normalize_set
from core.errors import SumsetError
from structure import inverse_verdict

from .config import DIRECT


class Verdict(str, Enum):
    HELD = "held"
    TIGHT = "tight"
    VIOLATED = "violated"
    INAPPLICABLE = "inapplicable"
    ERROR = "error"


@dataclass(frozen=True)
class InstanceRecord:
    """Outcome of one claim on one (A, H, r)."""

    r: int
    A: tuple[int, ...]
    H: tuple[int, ...]
    claim: str
    verdict: Verdict
    regime: str | None = None
    formula: int | None = None
    enumerated: int | None = None
    violations: tuple[str, ...] = ()
    equality: bool | None = None
    conclusion_ok: bool | None = None
    failures: tuple[str, ...] = ()
    error: str | None = None
    index: int = -1

    @property
    def k(self) -> int:
        return len(self.A)

    def to_dict(self) -> dict[str, Any]:
        data = asdict(self)
        data["verdict"] = self.verdict.value
        for key in ("A", "H", "violations", "failures"):
            data[key] = list(data[key])
        return data

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> InstanceRecord:
        values = dict(data)
        values["verdict"] = Verdict(values["verdict"])
        for key in ("A", "H", "violations", "failures"):
            values[key] = tuple(values.get(key, ()))
        return cls(**values)

    def csv_row(self) -> dict[str, Any]:
        return {
            "r": self.r,
            "k": self.k,
            "A": " ".join(str(a) for a in self.A),
            "H": " ".join(str(h) for h in self.H),
            "claim": self.claim,
            "regime": self.regime or "",
            "formula": "" if self.formula is None else self.formula,
            "enumerated": "" if self.enumerated is None else self.enumerated,
            "verdict": self.verdict.value,
            "error": self.error or "",
        }


def _sign_violations(A: IntSet, contains_zero: bool) -> list[str]:
    # bounds only speak about nonnegative sets
    if contains_zero:
        return [] if A.min >= 0 else ["A nonnegative"]
    return [] if A.min > 0 else ["A positive"]


def _bound_verdict(hypotheses_ok: bool, formula: int, enumerated: int) -> Verdict:
    if not hypotheses_ok:
        return Verdict.INAPPLICABLE
    if enumerated < formula:
        return Verdict.VIOLATED
    return Verdict.TIGHT if enumerated == formula else Verdict.HELD


def check_direct(
    A: IntSet | Iterable[int],
    H: HSpec | Iterable[int],
    r: int,
    contains_zero: bool | None = None,
    index: int = -1,
) -> InstanceRecord:
    """Compare the regime bound for (A, H, r) with the enumerated |H^(r)A|.

    ``contains_zero`` selects the bound family and defaults to whether 0 is in A. Library errors
    become a record with verdict ``error``.
    """
    A = A if isinstance(A, IntSet) else normalize_set(A)
    H = as_hspec(H)
    zero = (0 in A) if contains_zero is None else contains_zero
    base = {"r": r, "A": tuple(A), "H": tuple(H), "claim": DIRECT, "index": index}
    try:
        report = classify_regime(A.k, r, H, zero)
        enumerated = len(generalized_union_sumset(A, H, r))
    except SumsetError as err:
        return InstanceRecord(verdict=Verdict.ERROR, error=f"{type(err).__name__}: {err}", **base)

    violations = tuple(report.violations) + tuple(_sign_violations(A, zero))
    if zero != (0 in A):
        violations += ("0 in A" if zero else "0 not in A",)
    return InstanceRecord(
        verdict=_bound_verdict(not violations, report.value, enumerated),
        regime=report.tag,
        formula=report.value,
        enumerated=enumerated,
        violations=violations,
        equality=enumerated == report.value,
        **base,
    )


def check_inverse(
    A: IntSet | Iterable[int],
    H: HSpec | Iterable[int],
    r: int,
    claim_kind: str = "auto",
    index: int = -1,
) -> InstanceRecord:
    """Run one inverse claim; equality with a failed conclusion is a violation."""
    A = A if isinstance(A, IntSet) else normalize_set(A)
    H = as_hspec(H)
    name = getattr(claim_kind, "value", claim_kind)
    base = {"r": r, "A": tuple(A), "H": tuple(H), "index": index}
    try:
        report = inverse_verdict(A, H, r, claim_kind)
    except SumsetError as err:
        return InstanceRecord(claim=name, verdict=Verdict.ERROR, error=f"{type(err).__name__}: {err}", **base)

    if not report.hypotheses_ok:
        verdict = Verdict.INAPPLICABLE
    elif report.cardinality < report.bound:
        verdict = Verdict.VIOLATED
    elif report.equality:
        verdict = Verdict.TIGHT if report.conclusion_ok else Verdict.VIOLATED
    else:
        verdict = Verdict.HELD
    return InstanceRecord(
        claim=name,
        verdict=verdict,
        regime=report.claim_kind.value,
        formula=report.bound,
        enumerated=report.cardinality,
        violations=tuple(report.violations),
        equality=report.equality,
        conclusion_ok=report.conclusion_ok,
        failures=report.failures,
        **base,
    )


def check_instance(
    A: IntSet, H: HSpec, r: int, claim: str, contains_zero: bool | None = None, index: int = -1
) -> InstanceRecord:
    if claim == DIRECT:
        return check_direct(A, H, r, contains_zero, index=index)
    return check_inverse(A, H, r, claim, index=index)


def replay(record: InstanceRecord | dict[str, Any]) -> InstanceRecord:
    """Re-run the check behind a report entry and return the fresh record."""
    if isinstance(record, dict):
        record = InstanceRecord.from_dict(record)
    return check_instance(normalize_set(record.A), HSpec.of(record.H), record.r, record.claim, index=record.index)
