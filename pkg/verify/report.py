# Copyright (c) 2025, Kousheek Chakraborty
# All rights reserved.
#
# SPDX-License-Identifier: BSD-3-Clause

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any

from .checks import InstanceRecord, Verdict


@dataclass
class ClaimTally:
    checked: int = 0
    inapplicable: int = 0
    held: int = 0
    violated: int = 0
    equality: int = 0
    conclusion_held: int = 0
    conclusion_violated: int = 0
    errors: int = 0

    def add(self, record: InstanceRecord) -> None:
        self.checked += 1
        if record.verdict == Verdict.ERROR:
            self.errors += 1
            return
        if record.verdict == Verdict.INAPPLICABLE:
            self.inapplicable += 1
            return
        if record.enumerated is not None and record.formula is not None and record.enumerated < record.formula:
            self.violated += 1
        else:
            self.held += 1
        if record.equality:
            self.equality += 1
        if record.conclusion_ok is True:
            self.conclusion_held += 1
        elif record.conclusion_ok is False:
            self.conclusion_violated += 1

    def merge(self, other: ClaimTally) -> None:
        for name, value in asdict(other).items():
            setattr(self, name, getattr(self, name) + value)


@dataclass
class VerifyReport:
    """Merged outcome of a campaign.

    ``body`` content depends only on the config; ``wall_time`` and ``workers`` live in the meta block.
    """

    config: dict[str, Any]
    instances_checked: int = 0
    tallies: dict[str, ClaimTally] = field(default_factory=dict)
    counterexamples: list[InstanceRecord] = field(default_factory=list)
    errors: list[InstanceRecord] = field(default_factory=list)
    wall_time: float = 0.0
    workers: int = 1

    @property
    def violation_count(self) -> int:
        return len(self.counterexamples)

    @property
    def error_count(self) -> int:
        return len(self.errors)

    def absorb(self, chunk: ChunkResult) -> None:
        self.instances_checked += chunk.instances
        for claim, tally in chunk.tallies.items():
            self.tallies.setdefault(claim, ClaimTally()).merge(tally)
        self.counterexamples.extend(chunk.counterexamples)
        self.errors.extend(chunk.errors)

    def finalize(self, claim_order: list[str]) -> None:
        rank = {claim: i for i, claim in enumerate(claim_order)}
        key = lambda rec: (rec.index, rank.get(rec.claim, len(rank)))  # noqa: E731
        self.counterexamples.sort(key=key)
        self.errors.sort(key=key)

    def body(self) -> dict[str, Any]:
        return {
            "config": self.config,
            "instances_checked": self.instances_checked,
            "tallies": {claim: asdict(tally) for claim, tally in self.tallies.items()},
            "counterexamples": [rec.to_dict() for rec in self.counterexamples],
            "errors": [rec.to_dict() for rec in self.errors],
        }

    def to_dict(self) -> dict[str, Any]:
        return {"body": self.body(), "meta": {"wall_time": round(self.wall_time, 3), "workers": self.workers}}


@dataclass
class ChunkResult:
    """Per-partition accumulator returned by campaign workers."""

    instances: int = 0
    tallies: dict[str, ClaimTally] = field(default_factory=dict)
    counterexamples: list[InstanceRecord] = field(default_factory=list)
    errors: list[InstanceRecord] = field(default_factory=list)
    rows: list[dict[str, Any]] = field(default_factory=list)

    def add(self, record: InstanceRecord, keep_row: bool = False) -> None:
        self.tallies.setdefault(record.claim, ClaimTally()).add(record)
        if record.verdict == Verdict.VIOLATED:
            self.counterexamples.append(record)
        elif record.verdict == Verdict.ERROR:
            self.errors.append(record)
        if keep_row:
            self.rows.append(record.csv_row())


def render_report(report: dict[str, Any]) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def parse_report(text: str) -> dict[str, Any]:
    return json.loads(text)
