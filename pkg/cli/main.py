# Copyright (c) 2025, Kousheek Chakraborty
# All rights reserved.
#
# SPDX-License-Identifier: BSD-3-Clause

"""Command-line front end: sumsets, bounds, extremal sets, subsequence sums and campaigns.

Exit codes: 0 clean, 1 a mathematical violation was found, 2 usage or configuration error. A
campaign that ends with error records exits 2 unless it also found a violation.
"""

from __future__ import annotations

import argparse
import csv
import logging
import os
import sys
from datetime import datetime

from bounds import (
    HIGH_RANGE_REGIMES,
    classify_regime,
    high_range_lower,
    pivot_lower,
    single_fold_lower,
    zero_main_lower,
)
from core import FoldParams, generalized_fold_sumset, generalized_union_sumset, normalize_set
from core.errors import PartialFailureError, SumsetError
from structure import ClaimKind, ExtremalKind, build_extremal
from subseq import RepSequence, subsequence_sum_set, subsequence_verdict
from utils.logger import CSVLogger, configure_logging
from verify import (
    Verdict,
    check_instance,
    load_grid_config,
    registered_campaigns,
    render_report,
    run_campaign,
)
from verify.config import DIRECT, parse_int_list

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


def format_set(values) -> str:
    """Compact set literal with runs written as lo..hi, e.g. ``{1..4,7}``."""
    values = list(values)
    parts: list[str] = []
    i = 0
    while i < len(values):
        j = i
        while j + 1 < len(values) and values[j + 1] == values[j] + 1:
            j += 1
        parts.append(f"{values[i]}..{values[j]}" if j - i >= 2 else ",".join(str(v) for v in values[i : j + 1]))
        i = j + 1
    return "{" + ",".join(parts) + "}"


def _emit(args, data: dict, lines: list[str]) -> None:
    if args.format == "json":
        sys.stdout.write(render_report(data))
    elif args.format == "csv":
        # one flat row of the scalar fields
        scalars = {key: value for key, value in data.items() if isinstance(value, (int, str, bool)) or value is None}
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(scalars)
        writer.writerow("" if v is None else v for v in scalars.values())
    else:
        for line in lines:
            print(line)


def cmd_sumset(args) -> int:
    A = normalize_set(parse_int_list(args.set))
    if args.H is not None:
        H = parse_int_list(args.H)
        result = generalized_union_sumset(A, H, args.r)
        label = f"{format_set(sorted(set(H)))}^({args.r}){A}"
    else:
        if args.h is None:
            raise SumsetError("Give --h for a single count or --H for a set of counts.")
        result = generalized_fold_sumset(A, FoldParams(args.h, args.r))
        label = f"{args.h}^({args.r}){A}"
    values = [] if result is None else list(result)
    data = {
        "set": values,
        "cardinality": len(values),
        "min": values[0] if values else None,
        "max": values[-1] if values else None,
    }
    lines = [f"{label} = {format_set(values)}", f"|.| = {len(values)}"]
    if values:
        lines.append(f"min = {values[0]}, max = {values[-1]}")
    _emit(args, data, lines)
    return EXIT_OK


def cmd_bound(args) -> int:
    H = parse_int_list(args.H)
    if args.formula == "auto":
        report = classify_regime(args.k, args.r, H, args.zero)
    elif args.formula == "pivot":
        report = pivot_lower(args.k, H, args.r, strict=False)
    elif args.formula == "single_fold":
        report = single_fold_lower(args.k, H[0], args.r, strict=False)
    elif args.formula == "zero_main":
        report = zero_main_lower(args.k, H, args.r, strict=False)
    else:
        report = high_range_lower(args.formula, args.k, H, args.r, t0=args.t0, strict=False)

    lines = [f"regime: {report.tag}", f"value: {report.value}"]
    lines += [f"  {term.label:<24} {term.value:>8}" for term in report.terms]
    if report.violations:
        lines.append("hypotheses violated: " + "; ".join(report.violations))
    else:
        lines.append("hypotheses: ok")
    _emit(args, report.to_dict(), lines)
    return EXIT_OK


def cmd_extremal(args) -> int:
    extras = parse_int_list(args.extras) if args.extras else None
    H = parse_int_list(args.H) if args.H else None
    A, H_, expected = build_extremal(
        args.kind, k=args.k, r=args.r, extras=extras, H=H, top_pair=args.top_pair, with_zero=args.with_zero
    )
    actual = len(generalized_union_sumset(A, H_, args.r))
    verified = actual == expected
    data = {"A": list(A), "H": list(H_), "expected": expected, "enumerated": actual, "verified": verified}
    lines = [f"A = {A}", f"H = {H_}", f"expected = {expected}", f"enumerated = {actual} ({'verified' if verified else 'MISMATCH'})"]
    _emit(args, data, lines)
    return EXIT_OK if verified else EXIT_VIOLATION


def cmd_subseq(args) -> int:
    S = RepSequence(normalize_set(parse_int_list(args.set)), args.r)
    sums = list(subsequence_sum_set(S, args.alpha))
    report = subsequence_verdict(S, args.alpha)
    data = {"sequence": str(S), "sums": sums, **report.to_dict()}
    lines = [
        f"Sigma_{args.alpha}{S} = {format_set(sums)}",
        f"|.| = {report.cardinality}, closed form = {report.expected}",
        f"bound {'holds' if report.holds else 'VIOLATED'}{' with equality' if report.equality else ''}",
    ]
    if report.violations:
        lines.append("hypotheses violated: " + "; ".join(report.violations))
    if report.shape_ok is not None:
        lines.append(f"shape {report.shape.describe()}: {'matches' if report.shape_ok else 'VIOLATED'}")
    _emit(args, data, lines)
    bound_broken = not report.violations and not report.holds
    return EXIT_VIOLATION if bound_broken or report.shape_ok is False else EXIT_OK


def _default_out(name: str) -> str:
    log_root_path = os.path.abspath(os.path.join("logs", "verify", name))
    log_dir = datetime.now().strftime("%Y-%m-%d_%H-%M-%S")
    return os.path.join(log_root_path, log_dir, "report.json")


def cmd_verify(args) -> int:
    overrides = {
        "k_range": args.k_range,
        "element_window": args.element_window,
        "r_range": args.r_range,
        "t_range": args.t_range,
        "h_lo": args.h_lo,
        "h_hi": args.h_hi,
        "regimes": args.regimes,
        "claims": args.claims,
        "contains_zero": True if args.zero else None,
        "dedupe_dilation": True if args.dedupe else None,
        "instance_cap": args.instance_cap,
        "sample": args.sample,
        "seed": args.seed,
        "workers": args.workers,
        "progress": False if args.no_progress else None,
    }
    cfg = load_grid_config(args.config, overrides)
    out_path = args.out or _default_out(cfg.name)
    logger.info("effective config: %s", cfg.echo())
    partial = False
    try:
        report = run_campaign(cfg, out_path=out_path, csv_path=args.csv)
    except PartialFailureError as err:
        report, partial = err.report, True
        logger.error("%s Narrow the grid; the report was still written to %s", err, out_path)

    print(f"instances checked: {report.instances_checked}")
    for claim, tally in sorted(report.tallies.items()):
        print(f"  {claim}: held {tally.held}, violated {tally.violated}, inapplicable {tally.inapplicable}, "
              f"equality {tally.equality}, conclusion violated {tally.conclusion_violated}, errors {tally.errors}")
    print(f"counterexamples: {report.violation_count}")
    # counterexamples outrank error records
    if report.violation_count:
        return EXIT_VIOLATION
    return EXIT_USAGE if partial else EXIT_OK


def cmd_check(args) -> int:
    A = normalize_set(parse_int_list(args.set))
    H = parse_int_list(args.H)
    record = check_instance(A, H, args.r, args.claim)
    if record.verdict == Verdict.ERROR:
        raise SumsetError(record.error)
    if args.csv:
        folder, name = os.path.split(os.path.abspath(args.csv))
        CSVLogger(folder, file_name=name).log(record.csv_row())
    lines = [
        f"claim: {record.claim} ({record.regime})",
        f"formula: {record.formula}, enumerated: {record.enumerated}",
        f"verdict: {record.verdict.value}",
    ]
    if record.violations:
        lines.append("hypotheses violated: " + "; ".join(record.violations))
    if record.failures:
        lines.append("conclusion failures: " + "; ".join(record.failures))
    _emit(args, record.to_dict(), lines)
    return EXIT_VIOLATION if record.verdict == Verdict.VIOLATED else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sumsets", description="Generalized H-fold sumsets and their lower bounds.")
    parser.add_argument("--verbose", action="store_true", default=False, help="Log debug messages.")
    parser.add_argument(
        "--format", type=str, default="human", choices=["human", "json", "csv"], help="Output mode."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sumset", help="Compute h^(r)A or H^(r)A.")
    p.add_argument("--set", type=str, required=True, help="Elements of A, e.g. '1,2,4' or '1..5'.")
    p.add_argument("--h", type=int, default=None, help="Single number of summands.")
    p.add_argument("--H", type=str, default=None, help="Set of summand counts, e.g. '2,3'.")
    p.add_argument("--r", type=int, default=1, help="Multiplicity cap per element.")
    p.set_defaults(func=cmd_sumset)

    p = sub.add_parser("bound", help="Evaluate the lower bound for (k, r, H).")
    p.add_argument("--k", type=int, required=True, help="Cardinality of A.")
    p.add_argument("--r", type=int, required=True, help="Multiplicity cap per element.")
    p.add_argument("--H", type=str, required=True, help="Set of summand counts.")
    p.add_argument("--zero", action="store_true", default=False, help="A contains 0.")
    p.add_argument(
        "--formula",
        type=str,
        default="auto",
        choices=["auto", "pivot", "single_fold", "zero_main"] + [regime.value for regime in HIGH_RANGE_REGIMES],
        help="Bound to evaluate; 'auto' selects it from the regime.",
    )
    p.add_argument("--t0", type=int, default=None, help="Split index for the split_high formulas.")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("extremal", help="Build an extremal construction and verify its cardinality.")
    p.add_argument("--kind", type=str, required=True, choices=[kind.value for kind in ExtremalKind])
    p.add_argument("--k", type=int, default=None, help="Cardinality of A.")
    p.add_argument("--r", type=int, default=1, help="Multiplicity cap per element.")
    p.add_argument("--extras", type=str, default=None, help="Extra integers of the construction.")
    p.add_argument("--H", type=str, default=None, help="Summand counts for non_ap_small.")
    p.add_argument("--top_pair", action="store_true", default=False, help="Use H = {rk-1, rk} for non_ap_gap.")
    p.add_argument("--with_zero", action="store_true", default=False, help="Add 0 to A for non_ap_small.")
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("subseq", help="Subsequence sums of (A)_r against the closed form.")
    p.add_argument("--set", type=str, required=True, help="Distinct terms of the sequence.")
    p.add_argument("--r", type=int, default=1, help="Repetitions of each term.")
    p.add_argument("--alpha", type=int, default=1, help="Minimum subsequence length.")
    p.set_defaults(func=cmd_subseq)

    p = sub.add_parser("verify", help="Run a verification campaign.")
    p.add_argument(
        "--config", type=str, default=None, help=f"Campaign id ({', '.join(registered_campaigns())}) or YAML file."
    )
    p.add_argument("--workers", type=int, default=None, help="Worker processes.")
    p.add_argument("--out", type=str, default=None, help="Path of the JSON report.")
    p.add_argument("--csv", type=str, default=None, help="Path of the per-instance CSV.")
    p.add_argument("--seed", type=int, default=None, help="Seed for sampled campaigns.")
    p.add_argument("--sample", type=int, default=None, help="Number of instances to sample.")
    p.add_argument("--k_range", type=str, default=None, help="e.g. '3..5'.")
    p.add_argument("--element_window", type=str, default=None, help="e.g. '1..8'.")
    p.add_argument("--r_range", type=str, default=None, help="e.g. '1..3'.")
    p.add_argument("--t_range", type=str, default=None, help="e.g. '2..2'.")
    p.add_argument("--h_lo", type=int, default=None, help="Smallest summand count.")
    p.add_argument("--h_hi", type=str, default=None, help="Largest summand count or a named limit like '(k-1)r-1'.")
    p.add_argument("--regimes", type=str, default=None, help="Comma-separated regime filter.")
    p.add_argument("--claims", type=str, default=None, help="Comma-separated claims ('direct' or claim kinds).")
    p.add_argument("--zero", action="store_true", default=False, help="Put 0 in every A.")
    p.add_argument("--dedupe", action="store_true", default=False, help="Skip dilated copies of A.")
    p.add_argument("--instance_cap", type=int, default=None, help="Refuse grids larger than this.")
    p.add_argument("--no_progress", action="store_true", default=False, help="Disable the progress bar.")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("check", help="Check one instance, e.g. to replay a counterexample.")
    p.add_argument("--set", type=str, required=True, help="Elements of A.")
    p.add_argument("--H", type=str, required=True, help="Set of summand counts.")
    p.add_argument("--r", type=int, required=True, help="Multiplicity cap per element.")
    p.add_argument(
        "--claim", type=str, default=DIRECT, choices=[DIRECT] + [claim.value for claim in ClaimKind], help="Claim."
    )
    p.add_argument("--csv", type=str, default=None, help="Append the record to this CSV file.")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return EXIT_OK if err.code == 0 else EXIT_USAGE
    configure_logging(args.verbose)
    try:
        return args.func(args)
    except (SumsetError, ValueError) as err:
        logger.error("%s", err)
        return EXIT_USAGE


def main_entry() -> None:
    sys.exit(main())
