# Copyright (c) 2025, Kousheek Chakraborty
# All rights reserved.
#
# SPDX-License-Identifier: BSD-3-Clause

from __future__ import annotations

import logging
import os
import sys
import time
from itertools import islice
from multiprocessing import Pool

import yaml
from tqdm import tqdm

from core.errors import PartialFailureError
from utils.logger import CSVLogger

from .checks import check_instance
from .config import GridConfig
from .grid import Instance, enumerate_instances
from .report import ChunkResult, VerifyReport, render_report

logger = logging.getLogger(__name__)

# instances per worker task
CHUNK_SIZE = 256


def _check_chunk(payload: tuple[list[str], list[Instance], bool]) -> ChunkResult:
    claims, instances, keep_rows = payload
    result = ChunkResult()
    for inst in instances:
        result.instances += 1
        for claim in claims:
            result.add(check_instance(inst.A, inst.H, inst.r, claim, index=inst.index), keep_row=keep_rows)
    return result


def _chunks(instances, size: int):
    iterator = iter(instances)
    while chunk := list(islice(iterator, size)):
        yield chunk


def _persist(report: VerifyReport, cfg: GridConfig, out_path: str) -> None:
    folder = os.path.dirname(os.path.abspath(out_path))
    os.makedirs(folder, exist_ok=True)
    with open(out_path, "w") as file:
        file.write(render_report(report.to_dict()))
    # dump the effective configuration next to the report
    with open(os.path.join(folder, "grid.yaml"), "w") as file:
        yaml.safe_dump(cfg.echo(), file, sort_keys=True)
    logger.info("report written to %s", out_path)


def run_campaign(cfg: GridConfig, out_path: str | None = None, csv_path: str | None = None) -> VerifyReport:
    """Check every configured claim on every instance of the grid.

    Instances are split into contiguous chunks of the enumeration order and checked in a process
    pool; results are merged in chunk order, so the report body does not depend on the worker count.

    Args:
        cfg: validated campaign config.
        out_path: JSON report file to write, if any.
        csv_path: per-instance CSV file to write, if any.

    Returns:
        The merged report.

    Raises:
        CapExceededError: the grid exceeds the instance cap.
        PartialFailureError: some instances ended in error records; the report is attached and persisted.
    """
    start = time.perf_counter()
    workers = cfg.resolved_workers()
    instances = enumerate_instances(cfg)
    keep_rows = csv_path is not None
    payloads = ((cfg.claims, chunk, keep_rows) for chunk in _chunks(instances, CHUNK_SIZE))

    report = VerifyReport(config=cfg.echo(), workers=workers)
    csv_logger = None
    if csv_path is not None:
        folder, name = os.path.split(os.path.abspath(csv_path))
        os.makedirs(folder, exist_ok=True)
        csv_logger = CSVLogger(folder, file_name=name)

    logger.info("campaign '%s' on %d worker(s), chunks of %d", cfg.name, workers, CHUNK_SIZE)
    disable = not cfg.progress or not sys.stderr.isatty()
    with tqdm(desc=f"verify {cfg.name}", unit=" inst", disable=disable) as progress_bar:
        if workers == 1:
            results = map(_check_chunk, payloads)
            _merge(results, report, csv_logger, progress_bar)
        else:
            with Pool(processes=workers) as pool:
                _merge(pool.imap(_check_chunk, payloads), report, csv_logger, progress_bar)

    report.finalize(cfg.claims)
    report.wall_time = time.perf_counter() - start

    for claim, tally in sorted(report.tallies.items()):
        logger.info(
            "%s: checked %d, inapplicable %d, held %d, violated %d, equality %d, conclusion held %d / violated %d, errors %d",
            claim,
            tally.checked,
            tally.inapplicable,
            tally.held,
            tally.violated,
            tally.equality,
            tally.conclusion_held,
            tally.conclusion_violated,
            tally.errors,
        )
    for record in report.counterexamples:
        logger.warning(
            "counterexample %s: A=%s H=%s r=%d regime=%s formula=%s enumerated=%s %s",
            record.claim,
            list(record.A),
            list(record.H),
            record.r,
            record.regime,
            record.formula,
            record.enumerated,
            "; ".join(record.failures),
        )

    if out_path is not None:
        _persist(report, cfg, out_path)
    if report.errors:
        raise PartialFailureError(f"{report.error_count} instance(s) ended in errors.", report)
    return report


def _merge(results, report: VerifyReport, csv_logger: CSVLogger | None, progress_bar: tqdm) -> None:
    for chunk in results:
        report.absorb(chunk)
        if csv_logger is not None:
            csv_logger.log_rows(chunk.rows)
        progress_bar.update(chunk.instances)
