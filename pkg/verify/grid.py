# Copyright (c) 2025, Kousheek Chakraborty
# All rights reserved.
#
# SPDX-License-Identifier: BSD-3-Clause

from __future__ import annotations

import logging
from collections.abc import Iterator
from functools import reduce
from itertools import combinations
from math import comb, gcd
from typing import NamedTuple

import numpy as np

from bounds import HSpec, classify_regime
from core import IntSet
from core.errors import CapExceededError, UnclassifiableError

from .config import GridConfig

logger = logging.getLogger(__name__)


class Instance(NamedTuple):
    index: int
    r: int
    A: IntSet
    H: HSpec


def _h_sets(cfg: GridConfig, k: int, r: int) -> list[HSpec]:
    """H candidates for one (k, r) in lexicographic order, filtered by regime."""
    lo, hi = cfg.h_window(k, r)
    window = range(lo, hi + 1)
    out: list[HSpec] = []
    for t in range(cfg.t_range[0], cfg.t_range[1] + 1):
        for hs in combinations(window, t):
            H = HSpec(hs)
            if cfg.regimes and _regime(k, r, H, cfg.contains_zero) not in cfg.regimes:
                continue
            out.append(H)
    return out


def _regime(k: int, r: int, H: HSpec, contains_zero: bool) -> str | None:
    try:
        return classify_regime(k, r, H, contains_zero).regime.value
    except UnclassifiableError:
        return None


def _is_reduced(elements: tuple[int, ...]) -> bool:
    # gcd of the differences from the minimum is 1
    base = elements[0]
    return reduce(gcd, (a - base for a in elements[1:]), 0) == 1


def _a_sets(cfg: GridConfig, k: int) -> Iterator[IntSet]:
    lo, hi = cfg.element_window
    window = range(lo, hi + 1)
    if cfg.contains_zero:
        subsets = ((0,) + rest for rest in combinations(window, k - 1))
    else:
        subsets = combinations(window, k)
    for elements in subsets:
        if cfg.dedupe_dilation and len(elements) > 1 and not _is_reduced(elements):
            continue
        yield IntSet(tuple(elements))


def projected_count(cfg: GridConfig) -> int:
    """Instances the grid yields before dilation dedupe (an upper bound when dedupe is on)."""
    width = cfg.element_window[1] - cfg.element_window[0] + 1
    total = 0
    for r in range(cfg.r_range[0], cfg.r_range[1] + 1):
        for k in range(cfg.k_range[0], cfg.k_range[1] + 1):
            a_count = comb(width, k - 1 if cfg.contains_zero else k)
            if a_count:
                total += a_count * len(_h_sets(cfg, k, r))
    return total


def _stream(cfg: GridConfig) -> Iterator[Instance]:
    index = 0
    for r in range(cfg.r_range[0], cfg.r_range[1] + 1):
        for k in range(cfg.k_range[0], cfg.k_range[1] + 1):
            h_sets = _h_sets(cfg, k, r)
            if not h_sets:
                continue
            for A in _a_sets(cfg, k):
                for H in h_sets:
                    yield Instance(index, r, A, H)
                    index += 1


def enumerate_instances(cfg: GridConfig) -> Iterator[Instance]:
    """Deterministic stream of (A, H, r) ordered by r, k, A, H.

    With ``sample`` set, a seeded subset of the stream is drawn, kept in stream order. Instance
    indices always refer to positions in the full stream.

    Raises:
        CapExceededError: the projected instance count exceeds ``instance_cap``.
    """
    projected = projected_count(cfg)
    checked = projected if cfg.sample is None else min(projected, cfg.sample)
    if checked > cfg.instance_cap:
        raise CapExceededError(f"Projected {checked} instances exceed the cap of {cfg.instance_cap}.")
    logger.info("projected %d instances", checked)
    if cfg.sample is None:
        return _stream(cfg)
    return _sampled(cfg)


def _sampled(cfg: GridConfig) -> Iterator[Instance]:
    # one pass over the stream, holding at most ``sample`` instances
    size = cfg.sample
    if size == 0:
        return
    rng = np.random.default_rng(cfg.seed)
    reservoir: list[Instance] = []
    for seen, inst in enumerate(_stream(cfg)):
        if seen < size:
            reservoir.append(inst)
            continue
        slot = int(rng.integers(0, seen + 1))
        if slot < size:
            reservoir[slot] = inst
    reservoir.sort(key=lambda inst: inst.index)
    yield from reservoir
