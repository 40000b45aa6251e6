# Copyright (c) 2025, Kousheek Chakraborty
# All rights reserved.
#
# SPDX-License-Identifier: BSD-3-Clause

from __future__ import annotations

import importlib
import os
from dataclasses import asdict, dataclass, field, fields
from typing import Any

import psutil
import yaml

from bounds import Regime
from core.errors import ConfigError
from structure import ClaimKind

DIRECT = "direct"
WORKERS_ENV = "HFOLD_WORKERS"

# named upper limits of the H window, evaluated per (k, r)
H_LIMITS = {
    "kr": lambda k, r: k * r,
    "kr-1": lambda k, r: k * r - 1,
    "(k-1)r": lambda k, r: (k - 1) * r,
    "(k-1)r-1": lambda k, r: (k - 1) * r - 1,
    "(k-2)r": lambda k, r: (k - 2) * r,
    "(k-2)r-1": lambda k, r: (k - 2) * r - 1,
}

_CAMPAIGNS: dict[str, str] = {}


def register_campaign(id: str, cfg_entry_point: str) -> None:
    """Register a named campaign config, given as ``"package.module:file.yaml"``."""
    if id in _CAMPAIGNS:
        raise ConfigError(f"Campaign '{id}' is already registered.")
    _CAMPAIGNS[id] = cfg_entry_point


def registered_campaigns() -> list[str]:
    return sorted(_CAMPAIGNS)


def campaign_path(id: str) -> str:
    """Resolve a registered campaign id to the YAML file next to its module."""
    try:
        entry_point = _CAMPAIGNS[id]
    except KeyError:
        raise ConfigError(f"Unknown campaign '{id}'. Registered: {', '.join(registered_campaigns())}.") from None
    module_name, file_name = entry_point.split(":")
    module = importlib.import_module(module_name)
    return os.path.join(os.path.dirname(module.__file__), file_name)


def parse_range(value: Any) -> tuple[int, int]:
    """``[lo, hi]``, ``"lo..hi"`` or a single integer into an inclusive (lo, hi)."""
    if isinstance(value, bool):
        raise ConfigError(f"Invalid range {value!r}.")
    if isinstance(value, int):
        return value, value
    if isinstance(value, str):
        parts = value.split("..")
        try:
            if len(parts) == 1:
                return int(parts[0]), int(parts[0])
            if len(parts) == 2:
                return int(parts[0]), int(parts[1])
        except ValueError:
            pass
        raise ConfigError(f"Invalid range '{value}', expected 'lo..hi'.")
    if isinstance(value, (list, tuple)) and len(value) == 2:
        return int(value[0]), int(value[1])
    raise ConfigError(f"Invalid range {value!r}, expected [lo, hi].")


def parse_int_list(value: Any) -> tuple[int, ...]:
    """Comma-separated integers and ``lo..hi`` ranges, e.g. ``"1,2,5..7"``."""
    if isinstance(value, (list, tuple)):
        return tuple(int(v) for v in value)
    if isinstance(value, int) and not isinstance(value, bool):
        return (value,)
    if not isinstance(value, str):
        raise ConfigError(f"Invalid integer list {value!r}.")
    out: list[int] = []
    for token in value.split(","):
        token = token.strip()
        if not token:
            continue
        try:
            if ".." in token:
                lo, hi = parse_range(token)
                out.extend(range(lo, hi + 1))
            else:
                out.append(int(token))
        except ValueError:
            raise ConfigError(f"Invalid integer '{token}' in '{value}'.") from None
    return tuple(out)


def _as_list(value: Any) -> list[str]:
    if isinstance(value, str):
        return [v.strip() for v in value.split(",") if v.strip()]
    return [str(v) for v in value]


def default_workers() -> int:
    env = os.environ.get(WORKERS_ENV)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise ConfigError(f"{WORKERS_ENV} must be an integer, got '{env}'.") from None
    return psutil.cpu_count(logical=False) or 1


@dataclass
class GridConfig:
    """Instance grid and checks of one verification campaign.

    Instances are (A, H, r): A is a k-subset of ``element_window`` (with ``contains_zero`` it is
    {0} plus a (k-1)-subset), H a t-subset of [h_lo, h_hi] clipped at the largest feasible count.
    """

    name: str = "custom"
    k_range: tuple[int, int] = (3, 5)
    element_window: tuple[int, int] = (1, 8)
    r_range: tuple[int, int] = (1, 3)
    t_range: tuple[int, int] = (2, 2)
    h_lo: int = 1
    h_hi: int | str = "(k-1)r-1"
    regimes: list[str] = field(default_factory=list)
    claims: list[str] = field(default_factory=lambda: [DIRECT])
    contains_zero: bool = False
    dedupe_dilation: bool = False
    instance_cap: int = 2_000_000
    sample: int | None = None
    seed: int | None = None
    workers: int | None = None
    progress: bool = True

    def __post_init__(self) -> None:
        self.k_range = parse_range(self.k_range)
        self.element_window = parse_range(self.element_window)
        self.r_range = parse_range(self.r_range)
        self.t_range = parse_range(self.t_range)
        self.regimes = _as_list(self.regimes)
        self.claims = _as_list(self.claims)
        if isinstance(self.h_hi, str) and self.h_hi.lstrip("-").isdigit():
            self.h_hi = int(self.h_hi)

    def validate(self) -> GridConfig:
        for label, (lo, hi) in (
            ("k_range", self.k_range),
            ("element_window", self.element_window),
            ("r_range", self.r_range),
            ("t_range", self.t_range),
        ):
            if lo > hi:
                raise ConfigError(f"{label} [{lo}, {hi}] is empty.")
        if self.k_range[0] < 1 or self.r_range[0] < 1 or self.t_range[0] < 1 or self.h_lo < 1:
            raise ConfigError("k, r, t and h_lo must be positive.")
        width = self.element_window[1] - self.element_window[0] + 1
        needed = self.k_range[1] - 1 if self.contains_zero else self.k_range[1]
        if width < needed:
            raise ConfigError(f"element_window of width {width} cannot hold {needed} elements.")
        if self.contains_zero and self.element_window[0] < 1:
            raise ConfigError("With contains_zero the element_window must be positive.")
        if isinstance(self.h_hi, str) and self.h_hi not in H_LIMITS:
            raise ConfigError(f"Unknown h_hi '{self.h_hi}'. Use an integer or one of {', '.join(H_LIMITS)}.")
        known_regimes = {regime.value for regime in Regime}
        for regime in self.regimes:
            if regime not in known_regimes:
                raise ConfigError(f"Unknown regime '{regime}'.")
        known_claims = {DIRECT} | {claim.value for claim in ClaimKind}
        for claim in self.claims:
            if claim not in known_claims:
                raise ConfigError(f"Unknown claim '{claim}'.")
        if not self.claims:
            raise ConfigError("At least one claim must be checked.")
        if self.sample is not None:
            if self.seed is None:
                raise ConfigError("Sampled campaigns need an explicit seed.")
            if self.sample < 0:
                raise ConfigError("sample must be nonnegative.")
        if self.workers is not None and self.workers < 1:
            raise ConfigError("workers must be at least 1.")
        return self

    def h_window(self, k: int, r: int) -> tuple[int, int]:
        """[h_lo, h_hi] for one (k, r), clipped to the feasible counts."""
        hi = H_LIMITS[self.h_hi](k, r) if isinstance(self.h_hi, str) else self.h_hi
        return self.h_lo, min(hi, k * r)

    def resolved_workers(self) -> int:
        return self.workers if self.workers is not None else default_workers()

    def echo(self) -> dict:
        """Fields that determine report content (scheduling fields excluded)."""
        data = asdict(self)
        for key in ("workers", "progress"):
            data.pop(key)
        return {key: list(value) if isinstance(value, tuple) else value for key, value in data.items()}


def load_grid_config(source: str | None = None, overrides: dict[str, Any] | None = None) -> GridConfig:
    """Build a validated config from a registered campaign id or a YAML file.

    Args:
        source: registered id or path; None starts from the defaults.
        overrides: values that replace file values; None entries are ignored.

    Returns:
        The validated config.
    """
    data: dict[str, Any] = {}
    if source is not None:
        path = campaign_path(source) if source in _CAMPAIGNS else source
        if not os.path.isfile(path):
            raise ConfigError(f"Config '{source}' is neither a registered campaign nor a file.")
        with open(path) as file:
            try:
                loaded = yaml.safe_load(file) or {}
            except yaml.YAMLError as err:
                raise ConfigError(f"Cannot parse '{path}': {err}") from err
        if not isinstance(loaded, dict):
            raise ConfigError(f"Config '{path}' must be a mapping of keys to values.")
        data.update(loaded)
        data.setdefault("name", source if source in _CAMPAIGNS else os.path.splitext(os.path.basename(path))[0])
    data.update({key: value for key, value in (overrides or {}).items() if value is not None})

    known = {f.name for f in fields(GridConfig)}
    unknown = sorted(set(data) - known)
    if unknown:
        raise ConfigError(f"Unknown config keys: {', '.join(unknown)}.")
    try:
        cfg = GridConfig(**data)
    except (TypeError, ValueError) as err:
        if isinstance(err, ConfigError):
            raise
        raise ConfigError(f"Invalid config: {err}") from err
    return cfg.validate()
