import csv
import json
import os

import pytest

from core import IntSet, dilate
from core.errors import CapExceededError, ConfigError
from verify import (
    ClaimTally,
    GridConfig,
    Verdict,
    check_direct,
    check_instance,
    check_inverse,
    enumerate_instances,
    load_grid_config,
    parse_report,
    registered_campaigns,
    render_report,
    replay,
    run_campaign,
)
from verify.config import parse_int_list, parse_range
from verify.grid import projected_count


def small_grid(**kwargs):
    values = {
        "name": "test_grid",
        "k_range": (3, 4),
        "element_window": (1, 6),
        "r_range": (1, 2),
        "t_range": (2, 2),
        "h_hi": "(k-1)r-1",
        "regimes": ["main"],
        "workers": 1,
        "progress": False,
    }
    values.update(kwargs)
    return GridConfig(**values).validate()


def test_parsers():
    assert parse_range("3..5") == (3, 5)
    assert parse_range([1, 8]) == (1, 8)
    assert parse_range(4) == (4, 4)
    assert parse_int_list("1,2,5..7") == (1, 2, 5, 6, 7)
    assert parse_int_list("") == ()
    with pytest.raises(ConfigError):
        parse_range("3-5")
    with pytest.raises(ConfigError):
        parse_int_list("1,x")


def test_registered_campaigns_load():
    assert "main_grid" in registered_campaigns()
    for name in registered_campaigns():
        cfg = load_grid_config(name)
        assert cfg.name == name
    main = load_grid_config("main_grid", {"k_range": "3..4", "regimes": None})
    assert main.k_range == (3, 4) and main.regimes == ["main", "unrestricted"]


def test_config_errors(tmp_path):
    with pytest.raises(ConfigError):
        load_grid_config("no_such_grid")
    path = tmp_path / "bad.yaml"
    path.write_text("k_range: [3, 4]\ncolour: red\n")
    with pytest.raises(ConfigError):
        load_grid_config(str(path))
    with pytest.raises(ConfigError):
        small_grid(sample=10)
    with pytest.raises(ConfigError):
        small_grid(claims=["bogus"])
    with pytest.raises(ConfigError):
        small_grid(h_hi="k^2")
    with pytest.raises(ConfigError):
        small_grid(element_window=(1, 3))


def test_yaml_config_name(tmp_path):
    path = tmp_path / "tiny.yaml"
    path.write_text("k_range: [3, 3]\nelement_window: [1, 4]\nr_range: [1, 1]\nh_hi: 2\n")
    cfg = load_grid_config(str(path))
    assert cfg.name == "tiny" and cfg.h_hi == 2


def test_enumeration_order_and_count():
    cfg = small_grid(k_range=(3, 3), element_window=(1, 4), r_range=(1, 1), h_hi=2, regimes=[])
    instances = list(enumerate_instances(cfg))
    assert len(instances) == 4
    assert [inst.index for inst in instances] == [0, 1, 2, 3]
    assert [tuple(inst.A) for inst in instances] == [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]
    assert all(tuple(inst.H) == (1, 2) for inst in instances)


def test_dedupe_by_dilation():
    cfg = small_grid(k_range=(3, 3), element_window=(1, 6), r_range=(1, 1), h_hi=2, regimes=[], dedupe_dilation=True)
    sets = {tuple(inst.A) for inst in enumerate_instances(cfg)}
    assert (1, 2, 3) in sets
    assert (2, 4, 6) not in sets


def test_instance_cap():
    with pytest.raises(CapExceededError):
        enumerate_instances(small_grid(instance_cap=3))


def test_sampling_is_seeded():
    cfg = small_grid(sample=5, seed=7)
    first = [inst.index for inst in enumerate_instances(cfg)]
    second = [inst.index for inst in enumerate_instances(cfg)]
    assert first == second and len(first) == 5
    assert first == sorted(first)


def test_check_direct():
    tight = check_direct(IntSet.interval(1, 5), [2, 3], 2)
    assert tight.verdict == Verdict.TIGHT and tight.formula == 13 and tight.regime == "main"

    held = check_direct(IntSet((1, 2, 4, 8, 16)), [2, 3], 2)
    assert held.verdict == Verdict.HELD and held.enumerated > 13

    violated = check_direct(IntSet.interval(0, 5), [3, 4], 2)
    assert violated.verdict == Verdict.VIOLATED
    assert (violated.formula, violated.enumerated) == (19, 18)
    assert violated.regime == "zero_main"

    inapplicable = check_direct(IntSet.interval(1, 5), [2, 3], 2, contains_zero=True)
    assert inapplicable.verdict == Verdict.INAPPLICABLE
    assert "0 in A" in inapplicable.violations

    error = check_direct(IntSet.interval(1, 3), [4, 5], 1)
    assert error.verdict == Verdict.ERROR and error.error.startswith("UnclassifiableError")


def test_check_inverse():
    tight = check_inverse(IntSet.interval(1, 6), [2, 3], 2, "main")
    assert tight.verdict == Verdict.TIGHT and tight.conclusion_ok
    small = check_inverse(IntSet.interval(1, 5), [2, 3], 2, "main")
    assert small.verdict == Verdict.INAPPLICABLE
    unknown = check_inverse(IntSet.interval(1, 6), [2, 3], 2, "bogus")
    assert unknown.verdict == Verdict.ERROR


def test_replay_reproduces_record():
    record = check_direct(IntSet.interval(0, 5), [3, 4], 2, index=12)
    assert replay(record.to_dict()) == record
    assert replay(record) == record


def test_tally_merge():
    left, right = ClaimTally(checked=2, held=1, equality=1), ClaimTally(checked=3, violated=2)
    left.merge(right)
    assert (left.checked, left.held, left.violated, left.equality) == (5, 1, 2, 1)


def test_campaign_main_grid(tmp_path):
    out = tmp_path / "report.json"
    table = tmp_path / "instances.csv"
    report = run_campaign(small_grid(), out_path=str(out), csv_path=str(table))

    assert report.instances_checked > 0
    assert report.violation_count == 0 and report.error_count == 0
    tally = report.tallies["direct"]
    assert tally.checked == report.instances_checked
    assert tally.held + tally.violated + tally.inapplicable == tally.checked

    data = parse_report(out.read_text())
    assert data["body"]["instances_checked"] == report.instances_checked
    assert data["body"]["config"]["name"] == "test_grid"
    assert os.path.isfile(tmp_path / "grid.yaml")
    with open(table) as file:
        rows = list(csv.DictReader(file))
    assert len(rows) == report.instances_checked
    assert set(rows[0]) >= {"r", "k", "A", "H", "claim", "regime", "formula", "enumerated", "verdict"}


def test_campaign_flags_zero_prefix_discrepancy():
    cfg = small_grid(
        k_range=(6, 6),
        element_window=(1, 5),
        r_range=(2, 2),
        h_hi="(k-2)r-1",
        regimes=["zero_main"],
        contains_zero=True,
    )
    report = run_campaign(cfg)
    witnesses = {(rec.A, rec.H): rec for rec in report.counterexamples}
    record = witnesses[((0, 1, 2, 3, 4, 5), (3, 4))]
    assert (record.formula, record.enumerated) == (19, 18)
    assert replay(record).verdict == Verdict.VIOLATED


def test_campaign_is_independent_of_workers():
    serial = run_campaign(small_grid(claims=["direct", "auto"]))
    parallel = run_campaign(small_grid(claims=["direct", "auto"], workers=2))
    assert render_report(serial.body()) == render_report(parallel.body())


def test_empty_campaign():
    cfg = small_grid(k_range=(3, 3), element_window=(1, 4), r_range=(1, 1), h_hi=2, regimes=["all_high"])
    report = run_campaign(cfg)
    assert report.instances_checked == 0
    assert json.loads(render_report(report.to_dict()))["body"]["counterexamples"] == []


def test_sampling_draws_from_the_stream():
    full = {inst.index: inst for inst in enumerate_instances(small_grid())}
    sampled = list(enumerate_instances(small_grid(sample=5, seed=7)))
    assert all(full[inst.index] == inst for inst in sampled)
    everything = list(enumerate_instances(small_grid(sample=len(full) + 10, seed=7)))
    assert everything == [full[index] for index in sorted(full)]
    assert list(enumerate_instances(small_grid(sample=0, seed=7))) == []


def test_campaign_inverse_claims_at_k6():
    cfg = small_grid(k_range=(6, 6), element_window=(1, 8), claims=["direct", "auto"], dedupe_dilation=True)
    report = run_campaign(cfg)
    assert report.violation_count == 0 and report.error_count == 0
    tally = report.tallies["auto"]
    assert tally.inapplicable < tally.checked
    assert tally.equality > 0
    assert tally.conclusion_held == tally.equality and tally.conclusion_violated == 0


@pytest.mark.parametrize("c", [2, 3])
@pytest.mark.parametrize("zero", [False, True])
def test_verdicts_stable_under_dilation(c, zero):
    if zero:
        cfg = small_grid(
            k_range=(6, 6),
            element_window=(1, 6),
            r_range=(2, 2),
            h_hi="(k-2)r-1",
            regimes=["zero_main"],
            contains_zero=True,
        )
    else:
        cfg = small_grid(k_range=(6, 6), element_window=(1, 7))
    for inst in enumerate_instances(cfg):
        for claim in ("direct", "auto"):
            base = check_instance(inst.A, inst.H, inst.r, claim)
            scaled = check_instance(dilate(inst.A, c), inst.H, inst.r, claim)
            assert (scaled.verdict, scaled.formula, scaled.enumerated, scaled.conclusion_ok) == (
                base.verdict,
                base.formula,
                base.enumerated,
                base.conclusion_ok,
            ), (tuple(inst.A), tuple(inst.H), inst.r, claim)


@pytest.mark.parametrize(
    "name, k_range, window, r_range, t_range, h_hi, zero",
    [
        ("main_grid", (3, 6), (1, 10), (1, 3), (2, 3), "(k-1)r-1", False),
        ("inverse_main_grid", (6, 6), (1, 12), (1, 2), (2, 2), "(k-1)r-1", False),
        ("zero_main_grid", (4, 7), (1, 10), (1, 3), (2, 2), "(k-2)r-1", True),
    ],
)
def test_shipped_grid_ranges(name, k_range, window, r_range, t_range, h_hi, zero):
    cfg = load_grid_config(name)
    assert (cfg.k_range, cfg.element_window, cfg.r_range, cfg.t_range) == (k_range, window, r_range, t_range)
    assert cfg.h_hi == h_hi and cfg.contains_zero == zero
    assert projected_count(cfg) <= cfg.instance_cap
