"""Measurements, confidence intervals, and the batch harness."""

import math

import pytest

from blockhouse import (
    BatchError,
    ConnectivityReport,
    RoomCountPolicy,
    RunConfig,
    building_seed,
    confidence_interval,
    connected_components,
    derive_seed,
    generate_building,
    measure_building,
    parse_ascii,
    run_batch,
)

from helpers import interior_tile_conservation

PLAN_ONE_ROOM = """\
#####
#000#
E000#
#000#
#####
"""

PLAN_WITH_DOOR = """\
#####
#0*1#
E0D1#
#0*1#
#####
"""


def test_confidence_interval_known_values():
    assert confidence_interval([5.0, 5.0, 5.0, 5.0]) == (5.0, 0.0)
    mean, half = confidence_interval([0.0, 2.0])
    assert mean == 1.0
    assert half == pytest.approx(1.96)
    assert confidence_interval([3.5]) == (3.5, 0.0)


def test_confidence_interval_shrinks_with_n():
    wide = confidence_interval([0.0, 2.0] * 5)[1]
    narrow = confidence_interval([0.0, 2.0] * 500)[1]
    assert narrow < wide
    assert narrow == pytest.approx(1.96 / math.sqrt(1000), rel=0.01)


def test_confidence_interval_rejects_empty():
    with pytest.raises(ValueError):
        confidence_interval([])


def test_measure_single_room_plan():
    plan = parse_ascii(PLAN_ONE_ROOM)
    report = connected_components(plan)
    m = measure_building(plan, report, 0.125)
    assert m.room_count == 1
    assert m.room_areas == (9,)
    assert m.avg_room_area == 9.0
    assert m.interior_door_count == 0
    assert m.connected_before_repair
    assert m.repairs_applied == 0
    assert m.generation_time == 0.125


def test_measure_counts_interior_doors_only():
    plan = parse_ascii(PLAN_WITH_DOOR)
    m = measure_building(plan, connected_components(plan), 0.0)
    assert m.interior_door_count == 1
    assert m.room_areas == (3, 3)


def test_dropped_rooms_count_as_zero_area():
    plan = parse_ascii(PLAN_ONE_ROOM)
    report = connected_components(plan)
    m = measure_building(plan, report, 0.0, requested_rooms=3)
    assert m.room_count == 1
    assert m.room_areas == (9, 0, 0)
    assert m.avg_room_area == 3.0


def test_repairs_mark_plan_as_initially_disconnected():
    plan = parse_ascii(PLAN_WITH_DOOR)
    report = ConnectivityReport(1, (), repairs_applied=2)
    m = measure_building(plan, report, 0.0)
    assert not m.connected_before_repair
    assert m.repairs_applied == 2


def test_measured_areas_conserve_interior_tiles():
    config = RunConfig(width=7, depth=7, room_policy=RoomCountPolicy(3))
    for seed in range(10):
        result = generate_building(config, seed)
        m = measure_building(result.plan, result.report, result.elapsed,
                             result.requested_rooms)
        interior = 5 * 5
        walls = interior - sum(m.room_areas) - m.interior_door_count
        assert walls >= 0
        assert interior_tile_conservation(result.plan)
        assert len(m.room_areas) == 3


def test_building_seed_derivation():
    assert building_seed(99, 0) == derive_seed(99, "building", 0)
    seeds = {building_seed(99, i) for i in range(100)}
    assert len(seeds) == 100
    assert building_seed(99, 7) == building_seed(99, 7)


def test_batch_of_one_has_zero_width_interval():
    config = RunConfig(width=7, depth=7)
    summary = run_batch(config, 1, master_seed=5)
    assert summary.n == 1
    assert summary.room_area_ci95 == 0.0
    assert summary.door_count_ci95 == 0.0
    assert summary.master_seed == 5
    assert summary.config == config.to_dict()


def test_batch_rejects_empty_run():
    with pytest.raises(ValueError):
        run_batch(RunConfig(width=7, depth=7), 0, master_seed=1)


def _stable_fields(summary):
    d = summary.to_dict()
    del d["total_time"]
    return d


def test_batch_deterministic_for_a_master_seed():
    config = RunConfig(width=7, depth=7, room_policy=RoomCountPolicy(3))
    a = run_batch(config, 12, master_seed=31)
    b = run_batch(config, 12, master_seed=31)
    assert _stable_fields(a) == _stable_fields(b)
    c = run_batch(config, 12, master_seed=32)
    assert _stable_fields(a) != _stable_fields(c)


def test_batch_parallel_matches_serial():
    config = RunConfig(width=7, depth=7, room_policy=RoomCountPolicy(3))
    serial = run_batch(config, 12, master_seed=8, workers=1)
    parallel = run_batch(config, 12, master_seed=8, workers=2)
    assert _stable_fields(serial) == _stable_fields(parallel)


def test_batch_summary_ranges():
    summary = run_batch(RunConfig(width=7, depth=7), 20, master_seed=3)
    assert 0.0 <= summary.pre_repair_connectivity_rate <= 1.0
    assert summary.total_repairs >= 0
    assert summary.mean_avg_room_area > 0
    assert summary.total_time > 0


def test_batch_wraps_stage_failures(monkeypatch):
    def boom(config, seed):
        raise RuntimeError("stage exploded")

    monkeypatch.setattr("blockhouse.metrics.generate_building", boom)
    config = RunConfig(width=7, depth=7)
    with pytest.raises(BatchError) as info:
        run_batch(config, 3, master_seed=21)
    assert info.value.index == 0
    assert info.value.seed == building_seed(21, 0)
    assert "seed" in str(info.value)


def test_summary_table_and_dict():
    summary = run_batch(RunConfig(width=7, depth=7), 5, master_seed=2)
    table = summary.format_table()
    lines = table.splitlines()
    assert len(lines) == 6
    assert lines[0].startswith("buildings")
    assert "mean room area" in table
    assert "mean door count" in table
    assert chr(0xB1) in table  # plus-minus between mean and interval
    keys = set(summary.to_dict())
    assert {"n", "config", "master_seed", "mean_avg_room_area",
            "mean_door_count", "pre_repair_connectivity_rate",
            "total_repairs", "total_time"} <= keys
