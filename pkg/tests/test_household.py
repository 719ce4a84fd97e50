"""Persistence: round trips, atomic writes, format errors, service lock."""

import json
import os

import pytest

from breakfastbot import (
    HouseholdState,
    ServeRequest,
    advance_day,
    eaten_counts,
    serve,
    teach,
)
from breakfastbot.errors import StateFormatError, StateLockedError
from breakfastbot.household import (
    acquire_service_lock,
    ensure_unlocked,
    lock_path,
    release_service_lock,
)

from conftest import build_household


def test_round_trip_preserves_everything(tmp_path, household):
    serve(household, ServeRequest.by_name("plain milk"), household.rng)
    serve(household, ServeRequest.surprise(), household.rng)
    advance_day(household)
    path = tmp_path / "household.json"
    household.save(path)
    loaded = HouseholdState.load(path)

    assert [o.name for o in loaded.catalog] == [o.name for o in household.catalog]
    assert [e.name for e in loaded.memory] == [e.name for e in household.memory]
    assert [e.id for e in loaded.memory] == list(range(7))
    assert loaded.day == household.day
    assert loaded.stm.capacity_days == household.stm.capacity_days
    assert loaded.rng.state() == household.rng.state()
    assert eaten_counts(loaded) == eaten_counts(household)
    assert len(loaded.stm.records) == len(household.stm.records)


def test_round_trip_behavior_is_identical(tmp_path):
    # same op sequence after a reload produces the same outputs
    live = build_household(seed=31)
    path = tmp_path / "household.json"
    live.save(path)
    resumed = HouseholdState.load(path)
    for _ in range(5):
        a = serve(live, ServeRequest.surprise(), live.rng)
        b = serve(resumed, ServeRequest.surprise(), resumed.rng)
        assert a == b


def test_save_is_atomic_and_leaves_no_temp_files(tmp_path, household):
    path = tmp_path / "household.json"
    household.save(path)
    household.save(path)  # overwrite in place
    assert sorted(p.name for p in tmp_path.iterdir()) == ["household.json"]
    data = json.loads(path.read_text())
    assert data["schema_version"] == 1


def test_setups_are_stored_as_sorted_name_arrays(tmp_path, household):
    path = tmp_path / "household.json"
    household.save(path)
    data = json.loads(path.read_text())
    for item in data["breakfasts"]:
        assert item["objects"] == sorted(item["objects"])


def test_catalog_growth_after_reload_keeps_old_entries_decodable(tmp_path, household):
    from breakfastbot import ObjectClass, decode

    path = tmp_path / "household.json"
    household.save(path)
    loaded = HouseholdState.load(path)
    loaded.catalog.add("yogurt", ObjectClass.FOOD, True)
    teach(loaded, "yogurt cup", {"yogurt", "cup"})
    entry = loaded.memory.entry(0)
    assert decode(entry.lv.padded(len(loaded.catalog)), loaded.catalog) == ["milk", "cup"]
    loaded.save(path)
    again = HouseholdState.load(path)
    assert [e.name for e in again.memory][-1] == "yogurt cup"


def test_unsupported_schema_version_rejected(tmp_path, household):
    path = tmp_path / "household.json"
    household.save(path)
    data = json.loads(path.read_text())
    data["schema_version"] = 99
    path.write_text(json.dumps(data))
    with pytest.raises(StateFormatError):
        HouseholdState.load(path)


def test_malformed_document_rejected(tmp_path):
    path = tmp_path / "household.json"
    path.write_text(json.dumps({"schema_version": 1, "day": 0}))
    with pytest.raises(StateFormatError):
        HouseholdState.load(path)


class TestServiceLock:
    def test_live_lock_blocks(self, tmp_path):
        state_path = tmp_path / "household.json"
        acquire_service_lock(state_path)  # our own live pid
        with pytest.raises(StateLockedError):
            ensure_unlocked(state_path)
        release_service_lock(state_path)
        ensure_unlocked(state_path)

    def test_stale_lock_is_cleared(self, tmp_path):
        state_path = tmp_path / "household.json"
        dead_pid = 2**22 + os.getpid()  # beyond pid_max on this box
        lock_path(state_path).write_text(str(dead_pid))
        ensure_unlocked(state_path)
        assert not lock_path(state_path).exists()

    def test_garbage_lock_is_cleared(self, tmp_path):
        state_path = tmp_path / "household.json"
        lock_path(state_path).write_text("not a pid")
        ensure_unlocked(state_path)
        assert not lock_path(state_path).exists()
