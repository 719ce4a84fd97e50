"""CLI subcommands: exit codes, plan output, and transcript replayability."""

import json

import pytest

from breakfastbot.cli import entrypoint

from conftest import NINE_OBJECTS, SEVEN_SETUPS


def run(capsys, *args):
    code = entrypoint(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def bootstrap(capsys, data_dir, seed=0):
    code, _, _ = run(capsys, "--data-dir", str(data_dir), "init", "--seed", str(seed))
    assert code == 0
    for name, cls, graspable in NINE_OBJECTS:
        flag = "--graspable" if graspable else "--not-graspable"
        code, _, _ = run(capsys, "--data-dir", str(data_dir),
                         "object", "add", name, "--class", cls.value, flag)
        assert code == 0
    for name, objects in SEVEN_SETUPS:
        code, _, _ = run(capsys, "--data-dir", str(data_dir),
                         "teach", name, "--objects", ",".join(sorted(objects)))
        assert code == 0


def test_init_refuses_to_overwrite(tmp_path, capsys):
    assert run(capsys, "--data-dir", str(tmp_path), "init")[0] == 0
    assert run(capsys, "--data-dir", str(tmp_path), "init")[0] == 2


def test_teach_then_serve_by_name(tmp_path, capsys):
    bootstrap(capsys, tmp_path)
    code, out, _ = run(capsys, "--data-dir", str(tmp_path), "serve", "--name", "cereal breakfast")
    assert code == 0
    assert "robot fetches: milk, cereal" in out
    assert "you fetch: bowl, spoon" in out


def test_serve_missing_name_exits_1_with_code_on_stderr(tmp_path, capsys):
    bootstrap(capsys, tmp_path)
    code, _, err = run(capsys, "--data-dir", str(tmp_path), "serve", "--name", "missing")
    assert code == 1
    assert "UnknownBreakfast" in err


def test_serve_needs_exactly_one_mode(tmp_path, capsys):
    bootstrap(capsys, tmp_path)
    code, _, _ = run(capsys, "--data-dir", str(tmp_path), "serve")
    assert code == 2
    code, _, _ = run(capsys, "--data-dir", str(tmp_path),
                     "serve", "--surprise", "--least-eaten")
    assert code == 2


def test_surprise_and_day_advance(tmp_path, capsys):
    bootstrap(capsys, tmp_path)
    code, out, _ = run(capsys, "--data-dir", str(tmp_path), "--json", "serve", "--surprise")
    assert code == 0
    plan = json.loads(out)
    assert plan["source"] == "created"
    code, out, _ = run(capsys, "--data-dir", str(tmp_path), "day", "advance")
    assert code == 0 and "day 1" in out


def test_rules_dump(tmp_path, capsys):
    bootstrap(capsys, tmp_path)
    code, out, _ = run(capsys, "--data-dir", str(tmp_path), "rules")
    assert code == 0
    assert out.startswith("knowledge graph built from 7 taught setups")
    assert "- bowl, spoon" in out


def test_simulate_partition_and_report_file(tmp_path, capsys):
    bootstrap(capsys, tmp_path)
    report_path = tmp_path / "report.json"
    code, out, _ = run(capsys, "--data-dir", str(tmp_path),
                       "simulate", "--n", "50", "--report", str(report_path))
    assert code == 0
    payload = json.loads(report_path.read_text())
    assert payload["same_as_memory"] + payload["duplicate_new"] + payload["distinct_new"] == 50
    assert f"requested: 50" in out


def test_usage_error_without_init(tmp_path, capsys):
    code, _, err = run(capsys, "--data-dir", str(tmp_path), "rules")
    assert code == 2
    assert "init" in err


def test_transcripts_replay_bit_for_bit(tmp_path, capsys):
    transcripts = []
    for name in ("a", "b"):
        data_dir = tmp_path / name
        bootstrap(capsys, data_dir, seed=123)
        lines = []
        for args in (
            ["serve", "--surprise"],
            ["serve", "--least-eaten"],
            ["day", "advance"],
            ["serve", "--surprise"],
            ["simulate", "--n", "20"],
        ):
            code, out, _ = run(capsys, "--data-dir", str(data_dir), *args)
            assert code == 0
            lines.append(out)
        transcripts.append(lines)
    assert transcripts[0] == transcripts[1]


def test_json_mode_outputs_parseable_documents(tmp_path, capsys):
    bootstrap(capsys, tmp_path)
    code, out, _ = run(capsys, "--data-dir", str(tmp_path), "--json",
                       "serve", "--name", "plain milk")
    assert code == 0
    plan = json.loads(out)
    assert plan["robot_fetches"] == ["milk", "cup"]
    assert plan["user_fetches"] == []
