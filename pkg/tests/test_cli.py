"""CLI tests: exit codes, machine-output round trips, file side effects."""
import json

import pytest

from switchalloc.cli import dispatch
from switchalloc.model import ProblemInstance
from switchalloc.construct import ordered_construction
from switchalloc.simulate import load_trace
from switchalloc.tableio import load_table, save_table, table_from_doc


def run(capsys, *argv):
    code = dispatch(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def run_machine(capsys, *argv):
    code, out = run(capsys, *argv, "--format", "machine")
    return code, json.loads(out)


def test_enumerate(capsys):
    code, doc = run_machine(capsys, "enumerate", "--n", "2", "--k", "3")
    assert code == 0
    assert doc["count"] == 6
    assert doc["vectors"][0] == [0, 0, 2]


def test_solve_exit_codes(capsys):
    code, doc = run_machine(capsys, "solve", "--n", "2", "--k", "3", "--max-cost", "1")
    assert code == 1
    assert doc["verdict"] == "infeasible" and doc["stats"]["exhaustive"]
    code, doc = run_machine(capsys, "solve", "--n", "2", "--k", "3", "--max-cost", "2")
    assert code == 0
    assert doc["verdict"] == "feasible"
    # machine output round-trips through the table parser
    witness = table_from_doc(doc["witness"])
    assert len(witness.entries) == 6


def test_solve_writes_witness(tmp_path, capsys):
    out = tmp_path / "witness.json"
    code, _ = run(
        capsys, "solve", "--n", "2", "--k", "3", "--max-cost", "2",
        "--output", str(out),
    )
    assert code == 0
    assert len(load_table(out).entries) == 6


def test_min_distortion(capsys):
    code, out = run(capsys, "min-distortion", "--n", "3", "--k", "2")
    assert code == 0
    assert out.strip() == "1"


def test_construct_round_trip(tmp_path, capsys):
    out = tmp_path / "ordered.json"
    code, doc = run_machine(
        capsys, "construct", "--n", "3", "--k", "3", "--output", str(out)
    )
    assert code == 0
    assert table_from_doc(doc["table"]).entries == load_table(out).entries
    assert doc["max_cost"] <= 2


def test_construct_group(capsys):
    code, doc = run_machine(
        capsys, "construct", "--n", "6", "--k", "4",
        "--construction", "group", "--special-task", "3",
    )
    assert code == 0
    assert doc["max_cost"] == 2
    assert "domain" in doc["table"]


def test_verify_exit_codes(tmp_path, capsys):
    path = tmp_path / "t.json"
    save_table(ordered_construction(ProblemInstance(3, 3)), path)
    code, doc = run_machine(capsys, "verify", "--table", str(path))
    assert code == 0 and doc["ok"]
    code, doc = run_machine(
        capsys, "verify", "--table", str(path), "--max-cost", "1"
    )
    assert code == 1 and not doc["ok"]  # the table's max cost is 2
    path.write_text("{broken")
    code, doc = run_machine(capsys, "verify", "--table", str(path))
    assert code == 1 and not doc["ok"]


def test_analyze(tmp_path, capsys):
    path = tmp_path / "t.json"
    save_table(ordered_construction(ProblemInstance(3, 3)), path)
    code, doc = run_machine(capsys, "analyze", "--table", str(path))
    assert code == 0
    assert doc["max_cost"] == 2 and "task_types" in doc


def test_check_lemma(capsys, tmp_path):
    code, doc = run_machine(capsys, "check-lemma", "--lemma", "fix", "--n", "3", "--k", "5")
    assert code == 0
    assert doc["failures"] == [] and doc["non_vacuous_passes"] > 0
    path = tmp_path / "t.json"
    save_table(ordered_construction(ProblemInstance(3, 3)), path)
    code, doc = run_machine(capsys, "check-lemma", "--lemma", "dest2", "--table", str(path))
    assert code == 0 and doc["failures"] == []


def test_check_lemma_usage_errors(capsys):
    assert dispatch(["check-lemma", "--lemma", "fix"]) == 2
    capsys.readouterr()
    assert dispatch(["check-lemma", "--lemma", "dest2"]) == 2
    capsys.readouterr()


def test_simulate_round_trip(tmp_path, capsys):
    table_path = tmp_path / "t.json"
    save_table(ordered_construction(ProblemInstance(4, 3)), table_path)
    trace_path = tmp_path / "trace.json"
    args = (
        "simulate", "--table", str(table_path), "--start", "4,0,0",
        "--steps", "20", "--seed", "5", "--output", str(trace_path),
    )
    code, doc = run_machine(capsys, *args)
    assert code == 0
    trace = load_trace(trace_path)
    assert [list(m) for m in trace.moves] == doc["moves"]
    # identical flags and seed give identical machine output
    code2, doc2 = run_machine(capsys, *args)
    assert doc2 == doc


def test_usage_and_capacity_exits(capsys):
    assert dispatch([]) == 2
    capsys.readouterr()
    assert dispatch(["solve", "--n", "2", "--k", "3"]) == 2  # missing --max-cost
    capsys.readouterr()
    assert dispatch(["bogus"]) == 2
    capsys.readouterr()
    assert dispatch(["solve", "--n", "40", "--k", "40", "--max-cost", "1"]) == 3
    capsys.readouterr()


def test_threads_do_not_change_output(capsys):
    outputs = []
    for threads in ("1", "2", "8"):
        _, doc = run_machine(
            capsys, "solve", "--n", "2", "--k", "3", "--max-cost", "2",
            "--threads", threads,
        )
        outputs.append(doc["witness"])
    assert outputs[0] == outputs[1] == outputs[2]
