import io
import json
import os
import subprocess
import sys

import pytest

from roughkit import context_from_information_system, indiscernibility, lower, meaning, parse, read_table, upper
from roughkit.cli import main
from conftest import FIXTURES, GOLDEN
from oracles import brute_concepts

TOY = str(FIXTURES / "toy.csv")
CTX = str(FIXTURES / "toy_context.csv")
FULL = str(FIXTURES / "full_context.csv")

# name -> argv; outputs are checked in under tests/golden/<name>
CASES = {
    "partition_color_size.txt": ["partition", "--input", TOY, "--attrs", "color,size"],
    "partition_color.txt": ["partition", "--input", TOY, "--attrs", "color"],
    "approx.txt": ["approx", "--input", TOY, "--attrs", "color,size", "--set", "o1,o3,o4"],
    "approx_all.txt": ["approx", "--input", TOY, "--attrs", "color,size", "--set", "o1,o2,o3,o4,o5"],
    "approx_empty.txt": ["approx", "--input", TOY, "--attrs", "color,size", "--set", ""],
    "describe_lower.txt": ["describe", "--input", TOY, "--attrs", "color,size", "--set", "o1,o3,o4", "--mode", "lower"],
    "describe_upper.txt": ["describe", "--input", TOY, "--attrs", "color,size", "--set", "o1,o3,o4", "--mode", "upper"],
    "describe_empty.txt": ["describe", "--input", TOY, "--attrs", "color,size", "--set", ""],
    "query.txt": ["query", "--input", TOY, "--formula", "color=blue and size=small"],
    "query_blue.txt": ["query", "--input", TOY, "--formula", "color=blue"],
    "lattice_context.dot": ["lattice", "--input", CTX],
    "lattice_table.dot": ["lattice", "--input", TOY],
    "lattice_full.dot": ["lattice", "--input", FULL],
    "modal_box.txt": ["modal", "--input", TOY, "--attrs", "color,size", "--formula", "box color=blue"],
    "modal_dia.txt": ["modal", "--input", TOY, "--attrs", "color,size", "--formula", "dia size=large"],
    "partition.jsonl": ["partition", "--input", TOY, "--attrs", "color,size", "--format", "structured"],
    "approx.jsonl": ["approx", "--input", TOY, "--attrs", "color,size", "--set", "o1,o3,o4", "--format", "structured"],
    "describe_upper.jsonl": ["describe", "--input", TOY, "--attrs", "color,size", "--set", "o1,o3,o4", "--mode", "upper", "--format", "structured"],
    "query.jsonl": ["query", "--input", TOY, "--formula", "color=blue and size=small", "--format", "structured"],
    "lattice_context.jsonl": ["lattice", "--input", CTX, "--format", "structured"],
    "modal_box.jsonl": ["modal", "--input", TOY, "--attrs", "color,size", "--formula", "box color=blue", "--format", "structured"],
}


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name):
    code, out, err = run(CASES[name])
    assert code == 0, err
    golden = GOLDEN / name
    if os.environ.get("UPDATE_GOLDEN"):
        golden.write_bytes(out.encode("utf-8"))
    assert out.encode("utf-8") == golden.read_bytes()
    assert run(CASES[name])[1] == out


def test_subprocess_is_byte_identical():
    argv = [sys.executable, "-m", "roughkit", *CASES["lattice_table.dot"]]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second == (GOLDEN / "lattice_table.dot").read_bytes()


def test_partition_lines():
    assert run(CASES["partition_color_size.txt"])[1].splitlines() == ["{o1,o2}", "{o3}", "{o4,o5}"]
    assert len(run(CASES["partition_color.txt"])[1].splitlines()) == 2


def test_approx_report():
    lines = run(CASES["approx.txt"])[1].splitlines()
    assert lines == [
        "lower: {o3}",
        "upper: {o1,o2,o3,o4,o5}",
        "boundary: {o1,o2,o4,o5}",
        "exact: false",
    ]
    assert run(CASES["approx_all.txt"])[1].splitlines()[-1] == "exact: true"
    assert run(CASES["approx_empty.txt"])[1].splitlines() == ["lower: {}", "upper: {}", "boundary: {}", "exact: true"]


@pytest.mark.parametrize("mode, op", [("lower", lower), ("upper", upper)])
def test_describe_reparses(mode, op):
    table = read_table(TOY)
    for literal in ["", "o1", "o1,o3,o4", "o2,o5", "o1,o2,o3,o4,o5"]:
        _, out, _ = run(["describe", "--input", TOY, "--attrs", "color,size", "--set", literal, "--mode", mode])
        x = literal.split(",") if literal else []
        assert meaning(table, parse(out.strip())) == op(indiscernibility(table, ["color", "size"]), x)


def test_query_lines():
    assert run(CASES["query_blue.txt"])[1] == "{o3,o4,o5}\n"
    assert run(["query", "--input", TOY, "--formula", "color=red or not color=red"])[1] == "{o1,o2,o3,o4,o5}\n"


def test_lattice_counts():
    def nodes_edges(text):
        lines = text.splitlines()
        return sum("[label=" in l for l in lines), sum("->" in l for l in lines)

    assert nodes_edges(run(CASES["lattice_context.dot"])[1]) == (2, 1)
    assert nodes_edges(run(CASES["lattice_full.dot"])[1]) == (1, 0)
    table = read_table(TOY)
    ctx = context_from_information_system(table)
    n_brute = len(brute_concepts(ctx.objects, ctx.properties, ctx.incidence))
    assert nodes_edges(run(CASES["lattice_table.dot"])[1])[0] == n_brute == 7


def test_lattice_input_kind_override():
    _, out, _ = run(["lattice", "--input", CTX, "--input-kind", "table"])
    assert "a=1" in out
    code, _, err = run(["lattice", "--input", TOY, "--input-kind", "context"])
    assert code == 2 and "0 or 1" in err
    code, _, err = run(["lattice", "--input", TOY, "--max-properties", "3"])
    assert code == 2 and "limit" in err


def test_modal_report():
    lines = run(CASES["modal_box.txt"])[1].splitlines()
    assert lines[0] == "extension: {o3,o4,o5}"
    assert lines[1:] == ["o1: false", "o2: false", "o3: true", "o4: true", "o5: true"]
    assert run(CASES["modal_dia.txt"])[1].splitlines()[0] == "extension: {o4,o5}"


def _plain_sets(text):
    return [l.split(": ")[-1] for l in text.splitlines()]


def _braced(names):
    return "{" + ",".join(names) + "}"


def test_structured_mirrors_plain():
    plain = run(CASES["partition_color_size.txt"])[1].splitlines()
    recs = [json.loads(l) for l in run(CASES["partition.jsonl"])[1].splitlines()]
    assert [_braced(r["objects"]) for r in recs] == plain

    plain = run(CASES["approx.txt"])[1].splitlines()
    (rec,) = [json.loads(l) for l in run(CASES["approx.jsonl"])[1].splitlines()]
    assert [f"{k}: {_braced(rec[k])}" for k in ("lower", "upper", "boundary")] == plain[:3]
    assert plain[3] == f"exact: {str(rec['exact']).lower()}"

    (rec,) = [json.loads(l) for l in run(CASES["describe_upper.jsonl"])[1].splitlines()]
    assert rec["formula"] + "\n" == run(CASES["describe_upper.txt"])[1]

    (rec,) = [json.loads(l) for l in run(CASES["query.jsonl"])[1].splitlines()]
    assert _braced(rec["objects"]) + "\n" == run(CASES["query.txt"])[1]

    recs = [json.loads(l) for l in run(CASES["lattice_context.jsonl"])[1].splitlines()]
    dot = run(CASES["lattice_context.dot"])[1]
    for r in recs:
        if r["record"] == "concept":
            assert f'c{r["id"]} [label="{_braced(r["extent"])}|{_braced(r["intent"])}"];' in dot
        else:
            assert f'c{r["lower"]} -> c{r["upper"]};' in dot

    recs = [json.loads(l) for l in run(CASES["modal_box.jsonl"])[1].splitlines()]
    plain = run(CASES["modal_box.txt"])[1].splitlines()
    assert plain[0] == f"extension: {_braced(recs[0]['objects'])}"
    assert plain[1:] == [f"{r['world']}: {str(r['holds']).lower()}" for r in recs[1:]]


@pytest.mark.parametrize("argv, needle", [
    (["partition", "--input", TOY, "--attrs", "weight"], "weight"),
    (["approx", "--input", TOY, "--attrs", "color", "--set", "o1,o9"], "o9"),
    (["query", "--input", TOY, "--formula", "color="], "offset 6"),
    (["query", "--input", TOY, "--formula", "colour=red"], "colour"),
    (["modal", "--input", TOY, "--attrs", "color", "--formula", "box (color=red"], "offset"),
    (["partition", "--input", str(FIXTURES / "missing.csv"), "--attrs", "color"], "missing.csv"),
    (["partition", "--input", str(FIXTURES / "duplicate_id.csv"), "--attrs", "color"], "row 3"),
    (["partition", "--input", TOY, "--attrs", ""], "nonempty"),
])
def test_input_errors_exit_2(argv, needle):
    code, out, err = run(argv)
    assert code == 2
    assert out == ""
    assert needle in err


def test_usage_errors_exit_2():
    assert main(["partition", "--input", TOY]) == 2
    assert main(["frobnicate"]) == 2


def test_internal_error_exit_1(monkeypatch):
    import roughkit.cli as cli

    def boom(*a, **k):
        raise RuntimeError("boom")

    monkeypatch.setattr(cli, "cmd_partition", boom)
    code, _, err = run(CASES["partition_color.txt"])
    assert code == 1 and "boom" in err
