from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from schubert_quiver.cli import parse_flag, parse_pair, parse_partition, run
from schubert_quiver.errors import UserInputError
from schubert_quiver.shapes import Partition


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_parsers():
    assert parse_partition("[3,2,1]") == Partition([3, 2, 1])
    assert parse_partition("2") == Partition([2])
    for empty in ("", "[]", "0", "∅"):
        assert parse_partition(empty) == Partition()
    assert tuple(parse_pair("[1,1]/[2,1]")) == (Partition([1, 1]), Partition([2, 1]))
    assert parse_flag("6,4,2").r == 3
    for bad in ("[1,2]", "abc", "[1.5]"):
        with pytest.raises(UserInputError):
            parse_partition(bad)
    with pytest.raises(UserInputError):
        parse_pair("[1]")


def test_mult_json_matches_first_slot_example():
    code, out, _ = call("--format", "json", "mult", "--basis", "tau", "--r", "3", "--x", "[2,1]", "--v", "[2,2]/[2]")
    assert code == 0
    data = json.loads(out)
    assert data["basis"] == "tau" and data["r"] == 3
    assert len(data["terms"]) == 10 and all(t["c"] == 1 for t in data["terms"])
    assert {"v": [[4, 3], [2]], "c": 1} in data["terms"]


def test_mult_certificate_and_text():
    code, out, _ = call("mult", "--r", "3", "--u", "[2]/[2,1]", "--y", "[2,1]", "--certificate", "--format", "json")
    assert code == 0 and len(json.loads(out)["certificate"]) == 18
    code, out, _ = call("mult", "--basis", "w", "--x", "[1]", "--v", "[1]/[]")
    assert code == 0 and out.strip() == "w((1,1),∅) + w((2),∅)"


def test_uncovered_product_needs_the_oracle():
    code, _, err = call("mult", "--r", "2", "--u", "[1]/[1]", "--y", "[2]")
    assert code == 1 and "--force-oracle" in err
    code, out, _ = call("mult", "--r", "2", "--u", "[1]/[1]", "--y", "[2]", "--force-oracle")
    assert code == 0 and out.strip() == "tau((1),(2,1)) + tau((1),(3)) - tau((1,1),(2))"


def test_quiver_dot(tmp_path):
    code, out, _ = call("quiver-dot", "--degree", "2", "--kind", "rw")
    assert code == 0 and out.count("->") == 6 and out.count("[rank=") == 5
    dot, png = tmp_path / "q.dot", tmp_path / "q.png"
    code, out, _ = call("quiver-dot", "--degree", "2", "--kind", "row-rule", "--r", "2", "--output", str(dot), "--png", str(png))
    assert code == 0 and out == "" and dot.read_text().startswith("digraph")
    assert png.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
    assert call("quiver-dot", "--degree", "2", "--kind", "row-rule")[0] == 1


def test_lr_and_rw_set():
    assert call("lr", "--alpha", "[2,1]", "--beta", "[2,1]", "--gamma", "[3,2,1]") == (0, "2\n", "")
    assert call("lr", "--alpha", "[2,1]", "--beta", "[2,1]", "--gamma", "[3,2,1]", "--oracle")[1] == "2\n"
    code, out, _ = call("rw-set", "--shape", "[3,2,1]|[2,1]", "--pattern", "[3,2]|[2]", "--format", "json")
    assert code == 0 and json.loads(out)["count"] == 3


def test_expand():
    code, out, _ = call("expand", "--basis", "w", "--v", "[1]/[2]")
    assert code == 0
    assert out.strip() == "s((1),(2)) - s((1,1),(1)) + s((1,1,1),∅) - s((2),(1)) + s((2,1),∅)"
    code, out, _ = call("expand", "--basis", "tau", "--r", "2", "--v", "[1]/[1]")
    assert out.strip() == "s((1),(1)) - s((1,1),∅)"
    assert call("expand", "--basis", "tau", "--v", "[1]/[1]")[0] == 1


def test_schubert():
    code, out, _ = call("schubert", "--flag", "6,4,2", "--pair", "[1,1]/[2,1]")
    assert code == 0 and "permutation [25|14|36]" in out and "string 102102" in out
    code, out, _ = call("schubert", "--flag", "6,4,2", "--class", "102102", "--format", "json")
    assert json.loads(out)["pair"] == [[1, 1], [2, 1]]
    code, via_pieri, _ = call("schubert", "--flag", "6,4,2", "--class", "102102", "--pieri", "2")
    code2, via_rule, _ = call("schubert", "--flag", "6,4,2", "--class", "102102", "--x", "[1,1]")
    assert code == code2 == 0 and via_pieri == via_rule
    assert call("schubert", "--flag", "6,4,2", "--pair", "[5]/[]")[0] == 1
    assert call("schubert", "--flag", "6,4,2")[0] == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["mult", "--x", "[1,2]", "--v", "[1]/[]", "--r", "2"],
        ["nonsense"],
        ["lr", "--alpha", "[1]"],
        ["schubert", "--flag", "3,3,1", "--class", "012"],
        ["verify", "--criteria", "one"],
        ["mult", "--basis", "tau", "--x", "[1]", "--v", "[1]/[]"],
    ],
)
def test_bad_input_exits_with_one(argv):
    code, out, err = call(*argv)
    assert code == 1 and out == "" and err.startswith("error: ")


def test_output_is_deterministic():
    argv = ["--format", "json", "mult", "--r", "3", "--x", "[2,1]", "--v", "[2,2]/[2]", "--certificate"]
    assert call(*argv) == call(*argv)


def test_verify_subset(tmp_path):
    code, out, _ = call("verify", "--criteria", "1,3,4", "--report-dir", str(tmp_path))
    assert code == 0
    assert [line.split()[0] for line in out.splitlines()] == ["[PASS]"] * 3
    assert (tmp_path / "verify.csv").exists() and (tmp_path / "verify.png").exists()


def test_console_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "schubert_quiver.cli", "lr", "--alpha", "[2,1]", "--beta", "[1]", "--gamma", "[2,2]"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "1\n"
