import json
import subprocess
import sys

import pytest

from alphacut.cli import BAD_INPUT, FALSIFIED, OK, format_table, main

from conftest import DATA

GOLDEN = DATA.parent / "golden"

CASES = {
    "classify_m5": (["classify", "--lattice", "m5.json"], FALSIFIED),
    "classify_n6": (["classify", "--lattice", "n6.json"], FALSIFIED),
    "classify_b3": (["classify", "--lattice", "b3.json"], FALSIFIED),
    "classify_c5": (["classify", "--lattice", "c5.json"], OK),
    "check_group_example": (["check-group", "--group", "group_example.json"], OK),
    "check_group_lowered": (["check-group", "--group", "group_lowered_identity.json"], FALSIFIED),
    "subgroup_l1": (["subgroup", "--group", "group_example.json", "--alpha", "l1"], OK),
    "subgroup_top": (["subgroup", "--group", "group_example.json", "--alpha", "1"], FALSIFIED),
    "verify_localic_m5": (["verify-localic", "--fuzzy-set", "a_m5.json"], OK),
    "topology_m5": (["check-topology", "--space", "space_m5.json", "--alpha", "b"], OK),
    "rough_example": (["rough", "--space", "rough.json"], OK),
    "cut_m5": (["cut", "--fuzzy-set", "a_m5.json", "--alpha", "b"], OK),
    "cut_unit": (["cut", "--fuzzy-set", "a_unit.json", "--alpha", "0.2"], OK),
}


def run(argv, capsys, monkeypatch):
    monkeypatch.chdir(DATA)
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name, capsys, monkeypatch):
    argv, expected = CASES[name]
    code, out, _ = run(argv, capsys, monkeypatch)
    assert code == expected
    assert out == (GOLDEN / f"{name}.json").read_text(encoding="utf-8")


def test_named_lattice_classifications(capsys, monkeypatch):
    _, out, _ = run(["classify", "--lattice", "m5.json"], capsys, monkeypatch)
    d = json.loads(out)
    assert d["frame"] == {"holds": True}
    assert d["prelinear"] == {"holds": False, "witness": ["b", "c"]}
    assert d["semilinear"] == {"holds": True}
    _, out, _ = run(["classify", "--lattice", "n6.json"], capsys, monkeypatch)
    assert json.loads(out)["semilinear"]["witness"] == ["b", "a", "c"]
    _, out, _ = run(["classify", "--lattice", "b3.json"], capsys, monkeypatch)
    assert json.loads(out)["semilinear"]["witness"] == ["a", "c", "d"]


def test_group_and_subgroup(capsys, monkeypatch):
    _, out, _ = run(["check-group", "--group", "group_example.json"], capsys, monkeypatch)
    g = json.loads(out)["group"]
    assert g["identity"] == "x4" and g["inverses"] == {f"x{i}": f"x{i}" for i in range(1, 5)}
    _, out, _ = run(["subgroup", "--group", "group_example.json", "--alpha", "l1"], capsys, monkeypatch)
    assert json.loads(out)["subgroup"]["support"] == ["x1", "x4"]
    _, out, _ = run(["check-group", "--group", "group_lowered_identity.json"], capsys, monkeypatch)
    assert json.loads(out)["group"]["error"] == "NoIdentity"


def test_builtins_and_text(capsys, monkeypatch):
    code, out, _ = run(["classify", "--lattice", "builtin:m5", "--format", "text"], capsys, monkeypatch)
    assert code == FALSIFIED
    assert out.splitlines()[2].split() == ["prelinear", "False", '["b",', '"c"]']
    code, out, _ = run(["classify", "--lattice", "builtin:c4"], capsys, monkeypatch)
    assert code == OK


def test_verify_localic_residuated(capsys, monkeypatch):
    code, out, _ = run(["verify-localic", "--fuzzy-set", "a_m5.json", "--arrow", "residuated", "--verbose"], capsys, monkeypatch)
    d = json.loads(out)
    assert code == OK and d["verdict"] == "localic frame" and "relation" in d


def test_rough_thresholds(capsys, monkeypatch):
    _, out, _ = run(["rough", "--space", "rough.json", "--alpha", "2/3", "--beta", "1/2"], capsys, monkeypatch)
    d = json.loads(out)
    assert d["probabilistic"] == {"lower": ["3", "4", "5"], "upper": ["3", "4", "5"]}
    assert d["fuzzy"]["upper"]["1"] == "1/2"


def test_enumerate(capsys, monkeypatch):
    code, out, _ = run(["enumerate", "--size", "6", "--up-to"], capsys, monkeypatch)
    d = json.loads(out)
    assert code == OK
    assert [s["lattices"] for s in d["summary"]] == [1, 1, 2, 5, 15]
    assert [s["distributive"] for s in d["summary"]] == [1, 1, 2, 3, 5]
    _, out, _ = run(["enumerate", "--size", "5", "--predicate", "semilinear_and_not_prelinear"], capsys, monkeypatch)
    d = json.loads(out)
    assert d["summary"][0]["matched"] == 1 and len(d["lattices"]) == 1


def test_export_dot(capsys, monkeypatch, tmp_path):
    target = tmp_path / "m5.dot"
    code, out, _ = run(["export-dot", "--lattice", "m5.json", "--format", "text", "-o", str(target)], capsys, monkeypatch)
    assert code == OK and out == ""
    assert target.read_text().startswith('digraph "m5"')


def test_deterministic(capsys, monkeypatch):
    argv = ["classify", "--lattice", "b3.json", "--subset-bound", "3", "--seed", "7"]
    first = run(argv, capsys, monkeypatch)[1]
    assert first == run(argv, capsys, monkeypatch)[1]


@pytest.mark.parametrize(
    "argv",
    [
        ["classify", "--lattice", "missing.json"],
        ["classify", "--lattice", "builtin:nope"],
        ["cut", "--fuzzy-set", "a_m5.json", "--alpha", "zz"],
        ["enumerate", "--size", "9"],
        ["rough", "--space", "rough.json", "--alpha", "0.2", "--beta", "0.4"],
        ["classify"],
        ["frobnicate"],
        ["classify", "--lattice", "m5.json", "--bogus"],
    ],
)
def test_bad_input(argv, capsys, monkeypatch):
    assert run(argv, capsys, monkeypatch)[0] == BAD_INPUT


def test_malformed_json(tmp_path, capsys, monkeypatch):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(["classify", "--lattice", str(bad)], capsys, monkeypatch)[0] == BAD_INPUT
    cyclic = tmp_path / "cyc.json"
    cyclic.write_text(json.dumps({"elements": ["a", "b"], "covers": [["a", "b"], ["b", "a"]]}))
    assert run(["classify", "--lattice", str(cyclic)], capsys, monkeypatch)[0] == BAD_INPUT


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "alphacut", "classify", "--lattice", "builtin:n6"],
        capture_output=True, text=True, check=False,
    )  # fmt: skip
    assert proc.returncode == FALSIFIED
    assert json.loads(proc.stdout)["semilinear"]["witness"] == ["b", "a", "c"]


def test_format_table():
    assert format_table([["a", "bb"], ["ccc", "d"]]) == "a    bb\nccc  d\n"
    assert format_table([]) == ""
