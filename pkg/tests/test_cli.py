import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from inertia.cli import EXIT_CHECK_FAILED, run
from inertia.delzant import load_input

INPUTS = Path(__file__).resolve().parent.parent / "demos" / "inputs"


def call(*argv, stdin=None):
    out, err = io.StringIO(), io.StringIO()
    old = sys.stdin
    if stdin is not None:
        sys.stdin = io.StringIO(stdin)
    try:
        code = run([str(a) for a in argv], out, err)
    finally:
        sys.stdin = old
    return code, out.getvalue(), err.getvalue()


def write(tmp_path, text, name="in.txt"):
    p = tmp_path / name
    p.write_text(text)
    return p


def test_sectors_text_and_json():
    code, text, _ = call("sectors", INPUTS / "p123.txt")
    assert code == 0
    assert "5/6" in text
    code, js, _ = call("sectors", INPUTS / "p123.txt", "--format", "json")
    rep = json.loads(js)
    assert rep["command"] == "sectors"
    assert [r["degree_shift"] for r in rep["sectors"]] == ["0", "2", "2", "2", "2", "4"]
    assert rep["properties"]["gamma_order"] == 6


def test_input_echo_round_trips(tmp_path):
    _, js, _ = call("sectors", INPUTS / "rectangle.txt", "--format", "json")
    echo = json.loads(js)["input"]
    assert load_input(echo) == load_input((INPUTS / "rectangle.txt").read_text())
    _, js2, _ = call("sectors", write(tmp_path, echo), "--format", "json")
    assert json.loads(js2) == json.loads(js)


def test_inertial_table():
    code, text, _ = call("inertial", INPUTS / "p123.txt")
    assert code == 0
    assert "y5  y5  6*u^3*y4" in text
    rep = json.loads(call("inertial", INPUTS / "p123.txt", "--format", "json")[1])
    assert len(rep["structure_constants"]) == 15


def test_cohomology_integral():
    code, js, _ = call("cohomology", INPUTS / "p121.txt", "--coeff", "z", "--max-degree", "12", "--format", "json")
    assert code == 0
    groups = {g["degree"]: g["text"] for g in json.loads(js)["groups"]}
    assert [groups[str(d)] for d in range(0, 10, 2)] == ["Z", "Z^2", "Z + Z/2", "Z/2 + Z/2", "Z/2 + Z/2"]
    assert all(groups[str(d)] == "0" for d in range(1, 12, 2))


def test_cohomology_presentation_text():
    code, text, _ = call("cohomology", INPUTS / "p113.txt")
    assert code == 0
    assert "Z[u, y1]/<y1^3 - u^2, 3*u^3, 3*u*y1>" in text


def test_multiply():
    code, js, _ = call("multiply", INPUTS / "p123.txt", "5/6", "5/6", "--format", "json")
    p = json.loads(js)["product"]
    assert code == 0 and p["agree"]
    assert p["star"]["coefficient"] == "6*u^3" and p["target"] == "2/3"
    assert p["smile"]["obstruction_class"] == "2*u^2" and p["smile"]["normal_class"] == "3*u"
    code, js, _ = call("multiply", INPUTS / "triangle123.txt", "1/2,0,1/2", "1/2,0,1/2", "--format", "json")
    assert code == 0 and json.loads(js)["product"]["star"]["coefficient"] == "3*u^2"


def test_flag():
    code, text, _ = call("flag", "G2")
    assert code == 0 and "Z2 x Z6" in text
    rep = json.loads(call("flag", "B2", "--format", "json")[1])
    assert any(c["centralizer_group"] == "SO(4)" and c["components"] == 2 for c in rep["classes"])


def test_check_passes():
    code, js, _ = call("check", INPUTS / "p123.txt", "--max-degree", "8", "--format", "json")
    rep = json.loads(js)
    assert code == 0 and rep["all_passed"]
    assert all(v["failed"] == 0 for v in rep["properties"].values())


def test_check_failure_exit_code(monkeypatch):
    import inertia.cli as cli
    from inertia.checks import CheckResult

    def broken(*args, **kwargs):
        r = CheckResult("always fails")
        r.record(False, "x")
        return [r]

    monkeypatch.setattr(cli, "run_checks", broken)
    assert call("check", INPUTS / "p123.txt")[0] == EXIT_CHECK_FAILED


def test_stdin():
    code, text, _ = call("sectors", "-", stdin="mode circle\nweights 1 1 3\n")
    assert code == 0 and "4/3" in text


@pytest.mark.parametrize(
    "argv, code",
    [
        (["sectors", "missing-file.txt"], 1),
        (["flag", "X9"], 1),
        (["flag", "E9"], 2),
        (["bogus"], 1),
        (["cohomology", str(INPUTS / "rectangle.txt"), "--coeff", "z"], 2),
        (["cohomology", str(INPUTS / "p123.txt"), "--max-degree", "-1"], 1),
        (["inertial", str(INPUTS / "interval22.txt")], 2),
        (["sectors", str(INPUTS / "interval22.txt")], 2),
        (["multiply", str(INPUTS / "p123.txt"), "1/5", "0"], 1),
    ],
)
def test_exit_codes(argv, code):
    got, out, err = call(*argv)
    assert got == code
    assert err.startswith("error:" if code == 1 else "unsupported:")


def test_bad_input_file(tmp_path):
    assert call("sectors", write(tmp_path, "mode circle\nweights 1 -2\n"))[0] == 1
    assert call("sectors", write(tmp_path, "mode polytope\ndim 2\nfacet 1 0 ; 0\nfacet 0 1 ; 0\n"))[0] == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "inertia", "flag", "A2"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0 and "Z3" in proc.stdout


@pytest.mark.parametrize("name", ["p123.txt", "p113.txt", "rectangle.txt", "triangle123.txt"])
def test_text_and_json_agree_on_sector_rows(name):
    text = call("sectors", INPUTS / name)[1].splitlines()
    rep = json.loads(call("sectors", INPUTS / name, "--format", "json")[1])
    rows = text[3:]
    assert len(rows) == len(rep["sectors"])
    for line, row in zip(rows, rep["sectors"]):
        cells = line.split()
        assert cells[0] == row["element"] and cells[1] == row["generator"]
        n = len(row["logweights"])
        assert cells[2 : 2 + n] == row["logweights"]
        assert cells[2 + n] == row["degree_shift"]


def test_text_and_json_agree_on_groups():
    text = call("cohomology", INPUTS / "p113.txt", "--coeff", "z", "--max-degree", "8")[1]
    rep = json.loads(call("cohomology", INPUTS / "p113.txt", "--coeff", "z", "--max-degree", "8", "--format", "json")[1])
    listed = text.split("integral groups:\n", 1)[1].split("\n")
    assert [f"  {g['degree']}: {g['text']}" for g in rep["groups"]] == [l for l in listed if l]
    for d, n in rep["series"].items():
        assert f"  {d}: {n}" in text
