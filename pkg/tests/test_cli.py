import json
import subprocess
import sys

import pytest

from iterstab.cli import RunConfig, main


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr().out
    return code, [json.loads(line) for line in out.splitlines() if line]


def test_iterate_zero(capsys):
    code, recs = run(["iterate", "--field", "2", "--poly", "x^2+x+1", "-n", "0"], capsys)
    assert code == 0 and recs[0]["result"] == "x" and recs[0]["schema"] == 1


@pytest.mark.parametrize(
    "field,poly,verdict",
    [("2", "x^4+x+1", "irreducible"), ("3", "x^2+2", "reducible"), ("2^2/x^2+x+1", "x^2+x+2", "irreducible")],
)
def test_irred(capsys, field, poly, verdict):
    code, recs = run(["irred", "--field", field, "--poly", poly], capsys)
    assert code == 0 and recs[0]["verdict"] == verdict


def test_stability_records(capsys):
    code, recs = run(["stability", "--field", "2", "--poly", "x^2+x+1", "--max-iter", "5"], capsys)
    assert code == 0
    assert [r.get("verdict") for r in recs[:-1]] == ["irreducible", "irreducible", "reducible"]
    assert recs[-1]["stable_depth"] == 2 and recs[-1]["stop_reason"] == "reducible"
    assert "elapsed_ms" not in recs[0]


@pytest.mark.parametrize("strategy", ["exact", "det2k"])
def test_disc_mod8(capsys, strategy):
    code, recs = run(
        ["disc", "--field", "2", "--poly", "x^20+x^18+x^5+x^2+1", "--mod8", "--iterates", "2", "--strategy", strategy],
        capsys,
    )
    assert code == 0 and [r["residue"] for r in recs] == [5, 5]


def test_theorem_exit_codes(capsys):
    assert run(["theorem", "trim-even", "--n", "1", "--s", "1"], capsys)[0] == 0
    code, recs = run(["theorem", "xp-ax2-b", "--p", "7", "--a", "1", "--b", "4"], capsys)
    assert code == 1 and recs[0]["status"] == "disagrees"
    code, recs = run(["theorem", "trim-even", "--n", "2", "--s", "4"], capsys)
    assert code == 0 and recs[0]["status"] == "gate"


def test_theorem_capelli(capsys):
    code, recs = run(
        ["theorem", "capelli", "--field", "3", "--f", "x^2+1", "--g", "x^2+x", "--h", "1"], capsys
    )
    assert code == 0 and recs[0]["status"] == "agrees"


def test_search_resume(capsys):
    base = ["search", "--field", "2", "--max-degree", "8", "--depth", "3"]
    _, full = run(base, capsys)
    _, tail = run(base + ["--cursor", "4"], capsys)
    assert tail == full[4:]
    assert all(r["outcome"].startswith("fell_at_level_") for r in full)


def test_verify(capsys):
    code, recs = run(["verify", "--suite", "newton", "--trials", "5"], capsys)
    assert code == 0 and recs[-1]["failures"] == 0


@pytest.mark.parametrize(
    "argv",
    [
        ["iterate", "--field", "2", "--poly", "x^^2", "-n", "1"],
        ["irred", "--field", "4", "--poly", "x"],
        ["irred", "--field", "2"],
    ],
)
def test_input_errors(capsys, argv):
    code, recs = run(argv, capsys)
    assert code == 2 and "error" in recs[0]


def test_usage_error(capsys):
    assert main(["nonsense"]) == 2


def test_out_file(tmp_path, capsys):
    out = tmp_path / "r.jsonl"
    assert main(["iterate", "--poly", "x^2+x+1", "-n", "2", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["result"] == "x^4+x+1"


def test_env_degree_cap():
    code = subprocess.run(
        [sys.executable, "-m", "iterstab", "iterate", "--poly", "x^10+x+1", "-n", "3"],
        env={"ITERSTAB_DEGREE_CAP": "500", "PATH": ""},
        capture_output=True,
        text=True,
    )
    assert code.returncode == 2 and "DegreeCapError" in code.stdout


def test_runconfig_validation():
    with pytest.raises(ValueError):
        RunConfig(workers=0)
