import json
import subprocess
import sys

import pytest

from symcurves import linear_series as ls
from symcurves import ns_calculus as ns
from symcurves.cli import main, run
from symcurves.plane_embedding import quintic as qc
from symcurves.plane_embedding.points import Divisor3
from symcurves.plane_embedding.veronese import phi3


def dumps(obj):
    return json.dumps(obj, sort_keys=False)


def test_ns_degree_sym():
    res = run(["ns", "degree", "--kind", "sym", "--g", "6", "--n", "3", "--d", "5"])
    assert res.exit_code == 0
    assert res.outputs["degree"] == 125
    assert res.command == "ns degree"


def test_ns_degree_alt_negative():
    res = run(["ns", "degree", "--kind", "alt", "--g", "6", "--n", "3", "--d", "5"])
    assert res.outputs == {"class": {"g": 6, "n": 3, "xi": -3, "theta": 1}, "degree": -15}


def test_ns_intersect():
    res = run(["ns", "intersect", "--g", "6", "--n", "3", "--classes=1,0;0,1;0,1"])
    assert res.outputs["intersection"] == 30
    res = run(["ns", "intersect", "--g", "6", "--n", "3", "--classes=-3,1;-3,1;-3,1"])
    assert res.outputs["intersection"] == -15


def test_series_commands():
    assert run(["series", "castelnuovo", "--d", "9", "--r", "4"]).outputs == {"genus_bound": 7}
    assert run(["series", "max-r9", "--g", "7"]).outputs == {"max_r": 3}
    assert run(["series", "max-r9", "--g", "7", "--trigonal"]).outputs == {"max_r": 4}


def test_series_search_is_thin_shim(capsys):
    argv = ["series", "search", "--g-min", "5", "--g-max", "8", "--d-max", "20"]
    res = run(argv)
    lib = ls.min_alt_embedding_degree_search(5, 8, 20).to_dict()
    assert dumps(res.outputs) == dumps(lib)
    values = {(c["g"], c["d"]): c["alt_degree"] for c in res.outputs["candidates"]}
    assert {values[p] for p in [(5, 7), (6, 5), (6, 7), (6, 8), (7, 8), (8, 8)]} == {60, -15, 47, 120, 104, 88}
    assert res.outputs["surviving"] == []
    assert main(argv) == 0
    text = capsys.readouterr().out
    assert "all admissible degrees exceed 125" in text
    assert "alt_degree" in text


def test_json_output(capsys):
    assert main(["series", "castelnuovo", "--d", "9", "--r", "4", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data == {"command": "series castelnuovo", "inputs": {"d": 9, "r": 4},
                    "outputs": {"genus_bound": 7}, "exit_code": 0}


def test_embed_commands(tmp_path):
    res = run(["embed", "phi", "--divisor", "1,1,0;1,1,0;1,1,0"])
    assert res.outputs["image"] == [1, 3, 0, 3, 0, 0, 1, 0, 0, 0]
    f = tmp_path / "div.json"
    f.write_text(json.dumps({"points": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]}))
    res = run(["embed", "phi", "--divisor", str(f)])
    assert dumps(res.outputs["image"]) == dumps(phi3(Divisor3.parse("1,0,0;0,1,0;0,0,1")).to_list())
    res = run(["embed", "veronese", "--point", "1,1,0"])
    assert res.outputs["image"] == [1, 3, 0, 3, 0, 0, 1, 0, 0, 0]
    pts = "1,0,0,0,0,0,0,0,0,0;0,0,0,0,0,0,0,0,0,1;1,3,3,3,6,3,1,3,3,1"
    assert run(["embed", "collinear", "--points", pts]).outputs["collinear"] is False
    line = "1,0,0,0,0,0,0,0,0,0;0,1,0,0,0,0,0,0,0,0;1,1,0,0,0,0,0,0,0,0"
    assert run(["embed", "collinear", "--points", line]).outputs["collinear"] is True


def test_quintic_commands():
    res = run(["quintic", "verify", "--seed", "1"])
    assert res.exit_code == 0
    assert dumps(res.outputs) == dumps(qc.verify_quintic_noncollinearity(seed=1).to_dict())
    assert res.outputs["rank"] == 3
    res = run(["quintic", "construct", "--seed", "1", "--certify"])
    assert res.outputs["singular_points"] == []
    assert res.outputs["nullity"] == 11


@pytest.mark.parametrize("argv, code, err", [
    (["bogus"], 2, "usage_error"),
    (["ns", "degree", "--kind", "sym", "--g", "6"], 2, "usage_error"),
    (["ns", "degree", "--kind", "sym", "--g", "0", "--n", "3", "--d", "5"], 3, "domain_error"),
    (["series", "max-r9", "--g", "4"], 3, "domain_error"),
    (["series", "castelnuovo", "--d", "3", "--r", "4"], 3, "domain_error"),
    (["series", "search", "--g-min", "5", "--g-max", "8", "--d-max", "9"], 3, "domain_error"),
    (["embed", "phi", "--divisor", "1,0,0;0,1,0"], 3, "domain_error"),
    (["embed", "phi", "--divisor", "{not json"], 2, "usage_error"),
    (["embed", "collinear", "--points", "1,0,0,0,0,0,0,0,0,0"], 2, "usage_error"),
    (["ns", "intersect", "--g", "6", "--n", "3", "--classes=1;2"], 2, "usage_error"),
])
def test_error_codes(argv, code, err):
    res = run(argv)
    assert res.exit_code == code
    assert res.outputs["error"]["code"] == err


def test_error_goes_to_stderr(capsys):
    assert main(["series", "max-r9", "--g", "4"]) == 3
    captured = capsys.readouterr()
    assert captured.out == "" and "domain_error" in captured.err


def test_big_integers_are_strings():
    res = run(["ns", "degree", "--kind", "sym", "--g", "6", "--n", "5", "--d", "10000"])
    assert res.outputs["degree"] == str(10 ** 20)
    res = run(["ns", "degree", "--kind", "sym", "--g", "6", "--n", "5", "--d", "1000"])
    assert res.outputs["degree"] == 10 ** 15


def test_console_script_deterministic():
    argv = [sys.executable, "-m", "symcurves", "quintic", "verify", "--seed", "3", "--json"]
    a = subprocess.run(argv, capture_output=True, text=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, text=True, check=True).stdout
    assert a == b
    assert json.loads(a)["outputs"]["rank"] == 3
