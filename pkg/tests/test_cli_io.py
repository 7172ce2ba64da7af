from __future__ import annotations

import json
import random

import pytest

from ncjordan import io
from ncjordan.catalog import make_dt, make_gamma_nd, make_k3, random_algebra
from ncjordan.cli import main
from ncjordan.errors import SizeMismatch
from ncjordan.fields import prime_field


def run(capsys, *argv):
    code = main(list(argv))
    return code, json.loads(capsys.readouterr().out)


@pytest.mark.parametrize("A", [make_k3("a", "b", "g"), make_dt(2, 2, 0, 0, prime_field(5)),
                               make_gamma_nd(3, "diag:1,1,x1^x2")])
def test_algebra_json_round_trip(A):
    text = io.dumps(io.algebra_to_json(A))
    assert io.algebra_from_json(json.loads(text)) == A


def test_malformed_json():
    with pytest.raises(ValueError):
        io.algebra_from_json({"parity": [0]})
    with pytest.raises(SizeMismatch):
        io.algebra_from_json({"dim": 2, "parity": [0]})
    with pytest.raises(SizeMismatch):
        io.algebra_from_json({"dim": 1, "parity": [0], "table": [[0, 0, [[3, "1"]]]]})


def test_cli_aut(capsys):
    code, out = run(capsys, "aut", "k3", "--alpha", "2", "--field", "gf5")
    assert code == 0 and out["count"] == 4


def test_cli_derive(capsys):
    code, out = run(capsys, "derive", "k3", "--alpha", "1/2")
    assert code == 0 and out["dims"] == [3, 2]


def test_cli_verify_symbolic(capsys):
    code, out = run(capsys, "verify", "k3", "--alpha", "a", "--beta", "b", "--gamma", "g")
    assert code == 0 and out["passed"]


def test_cli_verify_failure(tmp_path, capsys):
    A = random_algebra(2, prime_field(5), random.Random(1), parity=(0, 0))
    path = tmp_path / "bad.json"
    path.write_text(io.dumps(io.algebra_to_json(A)))
    code, out = run(capsys, "verify", "--json", str(path))
    assert code == 1 and not out["passed"]


def test_cli_subalg(capsys):
    code, out = run(capsys, "subalg", "k3", "--alpha", "2", "--field", "gf5", "--dim", "2")
    assert code == 0 and out["subalgebras"]["2"]["count"] == 2


def test_cli_grassmann(capsys):
    code, out = run(capsys, "grassmann", "gras-der", "--n", "3", "--a", "diag:1,1,x1^x2")
    assert code == 0 and out["dims"] == [1, 2]


def test_cli_isosearch(capsys):
    code, out = run(capsys, "isosearch", "k3", "--alpha", "1", "--beta", "2", "--gamma", "1",
                    "--other", "k3:alpha=2", "--field", "gf5")
    assert code == 0
    code, _ = run(capsys, "isosearch", "k3", "--alpha", "2", "--other", "k3:alpha=3", "--field", "gf5")
    assert code == 1


def test_cli_errors(capsys):
    code, out = run(capsys, "aut", "dt", "--t", "2", "--alpha", "2", "--field", "gf13", "--budget", "100")
    assert code == 3 and out["error"] == "SearchTooLarge"
    code, out = run(capsys, "derive", "nosuch")
    assert code == 2 and "error" in out


def test_cli_matrix_and_out(tmp_path, capsys):
    target = tmp_path / "m.json"
    assert main(["--out", str(target), "matrix", "--only", "2"]) == 0
    assert json.loads(target.read_text())["passed"]
