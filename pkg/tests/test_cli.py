import csv
import io
import json

import numpy as np
import pytest

from quasispectral.errors import DomainError
from quasispectral.cli import ConfigError, EXIT_CONFIG, EXIT_MISMATCH, EXIT_NUMERIC, EXIT_OK, parse_an, parse_complex, parse_gamma, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call(*argv, "--format", "json")
    return code, (json.loads(out) if out else None), err


def test_table_exit_codes():
    assert call("table", "3")[0] == EXIT_OK
    assert call("table", "1")[0] == EXIT_MISMATCH
    assert call("table", "1", "--errata")[0] == EXIT_OK
    assert call("table", "11")[0] == EXIT_CONFIG


def test_table_examples():
    _, doc, _ = call_json("table", "6")
    first = [r for r in doc["rows"] if r["row"] == 1]
    assert len(first) == 2 and all(r["re"] == 0.0 and r["im"] == 0.0 for r in first)
    _, doc, _ = call_json("table", "9")
    assert all(abs(r["re"]) < 1e-12 and abs(r["im"]) < 1e-12 for r in doc["rows"] if r["col"] == 5)
    assert sum(r["col"] == 5 for r in doc["rows"]) == 5
    _, doc, _ = call_json("table", "3")
    assert {r["col"] for r in doc["rows"]} == {1, 2, 3}
    quasi = sorted((r for r in doc["rows"] if r["col"] == 3), key=lambda r: r["row"])
    assert len(quasi) == 7 and abs(quasi[-1]["re"] - 1.0) < 1e-10


def test_zeros_quasi_sol1_matches_reference():
    code, doc, _ = call_json("zeros", "--family", "jacobi", "--gamma", "sol:1", "--n", "8", "--alpha", "0.1", "--beta", "-0.4")
    assert code == EXIT_OK
    ref = [-0.923446, -0.716709, -0.409266, -0.0441403, 0.327586, 0.653905, 0.88914, 1.0]
    assert np.allclose(sorted(r["re"] for r in doc["rows"]), ref, atol=1e-4)
    assert doc["summary"]["support"]["on_boundary"] == 1


def test_chain_laguerre_sol1():
    code, doc, _ = call_json("chain", "--family", "laguerre", "--gamma", "sol:1", "--alpha", "-0.5", "--n", "10", "--point", "0")
    assert code == EXIT_OK and doc["summary"]["start_index"] == 1
    m = {r["n"]: r["m"] for r in doc["rows"]}
    for n in range(2, 11):
        assert m[n] == pytest.approx((n - 1) / (2 * n + 0.5), abs=1e-11)


def test_opuc_zeros_gamma_i():
    code, doc, _ = call_json("zeros", "--family", "opuc", "--point", "i", "--n", "5")
    assert code == EXIT_OK
    roots = [complex(r["re"], r["im"]) for r in doc["rows"]]
    assert min(abs(z + 0.670332j) for z in roots) < 1e-5
    assert doc["summary"]["inside_disc"] == 5


def test_opuc_command_verblunsky():
    code, doc, _ = call_json("opuc", "--point", "1", "--n", "5")
    assert code == EXIT_OK
    alphas = [complex(*a) for a in doc["summary"]["verblunsky"]]
    assert np.allclose(alphas, [-1 / (k + 2) for k in range(5)], atol=1e-11)
    code, doc, _ = call_json("opuc", "--point", "1", "--n", "5", "--an", "expr:1/(n+1)-i")
    assert doc["summary"]["outside_disc"] == 1


@pytest.mark.parametrize("fam,sol,key,bound", [
    ("qc-jacobi", "1", None, 1e-10),
    ("qc-laguerre", "2", "residual", 1e-12),
    ("qg-jacobi", "4", "compact", 1e-9),
])
def test_verify_examples(fam, sol, key, bound):
    code, doc, _ = call_json("verify", fam, sol)
    assert code == EXIT_OK
    keys = [key] if key else ["residual", "compact", "commutation"]
    assert all(doc["summary"][k] < bound for k in keys)


def test_verify_bad_solution():
    assert call("verify", "qc-laguerre", "3")[0] == EXIT_CONFIG


def test_interlace_and_jacobimatrix():
    code, doc, _ = call_json("interlace", "--alpha", "1.3", "--beta", "-0.6", "--n", "7", "--gamma", "sol:1", "--against", "christoffel")
    assert code == EXIT_OK and doc["summary"]["strict"]
    code, doc, _ = call_json("interlace", "--alpha", "1", "--beta", "0.5", "--n", "6", "--gamma", "sol:1", "--against", "qg")
    assert doc["summary"]["strict"] and doc["summary"]["removed"]["a"] == [1.0]
    code, doc, _ = call_json("jacobimatrix", "--family", "laguerre", "--gamma", "sol:1", "--n", "20")
    assert code == EXIT_OK and doc["summary"]["commutation_residual"] < 1e-11


def test_formats():
    _, out, _ = call("zeros", "--family", "laguerre", "--n", "3", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["index"] for r in rows] == ["1", "2", "3"]
    _, out, _ = call("zeros", "--family", "laguerre", "--n", "3")
    assert out.splitlines()[0].split() == ["index", "re", "im"]
    assert any(line.startswith("# method:") for line in out.splitlines())


def test_deterministic_output():
    argv = ("opuc", "--point", "i", "--n", "4", "--an", "expr:(n+1)*i/n", "--format", "json")
    assert call(*argv)[1] == call(*argv)[1]
    assert call("table", "10", "--format", "csv")[1] == call("table", "10", "--format", "csv")[1]


def test_config_errors():
    assert call("zeros", "--n", "0")[0] == EXIT_CONFIG
    assert call("zeros")[0] == EXIT_CONFIG
    assert call("zeros", "--gamma", "bogus:1", "--n", "3")[0] == EXIT_CONFIG
    assert call("nosuch")[0] == EXIT_CONFIG
    assert call("zeros", "--family", "custom", "--n", "3")[0] == EXIT_CONFIG


def test_numeric_failure_exit():
    # constant gamma on Jacobi cannot be orthogonalized
    code, _, err = call("jacobimatrix", "--gamma", "const:2", "--alpha", "0.5", "--beta", "0.5", "--n", "5")
    assert code == EXIT_NUMERIC and "numeric failure" in err


def test_custom_recurrence(tmp_path):
    path = tmp_path / "rec.csv"
    path.write_text("c,lam\n0,0\n0,0.5\n0,0.25\n0,0.25\n")
    code, doc, _ = call_json("zeros", "--family", "custom", "--recurrence", str(path), "--n", "2")
    assert code == EXIT_OK
    assert np.allclose(sorted(r["re"] for r in doc["rows"]), [-np.sqrt(0.5), np.sqrt(0.5)])


def test_parsers():
    assert parse_complex("i") == 1j and parse_complex("-i") == -1j and parse_complex("0.3+2i") == 0.3 + 2j
    assert parse_an("expr:n/(n+1)")(5) == pytest.approx(5 / 6)
    assert parse_an("expr:2i")(3) == 2j
    assert parse_an(None) is None
    with pytest.raises(ConfigError):
        parse_an("expr:__import__('os')")
    assert parse_gamma("const:3", "jacobi", 0.0, 0.0).at(4) == 3
    with pytest.raises(DomainError):
        parse_gamma("sol:9", "laguerre", 0.0, None)
