import json
import subprocess
import sys

import numpy as np
import pytest

from dynrefl.cli import EXIT_FAIL, EXIT_INPUT, EXIT_OK, main
from dynrefl.document import open_workbench
from dynrefl.dump import tables_from_dump
from dynrefl.fixtures import ex89_document, zn3_document


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def run_json(capsys, *argv):
    code, out = run(capsys, "--json", *argv)
    return code, json.loads(out)


def write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(json.dumps(doc))
    return str(p)


def _rows(dump, name, lam):
    table = next(t for t in dump["tables"] if t["name"] == name)
    block = next(b for b in table["blocks"] if b["lambda"] == lam)
    return [tuple(map(tuple, r)) for r in block["rows"]]


# -- validate -------------------------------------------------------------------

def test_validate_fixture(capsys):
    code, out = run_json(capsys, "validate", "EX89")
    assert code == EXIT_OK and out["valid"] and out["X_size"] == 3


def test_validate_rejects_non_latin_row(capsys, tmp_path):
    doc = ex89_document()
    doc["quasigroup"]["table"][2] = ["l2"] * 6
    code, out = run(capsys, "validate", write(tmp_path, "d.json", doc))
    assert code == EXIT_INPUT
    assert json.loads(out)["error"]["error"] == "RowNotPermutation"


def test_validate_rejects_order_mismatch(capsys, tmp_path):
    doc = ex89_document()
    doc["group"] = {"cyclic": 5}
    code, out = run(capsys, "validate", write(tmp_path, "d.json", doc))
    assert code == EXIT_INPUT
    assert json.loads(out)["error"]["error"] == "SizeMismatch"


@pytest.mark.parametrize("content", ["{", "[]", '{"name": "x"}'])
def test_unreadable_documents_exit_2(capsys, tmp_path, content):
    p = tmp_path / "d.json"
    p.write_text(content)
    code, out = run(capsys, "validate", str(p))
    assert code == EXIT_INPUT and "error" in json.loads(out)


def test_missing_file_exits_2(capsys, tmp_path):
    code, _ = run(capsys, "verify", str(tmp_path / "nope.json"))
    assert code == EXIT_INPUT


def test_fixture_documents_are_independent():
    a = ex89_document()
    a["quasigroup"]["table"][0][0] = "l5"
    assert ex89_document()["quasigroup"]["table"][0][0] == "e_L"


# -- build ----------------------------------------------------------------------

def test_build_sigma_block(capsys):
    code, dump = run_json(capsys, "build", "EX53", "--what", "sigma")
    assert code == EXIT_OK
    assert (("l1", "l2"), ("l5", "l5")) in _rows(dump, "sigma", "e_L")


def test_build_k_block(capsys):
    _, dump = run_json(capsys, "build", "EX89", "--what", "k")
    assert (("l2", "x2"), ("l2", "x2")) in _rows(dump, "k", "l1")
    assert (("l2", "x2"), ("l5", "x1")) in _rows(dump, "k", "l3")


def test_build_zn3_sigma_is_flip(capsys):
    _, dump = run_json(capsys, "build", "ZN3", "--what", "sigma")
    for block in next(t for t in dump["tables"] if t["name"] == "sigma")["blocks"]:
        for (a, b), (c, d) in block["rows"]:
            assert (c, d) == (b, a)


@pytest.mark.parametrize("what", ["sigma", "k", "lifts", "quiver"])
def test_build_round_trips(capsys, what):
    _, dump = run_json(capsys, "build", "EX89", "--what", what)
    wb = open_workbench(ex89_document()).build_all()
    tables = tables_from_dump(wb, dump)
    assert tables
    for arr in tables.values():
        assert np.all(arr >= 0)
    if what == "sigma":
        assert np.array_equal(tables["sigma"], wb.sigma.morphism.table)
    if what == "k":
        assert np.array_equal(tables["k"], wb.k.morphism.table)


def test_build_to_file(capsys, tmp_path):
    out = tmp_path / "k.json"
    code, _ = run(capsys, "--json", "build", "EX89", "--what", "k", "--out", str(out))
    assert code == EXIT_OK
    assert json.loads(out.read_text())["what"] == "k"


# -- verify ---------------------------------------------------------------------

@pytest.mark.parametrize("name", ["EX53", "EX89", "ZN3"])
def test_verify_all_passes(capsys, name):
    code, rep = run_json(capsys, "verify", name, "--check", "all", "--no-timings")
    assert code == EXIT_OK and rep["passed"]
    assert all(r["passed"] for r in rep["results"])


def test_verify_brace_on_zn3(capsys):
    code, rep = run_json(capsys, "verify", "ZN3", "--check", "brace")
    assert code == EXIT_OK
    assert rep["info"]["brace.is_brace"] is True and rep["info"]["brace.k_constant"] is True
    assert "is_brace" not in rep["info"]


def test_verify_unknown_group_exits_2(capsys):
    code, _ = run(capsys, "verify", "EX89", "--check", "nonsense")
    assert code == EXIT_INPUT


NEGATIVE = [
    ("sigma", {"lambda": "l1", "inputs": ["l1", "l2"], "outputs": ["l2", "l1"]}),
    ("k", {"lambda": "l1", "inputs": ["l2", "x2"], "outputs": ["l2", "x3"]}),
    ("m_X", {"lambda": "l1", "inputs": ["l2", "x2"], "outputs": ["x1"]}),
]


@pytest.mark.parametrize("what,entry", NEGATIVE, ids=[w for w, _ in NEGATIVE])
def test_negative_controls_and_replay(capsys, tmp_path, what, entry):
    doc = ex89_document()
    doc["overrides"] = {what: [entry]}
    bad = write(tmp_path, "bad.json", doc)
    code, rep = run_json(capsys, "verify", bad, "--no-timings")
    assert code == EXIT_FAIL and not rep["passed"]
    w = rep["witness"]
    assert {"check", "lambda", "inputs", "lhs", "rhs"} <= set(w)
    wfile = tmp_path / "w.json"
    wfile.write_text(json.dumps(rep))
    assert run(capsys, "verify", bad, "--replay", str(wfile))[0] == EXIT_FAIL
    assert run(capsys, "verify", "EX89", "--replay", str(wfile))[0] == EXIT_OK


# -- enumerate ------------------------------------------------------------------

def test_enumerate_one_point_module(capsys, tmp_path):
    doc = zn3_document()
    doc["module"] = {"kind": "one-point"}
    code, res = run_json(capsys, "enumerate", write(tmp_path, "d.json", doc), "--families")
    assert code == EXIT_OK
    assert res["total_families"] == 3 and res["reflection_fail"] == 0


def test_enumerate_zn3(capsys):
    code, res = run_json(capsys, "enumerate", "ZN3", "--families")
    assert code == EXIT_OK
    assert res["total_families"] == 27 == res["reflection_pass"]
    assert res["k_constant"] == 3


def test_enumerate_limit(capsys):
    code, res = run_json(capsys, "enumerate", "EX89", "--families", "--limit", "100")
    assert code == EXIT_OK
    assert res["total_families"] == 1000 and res["visited"] == 100 == res["reflection_pass"]


def test_enumerate_is_independent_of_workers(capsys):
    args = ("enumerate", "EX89", "--families", "--random", "12", "--seed", "3")
    _, one = run_json(capsys, "--workers", "1", *args)
    _, two = run_json(capsys, "--workers", "2", *args)
    assert one == two and one["visited"] == 12


def test_enumerate_needs_flag(capsys):
    assert run(capsys, "enumerate", "ZN3")[0] == EXIT_INPUT


# -- reproduce ------------------------------------------------------------------

@pytest.mark.parametrize("name", ["example-5.3", "example-8.9", "zn-flip"])
def test_reproduce(capsys, name):
    code, rep = run_json(capsys, "reproduce", name)
    assert code == EXIT_OK and rep["passed"]


def test_console_script_entry_point():
    out = subprocess.run([sys.executable, "-m", "dynrefl.cli", "reproduce", "zn-flip"],
                         capture_output=True, text=True, check=False)
    assert out.returncode == EXIT_OK and "passed" in out.stdout
