import json
import os
import pathlib
import subprocess

import jsonschema
import pytest

NLA = os.environ.get("NLA_BIN", "build/tools/nla")
SCHEMA_DIR = pathlib.Path(os.environ.get("NLA_SCHEMA_DIR", "schema"))


def run(*args, env=None):
    e = dict(os.environ)
    e.pop("NLA_SEED", None)
    if env:
        e.update(env)
    p = subprocess.run([NLA, *args], capture_output=True, text=True, env=e, timeout=600)
    return p.returncode, p.stdout, p.stderr


def run_json(schema, *args, env=None):
    code, out, err = run(*args, "--json", env=env)
    doc = json.loads(out)
    jsonschema.validate(doc, json.loads((SCHEMA_DIR / f"{schema}.schema.json").read_text()))
    return code, doc


def test_schemas_are_valid():
    files = sorted(SCHEMA_DIR.glob("*.schema.json"))
    assert len(files) == 9
    for f in files:
        jsonschema.Draft202012Validator.check_schema(json.loads(f.read_text()))


def test_info_builtin():
    code, doc = run_json("info", "info", "f1")
    assert code == 0
    assert doc["ascending"] == [3, 5, 8]
    assert doc["betti"][1:5] == [5, 12, 19, 22]
    assert doc["n_d"] == 2
    assert doc["n_I"] == 4


def test_info_bracket_notation():
    code, doc = run_json("info", "info", "(0,0,0,2.13)")
    assert code == 0
    assert doc["step"] == 2
    assert doc["betti"][1] == 3


def test_info_text_and_tex():
    code, out, _ = run("info", "f1")
    assert code == 0
    assert "ascending type: (3,5,8)" in out
    assert "betti: (5,12,19,22)" in out
    code, out, _ = run("info", "f1", "--tex")
    assert code == 0
    assert "de^{6} &=" in out


def test_info_exit_codes():
    assert run("info", "(0,0,12,13+24)")[0] == 3
    assert run("info", "f9")[0] == 2
    assert run("info", "(0,0,1x)")[0] == 2
    assert run()[0] == 2
    assert run("frobnicate")[0] == 2


def test_seed_flag_and_environment():
    _, doc = run_json("info", "info", "f6", "--seed", "7")
    assert doc["seed"] == 7
    _, doc = run_json("info", "info", "f6", "--seed", "7", env={"NLA_SEED": "99"})
    assert doc["seed"] == 99
    _, doc = run_json("info", "info", "f6")
    assert doc["seed"] == 20240611
    assert doc["n_I"] == 4


def test_table2_default_matches_all_rows():
    code, doc = run_json("table2", "table2")
    assert doc["total"] == 11
    assert doc["matching"] == 11
    assert code == 0


def test_table2_injected_constant_gives_one_cell_diff():
    _, base = run_json("table2", "table2")
    code, doc = run_json("table2", "table2", "--inject", "f1.b1=6")
    assert code == 1
    rows = {r["name"]: r for r in doc["rows"]}
    assert rows["f1"]["diffs"] == [{"column": "b1", "expected": "6", "computed": "5"}]
    assert not rows["f1"]["match"]
    others = {r["name"]: r["diffs"] for r in base["rows"] if r["name"] != "f1"}
    assert {n: rows[n]["diffs"] for n in others} == others
    assert run("table2", "--inject", "f1.q=1")[0] == 2


def test_table2_tex():
    _, out, _ = run("table2", "--tex")
    assert out.startswith("\\begin{tabular}")
    assert "$\\mathfrak f_4^0$" in out


def test_classify():
    code, doc = run_json("classify", "classify", "wnn(0,1,1,1,0)")
    assert code == 0
    assert doc["tag"] == "WnN"
    assert doc["series_dims"] == [2, 2]
    assert doc["algebra"] == "f7^0"
    code, doc = run_json("classify", "classify", "snn2(1,0,0,0,0)")
    assert doc["tag"] == "SnN"
    assert doc["algebra"] == "g10^0"


def test_classify_algebra_and_matrix():
    j = "0,-1,0,0;1,0,0,0;0,0,0,-1;0,0,1,0"
    code, doc = run_json("classify", "classify", "--algebra", "(0,0,0,12)", "--J", j)
    assert code == 0
    assert doc["tag"] == "Nilpotent"
    assert run("classify", "--algebra", "(0,0,0,12)", "--J", "1,0,0,0;0,1,0,0;0,0,1,0;0,0,0,1")[0] == 2
    assert run("classify", "--algebra", "(0,0,0,12)", "--J", "0,-1;1,0")[0] == 2


def test_pk():
    code, doc = run_json("pk", "pk", "wnn(0,1,1,1,0)")
    assert code == 0
    assert doc["pk_exists"]
    assert doc["kernel_dim"] == 4
    assert doc["signature"] == [4, 4]
    assert doc["ricci_flat"] is True
    assert doc["flat"] is False
    assert doc["complex_symplectic"] is False
    code, doc = run_json("pk", "pk", "wnn(1,1,1,1,0)")
    assert code == 0
    assert not doc["pk_exists"]
    assert doc["witness"] is None


def test_pk_invalid_parameters():
    assert run("pk", "wnn(0,1,1,2,0)")[0] == 2
    assert run("pk", "wnn(0,1")[0] == 2
    assert run("pk")[0] == 2


def test_sympl():
    code, doc = run_json("sympl", "sympl", "wnn(1,1,1,1,0)")
    assert code == 0
    assert doc["nondegenerate"] is False
    assert {"tau", "xi"} <= set(doc["forced_zero"])
    code, out, _ = run("sympl", "wnn(1,1,1,1,0)")
    assert "complex symplectic: none" in out


def test_reduce():
    code, doc = run_json("reduce", "reduce", "generic(1,1,1,3+4i,0)")
    assert code == 0
    assert doc["normal_form"] == "wnn(1,1,1,5,0)"
    assert doc["verified"]
    assert run("reduce", "generic(1,1,1,1+i,0)")[0] == 2


def test_quotient():
    code, doc = run_json("quotient", "quotient", "wnn(1,-1,1,1,i)")
    assert code == 0
    assert doc["dim"] == 6
    assert doc["tag"] == "SnN"
    assert doc["snn6"] == "snn6(1,-1)"
    assert run("quotient", "wnn(1,-1,1,1,i)", "--k", "2")[0] == 0


def test_equiv_check():
    code, doc = run_json("equiv-check", "equiv-check", "wnn(0,1,1,1,i)", "wnn(0,1,1,1,i)")
    assert code == 0
    assert doc["verdict"] == "equivalent"
    code, doc = run_json("equiv-check", "equiv-check", "wnn(0,1,1,1,i)", "wnn(0,1,0,0,0)")
    assert code == 0
    assert doc["verdict"] == "inequivalent"


def test_reproduce_all():
    code, doc = run_json("reproduce-all", "reproduce-all")
    assert code == (0 if doc["pass"] else 1)
    sections = {s["section"]: s["pass"] for s in doc["sections"]}
    assert set(sections) == {"table2", "table1", "classification", "pseudo-kahler", "complex-symplectic"}
    for name in ("table1", "classification", "pseudo-kahler", "complex-symplectic"):
        assert sections[name], name


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
