import json

import pytest

from lieideals.cli import main
from lieideals.families import BI, spec_to_json, TypeA
from lieideals.lattice import cube, from_json, is_isomorphic


@pytest.fixture
def write(tmp_path):
    def _write(name, obj):
        p = tmp_path / name
        p.write_text(obj if isinstance(obj, str) else json.dumps(obj))
        return str(p)
    return _write


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


SL2 = {"dim": 3, "basis": ["h", "e", "f"], "brackets": [
    {"i": "h", "j": "e", "value": [0, 2, 0]},
    {"i": "h", "j": "f", "value": [0, 0, -2]},
    {"i": "e", "j": "f", "value": [1, 0, 0]},
]}


def test_build_and_pipeline(write, tmp_path, capsys):
    spec = write("s.json", spec_to_json(BI(("sl2",), ((2,), (4,)))))
    alg = str(tmp_path / "a.json")
    assert run(["build", spec, "-o", alg], capsys)[0] == 0
    assert json.loads(open(alg).read())["dim"] == 11
    ideals = str(tmp_path / "i.json")
    assert run(["ideals", alg, "-o", ideals], capsys)[0] == 0
    lat = str(tmp_path / "l.json")
    code, out, _ = run(["lattice", ideals, "-o", lat], capsys)
    assert code == 0 and "distributive=yes" in out and "complemented=no" in out and "size=5" in out
    code, out, _ = run(["hasse", lat], capsys)
    assert code == 0 and out.count(" -- ") == 5


def test_zero_algebra(write, capsys):
    code, out, _ = run(["build", write("z.json", spec_to_json(TypeA(False)))], capsys)
    assert code == 0 and json.loads(out)["dim"] == 0


def test_malformed_json(write, capsys):
    code, _, err = run(["build", write("bad.json", "{nope")], capsys)
    assert code == 2 and "invalid JSON" in err


def test_invalid_spec(write, capsys):
    code, _, err = run(["build", write("s.json", {"variant": "BI", "simples": ["sl2"], "modules": [[0]]})], capsys)
    assert code == 2 and "trivial" in err


def test_corrupted_algebra(write, capsys):
    bad = json.loads(json.dumps(SL2))
    bad["brackets"][2]["value"] = [1, 0, 1]
    code, _, err = run(["analyze", write("bad.json", bad)], capsys)
    assert code == 2 and "jacobi" in err


def test_analyze(write, capsys):
    code, out, _ = run(["analyze", write("sl2.json", SL2), "--format", "json"], capsys)
    rep = json.loads(out)
    assert code == 0 and rep["semisimple"] and rep["type"] == "reductive" and rep["dim_jacobson"] == 0


def test_sl2_sum_boolean(write, tmp_path, capsys):
    spec = write("s.json", {"variant": "SemisimpleSum", "simples": ["sl2", "sl2"]})
    alg, ideals, lat = (str(tmp_path / n) for n in ("a.json", "i.json", "l.json"))
    main(["build", spec, "-o", alg])
    main(["ideals", alg, "-o", ideals])
    capsys.readouterr()
    code, out, _ = run(["lattice", ideals, "-o", lat], capsys)
    assert code == 0 and "boolean=yes" in out
    assert is_isomorphic(from_json(json.loads(open(lat).read())), cube(2))
    code, out, _ = run(["hasse", lat], capsys)
    assert out.count(" -- ") == 4 and out.count("n") >= 4


def test_infinite_exit(write, capsys):
    code, out, err = run(["ideals", write("ab.json", {"dim": 2, "basis": ["x", "y"], "brackets": []})], capsys)
    assert code == 3 and "infinite" in err and "witness" in json.loads(out)


def test_budget_exit(write, capsys):
    code, _, _ = run(["ideals", write("ab.json", {"dim": 3, "brackets": []}), "--budget", "3"], capsys)
    assert code == 4


def test_lattice_rejects_incomplete(write, tmp_path, capsys):
    ideals = str(tmp_path / "i.json")
    main(["ideals", write("ab.json", {"dim": 2, "brackets": []}), "-o", ideals])
    assert run(["lattice", ideals], capsys)[0] == 3


def test_enum_distributive(tmp_path, capsys):
    code, _, _ = run(["enum-distributive", "3", "--outdir", str(tmp_path)], capsys)
    assert code == 0 and sorted(p.name for p in tmp_path.iterdir()) == ["d3.1.json", "d3.dot"]
    assert run(["enum-distributive", "13", "--outdir", str(tmp_path)], capsys)[0] == 2


def test_product_dual_deterministic(write, tmp_path, capsys):
    c2 = write("c2.json", {"size": 2, "labels": ["0", "1"], "covers": [[0, 1]]})
    code, out1, _ = run(["product", c2, c2], capsys)
    _, out2, _ = run(["product", c2, c2], capsys)
    assert code == 0 and out1 == out2
    assert is_isomorphic(from_json(json.loads(out1)), cube(2))
    code, out, _ = run(["dual", c2], capsys)
    assert code == 0 and json.loads(out)["size"] == 2


def test_bad_lattice_file(write, capsys):
    code, _, _ = run(["hasse", write("l.json", {"size": 3, "covers": [[0, 1], [0, 2]]})], capsys)
    assert code == 2


def test_verify_subset(capsys):
    code, out, _ = run(["verify", "--only", "4", "6"], capsys)
    assert code == 0 and out.count("[PASS]") == 2
