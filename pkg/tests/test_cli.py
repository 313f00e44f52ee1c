import json

import pytest

from weylmod.cli import main

IDEAL_BREAK2 = {
    "schema": "weylmod/1",
    "type": "ideal",
    "field": {"kind": "Q"},
    "arity": 2,
    "generators": {"1": ["0/1", "1/1"], "2": ["0/1", "1/1"]},
}

IDEAL_STABLE_F2 = {
    "schema": "weylmod/1",
    "type": "ideal",
    "field": {"kind": "GF", "p": 2},
    "arity": 1,
    "generators": {"1": [1, 1, 1]},
}

IDEAL_NONDEG = {
    "schema": "weylmod/1",
    "type": "ideal",
    "field": {"kind": "Q"},
    "arity": 1,
    "generators": {"1": ["-1/2", "1/1"]},
}


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def write(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


def test_block_classify_exact_output(tmp_path, capsys):
    path = write(tmp_path, "ideal.json", IDEAL_BREAK2)
    code, out = run(capsys, "block", "classify", path)
    assert code == 0
    assert (
        out
        == '{"reason":"Thm 7.10(i): maximal break of order 2","schema":"weylmod/1","type":"tame"}\n'
    )


def test_orbit_info_output(tmp_path, capsys):
    path = write(tmp_path, "ideal.json", IDEAL_NONDEG)
    code, out = run(capsys, "orbit", "info", path)
    assert code == 0
    data = json.loads(out)
    assert data["degenerate"] is False
    assert data["skeleton"] == [{}]
    assert data["kind"] == "linear"


def test_determinism(tmp_path, capsys):
    path = write(tmp_path, "ideal.json", IDEAL_BREAK2)
    _, out1 = run(capsys, "orbit", "info", path)
    _, out2 = run(capsys, "orbit", "info", path)
    assert out1 == out2


def test_simples_build_dimension_six(tmp_path, capsys):
    path = write(tmp_path, "ideal.json", IDEAL_STABLE_F2)
    code, out = run(
        capsys, "simples", "build", path, "--which", "0", "--N", "[[1],[1],[],[1]]"
    )
    assert code == 0
    module = json.loads(out)
    assert module["type"] == "module"
    assert sum(module["spaces"].values()) * 2 == 6  # residue degree 2 over GF(2)


def test_module_verify_roundtrip(tmp_path, capsys):
    ideal = write(tmp_path, "ideal.json", IDEAL_STABLE_F2)
    code, out = run(
        capsys, "simples", "build", ideal, "--which", "0", "--N", "[[1],[1],[],[1]]"
    )
    assert code == 0
    module_path = tmp_path / "module.json"
    module_path.write_text(out)
    code, out = run(capsys, "module", "verify", str(module_path))
    assert code == 0
    report = json.loads(out)
    assert report["ok"] is True
    code, out = run(capsys, "module", "simple-check", str(module_path))
    assert code == 0
    assert json.loads(out) == {"kdim": 6, "schema": "weylmod/1", "simple": True}
    code, out = run(capsys, "module", "indec-check", str(module_path))
    assert code == 0
    assert json.loads(out)["indecomposable"] is True


def test_module_json_reparse_equal(tmp_path, capsys):
    from weylmod import jsonio

    ideal = write(tmp_path, "ideal.json", IDEAL_BREAK2)
    code, out = run(capsys, "indecomp", "list", ideal, "--max-string", "2", "--max-poly-deg", "1")
    assert code == 0
    data = json.loads(out)
    rep = jsonio.rep_from_json(data["indecomposables"][4])
    assert jsonio.dumps(jsonio.rep_to_json(rep)) == jsonio.dumps(data["indecomposables"][4])


def test_indecomp_build(tmp_path, capsys):
    ideal = write(tmp_path, "ideal.json", IDEAL_BREAK2)
    code, out = run(capsys, "indecomp", "list", ideal, "--max-string", "2", "--max-poly-deg", "1")
    data = json.loads(out)
    rep_path = tmp_path / "rep.json"
    rep_path.write_text(json.dumps(data["indecomposables"][0]))
    code, out = run(capsys, "indecomp", "build", ideal, "--rep", str(rep_path), "--window", "2")
    assert code == 0
    module = json.loads(out)
    module_path = tmp_path / "module.json"
    module_path.write_text(out)
    code, out = run(capsys, "module", "verify", str(module_path))
    assert json.loads(out)["ok"] is True


def test_oracle_enumerate(capsys):
    code, out = run(
        capsys, "oracle", "enumerate", "--quiver", "q1", "--field", "gf2", "--dims", "1,1"
    )
    assert code == 0
    data = json.loads(out)
    assert data["indecomposable_count"] == 2
    assert len(data["representatives"]) == 2


def test_skeleton_show(tmp_path, capsys):
    path = write(tmp_path, "ideal.json", IDEAL_STABLE_F2)
    code, out = run(capsys, "skeleton", "show", path)
    assert code == 0
    data = json.loads(out)
    assert data["kind"] == "B"
    assert data["tau"] == {"1": "sigma"}
    assert data["generator_map"][0]["steps"] == [["X", 1]]


def test_heisenberg_commands(capsys):
    code, out = run(
        capsys, "heisenberg", "graded-dim", "--degree", "0", "--len", "2", "--bound", "2"
    )
    assert code == 0
    assert json.loads(out)["count"] == 3
    code, out = run(capsys, "heisenberg", "check", "--radius", "1", "--indices", "2")
    assert code == 0
    assert json.loads(out)["ok"] is True


def test_domain_error_exit_code(tmp_path, capsys):
    path = write(tmp_path, "ideal.json", IDEAL_STABLE_F2)
    # (c+1)^2 is not maximal: domain error, exit 1
    code, out = run(
        capsys, "simples", "build", path, "--which", "0", "--N", "[[1],[],[1]]"
    )
    assert code == 1
    assert json.loads(out)["error"]["name"] == "NotMaximal"


def test_schema_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, out = run(capsys, "orbit", "info", str(bad))
    assert code == 2
    assert json.loads(out)["error"]["name"] == "SchemaError"
    missing = tmp_path / "missing.json"
    code, out = run(capsys, "orbit", "info", str(missing))
    assert code == 2


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["orbit"])
    assert exc.value.code == 2


def test_budget_env_override(capsys, monkeypatch):
    monkeypatch.setenv("WEYLMOD_MAX_ENUM", "3")
    code, out = run(
        capsys, "oracle", "enumerate", "--quiver", "q1", "--field", "gf2", "--dims", "1,1"
    )
    assert code == 1
    assert json.loads(out)["error"]["name"] == "EnumerationBudgetExceeded"
    monkeypatch.delenv("WEYLMOD_MAX_ENUM")
    code, _ = run(
        capsys, "oracle", "enumerate", "--quiver", "q1", "--field", "gf2", "--dims", "1,1"
    )
    assert code == 0


def test_seed_flag_accepted(tmp_path, capsys):
    path = write(tmp_path, "ideal.json", IDEAL_NONDEG)
    code, _ = run(capsys, "--seed", "7", "orbit", "info", path)
    assert code == 0


def test_simples_build_char0_region(tmp_path, capsys):
    path = write(tmp_path, "ideal.json", IDEAL_BREAK2)
    code, out = run(capsys, "simples", "list", path)
    assert code == 0
    assert json.loads(out)["count"] == 4
    code, out = run(capsys, "simples", "build", path, "--which", "0", "--window", "2")
    assert code == 0
    module = json.loads(out)
    # the corner simple occupies one quadrant of the 5x5 window
    assert sum(module["spaces"].values()) == 9
    module_path = tmp_path / "module.json"
    module_path.write_text(out)
    code, out = run(capsys, "module", "verify", str(module_path))
    assert json.loads(out)["ok"] is True


def test_simples_list_charp(tmp_path, capsys):
    path = write(tmp_path, "ideal.json", IDEAL_STABLE_F2)
    code, out = run(capsys, "simples", "list", path)
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 1
    entry = data["simples"][0]
    assert entry["kind"] == "family" and entry["N"] == "symbolic"
    assert entry["presentation"]["generators"][0]["twist"] == "sigma"
