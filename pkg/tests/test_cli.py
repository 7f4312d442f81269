import json

from blfsig import cli


def run(capsys, *argv):
    code = cli.run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_phi_value(capsys):
    code, out, _ = run(capsys, "phi", "-g", "2", "t5")
    assert code == 0 and out.strip() == "3/5"


def test_phi_json(capsys):
    code, out, _ = run(capsys, "phi", "-g", "2", "t5", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["phi"] == "3/5"


def test_tau_command(capsys):
    code, out, _ = run(capsys, "tau", "-g", "2", "t5", "t5")
    assert code == 0 and out.strip() == "1"


def test_h_command(capsys):
    code, out, _ = run(capsys, "h", "-g", "2", "--cycle", "I", "t5^-4")
    assert code == 0 and out.strip() == "8/5"


def test_sigma_loc_command(capsys):
    code, out, _ = run(capsys, "sigma-loc", "-g", "1", "--cycle", "I")
    assert code == 0 and out.strip() == "-2/3"
    code, out, _ = run(capsys, "sigma-loc", "-g", "3", "--cycle", "II:1")
    assert code == 0 and out.strip() == "1/7"


def test_abelianization_command(capsys):
    code, out, _ = run(capsys, "abelianization", "-g", "2", "--cycle", "II:1")
    assert code == 0 and "Z/12" in out


def test_family_compute(capsys):
    code, out, _ = run(capsys, "family", "mgn", "-g", "1", "-n", "1",
                       "--compute", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["signature"] == -4
    assert doc["euler_characteristic"] == 10
    assert doc["two_paths_agree"] is True
    assert doc["homeomorphism"]["display"] == "#2CP² # 6CP̄²"


def test_family_emit_and_compute_file(capsys, tmp_path):
    code, out, _ = run(capsys, "family", "mgn-tilde", "-g", "2", "-n", "1",
                       "--emit-spec")
    assert code == 0
    path = tmp_path / "spec.json"
    path.write_text(out)
    code, out, _ = run(capsys, "compute", str(path), "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["signature"] == -16
    assert doc["homeomorphism"]["display"] == "E(2) # (S²×S²)"


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "phi", "-g", "2", "t9")
    assert code == 2 and "out of range" in err


def test_context_error_exit_code(capsys):
    code, _, err = run(capsys, "h", "-g", "2", "--cycle", "I", "t4")
    assert code == 1 and "not a generator" in err


def test_invalid_sigma_exit_code(capsys):
    code, _, err = run(capsys, "sigma-loc", "-g", "2", "--cycle", "II:2")
    assert code == 1


def test_usage_error_exit_code(capsys):
    code, _, _ = run(capsys, "family", "mgn")
    assert code == 2
    code, _, _ = run(capsys, "no-such-command")
    assert code == 2


def test_missing_spec_file(capsys):
    code, _, err = run(capsys, "compute", "/nonexistent/path.json")
    assert code == 2


def test_invalid_spec_exits_one(capsys, tmp_path):
    doc = {
        "spec_version": 1,
        "higher_fiber": [{"genus": 2}],
        "lefschetz": [],
        "rounds": [{"component": 0, "cycle": {"type": "I"}, "monodromy": "t4"}],
        "flags": {"spin": False, "simply_connected": False},
    }
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, _, err = run(capsys, "compute", str(path))
    assert code == 1 and "t4" in err


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--samples", "4", "--max-genus", "1",
                       "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["passed"] is True
    assert {c["name"] for c in doc["checks"]} >= {"cocycle identity",
                                                  "cobounding calibration"}


def test_verify_seed_from_env(capsys, monkeypatch):
    monkeypatch.setenv("BLFSIG_SEED", "99")
    code, out, _ = run(capsys, "verify", "--samples", "2", "--max-genus", "1",
                       "--format", "json")
    assert code == 0
    assert json.loads(out)["seed"] == 99
