# tests/test_cli.py
import json

import pytest

from wknots.alexander import parse_laurent
from wknots.cli import EXIT_FAILED, EXIT_OK, EXIT_USAGE, main

TREFOIL = "O1+ U2+ O3+ U1+ O2+ U3+"


@pytest.fixture
def trefoil_file(tmp_path):
    path = tmp_path / "trefoil.gauss"
    path.write_text(f"# right-handed trefoil\n{TREFOIL}\n", encoding="utf-8")
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


# -------------------------------
# Usage
# -------------------------------


def test_missing_command(capsys):
    assert main([]) == EXIT_USAGE


def test_missing_required_option(capsys):
    assert main(["dims", "--space", "w"]) == EXIT_USAGE


def test_bad_settings_from_environment(monkeypatch, capsys):
    monkeypatch.setenv("WKNOTS_RANK_MODE", "guess")
    assert main(["dims", "--space", "w", "--max-degree", "1"]) == EXIT_USAGE


def test_config_file(tmp_path, capsys):
    cfg = tmp_path / "wknots.env"
    cfg.write_text("WKNOTS_OUTPUT_FORMAT=json\n", encoding="utf-8")
    code, out = run(capsys, "--config", str(cfg), "dims", "--space", "w", "--max-degree", "1")
    assert code == EXIT_OK
    assert json.loads(out)["dims"] == [1, 2]


# -------------------------------
# dims
# -------------------------------


def test_dims_text(capsys):
    code, out = run(capsys, "dims", "--space", "w", "--max-degree", "3")
    assert code == EXIT_OK
    assert out.strip() == "1 2 4 7"


def test_dims_json_with_primitives(capsys):
    code, out = run(capsys, "--format", "json", "dims", "--space", "sw", "--max-degree", "2", "--primitives")
    assert code == EXIT_OK
    row = json.loads(out)
    assert row["space"] == "sw"
    assert row["skeleton"] == "line"
    assert row["dims"] == [1, 1, 2]
    assert len(row["primitives"]) == 2


def test_dims_stop_at_cap(monkeypatch, capsys):
    monkeypatch.setenv("WKNOTS_MAX_DEGREE_W_LINE", "2")
    code, out = run(capsys, "dims", "--space", "w", "--max-degree", "4")
    assert code == EXIT_OK
    assert out.strip() == "1 2 4 [cap reached at degree 3]"


def test_dims_unknown_space(capsys):
    assert main(["dims", "--space", "u", "--max-degree", "1"]) == EXIT_FAILED


# -------------------------------
# alexander / expand
# -------------------------------


def test_alexander(trefoil_file, capsys):
    code, out = run(capsys, "alexander", trefoil_file)
    assert code == EXIT_OK
    assert parse_laurent(out.strip()).normalized() == parse_laurent("X-1+X^-1")


def test_alexander_bad_code(tmp_path, capsys):
    path = tmp_path / "bad.gauss"
    path.write_text("O1+ X2+", encoding="utf-8")
    assert main(["alexander", str(path)]) == EXIT_USAGE


def test_alexander_missing_file(tmp_path, capsys):
    assert main(["alexander", str(tmp_path / "none.gauss")]) == EXIT_USAGE


def test_expand_wheels_json(trefoil_file, capsys):
    code, out = run(capsys, "--format", "json", "expand", trefoil_file, "--degree", "2", "--wheels")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["terms"]["1"] == "1"
    assert data["terms"]["DA"] == "3"


def test_expand_check_alexander(trefoil_file, capsys):
    code, out = run(capsys, "expand", trefoil_file, "--degree", "3", "--check-alexander", "--euler")
    assert code == EXIT_OK
    assert "alexander check: pass" in out


def test_expand_degree_over_cap(trefoil_file, capsys):
    assert main(["expand", trefoil_file, "--degree", "99"]) == EXIT_FAILED


# -------------------------------
# KV
# -------------------------------


def test_kv_solve_and_verify(tmp_path, capsys):
    out_file = tmp_path / "kv.json"
    code, out = run(capsys, "kv-solve", "--degree", "2", "--out", str(out_file))
    assert code == EXIT_OK
    assert out.strip() == "x^2: 1/48"
    assert json.loads(out_file.read_text(encoding="utf-8"))["N"] == 2

    code, out = run(capsys, "kv-verify", str(out_file))
    assert code == EXIT_OK
    assert out.strip().endswith("all pass")


def test_kv_verify_detects_tampering(tmp_path, capsys):
    out_file = tmp_path / "kv.json"
    assert main(["kv-solve", "--degree", "2", "--out", str(out_file)]) == EXIT_OK
    data = json.loads(out_file.read_text(encoding="utf-8"))
    data["c"]["x1 x1"] = "7"
    out_file.write_text(json.dumps(data), encoding="utf-8")
    capsys.readouterr()
    code, out = run(capsys, "kv-verify", str(out_file))
    assert code == EXIT_FAILED
    assert "verification FAILED" in out


def test_kv_verify_rejects_malformed_file(tmp_path, capsys):
    path = tmp_path / "kv.json"
    path.write_text(json.dumps({"N": 2, "D": [{"x2 x1": "1"}, {}]}), encoding="utf-8")
    assert main(["kv-verify", str(path)]) == EXIT_USAGE
    assert main(["kv-verify", str(tmp_path / "missing.json")]) == EXIT_USAGE


@pytest.mark.slow
def test_kv_solve_degree_four_prints_duflo(capsys):
    code, out = run(capsys, "kv-solve", "--degree", "4")
    assert code == EXIT_OK
    assert out.strip().splitlines()[-1] == "x^2: 1/48, x^4: -1/5760"


# -------------------------------
# braid
# -------------------------------


def test_braid_act(capsys):
    code, out = run(capsys, "braid", "act", "--n", "2", "--word", "p1", "--on", "x1")
    assert code == EXIT_OK
    assert out.strip() == "x2"


def test_braid_z_log(capsys):
    code, out = run(capsys, "braid", "z-log", "--n", "2", "--word", "p1v1p1v1", "--degree", "2")
    assert code == EXIT_OK
    assert out.strip().splitlines() == ["2·a12", "perm: 1 2"]


def test_braid_bad_word(capsys):
    assert main(["braid", "z-log", "--n", "2", "--word", "p3", "--degree", "2"]) == EXIT_USAGE


def test_braid_check_relations(capsys):
    code, out = run(capsys, "braid", "check-relations", "--n", "3", "--degree", "3")
    assert code == EXIT_OK
    assert "UC 1: fails" in out
    assert "unexpected" not in out


# -------------------------------
# corpus
# -------------------------------


def test_corpus_verify(capsys):
    code, out = run(capsys, "corpus", "--verify")
    assert code == EXIT_OK
    assert "3_1: 3 crossings" in out
    assert "MISMATCH" not in out


def test_corpus_mismatch(tmp_path, capsys):
    (tmp_path / "t.gauss").write_text(TREFOIL, encoding="utf-8")
    (tmp_path / "expected.yaml").write_text(
        'knots:\n  trefoil:\n    file: t.gauss\n    alexander: "-X+3-X^-1"\n', encoding="utf-8"
    )
    code, out = run(capsys, "corpus", "--dir", str(tmp_path), "--verify")
    assert code == EXIT_FAILED
    assert "trefoil" in out and "MISMATCH" in out


def test_corpus_json(capsys):
    code, out = run(capsys, "--format", "json", "corpus")
    assert code == EXIT_OK
    rows = {r["name"]: r for r in json.loads(out)}
    assert rows["4_1"]["crossings"] == 4
    assert rows["4_1"]["matches_expected"] is True
