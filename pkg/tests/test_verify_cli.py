import json
import math
import subprocess
import sys
from pathlib import Path

import pytest

from cm_eisenstein.verify_cli import (
    REPORT_DIR_ENV,
    ConfigError,
    cmd_check_identity,
    degree_table,
    eisenstein_table,
    main,
    parse_config_text,
)

CONFIGS = Path(__file__).resolve().parent.parent / "configs"


def test_parse_config():
    cfg = parse_config_text("""
        # comment
        base_disc = 5
        delta = -11, -3   # a + b w
        h = 1
        ck = 2
        alphas = 1 3:1 1/2
        y = 1 0.5:2
    """)
    assert cfg.delta == (-11, -3) and cfg.ck == 2
    assert [tuple(map(str, a)) for a in cfg.alphas] == [("1", "0"), ("3", "1"), ("1/2", "0")]
    assert cfg.y_points == ((1.0,), (0.5, 2.0))
    assert cfg.tolerance == 1e-9


@pytest.mark.parametrize("text", [
    "delta = -7\nalphas = 1",
    "base_disc = 1\ndelta = -7",
    "base_disc = 1\ndelta = -7\nalphas = 1\ncolour = red",
    "base_disc = 1\ndelta = -7\nalphas = 1\ntolerance = -1",
    "base_disc = 1\ndelta = -7\nalphas = 1\ny = 0",
    "base_disc = 1\ndelta = -7\nalphas = x",
    "base_disc = 1\nbase_disc = 1\ndelta = -7\nalphas = 1",
])
def test_bad_configs(text):
    with pytest.raises(ConfigError):
        parse_config_text(text)


def test_check_identity_writes_reports(tmp_path):
    cfg = parse_config_text("base_disc = 1\ndelta = -7\nalphas = 3 -2 1\ny = 1")
    report, code = cmd_check_identity(cfg, str(tmp_path))
    assert code == 0
    data = json.loads((tmp_path / "identity_report.json").read_text())
    assert data["schema"] == 1
    rec = data["records"][0]
    assert rec["case_tag"] == "TotallyPositive"
    assert rec["degree_total"] == pytest.approx(math.log(3) / 2, abs=1e-12)
    assert data["summary"]["n_pass"] == data["summary"]["n_checked"] == 3
    assert (tmp_path / "identity_report.csv").read_text().startswith("alpha,y,case_tag")


def test_exit_code_one_when_sign_is_wrong(tmp_path, monkeypatch):
    import cm_eisenstein.verify_cli as vc
    real = vc.rhs_from_b_phi
    monkeypatch.setattr(vc, "rhs_from_b_phi", lambda tower, b, sign=-1: real(tower, b, sign=+1))
    cfg = parse_config_text("base_disc = 1\ndelta = -7\nalphas = 3\ny = 1")
    _, code = cmd_check_identity(cfg, str(tmp_path))
    assert code == 1


def test_exit_code_two_condition_one(tmp_path, capsys):
    out = tmp_path / "reports"
    code = main(["check-identity", "--config", str(CONFIGS / "no_ramification.cfg"), "--out", str(out)])
    assert code == 2
    assert "condition 1" in capsys.readouterr().err
    assert not out.exists()


def test_exit_code_two_bad_config(tmp_path):
    bad = tmp_path / "bad.cfg"
    bad.write_text("base_disc = 1\n")
    assert main(["check-identity", "--config", str(bad), "--out", str(tmp_path)]) == 2
    assert main(["check-identity", "--config", str(tmp_path / "missing.cfg")]) == 2


def test_reports_are_byte_identical(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    cfg = str(CONFIGS / "q_sqrt_m15.cfg")
    assert main(["check-identity", "--config", cfg, "--out", str(a)]) == 0
    assert main(["check-identity", "--config", cfg, "--out", str(b)]) == 0
    for name in ("identity_report.json", "identity_report.csv"):
        assert (a / name).read_bytes() == (b / name).read_bytes()


def test_env_var_report_dir(tmp_path, monkeypatch):
    monkeypatch.setenv(REPORT_DIR_ENV, str(tmp_path / "env"))
    cfg = tmp_path / "c.cfg"
    cfg.write_text("base_disc = 1\ndelta = -11\nalphas = 1 2 3\n")
    assert main(["check-identity", "--config", str(cfg)]) == 0
    assert (tmp_path / "env" / "identity_report.json").exists()


def test_tolerance_flag(tmp_path):
    cfg = tmp_path / "c.cfg"
    cfg.write_text("base_disc = 1\ndelta = -7\nalphas = 3\n")
    main(["check-identity", "--config", str(cfg), "--tolerance", "1e-6", "--out", str(tmp_path)])
    assert json.loads((tmp_path / "identity_report.json").read_text())["tolerance"] == 1e-6


def test_degree_table():
    cfg = parse_config_text("base_disc = 1\ndelta = -7\nalphas = 1 2 3 7\ny = 1")
    rows = [r.split(",") for r in degree_table(cfg).strip().splitlines()]
    assert rows[0][:4] == ["alpha", "y", "case_tag", "total"]
    three = [r for r in rows if r[0] == "3"]
    assert {r[5] for r in three} == {"(3)", "(7)"}
    assert float(three[0][3]) == pytest.approx(math.log(3) / 2, abs=1e-12)


def test_eisenstein_table():
    cfg = parse_config_text("base_disc = 1\ndelta = -15\nalphas = 1 2\ny = 1")
    rows = eisenstein_table(cfg).strip().splitlines()[1:]
    assert len(rows) == 4  # two classes per alpha
    assert all(r.split(",")[4] == "0.000000000000000e+00" for r in rows)


def test_quartic_config(tmp_path):
    assert main(["check-identity", "--config", str(CONFIGS / "quartic_sqrt5_m7.cfg"), "--out", str(tmp_path)]) == 0


def test_module_entry_point_selftest():
    proc = subprocess.run([sys.executable, "-m", "cm_eisenstein", "selftest"],
                          capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0, proc.stdout + proc.stderr
    assert "mutation: flipped epsilon" in proc.stdout
    assert "FAIL" not in proc.stdout
