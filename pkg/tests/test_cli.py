import json

import pytest

from zerokit.cli import EXIT_FAIL, EXIT_MISSING, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestConstants:
    def test_derive_default_passes(self, capsys):
        code, out, _ = run(capsys, "constants", "derive")
        assert code == EXIT_OK
        assert "A_lower" in out and "FAIL" not in out

    def test_derive_off_reference_fails(self, capsys):
        code, out, _ = run(capsys, "constants", "derive", "--alpha", "0.5")
        assert code == EXIT_FAIL
        assert "FAIL" in out
        assert "k_hi_coeff" in out

    def test_derive_json_roundtrip(self, capsys):
        code, out, _ = run(capsys, "constants", "derive", "--json")
        assert code == EXIT_OK
        rows = json.loads(out)
        assert {r["name"] for r in rows} >= {"A_lower", "k_hi_coeff", "y_coeff"}
        again = json.loads(json.dumps(rows))
        assert again == rows

    def test_optimize(self, capsys):
        code, out, _ = run(capsys, "constants", "optimize-alpha", "--json")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert 0.13 <= payload["argmin"] <= 0.17


class TestBounds:
    def test_density_near_one(self, capsys):
        code, out, _ = run(
            capsys, "bounds", "density", "--sigma", "0.999", "--nk", "1", "--dk", "1", "--q", "3", "--t", "1", "--json"
        )
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["exponent"] == 74.0
        assert payload["bound"] == pytest.approx(3.0**0.074)
        assert "heuristic" in payload["note"]

    def test_repulsion(self, capsys):
        code, out, _ = run(
            capsys,
            "bounds",
            "repulsion",
            "--kind",
            "quadratic",
            "--beta1",
            "0.999999",
            "--nq",
            "5",
            "--t",
            "1",
            "--c",
            "1",
            "--json",
        )
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["bound"] == pytest.approx(0.95168, abs=1e-5)
        assert payload["vacuous"] is False

    def test_repulsion_vacuous(self, capsys):
        code, out, _ = run(
            capsys, "bounds", "repulsion", "--kind", "trivial", "--beta1", "0.1", "--nq", "5", "--c", "1", "--json"
        )
        payload = json.loads(out)
        assert payload["vacuous"] is True and payload["bound"] == 1.0

    def test_usage_error_on_bad_parameter(self, capsys):
        code, _, err = run(capsys, "bounds", "density", "--sigma", "0.2", "--json")
        assert code == EXIT_USAGE
        assert "error" in err


class TestZerosAndVerify:
    def test_scan_and_rescan(self, capsys, tmp_path):
        code, out, _ = run(capsys, "zeros", "scan", "--q", "4", "--height", "10", "--cache-dir", str(tmp_path))
        assert code == EXIT_OK
        assert "q4.e1: 2 zeros" in out
        code, out, _ = run(capsys, "zeros", "scan", "--q", "4", "--height", "10", "--cache-dir", str(tmp_path))
        assert code == EXIT_OK
        assert "cached, skipped" in out

    def test_scan_zeta_first_window(self, capsys, tmp_path):
        code, out, _ = run(capsys, "zeros", "scan", "--q", "1", "--height", "15", "--cache-dir", str(tmp_path))
        assert code == EXIT_OK
        assert "q1.e-: 2 zeros" in out  # one conjugate pair

    def test_scan_modulus_range(self, capsys, tmp_path):
        code, out, _ = run(
            capsys, "zeros", "scan", "--qmin", "3", "--qmax", "5", "--height", "8", "--cache-dir", str(tmp_path)
        )
        assert code == EXIT_OK
        assert (tmp_path / "zeros_q0003.csv").exists()
        assert (tmp_path / "zeros_q0005.csv").exists()

    def test_guard_refuses_large_modulus(self, capsys, tmp_path):
        with pytest.raises(SystemExit):
            main(["zeros", "scan", "--q", "500", "--height", "5", "--cache-dir", str(tmp_path)])

    def test_verify_missing_data_exit_code(self, capsys, tmp_path):
        code, _, err = run(capsys, "verify", "--suite", "detector", "--qmax", "3", "--height", "10", "--cache-dir", str(tmp_path))
        assert code == EXIT_MISSING
        assert "scan" in err

    def test_verify_detector_with_scan(self, capsys, tmp_path):
        code, out, _ = run(
            capsys,
            "verify",
            "--suite",
            "detector",
            "--qmax",
            "1",
            "--height",
            "10",
            "--scan-missing",
            "--cache-dir",
            str(tmp_path),
            "--json",
        )
        assert code == EXIT_OK
        rows = json.loads(out)
        assert rows and all(r["pass"] for r in rows)
        assert all(set(r) == {"name", "lhs", "rhs", "direction", "margin", "pass", "context"} for r in rows)

    def test_env_cache_dir(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("EXPLICIT_ZERO_CACHE", str(tmp_path))
        code, out, _ = run(capsys, "zeros", "scan", "--q", "4", "--height", "8")
        assert code == EXIT_OK
        assert (tmp_path / "zeros_q0004.csv").exists()

    def test_config_file_provides_cache_dir(self, capsys, tmp_path, monkeypatch):
        monkeypatch.delenv("EXPLICIT_ZERO_CACHE", raising=False)
        cfg = tmp_path / "run.cfg"
        cfg.write_text(f"cache_dir = {tmp_path / 'from_config'}\n")
        code, out, _ = run(capsys, "--config", str(cfg), "zeros", "scan", "--q", "4", "--height", "8")
        assert code == EXIT_OK
        assert (tmp_path / "from_config" / "zeros_q0004.csv").exists()

    def test_flag_overrides_config(self, capsys, tmp_path, monkeypatch):
        monkeypatch.delenv("EXPLICIT_ZERO_CACHE", raising=False)
        cfg = tmp_path / "run.cfg"
        cfg.write_text(f"cache_dir = {tmp_path / 'from_config'}\n")
        code, _, _ = run(
            capsys, "--config", str(cfg), "zeros", "scan", "--q", "4", "--height", "8", "--cache-dir", str(tmp_path / "flag")
        )
        assert code == EXIT_OK
        assert (tmp_path / "flag" / "zeros_q0004.csv").exists()
        assert not (tmp_path / "from_config").exists()

    def test_tolerance_override_from_config(self, capsys, tmp_path, monkeypatch):
        monkeypatch.delenv("EXPLICIT_ZERO_CACHE", raising=False)
        cfg = tmp_path / "run.cfg"
        # an absurdly tight explicit-formula tolerance must flip the verdict
        cfg.write_text("tolerance.explicit_formula = 1e-9\n")
        code, out, _ = run(
            capsys,
            "--config",
            str(cfg),
            "verify",
            "--suite",
            "explicit_formula",
            "--qmax",
            "1",
            "--height",
            "10",
            "--scan-missing",
            "--cache-dir",
            str(tmp_path / "cache"),
        )
        assert code == EXIT_FAIL
        assert "FAIL" in out
