"""End-to-end tests for the command-line front end."""

import json
from pathlib import Path

import pytest

from virasoro_nonweight.cli import EXIT_INPUT, EXIT_OK, main

FIXTURES = Path(__file__).parent.parent / "fixtures"


@pytest.fixture(autouse=True)
def clean_env(monkeypatch, tmp_path):
    """Keep stray VIRASORO_* variables and .env files out of the run."""
    for name in ("VIRASORO_SEED", "VIRASORO_SAMPLES", "VIRASORO_K_MAX", "VIRASORO_N_MAX"):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.chdir(tmp_path)


class TestVerify:
    """Tests for the verify command."""

    def test_bracket_suite_with_report(self, tmp_path, capsys):
        """Test a passing run that writes the JSON report."""
        out = tmp_path / "out.json"
        code = main(
            [
                "verify",
                "--config",
                str(FIXTURES / "valid.json"),
                "--suite",
                "bracket",
                "--report",
                str(out),
            ]
        )
        assert code == EXIT_OK
        assert "[PASS] bracket" in capsys.readouterr().out
        data = json.loads(out.read_text())
        assert isinstance(data, list)
        assert data[0]["suite"] == "bracket"
        assert data[0]["pass"] is True

    def test_reports_are_deterministic(self, tmp_path):
        """Test that the same config and seed give byte-identical reports."""
        paths = [tmp_path / "first.json", tmp_path / "second.json"]
        for path in paths:
            args = ["verify", "--config", str(FIXTURES / "valid.json"), "--suite", "bracket,ord"]
            assert main([*args, "--seed", "3", "--report", str(path)]) == EXIT_OK
        assert paths[0].read_bytes() == paths[1].read_bytes()

    def test_yaml_config(self, capsys):
        """Test that the suites listed in a YAML config are run."""
        assert main(["verify", "--config", str(FIXTURES / "valid.yaml")]) == EXIT_OK
        assert "bracket" in capsys.readouterr().out

    def test_bad_scalar(self, capsys):
        """Test that a malformed scalar exits with 2 and names the field."""
        code = main(["verify", "--config", str(FIXTURES / "bad_scalar.json")])
        assert code == EXIT_INPUT
        assert "params.mu" in capsys.readouterr().err

    def test_bad_matrices(self, capsys):
        """Test that matrices breaking the bracket exit with 2."""
        code = main(["verify", "--config", str(FIXTURES / "bad_matrices.json")])
        assert code == EXIT_INPUT
        assert "vb: bracket relation" in capsys.readouterr().err

    def test_extra_key(self, capsys):
        """Test that an unknown key exits with 2."""
        code = main(["verify", "--config", str(FIXTURES / "extra_key.json")])
        assert code == EXIT_INPUT
        assert "colour" in capsys.readouterr().err

    def test_missing_config(self, tmp_path, capsys):
        """Test that a missing file exits with 2."""
        code = main(["verify", "--config", str(tmp_path / "absent.json")])
        assert code == EXIT_INPUT
        assert "file not found" in capsys.readouterr().err

    def test_report_into_missing_directory(self, tmp_path, capsys):
        """Test that an unwritable report path exits with 2 instead of a traceback."""
        target = tmp_path / "absent" / "out.json"
        code = main(
            [
                "verify",
                "--config",
                str(FIXTURES / "valid.json"),
                "--suite",
                "ord",
                "--report",
                str(target),
            ]
        )
        assert code == EXIT_INPUT
        assert "cannot write report" in capsys.readouterr().err

    def test_env_override_into_scalar_window(self, tmp_path, monkeypatch, capsys):
        """Test that VIRASORO_K_MAX against a scalar window exits with 2."""
        config = tmp_path / "scalar_window.yaml"
        config.write_text("window: 3\n")
        monkeypatch.setenv("VIRASORO_K_MAX", "2")
        assert main(["verify", "--config", str(config)]) == EXIT_INPUT
        assert "window: must be a mapping" in capsys.readouterr().err

    def test_act_json_float_index(self, capsys):
        """Test that a float index in a JSON element exits with 2."""
        code = main(
            [
                "act",
                "--config",
                str(FIXTURES / "valid.json"),
                "--word",
                "[0]",
                "--element",
                '[{"k": 0, "s": 0, "n": 1.7, "c": "1"}]',
            ]
        )
        assert code == EXIT_INPUT
        assert "must be an integer" in capsys.readouterr().err

    def test_unknown_suite(self, capsys):
        """Test that an unknown suite name exits with 2."""
        code = main(["verify", "--config", str(FIXTURES / "valid.json"), "--suite", "nope"])
        assert code == EXIT_INPUT
        assert "Unknown suite: nope" in capsys.readouterr().err


class TestAct:
    """Tests for the act command."""

    def _act(self, capsys, word, element):
        code = main(
            [
                "act",
                "--config",
                str(FIXTURES / "valid.json"),
                "--word",
                word,
                "--element",
                element,
            ]
        )
        captured = capsys.readouterr()
        return code, captured.out.splitlines(), captured.err

    def test_l0(self, capsys):
        """Test L_0 (v x 1) = v x d."""
        code, lines, _ = self._act(capsys, "[0]", "e_0 d^0 * 1")
        assert code == EXIT_OK
        assert lines[0] == "e_0 d^1 * 1"
        assert json.loads(lines[1]) == [{"k": 0, "s": 0, "n": 1, "c": "1"}]

    def test_central_charge(self, capsys):
        """Test that C acts by zero."""
        code, lines, _ = self._act(capsys, "[C]", "e_0 * 1")
        assert code == EXIT_OK
        assert lines[0] == "0"

    def test_l1(self, capsys):
        """Test L_1 (v x 1) at (mu, lambda, alpha, beta) = (2, 1, 1, 1)."""
        code, lines, _ = self._act(capsys, "[1]", "e_0 * 1")
        assert code == EXIT_OK
        assert lines[0] == "e_0 d^1 * 1 + e_0 * 1 + L-1^1 e_0 * 1"

    def test_json_element(self, capsys):
        """Test that the element may be given as a JSON term list."""
        code, lines, _ = self._act(capsys, "[0]", '[{"k": 0, "s": 0, "n": 0, "c": "1"}]')
        assert code == EXIT_OK
        assert lines[0] == "e_0 d^1 * 1"

    def test_bad_element(self, capsys):
        """Test that an unparseable element exits with 2."""
        code, _, err = self._act(capsys, "[0]", "f_0 * 1")
        assert code == EXIT_INPUT
        assert "cannot parse element" in err

    def test_bad_word(self, capsys):
        """Test that an invalid generator exits with 2."""
        code, _, err = self._act(capsys, "[x]", "e_0 * 1")
        assert code == EXIT_INPUT
        assert "invalid generator" in err


class TestClassify:
    """Tests for the classify command."""

    def test_identical(self, capsys):
        """Test that a module is isomorphic to itself."""
        path = str(FIXTURES / "case_b_first.json")
        assert main(["classify", path, path]) == EXIT_OK
        assert capsys.readouterr().out.splitlines()[0] == "IsomorphicCaseA"

    def test_inverted_mu_partner(self, capsys):
        """Test the (2, 1, 5; -7) and (1/2, 2, 7; -5) pair."""
        code = main(
            [
                "classify",
                str(FIXTURES / "case_b_first.json"),
                str(FIXTURES / "case_b_second.yaml"),
                "--json",
            ]
        )
        assert code == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "IsomorphicCaseB"
        assert json.loads(lines[-1])["kind"] == "IsomorphicCaseB"

    def test_outside_category(self, tmp_path, capsys):
        """Test that alpha = 0 is an input error."""
        degenerate = tmp_path / "alpha0.json"
        degenerate.write_text(json.dumps({"params": {"mu": "2", "alpha": "0"}}))
        code = main(["classify", str(FIXTURES / "valid.json"), str(degenerate)])
        assert code == EXIT_INPUT
        assert capsys.readouterr().err.startswith("error: ")
