"""Tests for the superspace-verify command line."""

import json

import pytest
from unittest.mock import AsyncMock, patch
from superspace_verifier.cli import build_parser, main
from superspace_verifier.report import CheckRecord, VerificationReport


class TestCli:
    """Test cases for argument parsing and exit codes."""

    @pytest.fixture
    def parser(self):
        return build_parser()

    def test_parse_verify(self, parser):
        """Test parsing the verify command with its flags."""
        args = parser.parse_args([
            "verify", "reps", "--example", "q-superspace", "--mode", "graded",
            "--order", "4", "--strict", "--jobs", "2", "--format", "json",
        ])
        assert args.suite == "reps"
        assert args.example == "q-superspace"
        assert args.order == 4
        assert args.strict is True
        assert args.jobs == 2
        assert args.format == "json"

    def test_parse_verify_defaults(self, parser):
        args = parser.parse_args(["verify", "all"])
        assert args.strict is None
        assert args.mode is None
        assert args.format == "text"

    def test_parse_contract_and_derive(self, parser):
        """Test parsing the contraction and star commands."""
        args = parser.parse_args(["contract", "exterior", "--g", "hprime-only"])
        assert (args.target, args.kind) == ("exterior", "hprime-only")

        args = parser.parse_args(["derive", "star", "--g", "full"])
        assert (args.what, args.kind) == ("star", "full")

    def test_parse_rejects_unknown_suite(self, parser):
        with pytest.raises(SystemExit):
            parser.parse_args(["verify", "nonsense"])

    def test_normal_form_command(self, capsys):
        """Test the normal-form command on the packaged presets."""
        assert main(["normal-form", "Aq12", "X*Theta1"]) == 0
        output = json.loads(capsys.readouterr().out)
        assert output["normal_form"] == "q*Theta1*X"

    def test_unknown_preset_exit_code(self, capsys):
        """Test that engine errors exit with status 2."""
        assert main(["normal-form", "Nope", "x"]) == 2
        assert "Error:" in capsys.readouterr().err

    def _report(self, kind: str, verdict: str) -> VerificationReport:
        return VerificationReport(suite="reps", engine_version="0.1.0", records=[
            CheckRecord(check_id="reps.x", claim="c", kind=kind, verdict=verdict),
        ])

    @pytest.mark.parametrize("kind,verdict,strict,code", [
        ("asserted", "pass", [], 0),
        ("asserted", "fail", [], 1),
        ("adjudication", "fail", [], 0),
        ("adjudication", "fail", ["--strict"], 1),
        ("asserted", "indeterminate", [], 1),
    ])
    def test_verify_exit_codes(self, capsys, kind, verdict, strict, code):
        """Test that only gating failures change the exit status."""
        report = self._report(kind, verdict)
        with patch("superspace_verifier.engine.VerificationEngine.run_suite",
                   new=AsyncMock(return_value=report)):
            assert main(["verify", "reps", *strict]) == code
        assert "reps.x" in capsys.readouterr().out

    def test_verify_writes_report(self, tmp_path):
        """Test that --report writes the JSON report with timing."""
        report = self._report("asserted", "pass")
        report.records[0].wall_time = 0.5
        target = tmp_path / "report.json"
        with patch("superspace_verifier.engine.VerificationEngine.run_suite",
                   new=AsyncMock(return_value=report)):
            assert main(["verify", "reps", "--format", "json", "--report", str(target)]) == 0
        written = json.loads(target.read_text())
        assert written["records"][0]["wall_time"] == 0.5

    def test_parse_check_group(self, parser):
        args = parser.parse_args(["verify", "braid", "--matrix", "hh", "--mode", "graded"])
        assert (args.suite, args.matrix, args.mode) == ("braid", "hh", "graded")

    def test_verify_check_group(self, capsys):
        """Test running one check group against the packaged fixtures."""
        assert main(["verify", "braid", "--matrix", "hh", "--mode", "graded"]) == 0
        output = capsys.readouterr().out
        assert "rmatrix.braid.hh.graded" in output
        assert "rmatrix.braid.pq" not in output

    @pytest.mark.parametrize("argv", [
        ["verify", "reps", "--example", "9.9"],
        ["verify", "hopf", "--algebra", "Aq12"],
    ])
    def test_empty_selection_is_a_usage_error(self, capsys, argv):
        assert main(argv) == 2
        assert "Error:" in capsys.readouterr().err
