"""Unit tests for residual reports and logging."""

import logging

import pytest

from pgl_gluing.utils.logging import (
    clear_run_id,
    get_logger,
    get_run_id,
    set_run_id,
    setup_logging,
)
from pgl_gluing.utils.residuals import ResidualLevel, build_report, get_residual_level


class TestResidualLevels:
    """Test suite for residual grading."""

    @pytest.mark.parametrize(
        "residual, level",
        [
            (0.0, ResidualLevel.EXACT),
            (1e-15, ResidualLevel.EXACT),
            (1e-10, ResidualLevel.PASS),
            (1e-7, ResidualLevel.MARGINAL),
            (1e-3, ResidualLevel.FAIL),
        ],
    )
    def test_levels(self, residual, level):
        """Test thresholds at tolerance 1e-9."""
        assert get_residual_level(residual, 1e-9) == level

    def test_worst_row(self):
        """Test the report names the largest residual."""
        report = build_report([1e-12, 1e-4, 1e-10], ["a", "b", "c"], 1e-9)
        assert report.worst_row == "b"
        assert report.max_residual == 1e-4
        assert not report.passed
        assert report.rows == 3

    @pytest.mark.parametrize("bad", [float("nan"), float("inf")])
    def test_non_finite_row_fails(self, bad):
        """Test a NaN or infinite residual after a finite one fails the report."""
        report = build_report([0.0, bad, 1e-12], ["a", "b", "c"], 1e-9)
        assert not report.passed
        assert report.level == ResidualLevel.FAIL
        assert report.worst_row == "b"

    def test_empty_system(self):
        """Test nothing to check passes exactly."""
        report = build_report([], [], 1e-9)
        assert report.passed
        assert report.level == ResidualLevel.EXACT
        assert report.worst_row is None


class TestLogging:
    """Test suite for package logging."""

    def test_run_id(self):
        """Test run IDs are set, read and cleared."""
        assert set_run_id("abc") == "abc"
        assert get_run_id() == "abc"
        clear_run_id()
        assert get_run_id() is None
        assert len(set_run_id()) == 36
        clear_run_id()

    def test_setup_does_not_stack_handlers(self):
        """Test repeated setup keeps one handler."""
        setup_logging("INFO")
        setup_logging("DEBUG")
        package = logging.getLogger("pgl_gluing")
        assert len(package.handlers) == 1
        assert package.level == logging.DEBUG
        setup_logging("WARNING")

    def test_run_id_in_output(self, capsys):
        """Test log lines carry the run ID on stderr."""
        setup_logging("INFO")
        set_run_id("run-42")
        get_logger("pgl_gluing.test").info("hello")
        clear_run_id()
        setup_logging("WARNING")
        err = capsys.readouterr().err
        assert "[run-42]" in err
        assert "hello" in err

    def test_log_file(self, tmp_path):
        """Test a log file receives records."""
        path = tmp_path / "run.log"
        setup_logging("INFO", log_file=str(path))
        get_logger("pgl_gluing.test").info("to file")
        for handler in logging.getLogger("pgl_gluing").handlers:
            handler.flush()
        setup_logging("WARNING")
        assert "to file" in path.read_text()
