# -*- coding: utf-8 -*-
"""Unit tests for the command-line surface."""
import json
from io import StringIO
from unittest.mock import patch

import pytest

from twinv.cli import EXIT_FAILED, EXIT_OK, EXIT_USAGE, render_text, run
from twinv.core.errors import InvariantViolation, NotDivisibleError
from twinv.services.reports import InvolutionList, VerifyReport


@pytest.fixture
def streams():
    """(stdout, stderr) buffers for run()."""
    return StringIO(), StringIO()


def run_json(argv, streams):
    out, err = streams
    code = run(argv, out, err)
    return code, json.loads(out.getvalue()) if out.getvalue() else None


def failed_report(n: int = 3) -> VerifyReport:
    return VerifyReport(
        n=n, theta_well_defined=True, homomorphism_ok=True, case3_ok=False,
        dim_image=4, involution_count=4, eta_rank=4, injective=True,
        conjecture_certified=False, prime=101, point=7,
        counterexample="case-3 identity fails at a=1", elapsed_ms=1,
    )


class TestCommands:
    """Each subcommand on a small rank."""

    def test_involutions_json(self, streams):
        code, data = run_json(["involutions", "--n", "3"], streams)
        assert code == EXIT_OK
        assert data["count"] == 4
        assert [e["involution"] for e in data["involutions"]] == ["1,2,3", "1,3,2", "2,1,3", "3,2,1"]
        assert data["involutions"][-1]["rho"] == 2

    def test_json_matches_report_schema(self, streams):
        out, err = streams
        run(["involutions", "--n", "4"], out, err)
        report = InvolutionList.model_validate_json(out.getvalue())
        assert report.count == 10
        assert run(["involutions", "--n", "4"], StringIO(), StringIO()) == EXIT_OK

    def test_involutions_text(self, streams):
        out, err = streams
        assert run(["involutions", "--n", "3", "--format", "text"], out, err) == EXIT_OK
        assert out.getvalue().splitlines()[-1] == "4 involutions"

    def test_rho_text(self, streams):
        out, err = streams
        assert run(["rho", "--n", "3", "--w", "3,2,1", "--format", "text"], out, err) == EXIT_OK
        assert out.getvalue() == "2\n"

    def test_expressions(self, streams):
        code, data = run_json(["expressions", "--n", "3", "--w", "3,2,1"], streams)
        assert code == EXIT_OK
        assert data["expressions"] == ["1,2", "2,1"]

    def test_braid_graph_dot(self, streams):
        out, err = streams
        assert run(["braid-graph", "--n", "3", "--w", "3,2,1", "--dot"], out, err) == EXIT_OK
        assert out.getvalue().startswith('graph "3,2,1" {')

    def test_braid_graph_json(self, streams):
        code, data = run_json(["braid-graph", "--n", "3", "--w", "3,2,1"], streams)
        assert code == EXIT_OK
        assert data["connected"] and data["diameter"] == 1

    def test_verify_braid(self, streams):
        code, data = run_json(["verify-braid", "--n", "4", "--jobs", "1"], streams)
        assert code == EXIT_OK
        assert data["all_connected"]

    def test_psigma_text(self, streams):
        out, err = streams
        assert run(["psigma", "--n", "2", "--format", "text"], out, err) == EXIT_OK
        lines = out.getvalue().splitlines()
        assert len(lines) == 3
        assert all(line.endswith("1") for line in lines)

    def test_theta(self, streams):
        code, data = run_json(["theta", "--n", "3", "--word", "1"], streams)
        assert code == EXIT_OK
        assert data["denominator_power"] == 1
        assert data["steps"][0]["kind"] == "mul-t-minus-u-div-u-plus-1"

    def test_verify(self, streams):
        code, data = run_json(["verify", "--n", "2", "--seed", "1729"], streams)
        assert code == EXIT_OK
        assert data["conjecture_certified"]
        assert data["dim_image"] == 2

    def test_rsk(self, streams):
        code, data = run_json(["rsk", "--n", "3", "--w", "2,1,3"], streams)
        assert code == EXIT_OK
        assert data["identity"] == {"lhs": 4, "rhs": 4, "equal": True}
        assert data["pairs"][0]["p"] == data["pairs"][0]["q"] == [[1, 3], [2]]


class TestExitCodes:
    """0 success, 1 a failed verification, 2 usage."""

    def test_missing_rank(self, streams):
        out, err = streams
        assert run(["involutions"], out, err) == EXIT_USAGE
        assert err.getvalue() == "error: twinv involutions: the following arguments are required: --n\n"

    def test_missing_command(self, streams):
        out, err = streams
        assert run([], out, err) == EXIT_USAGE
        assert err.getvalue().startswith("error: twinv:")

    def test_rank_not_an_integer(self, streams):
        out, err = streams
        assert run(["verify", "--n", "three"], out, err) == EXIT_USAGE
        assert "invalid int value: 'three'" in err.getvalue()
        assert out.getvalue() == ""

    def test_dot_outside_braid_graph(self, streams):
        out, err = streams
        assert run(["involutions", "--n", "3", "--format", "dot"], out, err) == EXIT_USAGE
        assert "braid-graph" in err.getvalue()

    def test_not_an_involution(self, streams):
        out, err = streams
        assert run(["rho", "--n", "3", "--w", "2,3,1"], out, err) == EXIT_USAGE
        assert err.getvalue().startswith("error:")

    def test_word_not_reduced(self, streams):
        out, err = streams
        assert run(["theta", "--n", "3", "--word", "1,1"], out, err) == EXIT_USAGE

    def test_rank_above_cap(self, streams):
        out, err = streams
        assert run(["verify", "--n", "9"], out, err) == EXIT_USAGE
        assert "cap" in err.getvalue()

    def test_failed_verification(self, streams):
        out, err = streams
        with patch("twinv.services.queries.etamap.verify_conjecture", return_value=failed_report()):
            assert run(["verify", "--n", "3"], out, err) == EXIT_FAILED
        assert json.loads(out.getvalue())["counterexample"] == "case-3 identity fails at a=1"

    def test_remainder_in_exact_division(self, streams):
        out, err = streams
        with patch("twinv.services.queries.etamap.verify_conjecture",
                   side_effect=NotDivisibleError("u + 1 does not divide u")):
            assert run(["verify", "--n", "3"], out, err) == EXIT_FAILED
        assert err.getvalue() == "error: NotDivisibleError: u + 1 does not divide u\n"

    def test_zero_division(self, streams):
        out, err = streams
        with patch("twinv.cli.queries.theta_report", side_effect=ZeroDivisionError("inverse of 0 mod 101")):
            assert run(["theta", "--n", "3", "--word", "1"], out, err) == EXIT_FAILED
        assert "ZeroDivisionError" in err.getvalue()

    def test_invariant_violation(self, streams):
        out, err = streams
        with patch("twinv.services.queries.braidmoves.verify_connectivity",
                   side_effect=InvariantViolation("move left the class")):
            assert run(["braid-graph", "--n", "3", "--w", "3,2,1"], out, err) == EXIT_FAILED
        assert "move left the class" in err.getvalue()


class TestRenderText:
    """Colors only on request."""

    def test_plain(self):
        text = render_text(failed_report())
        assert "FAILED" in text
        assert "\033[" not in text
        assert "counterexample: case-3 identity fails at a=1" in text

    def test_colored(self):
        assert "\033[31mFAILED\033[0m" in render_text(failed_report(), color=True)

    def test_no_color_for_non_tty(self, streams):
        out, err = streams
        run(["verify-braid", "--n", "3", "--format", "text"], out, err)
        assert "\033[" not in out.getvalue()
