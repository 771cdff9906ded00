"""Command-line surface: outputs, file emission, exit codes."""

import pytest

from gordian.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestInfo:
    def test_knot_word(self, capsys):
        code, out, _ = run(capsys, "info", "2: 1 1 1")
        assert code == 0
        assert out.splitlines() == [
            "strands: 2",
            "length: 3",
            "cycles: (1 2)",
            "components: 1",
            "knot: yes",
            "unknotting_number: 1",
        ]

    def test_link_word(self, capsys):
        code, out, _ = run(capsys, "info", "2: 1 1")
        assert code == 0
        lines = out.splitlines()
        assert "knot: no" in lines
        assert "unknotting_number: -" in lines

    def test_malformed_word(self, capsys):
        code, _, err = run(capsys, "info", "2: 1 x")
        assert code == 2
        assert err.startswith("error:")


class TestTorusAndAlexander:
    def test_torus(self, capsys):
        code, out, _ = run(capsys, "torus", "3", "4")
        assert code == 0
        assert out == "3: 2 1 2 1 2 1 2 1\n"

    def test_torus_rejects_nonpositive(self, capsys):
        code, _, err = run(capsys, "torus", "0", "4")
        assert code == 1
        assert err.startswith("error:")

    def test_alexander(self, capsys):
        code, out, _ = run(capsys, "alexander", "2: 1 1 1")
        assert code == 0
        assert out == "1 - t + t^2\n"


class TestUnknot:
    def test_counts_changes(self, capsys):
        code, out, _ = run(capsys, "unknot", "2: 1 1 1 1 1")
        assert code == 0
        assert out.splitlines()[0] == "crossing_changes: 2"

    def test_trace_file_round_trips_through_verify(self, capsys, tmp_path):
        path = tmp_path / "trefoil.trace"
        code, out, _ = run(capsys, "unknot", "2: 1 1 1", "--trace", str(path))
        assert code == 0
        assert f"trace written: {path}" in out
        code, out, _ = run(capsys, "verify", str(path))
        assert code == 0
        assert out.startswith("trace: valid")

    def test_split_link_blocked(self, capsys):
        code, _, err = run(capsys, "unknot", "3: 1")
        assert code == 1
        assert "free" in err


class TestAdjacency:
    def test_ci_emission(self, capsys):
        code, out, _ = run(capsys, "adjacency", "ci", "2", "1")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "source: torus 3 4"
        assert lines[1] == "target: torus 2 5"
        assert lines[2] == "u_gap: 1"
        assert lines[3] == "crossing_changes: 1"
        assert lines[4] == "verification: strands=match length=match alexander=match"

    def test_no_verify_flag(self, capsys):
        code, out, _ = run(capsys, "adjacency", "t24", "5", "--no-verify")
        assert code == 0
        assert "verification: skipped" in out

    def test_certificate_file_verifies(self, capsys, tmp_path):
        path = tmp_path / "cin21.cert"
        code, out, _ = run(capsys, "adjacency", "cin", "2", "1", "--out", str(path))
        assert code == 0
        assert f"certificate written: {path}" in out
        code, out, _ = run(capsys, "verify", str(path))
        assert code == 0
        assert out == "certificate: valid\n"

    def test_tampered_certificate_detected(self, capsys, tmp_path):
        path = tmp_path / "ci21.cert"
        run(capsys, "adjacency", "ci", "2", "1", "--out", str(path))
        text = path.read_text()
        path.write_text(text.replace("claimed_cc: 1", "claimed_cc: 2"))
        code, out, _ = run(capsys, "verify", str(path))
        assert code == 1
        assert out.startswith("certificate: invalid")
        assert "crossing-changes" in out

    def test_delete_subword(self, capsys):
        code, out, _ = run(
            capsys, "adjacency", "delete-subword", "2: 1 1 1", "2: 1 1"
        )
        assert code == 0
        assert "crossing_changes: 1" in out

    def test_domain_violation(self, capsys):
        code, _, err = run(capsys, "adjacency", "t34", "8")
        assert code == 1
        assert err.startswith("error:")

    def test_strip(self, capsys):
        code, out, _ = run(capsys, "adjacency", "strip", "3", "7")
        assert code == 0
        assert "source: torus 3 7" in out
        assert "crossing_changes: 2" in out


class TestCatalog:
    def test_family_hit_offers_certificate(self, capsys, tmp_path):
        path = tmp_path / "catalog.cert"
        code, out, _ = run(capsys, "catalog", "2", "5", "3", "4", "--out", str(path))
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "verdict: claimed"
        assert lines[1] == "basis: square-plus-one-family"
        assert lines[2] == "certificate: available"
        assert path.exists()
        code, out, _ = run(capsys, "verify", str(path))
        assert code == 0

    def test_inequality_only(self, capsys):
        code, out, _ = run(capsys, "catalog", "2", "5", "3", "7")
        assert code == 0
        assert "verdict: claimed" in out
        assert "basis: parameter-monotonicity" in out
        assert "certificate: none" in out

    def test_not_covered(self, capsys):
        code, out, _ = run(capsys, "catalog", "3", "100", "4", "5")
        assert code == 0
        assert "verdict: not-covered" in out

    def test_link_parameters(self, capsys):
        code, _, err = run(capsys, "catalog", "2", "4", "3", "4")
        assert code == 1
        assert err.startswith("error:")


class TestEnumerate:
    def test_m1_report(self, capsys):
        code, out, _ = run(capsys, "enumerate", "1")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "positive braid knot enumeration"
        assert "classes: 1" in lines
        assert "  representative: 2: 1 1 1" in lines
        assert lines[-1] == "end"

    def test_budget_exhaustion_exit_code(self, capsys):
        code, _, err = run(capsys, "enumerate", "2", "--budget", "100")
        assert code == 3
        assert err.startswith("error:")


class TestSearch:
    def test_finds_path(self, capsys, tmp_path):
        path = tmp_path / "path.trace"
        code, out, _ = run(
            capsys, "search", "3: 2 1 2 1 2 1 2 1", "2: 1 1 1 1 1", "--trace", str(path)
        )
        assert code == 0
        assert "crossing_changes: 1" in out
        code, out, _ = run(capsys, "verify", str(path))
        assert code == 0

    def test_budget_exhaustion(self, capsys):
        code, _, err = run(capsys, "search", "3: 2 1 2 1 2 1 2 1 2 1", "1:", "--nodes", "5")
        assert code == 3
        assert err.startswith("error:")


class TestVerify:
    def test_corrupt_trace_names_step(self, capsys, tmp_path):
        good = tmp_path / "good.trace"
        run(capsys, "unknot", "2: 1 1 1 1 1", "--trace", str(good))
        text = good.read_text()
        lines = text.splitlines()
        # swap the result word of the first step for a wrong one
        for i, line in enumerate(lines):
            if line.startswith("step:"):
                head, _, _tail = line.partition(" -> ")
                lines[i] = head + " -> 2: 1 1 1 1 1 1 1"
                break
        bad = tmp_path / "bad.trace"
        bad.write_text("\n".join(lines) + "\n")
        code, out, _ = run(capsys, "verify", str(bad))
        assert code == 1
        assert out.startswith("trace: invalid at step 0")

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "verify", str(tmp_path / "absent.trace"))
        assert code == 2
        assert err.startswith("error:")


class TestParser:
    def test_no_arguments(self, capsys):
        assert main([]) == 2
        capsys.readouterr()

    def test_unknown_command(self, capsys):
        assert main(["frobnicate"]) == 2
        capsys.readouterr()

    def test_help_exits_zero(self, capsys):
        assert main(["--help"]) == 0
        capsys.readouterr()
