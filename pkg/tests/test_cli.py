"""CLI behaviour: output bytes, exit codes, file handling."""
import json

import pytest

from numproj import format_table, parse_document, table, to_pauli_sum
from numproj.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCoeff:
    def test_value(self, capsys):
        code, out, err = run(capsys, "coeff", "6", "2", "1")
        assert (code, out, err) == (0, "5\n", "")

    def test_domain_error(self, capsys):
        code, out, err = run(capsys, "coeff", "0", "0", "0")
        assert code == 1
        assert out == ""
        assert "error" in err

    def test_bad_integer(self, capsys):
        code, _out, err = run(capsys, "coeff", "six", "0", "0")
        assert code == 1
        assert "error" in err


class TestTable:
    def test_text_matches_library(self, capsys):
        code, out, _ = run(capsys, "table", "6")
        assert code == 0
        assert out == format_table(table(6), "text")

    def test_json_round_trip(self, capsys):
        code, out, _ = run(capsys, "table", "4", "--format", "json")
        assert code == 0
        assert json.loads(out)["entries"][0] == [1, 1, 1, 1, 1]

    def test_repeat_invocations_identical(self, capsys):
        _, first, _ = run(capsys, "table", "7", "--format", "csv")
        _, second, _ = run(capsys, "table", "7", "--format", "csv")
        assert first == second

    def test_invalid_format_flag(self, capsys):
        code, _, err = run(capsys, "table", "3", "--format", "yaml")
        assert code == 1
        assert "error" in err


class TestIdentities:
    def test_pass(self, capsys):
        code, out, _ = run(capsys, "identities", "8")
        assert code == 0
        assert out.count("PASS") == 4


class TestProjector:
    def test_worked_example(self, capsys):
        code, out, _ = run(capsys, "projector", "1", "0")
        assert code == 0
        assert out == "0.5 I\n0.5 Z\n"

    def test_resource_guard_exit_code(self, capsys):
        code, out, err = run(capsys, "projector", "30", "2")
        assert code == 2
        assert out == ""
        assert "error" in err

    def test_json_parses_back(self, capsys):
        code, out, _ = run(capsys, "projector", "3", "1", "--format", "json")
        assert code == 0
        doc = parse_document(out)
        assert len(doc.entries) == 8


class TestProject:
    def test_stdout(self, capsys, tmp_path):
        path = tmp_path / "h.txt"
        path.write_text("0.5 IZ\n-0.25 XX\n")
        code, out, _ = run(
            capsys, "project", "--input", str(path), "--particles", "1"
        )
        assert code == 0
        projected = to_pauli_sum(parse_document(out))
        assert projected.coefficient("XX") == -0.125
        assert projected.coefficient("YY") == -0.125

    def test_annihilation_empty_document(self, capsys, tmp_path):
        path = tmp_path / "h.txt"
        path.write_text("1.0 XII\n")
        code, out, _ = run(
            capsys, "project", "--input", str(path), "--particles", "1"
        )
        assert code == 0
        assert out == "# qubits: 3\n# 0 terms\n"

    def test_output_file(self, capsys, tmp_path):
        src = tmp_path / "h.txt"
        src.write_text("1.0 ZZ\n")
        dst = tmp_path / "out.txt"
        code, out, _ = run(
            capsys,
            "project",
            "--input",
            str(src),
            "--particles",
            "1",
            "--output",
            str(dst),
        )
        assert code == 0
        assert out == ""
        assert "ZZ" in dst.read_text()

    def test_missing_input_file(self, capsys, tmp_path):
        code, _, err = run(
            capsys,
            "project",
            "--input",
            str(tmp_path / "absent.txt"),
            "--particles",
            "1",
        )
        assert code == 1
        assert "error" in err

    def test_parse_error_exit(self, capsys, tmp_path):
        path = tmp_path / "h.txt"
        path.write_text("0.5 QQ\n")
        code, _, err = run(
            capsys, "project", "--input", str(path), "--particles", "1"
        )
        assert code == 1
        assert "line 1" in err

    def test_threads_flag(self, capsys, tmp_path):
        path = tmp_path / "h.txt"
        path.write_text("0.5 IZ\n0.5 ZI\n0.25 XX\n")
        code, serial, _ = run(
            capsys, "project", "--input", str(path), "--particles", "1"
        )
        code2, threaded, _ = run(
            capsys,
            "project",
            "--input",
            str(path),
            "--particles",
            "1",
            "--threads",
            "4",
        )
        assert code == code2 == 0
        assert serial == threaded


class TestPartition:
    def test_json_output(self, capsys, tmp_path):
        path = tmp_path / "h.txt"
        path.write_text("1.0 X\n1.0 Z\n")
        code, out, _ = run(capsys, "partition", "--input", str(path))
        assert code == 0
        data = json.loads(out)
        assert data["clique_count"] == 2
        assert data["relation"] == "general"
        assert data["policy"] == "magnitude"

    def test_flags(self, capsys, tmp_path):
        path = tmp_path / "h.txt"
        path.write_text("1.0 XI\n0.5 IX\n0.25 ZZ\n")
        code, out, _ = run(
            capsys,
            "partition",
            "--input",
            str(path),
            "--relation",
            "qubitwise",
            "--order",
            "lex",
        )
        assert code == 0
        data = json.loads(out)
        assert data["relation"] == "qubitwise"
        assert data["policy"] == "lex"

    def test_repeat_identical(self, capsys, tmp_path):
        path = tmp_path / "h.txt"
        path.write_text("0.5 XY\n0.5 YX\n0.5 ZZ\n-0.25 IZ\n")
        _, first, _ = run(capsys, "partition", "--input", str(path))
        _, second, _ = run(capsys, "partition", "--input", str(path))
        assert first == second


class TestVerify:
    def test_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--max-n", "2")
        assert code == 0
        assert "overall: PASS" in out

    def test_bad_bound(self, capsys):
        code, _, err = run(capsys, "verify", "--max-n", "0")
        assert code == 1
        assert "error" in err


class TestUsage:
    def test_unknown_subcommand(self, capsys):
        code, _, err = run(capsys, "frobnicate")
        assert code == 1
        assert "usage" in err

    def test_missing_required_flag(self, capsys):
        code, _, err = run(capsys, "project", "--particles", "1")
        assert code == 1
        assert "usage" in err

    def test_no_subcommand(self, capsys):
        code, _, err = run(capsys)
        assert code == 1

    def test_help_exits_zero(self, capsys):
        code, out, _ = run(capsys, "--help")
        assert code == 0
        assert "COMMAND" in out
