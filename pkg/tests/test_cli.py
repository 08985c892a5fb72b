import json
from pathlib import Path

import pytest

from corekit.bijection import build_bijection
from corekit.cli import main

FIXTURES = Path(__file__).parent / "fixtures"


def run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def fixture(name):
    return (FIXTURES / name).read_text()


class TestKappa:
    def test_triple_k4_matches_figure(self, capsys):
        rc, out, _ = run(capsys, "kappa", "--k", "4", "--family", "triple")
        assert rc == 0
        assert out == fixture("kappa_triple_k4.txt")

    def test_empty_pair(self, capsys):
        rc, out, _ = run(capsys, "kappa", "--k", "1", "--family", "pair")
        assert rc == 0
        assert out == "(empty)\nsize=0\n"

    def test_json_triple_k5(self, capsys):
        rc, out, _ = run(capsys, "kappa", "--k", "5", "--family", "triple", "--format", "json")
        assert rc == 0
        assert out.strip() == "[16,16,9,9,9,9,4,4,4,4,4,4,1,1,1,1,1,1,1,1]"

    def test_pair_size_line(self, capsys):
        rc, out, _ = run(capsys, "kappa", "--k", "4", "--family", "pair")
        assert rc == 0
        assert out.rstrip().endswith("size=160")

    def test_invalid_k(self, capsys):
        rc, _, err = run(capsys, "kappa", "--k", "0", "--family", "pair")
        assert rc == 2
        assert "k must be >= 1" in err


class TestAbacus:
    def test_k4_golden(self, capsys):
        rc, out, _ = run(capsys, "abacus", "--k", "4")
        assert rc == 0
        assert out == fixture("abacus_k4.txt")

    def test_k5_golden(self, capsys):
        rc, out, _ = run(capsys, "abacus", "--k", "5")
        assert rc == 0
        assert out == fixture("abacus_k5.txt")

    def test_k2_single_row(self, capsys):
        rc, out, _ = run(capsys, "abacus", "--k", "2")
        assert rc == 0
        assert out == "0 [1] [2] 3\n"

    def test_json(self, capsys):
        rc, out, _ = run(capsys, "abacus", "--k", "4", "--format", "json")
        assert rc == 0
        assert json.loads(out) == {"t": 8, "beads": [1, 2, 3, 4, 5, 6, 10, 11, 12, 13, 19, 20]}

    def test_invalid_k(self, capsys):
        rc, _, err = run(capsys, "abacus", "--k", "1")
        assert rc == 2
        assert "k must be >= 2" in err


class TestBijectionCommand:
    def test_labels_k4_golden(self, capsys):
        rc, out, _ = run(capsys, "bijection", "--k", "4", "--mode", "labels")
        assert rc == 0
        assert out == fixture("labels_k4.txt")

    def test_labels_k5_golden(self, capsys):
        rc, out, _ = run(capsys, "bijection", "--k", "5", "--mode", "labels")
        assert rc == 0
        assert out == fixture("labels_k5.txt")

    def test_labels_k2(self, capsys):
        rc, out, _ = run(capsys, "bijection", "--k", "2", "--mode", "labels")
        assert rc == 0
        assert out == ".\no\n"

    def test_unicode_flag(self, capsys):
        rc, out, _ = run(capsys, "bijection", "--k", "2", "--mode", "labels", "--unicode")
        assert rc == 0
        assert out == ".\n•\n"

    def test_trace_k1_empty(self, capsys):
        rc, out, _ = run(capsys, "bijection", "--k", "1", "--mode", "trace")
        assert rc == 0
        assert out.strip() == "[]"

    def test_trace_round_trips(self, capsys):
        rc, out, _ = run(capsys, "bijection", "--k", "3", "--mode", "trace")
        assert rc == 0
        assert json.loads(out) == build_bijection(3).to_json()


class TestVerify:
    def test_theorem3_line(self, capsys):
        rc, out, _ = run(capsys, "verify", "--k-max", "10", "--suites", "theorem3")
        assert rc == 0
        assert out == "theorem3: 10/10 PASS\n"

    def test_zero_kmax_is_usage_error(self, capsys):
        rc, _, err = run(capsys, "verify", "--k-max", "0")
        assert rc == 2
        assert "k-max" in err

    def test_all_suites_pass(self, capsys):
        rc, out, _ = run(capsys, "verify", "--k-max", "4")
        assert rc == 0
        lines = out.strip().splitlines()
        assert len(lines) == 6
        assert all(line.endswith("PASS") for line in lines)

    def test_deterministic_given_seed(self, capsys):
        rc1, out1, _ = run(capsys, "verify", "--k-max", "3", "--suites", "eq1", "--seed", "7")
        rc2, out2, _ = run(capsys, "verify", "--k-max", "3", "--suites", "eq1", "--seed", "7")
        assert (rc1, out1) == (rc2, out2)

    def test_unknown_suite_rejected(self, capsys):
        rc, _, _ = run(capsys, "verify", "--k-max", "3", "--suites", "nonsense")
        assert rc == 2


class TestEnumerate:
    def test_pair_3_5(self, capsys):
        rc, out, _ = run(capsys, "enumerate", "3", "5")
        assert rc == 0
        assert out == "count=7 max_size=8 max_core=(4,2,1^2)\n"

    def test_triple_has_two_maxima(self, capsys):
        rc, out, _ = run(capsys, "enumerate", "3", "4", "5")
        assert rc == 0
        assert out == "count=4 max_size=2 max_cores=(1^2),(2)\n"

    def test_gcd_refusal(self, capsys):
        rc, _, err = run(capsys, "enumerate", "4", "6")
        assert rc == 3
        assert "infinitely many simultaneous cores (gcd=2)" in err

    def test_bad_modulus(self, capsys):
        rc, _, err = run(capsys, "enumerate", "1", "4")
        assert rc == 2
        assert "moduli" in err

    def test_all_lists_cores(self, capsys):
        rc, out, _ = run(capsys, "enumerate", "3", "4", "--all")
        assert rc == 0
        lines = out.strip().splitlines()
        assert lines[0].startswith("count=5")
        assert lines[1:] == ["()", "(1)", "(1^2)", "(2)", "(3,1^2)"]

    def test_json_schema(self, capsys):
        rc, out, _ = run(capsys, "enumerate", "3", "4", "--format", "json")
        assert rc == 0
        assert json.loads(out) == {
            "moduli": [3, 4],
            "count": 5,
            "max_size": 5,
            "cores": [[], [1], [1, 1], [2], [3, 1, 1]],
        }

    def test_bound_ceiling_respected(self, capsys, monkeypatch):
        monkeypatch.setenv("COREKIT_MAX_ENUM_BOUND", "10")
        rc, _, err = run(capsys, "enumerate", "5", "6")
        assert rc == 2
        assert "ceiling" in err


class TestParser:
    def test_help_exits_zero(self, capsys):
        assert run(capsys, "--help")[0] == 0

    def test_missing_command_is_usage_error(self, capsys):
        assert run(capsys)[0] == 2

    def test_byte_identical_reruns(self, capsys):
        first = run(capsys, "bijection", "--k", "5", "--mode", "trace")
        second = run(capsys, "bijection", "--k", "5", "--mode", "trace")
        assert first == second
