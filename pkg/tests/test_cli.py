"""Command line behaviour: formats, budgets, exit codes, determinism."""

import json
import subprocess
import sys
from argparse import Namespace

import pytest

import hooklab.cli as cli
from hooklab.reports import VerdictReport


def run_main(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def verify_args(**overrides):
    base = dict(r=None, n=None, max_size=None, budget="default")
    base.update(overrides)
    return Namespace(**base)


class TestEnumerate:
    def test_counts(self, capsys):
        for family, size, want in [("increasing", 3, 2), ("cayley", 4, 16), ("binary", 5, 42)]:
            code, out, _ = run_main(["enumerate", family, str(size)], capsys)
            assert code == 0
            assert len(out.strip().splitlines()) == want

    def test_json_records_parse(self, capsys):
        code, out, _ = run_main(["enumerate", "increasing", "4", "--json"], capsys)
        assert code == 0
        records = [json.loads(line) for line in out.strip().splitlines()]
        assert len(records) == 6
        assert all(set(rec) == {"labels", "parent"} for rec in records)

    def test_dot_output(self, capsys):
        code, out, _ = run_main(["enumerate", "binary", "2", "--dot"], capsys)
        assert code == 0
        graphs = out.strip().split("\n\n")
        assert len(graphs) == 2
        assert graphs[0].startswith("digraph t0 {")
        assert graphs[1].startswith("digraph t1 {")

    def test_cayley_dot_is_undirected(self, capsys):
        code, out, _ = run_main(["enumerate", "cayley", "3", "--format", "dot"], capsys)
        assert code == 0 and "graph t0" in out and "--" in out and "->" not in out

    def test_format_conflict(self, capsys):
        code, _, err = run_main(["enumerate", "binary", "3", "--json", "--dot"], capsys)
        assert code == 2 and "conflict" in err

    def test_size_floor(self, capsys):
        assert run_main(["enumerate", "increasing", "0"], capsys)[0] == 2
        assert run_main(["enumerate", "binary", "0"], capsys)[0] == 0

    def test_budget_refusal(self, capsys):
        code, _, err = run_main(["enumerate", "cayley", "8"], capsys)
        assert code == 2
        assert "capped at 7" in err and "HOOKLAB_BUDGET_CEILING" in err

    def test_env_lowers_ceiling(self, capsys, monkeypatch):
        monkeypatch.setenv("HOOKLAB_BUDGET_CEILING", "2")
        code, _, err = run_main(["enumerate", "increasing", "3"], capsys)
        assert code == 2 and "capped at 2" in err

    def test_bad_env_value(self, capsys, monkeypatch):
        monkeypatch.setenv("HOOKLAB_BUDGET_CEILING", "lots")
        code, _, err = run_main(["enumerate", "increasing", "3"], capsys)
        assert code == 2 and "must be an integer" in err

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "trees.jsonl"
        code, out, _ = run_main(
            ["enumerate", "increasing", "3", "--out", str(target)], capsys
        )
        assert code == 0 and out == ""
        assert len(target.read_text().strip().splitlines()) == 2

    def test_unwritable_out_file(self, capsys, tmp_path):
        target = tmp_path / "no" / "such" / "dir" / "x.txt"
        code, _, err = run_main(
            ["enumerate", "increasing", "3", "--out", str(target)], capsys
        )
        assert code == 2 and "cannot write" in err


class TestBoundResolution:
    def test_natural_flag_wins_over_budget(self):
        args = verify_args(r=3, budget="5")
        assert cli._verify_bound("theorem1", args) == 3

    def test_budget_integer_applies(self):
        assert cli._verify_bound("theorem1", verify_args(budget="5")) == 5

    def test_default_keyword(self):
        assert cli._verify_bound("theorem1", verify_args()) == 8
        assert cli._verify_bound("cayley", verify_args()) == 6

    def test_check_specific_flags(self):
        args = verify_args(n=4, max_size=5)
        assert cli._verify_bound("binary-hooks", args) == 4
        assert cli._verify_bound("kerov", args) == 5
        assert cli._verify_bound("theorem1", args) == 8

    def test_ceiling_refusal(self):
        with pytest.raises(cli.UsageError):
            cli._verify_bound("cayley", verify_args(r=8))

    def test_env_raises_ceiling(self, monkeypatch):
        monkeypatch.setenv("HOOKLAB_BUDGET_CEILING", "12")
        assert cli._verify_bound("cayley", verify_args(r=12)) == 12

    def test_bad_budget_string(self):
        with pytest.raises(cli.UsageError):
            cli._verify_bound("theorem1", verify_args(budget="soon"))


class TestVerify:
    def test_passing_check_exits_zero(self, capsys):
        code, out, _ = run_main(["verify", "theorem1", "--r", "4"], capsys)
        assert code == 0
        assert out.count("PASS") == 4
        assert "all passed" in out

    def test_failing_check_exits_one(self, capsys, monkeypatch):
        def broken(bound, threads, trace):
            return [
                VerdictReport(
                    check="theorem1",
                    params={"r": 2},
                    equal=False,
                    lhs_terms=1,
                    rhs_terms=1,
                    lhs_hash="a",
                    rhs_hash="b",
                    elapsed_ms=0.0,
                )
            ]

        monkeypatch.setitem(cli.RUNNERS, "theorem1", broken)
        code, out, _ = run_main(["verify", "theorem1"], capsys)
        assert code == 1
        assert "FAIL" in out and "1 FAILED" in out

    def test_unknown_check_is_a_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            cli.main(["verify", "bogus"])
        assert exc.value.code == 2

    def test_threads_must_be_positive(self, capsys):
        code, _, err = run_main(["verify", "theorem1", "--r", "2", "--threads", "0"], capsys)
        assert code == 2 and "threads" in err

    def test_json_report_shape(self, capsys):
        code, out, _ = run_main(["verify", "pq", "--r", "3", "--json"], capsys)
        assert code == 0
        doc = json.loads(out)
        assert doc["command"] == "verify" and doc["pass"] is True
        fields = {"check", "params", "equal", "lhs_terms", "rhs_terms",
                  "lhs_hash", "rhs_hash", "elapsed_ms"}
        for record in doc["checks"]:
            assert fields <= set(record)
        assert {rec["check"] for rec in doc["checks"]} == {
            "pq", "pq/constant-term", "pq/finite-difference"
        }

    def test_matching_sides_share_hashes(self, capsys):
        _, out, _ = run_main(["verify", "theorem1", "--r", "3", "--json"], capsys)
        for record in json.loads(out)["checks"]:
            assert record["lhs_hash"] == record["rhs_hash"]

    def test_trace_attaches_summands(self, capsys):
        _, out, _ = run_main(["verify", "mvl", "--r", "3", "--trace", "--json"], capsys)
        doc = json.loads(out)
        traced = [rec for rec in doc["checks"] if rec["check"] == "mvl"]
        assert traced and all("trace" in rec for rec in traced)
        entry = traced[-1]["trace"][0]
        assert {"blocks", "terms", "text"} <= set(entry)

    def test_no_trace_key_without_flag(self, capsys):
        _, out, _ = run_main(["verify", "mvl", "--r", "3", "--json"], capsys)
        doc = json.loads(out)
        assert all("trace" not in rec for rec in doc["checks"] if rec["check"] == "mvl")

    def test_kerov_table_layout(self, capsys):
        code, out, _ = run_main(["verify", "kerov", "--max-size", "3"], capsys)
        assert code == 0
        table = out.split("\n\n")[0].splitlines()
        assert table[0].startswith("mu")
        rows = table[2:]
        assert len(rows) == 6  # partitions of 1, 2 and 3
        assert any(row.startswith("2,1") for row in rows)
        assert all(row.endswith("yes") for row in rows)

    def test_all_runs_every_family_cheaply(self, capsys):
        code, out, _ = run_main(["verify", "all", "--budget", "2"], capsys)
        assert code == 0
        for name in cli.CHECK_ORDER:
            assert name in out

    def test_json_output_is_deterministic(self, capsys):
        runs = []
        for _ in range(2):
            _, out, _ = run_main(["verify", "postnikov", "--r", "4", "--json"], capsys)
            doc = json.loads(out)
            for record in doc["checks"]:
                record.pop("elapsed_ms")
            runs.append(json.dumps(doc, sort_keys=True))
        assert runs[0] == runs[1]


class TestConsoleScript:
    def test_entry_point_is_wired(self):
        out = subprocess.run(
            [sys.executable, "-m", "hooklab.cli", "enumerate", "increasing", "2"],
            capture_output=True,
            text=True,
        )
        assert out.returncode == 0
        assert json.loads(out.stdout)["labels"] == [1, 2]
