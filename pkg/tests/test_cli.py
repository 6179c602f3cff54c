import io
import json
import subprocess
import sys

import pytest

from conftest import k5_instance
from onepmaxcut.bench import LeafBoundError, format_table, run_bench
from onepmaxcut.cli import main
from onepmaxcut.graph import INT64_MAX
from onepmaxcut.instance_io import write_instance


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(map(str, argv)), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def k5_file(tmp_path):
    path = tmp_path / "k5.txt"
    write_instance(k5_instance(), path)
    return path


class TestSolve:
    def test_plain(self, k5_file):
        code, out, _ = run("solve", k5_file)
        assert code == 0
        assert out.splitlines()[0] == "value 6"
        assert out.splitlines()[1].startswith("side ")

    def test_stats(self, k5_file):
        code, out, _ = run("solve", k5_file, "--stats")
        keys = [line.split()[0] for line in out.splitlines()]
        assert code == 0 and keys == ["value", "side", "k", "leaves", "max_depth", "planar_ms", "total_ms"]

    def test_json(self, k5_file):
        code, out, _ = run("solve", k5_file, "--json")
        doc = json.loads(out)
        assert code == 0
        assert list(doc) == sorted(doc) == ["k", "leaves", "max_depth", "ms", "side", "value"]
        assert doc["value"] == 6 and doc["k"] == 1 and doc["side"] == sorted(doc["side"])

    def test_missing_file(self, tmp_path):
        code, _, err = run("solve", tmp_path / "nope.txt")
        assert code == 3 and "I/O" in err

    def test_parse_error(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("p onep 3 1 0\ne 1 1 2\n")
        code, _, err = run("solve", path)
        assert code == 1 and "line 2" in err

    def test_inconsistent_embedding(self, tmp_path):
        path = tmp_path / "k5bare.txt"
        text = "p onep 5 10 0\n" + "".join(f"e {u} {v} 1\n" for u in range(1, 6) for v in range(u + 1, 6))
        path.write_text(text)
        assert run("solve", path)[0] == 2

    def test_overflow(self, tmp_path):
        path = tmp_path / "big.txt"
        path.write_text(f"p onep 3 2 0\ne 1 2 {INT64_MAX}\ne 2 3 {INT64_MAX}\n")
        assert run("solve", path)[0] == 4


class TestValidate:
    def test_ok(self, k5_file):
        assert run("validate", k5_file)[:2] == (0, "ok\n")

    def test_corrupt(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("p onep 4 2 1\ne 1 2 1\ne 2 3 1\nx 1 2 2 3\n")
        assert run("validate", path)[0] == 1

    def test_warning_only(self, tmp_path):
        path = tmp_path / "k7.txt"
        text = "p onep 7 21 0\n" + "".join(f"e {u} {v} 1\n" for u in range(1, 8) for v in range(u + 1, 8))
        path.write_text(text)
        code, out, _ = run("validate", path)
        assert code == 0 and out.startswith("warning:")


class TestOracle:
    def test_k5(self, k5_file):
        code, out, _ = run("oracle", k5_file)
        assert code == 0 and out.splitlines()[0] == "value 6"

    def test_limit(self, k5_file):
        assert run("oracle", k5_file, "--limit", 4)[0] == 4


class TestGen:
    def test_stdout_deterministic(self):
        args = ("gen", "--nodes", 12, "--crossings", 2, "--seed", 5, "--weights=-3:3")
        first, second = run(*args), run(*args)
        assert first[0] == 0 and first[1] == second[1]
        assert first[1].startswith("c gen nodes=12 crossings=2 seed=5 weights=-3:3")

    def test_file_round_trip(self, tmp_path):
        path = tmp_path / "g.txt"
        assert run("gen", "--nodes", 9, "--crossings", 1, "--seed", 3, "-o", path)[0] == 0
        code, out, _ = run("solve", path)
        assert code == 0
        assert run("oracle", path)[1].splitlines()[0] == out.splitlines()[0]

    def test_bad_weights(self):
        assert run("gen", "--nodes", 5, "--crossings", 0, "--seed", 1, "--weights", "3:1")[0] == 1

    def test_impossible(self):
        assert run("gen", "--nodes", 4, "--crossings", 5, "--seed", 1)[0] == 1

    def test_unwritable(self, tmp_path):
        target = tmp_path / "missing" / "g.txt"
        assert run("gen", "--nodes", 5, "--crossings", 0, "--seed", 1, "-o", target)[0] == 3


class TestUsage:
    def test_missing_subcommand(self):
        assert run()[0] == 1

    def test_missing_argument(self):
        code, _, err = run("gen", "--nodes", 4)
        assert code == 1 and "usage" in err

    def test_module_entry_point(self, k5_file):
        proc = subprocess.run(
            [sys.executable, "-m", "onepmaxcut", "solve", str(k5_file), "--json"],
            capture_output=True,
            text=True,
            check=False,
        )
        assert proc.returncode == 0 and json.loads(proc.stdout)["value"] == 6


class TestBench:
    def test_table(self):
        code, out, _ = run("bench", "--nodes", 10, "--kmax", 2, "--seed", 1, "--reps", 3)
        lines = out.splitlines()
        assert code == 0 and lines[0].split() == ["k", "reps", "mean_ms", "mean_leaves", "max_leaves", "3^k"]
        assert [int(line.split()[0]) for line in lines[1:]] == [0, 1, 2]

    def test_rows_respect_bound(self):
        rows = run_bench(12, 3, seed=2, reps=4)
        assert [r.k for r in rows] == [0, 1, 2, 3]
        assert all(r.max_leaves <= r.leaf_bound for r in rows)
        assert rows[0].mean_leaves == 1

    def test_workers_do_not_change_leaves(self):
        serial = run_bench(11, 3, seed=8, reps=3)
        pooled = run_bench(11, 3, seed=8, reps=3, workers=3)
        assert [(r.mean_leaves, r.max_leaves) for r in serial] == [(r.mean_leaves, r.max_leaves) for r in pooled]

    def test_reps_positive(self):
        with pytest.raises(ValueError):
            run_bench(8, 1, seed=0, reps=0)

    def test_format(self):
        assert "3^k" in format_table(run_bench(8, 1, seed=0, reps=1))

    def test_leaf_bound_error_is_assertion(self):
        assert issubclass(LeafBoundError, AssertionError)
