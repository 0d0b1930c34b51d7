import subprocess
import sys

import pytest

from vsmp.cli import main
from vsmp.instances import gen_grid, read_graph


def lines_of(capsys):
    out = capsys.readouterr().out
    return dict(line.split(None, 1) for line in out.splitlines() if line.strip())


def test_solve_grid_exact(capsys):
    assert main(["solve", "--instance", "grid 3 3", "--heuristic", "h1", "--runs", "30", "--seed", "0", "--exact"]) == 0
    out = lines_of(capsys)
    assert out["best_vs"] == "3" and out["exact_vs"] == "3" and out["gap"] == "0"
    assert sorted(map(int, out["layout"].split())) == list(range(1, 10))


def test_solve_complete_random(capsys):
    assert main(["solve", "--instance", "complete 5", "--heuristic", "random", "--runs", "1"]) == 0
    assert lines_of(capsys)["best_vs"] == "4"


def test_solve_path_h2(capsys):
    assert main(["solve", "--instance", "path:100", "--heuristic", "h2", "--runs", "1"]) == 0
    assert lines_of(capsys)["best_vs"] == "1"


def test_solve_errors(capsys, tmp_path):
    assert main(["solve", "--instance", "grid 5 5", "--exact", "--exact-limit", "10"]) == 1
    assert "n <= 10" in capsys.readouterr().err
    assert main(["solve", "--instance", str(tmp_path / "missing.txt")]) == 1
    assert "missing.txt" in capsys.readouterr().err
    with pytest.raises(SystemExit) as exc:
        main(["solve", "--instance", "grid 3 3", "--heuristic", "c2"])
    assert exc.value.code == 2


def test_gen_then_solve(tmp_path, capsys):
    out = tmp_path / "g.txt"
    assert main(["gen", "--family", "grid", "3", "4", "--out", str(out)]) == 0
    assert read_graph(str(out)) == gen_grid(3, 4)
    assert main(["gen", "--family", "tree", "20", "3", "--out", str(tmp_path / "t.txt")]) == 0
    assert read_graph(str(tmp_path / "t.txt")).m == 19
    assert main(["gen", "--family", "grid", "3", "--out", str(out)]) == 1


def write_manifest(tmp_path):
    (tmp_path / "hb.mtx").write_text(
        "%%MatrixMarket matrix coordinate pattern symmetric\n5 5 5\n2 1\n3 2\n4 3\n5 4\n5 1\n"
    )
    m = tmp_path / "manifest.txt"
    m.write_text("Grid grid 2 3\nGrid grid 3 3\nTree tree 12 5\nHB hb.mtx\n")
    return m


def test_bench_cli(tmp_path, capsys):
    m = write_manifest(tmp_path)
    out = tmp_path / "out.csv"
    rep = tmp_path / "rep.txt"
    code = main(["bench", "--manifest", str(m), "--heuristics", "h1,h2", "h3", "--runs", "5",
                 "--seed", "3", "--out", str(out), "--report", str(rep)])
    assert code == 0
    rows = out.read_text().splitlines()
    assert rows[0] == "instance_id,class,n,m,heuristic,seed,runs,best_vs,mean_vs,time_ms"
    assert len(rows) == 1 + 4 * 3
    assert "Grid(2)" in rep.read_text()
    assert "Number of best solutions" in capsys.readouterr().out


def test_bench_usage_errors(tmp_path):
    m = write_manifest(tmp_path)
    with pytest.raises(SystemExit) as exc:
        main(["bench", "--manifest", str(m), "--heuristics", ",", "--out", str(tmp_path / "o.csv")])
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        main(["bench", "--manifest", str(m), "--heuristics", "hn1", "--out", str(tmp_path / "o.csv")])
    bad = tmp_path / "bad.txt"
    bad.write_text("Grid grid 3 3\nHB nothere.mtx\n")
    assert main(["bench", "--manifest", str(bad), "--heuristics", "h1", "--runs", "1",
                 "--out", str(tmp_path / "o.csv")]) == 1


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "vsmp", "solve", "--instance", "star 4", "--runs", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "best_vs   1" in proc.stdout
