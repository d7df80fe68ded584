import json

import numpy as np
import pytest

from ndrank import io
from ndrank.cli import main


@pytest.fixture
def abc_file(tmp_path):
    p = tmp_path / "abc.csv"
    p.write_text("f1,f2,f3\n1,3,6\n2,2,9\n5,4,5\n")
    return p


def _rank_column(out):
    return [int(line.split(",")[1]) for line in out.strip().splitlines()[1:]]


def test_rank_ko(abc_file, capsys):
    assert main(["rank", str(abc_file), "--method", "ko"]) == 0
    assert _rank_column(capsys.readouterr().out) == [2, 3, 3]


def test_rank_ar(abc_file, capsys):
    assert main(["rank", str(abc_file), "--method", "ar"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "index,rank,score"
    assert _rank_column(out) == [1, 2, 3]


def test_rank_errors(tmp_path, capsys):
    empty = tmp_path / "e.csv"
    empty.write_text("")
    assert main(["rank", str(empty)]) == 2
    ragged = tmp_path / "r.csv"
    ragged.write_text("1,2\n3,4,5\n")
    assert main(["rank", str(ragged)]) == 2
    assert "line 2" in capsys.readouterr().err


def test_gen_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p in (a, b):
        assert main(["gen", "tsp", "--cities", "30", "--k", "10", "--pc", "0.2", "--seed", "7", "-o", str(p)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_gen_jsp(tmp_path):
    p = tmp_path / "j.json"
    assert main(["gen", "jsp", "--jobs", "30", "--k", "5", "--pc", "50", "--seed", "1", "-o", str(p)]) == 0
    doc = json.loads(p.read_text())
    assert doc["params"] == {"n_jobs": 30, "k": 5, "jsp_pc": 50.0}
    assert len(doc["customer"]) == 30 and set(doc["customer"]) <= {1, 2, 3, 4, 5}


def test_gen_bad_pc(capsys):
    assert main(["gen", "tsp", "--k", "3", "--pc", "1.5", "--seed", "1"]) == 2
    assert "tsp_pc" in capsys.readouterr().err


def test_entropy_study_csv(tmp_path):
    out = tmp_path / "h.csv"
    assert main(["entropy-study", "--k", "5", "8", "--pops", "30", "--popsize", "20", "--seed", "2", "-o", str(out)]) == 0
    lines = [line for line in out.read_text().splitlines() if not line.startswith("#")]
    assert lines[0] == "method,k,bin_lo,bin_hi,count"
    rows = [line.split(",") for line in lines[1:]]
    assert len(rows) == 2 * 2 * 21
    for method in ("favour", "ko"):
        for k in ("5", "8"):
            sel = [r for r in rows if r[0] == method and r[1] == k]
            assert sum(int(r[4]) for r in sel) == 30
            assert sel[0][2:4] == ["0", "0"]


def test_run_writes_outputs(tmp_path):
    inst = tmp_path / "i.json"
    main(["gen", "tsp", "--cities", "12", "--k", "3", "--pc", "0", "--seed", "3", "-o", str(inst)])
    prefix = tmp_path / "out" / "r"
    assert main(["run", "--instance", str(inst), "--method", "KO", "--generations", "15", "-o", str(prefix)]) == 0
    pts = io.read_points(f"{prefix}.points.csv")
    genomes = np.loadtxt(f"{prefix}.genomes.txt", dtype=int, ndmin=2)
    assert len(pts) == len(genomes)
    rec = json.loads((tmp_path / "out" / "r.json").read_text())
    assert rec["config"]["method"] == "KO" and rec["archive_size"] == len(pts)
    loaded = io.read_instance(inst)
    for g, v in zip(genomes, pts):
        assert np.allclose(loaded.evaluate(g), v)


def test_compare_outputs_and_determinism(tmp_path, capsys):
    args = ["compare", "--k", "4", "--pc", "0", "--trials", "3", "--generations", "10", "--methods", "ARF", "RF", "RR"]
    assert main(args + ["--out-dir", str(tmp_path / "a")]) == 0
    assert main(args + ["--out-dir", str(tmp_path / "b")]) == 0
    for name in ("covers.csv", "summary.csv", "table1.csv", "table2.csv", "table1.txt", "table2.txt"):
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()
    summary = [line for line in (tmp_path / "a" / "summary.csv").read_text().splitlines() if not line.startswith("#")]
    assert len(summary) == 1 + 3
    covers = [line for line in (tmp_path / "a" / "covers.csv").read_text().splitlines() if not line.startswith("#")]
    assert len(covers) == 1 + 3 * 3
    assert "ARF vs RF" in capsys.readouterr().out
