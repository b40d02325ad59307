"""Tests for the command-line runner: one JSON object per input, exit code 2 on bad input."""

import json

import pandas as pd
import pytest

from domcover.assets.graph_families import complete, cycle, path, star
from domcover.assets.grids import hash_shape
from domcover.core.grid_guarding import grid_to_text
from domcover.input.graph_files import graph_to_text
from domcover.run import run
from domcover.utils import read_write
from domcover.utils.read_write import HEADER_VERDICT_STATS


###########
# HELPERS #
###########
def reports(capsys) -> list[dict]:
    """Every JSON line printed to stdout since the last call."""
    return [json.loads(line) for line in capsys.readouterr().out.splitlines() if line]


#############
# RECOGNIZE #
#############
def test_recognize_member(write_file, capsys):
    path_to_file = write_file("c4.graph", graph_to_text(cycle(4)))
    assert run(["recognize", path_to_file, "--class", "B"]) == 0
    (report,) = reports(capsys)
    assert report["member"] is True
    assert report["class"] == "B"
    assert report["certificate"] == {"kind": "gamma-set", "vertices": [0, 2]}
    assert report["labels"] == {"0": 0, "1": 1, "2": 2, "3": 3}


def test_recognize_non_member(write_file, capsys):
    path_to_file = write_file("p6.graph", graph_to_text(path(6)))
    assert run(["recognize", path_to_file, "--class", "Cgb"]) == 0
    (report,) = reports(capsys)
    assert report["member"] is False
    assert report["certificate"]["condition"] == "support-sides"
    assert report["certificate"]["vertices"] == [1, 4]


def test_recognize_reports_file_labels(write_file, capsys):
    text = "p 4 4\ne 10 20\ne 20 30\ne 30 40\ne 40 10\n"
    assert run(["recognize", write_file("c4.graph", text), "--class", "Cgb"]) == 0
    (report,) = reports(capsys)
    assert report["certificate"]["vertices"] == [10, 30]
    assert report["labels"] == {"10": 0, "20": 1, "30": 2, "40": 3}


def test_batch_keeps_going_after_bad_input(write_file, capsys):
    good = write_file("k2.graph", graph_to_text(path(2)))
    bad = write_file("bad.graph", "p 2 1\ne 0 0\n")
    assert run(["recognize", bad, good, "--class", "B"]) == 2
    captured = capsys.readouterr()
    assert len(captured.out.splitlines()) == 1
    assert "ERROR @ line 2." in captured.err


def test_missing_file(capsys):
    assert run(["recognize", "no/such.graph", "--class", "B"]) == 2


def test_parallel_batch_keeps_input_order(write_file, capsys):
    graphs = (cycle(4), path(6), star(3), path(3))
    paths = [write_file(f"g{i}.graph", graph_to_text(g)) for i, g in enumerate(graphs)]
    assert run(["recognize", *paths, "--class", "B", "--jobs", "2"]) == 0
    batch = reports(capsys)
    assert [r["input"] for r in batch] == paths
    assert [r["member"] for r in batch] == [True, False, True, True]


def test_log_stats_appends_verdict_rows(write_file, tmp_path, monkeypatch, capsys):
    monkeypatch.setattr(read_write, "STATS_DIR", tmp_path / "data")
    paths = [
        write_file("c4.graph", graph_to_text(cycle(4))),
        write_file("p6.graph", graph_to_text(path(6))),
    ]
    assert run(["recognize", *paths, "--class", "B", "--log_stats"]) == 0
    assert run(["recognize", paths[0], "--class", "B", "--log_stats"]) == 0

    rows = pd.read_csv(tmp_path / "data" / "verdicts.csv", sep=";")
    assert list(rows.columns) == HEADER_VERDICT_STATS
    assert rows["input"].tolist() == [*paths, paths[0]]
    assert rows["member"].tolist() == [True, False, True]
    assert rows["n"].tolist() == [4, 6, 4]
    assert rows["unique_run_id"].nunique() == 2


##########
# ORACLE #
##########
@pytest.mark.parametrize(
    ("g", "values"), [(path(2), (1, 1, 1)), (cycle(4), (2, 2, 2)), (complete(3), (1, 2, 1))]
)
def test_oracle_values(g, values, write_file, capsys):
    assert run(["oracle", write_file("g.graph", graph_to_text(g))]) == 0
    (report,) = reports(capsys)
    assert (report["gamma"]["value"], report["beta"]["value"], report["alpha"]["value"]) == values


def test_oracle_size_cap(write_file, capsys):
    assert run(["oracle", write_file("p30.graph", graph_to_text(path(30)))]) == 2
    assert run(["oracle", write_file("p30.graph", graph_to_text(path(30))), "--cap", "30"]) == 0


########
# TREE #
########
def test_tree_gen_is_deterministic(capsys):
    assert run(["tree", "gen", "--steps", "5", "--seed", "7"]) == 0
    first = capsys.readouterr().out
    assert run(["tree", "gen", "--steps", "5", "--seed", "7"]) == 0
    assert capsys.readouterr().out == first

    report = json.loads(first)
    assert report["member"] is True
    assert len(report["details"]["script"]["ops"]) == 5


def test_tree_gen_writes_files(tmp_path, capsys):
    prefix = str(tmp_path / "tree")
    assert run(["tree", "gen", "--steps", "4", "--seed", "1", "--out", prefix]) == 0
    assert (tmp_path / "tree.graph").read_text().startswith("c seed 1, 4 steps\n")
    assert len((tmp_path / "tree.script").read_text().splitlines()) == 4


def test_tree_check_and_deconstruct(write_file, capsys):
    p7 = write_file("p7.graph", graph_to_text(path(7)))
    p6 = write_file("p6.graph", graph_to_text(path(6)))
    assert run(["tree", "check", p7]) == 0
    assert run(["tree", "deconstruct", p7, p6]) == 0
    check, member, non_member = reports(capsys)
    assert check["member"] is True
    assert member["details"]["script"]["base"] == [1, 2]
    assert non_member["member"] is False
    assert non_member["details"] == {"gamma": 2, "size_a": 3}


def test_tree_rejects_cycles(write_file, capsys):
    assert run(["tree", "check", write_file("c4.graph", graph_to_text(cycle(4)))]) == 2


########
# GRID #
########
def test_grid_member_with_oracle(write_file, capsys):
    path_to_file = write_file("hash.grid", grid_to_text(hash_shape()))
    assert run(["grid", path_to_file, "--oracle"]) == 0
    (report,) = reports(capsys)
    assert report["member"] is True
    assert report["details"]["patrolling"]["value"] == 2
    assert report["details"]["sweep"]["queries"] == 2
    assert report["details"]["line_numbers"] == [1, 2, 3, 4]


def test_grid_collinear_overlap(write_file, capsys):
    path_to_file = write_file("bad.grid", "H 0 0 2\nV 1 -1 1\nH 0 1 3\n")
    assert run(["grid", path_to_file]) == 2
    assert "Lines: [1, 3]" in capsys.readouterr().err


#########
# BENCH #
#########
def test_bench(tmp_path, capsys):
    png = tmp_path / "scaling.png"
    assert run(["bench", "--sizes", "16", "64", "--plot", str(png)]) == 0
    (report,) = reports(capsys)
    assert [row["pair_checks"] for row in report["rows"]] == [14, 300]
    assert all(row["member"] for row in report["rows"])
    assert png.exists()


def test_bench_too_small(capsys):
    assert run(["bench", "--sizes", "8"]) == 2


def test_unknown_class_is_a_usage_error():
    with pytest.raises(SystemExit):
        run(["recognize", "x.graph", "--class", "Z"])
