"""Tests for reading graph and grid files."""

import pytest

from domcover.assets.graph_families import cycle, path
from domcover.assets.grids import lattice
from domcover.core.grid_guarding import grid_to_text
from domcover.input.graph_files import graph_to_text, parse_graph_text, read_graph_file
from domcover.input.grid_files import parse_grid_text, read_grid_file
from domcover.utils.classes import Segment
from domcover.utils.errors import CollinearOverlap, DisconnectedUnion, ParseError


###############
# GRAPH FILES #
###############
def test_dense_labels_are_kept():
    g, labels = parse_graph_text("c a path\np 3 2\ne 0 1\ne 2 1\n")
    assert g == path(3)
    assert labels == {0: 0, 1: 1, 2: 2}


def test_sparse_labels_are_remapped():
    g, labels = parse_graph_text("p edge 4 4\ne 10 20\ne 20 30\ne 30 40\ne 40 10\n")
    assert g == cycle(4)
    assert labels == {10: 0, 20: 1, 30: 2, 40: 3}


def test_isolated_vertices_are_kept():
    g, _ = parse_graph_text("p 4 1\ne 0 1\n")
    assert g.n == 4
    assert g.degree(3) == 0


@pytest.mark.parametrize(
    ("text", "line_no"),
    [
        ("p 2 1\np 2 1\ne 0 1\n", 2),
        ("e 0 1\np 2 1\n", 1),
        ("p 2 1\ne 1 1\n", 2),
        ("p 3 2\ne 0 1\ne 1 0\n", 3),
        ("p 2 1\nx 0 1\n", 2),
        ("c only comments\n", 1),
        ("p 3 3\ne 0 1\ne 1 2\n", 1),
        ("p 3 2\ne 5 6\ne 6 7\ne 7 8\n", 1),
        ("p 2 1\ne 0 -1\n", 2),
        ("p two 1\n", 1),
    ],
)
def test_graph_parse_errors(text, line_no):
    with pytest.raises(ParseError) as excinfo:
        parse_graph_text(text)
    assert excinfo.value.line_no == line_no
    assert str(excinfo.value).startswith(f"ERROR @ line {line_no}.")


def test_graph_file_on_disk(write_file):
    path_to_file = write_file("c4.graph", graph_to_text(cycle(4), comment="4-cycle"))
    g, _ = read_graph_file(path_to_file)
    assert g == cycle(4)


##############
# GRID FILES #
##############
def test_grid_lines_and_comments():
    text = "# a plus\n\nV 0.5 0 1\n# crossing\nH 0.5 0 1\n"
    grid, line_numbers = parse_grid_text(text)
    assert line_numbers == [3, 5]
    assert grid.scale == 1
    assert grid.segments == (Segment("V", 5, 0, 10), Segment("H", 5, 0, 10))


def test_grid_text_reads_back(write_file):
    grid, _ = read_grid_file(write_file("lattice.grid", grid_to_text(lattice(2, 3))))
    assert grid == lattice(2, 3)


def test_decimal_grid_reads_back():
    text = "V -0.25 0 1.5\nV 0.75 0 1.5\nH 1 -1 2.125\nH 0.5 -0.25 0.75\n"
    grid, _ = parse_grid_text(text)
    assert grid.scale == 3
    assert grid.segments[0] == Segment("V", -250, 0, 1500)
    assert parse_grid_text(grid_to_text(grid))[0] == grid


def test_long_coordinates_stay_exact():
    big = 10**30
    text = f"V {big + 1} 0 2\nV {big} 0 2\nH 1 {big} {big + 1}\n"
    grid, _ = parse_grid_text(text)
    assert [s.fixed for s in grid.segments] == [big + 1, big, 1]
    assert grid.graph.edges() == [(0, 2), (1, 2)]
    assert parse_grid_text(grid_to_text(grid))[0] == grid

    grid, _ = parse_grid_text("V 0.0000000000000000000000000000001 0 1\nH 0.5 0 1\n")
    assert grid.scale == 31
    assert grid.segments[0].fixed == 1


@pytest.mark.parametrize("line", ["H 0 1", "D 0 0 1", "H 0 0 1 2"])
def test_malformed_grid_lines(line):
    with pytest.raises(ParseError) as excinfo:
        parse_grid_text(f"V 0 0 1\n{line}\n")
    assert excinfo.value.line_no == 2


def test_grid_errors_name_their_lines():
    text = "# overlap\nH 0 0 2\nV 1 -1 1\n\nH 0 1 3\n"
    with pytest.raises(CollinearOverlap) as excinfo:
        parse_grid_text(text)
    assert excinfo.value.segment_ids == (0, 2)
    assert str(excinfo.value).endswith("Lines: [2, 5].")

    with pytest.raises(DisconnectedUnion):
        parse_grid_text("H 0 0 1\nV 3 0 1\n")
