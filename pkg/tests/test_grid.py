import random

import pytest

from knotmosaic.convert import grid_to_mosaic
from knotmosaic.errors import InvalidGridError, MoveError
from knotmosaic.grid import (
    CORNERS,
    GridDiagram,
    check_grid,
    cyclic_permute_cols,
    cyclic_permute_rows,
    destabilize,
    interchange_cols,
    interchange_rows,
    is_torus_knot,
    parse_grid,
    recognize_torus_grid,
    rectangle_grid,
    stabilize,
    torus_grid,
    trace_components,
    unknot_grid,
    validate_grid,
)
from knotmosaic.invariants import fingerprint

from _support import random_grid, random_move

TREFOIL = fingerprint(grid_to_mosaic(torus_grid(2, 3)))


def test_validate_examples():
    assert validate_grid(GridDiagram(1, [1], [1])) == "row 1: X and O share column 1"
    assert validate_grid(torus_grid(2, 3)) is None
    assert validate_grid(GridDiagram(2, [1, 2], [2, 1])) is None


@pytest.mark.parametrize(
    "g, fragment",
    [
        (GridDiagram(3, [1, 1, 2], [2, 3, 3]), "x: column 1 used in rows 1 and 2"),
        (GridDiagram(3, [1, 2, 3], [2, 3, 4]), "o: row 3 has column 4 outside 1..3"),
        (GridDiagram(3, [1, 2], [2, 1]), "x: expected 3 entries"),
        (GridDiagram(0, [], []), "size"),
    ],
)
def test_validate_reports_location(g, fragment):
    assert fragment in validate_grid(g)
    with pytest.raises(InvalidGridError):
        check_grid(g)


def test_trace_components_examples():
    (c,) = trace_components(unknot_grid())
    assert len(c) == 4 and c.is_rectangular
    (t,) = trace_components(torus_grid(2, 3))
    assert len(t) == 10 and not t.is_rectangular
    comps = trace_components(GridDiagram(4, [2, 1, 4, 3], [1, 2, 3, 4]))
    assert [len(c) for c in comps] == [4, 4]
    assert [c.top_row for c in comps] == [1, 3]


def test_trace_components_partition_edges():
    rng = random.Random(7)
    for _ in range(200):
        g = random_grid(rng.randint(2, 9), rng)
        comps = trace_components(g)
        assert sum(len(c) for c in comps) == 2 * g.size
        rows = sorted(r for c in comps for r in c.rows())
        cols = sorted(c_ for c in comps for c_ in c.columns())
        assert rows == cols == list(range(1, g.size + 1))
        for c in comps:
            orient = [e.orientation for e in c.edges]
            assert orient[::2] == ["horizontal"] * (len(c) // 2)
            assert orient[1::2] == ["vertical"] * (len(c) // 2)
            assert c.is_rectangular == (len(c) == 4)
            assert c.edges[0].index == c.top_row == min(c.rows())


def test_cyclic_permutations():
    g = torus_grid(2, 3)
    assert cyclic_permute_rows(g, 0) == g
    assert cyclic_permute_rows(g, 5) == g
    assert cyclic_permute_cols(g, 0) == g
    u = cyclic_permute_cols(GridDiagram(2, [1, 2], [2, 1]), 1)
    assert (u.x, u.o) == ((2, 1), (1, 2))
    # the top row moves down for positive k
    assert cyclic_permute_rows(g, 1).x[1] == g.x[0]
    for k in range(6):
        assert cyclic_permute_rows(cyclic_permute_rows(g, k), 5 - k) == g
        assert cyclic_permute_cols(cyclic_permute_cols(g, k), 5 - k) == g
    assert fingerprint(grid_to_mosaic(cyclic_permute_rows(g, 1))) == TREFOIL
    g34 = torus_grid(3, 4)
    assert fingerprint(grid_to_mosaic(cyclic_permute_cols(g34, 2))) == fingerprint(grid_to_mosaic(g34))


@pytest.mark.parametrize("marker", ["X", "O"])
@pytest.mark.parametrize("corner", CORNERS)
def test_stabilize_variants(marker, corner):
    u = unknot_grid()
    s = stabilize(u, 1, marker, corner)
    assert s.size == 3
    assert fingerprint(grid_to_mosaic(s)) == fingerprint(grid_to_mosaic(u))
    col = (u.x if marker == "X" else u.o)[0]
    assert destabilize(s, 1, col) == u

    g = torus_grid(2, 3)
    for row in range(1, 6):
        t = stabilize(g, row, marker, corner)
        assert t.size == 6
        assert fingerprint(grid_to_mosaic(t)) == TREFOIL
        col = (g.x if marker == "X" else g.o)[row - 1]
        assert destabilize(t, row, col) == g


def test_stabilize_empty_corner():
    s = stabilize(unknot_grid(), 1, "X", "NW")
    # X of row 1 sat in column 1; the NW cell of the new block stays empty
    markers = {(r, c) for r, c, _ in s.markers()}
    assert (1, 1) not in markers
    assert {(1, 2), (2, 1), (2, 2)} <= markers


def test_stabilize_errors():
    with pytest.raises(MoveError):
        stabilize(unknot_grid(), 3, "X", "NW")
    with pytest.raises(MoveError):
        stabilize(unknot_grid(), 1, "Y", "NW")
    with pytest.raises(MoveError):
        stabilize(unknot_grid(), 1, "X", "N")


def test_destabilize_errors():
    with pytest.raises(MoveError):
        destabilize(unknot_grid(), 1, 1)
    with pytest.raises(MoveError):
        destabilize(torus_grid(2, 3), 1, 1)  # block holds two markers
    with pytest.raises(MoveError):
        destabilize(torus_grid(2, 3), 5, 1)


def test_interchange_examples():
    g = GridDiagram(4, [1, 3, 2, 4], [2, 4, 1, 3])
    swapped = interchange_rows(g, 1)
    assert swapped.x[:2] == (3, 1) and swapped.o[:2] == (4, 2)
    with pytest.raises(MoveError, match="interleave"):
        interchange_rows(GridDiagram(4, [1, 2, 4, 3], [3, 4, 2, 1]), 1)
    # shared endpoints are refused
    with pytest.raises(MoveError):
        interchange_rows(torus_grid(2, 3), 1)
    with pytest.raises(MoveError):
        interchange_cols(g, 4)


def test_interchange_preserves_fingerprint():
    rng = random.Random(3)
    done = 0
    while done < 40:
        g = random_grid(rng.randint(4, 7), rng)
        i = rng.randrange(1, g.size)
        for move in (interchange_rows, interchange_cols):
            try:
                h = move(g, i)
            except MoveError:
                continue
            assert fingerprint(grid_to_mosaic(h)) == fingerprint(grid_to_mosaic(g))
            assert move(h, i) == g
            done += 1


def test_torus_grid():
    g = torus_grid(2, 3)
    assert g.size == 5 and g.o == (1, 2, 3, 4, 5) and g.x == (3, 4, 5, 1, 2)
    assert torus_grid(3, 5).size == 8
    for p in range(2, 7):
        for q in range(p + 1, 8):
            comps = trace_components(torus_grid(p, q))
            assert (len(comps) == 1) == is_torus_knot(p, q)
            assert recognize_torus_grid(torus_grid(p, q)) == (p, q)
    assert recognize_torus_grid(unknot_grid()) is None
    for p, q in [(1, 3), (3, 3), (4, 2)]:
        with pytest.raises(InvalidGridError):
            torus_grid(p, q)


def test_rectangle_grid():
    g = rectangle_grid([(1, 3, 1, 3), (2, 4, 2, 4)])
    assert [c.is_rectangular for c in trace_components(g)] == [True, True]
    with pytest.raises(InvalidGridError):
        rectangle_grid([(1, 2, 1, 2), (1, 2, 3, 4)])


def test_json_round_trip():
    g = torus_grid(3, 4)
    text = g.to_json()
    assert text == '{"size": 7, "x": [4, 5, 6, 7, 1, 2, 3], "o": [1, 2, 3, 4, 5, 6, 7]}'
    assert parse_grid(text) == g
    assert GridDiagram.from_json(text) == g


@pytest.mark.parametrize(
    "text, fragment",
    [
        ('{"size": 2, "x": [1, 2]', "line 1"),
        ("[1, 2]", "top level"),
        ('{"size": 2, "x": [1, 2]}', "field 'o': missing"),
        ('{"size": 2, "x": [1, 2], "o": [2, 1], "z": 0}', "field 'z'"),
        ('{"size": "2", "x": [1, 2], "o": [2, 1]}', "field 'size'"),
        ('{"size": 2, "x": [1, true], "o": [2, 1]}', "field 'x'"),
        ('{"size": 2, "x": [1, 1], "o": [2, 1]}', "field x: column 1 used in rows 1 and 2"),
        ('{"size": 2, "x": [1, 2], "o": [1, 2]}', "row 1"),
    ],
)
def test_parse_grid_diagnostics(text, fragment):
    with pytest.raises(InvalidGridError, match=fragment):
        parse_grid(text)


def test_random_moves_keep_validity_and_type():
    rng = random.Random(11)
    g = torus_grid(2, 3)
    for _ in range(60):
        g = random_move(g, rng)
        assert validate_grid(g) is None
        assert fingerprint(grid_to_mosaic(g)) == TREFOIL
