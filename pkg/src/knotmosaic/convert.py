"""Grid diagram -> mosaic conversion and mosaic -> planar diagram tracing."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .errors import InvalidMosaicError
from .grid import GridDiagram, check_grid
from .mosaic import (
    HORIZONTAL_OVER,
    OPPOSITE,
    PORTS,
    STEP,
    STRANDS,
    VERTICAL_OVER,
    Mosaic,
    N,
    S,
    E,
    W,
    check_mosaic,
    tile_for,
)


def grid_to_mosaic(g: GridDiagram) -> Mosaic:
    """Smooth every corner of the grid diagram into an arc tile."""
    check_grid(g)
    n = g.size
    tiles = np.zeros((n, n), dtype=np.int8)
    horiz = np.zeros((n, n), dtype=bool)
    vert = np.zeros((n, n), dtype=bool)
    for r in range(n):
        a, b = sorted((g.x[r] - 1, g.o[r] - 1))
        horiz[r, a + 1 : b] = True
    for c in range(n):
        a, b = sorted(r - 1 for r in g.column_rows(c + 1))
        vert[a + 1 : b, c] = True
    tiles[horiz & ~vert] = 6
    tiles[vert & ~horiz] = 5
    tiles[horiz & vert] = VERTICAL_OVER
    for r in range(1, n + 1):
        for c in (g.x[r - 1], g.o[r - 1]):
            other_c = g.o[r - 1] if c == g.x[r - 1] else g.x[r - 1]
            ra, rb = g.column_rows(c)
            other_r = rb if ra == r else ra
            tiles[r - 1, c - 1] = tile_for((E if other_c > c else W, S if other_r > r else N))
    return Mosaic.from_array(tiles)


def mosaic_to_grid(m: Mosaic) -> GridDiagram:
    """Recover a grid diagram from a mosaic drawn the way ``grid_to_mosaic`` draws one.

    Every row and column must hold exactly two arc tiles, crossings must put
    the vertical strand on top, and double-arc tiles may not appear. X and O
    labels are reassigned alternately along each component.
    """
    check_mosaic(m)
    a = m.array()
    n = m.size
    if np.isin(a, (7, 8, HORIZONTAL_OVER)).any():
        raise InvalidMosaicError("not a grid mosaic: contains tile 7, 8 or 10")
    corner = np.isin(a, (1, 2, 3, 4))
    if not ((corner.sum(axis=1) == 2).all() and (corner.sum(axis=0) == 2).all()):
        raise InvalidMosaicError("not a grid mosaic: every row and column needs two corner tiles")
    row_cols = [tuple(int(c) + 1 for c in np.flatnonzero(corner[r])) for r in range(n)]
    col_rows = [tuple(int(r) + 1 for r in np.flatnonzero(corner[:, c])) for c in range(n)]
    x = [0] * n
    o = [0] * n
    labelled: set[tuple[int, int]] = set()
    for r0 in range(1, n + 1):
        if (r0, row_cols[r0 - 1][0]) in labelled:
            continue
        r, c, kind = r0, row_cols[r0 - 1][0], "X"
        while (r, c) not in labelled:
            labelled.add((r, c))
            (x if kind == "X" else o)[r - 1] = c
            kind = "O" if kind == "X" else "X"
            if len(labelled) % 2:  # move along the row
                c = next(cc for cc in row_cols[r - 1] if cc != c)
            else:  # move along the column
                r = next(rr for rr in col_rows[c - 1] if rr != r)
    g = GridDiagram(n, x, o)
    check_grid(g)
    if grid_to_mosaic(g) != m:
        raise InvalidMosaicError("not a grid mosaic: tiles do not match the marker layout")
    return g


# ---------------------------------------------------------------------------
# planar diagrams


@dataclass(frozen=True)
class Visit:
    cell: tuple[int, int]  # 1-based (row, col)
    entry: str
    exit: str


@dataclass(frozen=True)
class Crossing:
    cell: tuple[int, int]
    over: Literal["vertical", "horizontal"]
    arcs: tuple[int, int, int, int]  # arc ids at the N, E, S, W ports
    vertical: tuple[int, str]  # (component index, heading N or S) of the vertical strand
    horizontal: tuple[int, str]  # (component index, heading E or W)

    def port_arc(self, port: str) -> int:
        return self.arcs[PORTS.index(port)]

    def smoothing_pairs(self) -> tuple[tuple[tuple[int, int], tuple[int, int]], ...]:
        """Arc pairs joined by the A-smoothing and by the B-smoothing, in that order."""
        a = dict(zip(PORTS, self.arcs))
        ne_sw = ((a[N], a[E]), (a[S], a[W]))
        nw_se = ((a[N], a[W]), (a[S], a[E]))
        # the A-regions are the ones swept when the over-strand turns counterclockwise
        if self.over == "vertical":
            return ne_sw, nw_se
        return nw_se, ne_sw


@dataclass(frozen=True)
class PlanarDiagram:
    """Traced strands of a mosaic.

    Arcs are the pieces of strand between consecutive crossing passages,
    numbered from 0 in traversal order. A component without crossings is a
    single arc of its own.
    """

    components: tuple[tuple[Visit, ...], ...]
    component_arcs: tuple[tuple[int, ...], ...]
    crossings: tuple[Crossing, ...]
    n_arcs: int

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def component_count(self) -> int:
        return len(self.components)

    @property
    def free_loops(self) -> int:
        """Components that pass through no crossing."""
        crossed = set()
        for x in self.crossings:
            crossed.add(x.vertical[0])
            crossed.add(x.horizontal[0])
        return self.component_count - len(crossed)

    def smoothing_table(self) -> np.ndarray:
        """``(c, 2, 4)`` int64 array: arcs joined by the A (index 0) and B (index 1) smoothings."""
        table = np.zeros((len(self.crossings), 2, 4), dtype=np.int64)
        for i, x in enumerate(self.crossings):
            for s, ((p, q), (u, v)) in enumerate(x.smoothing_pairs()):
                table[i, s] = (p, q, u, v)
        return table

    def to_text(self) -> str:
        """PD export: ``X a b c d`` per crossing, then ``C ...`` arc lists per component.

        Arc ids are 1-based. Each crossing lists its arcs counterclockwise,
        starting with the under-strand arc that enters it (orientation follows
        the traced direction).
        """
        ccw = (N, W, S, E)
        lines = []
        for x in self.crossings:
            if x.over == "vertical":
                heading = x.horizontal[1]
            else:
                heading = x.vertical[1]
            entry = OPPOSITE[heading]
            k = ccw.index(entry)
            order = ccw[k:] + ccw[:k]
            lines.append("X " + " ".join(str(x.port_arc(p) + 1) for p in order))
        for arcs in self.component_arcs:
            lines.append("C " + " ".join(str(a + 1) for a in arcs))
        return "\n".join(lines) + ("\n" if lines else "")


_HEADING = {N: (0, 1), S: (0, -1), E: (1, 0), W: (-1, 0)}


def mosaic_to_pd(m: Mosaic) -> PlanarDiagram:
    """Trace the strands of a suitably connected mosaic.

    Components are found in row-major order of their first cell, trying
    ports N, E, S, W within that cell; each walk enters through the lowest
    port of its starting strand.
    """
    check_mosaic(m)
    n = m.size
    tiles = m.tiles
    seen = set()  # (row, col, strand index)

    def strand_at(i: int, j: int, port: str) -> int:
        for k, pair in enumerate(STRANDS[tiles[i][j]]):
            if port in pair:
                return k
        raise AssertionError("suitably connected mosaic has a dangling port")

    walks: list[list[tuple[int, int, int, str, str]]] = []
    for i in range(n):
        for j in range(n):
            for port in PORTS:
                pairs = STRANDS[tiles[i][j]]
                k = next((k for k, pair in enumerate(pairs) if port in pair), None)
                if k is None or (i, j, k) in seen:
                    continue
                walk = []
                ci, cj, ck, entry = i, j, k, port
                while (ci, cj, ck) not in seen:
                    seen.add((ci, cj, ck))
                    a, b = STRANDS[tiles[ci][cj]][ck]
                    exit_ = b if entry == a else a
                    walk.append((ci, cj, ck, entry, exit_))
                    di, dj = STEP[exit_]
                    ci, cj = ci + di, cj + dj
                    entry = OPPOSITE[exit_]
                    ck = strand_at(ci, cj, entry)
                walks.append(walk)

    components = []
    component_arcs = []
    passages: dict[tuple[int, int], dict] = {}
    arc_id = 0
    for comp, walk in enumerate(walks):
        components.append(tuple(Visit((i + 1, j + 1), en, ex) for i, j, _, en, ex in walk))
        cross_idx = [t for t, (i, j, *_rest) in enumerate(walk) if tiles[i][j] in (9, 10)]
        if not cross_idx:
            component_arcs.append((arc_id,))
            arc_id += 1
            continue
        # rotate so the walk starts at its first crossing passage
        start = cross_idx[0]
        walk = walk[start:] + walk[:start]
        count = len(cross_idx)
        first = arc_id
        arcs = tuple(range(first, first + count))
        component_arcs.append(arcs)
        k = 0
        for i, j, _, entry, exit_ in walk:
            if tiles[i][j] not in (9, 10):
                continue
            incoming = first + (k - 1) % count
            outgoing = first + k
            slot = passages.setdefault((i, j), {})
            slot[entry] = incoming
            slot[exit_] = outgoing
            heading = exit_
            if entry in (N, S):
                slot["vertical"] = (comp, heading)
            else:
                slot["horizontal"] = (comp, heading)
            k += 1
        arc_id += count

    crossings = []
    for (i, j) in sorted(passages):
        slot = passages[(i, j)]
        crossings.append(
            Crossing(
                cell=(i + 1, j + 1),
                over="vertical" if tiles[i][j] == VERTICAL_OVER else "horizontal",
                arcs=tuple(slot[p] for p in PORTS),
                vertical=slot["vertical"],
                horizontal=slot["horizontal"],
            )
        )
    return PlanarDiagram(tuple(components), tuple(component_arcs), tuple(crossings), arc_id)


def crossing_sign(x: Crossing, orientation: tuple[bool, ...] | None = None) -> int:
    """Sign of a crossing with y pointing up; ``orientation[c]`` False reverses component c."""
    (vc, vh), (hc, hh) = x.vertical, x.horizontal
    vx, vy = _HEADING[vh]
    hx, hy = _HEADING[hh]
    if orientation is not None:
        if not orientation[vc]:
            vx, vy = -vx, -vy
        if not orientation[hc]:
            hx, hy = -hx, -hy
    if x.over == "vertical":
        (ox, oy), (ux, uy) = (vx, vy), (hx, hy)
    else:
        (ox, oy), (ux, uy) = (hx, hy), (vx, vy)
    return 1 if ox * uy - oy * ux > 0 else -1
