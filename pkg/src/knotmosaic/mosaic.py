"""Mosaic tiles, knot mosaics and the suitably-connected predicate.

Tiles are the integers 0..10. Connection points sit at the midpoints of the
tile edges ``N``, ``E``, ``S``, ``W``:

====  ======================  =====================================
tile  strands                 notes
====  ======================  =====================================
0     none                    blank
1     W-S                     arc
2     S-E                     arc
3     E-N                     arc
4     N-W                     arc
5     N-S                     vertical line
6     W-E                     horizontal line
7     N-W and S-E             two arcs
8     N-E and W-S             two arcs
9     N-S over W-E            crossing, vertical strand on top
10    W-E over N-S            crossing, horizontal strand on top
====  ======================  =====================================

The text format writes one character per tile, ``0``-``9`` and ``A`` for 10.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidMosaicError

N, E, S, W = "N", "E", "S", "W"
PORTS = (N, E, S, W)
BIT = {N: 1, E: 2, S: 4, W: 8}
OPPOSITE = {N: S, S: N, E: W, W: E}
STEP = {N: (-1, 0), S: (1, 0), E: (0, 1), W: (0, -1)}

BLANK, VERTICAL_OVER, HORIZONTAL_OVER = 0, 9, 10
CROSSINGS = (VERTICAL_OVER, HORIZONTAL_OVER)

STRANDS: dict[int, tuple[tuple[str, str], ...]] = {
    0: (),
    1: ((W, S),),
    2: ((S, E),),
    3: ((E, N),),
    4: ((N, W),),
    5: ((N, S),),
    6: ((W, E),),
    7: ((N, W), (S, E)),
    8: ((N, E), (W, S)),
    9: ((N, S), (W, E)),
    10: ((W, E), (N, S)),
}

TILE_CHARS = "0123456789A"

# bitmask of connection points per tile, indexable by a tile array
TILE_MASK = np.array(
    [sum(BIT[p] for pair in STRANDS[t] for p in pair) for t in range(11)], dtype=np.int8
)

_ARC_BY_PORTS = {frozenset(pair): t for t in range(1, 7) for pair in STRANDS[t]}


def connection_points(tile: int) -> frozenset[str]:
    return frozenset(p for pair in STRANDS[tile] for p in pair)


def tile_for(ports: Iterable[str]) -> int:
    """Arc or line tile joining exactly two ports; no ports gives the blank tile."""
    key = frozenset(ports)
    if not key:
        return BLANK
    try:
        return _ARC_BY_PORTS[key]
    except KeyError:
        raise ValueError(f"no single-strand tile joins {sorted(key)}") from None


# transposing a mosaic swaps N<->W and S<->E
TRANSPOSE_TILE = (0, 3, 2, 1, 4, 6, 5, 7, 8, 10, 9)
# reflecting left-right swaps E<->W
REFLECT_TILE = (0, 2, 1, 4, 3, 5, 6, 8, 7, 9, 10)


@dataclass(frozen=True)
class Mosaic:
    tiles: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(t) for t in row) for row in self.tiles)
        n = len(rows)
        if n == 0:
            raise InvalidMosaicError("a mosaic needs at least one row")
        for i, row in enumerate(rows, start=1):
            if len(row) != n:
                raise InvalidMosaicError(f"row {i}: expected {n} tiles, got {len(row)}")
            for j, t in enumerate(row, start=1):
                if not 0 <= t <= 10:
                    raise InvalidMosaicError(f"cell ({i}, {j}): {t} is not a tile")
        object.__setattr__(self, "tiles", rows)

    @property
    def size(self) -> int:
        return len(self.tiles)

    def __getitem__(self, cell: tuple[int, int]) -> int:
        """Tile at 1-based ``(row, col)``."""
        i, j = cell
        return self.tiles[i - 1][j - 1]

    def array(self) -> np.ndarray:
        return np.array(self.tiles, dtype=np.int8)

    @classmethod
    def from_array(cls, a) -> Mosaic:
        return cls(tuple(tuple(int(t) for t in row) for row in np.asarray(a)))

    @classmethod
    def blank(cls, n: int) -> Mosaic:
        return cls(tuple((0,) * n for _ in range(n)))

    def to_text(self) -> str:
        lines = [str(self.size)]
        lines += ["".join(TILE_CHARS[t] for t in row) for row in self.tiles]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> Mosaic:
        return parse_mosaic(text)

    def transpose(self) -> Mosaic:
        a = np.asarray(TRANSPOSE_TILE, dtype=np.int8)[self.array().T]
        return Mosaic.from_array(a)

    def reflect(self) -> Mosaic:
        """Left-right reflection of the picture (over-strands stay on top)."""
        a = np.asarray(REFLECT_TILE, dtype=np.int8)[self.array()[:, ::-1]]
        return Mosaic.from_array(a)

    def switch_crossings(self) -> Mosaic:
        """Exchange tiles 9 and 10 everywhere."""
        a = self.array()
        out = a.copy()
        out[a == VERTICAL_OVER] = HORIZONTAL_OVER
        out[a == HORIZONTAL_OVER] = VERTICAL_OVER
        return Mosaic.from_array(out)

    def __str__(self) -> str:
        return self.to_text()


def parse_mosaic(text: str) -> Mosaic:
    lines = [line.rstrip("\r") for line in text.strip("\n").split("\n")]
    if not lines or not lines[0].strip():
        raise InvalidMosaicError("line 1: missing size")
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise InvalidMosaicError(f"line 1: expected the mosaic size, got {lines[0]!r}") from None
    if n < 1:
        raise InvalidMosaicError(f"line 1: size must be positive, got {n}")
    body = lines[1:]
    if len(body) != n:
        raise InvalidMosaicError(f"expected {n} tile rows after line 1, got {len(body)}")
    rows = []
    for i, line in enumerate(body, start=2):
        line = line.strip()
        if len(line) != n:
            raise InvalidMosaicError(f"line {i}: expected {n} tiles, got {len(line)}")
        row = []
        for j, ch in enumerate(line, start=1):
            t = TILE_CHARS.find(ch.upper())
            if t < 0:
                raise InvalidMosaicError(f"line {i}, column {j}: {ch!r} is not a tile character")
            row.append(t)
        rows.append(row)
    return Mosaic(rows)


def first_connection_defect(m: Mosaic) -> str | None:
    """Describe the first edge where ``m`` fails to be suitably connected."""
    a = TILE_MASK[m.array()].astype(np.int16)
    n = m.size
    # boundary: nothing may point out of the mosaic
    for name, cells, bit in (
        ("top", a[0, :], BIT[N]),
        ("bottom", a[-1, :], BIT[S]),
        ("left", a[:, 0], BIT[W]),
        ("right", a[:, -1], BIT[E]),
    ):
        hits = np.flatnonzero(cells & bit)
        if hits.size:
            k = int(hits[0]) + 1
            cell = {"top": (1, k), "bottom": (n, k), "left": (k, 1), "right": (k, n)}[name]
            return f"cell {cell} has a connection point on the {name} boundary"
    east = (a[:, :-1] & BIT[E]) > 0
    west = (a[:, 1:] & BIT[W]) > 0
    bad = np.argwhere(east != west)
    if bad.size:
        i, j = (int(v) + 1 for v in bad[0])
        return f"edge between cells ({i}, {j}) and ({i}, {j + 1}) is unmatched"
    south = (a[:-1, :] & BIT[S]) > 0
    north = (a[1:, :] & BIT[N]) > 0
    bad = np.argwhere(south != north)
    if bad.size:
        i, j = (int(v) + 1 for v in bad[0])
        return f"edge between cells ({i}, {j}) and ({i + 1}, {j}) is unmatched"
    return None


def suitably_connected(m: Mosaic) -> bool:
    return first_connection_defect(m) is None


def check_mosaic(m: Mosaic) -> Mosaic:
    defect = first_connection_defect(m)
    if defect is not None:
        raise InvalidMosaicError(f"not suitably connected: {defect}")
    return m


def crossing_count(m: Mosaic) -> int:
    a = m.array()
    return int(np.count_nonzero((a == VERTICAL_OVER) | (a == HORIZONTAL_OVER)))


def mosaic_from_rows(rows: Sequence[str]) -> Mosaic:
    """Build a mosaic from tile-character rows, e.g. ``["21", "34"]``."""
    return parse_mosaic("\n".join([str(len(rows)), *rows]))
