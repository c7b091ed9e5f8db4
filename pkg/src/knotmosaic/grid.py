"""Grid diagrams and Dynnikov's elementary moves.

A grid diagram of size ``n`` places one X and one O marker in every row and
every column of an ``n x n`` board. Joining the two markers of each row gives
a horizontal edge, joining those of each column a vertical edge, and vertical
edges always cross over horizontal ones.

Rows and columns are 1-based, row 1 is the top row and column 1 the leftmost
one. ``x[r - 1]`` is the column of the X marker in row ``r``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd
from typing import Iterator, Literal, Sequence

from .errors import InvalidGridError, MoveError

Marker = Literal["X", "O"]
Corner = Literal["NW", "NE", "SW", "SE"]
CORNERS: tuple[Corner, ...] = ("NW", "NE", "SW", "SE")


@dataclass(frozen=True)
class GridDiagram:
    size: int
    x: tuple[int, ...]
    o: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "x", tuple(int(c) for c in self.x))
        object.__setattr__(self, "o", tuple(int(c) for c in self.o))

    def markers(self) -> Iterator[tuple[int, int, Marker]]:
        """Yield ``(row, col, kind)`` for every marker, row by row."""
        for r in range(1, self.size + 1):
            yield r, self.x[r - 1], "X"
            yield r, self.o[r - 1], "O"

    def column_rows(self, col: int) -> tuple[int, int]:
        """Rows of the X and the O marker in column ``col``."""
        return self.x.index(col) + 1, self.o.index(col) + 1

    def horizontal_edge(self, row: int) -> GridEdge:
        return GridEdge("horizontal", row, (self.x[row - 1], self.o[row - 1]))

    def vertical_edge(self, col: int) -> GridEdge:
        return GridEdge("vertical", col, self.column_rows(col))

    def to_json(self) -> str:
        return json.dumps({"size": self.size, "x": list(self.x), "o": list(self.o)})

    @classmethod
    def from_json(cls, text: str) -> GridDiagram:
        return parse_grid(text)


@dataclass(frozen=True)
class GridEdge:
    orientation: Literal["horizontal", "vertical"]
    index: int
    span: tuple[int, int]  # (X coordinate, O coordinate) along the edge

    @property
    def low(self) -> int:
        return min(self.span)

    @property
    def high(self) -> int:
        return max(self.span)

    @property
    def length(self) -> int:
        return self.high - self.low


@dataclass(frozen=True)
class Component:
    edges: tuple[GridEdge, ...]

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def is_rectangular(self) -> bool:
        return len(self.edges) == 4

    @property
    def top_row(self) -> int:
        return min(e.index for e in self.edges if e.orientation == "horizontal")

    def rows(self) -> tuple[int, ...]:
        return tuple(e.index for e in self.edges if e.orientation == "horizontal")

    def columns(self) -> tuple[int, ...]:
        return tuple(e.index for e in self.edges if e.orientation == "vertical")


# ---------------------------------------------------------------------------
# validation and I/O


def validate_grid(g: GridDiagram) -> str | None:
    """Return ``None`` for a valid grid, otherwise a description of the first violation."""
    n = g.size
    if not isinstance(n, int) or n < 1:
        return f"size: expected a positive integer, got {n!r}"
    for name, cols in (("x", g.x), ("o", g.o)):
        if len(cols) != n:
            return f"{name}: expected {n} entries, got {len(cols)}"
        seen: dict[int, int] = {}
        for r, c in enumerate(cols, start=1):
            if not 1 <= c <= n:
                return f"{name}: row {r} has column {c} outside 1..{n}"
            if c in seen:
                return f"{name}: column {c} used in rows {seen[c]} and {r}"
            seen[c] = r
    for r in range(1, n + 1):
        if g.x[r - 1] == g.o[r - 1]:
            return f"row {r}: X and O share column {g.x[r - 1]}"
    return None


def check_grid(g: GridDiagram) -> GridDiagram:
    problem = validate_grid(g)
    if problem is not None:
        raise InvalidGridError(problem)
    return g


def parse_grid(text: str) -> GridDiagram:
    """Parse the grid JSON format ``{"size": n, "x": [...], "o": [...]}``."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidGridError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise InvalidGridError("top level: expected a JSON object")
    for key in ("size", "x", "o"):
        if key not in data:
            raise InvalidGridError(f"field {key!r}: missing")
    extra = sorted(set(data) - {"size", "x", "o"})
    if extra:
        raise InvalidGridError(f"field {extra[0]!r}: unexpected")
    size = data["size"]
    if isinstance(size, bool) or not isinstance(size, int):
        raise InvalidGridError(f"field 'size': expected an integer, got {size!r}")
    for key in ("x", "o"):
        value = data[key]
        if not isinstance(value, list) or any(
            isinstance(c, bool) or not isinstance(c, int) for c in value
        ):
            raise InvalidGridError(f"field {key!r}: expected a list of integers")
    g = GridDiagram(size, data["x"], data["o"])
    problem = validate_grid(g)
    if problem is not None:
        raise InvalidGridError(f"field {problem}" if problem.startswith(("x", "o", "size")) else problem)
    return g


# ---------------------------------------------------------------------------
# components


def trace_components(g: GridDiagram) -> list[Component]:
    """Split the edges of ``g`` into closed components.

    Components come out ordered by their topmost row. Each one starts with its
    topmost horizontal edge followed by the vertical edge at that edge's left
    end.
    """
    check_grid(g)
    n = g.size
    col_rows = {c: g.column_rows(c) for c in range(1, n + 1)}
    used = [False] * (n + 1)
    components = []
    for start in range(1, n + 1):
        if used[start]:
            continue
        edges = []
        row = start
        col = min(g.x[row - 1], g.o[row - 1])
        while True:
            used[row] = True
            edges.append(g.horizontal_edge(row))
            edges.append(g.vertical_edge(col))
            a, b = col_rows[col]
            row = b if a == row else a
            if row == start:
                break
            xr, orr = g.x[row - 1], g.o[row - 1]
            col = orr if xr == col else xr
        components.append(Component(tuple(edges)))
    return components


# ---------------------------------------------------------------------------
# moves


def cyclic_permute_rows(g: GridDiagram, k: int) -> GridDiagram:
    """Rotate rows by ``k``: row ``r`` moves to row ``r + k`` (mod n)."""
    check_grid(g)
    n = g.size
    k %= n
    if k == 0:
        return g
    return GridDiagram(n, g.x[-k:] + g.x[:-k], g.o[-k:] + g.o[:-k])


def cyclic_permute_cols(g: GridDiagram, k: int) -> GridDiagram:
    """Rotate columns by ``k``: column ``c`` moves to column ``c + k`` (mod n)."""
    check_grid(g)
    n = g.size
    k %= n
    if k == 0:
        return g
    shift = lambda c: (c - 1 + k) % n + 1  # noqa: E731
    return GridDiagram(n, [shift(c) for c in g.x], [shift(c) for c in g.o])


def stabilize(g: GridDiagram, row: int, marker: Marker, corner: Corner) -> GridDiagram:
    """Replace a marker by an L of three markers in a new 2x2 block.

    ``corner`` names the block cell left empty. The original row and column
    keep that corner's side of the block, the new row and column are inserted
    on the opposite side, and the elbow of the L sits diagonally opposite the
    empty cell.
    """
    check_grid(g)
    n = g.size
    if not 1 <= row <= n:
        raise MoveError(f"stabilize: row {row} outside 1..{n}")
    if marker not in ("X", "O"):
        raise MoveError(f"stabilize: marker must be 'X' or 'O', got {marker!r}")
    if corner not in CORNERS:
        raise MoveError(f"stabilize: corner must be one of {CORNERS}, got {corner!r}")
    col = (g.x if marker == "X" else g.o)[row - 1]
    other = "O" if marker == "X" else "X"

    # the new row/column goes below/right of the empty corner's side
    new_row_below = corner[0] == "N"
    new_col_right = corner[1] == "W"
    r_out = row if new_row_below else row + 1
    r_in = row + 1 if new_row_below else row
    c_out = col if new_col_right else col + 1
    c_in = col + 1 if new_col_right else col
    insert_row = row + 1 if new_row_below else row
    insert_col = col + 1 if new_col_right else col

    def shift_col(c: int) -> int:
        return c + 1 if c >= insert_col else c

    placed: dict[int, dict[str, int]] = {}
    for r in range(1, n + 1):
        new_r = r + 1 if r >= insert_row else r
        placed[new_r] = {"X": shift_col(g.x[r - 1]), "O": shift_col(g.o[r - 1])}
    # the original row's marker moves to the inner column; its far marker stays
    placed[r_out][marker] = c_in
    placed[r_in] = {marker: c_out, other: c_in}
    x = [placed[r]["X"] for r in range(1, n + 2)]
    o = [placed[r]["O"] for r in range(1, n + 2)]
    return check_grid(GridDiagram(n + 1, x, o))


def destabilize(g: GridDiagram, row: int, col: int) -> GridDiagram:
    """Collapse the 2x2 block with top-left cell ``(row, col)`` holding an L of three markers."""
    check_grid(g)
    n = g.size
    if n < 3:
        raise MoveError("destabilize: a grid of size 2 cannot be destabilized")
    if not (1 <= row < n and 1 <= col < n):
        raise MoveError(f"destabilize: block at ({row}, {col}) does not fit in a {n}x{n} grid")
    rows, cols = (row, row + 1), (col, col + 1)
    cells = {}
    for r in rows:
        for kind, c in (("X", g.x[r - 1]), ("O", g.o[r - 1])):
            if c in cols:
                cells[(r, c)] = kind
    if len(cells) != 3:
        raise MoveError(
            f"destabilize: block at ({row}, {col}) holds {len(cells)} markers, expected 3"
        )
    empty = next((r, c) for r in rows for c in cols if (r, c) not in cells)
    r_out, c_out = empty
    r_in = rows[0] if r_out == rows[1] else rows[1]
    c_in = cols[0] if c_out == cols[1] else cols[1]
    arm_kind = cells[(r_out, c_in)]

    x, o = [], []
    for r in range(1, n + 1):
        if r == r_in:
            continue
        xr, orr = g.x[r - 1], g.o[r - 1]
        if r == r_out:
            if arm_kind == "X":
                xr = c_out
            else:
                orr = c_out
        x.append(xr)
        o.append(orr)
    squeeze = lambda c: c - 1 if c > c_in else c  # noqa: E731
    return check_grid(GridDiagram(n - 1, [squeeze(c) for c in x], [squeeze(c) for c in o]))


def _commutable(a: tuple[int, int], b: tuple[int, int]) -> bool:
    a0, a1 = sorted(a)
    b0, b1 = sorted(b)
    if len({a0, a1, b0, b1}) < 4:
        return False
    disjoint = a1 < b0 or b1 < a0
    nested = (a0 < b0 and b1 < a1) or (b0 < a0 and a1 < b1)
    return disjoint or nested


def interchange_rows(g: GridDiagram, i: int) -> GridDiagram:
    """Swap rows ``i`` and ``i + 1`` when their edges do not interleave."""
    check_grid(g)
    n = g.size
    if not 1 <= i < n:
        raise MoveError(f"interchange_rows: index {i} outside 1..{n - 1}")
    a = (g.x[i - 1], g.o[i - 1])
    b = (g.x[i], g.o[i])
    if not _commutable(a, b):
        raise MoveError(
            f"interchange_rows: rows {i} and {i + 1} span {sorted(a)} and {sorted(b)}, "
            "which interleave or share an endpoint"
        )
    x, o = list(g.x), list(g.o)
    x[i - 1], x[i] = x[i], x[i - 1]
    o[i - 1], o[i] = o[i], o[i - 1]
    return GridDiagram(n, x, o)


def interchange_cols(g: GridDiagram, j: int) -> GridDiagram:
    """Swap columns ``j`` and ``j + 1`` when their edges do not interleave."""
    check_grid(g)
    n = g.size
    if not 1 <= j < n:
        raise MoveError(f"interchange_cols: index {j} outside 1..{n - 1}")
    a = g.column_rows(j)
    b = g.column_rows(j + 1)
    if not _commutable(a, b):
        raise MoveError(
            f"interchange_cols: columns {j} and {j + 1} span {sorted(a)} and {sorted(b)}, "
            "which interleave or share an endpoint"
        )
    swap = {j: j + 1, j + 1: j}
    return GridDiagram(n, [swap.get(c, c) for c in g.x], [swap.get(c, c) for c in g.o])


# ---------------------------------------------------------------------------
# named diagrams


def unknot_grid() -> GridDiagram:
    return GridDiagram(2, (1, 2), (2, 1))


def torus_grid(p: int, q: int) -> GridDiagram:
    """Staircase grid of the (p, q) torus link with grid index ``p + q``."""
    if p < 2 or p >= q:
        raise InvalidGridError(f"torus_grid: need 2 <= p < q, got p={p}, q={q}")
    n = p + q
    o = list(range(1, n + 1))
    x = [(r + p - 1) % n + 1 for r in range(1, n + 1)]
    return GridDiagram(n, x, o)


def recognize_torus_grid(g: GridDiagram) -> tuple[int, int] | None:
    """Return ``(p, q)`` if ``g`` equals ``torus_grid(p, q)``."""
    for p in range(2, g.size):
        q = g.size - p
        if p < q and torus_grid(p, q) == g:
            return p, q
    return None


def rectangle_grid(rects: Sequence[tuple[int, int, int, int]]) -> GridDiagram:
    """Build a grid whose components are the given rectangles.

    Each rectangle is ``(top, bottom, left, right)``; together they must use
    every row and column exactly once. Markers alternate around each
    rectangle so rows and columns each receive one X and one O.
    """
    n = 2 * len(rects)
    x = [0] * n
    o = [0] * n
    for top, bottom, left, right in rects:
        x[top - 1], o[top - 1] = left, right
        x[bottom - 1], o[bottom - 1] = right, left
    return check_grid(GridDiagram(n, x, o))


def is_torus_knot(p: int, q: int) -> bool:
    return gcd(p, q) == 1
