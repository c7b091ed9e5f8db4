"""Shrinking grid mosaics below the grid size.

``reduce_case1`` slides the top horizontal edge of a non-rectangular
component down onto the next horizontal edge, which empties one row and one
column. ``reduce_torus_double`` performs that slide on a torus grid twice,
once on the top row and once (transposed) on the rightmost column. Links
made only of rectangles are matched against the chain and necklace families.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .convert import grid_to_mosaic, mosaic_to_pd
from .errors import ReductionError
from .families import chain_mosaic, necklace_mosaic
from .grid import GridDiagram, check_grid, cyclic_permute_cols, cyclic_permute_rows, torus_grid, trace_components
from .invariants import fingerprint, linking_numbers
from .mosaic import CROSSINGS, HORIZONTAL_OVER, TRANSPOSE_TILE, VERTICAL_OVER, E, Mosaic, N, S, W, tile_for

# family variants are searched only while (states per bracket) * (variants) stays below this
SEARCH_BUDGET = 1 << 24


@dataclass(frozen=True)
class SlidePlan:
    """Where a slide happens, in 1-based coordinates of the rotated grid."""

    grid: GridDiagram  # input after the row and column rotations
    row_shift: int
    col_shift: int
    long_col: int  # v_l
    short_col: int  # v_s
    target_row: int  # row of h_s
    far_col: int  # other end of h_s (v_m)
    added: int  # verticals newly crossed by the slid edge
    removed: int  # crossings lost on v_s and on the top part of v_l


def _other_row(g: GridDiagram, col: int, row: int) -> int:
    a, b = g.column_rows(col)
    return b if a == row else a


def _other_col(g: GridDiagram, row: int, col: int) -> int:
    x, o = g.x[row - 1], g.o[row - 1]
    return o if x == col else x


def _between(a: int, b: int, c: int) -> bool:
    return min(a, c) < b < max(a, c)


def plan_case1(g: GridDiagram) -> SlidePlan:
    check_grid(g)
    n = g.size
    candidates = [c for c in trace_components(g) if not c.is_rectangular]
    if not candidates:
        raise ReductionError("every component is rectangular; no slide is available")
    top = candidates[0].top_row
    row_shift = (1 - top) % n
    g1 = cyclic_permute_rows(g, row_shift)

    c1, c2 = sorted((g1.x[0], g1.o[0]))
    b1, b2 = _other_row(g1, c1, 1), _other_row(g1, c2, 1)
    short, long_ = (c1, c2) if b1 < b2 else (c2, c1)
    target = min(b1, b2)
    far = _other_col(g1, target, short)

    shift = lambda c, k: (c - 1 + k) % n + 1  # noqa: E731
    for k in range(n):
        if _between(shift(long_, k), shift(short, k), shift(far, k)):
            break
    else:  # pragma: no cover - three distinct columns always admit a rotation
        raise ReductionError("no column rotation puts v_s between v_l and v_m")
    g2 = cyclic_permute_cols(g1, k)
    long_, short, far = shift(long_, k), shift(short, k), shift(far, k)

    lo, hi = sorted((long_, short))
    added = 0
    for c in range(lo + 1, hi):
        a, b = sorted(g2.column_rows(c))
        added += a < target < b
    removed = 0
    for r in range(2, target):
        for c in (long_, short):
            a, b = sorted((g2.x[r - 1], g2.o[r - 1]))
            removed += a < c < b
    return SlidePlan(g2, row_shift, k, long_, short, target, far, added, removed)


def _slide(t: np.ndarray, top: int, long_col: int, short_col: int, target: int, over: int) -> None:
    """Slide the edge in row ``top`` (an outer row) down or up to row ``target``, in place.

    Indices are 0-based. ``over`` is the tile placed where the slid edge
    meets a vertical strand.
    """
    step = 1 if target > top else -1
    lo, hi = sorted((long_col, short_col))
    t[top, lo : hi + 1] = 0
    for r in range(top + step, target, step):
        for c in (long_col, short_col):
            t[r, c] = 6 if t[r, c] in CROSSINGS else 0
    t[target, short_col] = 6
    toward = E if short_col > long_col else W
    t[target, long_col] = tile_for((toward, S if step == 1 else N))
    for c in range(lo + 1, hi):
        if t[target, c] == 5:
            t[target, c] = over
        elif t[target, c] == 0:
            t[target, c] = 6
        else:
            raise ReductionError(f"unexpected tile {int(t[target, c])} on the slide path")


def reduce_case1(g: GridDiagram) -> Mosaic:
    """Mosaic of size ``n - 1`` for a grid with a non-rectangular component."""
    plan = plan_case1(g)
    t = grid_to_mosaic(plan.grid).array()
    _slide(t, 0, plan.long_col - 1, plan.short_col - 1, plan.target_row - 1, HORIZONTAL_OVER)
    t = np.delete(np.delete(t, 0, axis=0), plan.short_col - 1, axis=1)
    return Mosaic.from_array(t)


def _transpose(t: np.ndarray) -> np.ndarray:
    return np.asarray(TRANSPOSE_TILE, dtype=np.int8)[t.T]


def reduce_torus_double(p: int, q: int) -> Mosaic:
    """Mosaic of size ``p + q - 2`` for the (p, q) torus link, ``q >= p + 2``."""
    if p < 2 or q < p + 2:
        raise ReductionError(f"the double slide needs 2 <= p and q >= p + 2, got p={p}, q={q}")
    g = torus_grid(p, q)
    n = g.size
    t = grid_to_mosaic(g).array()
    # top row: X at column p+1 drops to row p+1, O at column 1 drops to row n
    _slide(t, 0, 0, p, p, HORIZONTAL_OVER)
    # rightmost column, seen transposed: row q comes in from column q - p
    tt = _transpose(t)
    _slide(tt, n - 1, n - 1, q - 1, q - 1, VERTICAL_OVER)
    t = _transpose(tt)
    t = np.delete(np.delete(t, [0, q - 1], axis=0), [p, n - 1], axis=1)
    return Mosaic.from_array(t)


# ---------------------------------------------------------------------------
# links of rectangles


@dataclass(frozen=True)
class RectLinkClass:
    kind: str  # "chain", "necklace" or "other"
    k: int
    description: str = ""

    def __str__(self) -> str:
        if self.kind == "other":
            return f"other({self.description})"
        return f"{self.kind}({self.k})"


def classify_rect_link(g: GridDiagram) -> RectLinkClass:
    """Recognise chains and necklaces from the linking graph of the rectangles."""
    comps = trace_components(g)
    if any(not c.is_rectangular for c in comps):
        raise ReductionError("classify_rect_link needs every component to be a rectangle")
    k = len(comps)
    pd = mosaic_to_pd(grid_to_mosaic(g))
    lk = linking_numbers(pd)
    edges = [pair for pair, v in lk.items() if abs(v) == 1]
    per_pair: dict[tuple[int, int], int] = {}
    for x in pd.crossings:
        a, b = sorted((x.vertical[0], x.horizontal[0]))
        per_pair[(a, b)] = per_pair.get((a, b), 0) + 1
    degree = [0] * k
    adj: list[list[int]] = [[] for _ in range(k)]
    for a, b in edges:
        degree[a] += 1
        degree[b] += 1
        adj[a].append(b)
        adj[b].append(a)
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    connected = len(seen) == k
    c = pd.crossing_count
    clean = all(per_pair.get(e) == 2 for e in edges)
    if connected and clean and k >= 3 and len(edges) == k - 1 and max(degree) <= 2 and c == 2 * k - 2:
        return RectLinkClass("chain", k)
    if connected and clean and k >= 4 and len(edges) == k and all(d == 2 for d in degree) and c == 2 * k:
        return RectLinkClass("necklace", k)
    return RectLinkClass("other", k, f"{k} rectangles, {len(edges)} linked pairs, {c} crossings")


def _family_match(cls: RectLinkClass, target) -> Mosaic | None:
    build = chain_mosaic if cls.kind == "chain" else necklace_mosaic
    clasps = cls.k - 1 if cls.kind == "chain" else cls.k
    crossings = 2 * cls.k - 2 if cls.kind == "chain" else 2 * cls.k
    limit = max(1, SEARCH_BUDGET >> crossings)
    variants = itertools.product((False, True), repeat=clasps)
    for flips in itertools.islice(variants, limit):
        candidate = build(cls.k, flips=flips)
        if fingerprint(candidate) == target:
            return candidate
    return None


def reduce(g: GridDiagram) -> Mosaic:
    """Slide when possible, otherwise use the chain or necklace family, otherwise convert."""
    check_grid(g)
    if any(not c.is_rectangular for c in trace_components(g)):
        return reduce_case1(g)
    base = grid_to_mosaic(g)
    cls = classify_rect_link(g)
    if cls.kind != "other":
        candidate = _family_match(cls, fingerprint(base))
        if candidate is not None and candidate.size <= base.size:
            return candidate
    return base


__all__ = [
    "RectLinkClass",
    "SlidePlan",
    "classify_rect_link",
    "plan_case1",
    "reduce",
    "reduce_case1",
    "reduce_torus_double",
]
