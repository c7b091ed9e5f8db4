"""Mosaics for chains and necklaces of unknotted rings.

Both families are drawn from axis-parallel rectangular rings. Consecutive
rings of a chain overlap in a 2x2 block (two crossings, one ring on top at
each); rings two apart meet corner to corner in a double-arc tile without
crossing.
"""
from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import KnotMosaicError
from .mosaic import HORIZONTAL_OVER, VERTICAL_OVER, Mosaic

Rect = tuple[int, int, int, int]  # top, bottom, left, right (0-based, inclusive)

# combining two tiles drawn into the same cell
_MERGE = {
    (2, 4): 7,
    (4, 2): 7,
    (1, 3): 8,
    (3, 1): 8,
    (5, 6): VERTICAL_OVER,
    (6, 5): VERTICAL_OVER,
}


def _ring_cells(rect: Rect) -> dict[tuple[int, int], int]:
    top, bottom, left, right = rect
    cells = {(top, left): 2, (top, right): 1, (bottom, left): 3, (bottom, right): 4}
    for c in range(left + 1, right):
        cells[(top, c)] = cells[(bottom, c)] = 6
    for r in range(top + 1, bottom):
        cells[(r, left)] = cells[(r, right)] = 5
    return cells


def draw_rings(size: int, rings: Sequence[Rect], clasps: Sequence[tuple[int, int]],
               flips: Sequence[bool] | None = None) -> Mosaic:
    """Draw rectangular rings and set the crossings of each clasp.

    ``clasps`` lists the pairs of ring indices that must link. Where the
    default (vertical strand on top) would let one ring pass over the other
    at both crossings of a clasp, the first crossing is switched so the
    rings link. ``flips[i]`` then switches both crossings of clasp ``i``.
    """
    tiles = np.zeros((size, size), dtype=np.int8)
    owner: dict[tuple[int, int], list[int]] = {}
    vertical_ring: dict[tuple[int, int], int] = {}
    for idx, rect in enumerate(rings):
        for (r, c), t in _ring_cells(rect).items():
            if not (0 <= r < size and 0 <= c < size):
                raise KnotMosaicError(f"ring {idx} leaves the {size}x{size} mosaic")
            prev = int(tiles[r, c])
            if prev:
                merged = _MERGE.get((prev, t))
                if merged is None:
                    raise KnotMosaicError(f"rings overlap incompatibly at cell ({r + 1}, {c + 1})")
                tiles[r, c] = merged
            else:
                tiles[r, c] = t
            owner.setdefault((r, c), []).append(idx)
            if t == 5:
                vertical_ring[(r, c)] = idx

    crossing_cells: dict[frozenset[int], list[tuple[int, int]]] = {}
    for cell, rings_here in owner.items():
        if tiles[cell] == VERTICAL_OVER:
            crossing_cells.setdefault(frozenset(rings_here), []).append(cell)
    if flips is not None and len(flips) != len(clasps):
        raise KnotMosaicError(f"expected {len(clasps)} flip flags, got {len(flips)}")
    for i, (a, b) in enumerate(clasps):
        cells = sorted(crossing_cells.get(frozenset((a, b)), []))
        if len(cells) != 2:
            raise KnotMosaicError(f"rings {a} and {b} cross {len(cells)} times, expected 2")
        if vertical_ring[cells[0]] == vertical_ring[cells[1]]:
            tiles[cells[0]] = HORIZONTAL_OVER
        if flips is not None and flips[i]:
            for cell in cells:
                tiles[cell] = HORIZONTAL_OVER + VERTICAL_OVER - tiles[cell]
    return Mosaic.from_array(tiles)


def chain_rings(k: int, compact: bool = False) -> tuple[int, list[Rect]]:
    """Ring layout of a k-ring chain along the main diagonal.

    Rings are 3x3 squares offset by one cell, which fits ``k + 2`` cells.
    Unless ``compact``, the first ``k - 3`` rings are 4x4 instead, so every
    ring beyond the third adds two rows and columns: ``2k - 1`` in total.
    """
    sizes = [3] * k if compact else [4] * (k - 3) + [3] * 3
    rings = []
    start = 0
    for s in sizes:
        rings.append((start, start + s - 1, start, start + s - 1))
        start += s - 2
    side = rings[-1][1] + 1
    return side, rings


def chain_mosaic(k: int, flips: Sequence[bool] | None = None, compact: bool = False) -> Mosaic:
    """Chain of ``k >= 3`` rings, a connected sum of ``k - 1`` Hopf links.

    Size ``2k - 1`` with ``2k - 2`` crossings; ``compact=True`` gives size ``k + 2``.
    """
    if k < 3:
        raise KnotMosaicError(f"chain_mosaic needs k >= 3 rings, got {k}")
    side, rings = chain_rings(k, compact)
    clasps = [(i, i + 1) for i in range(k - 1)]
    return draw_rings(side, rings, clasps, flips)


def necklace_rings(k: int, compact: bool = False) -> tuple[int, list[Rect]]:
    """Ring layout of a k-ring necklace, listed in cyclic order.

    A wide ring across the top, a diagonal run of ``k - 3`` rings down to the
    right, a wide ring across the bottom and a tall ring on the left that
    closes the cycle.
    """
    s = 3 if compact else 4
    run = []
    t = 1
    for _ in range(k - 4):
        run.append((t, t + s - 1, t + 2, t + s + 1))
        t += s - 2
    last = (t, t + 3, t + 2, t + 4)
    top = (0, 2, 0, 4)
    bottom = (t + 2, t + 4, 0, t + 3)
    left = (1, t + 3, 1, 2)
    return t + 5, [top, *run, last, bottom, left]


def necklace_mosaic(k: int, flips: Sequence[bool] | None = None, compact: bool = False) -> Mosaic:
    """Necklace of ``k >= 4`` rings, each linked with its two neighbours.

    Size ``2k - 2`` with ``2k`` crossings; ``compact=True`` gives size ``k + 2``.
    """
    if k < 4:
        raise KnotMosaicError(f"necklace_mosaic needs k >= 4 rings, got {k}")
    side, rings = necklace_rings(k, compact)
    clasps = [(i, (i + 1) % k) for i in range(k)]
    return draw_rings(side, rings, clasps, flips)
