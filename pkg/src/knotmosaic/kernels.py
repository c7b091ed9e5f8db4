"""Hot loops: the bracket state sum and the frontier DP for mosaic counting.

Each kernel has a numba version (explicit loops) and an independent
pure-numpy version (vectorised over states). Both return bit-identical
integer arrays. ``backend=None`` picks numba unless it is unavailable or
disabled through ``KNOTMOSAIC_DISABLE_NUMBA``.
"""
from __future__ import annotations

import numpy as np

from ._accel import njit, resolve_backend

# ---------------------------------------------------------------------------
# Kauffman bracket: histogram of (number of B-smoothings, number of loops)


@njit(cache=True, nogil=True)
def _find(parent, a):
    root = a
    while parent[root] != root:
        root = parent[root]
    while parent[a] != root:
        nxt = parent[a]
        parent[a] = root
        a = nxt
    return root


@njit(cache=True, nogil=True)
def _state_histogram_numba(table, n_arcs, start, stop):
    c = table.shape[0]
    hist = np.zeros((c + 1, n_arcs + 1), dtype=np.int64)
    parent = np.empty(n_arcs, dtype=np.int64)
    for state in range(start, stop):
        for k in range(n_arcs):
            parent[k] = k
        loops = n_arcs
        nb = 0
        for i in range(c):
            s = (state >> i) & 1
            nb += s
            for h in range(2):
                a = _find(parent, table[i, s, 2 * h])
                b = _find(parent, table[i, s, 2 * h + 1])
                if a != b:
                    parent[a] = b
                    loops -= 1
        hist[nb, loops] += 1
    return hist


def _state_histogram_numpy(table, n_arcs, start, stop, chunk=1 << 13):
    c = table.shape[0]
    hist = np.zeros((c + 1, n_arcs + 1), dtype=np.int64)
    shifts = np.arange(c, dtype=np.int64)
    for lo in range(start, stop, chunk):
        states = np.arange(lo, min(stop, lo + chunk), dtype=np.int64)
        m = states.size
        bits = (states[:, None] >> shifts) & 1
        ends = np.where(bits[:, :, None] == 1, table[None, :, 1, :], table[None, :, 0, :])
        u = ends[:, :, 0::2].reshape(m, -1)
        v = ends[:, :, 1::2].reshape(m, -1)
        rows = np.broadcast_to(np.arange(m)[:, None], u.shape)
        labels = np.tile(np.arange(n_arcs, dtype=np.int64), (m, 1))
        row_idx = np.arange(m)[:, None]
        # min-label hooking plus pointer jumping until every join is settled
        while True:
            lu = labels[row_idx, u]
            lv = labels[row_idx, v]
            low = np.minimum(lu, lv)
            if np.array_equal(lu, lv):
                break
            np.minimum.at(labels, (rows, lu), low)
            np.minimum.at(labels, (rows, lv), low)
            while True:
                jumped = labels[row_idx, labels]
                if np.array_equal(jumped, labels):
                    break
                labels = jumped
        loops = (labels == np.arange(n_arcs)).sum(axis=1)
        nb = bits.sum(axis=1)
        np.add.at(hist, (nb, loops), 1)
    return hist


def state_histogram(table: np.ndarray, n_arcs: int, start: int = 0, stop: int | None = None,
                    backend: str | None = None) -> np.ndarray:
    """Count smoothing states by (B-smoothings, loops) over states ``start..stop-1``.

    ``table[i, s]`` holds the two arc pairs joined at crossing ``i`` by
    smoothing ``s`` (0 = A, 1 = B). State bit ``i`` selects the smoothing of
    crossing ``i``.
    """
    c = table.shape[0]
    if stop is None:
        stop = 1 << c
    table = np.ascontiguousarray(table, dtype=np.int64)
    if resolve_backend(backend) == "numba":
        return _state_histogram_numba(table, n_arcs, start, stop)
    return _state_histogram_numpy(table, n_arcs, start, stop)


# ---------------------------------------------------------------------------
# frontier DP over the cells of an n x n mosaic, modulo a prime
#
# state bits 0..n-1: a connection point hangs down from the processed region
# in that column; bit n: one points right from the previous cell.

# tile count for a (N, E, S, W) connection pattern
_WEIGHT = np.zeros((2, 2, 2, 2), dtype=np.int64)
for _nn in range(2):
    for _e in range(2):
        for _s in range(2):
            for _w in range(2):
                _k = _nn + _e + _s + _w
                _WEIGHT[_nn, _e, _s, _w] = {0: 1, 2: 1, 4: 4}.get(_k, 0)


@njit(cache=True, nogil=True)
def _count_mod_numba(n, p):
    size = 1 << (n + 1)
    cur = np.zeros(size, dtype=np.int64)
    cur[0] = 1
    nxt = np.zeros(size, dtype=np.int64)
    carry_bit = 1 << n
    for i in range(n):
        for j in range(n):
            col_bit = 1 << j
            e_max = 2 if j < n - 1 else 1
            s_max = 2 if i < n - 1 else 1
            nxt[:] = 0
            for st in range(size):
                v = cur[st]
                if v == 0:
                    continue
                north = (st >> j) & 1
                west = (st >> n) & 1
                base = st & ~col_bit & ~carry_bit
                for east in range(e_max):
                    for south in range(s_max):
                        k = north + east + south + west
                        if k == 1 or k == 3:
                            continue
                        w = 4 if k == 4 else 1
                        t = base | (south * col_bit) | (east * carry_bit)
                        nxt[t] = (nxt[t] + w * v) % p
            cur, nxt = nxt, cur
    return cur[0]


def _count_mod_numpy(n, p):
    cur = np.zeros(1 << (n + 1), dtype=np.int64)
    cur[0] = 1
    for i in range(n):
        for j in range(n):
            weight = _WEIGHT.copy()
            if j == n - 1:
                weight[:, 1, :, :] = 0
            if i == n - 1:
                weight[:, :, 1, :] = 0
            # axes: west/carry, higher columns, north/this column, lower columns
            old = cur.reshape(2, 1 << (n - 1 - j), 2, 1 << j)
            new = np.einsum("nesw,whnl->ehsl", weight, old)
            cur = (new % p).reshape(-1)
    return int(cur[0])


def count_mod(n: int, p: int, backend: str | None = None) -> int:
    """Number of knot n-mosaics modulo ``p`` (``p < 2**59`` keeps int64 sums exact)."""
    if resolve_backend(backend) == "numba":
        return int(_count_mod_numba(n, p))
    return _count_mod_numpy(n, p)
