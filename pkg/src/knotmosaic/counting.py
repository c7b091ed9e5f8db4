"""Counting knot n-mosaics.

``count_mosaics`` runs a cell-by-cell frontier DP modulo several primes and
recombines the residues by the Chinese remainder theorem, so the result is
an exact integer even though the kernels work in int64. Two independent
checks exist: a row transfer matrix in Python integers and a depth-first
brute force over tile assignments.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import KnotMosaicError
from .kernels import count_mod
from .mosaic import BIT, TILE_MASK, E, N, S, W

MAX_DP_N = 12
MAX_MATRIX_N = 10
MAX_BRUTE_N = 4

# largest primes below 2**58; sums of four products stay below 2**63
PRIMES = (
    288230376151711717,
    288230376151711687,
    288230376151711681,
    288230376151711607,
    288230376151711603,
    288230376151711597,
    288230376151711583,
    288230376151711541,
    288230376151711531,
    288230376151711493,
    288230376151711453,
    288230376151711447,
)


def _primes_for(n: int) -> tuple[int, ...]:
    # 11^(n^2) mosaics in total bounds the count
    bound = 11 ** (n * n)
    chosen = []
    product = 1
    for p in PRIMES:
        chosen.append(p)
        product *= p
        if product > bound:
            return tuple(chosen)
    raise KnotMosaicError(f"not enough primes for n={n}")


def _crt(residues, moduli) -> int:
    x, m = 0, 1
    for r, p in zip(residues, moduli):
        # solve x + m*t = r (mod p)
        t = ((r - x) * pow(m, -1, p)) % p
        x += m * t
        m *= p
    return x


def count_mosaics(n: int, threads: int = 1, backend: str | None = None) -> int:
    """Exact number ``D_n`` of knot n-mosaics (the blank mosaic included)."""
    if not 1 <= n <= MAX_DP_N:
        raise KnotMosaicError(f"count_mosaics supports 1 <= n <= {MAX_DP_N}, got {n}")
    primes = _primes_for(n)
    if threads <= 1:
        residues = [count_mod(n, p, backend=backend) for p in primes]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            residues = list(pool.map(lambda p: count_mod(n, p, backend=backend), primes))
    return _crt(residues, primes)


def transfer_matrix(n: int) -> np.ndarray:
    """``T[top, bottom]``: ways to tile one row given its vertical connections.

    Inside a row the horizontal connection between neighbours is forced by
    parity, so each (top, bottom) pair admits at most one pattern; its
    weight is 4 to the number of cells with all four connection points.
    """
    size = 1 << n
    top = np.arange(size)[:, None]
    bottom = np.arange(size)[None, :]
    carry = np.zeros((size, size), dtype=np.int64)
    weight = np.ones((size, size), dtype=np.int64)
    for j in range(n):
        t = (top >> j) & 1
        b = (bottom >> j) & 1
        out = (t + b + carry) & 1
        weight = weight * np.where((t & b & carry & out) == 1, 4, 1)
        carry = out
    return np.where(carry == 0, weight, 0)


def count_mosaics_matrix(n: int) -> int:
    """``D_n`` by iterating the row transfer matrix over Python integers."""
    if not 1 <= n <= MAX_MATRIX_N:
        raise KnotMosaicError(f"transfer-matrix counting supports 1 <= n <= {MAX_MATRIX_N}, got {n}")
    t = transfer_matrix(n).astype(object)
    v = np.zeros(1 << n, dtype=object)
    v[:] = 0
    v[0] = 1
    for _ in range(n):
        v = v.dot(t)
    return int(v[0])


def count_mosaics_bruteforce(n: int) -> int:
    """``D_n`` by assigning tiles cell by cell and pruning on mismatched edges."""
    if not 1 <= n <= MAX_BRUTE_N:
        raise KnotMosaicError(f"brute-force counting supports 1 <= n <= {MAX_BRUTE_N}, got {n}")
    masks = [int(m) for m in TILE_MASK]
    grid = [[0] * n for _ in range(n)]

    def fits(i: int, j: int, mask: int) -> bool:
        if i == 0 and mask & BIT[N]:
            return False
        if j == 0 and mask & BIT[W]:
            return False
        if i == n - 1 and mask & BIT[S]:
            return False
        if j == n - 1 and mask & BIT[E]:
            return False
        if i > 0 and bool(mask & BIT[N]) != bool(grid[i - 1][j] & BIT[S]):
            return False
        if j > 0 and bool(mask & BIT[W]) != bool(grid[i][j - 1] & BIT[E]):
            return False
        return True

    def rec(pos: int) -> int:
        if pos == n * n:
            return 1
        i, j = divmod(pos, n)
        total = 0
        for mask in masks:
            if fits(i, j, mask):
                grid[i][j] = mask
                total += rec(pos + 1)
        grid[i][j] = 0
        return total

    return rec(0)


@dataclass(frozen=True)
class CountTable:
    n: int
    d_n: int
    lower: Fraction | None
    upper: Fraction | None

    def to_dict(self) -> dict:
        frac = lambda f: None if f is None else f"{f.numerator}/{f.denominator}"  # noqa: E731
        return {"n": self.n, "count": str(self.d_n), "lower": frac(self.lower), "upper": frac(self.upper)}


def hllo_bounds(n: int) -> tuple[Fraction, Fraction]:
    """Lower and upper bounds on ``D_n`` for ``n >= 3`` as exact fractions."""
    if n < 3:
        raise KnotMosaicError(f"the bounds need n >= 3, got {n}")
    base = Fraction(2, 275) * (9 * 6 ** (n - 2) + 1) ** 2
    exponent = (n - 3) ** 2
    return base * 2**exponent, base * Fraction(22, 5) ** exponent


def count_table(n: int, method: str = "dp", threads: int = 1, backend: str | None = None) -> CountTable:
    if method == "dp":
        d = count_mosaics(n, threads=threads, backend=backend)
    elif method == "matrix":
        d = count_mosaics_matrix(n)
    elif method == "brute":
        d = count_mosaics_bruteforce(n)
    else:
        raise KnotMosaicError(f"unknown counting method {method!r}")
    lower, upper = hllo_bounds(n) if n >= 3 else (None, None)
    return CountTable(n, d, lower, upper)


def decimal(f: Fraction, digits: int = 6) -> str:
    """Presentation-only decimal rendering of a fraction."""
    q = f * 10**digits
    whole = math.floor(q)
    s = str(whole).rjust(digits + 1, "0")
    return f"{s[:-digits]}.{s[-digits:]}"
