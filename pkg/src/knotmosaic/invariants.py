"""Kauffman bracket, writhe and the link-type fingerprint used as an oracle.

The fingerprint is a necessary condition for two mosaics to represent the
same link: equal fingerprints do not prove equivalence, different ones
disprove it.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .convert import PlanarDiagram, crossing_sign, mosaic_to_pd
from .errors import KnotMosaicError, TooManyCrossingsError
from .kernels import state_histogram
from .laurent import LOOP, LaurentPolynomial
from .mosaic import CROSSINGS, HORIZONTAL_OVER, STRANDS, E, Mosaic, N, S, W

MAX_CROSSINGS = 20


def _histogram(pd: PlanarDiagram, backend: str | None, threads: int) -> np.ndarray:
    table = pd.smoothing_table()
    total = 1 << pd.crossing_count
    if threads <= 1 or total < 1 << 12:
        return state_histogram(table, pd.n_arcs, 0, total, backend=backend)
    bounds = np.linspace(0, total, threads + 1).astype(np.int64)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = pool.map(
            lambda lo_hi: state_histogram(table, pd.n_arcs, int(lo_hi[0]), int(lo_hi[1]), backend=backend),
            zip(bounds[:-1], bounds[1:]),
        )
        return sum(parts)


def kauffman_bracket(pd: PlanarDiagram, backend: str | None = None, threads: int = 1) -> LaurentPolynomial:
    """State sum over all smoothings: ``sum A^(a-b) d^(loops-1)`` with ``d = -A^2 - A^-2``."""
    c = pd.crossing_count
    if c > MAX_CROSSINGS:
        raise TooManyCrossingsError(f"{c} crossings exceeds the state-sum limit of {MAX_CROSSINGS}")
    if pd.component_count == 0:
        raise KnotMosaicError("the bracket of the empty diagram is undefined")
    free = pd.free_loops
    if c == 0:
        return LOOP ** (free - 1)
    # free components are arcs of their own, so ``loops`` already counts them
    hist = _histogram(pd, backend, threads)
    loop_powers: dict[int, LaurentPolynomial] = {}
    total = LaurentPolynomial()
    for nb, loops in zip(*np.nonzero(hist)):
        count = int(hist[nb, loops])
        k = int(loops) - 1
        if k not in loop_powers:
            loop_powers[k] = LOOP ** k
        total = total + (loop_powers[k] * count).shift(c - 2 * int(nb))
    return total


# A and B smoothings as joined port pairs, matching ``Crossing.smoothing_pairs``
_SMOOTHINGS = {
    HORIZONTAL_OVER - 1: (((N, E), (S, W)), ((N, W), (S, E))),
    HORIZONTAL_OVER: (((N, W), (S, E)), ((N, E), (S, W))),
}


def _join(state: tuple[int, ...], j: int, pairs) -> tuple[tuple[int, ...], int]:
    """Glue one cell onto the frontier; return the new frontier and closed loops.

    ``state[k]`` is the slot paired with slot ``k`` (or -1). Slots ``0..n-1``
    hang below the columns, slot ``n`` points east out of the previous cell.
    """
    n = len(state) - 1
    south, east = n + 1, n + 2
    node = {N: j, W: n, S: south, E: east}
    link = {}
    for p, q in pairs:
        link[node[p]] = node[q]
        link[node[q]] = node[p]

    def walk(x: int, via_cell: bool) -> int:
        while True:
            y = link[x] if via_cell else state[x]
            if via_cell:
                if y > n:
                    return y
            elif y != j and y != n:
                return y
            x, via_cell = y, not via_cell

    out = list(state)
    out[j] = out[n] = -1
    for k in range(n + 1):
        if k != j and k != n and state[k] >= 0:
            e = walk(k, False)
            out[k] = j if e == south else n if e == east else e
    for new, slot in ((south, j), (east, n)):
        if new in link:
            e = walk(new, True)
            out[slot] = j if e == south else n if e == east else e
    loops = int(link.get(j) == n and state[j] == n)
    return tuple(out), loops


def _times(poly: dict[int, int], shift: int, loops: int) -> dict[int, int]:
    out = {e + shift: c for e, c in poly.items()}
    for _ in range(loops):
        acc: dict[int, int] = {}
        for e, c in out.items():
            acc[e + 2] = acc.get(e + 2, 0) - c
            acc[e - 2] = acc.get(e - 2, 0) - c
        out = {e: c for e, c in acc.items() if c}
    return out


def _divide_by_loop(poly: dict[int, int]) -> LaurentPolynomial:
    rest = dict(poly)
    quotient: dict[int, int] = {}
    while rest:
        top = max(rest)
        q = -rest[top]
        quotient[top - 2] = q
        for e in (top, top - 4):
            rest[e] = rest.get(e, 0) + q
            if not rest[e]:
                del rest[e]
        if rest and max(rest) >= top:
            raise ArithmeticError("state polynomial is not divisible by the loop value")
    return LaurentPolynomial(quotient)


def frontier_bracket(m: Mosaic) -> LaurentPolynomial:
    """Kauffman bracket by sweeping the mosaic cell by cell.

    The frontier holds how the dangling strand ends are paired up, with a
    polynomial per pairing, so the cost grows with the mosaic width rather
    than with ``2^crossings``. No crossing limit applies.
    """
    a = m.array()
    n = m.size
    if not a.any():
        raise KnotMosaicError("the bracket of the empty diagram is undefined")
    empty = (-1,) * (n + 1)
    states: dict[tuple[int, ...], dict[int, int]] = {empty: {0: 1}}
    for i in range(n):
        for j in range(n):
            t = int(a[i, j])
            options = [(_SMOOTHINGS[t][0], 1), (_SMOOTHINGS[t][1], -1)] if t in CROSSINGS else [(STRANDS[t], 0)]
            nxt: dict[tuple[int, ...], dict[int, int]] = {}
            for st, poly in states.items():
                for pairs, shift in options:
                    new, loops = _join(st, j, pairs)
                    acc = nxt.setdefault(new, {})
                    for e, c in _times(poly, shift, loops).items():
                        acc[e] = acc.get(e, 0) + c
            states = {st: {e: c for e, c in p.items() if c} for st, p in nxt.items()}
    return _divide_by_loop(states.get(empty, {}))


def writhe(pd: PlanarDiagram, orientation: tuple[bool, ...] | None = None) -> int:
    """Sum of crossing signs; ``orientation[c]`` False reverses component ``c``."""
    if orientation is not None and len(orientation) != pd.component_count:
        raise ValueError(
            f"orientation has {len(orientation)} entries for {pd.component_count} components"
        )
    return sum(crossing_sign(x, orientation) for x in pd.crossings)


def normalize(bracket: LaurentPolynomial, w: int) -> LaurentPolynomial:
    """``(-A^3)^(-w) * bracket``."""
    return bracket.shift(-3 * w) * (-1 if w % 2 else 1)


def linking_numbers(pd: PlanarDiagram, orientation: tuple[bool, ...] | None = None) -> dict[tuple[int, int], int]:
    """Linking number of every pair of components that cross each other."""
    sums: dict[tuple[int, int], int] = {}
    for x in pd.crossings:
        a, b = x.vertical[0], x.horizontal[0]
        if a == b:
            continue
        key = (min(a, b), max(a, b))
        sums[key] = sums.get(key, 0) + crossing_sign(x, orientation)
    return {k: v // 2 for k, v in sums.items()}


@dataclass(frozen=True)
class Fingerprint:
    component_count: int
    brackets: tuple[LaurentPolynomial, ...]  # sorted multiset, one per orientation class

    def __str__(self) -> str:
        body = "; ".join(str(b) for b in self.brackets)
        return f"components={self.component_count} brackets=[{body}]"


def pd_fingerprint(pd: PlanarDiagram, backend: str | None = None,
                   bracket: LaurentPolynomial | None = None) -> Fingerprint:
    k = pd.component_count
    if k == 0:
        return Fingerprint(0, ())
    if bracket is None:
        bracket = kauffman_bracket(pd, backend=backend)
    values = []
    # component 0 keeps its traced direction: reversing everything changes nothing
    for flips in itertools.product((True, False), repeat=k - 1):
        orientation = (True,) + flips
        values.append(normalize(bracket, writhe(pd, orientation)))
    return Fingerprint(k, tuple(sorted(values, key=LaurentPolynomial.sort_key)))


def fingerprint(m: Mosaic, backend: str | None = None, method: str = "statesum") -> Fingerprint:
    """``method`` is ``"statesum"`` (capped at MAX_CROSSINGS) or ``"frontier"``."""
    pd = mosaic_to_pd(m)
    if pd.component_count == 0:
        return Fingerprint(0, ())
    return pd_fingerprint(pd, backend=backend, bracket=bracket_of(m, backend=backend, method=method))


def equivalent(m1: Mosaic, m2: Mosaic, method: str = "statesum") -> bool:
    """Fingerprint equality: necessary for the two mosaics to show the same link."""
    return fingerprint(m1, method=method) == fingerprint(m2, method=method)


def bracket_of(m: Mosaic, backend: str | None = None, method: str = "statesum") -> LaurentPolynomial:
    if method == "statesum":
        return kauffman_bracket(mosaic_to_pd(m), backend=backend)
    if method == "frontier":
        return frontier_bracket(m)
    raise ValueError(f"unknown bracket method {method!r}")


__all__ = [
    "Fingerprint",
    "MAX_CROSSINGS",
    "bracket_of",
    "equivalent",
    "fingerprint",
    "frontier_bracket",
    "kauffman_bracket",
    "linking_numbers",
    "normalize",
    "pd_fingerprint",
    "writhe",
]
