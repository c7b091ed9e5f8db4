import itertools
import random

import numpy as np
import pytest

from knotmosaic.convert import grid_to_mosaic, mosaic_to_pd
from knotmosaic.errors import KnotMosaicError, ReductionError
from knotmosaic.families import chain_mosaic, draw_rings, necklace_mosaic
from knotmosaic.grid import GridDiagram, rectangle_grid, torus_grid, trace_components, unknot_grid
from knotmosaic.invariants import fingerprint, linking_numbers
from knotmosaic.mosaic import crossing_count, mosaic_from_rows, suitably_connected
from knotmosaic.reduce import classify_rect_link, plan_case1, reduce, reduce_case1, reduce_torus_double

from _support import random_grid

TREFOIL_4 = mosaic_from_rows(["0210", "2A91", "3945", "0364"])
HOPF_GRID = GridDiagram(4, [1, 2, 3, 4], [3, 4, 1, 2])
CHAIN_3 = rectangle_grid([(4, 6, 3, 6), (1, 3, 1, 4), (2, 5, 2, 5)])
CHAIN_4 = rectangle_grid([(1, 3, 2, 6), (4, 7, 3, 7), (2, 5, 4, 8), (6, 8, 1, 5)])
CHAIN_5 = rectangle_grid([(6, 8, 7, 9), (2, 5, 2, 6), (1, 4, 1, 3), (3, 9, 5, 10), (7, 10, 4, 8)])
NECKLACE_4 = rectangle_grid([(4, 7, 3, 6), (2, 6, 5, 8), (1, 5, 1, 4), (3, 8, 2, 7)])


def fp(m):
    return fingerprint(m, method="statesum" if crossing_count(m) <= 16 else "frontier")


def torus_pairs():
    return [(p, q) for q in range(3, 8) for p in range(2, q)]


def test_case1_trefoil():
    m = reduce_case1(torus_grid(2, 3))
    assert m == TREFOIL_4
    assert m.size == 4 and suitably_connected(m)
    assert fingerprint(m) == fingerprint(grid_to_mosaic(torus_grid(2, 3)))


def test_case1_t34():
    g = torus_grid(3, 4)
    m = reduce_case1(g)
    assert m.size == 6
    assert fingerprint(m) == fingerprint(grid_to_mosaic(g))


@pytest.mark.parametrize("p, q", torus_pairs())
def test_case1_all_torus_grids(p, q):
    g = torus_grid(p, q)
    m = reduce_case1(g)
    assert m.size == g.size - 1
    assert suitably_connected(m)
    assert fp(m) == fp(grid_to_mosaic(g))


def test_case1_random_grids():
    rng = random.Random(42)
    checked = 0
    while checked < 1000:
        g = random_grid(rng.randint(3, 8), rng)
        if all(c.is_rectangular for c in trace_components(g)):
            continue
        m = reduce_case1(g)
        assert m.size == g.size - 1
        assert suitably_connected(m)
        assert fp(m) == fp(grid_to_mosaic(g)), g
        checked += 1


def test_crossing_bookkeeping():
    rng = random.Random(5)
    lost = 0
    for _ in range(500):
        g = random_grid(rng.randint(3, 9), rng)
        if all(c.is_rectangular for c in trace_components(g)):
            continue
        plan = plan_case1(g)
        before = crossing_count(grid_to_mosaic(plan.grid))
        assert crossing_count(reduce_case1(g)) == before + plan.added - plan.removed
        lost += plan.removed > 0
    # crossings on the shortened verticals really do disappear
    assert lost > 0


def test_case1_plan_betweenness():
    plan = plan_case1(torus_grid(3, 5))
    lo, hi = sorted((plan.long_col, plan.far_col))
    assert lo < plan.short_col < hi
    assert plan.target_row > 1


def test_case1_needs_non_rectangular_component():
    with pytest.raises(ReductionError):
        reduce_case1(HOPF_GRID)
    with pytest.raises(ReductionError):
        reduce_case1(unknot_grid())


def test_case1_deterministic():
    g = torus_grid(3, 7)
    assert reduce_case1(g) == reduce_case1(g)


@pytest.mark.parametrize("p, q", [(p, q) for p, q in torus_pairs() if q >= p + 2])
def test_double_slide(p, q):
    m = reduce_torus_double(p, q)
    assert m.size == p + q - 2
    assert suitably_connected(m)
    assert fp(m) == fp(grid_to_mosaic(torus_grid(p, q)))


def test_double_slide_examples():
    assert reduce_torus_double(3, 5).size == 6
    assert reduce_torus_double(2, 5).size == 5
    for p, q in [(2, 3), (3, 4), (1, 5)]:
        with pytest.raises(ReductionError):
            reduce_torus_double(p, q)


def test_classify():
    assert str(classify_rect_link(CHAIN_3)) == "chain(3)"
    assert str(classify_rect_link(CHAIN_4)) == "chain(4)"
    assert str(classify_rect_link(CHAIN_5)) == "chain(5)"
    assert str(classify_rect_link(NECKLACE_4)) == "necklace(4)"
    hopf = classify_rect_link(HOPF_GRID)
    assert hopf.kind == "other" and hopf.k == 2
    assert classify_rect_link(unknot_grid()).kind == "other"
    # two unlinked rectangles that still cross
    assert classify_rect_link(rectangle_grid([(1, 4, 2, 3), (2, 3, 1, 4)])).kind == "other"
    with pytest.raises(ReductionError):
        classify_rect_link(torus_grid(2, 3))


def test_reduce_dispatch():
    assert reduce(torus_grid(2, 3)) == TREFOIL_4
    hopf = reduce(HOPF_GRID)
    assert hopf == grid_to_mosaic(HOPF_GRID) and hopf.size == 4
    assert reduce(unknot_grid()).to_text() == "2\n21\n34\n"
    for g, size in [(CHAIN_3, 5), (CHAIN_4, 7), (CHAIN_5, 9), (NECKLACE_4, 6)]:
        m = reduce(g)
        assert m.size == size
        assert fingerprint(m) == fingerprint(grid_to_mosaic(g))


def test_reduce_never_grows():
    rng = random.Random(9)
    for _ in range(200):
        g = random_grid(rng.randint(2, 8), rng)
        m = reduce(g)
        assert m.size <= g.size
        assert suitably_connected(m)


@pytest.mark.parametrize("k", range(3, 9))
def test_chain_mosaic(k):
    m = chain_mosaic(k)
    pd = mosaic_to_pd(m)
    assert m.size == 2 * k - 1
    assert suitably_connected(m)
    assert pd.component_count == k and pd.crossing_count == 2 * k - 2
    assert sorted(linking_numbers(pd)) == [(i, i + 1) for i in range(k - 1)]
    assert all(abs(v) == 1 for v in linking_numbers(pd).values())
    small = chain_mosaic(k, compact=True)
    assert small.size == k + 2
    assert fingerprint(small) == fingerprint(m)


@pytest.mark.parametrize("k", range(4, 9))
def test_necklace_mosaic(k):
    m = necklace_mosaic(k)
    pd = mosaic_to_pd(m)
    assert m.size == 2 * k - 2
    assert suitably_connected(m)
    assert pd.component_count == k and pd.crossing_count == 2 * k
    lk = linking_numbers(pd)
    assert len(lk) == k and all(abs(v) == 1 for v in lk.values())
    degree = np.bincount([v for pair in lk for v in pair], minlength=k)
    assert (degree == 2).all()
    assert necklace_mosaic(k, compact=True).size == k + 2


def test_family_errors():
    with pytest.raises(KnotMosaicError):
        chain_mosaic(2)
    with pytest.raises(KnotMosaicError):
        necklace_mosaic(3)
    with pytest.raises(KnotMosaicError):
        chain_mosaic(3, flips=[True])
    with pytest.raises(KnotMosaicError):
        draw_rings(3, [(0, 3, 0, 3)], [])


def test_chain_clasp_flips_give_one_link():
    for k in (3, 4):
        values = {fingerprint(chain_mosaic(k, flips=f)) for f in itertools.product([False, True], repeat=k - 1)}
        assert len(values) == 1


def test_fixed_mosaics():
    assert chain_mosaic(3).to_text() == "5\n26100\n52910\n39791\n03945\n00364\n"
    assert chain_mosaic(4).to_text() == "7\n2661000\n5005000\n5029100\n3697910\n0039791\n0003945\n0000364\n"
    assert necklace_mosaic(4).to_text() == "6\n266610\n521291\n3A9945\n2A9915\n534394\n366640\n"
