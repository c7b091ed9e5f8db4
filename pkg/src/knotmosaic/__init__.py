"""Knot mosaics built from grid diagrams."""
from .convert import PlanarDiagram, grid_to_mosaic, mosaic_to_grid, mosaic_to_pd
from .counting import (
    CountTable,
    count_mosaics,
    count_mosaics_bruteforce,
    count_mosaics_matrix,
    count_table,
    hllo_bounds,
)
from .errors import (
    InvalidGridError,
    InvalidMosaicError,
    KnotMosaicError,
    MoveError,
    ReductionError,
    TooManyCrossingsError,
)
from .families import chain_mosaic, necklace_mosaic
from .grid import (
    Component,
    GridDiagram,
    GridEdge,
    cyclic_permute_cols,
    cyclic_permute_rows,
    destabilize,
    interchange_cols,
    interchange_rows,
    parse_grid,
    stabilize,
    torus_grid,
    trace_components,
    unknot_grid,
    validate_grid,
)
from .invariants import (
    Fingerprint,
    bracket_of,
    equivalent,
    fingerprint,
    frontier_bracket,
    kauffman_bracket,
    linking_numbers,
    normalize,
    writhe,
)
from .laurent import LaurentPolynomial
from .mosaic import Mosaic, connection_points, crossing_count, parse_mosaic, suitably_connected
from .reduce import classify_rect_link, reduce, reduce_case1, reduce_torus_double
from .render import render_ascii, render_svg

__version__ = "0.1.0"
