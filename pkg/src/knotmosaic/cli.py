"""Command line front end: ``knotmosaic VERB ...``.

Grids travel as one-line JSON, mosaics as the plain text format. Commands
that accept either detect the format from the first character.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .convert import grid_to_mosaic, mosaic_to_grid, mosaic_to_pd
from .counting import count_table, decimal
from .errors import KnotMosaicError
from .families import chain_mosaic, necklace_mosaic
from .grid import (
    CORNERS,
    GridDiagram,
    cyclic_permute_cols,
    cyclic_permute_rows,
    destabilize,
    interchange_cols,
    interchange_rows,
    parse_grid,
    recognize_torus_grid,
    stabilize,
    torus_grid,
    unknot_grid,
)
from .invariants import bracket_of, linking_numbers, normalize, pd_fingerprint, writhe
from .mosaic import Mosaic, crossing_count, parse_mosaic
from .reduce import reduce, reduce_torus_double
from .render import render_ascii, render_svg


def _read(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load(path: str | None) -> GridDiagram | Mosaic:
    text = _read(path)
    if text.lstrip().startswith("{"):
        return parse_grid(text)
    return parse_mosaic(text)


def _as_mosaic(obj: GridDiagram | Mosaic) -> Mosaic:
    return grid_to_mosaic(obj) if isinstance(obj, GridDiagram) else obj


def _as_grid(obj: GridDiagram | Mosaic) -> GridDiagram:
    return obj if isinstance(obj, GridDiagram) else mosaic_to_grid(obj)


def _write(text: str, path: str | None = None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


# ---------------------------------------------------------------------------
# verbs


def cmd_generate(args) -> int:
    if args.family == "torus":
        if len(args.params) != 2:
            raise KnotMosaicError("generate torus needs P and Q")
        _write(torus_grid(*args.params).to_json() + "\n")
    elif args.family == "unknot":
        if args.params:
            raise KnotMosaicError("generate unknot takes no parameters")
        _write(unknot_grid().to_json() + "\n")
    else:
        if len(args.params) != 1:
            raise KnotMosaicError(f"generate {args.family} needs K")
        build = chain_mosaic if args.family == "chain" else necklace_mosaic
        _write(build(args.params[0], compact=args.compact).to_text())
    return 0


def cmd_convert(args) -> int:
    _write(grid_to_mosaic(_as_grid(_load(args.file))).to_text())
    return 0


def cmd_reduce(args) -> int:
    g = _as_grid(_load(args.file))
    if args.torus_double:
        pq = recognize_torus_grid(g)
        if pq is None:
            raise KnotMosaicError("--torus-double needs a torus grid as made by 'generate torus'")
        m = reduce_torus_double(*pq)
    else:
        m = reduce(g)
    _write(m.to_text())
    return 0


def cmd_move(args) -> int:
    g = _as_grid(_load(args.file))
    if args.move == "cyclic":
        out = (cyclic_permute_rows if args.axis == "rows" else cyclic_permute_cols)(g, args.k)
    elif args.move == "stabilize":
        out = stabilize(g, args.row, args.marker, args.corner)
    elif args.move == "destabilize":
        out = destabilize(g, args.row, args.col)
    else:
        out = (interchange_rows if args.axis == "rows" else interchange_cols)(g, args.index)
    _write(out.to_json() + "\n")
    return 0


def cmd_analyze(args) -> int:
    m = _as_mosaic(_load(args.file))
    pd = mosaic_to_pd(m)
    report: dict = {
        "size": m.size,
        "components": pd.component_count,
        "crossings": crossing_count(m),
    }
    if pd.component_count:
        bracket = bracket_of(m, method=args.method)
        fp = pd_fingerprint(pd, bracket=bracket)
        report["bracket"] = str(bracket)
        report["writhe"] = writhe(pd)
        report["normalized"] = str(normalize(bracket, writhe(pd)))
        report["linking"] = {f"{a + 1}-{b + 1}": v for (a, b), v in sorted(linking_numbers(pd).items())}
        report["fingerprint"] = [str(b) for b in fp.brackets]
    else:
        report["fingerprint"] = []
    if args.json:
        _write(json.dumps(report) + "\n")
    else:
        lines = [f"size: {report['size']}", f"components: {report['components']}", f"crossings: {report['crossings']}"]
        for key in ("bracket", "writhe", "normalized"):
            if key in report:
                lines.append(f"{key}: {report[key]}")
        for pair, v in report.get("linking", {}).items():
            lines.append(f"linking {pair}: {v}")
        for value in report["fingerprint"]:
            lines.append(f"fingerprint: {value}")
        _write("\n".join(lines) + "\n")
    if args.pd:
        _write(pd.to_text())
    return 0


def cmd_count(args) -> int:
    table = count_table(args.n, method=args.method, threads=args.threads, backend=args.backend)
    if args.json:
        _write(json.dumps(table.to_dict(), separators=(",", ":")) + "\n")
        return 0
    lines = [str(table.d_n)]
    if args.bounds and table.lower is not None:
        lines.append(f"lower: {decimal(table.lower)}")
        lines.append(f"upper: {decimal(table.upper)}")
    _write("\n".join(lines) + "\n")
    return 0


def cmd_render(args) -> int:
    m = _as_mosaic(_load(args.file))
    _write(render_ascii(m) if args.format == "ascii" else render_svg(m), args.output)
    return 0


def cmd_verify(args) -> int:
    m1 = _as_mosaic(_load(args.a))
    m2 = _as_mosaic(_load(args.b))
    fp1 = pd_fingerprint(mosaic_to_pd(m1), bracket=bracket_of(m1, method=args.method) if m1.array().any() else None)
    fp2 = pd_fingerprint(mosaic_to_pd(m2), bracket=bracket_of(m2, method=args.method) if m2.array().any() else None)
    if fp1 == fp2:
        _write("EQUIVALENT\n")
        return 0
    _write(f"NOT EQUIVALENT\n  {args.a}: {fp1}\n  {args.b}: {fp2}\n")
    return 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="knotmosaic", description="Knot mosaics from grid diagrams.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("generate", help="print a named grid or mosaic")
    p.add_argument("family", choices=["torus", "chain", "necklace", "unknot"])
    p.add_argument("params", type=int, nargs="*")
    p.add_argument("--compact", action="store_true", help="smaller chain/necklace layout")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("convert", help="grid JSON to mosaic text")
    p.add_argument("file", nargs="?")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("reduce", help="mosaic smaller than the grid")
    p.add_argument("file", nargs="?")
    p.add_argument("--torus-double", action="store_true", help="slide twice (torus grids, q >= p + 2)")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("move", help="apply one grid move")
    moves = p.add_subparsers(dest="move", required=True)
    m = moves.add_parser("cyclic")
    m.add_argument("--axis", choices=["rows", "cols"], default="rows")
    m.add_argument("--k", type=int, default=1)
    m.add_argument("file", nargs="?")
    m = moves.add_parser("stabilize")
    m.add_argument("--row", type=int, required=True)
    m.add_argument("--marker", choices=["X", "O"], required=True)
    m.add_argument("--corner", choices=list(CORNERS), required=True)
    m.add_argument("file", nargs="?")
    m = moves.add_parser("destabilize")
    m.add_argument("--row", type=int, required=True)
    m.add_argument("--col", type=int, required=True)
    m.add_argument("file", nargs="?")
    m = moves.add_parser("interchange")
    m.add_argument("--axis", choices=["rows", "cols"], default="rows")
    m.add_argument("--index", type=int, required=True)
    m.add_argument("file", nargs="?")
    p.set_defaults(func=cmd_move)

    p = sub.add_parser("analyze", help="components, crossings, bracket, fingerprint")
    p.add_argument("file", nargs="?")
    p.add_argument("--json", action="store_true")
    p.add_argument("--pd", action="store_true", help="append the PD code")
    p.add_argument("--method", choices=["statesum", "frontier"], default="statesum")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("count", help="number of knot n-mosaics")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=["dp", "matrix", "brute"], default="dp")
    p.add_argument("--json", action="store_true")
    p.add_argument("--bounds", action="store_true", help="also print the bounds")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--backend", choices=["numba", "numpy"], default=None)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("render", help="draw a mosaic")
    p.add_argument("format", choices=["ascii", "svg"])
    p.add_argument("file", nargs="?")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("verify", help="validate two inputs and compare fingerprints")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--method", choices=["statesum", "frontier"], default="statesum")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (KnotMosaicError, OSError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
