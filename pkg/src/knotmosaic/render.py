"""Plain-text and SVG drawings of mosaics."""
from __future__ import annotations

from .mosaic import BIT, STRANDS, Mosaic, N, E, S, W

# 5 characters wide, 3 rows tall per tile
_ASCII = {
    0: ("     ", "     ", "     "),
    1: ("     ", "--.  ", "  |  "),
    2: ("     ", "  .--", "  |  "),
    3: ("  |  ", "  '--", "     "),
    4: ("  |  ", "--'  ", "     "),
    5: ("  |  ", "  |  ", "  |  "),
    6: ("     ", "-----", "     "),
    7: ("  |  ", "-' .-", "  |  "),
    8: ("  |  ", "-. '-", "  |  "),
    9: ("  |  ", "- | -", "  |  "),
    10: ("  |  ", "-----", "  |  "),
}


def render_ascii(m: Mosaic) -> str:
    """Draw ``m`` inside a frame, each tile as a 5x3 block of ASCII characters."""
    width = 5 * m.size
    lines = ["+" + "-" * width + "+"]
    for row in m.tiles:
        for k in range(3):
            lines.append("|" + "".join(_ASCII[t][k] for t in row) + "|")
    lines.append("+" + "-" * width + "+")
    return "\n".join(lines) + "\n"


CELL = 64
_HALF = CELL // 2
_GAP = 10
_MID = {N: (_HALF, 0), E: (CELL, _HALF), S: (_HALF, CELL), W: (0, _HALF)}
_CORNER = {
    frozenset((N, W)): (0, 0),
    frozenset((N, E)): (CELL, 0),
    frozenset((S, E)): (CELL, CELL),
    frozenset((S, W)): (0, CELL),
}


def _arc(x0: int, y0: int, a: str, b: str) -> str:
    (ax, ay), (bx, by) = _MID[a], _MID[b]
    cx, cy = _CORNER[frozenset((a, b))]
    # sweep 1 when a->b turns clockwise on screen around the corner
    sweep = 1 if (ax - cx) * (by - cy) - (ay - cy) * (bx - cx) > 0 else 0
    return (
        f'<path d="M {x0 + ax} {y0 + ay} A {_HALF} {_HALF} 0 0 {sweep} {x0 + bx} {y0 + by}"/>'
    )


def _line(x0: int, y0: int, a: str, b: str) -> str:
    (ax, ay), (bx, by) = _MID[a], _MID[b]
    return f'<line x1="{x0 + ax}" y1="{y0 + ay}" x2="{x0 + bx}" y2="{y0 + by}"/>'


def _under(x0: int, y0: int, a: str, b: str) -> str:
    (ax, ay), (bx, by) = _MID[a], _MID[b]
    parts = []
    for (px, py) in ((ax, ay), (bx, by)):
        # stop short of the centre, leaving a gap for the over-strand
        qx = _HALF + _GAP * ((px > _HALF) - (px < _HALF))
        qy = _HALF + _GAP * ((py > _HALF) - (py < _HALF))
        parts.append(
            f'<line x1="{x0 + px}" y1="{y0 + py}" x2="{x0 + qx}" y2="{y0 + qy}"/>'
        )
    return "".join(parts)


def render_svg(m: Mosaic) -> str:
    n = m.size
    side = n * CELL
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{side}" height="{side}" '
        f'viewBox="0 0 {side} {side}">',
        f'<g fill="none" stroke="#cccccc" stroke-width="1">',
    ]
    for k in range(n + 1):
        out.append(f'<line x1="0" y1="{k * CELL}" x2="{side}" y2="{k * CELL}"/>')
        out.append(f'<line x1="{k * CELL}" y1="0" x2="{k * CELL}" y2="{side}"/>')
    out.append("</g>")
    out.append('<g fill="none" stroke="#000000" stroke-width="4" stroke-linecap="round">')
    for i, row in enumerate(m.tiles):
        for j, t in enumerate(row):
            x0, y0 = j * CELL, i * CELL
            if t in (9, 10):
                over, under = STRANDS[t]
                out.append(_under(x0, y0, *under))
                out.append(_line(x0, y0, *over))
                continue
            for a, b in STRANDS[t]:
                if BIT[a] | BIT[b] in (BIT[N] | BIT[S], BIT[E] | BIT[W]):
                    out.append(_line(x0, y0, a, b))
                else:
                    out.append(_arc(x0, y0, a, b))
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
