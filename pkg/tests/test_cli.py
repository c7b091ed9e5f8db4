import io
import json
import subprocess
import sys
import xml.etree.ElementTree as ET
from contextlib import redirect_stderr, redirect_stdout

import pytest

from knotmosaic.cli import main
from knotmosaic.convert import grid_to_mosaic
from knotmosaic.grid import parse_grid, torus_grid
from knotmosaic.invariants import fingerprint
from knotmosaic.mosaic import parse_mosaic


def run(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    old = sys.stdin
    sys.stdin = io.StringIO(stdin)
    try:
        with redirect_stdout(out), redirect_stderr(err):
            try:
                code = main(argv)
            except SystemExit as exc:
                code = exc.code
    finally:
        sys.stdin = old
    return code, out.getvalue(), err.getvalue()


def ok(argv, stdin=""):
    code, out, err = run(argv, stdin)
    assert code == 0, err
    return out


def test_generate():
    assert ok(["generate", "torus", "2", "3"]) == torus_grid(2, 3).to_json() + "\n"
    assert ok(["generate", "unknot"]) == '{"size": 2, "x": [1, 2], "o": [2, 1]}\n'
    assert parse_mosaic(ok(["generate", "chain", "3"])).size == 5
    assert parse_mosaic(ok(["generate", "necklace", "4"])).size == 6
    assert parse_mosaic(ok(["generate", "necklace", "5", "--compact"])).size == 7


def test_count():
    assert ok(["count", "--n", "3"]) == "22\n"
    assert ok(["count", "--n", "4", "--json"]) == '{"n":4,"count":"2594","lower":"16900/11","upper":"3380/1"}\n'
    assert ok(["count", "--n", "4", "--bounds"]) == "2594\nlower: 1536.363636\nupper: 3380.000000\n"
    assert ok(["count", "--n", "4", "--method", "brute"]) == "2594\n"
    assert ok(["count", "--n", "7", "--method", "matrix"]) == ok(["count", "--n", "7", "--threads", "3"])


def test_pipeline_trefoil():
    grid = ok(["generate", "torus", "2", "3"])
    mosaic = ok(["convert"], grid)
    assert mosaic == "5\n26100\n52910\n55391\n39645\n03664\n"
    reduced = ok(["reduce"], mosaic)
    assert reduced == "4\n0210\n2A91\n3945\n0364\n"
    report = json.loads(ok(["analyze", "--json"], reduced))
    assert report["size"] == 4 and report["components"] == 1 and report["crossings"] == 3
    assert report["bracket"] == "A^-7 - A^-3 - A^5"
    assert report["fingerprint"] == ["-A^-16 + A^-12 + A^-4"]


@pytest.mark.parametrize("p, q", [(p, q) for q in range(3, 8) for p in range(2, q)])
def test_pipeline_all_torus_pairs(p, q):
    grid = ok(["generate", "torus", str(p), str(q)])
    reduced = ok(["reduce"], ok(["convert"], grid))
    report = json.loads(ok(["analyze", "--json", "--method", "frontier"], reduced))
    assert report["size"] == p + q - 1
    expected = fingerprint(grid_to_mosaic(torus_grid(p, q)), method="frontier")
    assert report["fingerprint"] == [str(b) for b in expected.brackets]


def test_reduce_torus_double():
    grid = ok(["generate", "torus", "3", "5"])
    assert parse_mosaic(ok(["reduce", "--torus-double"], grid)).size == 6
    code, _, err = run(["reduce", "--torus-double"], ok(["generate", "torus", "2", "3"]))
    assert code == 1 and "q >= p + 2" in err
    code, _, err = run(["reduce", "--torus-double"], ok(["generate", "unknot"]))
    assert code == 1 and "torus grid" in err


def test_analyze_text_and_pd():
    out = ok(["analyze", "--pd"], "4\n2610\n5291\n3945\n0364\n")
    assert out.splitlines()[:4] == ["size: 4", "components: 2", "crossings: 2", "bracket: -A^-4 - A^4"]
    assert "linking 1-2: 1" in out
    assert out.endswith("X 3 2 4 1\nX 2 3 1 4\nC 1 2\nC 3 4\n")
    assert ok(["analyze"], "3\n000\n000\n000\n") == "size: 3\ncomponents: 0\ncrossings: 0\n"


def test_move():
    grid = ok(["generate", "torus", "2", "3"])
    moved = ok(["move", "cyclic", "--axis", "cols", "--k", "2"], grid)
    assert parse_grid(moved).size == 5
    stab = ok(["move", "stabilize", "--row", "1", "--marker", "X", "--corner", "SE"], grid)
    assert parse_grid(stab).size == 6
    back = ok(["move", "destabilize", "--row", "1", "--col", "3"], stab)
    assert back == grid
    code, _, err = run(["move", "interchange", "--index", "1"], grid)
    assert code == 1 and "interleave" in err


def test_verify(tmp_path):
    a = tmp_path / "a.mosaic"
    b = tmp_path / "b.mosaic"
    c = tmp_path / "c.mosaic"
    a.write_text(ok(["convert"], ok(["generate", "torus", "2", "3"])))
    b.write_text(ok(["reduce"], a.read_text()))
    c.write_text("2\n21\n34\n")
    assert ok(["verify", str(a), str(b)]) == "EQUIVALENT\n"
    code, out, _ = run(["verify", str(a), str(c)])
    assert code == 1 and out.startswith("NOT EQUIVALENT")
    code, _, err = run(["verify", str(a), str(tmp_path / "missing")])
    assert code == 1 and "error:" in err
    bad = tmp_path / "bad.mosaic"
    bad.write_text("2\n21\n35\n")
    code, _, err = run(["verify", str(a), str(bad)])
    assert code == 1 and "not suitably connected" in err


def test_render(tmp_path):
    mosaic = "4\n0210\n2A91\n3945\n0364\n"
    art = ok(["render", "ascii"], mosaic)
    assert art == ok(["render", "ascii"], mosaic)
    assert len(art.splitlines()) == 14
    target = tmp_path / "t.svg"
    assert ok(["render", "svg", "-o", str(target)], mosaic) == ""
    ET.fromstring(target.read_text())


def test_usage_and_domain_errors():
    assert run([])[0] == 2
    assert run(["frobnicate"])[0] == 2
    assert run(["count"])[0] == 2
    assert run(["count", "--n", "3", "--method", "guess"])[0] == 2
    code, _, err = run(["count", "--n", "30"])
    assert code == 1 and "1 <= n <= 12" in err
    code, _, err = run(["convert"], '{"size": 2, "x": [1, 1], "o": [2, 1]}')
    assert code == 1 and "field x" in err
    code, _, err = run(["generate", "torus", "3"])
    assert code == 1
    code, _, err = run(["generate", "torus", "3", "3"])
    assert code == 1 and "p < q" in err


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "knotmosaic", "count", "--n", "3"], capture_output=True, text=True, check=True
    )
    assert out.stdout == "22\n"
