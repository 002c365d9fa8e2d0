import xml.etree.ElementTree as ET
from fractions import Fraction as F

import pytest

from conftest import fixture_body
from multitile.errors import Unsupported
from multitile.exactgeom import contains, polygon_from_vertices
from multitile.render import RenderSpec, render_svg, translates_in_window
from multitile.vdc import replication_decomposition

NS = "{http://www.w3.org/2000/svg}"
SQUARE = polygon_from_vertices([(0, 0), (1, 0), (1, 1), (0, 1)])


def polygons(svg):
    root = ET.fromstring(svg.encode())
    return [p for p in root.iter(NS + "polygon") if "translate" in p.get("class", "")]


def test_window_must_be_nonempty():
    with pytest.raises(ValueError):
        RenderSpec(((0, 0), (0, 1)))


def test_unit_square_grid():
    spec = RenderSpec(((0, 0), (3, 2)))
    assert translates_in_window(SQUARE, spec.window) == [(x, y) for x in range(3) for y in range(2)]
    svg = render_svg(SQUARE, spec)
    assert len(polygons(svg)) == 6
    root = ET.fromstring(svg.encode())
    assert root.get("version") == "1.1"
    assert len(list(root.iter(NS + "circle"))) == 4 * 3


def test_translates_meeting_window_are_exactly_those_with_interior_overlap():
    K = fixture_body("octagon")
    window = ((F(-1), F(-1)), (F(2), F(2)))
    got = set(translates_in_window(K, window))
    # oracle: some point of a fine grid inside the open window lies in int(K + z)
    grid = [(F(-1) + F(2 * i + 1, 20), F(-1) + F(2 * j + 1, 20) + F(1, 1000)) for i in range(30) for j in range(30)]
    for zx in range(-5, 4):
        for zy in range(-5, 4):
            hit = any(contains(K, (x - zx, y - zy), "open") for x, y in grid)
            if hit:
                assert (zx, zy) in got


def test_octagon_translates_overlap():
    K = fixture_body("octagon")
    svg = render_svg(K, RenderSpec(((0, 0), (1, 1))))
    # every one of the seven translates covering a generic point is drawn
    assert len(polygons(svg)) >= 7


def test_cosets_split_into_two_interleaved_tilings():
    K = fixture_body("fig4_parallelogram")
    rep = replication_decomposition(K)
    svg = render_svg(K, RenderSpec(((-2, -2), (2, 2))), rep)
    polys = polygons(svg)
    by_class = {}
    for p in polys:
        z = tuple(int(c) for c in p.get("id")[2:].split("_"))
        by_class.setdefault(p.get("class"), []).append(z)
    assert set(by_class) == {"translate coset-0", "translate coset-1"}
    for cls, zs in by_class.items():
        parity = {z[1] % 2 for z in zs}
        assert len(parity) == 1
    colours = {p.get("fill") for p in polys}
    assert len(colours) == 2


def test_render_rejects_3d():
    with pytest.raises(Unsupported):
        render_svg(fixture_body("hexagon_prism_m3"))


def test_render_is_byte_identical():
    K = fixture_body("fig4_rhombus")
    rep = replication_decomposition(K)
    assert render_svg(K, replication=rep) == render_svg(K, replication=rep)
