"""Regenerate fixtures/*.json from the coordinates of the reference bodies."""

from pathlib import Path

from multitile import io
from multitile.exactgeom import dilate, polygon_from_vertices
from multitile.vdc import build_lifting
from multitile.exactgeom import segment

OUT = Path(__file__).resolve().parent.parent / "fixtures"

HEXAGON = [("5/4", "3/4"), ("3/4", "5/4"), ("-3/4", "3/4"), ("-5/4", "-3/4"), ("-3/4", "-5/4"), ("3/4", "-3/4")]


def polygon(pts):
    return polygon_from_vertices(pts)


def bodies():
    hexagon = polygon(HEXAGON)
    yield "octagon", "octagon conv({0,1,2,3}^2 minus {0,3}^2)", \
        polygon([(1, 0), (2, 0), (3, 1), (3, 2), (2, 3), (1, 3), (0, 2), (0, 1)]), {"m": 7, "collisions": 20}
    yield "hexagon", "extremal hexagon", hexagon, {"extremal": True}
    yield "half_hexagon", "half of the extremal hexagon", dilate(hexagon, "1/2"), {"m": 1}
    yield "small_box", "box [0,3/4]^2", polygon([(0, 0), ("3/4", 0), ("3/4", "3/4"), (0, "3/4")]), {}
    yield "unit_square", "unit square", polygon([(0, 0), (1, 0), (1, 1), (0, 1)]), {"m": 1, "collisions": 0}
    for m in (2, 3, 4):
        box = polygon([(-m, -1), (m, -1), (m, 1), (-m, 1)])
        yield f"stretched_box_m{m}", f"stretched box [-{m},{m}]x[-1,1]", box, {"m": 4 * m}
    yield "fig2_lifting", "lifting of [-1,1] between y/2 - 2 and y/2 + 2", \
        build_lifting(segment(-1, 1), ("1/2",), 2), {"m": 8}
    yield "fig2_pentagon", "pentagon with six collision vectors", \
        polygon([(0, 0), (1, 1), (1, 2), (0, 2), (-1, 1)]), {"collisions": 6}
    yield "fig4_parallelogram", "two-fold tiling parallelogram", \
        polygon([("-1/2", "3/4"), ("-1/2", "-5/4"), ("1/2", "-3/4"), ("1/2", "5/4")]), {"m": 2}
    yield "fig4_hexagon", "two-fold tiling hexagon", \
        polygon([(0, "3/4"), (-1, "1/4"), (-1, "-1/4"), (0, "-3/4"), (1, "-1/4"), (1, "1/4")]), {"m": 2}
    yield "fig4_rhombus", "two-fold tiling rhombus", \
        polygon([("1/4", "3/4"), ("-5/4", "1/4"), ("-1/4", "-3/4"), ("5/4", "-1/4")]), {"m": 2}
    yield "hexagon_prism_m3", "lifting of the extremal hexagon with a = 0, m = 3", \
        build_lifting(hexagon, (0, 0), 3), {"m": 24}


def main():
    OUT.mkdir(exist_ok=True)
    for stem, name, P, expected in bodies():
        pf = io.PolytopeFile(P, name, expected)
        (OUT / f"{stem}.json").write_text(io.dumps(io.polytope_file_to_dict(pf)))
        print("wrote", stem)


if __name__ == "__main__":
    main()
