from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import fixture_body, fractions, rational_polygons, unimodular_2x2
from multitile.errors import DegenerateInput, DimensionMismatch, SingularMatrix, Unsupported
from multitile.exactgeom import (
    Q,
    affine_image,
    bounding_box,
    check_representation,
    contains,
    difference_body,
    dilate,
    fiber_length,
    lattice_points,
    minkowski_sum,
    polygon_from_vertices,
    polytope_from_reps,
    reflect,
    segment,
    symmetry_center,
    translate,
    vertical_envelopes,
    volume,
)
from multitile.vdc import build_lifting

SQUARE = polygon_from_vertices([(0, 0), (1, 0), (1, 1), (0, 1)])
HEXAGON = polygon_from_vertices([("5/4", "3/4"), ("3/4", "5/4"), ("-3/4", "3/4"),
                                 ("-5/4", "-3/4"), ("-3/4", "-5/4"), ("3/4", "-3/4")])
PENTAGON = polygon_from_vertices([(0, 0), (1, 1), (1, 2), (0, 2), (-1, 1)])
OCTAGON = polygon_from_vertices([(1, 0), (2, 0), (3, 1), (3, 2), (2, 3), (1, 3), (0, 2), (0, 1)])


def test_rationals_reject_floats():
    assert Q("5/4") == F(5, 4)
    assert Q(" -3 ") == -3
    with pytest.raises(TypeError):
        Q(0.5)
    with pytest.raises(TypeError):
        Q(True)


def test_unit_square_canonical():
    assert SQUARE.vertices == ((0, 0), (1, 0), (1, 1), (0, 1))
    assert len(SQUARE.halfspaces) == 4


def test_hexagon_has_six_halfspaces_and_starts_lexicographically():
    assert len(HEXAGON.halfspaces) == 6
    assert HEXAGON.vertices[0] == min(HEXAGON.vertices)


def test_degenerate_and_mismatched_inputs():
    with pytest.raises(DegenerateInput):
        polygon_from_vertices([(0, 0), (1, 1), (2, 2)])
    with pytest.raises(DimensionMismatch):
        polygon_from_vertices([(0, 0), (1, 0, 0), (0, 1)])


def test_duplicates_and_collinear_points_are_dropped():
    P = polygon_from_vertices([(0, 0), (1, 0), (2, 0), (2, 2), (0, 2), (0, 0), (1, 1)])
    assert P.vertices == ((0, 0), (2, 0), (2, 2), (0, 2))


@pytest.mark.parametrize("P,expected", [(HEXAGON, 4), (OCTAGON, 7), (SQUARE, 1), (PENTAGON, F(5, 2))])
def test_volumes(P, expected):
    assert volume(P) == expected
    assert oracles.polygon_area(P.vertices) == expected


def test_volume_of_general_3d_body_is_unsupported():
    C = build_lifting(HEXAGON, (0, 0), 3)
    bare = polytope_from_reps(C.vertices, C.halfspaces)
    assert volume(C) == 24
    with pytest.raises(Unsupported):
        volume(bare)


def test_contains_examples():
    assert contains(SQUARE, ("1/2", "1/2"), "open")
    assert not contains(SQUARE, (0, "1/2"), "open")
    assert contains(SQUARE, (0, "1/2"), "closed")
    assert contains(HEXAGON, (1, 1), "closed")
    assert not contains(HEXAGON, (1, 1), "open")
    with pytest.raises(DimensionMismatch):
        contains(SQUARE, (0, 0, 0))


def test_minkowski_examples():
    assert minkowski_sum(SQUARE, SQUARE) == dilate(SQUARE, 2)
    assert minkowski_sum(SQUARE, ("1/3", -2)) == translate(SQUARE, ("1/3", -2))
    expected = polygon_from_vertices([(1, 2), (0, 2), (-2, 0), (-2, -1), (-1, -2), (0, -2), (2, 0), (2, 1)])
    assert minkowski_sum(PENTAGON, reflect(PENTAGON)) == expected
    assert difference_body(PENTAGON) == expected


def test_minkowski_in_3d_is_unsupported():
    C = build_lifting(HEXAGON, (0, 0), 1)
    with pytest.raises(Unsupported):
        minkowski_sum(C, C)


def test_difference_body_examples():
    assert difference_body(SQUARE) == polygon_from_vertices([(-1, -1), (1, -1), (1, 1), (-1, 1)])
    assert difference_body(HEXAGON) == dilate(HEXAGON, 2)


def test_difference_body_of_lifting_is_structural():
    C = build_lifting(HEXAGON, ("1/3", "-1/2"), 2)
    D = difference_body(C)
    assert D == build_lifting(dilate(HEXAGON, 2), ("1/3", "-1/2"), 4)
    assert volume(D) == 8 * volume(C)


def test_lattice_point_examples():
    box = polygon_from_vertices([(-2, -1), (2, -1), (2, 1), (-2, 1)])
    assert lattice_points(box, "open") == [(-1, 0), (0, 0), (1, 0)]
    assert lattice_points(HEXAGON, "open") == [(0, 0)]
    quad = fixture_body("fig2_lifting")
    assert lattice_points(quad, "open") == [(0, -1), (0, 0), (0, 1)]


def test_symmetry_center_examples():
    assert symmetry_center(dilate(SQUARE, 2)) == (1, 1)
    assert symmetry_center(PENTAGON) is None
    assert symmetry_center(OCTAGON) == (F(3, 2), F(3, 2))


def test_affine_image_examples():
    box = polygon_from_vertices([(-1, -1), (1, -1), (1, 1), (-1, 1)])
    assert affine_image(SQUARE, ((1, 0), (0, 1))) == SQUARE
    sheared = affine_image(box, ((1, 0), (1, 1)))
    assert set(sheared.vertices) == {(1, 0), (-1, 0), (1, 2), (-1, -2)}
    with pytest.raises(SingularMatrix):
        affine_image(box, ((1, 2), (2, 4)))


def test_envelope_examples():
    box = polygon_from_vertices([(-1, -1), (1, -1), (1, 1), (-1, 1)])
    lo, hi = vertical_envelopes(box)
    assert lo(F(1, 3)) == -1 and hi(F(1, 3)) == 1
    assert fiber_length(box, 0) == 2
    lo, hi = vertical_envelopes(fixture_body("fig2_lifting"))
    for y in (-1, F(-1, 3), 0, F(4, 5), 1):
        assert lo(y) == y / 2 - 2 and hi(y) == y / 2 + 2
    assert lo.is_convex() and hi.is_convex()
    assert fiber_length(HEXAGON, 0) == 2
    assert oracles.vertical_fiber(HEXAGON.vertices, 0) == (-1, 1)


def test_envelopes_of_general_3d_body_unsupported():
    C = build_lifting(HEXAGON, (0, 0), 1, U=((0, 0, 1), (0, 1, 0), (1, 0, 0)))
    with pytest.raises(Unsupported):
        vertical_envelopes(C)


def test_lifted_envelopes_follow_the_linear_form():
    C = build_lifting(HEXAGON, ("1/2", "-1/3"), 2)
    lo, hi = vertical_envelopes(C)
    y = (F(1, 4), F(-1, 5))
    a = F(1, 2) * y[0] - F(1, 3) * y[1]
    assert lo(y) == a - 2 and hi(y) == a + 2


# properties -----------------------------------------------------------------


@given(rational_polygons())
def test_representations_agree(P):
    check_representation(P)
    n = len(P.vertices)
    for normal, offset in P.halfspaces:
        tight = [v for v in P.vertices if sum(a * b for a, b in zip(normal, v)) == offset]
        assert len(tight) >= 2
    for v in P.vertices:
        assert sum(1 for nrm, b in P.halfspaces if sum(a * c for a, c in zip(nrm, v)) == b) >= 2
    assert n == len(oracles.jarvis_hull(P.vertices))


@given(rational_polygons())
def test_hull_matches_gift_wrapping(P):
    h = oracles.jarvis_hull(P.vertices)
    assert set(h) == set(P.vertices)
    assert volume(P) == oracles.polygon_area(P.vertices)


@given(rational_polygons(), st.tuples(fractions(), fractions()))
def test_translation_preserves_volume(P, t):
    assert volume(minkowski_sum(P, t)) == volume(P)


@given(rational_polygons(), unimodular_2x2(), st.tuples(st.integers(-3, 3), st.integers(-3, 3)))
def test_unimodular_invariance(P, U, t):
    image = affine_image(P, U, t)
    assert volume(image) == volume(P)
    for mode in ("open", "closed"):
        pts = lattice_points(P, mode)
        mapped = sorted(tuple(sum(U[i][j] * p[j] for j in range(2)) + t[i] for i in range(2)) for p in pts)
        assert lattice_points(image, mode) == mapped


@given(rational_polygons())
def test_lattice_points_match_brute_force(P):
    for mode, strict in (("open", True), ("closed", False)):
        assert [tuple(map(int, p)) for p in lattice_points(P, mode)] == oracles.lattice_points(P.vertices, strict)


@given(rational_polygons(max_points=5), rational_polygons(max_points=5))
def test_minkowski_matches_hull_of_sums(P, R):
    S = minkowski_sum(P, R)
    assert set(S.vertices) == set(oracles.minkowski(P.vertices, R.vertices))
    assert volume(S) >= volume(P) + volume(R)


@given(rational_polygons(), st.tuples(fractions(-3, 3), fractions(-3, 3)))
def test_open_membership_implies_closed(P, x):
    if contains(P, x, "open"):
        assert contains(P, x, "closed")
    assert contains(P, x, "closed") == oracles.inside(oracles.jarvis_hull(P.vertices), x, False)


@given(rational_polygons())
def test_vertices_are_boundary_points(P):
    for v in P.vertices:
        assert contains(P, v, "closed") and not contains(P, v, "open")


@given(rational_polygons(), fractions(0, 1, 12))
def test_fiber_length_matches_edge_intersection(P, s):
    lo_x, hi_x = bounding_box(P)[0][0], bounding_box(P)[1][0]
    y = lo_x + (hi_x - lo_x) * s
    seg = oracles.vertical_fiber(P.vertices, y)
    assert fiber_length(P, y) == seg[1] - seg[0]
    if lo_x < y < hi_x:
        assert fiber_length(P, y) > 0


def test_segment_volume_and_points():
    I = segment(-1, 1)
    assert volume(I) == 2
    assert lattice_points(I, "open") == [(0,)]
    assert lattice_points(I, "closed") == [(-1,), (0,), (1,)]
