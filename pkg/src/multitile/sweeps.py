"""Generators for randomized and exhaustive experiments.

Everything here is deterministic given a ``random.Random`` instance.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .exactgeom import ConvexPolytope, affine_image, dilate, polygon_from_vertices, scale
from .errors import DegenerateInput
from .vdc import build_lifting, classify_symmetric, detect_lifting, is_extremal, vdc_check
from .zlinalg import int_det


def _upper_half(p) -> bool:
    return p[1] > 0 or (p[1] == 0 and p[0] > 0)


def _cross(a, b) -> int:
    return a[0] * b[1] - a[1] * b[0]


def _turn(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def symmetric_lattice_polygons(radius: int) -> Iterator[tuple]:
    """Every o-symmetric convex lattice polygon with vertices in [-r, r]^2.

    Yields the ``k`` vertices ``v_1, ..., v_k`` of the upper half, in
    counterclockwise order; the full polygon is ``v_1..v_k, -v_1..-v_k``.
    Each polygon appears exactly once: ``v_1`` is its vertex of smallest
    angle in ``[0, pi)``.
    """
    half = [(x, y) for x in range(-radius, radius + 1) for y in range(0, radius + 1) if _upper_half((x, y))]

    def extend(seq):
        last = seq[-1]
        first = seq[0]
        neg_first = (-first[0], -first[1])
        if len(seq) >= 2:
            prev = seq[-2]
            # close: turns at v_k (next is -v_1) and at v_1 (previous is -v_k)
            if _turn(prev, last, neg_first) > 0 and _turn((-last[0], -last[1]), first, seq[1]) > 0:
                yield tuple(seq)
        for p in half:
            if _cross(last, p) <= 0 or _cross(first, p) <= 0:
                continue
            if len(seq) >= 2 and _turn(seq[-2], last, p) <= 0:
                continue
            seq.append(p)
            yield from extend(seq)
            seq.pop()

    for v1 in half:
        yield from extend([v1])


def full_symmetric_polygon(half_vertices) -> ConvexPolytope:
    pts = list(half_vertices) + [(-x, -y) for x, y in half_vertices]
    return polygon_from_vertices(pts)


def random_fraction(rng: random.Random, lo: int, hi: int, max_den: int) -> Fraction:
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(lo * den, hi * den), den)


def random_unimodular(rng: random.Random, d: int, bound: int = 5) -> tuple:
    """Integer matrix with entries in ``[-bound, bound]`` and determinant +-1."""
    while True:
        U = [[0] * d for _ in range(d)]
        for i in range(d):
            U[i][i] = rng.choice((-1, 1))
        # random elementary operations, rejected if they leave the entry box
        for _ in range(rng.randint(0, 3 * d)):
            i, j = rng.sample(range(d), 2)
            c = rng.randint(-2, 2)
            row = [a + c * b for a, b in zip(U[i], U[j])]
            if max(map(abs, row)) <= bound:
                U[i] = row
        perm = list(range(d))
        rng.shuffle(perm)
        U = [U[p] for p in perm]
        if abs(int_det(U)) == 1:
            return tuple(tuple(r) for r in U)


def random_extremal_parallelogram(rng: random.Random, max_den: int = 8) -> ConvexPolytope:
    """Twice a lattice fundamental parallelogram with edges V e1 and V (s, 1)."""
    while True:
        s = random_fraction(rng, -1, 1, max_den)
        V = random_unimodular(rng, 2, bound=2)
        half = polygon_from_vertices([(0, 0), (1, 0), (1 + s, 1), (s, 1)])
        centre = (Fraction(1 + s, 2), Fraction(1, 2))
        half = affine_image(half, V, tuple(-c for c in _image(V, centre)))
        B = dilate(half, 2)
        if is_extremal(B):
            return B


def _image(V, p):
    return tuple(sum(a * b for a, b in zip(row, p)) for row in V)


def random_extremal_hexagon(rng: random.Random, max_den: int = 8) -> ConvexPolytope:
    """Twice an o-symmetric hexagon ``p1, p2, p3, -p1, -p2, -p3`` with
    ``p1 + p2`` and ``p2 + p3`` a basis of Z^2; such hexagons tile one-fold."""
    while True:
        V = random_unimodular(rng, 2, bound=2)
        b1, b2 = _image(V, (1, 0)), _image(V, (0, 1))
        p2 = (random_fraction(rng, -1, 1, max_den), random_fraction(rng, -1, 1, max_den))
        p1 = (b1[0] - p2[0], b1[1] - p2[1])
        p3 = (b2[0] - p2[0], b2[1] - p2[1])
        pts = [p1, p2, p3, scale(-1, p1), scale(-1, p2), scale(-1, p3)]
        try:
            half = polygon_from_vertices(pts)
        except DegenerateInput:
            continue
        if len(half.vertices) != 6:
            continue
        B = dilate(half, 2)
        if is_extremal(B):
            return B


def random_extremal_base(rng: random.Random, max_den: int = 8) -> ConvexPolytope:
    if rng.random() < 0.5:
        return random_extremal_parallelogram(rng, max_den)
    return random_extremal_hexagon(rng, max_den)


def random_lifting(rng: random.Random, max_den: int = 8, bound: int = 5):
    """A random cylindrical m-lifting in dimension 3 and its parameters."""
    B = random_extremal_base(rng, max_den)
    a = (random_fraction(rng, -2, 2, max_den), random_fraction(rng, -2, 2, max_den))
    m = rng.choice((2, 3, 4))
    U = random_unimodular(rng, 3, bound)
    return build_lifting(B, a, m, U=U), (B, a, m, U)


def shrink_vertex_pair(B: ConvexPolytope, index: int, factor: Fraction) -> ConvexPolytope:
    """Move the vertex ``B.vertices[index]`` and its mirror image towards the
    origin by ``factor``; the result stays o-symmetric."""
    v = B.vertices[index]
    w = tuple(-c for c in v)
    pts = []
    for p in B.vertices:
        if p == v:
            pts.append(scale(factor, v))
        elif p == w:
            pts.append(scale(factor, w))
        else:
            pts.append(p)
    return polygon_from_vertices(pts)


def random_rational_polygon(rng: random.Random, max_den: int = 6, n_points: int | None = None,
                            span: int = 2) -> ConvexPolytope:
    """Hull of a handful of random rational points in ``[-span, span]^2``."""
    while True:
        n = n_points or rng.randint(3, 7)
        pts = [(random_fraction(rng, -span, span, max_den), random_fraction(rng, -span, span, max_den))
               for _ in range(n)]
        try:
            return polygon_from_vertices(pts)
        except DegenerateInput:
            continue


@dataclass
class BackwardGroup:
    polygons: int = 0
    maximizers: int = 0
    maximizers_certified: int = 0
    others_certified: int = 0


@dataclass
class BackwardSweep:
    """Outcome of checking every o-symmetric lattice polygon in a box.

    A maximizer (vol = 4m) is certified by detect_lifting when m >= 2 and by
    is_extremal when m = 1; ``failures`` lists every polygon where the
    verdict disagrees with the volume.
    """

    radius: int
    groups: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    @property
    def total(self) -> int:
        return sum(g.polygons for g in self.groups.values())

    @property
    def ok(self) -> bool:
        return not self.failures


def exhaustive_backward(radius: int) -> BackwardSweep:
    out = BackwardSweep(radius)
    for half in symmetric_lattice_polygons(radius):
        C = full_symmetric_polygon(half)
        S = classify_symmetric(C)
        report = vdc_check(S)
        g = out.groups.setdefault(S.m, BackwardGroup())
        g.polygons += 1
        certified = bool(detect_lifting(S)) if S.m >= 2 else is_extremal(C)
        if report.equality:
            g.maximizers += 1
            g.maximizers_certified += certified
        else:
            g.others_certified += certified
        if certified != report.equality:
            out.failures.append(half)
    return out
