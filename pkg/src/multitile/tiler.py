"""Multiplicity of lattice translates and exact multiple-tiling certificates.

For a planar body K the unit square is cut into vertical slabs at every
critical abscissa (vertices of translates meeting the square and crossings of
their edges).  Inside a slab no boundary edge ends or crosses another, so the
slab splits further into trapezoids between consecutive boundary lines.  The
open multiplicity is constant on each trapezoid and is read off at its
midpoint.  Tiling is then certified as packing plus exact volume, never by a
covering scan.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import DimensionMismatch, Unsupported
from .exactgeom import (
    ConvexPolytope,
    affine_image,
    as_point,
    bounding_box,
    contains,
    difference_body,
    identity,
    inverse,
    lattice_points,
    vertical_envelopes,
    volume,
)
from .zlinalg import SublatticeBasis, affine_dim

HALF = Fraction(1, 2)


def multiplicity(K: ConvexPolytope, x, mode: str = "closed") -> int:
    """Number of lattice translates ``K + z`` containing x (or their interiors)."""
    x = as_point(x)
    if len(x) != K.dim:
        raise DimensionMismatch("point and body dimensions differ")
    lows, highs = bounding_box(K)
    ranges = [range(math.ceil(lo - xi), math.floor(hi - xi) + 1) for lo, hi, xi in zip(lows, highs, x)]
    count = 0
    for z in product(*ranges):
        if contains(K, tuple(xi + zi for xi, zi in zip(x, z)), mode):
            count += 1
    return count


def collision_vectors(K: ConvexPolytope) -> list:
    """Nonzero lattice points in the interior of ``K - K``, lexicographically."""
    zero = tuple(Fraction(0) for _ in range(K.dim))
    return [tuple(int(c) for c in z) for z in lattice_points(difference_body(K), "open") if z != zero]


# ---------------------------------------------------------------------------
# torus cells


@dataclass(frozen=True)
class TorusCell:
    """A trapezoid of the unit cell on which the open multiplicity is constant.

    ``lower`` and ``upper`` are the bounding lines as ``(value at the slab
    midline, slope)``.
    """

    representative: tuple
    area: Fraction
    open_multiplicity: int
    closed_multiplicity_at_rep: int
    slab: tuple
    lower: tuple
    upper: tuple

    def sample(self, s: Fraction, u: Fraction) -> tuple:
        """Point of the open cell at relative position ``(s, u)`` in ``(0,1)^2``."""
        x0, x1 = self.slab
        if len(self.representative) == 1:
            return (x0 + s * (x1 - x0),)
        xm = self.representative[0]
        x = x0 + s * (x1 - x0)
        lo = self.lower[0] + self.lower[1] * (x - xm)
        hi = self.upper[0] + self.upper[1] * (x - xm)
        return (x, lo + u * (hi - lo))


@dataclass(frozen=True)
class TorusCellDecomposition:
    cells: tuple
    translates: tuple

    def total_area(self) -> Fraction:
        return sum((c.area for c in self.cells), Fraction(0))

    def weighted_sum(self) -> Fraction:
        return sum((c.area * c.open_multiplicity for c in self.cells), Fraction(0))


class _Chain:
    """One boundary chain of a polygon as a function of x."""

    def __init__(self, env):
        self.xs = [b[0] for b in env.breakpoints]
        self.ys = list(env.values)
        self.slopes = [(self.ys[i + 1] - self.ys[i]) / (self.xs[i + 1] - self.xs[i]) for i in range(len(self.xs) - 1)]

    def at(self, x):
        i = min(bisect_right(self.xs, x) - 1, len(self.slopes) - 1)
        s = self.slopes[i]
        return self.ys[i] + s * (x - self.xs[i]), s


def _translates_meeting_unit_cell(K: ConvexPolytope) -> list:
    lows, highs = bounding_box(K)
    ranges = [range(math.ceil(-hi), math.floor(1 - lo) + 1) for lo, hi in zip(lows, highs)]
    return [tuple(z) for z in product(*ranges)]


def _common_denominator(K: ConvexPolytope) -> int:
    D = 1
    for v in K.vertices:
        for c in v:
            D = D * c.denominator // math.gcd(D, c.denominator)
    return D


def _critical_abscissas(K: ConvexPolytope, translates) -> list:
    """Abscissas in [0, 1] where the arrangement of translate edges changes.

    Works in coordinates scaled by the common denominator of K so that all
    segment endpoints are integers; only accepted crossings become fractions.
    """
    D = _common_denominator(K)
    verts = [(int(v[0] * D), int(v[1] * D)) for v in K.vertices]
    n = len(verts)
    xs = {Fraction(0), Fraction(1)}
    segs = []
    for tag, (zx, zy) in enumerate(translates):
        ox, oy = zx * D, zy * D
        for i in range(n):
            (x0, y0), (x1, y1) = verts[i], verts[(i + 1) % n]
            x0, y0, x1, y1 = x0 + ox, y0 + oy, x1 + ox, y1 + oy
            if 0 < x0 < D:
                xs.add(Fraction(x0, D))
            if x0 == x1:
                continue
            if x0 > x1:
                x0, y0, x1, y1 = x1, y1, x0, y0
            if x1 <= 0 or x0 >= D or max(y0, y1) < 0 or min(y0, y1) > D:
                continue
            segs.append((x0, y0, x1, y1, tag))
    segs.append((0, 0, D, 0, -1))
    segs.append((0, D, D, D, -2))
    segs.sort()
    for i, (ax0, ay0, ax1, ay1, ta) in enumerate(segs):
        rx, ry = ax1 - ax0, ay1 - ay0
        for j in range(i + 1, len(segs)):
            bx0, by0, bx1, by1, tb = segs[j]
            if bx0 >= ax1:
                break
            if ta == tb:
                continue  # edges of one translate only meet at its vertices
            sx, sy = bx1 - bx0, by1 - by0
            den = rx * sy - ry * sx
            if den == 0:
                continue
            tnum = (bx0 - ax0) * sy - (by0 - ay0) * sx
            if den < 0:
                den, tnum = -den, -tnum
            xnum = ax0 * den + tnum * rx
            lo = max(bx0, 0) * den
            hi = min(ax1, bx1, D) * den
            if not lo < xnum < hi:
                continue
            ynum = ay0 * den + tnum * ry
            if 0 <= ynum <= D * den:
                xs.add(Fraction(xnum, den * D))
    return sorted(xs)


def _torus_cells_1d(K: ConvexPolytope) -> TorusCellDecomposition:
    lo, hi = K.vertices[0][0], K.vertices[1][0]
    cuts = sorted({Fraction(0), Fraction(1), lo - math.floor(lo), hi - math.floor(hi)})
    cells = []
    for x0, x1 in zip(cuts, cuts[1:]):
        if x0 == x1:
            continue
        rep = ((x0 + x1) / 2,)
        mo = multiplicity(K, rep, "open")
        cells.append(TorusCell(rep, x1 - x0, mo, multiplicity(K, rep, "closed"), (x0, x1), (), ()))
    return TorusCellDecomposition(tuple(cells), tuple(_translates_meeting_unit_cell(K)))


def torus_cells(K: ConvexPolytope) -> TorusCellDecomposition:
    """Exact decomposition of the unit cell into constant-multiplicity pieces.

    Raises:
        Unsupported: for bodies of dimension >= 3.
    """
    if K.dim == 1:
        return _torus_cells_1d(K)
    if K.dim != 2:
        raise Unsupported("torus cells are only computed for d <= 2")
    lower_env, upper_env = vertical_envelopes(K)
    lower, upper = _Chain(lower_env), _Chain(upper_env)
    xmin, xmax = lower.xs[0], lower.xs[-1]
    translates = _translates_meeting_unit_cell(K)
    xs = _critical_abscissas(K, translates)

    zero, one = Fraction(0), Fraction(1)
    cells = []
    for x0, x1 in zip(xs, xs[1:]):
        xm = (x0 + x1) / 2
        width = x1 - x0
        intervals = []
        bounds = {zero: (zero, zero), one: (one, zero)}
        for zx, zy in translates:
            u = xm - zx
            if not xmin < u < xmax:
                continue
            lo, slo = lower.at(u)
            hi, shi = upper.at(u)
            lo += zy
            hi += zy
            if hi <= zero or lo >= one:
                continue
            intervals.append((lo, hi))
            for val, slope in ((lo, slo), (hi, shi)):
                if zero < val < one:
                    bounds.setdefault(val, (val, slope))
        ys = sorted(bounds)
        for y0, y1 in zip(ys, ys[1:]):
            ym = (y0 + y1) / 2
            mo = sum(1 for lo, hi in intervals if lo < ym < hi)
            cells.append(TorusCell((xm, ym), width * (y1 - y0), mo, mo, (x0, x1), bounds[y0], bounds[y1]))
    return TorusCellDecomposition(tuple(cells), tuple(translates))


def mult_volume_identity_check(K: ConvexPolytope) -> bool:
    """Whether the area-weighted multiplicity over the unit cell equals vol(K)."""
    return torus_cells(K).weighted_sum() == volume(K)


# ---------------------------------------------------------------------------
# certificates

KINDS = ("m-fold-tiling", "m-fold-packing-only", "not-a-packing-of-claimed-m", "covering-deficit")


@dataclass(frozen=True)
class TilingCertificate:
    """Result of classifying the lattice translates of a body.

    ``histogram`` maps each open multiplicity to the area of the unit cell
    where it is attained; it is empty on the structural path for lifted
    bodies.
    """

    kind: str
    m: int | None
    volume: Fraction
    min_open_mult: int
    max_open_mult: int
    witness: tuple | None = None
    histogram: tuple = ()
    cell_count: int = 0

    @property
    def is_tiling(self) -> bool:
        return self.kind == "m-fold-tiling"


def _certificate_from_profile(vol, lo, hi, witness_lo, witness_hi, claimed_m, histogram=(), cell_count=0):
    if claimed_m is None:
        if vol == hi:
            return TilingCertificate("m-fold-tiling", hi, vol, lo, hi, None, histogram, cell_count)
        return TilingCertificate("m-fold-packing-only", hi, vol, lo, hi, witness_lo, histogram, cell_count)
    if hi > claimed_m:
        return TilingCertificate("not-a-packing-of-claimed-m", claimed_m, vol, lo, hi, witness_hi, histogram, cell_count)
    if vol == claimed_m:
        return TilingCertificate("m-fold-tiling", claimed_m, vol, lo, hi, None, histogram, cell_count)
    return TilingCertificate("covering-deficit", claimed_m, vol, lo, hi, witness_lo, histogram, cell_count)


def _classify_cells(K, claimed_m):
    dec = torus_cells(K)
    vol = volume(K)
    cells = dec.cells
    lo_cell = min(cells, key=lambda c: c.open_multiplicity)
    hi_cell = max(cells, key=lambda c: c.open_multiplicity)
    hist = Counter()
    for c in cells:
        hist[c.open_multiplicity] += c.area
    histogram = tuple(sorted(hist.items()))
    return _certificate_from_profile(vol, lo_cell.open_multiplicity, hi_cell.open_multiplicity,
                                     lo_cell.representative, hi_cell.representative, claimed_m,
                                     histogram, len(cells))


def _is_unimodular(M) -> bool:
    from .exactgeom import det

    return all(c.denominator == 1 for row in M for c in row) and abs(det(M)) == 1


def _classify_lifting(K, claimed_m):
    lf = K.lifting
    if not _is_unimodular(lf.matrix):
        raise Unsupported("structural classification needs a unimodular lifting map")
    fiber = 2 * lf.half_height
    if fiber.denominator != 1:
        raise Unsupported("structural classification needs an integral fiber length")
    n = int(fiber)
    base = classify(lf.base)
    vol = volume(K)
    return _certificate_from_profile(vol, n * base.min_open_mult, n * base.max_open_mult, None, None, claimed_m)


def classify(K: ConvexPolytope, claimed_m: int | None = None) -> TilingCertificate:
    """Certify the multiple-tiling status of the lattice translates of K.

    Without ``claimed_m`` the candidate multiplicity is the largest open
    multiplicity; T(K) is an m-fold tiling exactly when additionally
    vol(K) = m.  Lifted bodies of dimension >= 3 are classified through
    their base.

    Raises:
        Unsupported: for bodies of dimension >= 3 that are not liftings with
            a unimodular map and integral fiber length.
    """
    if K.dim <= 2:
        return _classify_cells(K, claimed_m)
    if K.lifting is None:
        raise Unsupported("classification of general bodies of dimension >= 3 is not available")
    return _classify_lifting(K, claimed_m)


def packing_bound_from_collisions(K: ConvexPolytope) -> int:
    """Multiplicity m for which T(K) is guaranteed an m-fold packing.

    That is ``|Z|/2 + 1`` for the collision set Z, improved to ``|Z|/2`` when
    Z spans at least a plane.
    """
    Z = collision_vectors(K)
    if not Z:
        return 1
    if affine_dim(Z) >= 2:
        return len(Z) // 2
    return len(Z) // 2 + 1


def sublattice_image(K: ConvexPolytope, L: SublatticeBasis) -> ConvexPolytope:
    """The body ``L^{-1} K``, whose Z^d-translates model ``{K + z : z in L}``."""
    return affine_image(K, inverse(L.basis))


def verify_sublattice_tiling(K: ConvexPolytope, L: SublatticeBasis) -> TilingCertificate:
    """Classify ``{K + z : z in L}`` by moving L to Z^d.

    The reported volume is ``vol(K) / det L``.
    """
    if L.dim != K.dim:
        raise DimensionMismatch("sublattice and body dimensions differ")
    if L.basis == identity(K.dim):
        return classify(K)
    return classify(sublattice_image(K, L))
