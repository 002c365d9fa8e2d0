"""Exact rational linear algebra and convex polytopes.

Coordinates are :class:`fractions.Fraction` throughout; a point is a plain
tuple of fractions.  Polygons (d = 2) are stored counterclockwise starting at
the lexicographically smallest vertex, which makes equality of bodies a plain
list comparison.  Bodies of dimension three and up carry both a vertex and a
half-space representation and are only produced by lifting or by affine maps
of lifted bodies.
"""

from __future__ import annotations

import itertools
import math
from bisect import bisect_right
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DegenerateInput, DimensionMismatch, SingularMatrix, Unsupported

Point = tuple  # tuple[Fraction, ...]
Halfspace = tuple  # (normal: tuple[int, ...], offset: Fraction), meaning normal.x <= offset

PROVENANCES = ("input-2d", "input", "lifting", "affine-image", "minkowski")


def Q(value) -> Fraction:
    """Coerce ``value`` to an exact rational.

    Accepts ints, fractions and strings such as ``"5/4"`` or ``"-3"``.  Floats
    are rejected so that no binary rounding can leak into a verification path.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def point(*coords) -> Point:
    return tuple(Q(c) for c in coords)


def as_point(coords: Iterable) -> Point:
    return tuple(Q(c) for c in coords)


def fmt(q: Fraction) -> str:
    return str(q)


# ---------------------------------------------------------------------------
# small exact matrix helpers


def as_matrix(rows) -> tuple:
    rows = tuple(tuple(Q(x) for x in row) for row in rows)
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DimensionMismatch("matrix must be square")
    return rows


def identity(d: int) -> tuple:
    return tuple(tuple(Fraction(int(i == j)) for j in range(d)) for i in range(d))


def mat_vec(M, v) -> Point:
    return tuple(sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in M)


def mat_mul(A, B) -> tuple:
    cols = list(zip(*B))
    return tuple(tuple(sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols) for row in A)


def transpose(M) -> tuple:
    return tuple(zip(*M))


def det(M) -> Fraction:
    """Determinant by fraction-exact Gaussian elimination."""
    A = [list(map(Q, row)) for row in M]
    n = len(A)
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if A[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            A[col], A[pivot] = A[pivot], A[col]
            result = -result
        p = A[col][col]
        result *= p
        for r in range(col + 1, n):
            f = A[r][col] / p
            if f:
                for c in range(col, n):
                    A[r][c] -= f * A[col][c]
    return result


def inverse(M) -> tuple:
    A = [list(map(Q, row)) + [Fraction(int(i == j)) for j in range(len(M))] for i, row in enumerate(M)]
    n = len(A)
    for col in range(n):
        pivot = next((r for r in range(col, n) if A[r][col] != 0), None)
        if pivot is None:
            raise SingularMatrix("matrix is singular")
        A[col], A[pivot] = A[pivot], A[col]
        p = A[col][col]
        A[col] = [x / p for x in A[col]]
        for r in range(n):
            if r != col and A[r][col]:
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
    return tuple(tuple(row[n:]) for row in A)


def solve(M, b) -> Point:
    return mat_vec(inverse(M), b)


def rank(vectors: Sequence[Sequence]) -> int:
    rows = [list(map(Q, v)) for v in vectors]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col] / rows[r][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def affine_rank(points: Sequence[Point]) -> int:
    if not points:
        raise DegenerateInput("no points")
    base = points[0]
    return rank([tuple(a - b for a, b in zip(p, base)) for p in points[1:]])


def dot(u, v) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def add(u, v) -> Point:
    return tuple(a + b for a, b in zip(u, v))


def sub(u, v) -> Point:
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v) -> Point:
    return tuple(c * a for a in v)


def cross(o, a, b) -> Fraction:
    """Twice the signed area of triangle (o, a, b); positive for a left turn."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def integer_normal(normal: Sequence, offset) -> Halfspace:
    """Scale ``normal.x <= offset`` so the normal is a primitive integer vector."""
    normal = [Q(c) for c in normal]
    offset = Q(offset)
    lcm = 1
    for c in normal:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in normal]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    if g == 0:
        raise DegenerateInput("zero normal vector")
    return tuple(c // g for c in ints), offset * lcm / g


# ---------------------------------------------------------------------------
# polytopes


@dataclass(frozen=True, eq=False)
class Lifting:
    """How a lifted body was built: ``shift + matrix . L(base, a - h, a + h)``."""

    base: "ConvexPolytope"
    a_coeffs: tuple
    half_height: Fraction
    matrix: tuple
    shift: Point


@dataclass(frozen=True, eq=False)
class ConvexPolytope:
    """A full-dimensional convex polytope with exact V- and H-representations.

    Equality and hashing only look at ``dim``, ``vertices`` and ``halfspaces``;
    ``provenance``, ``lifting`` and ``known_volume`` are bookkeeping.
    """

    dim: int
    vertices: tuple
    halfspaces: tuple
    provenance: str = "input-2d"
    lifting: Lifting | None = None
    known_volume: Fraction | None = None

    def _key(self):
        return (self.dim, self.vertices, self.halfspaces)

    def __eq__(self, other):
        if not isinstance(other, ConvexPolytope):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        vs = ", ".join("(" + ",".join(map(str, v)) + ")" for v in self.vertices)
        return f"ConvexPolytope(dim={self.dim}, vertices=[{vs}])"


def _check_dims(points: Sequence[Point]) -> int:
    if not points:
        raise DegenerateInput("no points given")
    dims = {len(p) for p in points}
    if len(dims) != 1:
        raise DimensionMismatch(f"points of unequal lengths {sorted(dims)}")
    return dims.pop()


def _hull_2d(points: Sequence[Point]) -> list:
    pts = sorted(set(points))
    if len(pts) < 3:
        return pts
    lower: list = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def polygon_from_vertices(points: Iterable, provenance: str = "input-2d") -> ConvexPolytope:
    """Convex hull of planar points in canonical counterclockwise form.

    Duplicate and non-extreme points are dropped silently.

    Raises:
        DimensionMismatch: points of unequal length, or not planar.
        DegenerateInput: the points are collinear.
    """
    pts = [as_point(p) for p in points]
    d = _check_dims(pts)
    if d != 2:
        raise DimensionMismatch(f"expected planar points, got dimension {d}")
    hull = _hull_2d(pts)
    if len(hull) < 3:
        raise DegenerateInput("points have affine dimension < 2")
    halfspaces = []
    n = len(hull)
    for i in range(n):
        p, q = hull[i], hull[(i + 1) % n]
        normal = (q[1] - p[1], p[0] - q[0])
        halfspaces.append(integer_normal(normal, dot(normal, p)))
    return ConvexPolytope(2, tuple(hull), tuple(halfspaces), provenance)


def segment(lo, hi, provenance: str = "input") -> ConvexPolytope:
    lo, hi = Q(lo), Q(hi)
    if not lo < hi:
        raise DegenerateInput("segment must have positive length")
    return ConvexPolytope(1, ((lo,), (hi,)), (((-1,), -lo), ((1,), hi)), provenance)


def polytope_from_points(points: Iterable, provenance: str | None = None) -> ConvexPolytope:
    """Convex hull in dimension 1 or 2."""
    pts = [as_point(p) for p in points]
    d = _check_dims(pts)
    if d == 1:
        xs = [p[0] for p in pts]
        return segment(min(xs), max(xs), provenance or "input")
    if d == 2:
        return polygon_from_vertices(pts, provenance or "input-2d")
    raise Unsupported("convex hulls are only computed in dimensions 1 and 2")


def _canonical_halfspaces(halfspaces: Iterable) -> tuple:
    return tuple(sorted({integer_normal(n, b) for n, b in halfspaces}))


def polytope_from_reps(vertices: Iterable, halfspaces: Iterable, provenance: str = "input", **extra) -> ConvexPolytope:
    """Build a body from both representations, checking they agree.

    For d <= 2 the hull is recomputed from the vertices and the supplied
    half-spaces are only validated.
    """
    verts = [as_point(v) for v in vertices]
    d = _check_dims(verts)
    hs = _canonical_halfspaces(halfspaces)
    if d <= 2:
        P = polytope_from_points(verts, provenance)
        P = replace(P, provenance=provenance, **extra)
    else:
        P = ConvexPolytope(d, tuple(sorted(set(verts))), hs, provenance, **extra)
    check_representation(P, extra_halfspaces=hs)
    return P


def check_representation(P: ConvexPolytope, extra_halfspaces=None) -> None:
    """Validate the V/H consistency invariants, raising DegenerateInput on failure."""
    d = P.dim
    if affine_rank(list(P.vertices)) != d:
        raise DegenerateInput("vertices are not full-dimensional")
    for hs in (P.halfspaces, extra_halfspaces or ()):
        for normal, offset in hs:
            if len(normal) != d:
                raise DimensionMismatch("halfspace normal has wrong length")
            values = [dot(normal, v) for v in P.vertices]
            if any(val > offset for val in values):
                raise DegenerateInput("a vertex violates a halfspace")
            if sum(val == offset for val in values) < d:
                raise DegenerateInput("a halfspace is tight at fewer than d vertices")
    for v in P.vertices:
        if sum(dot(n, v) == b for n, b in P.halfspaces) < d:
            raise DegenerateInput("a vertex lies on fewer than d facets")


def volume(P: ConvexPolytope) -> Fraction:
    """Exact volume; shoelace in the plane, structural for lifted bodies."""
    if P.dim == 1:
        return P.vertices[1][0] - P.vertices[0][0]
    if P.dim == 2:
        vs = P.vertices
        n = len(vs)
        twice = sum((vs[i][0] * vs[(i + 1) % n][1] - vs[(i + 1) % n][0] * vs[i][1] for i in range(n)), Fraction(0))
        return twice / 2
    if P.known_volume is not None:
        return P.known_volume
    raise Unsupported("volume of a general body of dimension >= 3 is not available")


def contains(P: ConvexPolytope, x: Sequence, mode: str = "closed") -> bool:
    if len(x) != P.dim:
        raise DimensionMismatch(f"point of dimension {len(x)} vs body of dimension {P.dim}")
    x = as_point(x)
    if mode == "closed":
        return all(dot(n, x) <= b for n, b in P.halfspaces)
    if mode == "open":
        return all(dot(n, x) < b for n, b in P.halfspaces)
    raise ValueError(f"mode must be 'closed' or 'open', not {mode!r}")


def translate(P: ConvexPolytope, t: Sequence) -> ConvexPolytope:
    t = as_point(t)
    if len(t) != P.dim:
        raise DimensionMismatch("translation vector has wrong dimension")
    return affine_image(P, identity(P.dim), t, provenance=P.provenance)


def dilate(P: ConvexPolytope, factor) -> ConvexPolytope:
    """``factor * P`` for a positive rational factor."""
    factor = Q(factor)
    if factor <= 0:
        raise ValueError("dilation factor must be positive")
    R = affine_image(P, tuple(tuple(factor if i == j else Fraction(0) for j in range(P.dim)) for i in range(P.dim)),
                     provenance=P.provenance)
    lf = P.lifting
    if lf is not None:
        # c (s + M L(B, a-h, a+h)) = c s + M L(cB, a-ch, a+ch) since a is linear
        R = replace(R, lifting=Lifting(dilate(lf.base, factor), lf.a_coeffs, factor * lf.half_height,
                                       lf.matrix, scale(factor, lf.shift)))
    return R


def reflect(P: ConvexPolytope) -> ConvexPolytope:
    """The point reflection ``-P``."""
    return affine_image(P, tuple(tuple(Fraction(-1) if i == j else Fraction(0) for j in range(P.dim)) for i in range(P.dim)),
                        provenance=P.provenance)


def _half_turn(v) -> int:
    # 0 for directions with angle in (-pi/2, pi/2], 1 otherwise
    return 0 if v[0] > 0 or (v[0] == 0 and v[1] > 0) else 1


def _edges(P: ConvexPolytope) -> list:
    vs = P.vertices
    return [sub(vs[(i + 1) % len(vs)], vs[i]) for i in range(len(vs))]


def minkowski_sum(P: ConvexPolytope, Q_: "ConvexPolytope | Sequence") -> ConvexPolytope:
    """Minkowski sum of two polygons by merging edge vectors in angular order.

    ``Q_`` may also be a single point, in which case this is a translation.
    """
    if not isinstance(Q_, ConvexPolytope):
        return translate(P, Q_)
    if P.dim != Q_.dim:
        raise DimensionMismatch("summands have different dimensions")
    if P.dim == 1:
        return segment(P.vertices[0][0] + Q_.vertices[0][0], P.vertices[1][0] + Q_.vertices[1][0], "minkowski")
    if P.dim != 2:
        raise Unsupported("Minkowski sums are only computed in the plane")
    # both polygons start at their lexicographically smallest vertex, so every
    # edge direction lies in the turn (-pi/2, 3pi/2] and the merge is monotone
    ep, eq = _edges(P), _edges(Q_)
    out = [add(P.vertices[0], Q_.vertices[0])]
    i = j = 0
    while i < len(ep) or j < len(eq):
        if j == len(eq):
            take = ep[i]; i += 1
        elif i == len(ep):
            take = eq[j]; j += 1
        else:
            a, b = ep[i], eq[j]
            ha, hb = _half_turn(a), _half_turn(b)
            c = a[0] * b[1] - a[1] * b[0]
            if ha < hb or (ha == hb and c > 0):
                take = a; i += 1
            elif hb < ha or (ha == hb and c < 0):
                take = b; j += 1
            else:
                take = add(a, b); i += 1; j += 1
        out.append(add(out[-1], take))
    out.pop()
    return polygon_from_vertices(out, "minkowski")


def difference_body(K: ConvexPolytope) -> ConvexPolytope:
    """``K - K``.

    For lifted bodies this is computed structurally: the difference body of
    ``L(B, a - h, a + h)`` is ``L(B - B, a - 2h, a + 2h)``.
    """
    if K.dim <= 2:
        return minkowski_sum(K, reflect(K))
    if K.lifting is None:
        raise Unsupported("difference body of a general body of dimension >= 3 is not available")
    from .vdc import build_lifting  # lifted bodies are constructed there

    lift = K.lifting
    base_diff = difference_body(lift.base)
    return build_lifting(base_diff, lift.a_coeffs, 2 * lift.half_height, U=lift.matrix)


def bounding_box(P: ConvexPolytope) -> tuple:
    lows = tuple(min(v[i] for v in P.vertices) for i in range(P.dim))
    highs = tuple(max(v[i] for v in P.vertices) for i in range(P.dim))
    return lows, highs


def _scaled_halfspaces(P: ConvexPolytope) -> list:
    # n.x <= p/q  as  q (n.x) <= p, all integers
    return [(n, b.numerator, b.denominator) for n, b in P.halfspaces]


def lattice_points(P: ConvexPolytope, mode: str = "closed") -> list:
    """Integer points of P (or of its interior), in lexicographic order.

    The first d - 1 coordinates are scanned over the bounding box; the last
    one is solved as an integer interval from the half-spaces.
    """
    lows, highs = bounding_box(P)
    strict = mode == "open"
    if mode not in ("open", "closed"):
        raise ValueError(f"mode must be 'closed' or 'open', not {mode!r}")
    hs = _scaled_halfspaces(P)
    d = P.dim
    ranges = [range(math.ceil(lo), math.floor(hi) + 1) for lo, hi in zip(lows[:-1], highs[:-1])]
    zlo, zhi = math.ceil(lows[-1]), math.floor(highs[-1])
    out = []
    for head in itertools.product(*ranges):
        lo, hi = zlo, zhi
        ok = True
        for n, num, den in hs:
            rest = sum(a * b for a, b in zip(n, head))
            c = n[d - 1]
            # den*(rest + c*t) <= num   (strict in open mode)
            rhs = num - den * rest
            k = den * c
            if k == 0:
                if rhs < 0 or (strict and rhs == 0):
                    ok = False
                    break
            elif k > 0:
                # t <= rhs / k
                bound = rhs // k
                if strict and bound * k == rhs:
                    bound -= 1
                hi = min(hi, bound)
            else:
                # t >= rhs / k since k < 0
                bound = -((-rhs) // k)
                if strict and bound * k == rhs:
                    bound += 1
                lo = max(lo, bound)
            if lo > hi:
                ok = False
                break
        if ok:
            for t in range(lo, hi + 1):
                out.append(tuple(Fraction(c) for c in head) + (Fraction(t),))
    return out


def symmetry_center(P: ConvexPolytope) -> Point | None:
    n = len(P.vertices)
    c = tuple(sum(v[i] for v in P.vertices) / n for i in range(P.dim))
    vs = set(P.vertices)
    for v in P.vertices:
        if tuple(2 * ci - vi for ci, vi in zip(c, v)) not in vs:
            return None
    return c


def is_o_symmetric(P: ConvexPolytope) -> bool:
    c = symmetry_center(P)
    return c is not None and all(ci == 0 for ci in c)


def affine_image(P: ConvexPolytope, U, t: Sequence | None = None, provenance: str = "affine-image") -> ConvexPolytope:
    """Image of P under ``x -> U x + t`` for a nonsingular rational matrix U.

    Raises:
        SingularMatrix: det U = 0.
    """
    U = as_matrix(U)
    d = P.dim
    if len(U) != d:
        raise DimensionMismatch("matrix size does not match body dimension")
    t = as_point(t) if t is not None else tuple(Fraction(0) for _ in range(d))
    if len(t) != d:
        raise DimensionMismatch("translation vector has wrong dimension")
    D = det(U)
    if D == 0:
        raise SingularMatrix("affine map is singular")
    lifting = None
    if P.lifting is not None:
        lf = P.lifting
        lifting = Lifting(lf.base, lf.a_coeffs, lf.half_height, mat_mul(U, lf.matrix), add(mat_vec(U, lf.shift), t))
    verts = [add(mat_vec(U, v), t) for v in P.vertices]
    if d <= 2:
        R = polytope_from_points(verts)
        return replace(R, provenance=provenance, lifting=lifting)
    Uinv = inverse(U)
    Uinv_t = mat_vec(Uinv, t)
    # n.x <= b with x = Uinv (x' - t)  becomes  (n Uinv).x' <= b + n.(Uinv t)
    hs = []
    for n, b in P.halfspaces:
        row = tuple(sum((n[k] * Uinv[k][j] for k in range(d)), Fraction(0)) for j in range(d))
        hs.append((row, b + dot(n, Uinv_t)))
    vol = P.known_volume * abs(D) if P.known_volume is not None else None
    return ConvexPolytope(d, tuple(sorted(verts)), _canonical_halfspaces(hs), provenance, lifting, vol)


# ---------------------------------------------------------------------------
# vertical fibers


@dataclass(frozen=True)
class PiecewiseLinearEnvelope:
    """Lower or upper boundary of a body over its projection.

    In the plane this is a piecewise linear function of the first coordinate
    given by ``breakpoints`` and ``values``.  For lifted bodies it is affine,
    ``linear . y + constant``, over the base.
    """

    breakpoints: tuple
    values: tuple
    kind: str
    linear: tuple | None = None
    constant: Fraction | None = None

    def __call__(self, y) -> Fraction:
        if isinstance(y, (int, Fraction, str)):
            y = (Q(y),)
        y = as_point(y)
        if self.linear is not None:
            return dot(self.linear, y) + self.constant
        xs = [b[0] for b in self.breakpoints]
        x = y[0]
        if x < xs[0] or x > xs[-1]:
            raise ValueError("point outside the projection")
        i = bisect_right(xs, x) - 1
        if i >= len(xs) - 1:
            return self.values[-1]
        x0, x1 = xs[i], xs[i + 1]
        v0, v1 = self.values[i], self.values[i + 1]
        return v0 + (v1 - v0) * (x - x0) / (x1 - x0)

    def is_convex(self) -> bool:
        if self.linear is not None:
            return True
        xs = [b[0] for b in self.breakpoints]
        slopes = [(self.values[i + 1] - self.values[i]) / (xs[i + 1] - xs[i]) for i in range(len(xs) - 1)]
        if self.kind == "lower":
            return all(s0 < s1 for s0, s1 in zip(slopes, slopes[1:]))
        return all(s0 > s1 for s0, s1 in zip(slopes, slopes[1:]))


def _chains_2d(P: ConvexPolytope):
    vs = P.vertices
    n = len(vs)
    xmax = max(v[0] for v in vs)
    xmin = vs[0][0]
    r_low = next(i for i in range(n) if vs[i][0] == xmax)
    r_high = max(range(n), key=lambda i: (vs[i][0], vs[i][1]))
    lower = list(vs[: r_low + 1])
    upper = [vs[r_high]]
    i = r_high
    while True:
        i = (i + 1) % n
        if i == 0:
            if not (upper[-1][0] == xmin):
                upper.append(vs[0])
            break
        upper.append(vs[i])
        if vs[i][0] == xmin:
            break
    upper.reverse()
    return lower, upper


def vertical_envelopes(P: ConvexPolytope):
    """Lower and upper boundary functions of P over its projection.

    Raises:
        Unsupported: for bodies of dimension >= 3 that are not axis-aligned
            liftings.
    """
    if P.dim == 2:
        lower, upper = _chains_2d(P)
        return (
            PiecewiseLinearEnvelope(tuple((v[0],) for v in lower), tuple(v[1] for v in lower), "lower"),
            PiecewiseLinearEnvelope(tuple((v[0],) for v in upper), tuple(v[1] for v in upper), "upper"),
        )
    lf = P.lifting
    if P.dim >= 3 and lf is not None and lf.matrix == identity(P.dim):
        shift_y, shift_t = lf.shift[:-1], lf.shift[-1]
        a = lf.a_coeffs
        c = shift_t - dot(a, shift_y)
        bps = tuple(add(v, shift_y) for v in lf.base.vertices)
        return (
            PiecewiseLinearEnvelope(bps, tuple(dot(a, sub(b, shift_y)) + shift_t - lf.half_height for b in bps),
                                    "lower", a, c - lf.half_height),
            PiecewiseLinearEnvelope(bps, tuple(dot(a, sub(b, shift_y)) + shift_t + lf.half_height for b in bps),
                                    "upper", a, c + lf.half_height),
        )
    raise Unsupported("vertical envelopes need a planar body or an axis-aligned lifting")


def fiber(P: ConvexPolytope, y) -> tuple | None:
    """Endpoints of the vertical section over ``y`` or None if ``y`` is outside."""
    lower, upper = vertical_envelopes(P)
    if isinstance(y, (int, Fraction, str)):
        y = (Q(y),)
    y = as_point(y)
    if P.dim == 2:
        xs = (lower.breakpoints[0][0], lower.breakpoints[-1][0])
        if not xs[0] <= y[0] <= xs[1]:
            return None
    elif not contains(P.lifting.base, sub(y, P.lifting.shift[:-1])):
        return None
    return lower(y), upper(y)


def fiber_length(P: ConvexPolytope, y) -> Fraction:
    f = fiber(P, y)
    if f is None:
        raise ValueError("point outside the projection")
    return f[1] - f[0]
