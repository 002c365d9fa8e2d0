"""Van der Corput's inequality, its equality case, and replication of tilings.

An o-symmetric body C with 2m - 1 interior lattice points has volume at most
m 2^d.  For m >= 2 the bound is attained exactly by cylindrical m-liftings:
``L(B, a - m, a + m) = {(y, t) : y in B, |t - a(y)| <= m}`` for an extremal
base B and a linear form a, up to a linear unimodular change of coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Sequence

from .errors import DegenerateBase, EvenInteriorCount, NotATiling, NotOriginSymmetric
from .exactgeom import (
    ConvexPolytope,
    Lifting,
    Q,
    affine_image,
    affine_rank,
    as_matrix,
    dilate,
    dot,
    identity,
    integer_normal,
    inverse,
    is_o_symmetric,
    lattice_points,
    polytope_from_points,
    solve,
    symmetry_center,
    translate,
    volume,
)
from .tiler import TilingCertificate, classify, collision_vectors, verify_sublattice_tiling
from .zlinalg import (
    SublatticeBasis,
    affine_dim,
    coset_representatives,
    int_det,
    is_arithmetic_progression,
    primitive_direction,
    sublattices_of_index,
    unimodular_map_to_axis,
)


@dataclass(frozen=True)
class SymmetricBodyClass:
    body: ConvexPolytope
    m: int
    interior_points: tuple
    interior_dim: int


def classify_symmetric(C: ConvexPolytope) -> SymmetricBodyClass:
    """Place an o-symmetric body in its family of 2m - 1 interior lattice points.

    Raises:
        NotOriginSymmetric: carrying the first vertex whose mirror image is
            missing.
    """
    vs = set(C.vertices)
    for v in C.vertices:
        if tuple(-c for c in v) not in vs:
            raise NotOriginSymmetric(f"vertex {tuple(map(str, v))} has no mirror image", vertex=v)
    pts = tuple(tuple(int(c) for c in p) for p in lattice_points(C, "open"))
    if len(pts) % 2 == 0:
        raise EvenInteriorCount(f"{len(pts)} interior lattice points in an o-symmetric body")
    return SymmetricBodyClass(C, (len(pts) + 1) // 2, pts, affine_dim(pts))


@dataclass(frozen=True)
class VdcReport:
    m: int
    dim: int
    bound: Fraction
    refined_bound: Fraction | None
    volume: Fraction
    equality: bool
    half_body_certificate: TilingCertificate | None = None


def vdc_check(S: SymmetricBodyClass) -> VdcReport:
    """Compare vol(C) with m 2^d and, if 2 or more dimensions of interior
    lattice points are present, with (m - 1) 2^d.

    At equality the half body is classified as an independent cross-check:
    its translates must form an m-fold tiling.
    """
    d = S.body.dim
    bound = Fraction(S.m * 2**d)
    refined = Fraction((S.m - 1) * 2**d) if S.interior_dim >= 2 else None
    vol = volume(S.body)
    equality = vol == bound
    cert = None
    if equality and (d <= 2 or S.body.lifting is not None):
        cert = classify(dilate(S.body, Fraction(1, 2)))
    return VdcReport(S.m, d, bound, refined, vol, equality, cert)


def is_extremal(B: ConvexPolytope) -> bool:
    """o-symmetric, a single interior lattice point and volume 2^k.

    In the plane the half body must also tile one-fold and B may have at most
    six edges.
    """
    if not is_o_symmetric(B):
        return False
    if len(lattice_points(B, "open")) != 1:
        return False
    if volume(B) != 2**B.dim:
        return False
    if B.dim == 2:
        if len(B.vertices) > 6:
            return False
        cert = classify(dilate(B, Fraction(1, 2)))
        if not (cert.is_tiling and cert.m == 1):
            return False
    return True


# ---------------------------------------------------------------------------
# liftings


def _as_matrix_or_identity(U, d):
    return identity(d) if U is None else as_matrix(U)


def build_lifting(B: ConvexPolytope, a_coeffs: Sequence, m, U=None, t=None) -> ConvexPolytope:
    """``t + U . L(B, a - m, a + m)`` for a linear form a on the base.

    The height m may be any positive rational; certificates use integers.

    Raises:
        DegenerateBase: the base is not full-dimensional or the form has the
            wrong length.
    """
    a = tuple(Q(c) for c in a_coeffs)
    m = Q(m)
    k = B.dim
    if len(a) != k:
        raise DegenerateBase(f"linear form has {len(a)} coefficients for a {k}-dimensional base")
    if m <= 0:
        raise ValueError("lifting height must be positive")
    if affine_rank(list(B.vertices)) != k:
        raise DegenerateBase("base is not full-dimensional")
    d = k + 1
    verts = []
    for v in B.vertices:
        c = dot(a, v)
        verts.append(v + (c - m,))
        verts.append(v + (c + m,))
    lifting = Lifting(B, a, m, identity(d), tuple(Fraction(0) for _ in range(d)))
    vol = 2 * m * volume(B)
    if d == 2:
        C = replace(polytope_from_points(verts), provenance="lifting", lifting=lifting)
    else:
        hs = [(tuple(n) + (0,), b) for n, b in B.halfspaces]
        hs.append(integer_normal(tuple(-c for c in a) + (1,), m))
        hs.append(integer_normal(a + (-1,), m))
        hs = tuple(sorted({integer_normal(n, b) for n, b in hs}))
        C = ConvexPolytope(d, tuple(sorted(verts)), hs, "lifting", lifting, vol)
    if U is not None or t is not None:
        C = affine_image(C, _as_matrix_or_identity(U, d), t, provenance="lifting")
    return C


@dataclass(frozen=True)
class LiftingCertificate:
    """``body == U . L(base, a - m, a + m)``, with base extremal."""

    U: tuple
    base: ConvexPolytope
    a_coeffs: tuple
    m: int
    direction: tuple = ()

    def rebuild(self) -> ConvexPolytope:
        return build_lifting(self.base, self.a_coeffs, self.m, U=self.U)

    def validate(self, C: ConvexPolytope) -> bool:
        if abs(int_det(self.U)) != 1:
            return False
        if not is_extremal(self.base):
            return False
        return self.rebuild() == C


@dataclass(frozen=True)
class NoLifting:
    """Falsy result of :func:`detect_lifting` naming the failed condition."""

    reason: str

    def __bool__(self):
        return False


def _fit_linear_form(ys: Sequence, values: Sequence):
    """Linear a with a(y) = value for every pair, or None."""
    k = len(ys[0])
    basis = []
    for y in ys:
        if affine_rank([tuple(Fraction(0) for _ in range(k))] + basis + [y]) > len(basis):
            basis.append(y)
        if len(basis) == k:
            break
    if len(basis) < k:
        return None
    rhs = [values[ys.index(y)] for y in basis]
    a = solve(basis, rhs)
    if all(dot(a, y) == val for y, val in zip(ys, values)):
        return a
    return None


def detect_lifting(S: SymmetricBodyClass):
    """Recover ``(U, B, a, m)`` with ``C = U^{-1} . L(B, a - m, a + m)``.

    Returns a :class:`LiftingCertificate`, or a falsy :class:`NoLifting`
    carrying the first condition that failed.  The test is combinatorial:
    after moving the interior lattice points onto the last axis, the upper
    vertices must be the lower vertices shifted by 2m along that axis, the
    midline between them must be linear and the projection extremal.
    """
    C, m = S.body, S.m
    d = C.dim
    if d < 2:
        return NoLifting("dimension < 2")
    if m < 2:
        return NoLifting("m < 2")
    if S.interior_dim != 1:
        return NoLifting(f"interior lattice points span dimension {S.interior_dim}, not 1")
    nonzero = [p for p in S.interior_points if any(p)]
    v = primitive_direction(nonzero[0])
    expected = {tuple(i * c for c in v) for i in range(-(m - 1), m)}
    if set(S.interior_points) != expected or not is_arithmetic_progression(S.interior_points):
        return NoLifting("interior lattice points are not consecutive multiples of a primitive vector")
    U = unimodular_map_to_axis(v)
    Cp = affine_image(C, U)

    groups: dict = {}
    for w in Cp.vertices:
        groups.setdefault(w[:-1], []).append(w[-1])
    ys = sorted(groups)
    mids = []
    for y in ys:
        ts = groups[y]
        if len(ts) != 2 or max(ts) - min(ts) != 2 * m:
            return NoLifting("upper vertices are not the lower vertices shifted by 2m")
        mids.append((ts[0] + ts[1]) / 2)
    a = _fit_linear_form(ys, mids)
    if a is None:
        return NoLifting("midline between upper and lower boundary is not linear")
    B = polytope_from_points(ys) if d <= 3 else None
    if B is None:
        return NoLifting("bases of dimension >= 3 are not supported")
    if len(B.vertices) != len(ys):
        return NoLifting("a vertical edge does not project to a vertex of the base")
    if not is_extremal(B):
        return NoLifting("projection is not an extremal body")
    Uinv = tuple(tuple(int(c) for c in row) for row in inverse(U))
    cert = LiftingCertificate(Uinv, B, tuple(a), m, v)
    if cert.rebuild() != C:
        return NoLifting("rebuilt lifting differs from the body")
    return cert


# ---------------------------------------------------------------------------
# multiple tilings


@dataclass(frozen=True)
class CollisionCensus:
    N: int
    m: int | None
    inequality_holds: bool
    equality: bool
    centrally_symmetric: bool
    center: tuple | None = None
    lifting: LiftingCertificate | NoLifting | None = None


def collision_census(K: ConvexPolytope, certificate: TilingCertificate | None = None) -> CollisionCensus:
    """Check ``m <= N + 1`` for an m-fold tiling with 2N collision vectors.

    Central symmetry is checked directly.  At equality with m >= 2 the
    recentred ``2K`` is tested for being a cylindrical m-lifting.

    Raises:
        NotATiling: T(K) is not a multiple tiling.
    """
    cert = certificate or classify(K)
    if not cert.is_tiling:
        raise NotATiling(f"translates form a {cert.kind} certificate, not a tiling")
    m = cert.m
    N = len(collision_vectors(K)) // 2
    c = symmetry_center(K)
    equality = m == N + 1
    lifting = None
    if c is not None and equality and m >= 2:
        C = dilate(translate(K, tuple(-x for x in c)), 2)
        lifting = detect_lifting(classify_symmetric(C))
    return CollisionCensus(N, m, m <= N + 1, equality, c is not None, c, lifting)


@dataclass(frozen=True)
class ReplicationCertificate:
    """``T(K)`` splits into the one-fold tilings ``{K + z : z in v + L}``."""

    sublattice: SublatticeBasis
    cosets: tuple
    certificate: TilingCertificate | None = field(default=None, compare=False)


def replication_sublattices(K: ConvexPolytope, certificate: TilingCertificate | None = None) -> list:
    """Every sublattice of index m whose translates of K tile one-fold."""
    return list(_replications(K, certificate, stop_at_first=False))


def _replications(K, certificate, stop_at_first):
    cert = certificate or classify(K)
    if not cert.is_tiling:
        raise NotATiling(f"translates form a {cert.kind} certificate, not a tiling")
    for L in sublattices_of_index(K.dim, cert.m):
        sub = verify_sublattice_tiling(K, L)
        if sub.is_tiling and sub.m == 1:
            yield ReplicationCertificate(L, tuple(coset_representatives(L)), sub)
            if stop_at_first:
                return


def replication_decomposition(K: ConvexPolytope, certificate: TilingCertificate | None = None):
    """First sublattice (in HNF order) exhibiting T(K) as a replication, or None.

    Raises:
        NotATiling: T(K) is not a multiple tiling.
    """
    return next(_replications(K, certificate, stop_at_first=True), None)


def validate_replication(K: ConvexPolytope, rep: ReplicationCertificate) -> bool:
    """Recheck a replication certificate without searching."""
    L = rep.sublattice
    if len(rep.cosets) != L.index or len(set(rep.cosets)) != L.index:
        return False
    from .zlinalg import reduce_mod

    if len({reduce_mod(L, v) for v in rep.cosets}) != L.index:
        return False
    sub = verify_sublattice_tiling(K, L)
    return sub.is_tiling and sub.m == 1 and volume(K) == L.index
