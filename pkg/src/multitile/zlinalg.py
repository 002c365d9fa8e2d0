"""Integer lattice linear algebra and finite difference sets.

Sublattices of Z^d are identified by their column Hermite normal form: an
upper-triangular integer matrix H with positive diagonal and entries to the
right of the diagonal reduced modulo the diagonal entry of their row.  The
sublattice is ``H Z^d`` and its index in Z^d is the product of the diagonal.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import EmptySet, NotPrimitive, ZeroVector
from .exactgeom import as_point, rank, sub

IntVector = tuple  # tuple[int, ...]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``a*x + b*y = g = gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def _ints(v: Iterable) -> IntVector:
    out = []
    for c in v:
        c = Fraction(c)
        if c.denominator != 1:
            raise ValueError(f"{c} is not an integer")
        out.append(int(c))
    return tuple(out)


def content(v: Sequence[int]) -> int:
    g = 0
    for c in v:
        g = math.gcd(g, int(c))
    return g


def is_primitive(v: Sequence) -> bool:
    v = _ints(v)
    if not any(v):
        raise ZeroVector("the zero vector has no primitivity")
    return content(v) == 1


def primitive_direction(v: Sequence) -> IntVector:
    """``v / gcd(v)`` with the sign chosen lexicographically positive."""
    v = _ints(v)
    g = content(v)
    if g == 0:
        raise ZeroVector("the zero vector has no direction")
    u = tuple(c // g for c in v)
    first = next(c for c in u if c)
    return u if first > 0 else tuple(-c for c in u)


def int_det(M: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free determinant."""
    A = [list(map(int, row)) for row in M]
    n = len(A)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if A[r][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def int_mat_vec(M, v) -> IntVector:
    return tuple(sum(a * b for a, b in zip(row, v)) for row in M)


def unimodular_map_to_axis(v: Sequence) -> tuple:
    """Integer matrix U with ``|det U| = 1`` and ``U v = e_d``.

    Each coordinate is folded into the last one by a 2x2 extended-gcd step,
    so ``v = e_d`` gives the identity.

    Raises:
        ZeroVector, NotPrimitive.
    """
    v = list(_ints(v))
    if not is_primitive(v):
        raise NotPrimitive(f"{tuple(v)} is not primitive")
    d = len(v)
    U = [[int(i == j) for j in range(d)] for i in range(d)]
    last = d - 1
    for i in range(d - 1):
        a, b = v[i], v[last]
        if a == 0:
            continue
        g, x, y = xgcd(a, b)
        # rows (i, last) <- [[-b/g, a/g], [x, y]] . rows (i, last); det = -1
        ri, rl = U[i], U[last]
        U[i] = [(-b // g) * p + (a // g) * q for p, q in zip(ri, rl)]
        U[last] = [x * p + y * q for p, q in zip(ri, rl)]
        v[i], v[last] = 0, g
    if v[last] == -1:
        U[last] = [-c for c in U[last]]
    return tuple(tuple(row) for row in U)


@dataclass(frozen=True)
class SublatticeBasis:
    """A full-rank sublattice of Z^d given by its column Hermite normal form."""

    basis: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def index(self) -> int:
        return math.prod(self.basis[i][i] for i in range(self.dim))

    @property
    def columns(self) -> tuple:
        return tuple(zip(*self.basis))

    def contains(self, z: Sequence) -> bool:
        return not any(reduce_mod(self, z))

    def is_diagonal(self) -> bool:
        return all(self.basis[i][j] == 0 for i in range(self.dim) for j in range(self.dim) if i != j)


def hermite_normal_form(columns: Sequence[Sequence[int]]) -> SublatticeBasis:
    """Column HNF of the lattice spanned by ``columns`` (must have full rank)."""
    cols = [list(_ints(c)) for c in columns]
    d = len(cols[0])
    H = []
    # eliminate rows from the bottom up so the result is upper triangular
    pool = cols
    for row in range(d - 1, -1, -1):
        live = [c for c in pool if c[row] != 0]
        rest = [c for c in pool if c[row] == 0]
        if not live:
            raise ValueError("columns do not span a full-rank lattice")
        while len(live) > 1:
            live.sort(key=lambda c: abs(c[row]))
            p = live[0]
            nxt = [p]
            for c in live[1:]:
                q = c[row] // p[row]
                c = [ci - q * pi for ci, pi in zip(c, p)]
                (nxt if c[row] != 0 else rest).append(c)
            live = nxt
        piv = live[0]
        if piv[row] < 0:
            piv = [-c for c in piv]
        H.append(piv)
        pool = rest
    H.reverse()  # H[j] is now the column with pivot in row j
    for k in range(1, d):
        # column j only touches rows <= j, so reduce column k bottom-up
        for j in range(k - 1, -1, -1):
            q = H[k][j] // H[j][j]
            if q:
                H[k] = [a - q * b for a, b in zip(H[k], H[j])]
    return SublatticeBasis(tuple(tuple(H[j][i] for j in range(d)) for i in range(d)))


def _divisor_tuples(m: int, d: int):
    if d == 1:
        yield (m,)
        return
    for a in range(1, m + 1):
        if m % a == 0:
            for rest in _divisor_tuples(m // a, d - 1):
                yield (a,) + rest


def sublattices_of_index(d: int, m: int) -> list[SublatticeBasis]:
    """Every sublattice of Z^d of index m, once each, in canonical HNF order."""
    if d < 1 or m < 1:
        raise ValueError("need d >= 1 and m >= 1")
    out = []
    for diag in _divisor_tuples(m, d):
        slots = [(i, j) for i in range(d) for j in range(i + 1, d)]
        for vals in itertools.product(*(range(diag[i]) for i, _ in slots)):
            H = [[0] * d for _ in range(d)]
            for i in range(d):
                H[i][i] = diag[i]
            for (i, j), v in zip(slots, vals):
                H[i][j] = v
            out.append(SublatticeBasis(tuple(tuple(r) for r in H)))
    return out


def reduce_mod(L: SublatticeBasis, z: Sequence) -> IntVector:
    """Canonical residue of ``z`` modulo L, inside the box of the diagonal."""
    z = list(_ints(z))
    H = L.basis
    for j in range(L.dim - 1, -1, -1):
        q = z[j] // H[j][j]
        if q:
            for i in range(j + 1):
                z[i] -= q * H[i][j]
    return tuple(z)


def coset_representatives(L: SublatticeBasis) -> list[IntVector]:
    diag = [L.basis[i][i] for i in range(L.dim)]
    return [tuple(v) for v in itertools.product(*(range(n) for n in diag))]


# ---------------------------------------------------------------------------
# finite point sets


def _point_set(X: Iterable) -> list:
    pts = sorted({as_point(x) for x in X})
    if not pts:
        raise EmptySet("the point set is empty")
    return pts


def difference_set(X: Iterable) -> list:
    pts = _point_set(X)
    return sorted({sub(p, q) for p in pts for q in pts})


def affine_dim(X: Iterable) -> int:
    pts = _point_set(X)
    return rank([sub(p, pts[0]) for p in pts[1:]])


def is_arithmetic_progression(X: Iterable) -> bool:
    """True iff X is collinear and equally spaced; sets of size <= 2 qualify."""
    pts = _point_set(X)
    if len(pts) <= 2:
        return True
    # lexicographic order is the order along the line when the set is collinear
    step = sub(pts[1], pts[0])
    return all(sub(pts[i + 1], pts[i]) == step for i in range(len(pts) - 1))
