"""Deterministic SVG 1.1 pictures of planar lattice translate systems.

Geometry stays exact until the final formatting step, where coordinates are
printed with a fixed number of decimals so identical inputs give identical
bytes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from xml.sax.saxutils import escape

from .errors import Unsupported
from .exactgeom import ConvexPolytope, Q, bounding_box
from .vdc import ReplicationCertificate
from .zlinalg import reduce_mod

PALETTE = ("#3b6fb6", "#d9822b", "#4f9d50", "#b8413c", "#7d5ba6", "#8c6d3f", "#c95f9e", "#6f7f8f")


@dataclass(frozen=True)
class RenderSpec:
    """Drawing window ``[x0, x1] x [y0, y1]`` in lattice units plus style."""

    window: tuple = ((Fraction(-2), Fraction(-2)), (Fraction(4), Fraction(4)))
    fill_opacity: float = 0.25
    dot_radius: float = 0.06
    pixels_per_unit: int = 60
    stroke_width: float = 0.02
    outline_only_cell: bool = True

    def __post_init__(self):
        (x0, y0), (x1, y1) = self.window
        object.__setattr__(self, "window", ((Q(x0), Q(y0)), (Q(x1), Q(y1))))
        if not (Q(x0) < Q(x1) and Q(y0) < Q(y1)):
            raise ValueError("render window must be nonempty")


def default_window(K: ConvexPolytope, margin: int = 1) -> tuple:
    lo, hi = bounding_box(K)
    x0 = min(0, math.floor(lo[0])) - margin
    y0 = min(0, math.floor(lo[1])) - margin
    x1 = max(1, math.ceil(hi[0])) + margin
    y1 = max(1, math.ceil(hi[1])) + margin
    return ((Fraction(x0), Fraction(y0)), (Fraction(x1), Fraction(y1)))


def _separated(poly, rect_lo, rect_hi) -> bool:
    """Separating-axis test between a convex polygon and an axis box."""
    xs = [p[0] for p in poly]
    ys = [p[1] for p in poly]
    if max(xs) <= rect_lo[0] or min(xs) >= rect_hi[0] or max(ys) <= rect_lo[1] or min(ys) >= rect_hi[1]:
        return True
    corners = [(rect_lo[0], rect_lo[1]), (rect_hi[0], rect_lo[1]), (rect_hi[0], rect_hi[1]), (rect_lo[0], rect_hi[1])]
    n = len(poly)
    for i in range(n):
        (ax, ay), (bx, by) = poly[i], poly[(i + 1) % n]
        nx, ny = by - ay, ax - bx  # outward for a counterclockwise polygon
        if all(nx * (cx - ax) + ny * (cy - ay) >= 0 for cx, cy in corners):
            return True
    return False


def translates_in_window(K: ConvexPolytope, window) -> list:
    """Lattice vectors z, lexicographically sorted, with int(K + z) meeting the window."""
    (x0, y0), (x1, y1) = window
    lo, hi = bounding_box(K)
    out = []
    for zx in range(math.floor(x0 - hi[0]), math.ceil(x1 - lo[0]) + 1):
        for zy in range(math.floor(y0 - hi[1]), math.ceil(y1 - lo[1]) + 1):
            poly = [(v[0] + zx, v[1] + zy) for v in K.vertices]
            if not _separated(poly, (x0, y0), (x1, y1)):
                out.append((zx, zy))
    return out


def _num(x) -> str:
    s = f"{float(x):.4f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def render_svg(K: ConvexPolytope, spec: RenderSpec | None = None,
               replication: ReplicationCertificate | None = None, title: str | None = None) -> str:
    """SVG document of every translate of K meeting the window.

    With a replication certificate each translate is coloured by its coset,
    so the picture separates into the one-fold subtilings.

    Raises:
        Unsupported: K is not planar.
    """
    if K.dim != 2:
        raise Unsupported("only planar bodies can be rendered")
    spec = spec or RenderSpec(default_window(K))
    (x0, y0), (x1, y1) = spec.window
    s = spec.pixels_per_unit
    width, height = (x1 - x0) * s, (y1 - y0) * s

    def px(p):
        # flip y so the picture has the usual orientation
        return f"{_num((p[0] - x0) * s)},{_num((y1 - p[1]) * s)}"

    cosets = {}
    if replication is not None:
        cosets = {tuple(v): i for i, v in enumerate(replication.cosets)}

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_num(width)}" '
        f'height="{_num(height)}" viewBox="0 0 {_num(width)} {_num(height)}">',
    ]
    if title:
        lines.append(f"  <title>{escape(title)}</title>")
    lines.append(f'  <clipPath id="window"><rect x="0" y="0" width="{_num(width)}" height="{_num(height)}"/></clipPath>')
    lines.append('  <rect x="0" y="0" width="100%" height="100%" fill="white"/>')
    lines.append('  <g clip-path="url(#window)">')
    stroke = _num(spec.stroke_width * s)
    for z in translates_in_window(K, spec.window):
        if replication is not None:
            k = cosets[reduce_mod(replication.sublattice, z)]
            colour, cls = PALETTE[k % len(PALETTE)], f"translate coset-{k}"
        else:
            colour, cls = PALETTE[0], "translate"
        pts = " ".join(px((v[0] + z[0], v[1] + z[1])) for v in K.vertices)
        lines.append(
            f'    <polygon points="{pts}" fill="{colour}" fill-opacity="{_num(spec.fill_opacity)}" '
            f'stroke="{colour}" stroke-width="{stroke}" id="t_{z[0]}_{z[1]}" class="{cls}"/>'
        )
    if spec.outline_only_cell:
        cell = " ".join(px(p) for p in ((0, 0), (1, 0), (1, 1), (0, 1)))
        lines.append(f'    <polygon points="{cell}" fill="none" stroke="black" stroke-width="{stroke}" '
                     'stroke-dasharray="4,3"/>')
    r = _num(spec.dot_radius * s)
    for gx in range(math.ceil(x0), math.floor(x1) + 1):
        for gy in range(math.ceil(y0), math.floor(y1) + 1):
            cx, cy = px((gx, gy)).split(",")
            lines.append(f'    <circle cx="{cx}" cy="{cy}" r="{r}" fill="black"/>')
    lines.append("  </g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
