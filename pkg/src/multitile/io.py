"""JSON interchange for polytopes and certificates.

Rationals are always written as strings (``"5/4"``, ``"-3"``) so no binary
float ever enters a file.  Polygons are stored by their canonical vertex
list; bodies of dimension >= 3 additionally carry their half-spaces and, when
they are liftings, the recipe they were built from.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .errors import MultitileError, ParseError
from .exactgeom import ConvexPolytope, Q, affine_image, identity, polytope_from_points, polytope_from_reps
from .tiler import TilingCertificate
from .vdc import (
    CollisionCensus,
    LiftingCertificate,
    NoLifting,
    ReplicationCertificate,
    VdcReport,
    build_lifting,
)


def rational_to_str(q) -> str:
    return str(Fraction(q))


def parse_rational(value) -> Fraction:
    if isinstance(value, float):
        raise ParseError(f"float {value!r} in input; write rationals as strings such as \"3/4\"")
    try:
        return Q(value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational: {value!r}") from exc


def _vec(v) -> list:
    return [rational_to_str(c) for c in v]


def _mat(M) -> list:
    return [_vec(row) for row in M]


def _parse_vec(v) -> tuple:
    if not isinstance(v, (list, tuple)):
        raise ParseError(f"expected a list of rationals, got {v!r}")
    return tuple(parse_rational(c) for c in v)


# ---------------------------------------------------------------------------
# polytopes


def polytope_to_dict(P: ConvexPolytope) -> dict:
    doc = {"dim": P.dim, "vertices": [_vec(v) for v in P.vertices]}
    if P.dim >= 3:
        doc["halfspaces"] = [{"normal": list(n), "offset": rational_to_str(b)} for n, b in P.halfspaces]
    lf = P.lifting
    if lf is not None and P.dim >= 3:
        doc["lifting"] = {
            "base": polytope_to_dict(lf.base),
            "a": _vec(lf.a_coeffs),
            "half_height": rational_to_str(lf.half_height),
            "matrix": _mat(lf.matrix),
            "shift": _vec(lf.shift),
        }
    return doc


def _lifting_from_dict(doc: dict) -> ConvexPolytope:
    base = polytope_from_dict(doc["base"])
    C = build_lifting(base, _parse_vec(doc["a"]), parse_rational(doc["half_height"]))
    M = tuple(_parse_vec(r) for r in doc["matrix"]) if "matrix" in doc else identity(C.dim)
    t = _parse_vec(doc["shift"]) if "shift" in doc else None
    if M != identity(C.dim) or (t is not None and any(t)):
        C = affine_image(C, M, t, provenance="lifting")
    return C


def polytope_from_dict(doc: dict) -> ConvexPolytope:
    """Parse a polytope document.

    A ``lifting`` block is rebuilt and, if vertices or half-spaces are also
    given, checked against them.  Without it a body of dimension >= 3 needs
    explicit half-spaces.

    Raises:
        ParseError: malformed document or inconsistent representations.
    """
    if not isinstance(doc, dict):
        raise ParseError("a polytope document must be a JSON object")
    try:
        if "lifting" in doc:
            P = _lifting_from_dict(doc["lifting"])
            if "vertices" in doc and tuple(sorted(_parse_vec(v) for v in doc["vertices"])) != P.vertices:
                raise ParseError("vertices disagree with the lifting block")
            if "halfspaces" in doc:
                given = polytope_from_reps(P.vertices, _parse_halfspaces(doc["halfspaces"]))
                if given.halfspaces != P.halfspaces:
                    raise ParseError("half-spaces disagree with the lifting block")
        else:
            verts = [_parse_vec(v) for v in doc["vertices"]]
            if "halfspaces" in doc:
                P = polytope_from_reps(verts, _parse_halfspaces(doc["halfspaces"]))
            elif verts and len(verts[0]) >= 3:
                raise ParseError("bodies of dimension >= 3 need \"halfspaces\" or a \"lifting\" block")
            else:
                P = polytope_from_points(verts)
    except KeyError as exc:
        raise ParseError(f"missing field {exc.args[0]!r}") from exc
    except ParseError:
        raise
    except (MultitileError, TypeError, ValueError) as exc:
        raise ParseError(str(exc)) from exc
    if "dim" in doc and doc["dim"] != P.dim:
        raise ParseError(f"declared dim {doc['dim']} but the vertices have dimension {P.dim}")
    return P


def _parse_halfspaces(items) -> list:
    out = []
    for h in items:
        if isinstance(h, dict):
            n, b = h["normal"], h["offset"]
        else:
            n, b = h
        out.append((_parse_vec(n), parse_rational(b)))
    return out


@dataclass(frozen=True)
class PolytopeFile:
    polytope: ConvexPolytope
    name: str | None = None
    expected: dict = field(default_factory=dict)


def parse_polytope_file(text: str) -> PolytopeFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    P = polytope_from_dict(doc)
    expected = doc.get("expected") or {}
    if not isinstance(expected, dict):
        raise ParseError("\"expected\" must be an object")
    return PolytopeFile(P, doc.get("name"), dict(expected))


def load_polytope_file(path) -> PolytopeFile:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(str(exc)) from exc
    return parse_polytope_file(text)


def polytope_file_to_dict(pf: PolytopeFile) -> dict:
    doc = {}
    if pf.name is not None:
        doc["name"] = pf.name
    doc.update(polytope_to_dict(pf.polytope))
    if pf.expected:
        doc["expected"] = dict(pf.expected)
    return doc


def _is_flat(x) -> bool:
    return isinstance(x, list) and all(not isinstance(c, (list, dict)) for c in x)


def _format(x, indent: int) -> str:
    pad, inner = "  " * indent, "  " * (indent + 1)
    if isinstance(x, dict):
        if all(not isinstance(v, (list, dict)) or _is_flat(v) for v in x.values()) and len(json.dumps(x)) <= 72:
            return json.dumps(x)
        items = [f"{inner}{json.dumps(k)}: {_format(v, indent + 1)}" for k, v in x.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(x, list) and x and not _is_flat(x):
        return "[\n" + ",\n".join(inner + _format(v, indent + 1) for v in x) + "\n" + pad + "]"
    # scalars and flat lists (coordinates, matrix rows) stay on one line
    return json.dumps(x)


def dumps(doc) -> str:
    """Stable JSON text with one line per coordinate list and a final newline."""
    return _format(doc, 0) + "\n"


# ---------------------------------------------------------------------------
# certificates


def tiling_certificate_to_dict(c: TilingCertificate) -> dict:
    return {
        "kind": c.kind,
        "m": c.m,
        "volume": rational_to_str(c.volume),
        "min_open_multiplicity": c.min_open_mult,
        "max_open_multiplicity": c.max_open_mult,
        "histogram": [{"multiplicity": k, "area": rational_to_str(a)} for k, a in c.histogram],
        "witness": None if c.witness is None else _vec(c.witness),
        "cells": c.cell_count,
    }


def lifting_certificate_to_dict(c) -> dict:
    if isinstance(c, NoLifting) or c is None:
        return {"lifting": False, "reason": getattr(c, "reason", None)}
    return {
        "lifting": True,
        "U": [list(r) for r in c.U],
        "base": polytope_to_dict(c.base),
        "a": _vec(c.a_coeffs),
        "m": c.m,
        "direction": list(c.direction),
    }


def lifting_certificate_from_dict(doc: dict) -> LiftingCertificate:
    try:
        return LiftingCertificate(
            tuple(tuple(int(x) for x in r) for r in doc["U"]),
            polytope_from_dict(doc["base"]),
            _parse_vec(doc["a"]),
            int(doc["m"]),
            tuple(int(x) for x in doc.get("direction", ())),
        )
    except KeyError as exc:
        raise ParseError(f"missing field {exc.args[0]!r}") from exc


def replication_to_dict(r: ReplicationCertificate | None) -> dict:
    if r is None:
        return {"replication": False}
    return {
        "replication": True,
        "index": r.sublattice.index,
        "hnf": [list(row) for row in r.sublattice.basis],
        "cosets": [list(v) for v in r.cosets],
    }


def replication_from_dict(doc: dict) -> ReplicationCertificate:
    from .zlinalg import SublatticeBasis

    try:
        return ReplicationCertificate(
            SublatticeBasis(tuple(tuple(int(x) for x in row) for row in doc["hnf"])),
            tuple(tuple(int(x) for x in v) for v in doc["cosets"]),
        )
    except KeyError as exc:
        raise ParseError(f"missing field {exc.args[0]!r}") from exc


def vdc_report_to_dict(r: VdcReport, lifting=None) -> dict:
    doc = {
        "m": r.m,
        "dim": r.dim,
        "bound": rational_to_str(r.bound),
        "refined_bound": None if r.refined_bound is None else rational_to_str(r.refined_bound),
        "volume": rational_to_str(r.volume),
        "equality": r.equality,
        "half_body": None if r.half_body_certificate is None else tiling_certificate_to_dict(r.half_body_certificate),
    }
    if lifting is not None:
        doc["lifting_certificate"] = lifting_certificate_to_dict(lifting)
    return doc


def census_to_dict(c: CollisionCensus) -> dict:
    return {
        "N": c.N,
        "m": c.m,
        "inequality_holds": c.inequality_holds,
        "equality": c.equality,
        "centrally_symmetric": c.centrally_symmetric,
        "center": None if c.center is None else _vec(c.center),
        "lifting_certificate": None if c.lifting is None else lifting_certificate_to_dict(c.lifting),
    }
