"""Exact verification of multiple lattice tilings by convex polytopes."""

from .errors import (
    DegenerateBase,
    DegenerateInput,
    DimensionMismatch,
    EmptySet,
    EvenInteriorCount,
    MultitileError,
    NotATiling,
    NotOriginSymmetric,
    NotPrimitive,
    ParseError,
    SingularMatrix,
    Unsupported,
    ZeroVector,
)
from .exactgeom import (
    ConvexPolytope,
    affine_image,
    contains,
    difference_body,
    dilate,
    lattice_points,
    minkowski_sum,
    polygon_from_vertices,
    polytope_from_points,
    polytope_from_reps,
    segment,
    translate,
    volume,
)
from .tiler import (
    TilingCertificate,
    classify,
    collision_vectors,
    multiplicity,
    packing_bound_from_collisions,
    torus_cells,
    verify_sublattice_tiling,
)
from .vdc import (
    LiftingCertificate,
    build_lifting,
    classify_symmetric,
    collision_census,
    detect_lifting,
    is_extremal,
    replication_decomposition,
    replication_sublattices,
    validate_replication,
    vdc_check,
)
from .zlinalg import hermite_normal_form, sublattices_of_index, unimodular_map_to_axis
