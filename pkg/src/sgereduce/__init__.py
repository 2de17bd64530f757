"""Order types and their reduction to simultaneous geometric embedding.

The reduction builds, for an order type on ``n`` elements with a triangular
convex hull, ``n`` gadget graphs on ``3n - 5`` shared vertices that admit a
simultaneous plane straight-line drawing exactly when the order type is
realizable by points.
"""

from .chirotope import (
    Chirotope,
    Hull,
    SurroundingSequence,
    all_surrounding_sequences,
    chirotope_from_points,
    convex_hull,
    hull_surrounding_sequence,
    internal_surrounding_sequence,
    normalize_triangular_hull,
    reconstruct_chirotope,
    reorient,
    surrounding_sequence,
    validate_chirotope,
)
from .geometry import Point, drawing_is_plane, order_type_of_points, orientation, point, verify_sge
from .reduction import (
    GadgetMeta,
    LabeledGraph,
    SgeInstance,
    build_frame,
    build_gadget,
    build_wheel,
    is_three_connected,
    reduce_to_sge,
)
from .solver import GridSpec, brute_force_sge, embed_from_realization, extract_realization, grid_realize

__version__ = "0.1.0"

__all__ = [
    "Chirotope",
    "GadgetMeta",
    "GridSpec",
    "Hull",
    "LabeledGraph",
    "Point",
    "SgeInstance",
    "SurroundingSequence",
    "all_surrounding_sequences",
    "brute_force_sge",
    "build_frame",
    "build_gadget",
    "build_wheel",
    "chirotope_from_points",
    "convex_hull",
    "drawing_is_plane",
    "embed_from_realization",
    "extract_realization",
    "grid_realize",
    "hull_surrounding_sequence",
    "internal_surrounding_sequence",
    "is_three_connected",
    "normalize_triangular_hull",
    "order_type_of_points",
    "orientation",
    "point",
    "reconstruct_chirotope",
    "reduce_to_sge",
    "reorient",
    "surrounding_sequence",
    "validate_chirotope",
    "verify_sge",
]
