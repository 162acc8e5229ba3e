"""Complete forcing sets of hexagonal systems."""
from .bounds import (
    bounds_report,
    cf_by_decomposition,
    edge_class_partition,
    edge_cover_number,
    fixed_edges,
    is_normal,
    lower_bound_hexagons,
    lower_bound_matching,
    normal_components,
)
from .ecut import cfs_from_ecuts, is_ecut, is_ecut_cover, is_ecut_dual, parallel_class_bound
from .errors import HexError
from .families import Family, FamilySpec, certify, construct_cfs, formula_cf, generate
from .forcing import (
    enumerate_nice_cycles,
    is_complete_forcing_set_def,
    is_complete_forcing_set_nice,
    min_complete_forcing,
)
from .hexgrid import Edge, HexCenter, HexSystem, Vertex, dual_graph, parse, serialize
from .matchings import enumerate_perfect_matchings, is_forcing_set

__version__ = "0.1.0"

__all__ = [
    "Edge", "Family", "FamilySpec", "HexCenter", "HexError", "HexSystem", "Vertex",
    "bounds_report", "certify", "cf_by_decomposition", "cfs_from_ecuts", "construct_cfs",
    "dual_graph", "edge_class_partition", "edge_cover_number", "enumerate_nice_cycles",
    "enumerate_perfect_matchings", "fixed_edges", "formula_cf", "generate",
    "is_complete_forcing_set_def", "is_complete_forcing_set_nice", "is_ecut", "is_ecut_cover",
    "is_ecut_dual", "is_forcing_set", "is_normal", "lower_bound_hexagons", "lower_bound_matching",
    "min_complete_forcing", "normal_components", "parallel_class_bound", "parse", "serialize",
]
