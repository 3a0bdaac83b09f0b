"""Bootstrap percolation on Hamming and line graphs.

Percolation engines for the r-neighbor vertex process, the star edge
process and the line-graph edge process; the explicit minimum or
near-minimum seed constructions for those processes; their closed-form
sizes and sandwich bounds; an exact-rational computation of the
recognized-polynomial lower bound; and a brute-force oracle that
cross-validates everything on tiny instances.
"""

from bootperc.constructions import (
    carved_corner_set,
    carved_region,
    corner_masks,
    inner_cut_region,
    line_seed,
    reflect_region,
    simplex_corner_set,
    simplex_region,
    star_seed_complete,
    star_seed_hamming,
    vertex_seed_dim2,
)
from bootperc.engine import (
    ActivationTrace,
    is_percolating_edges_line,
    is_percolating_edges_star,
    is_percolating_vertices,
    percolate_edges_linegraph,
    percolate_edges_star,
    percolate_vertices,
    seed_from_text,
    seed_to_text,
    trace_to_jsonable,
)
from bootperc.errors import FormatError, PreconditionError, ResourceLimitError
from bootperc.formulas import (
    count_weighted_simplex,
    min_seed_complete,
    min_seed_hamming_bounds,
    min_seed_hamming_dim2,
    min_seed_line_complete,
    weak_saturation_hamming,
    weighted_simplex_bounds,
)
from bootperc.graphs import (
    EdgeIndexMap,
    Graph,
    HammingSpace,
    cartesian_product,
    graph_from_text,
    graph_to_text,
    make_complete,
    make_hamming,
    make_line_graph,
)
from bootperc.oracle import (
    SearchResult,
    min_percolating_edges_line,
    min_percolating_edges_star,
    min_percolating_vertices,
)
from bootperc.polymethod import (
    DimReport,
    EdgeColoring,
    EdgeWitness,
    complete_graph_witnesses,
    is_proper_coloring,
    lift_coloring,
    product_coloring,
    product_coloring_on,
    recognized_space_dim,
    recognized_space_dim_hamming,
    recognized_space_generators,
    recognized_space_report,
)

__version__ = "0.1.0"

__all__ = [
    "ActivationTrace",
    "DimReport",
    "EdgeColoring",
    "EdgeIndexMap",
    "EdgeWitness",
    "FormatError",
    "Graph",
    "HammingSpace",
    "PreconditionError",
    "ResourceLimitError",
    "SearchResult",
    "cartesian_product",
    "carved_corner_set",
    "carved_region",
    "complete_graph_witnesses",
    "corner_masks",
    "count_weighted_simplex",
    "graph_from_text",
    "graph_to_text",
    "inner_cut_region",
    "is_percolating_edges_line",
    "is_percolating_edges_star",
    "is_percolating_vertices",
    "is_proper_coloring",
    "lift_coloring",
    "line_seed",
    "make_complete",
    "make_hamming",
    "make_line_graph",
    "min_percolating_edges_line",
    "min_percolating_edges_star",
    "min_percolating_vertices",
    "min_seed_complete",
    "min_seed_hamming_bounds",
    "min_seed_hamming_dim2",
    "min_seed_line_complete",
    "percolate_edges_linegraph",
    "percolate_edges_star",
    "percolate_vertices",
    "product_coloring",
    "product_coloring_on",
    "recognized_space_dim",
    "recognized_space_dim_hamming",
    "recognized_space_generators",
    "recognized_space_report",
    "reflect_region",
    "seed_from_text",
    "seed_to_text",
    "simplex_corner_set",
    "simplex_region",
    "star_seed_complete",
    "star_seed_hamming",
    "trace_to_jsonable",
    "vertex_seed_dim2",
    "weak_saturation_hamming",
    "weighted_simplex_bounds",
]
