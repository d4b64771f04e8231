"""Exact toolkit for partial domination in small graphs."""

from .domination import (
    SetFamily,
    SolveResult,
    all_minimum_sets,
    coverage_target,
    domination_number,
    influencing_intersection,
    influencing_set,
    is_p_dominating,
    partial_domination_number,
)
from .graphs import (
    MAX_VERTICES,
    Graph,
    VertexCapError,
    cartesian_product,
    complete,
    complete_bipartite,
    cycle,
    format_vertex_set,
    from_edges,
    mask_of,
    members,
    path,
    pendant_wheel_graph,
    star,
    subdivided_star,
    twin_broom_tree,
    twin_hub_graph,
)

__all__ = [
    "MAX_VERTICES",
    "Graph",
    "SetFamily",
    "SolveResult",
    "VertexCapError",
    "all_minimum_sets",
    "cartesian_product",
    "complete",
    "complete_bipartite",
    "coverage_target",
    "cycle",
    "domination_number",
    "format_vertex_set",
    "from_edges",
    "influencing_intersection",
    "influencing_set",
    "is_p_dominating",
    "mask_of",
    "members",
    "partial_domination_number",
    "path",
    "pendant_wheel_graph",
    "star",
    "subdivided_star",
    "twin_broom_tree",
    "twin_hub_graph",
]
