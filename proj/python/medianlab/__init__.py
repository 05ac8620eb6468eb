"""Python surface of the median-lab workbench.

Everything heavy lives in the compiled ``_medianlab`` module; this package
re-exports it and pins the report schema version used across all surfaces.
"""

from _medianlab import (  # noqa: F401
    Element,
    Graph,
    Group,
    MedianLabError,
    almost_median_frontier,
    check_median,
    check_relators,
    cocycle_check,
    count_homs,
    cycle,
    defect,
    euler_value,
    grid,
    group,
    hypercube,
    hyperplanes,
    parse_graph,
    path,
    quasi_line,
    random_connected,
    random_tree,
    separate,
    serialize_graph,
    translation_number,
)

SCHEMA = "median-lab/1"

__all__ = [
    "Element",
    "Graph",
    "Group",
    "MedianLabError",
    "SCHEMA",
    "almost_median_frontier",
    "check_median",
    "check_relators",
    "cocycle_check",
    "count_homs",
    "cycle",
    "defect",
    "euler_value",
    "grid",
    "group",
    "hypercube",
    "hyperplanes",
    "parse_graph",
    "path",
    "quasi_line",
    "random_connected",
    "random_tree",
    "separate",
    "serialize_graph",
    "translation_number",
]
