"""Exact combinatorics for arrowing, Ramsey-minimal graphs, and gadget builds."""

__version__ = "0.1.0"

from .graphs import (
    Graph,
    GraphError,
    Graph6Error,
    EmbeddedCopy,
    CopyList,
    enumerate_copies,
    contains_copy,
    distance,
    edge_distance,
    is_three_connected,
    disjoint_union,
    identify_edges,
    complete,
    cycle,
    path,
    complete_minus_edge,
    pendant_clique,
    clique_plus_matching,
    matching,
    named_graph,
    to_graph6,
    from_graph6,
    read_graph6_lines,
)
from .search import (
    ArrowCertificate,
    BudgetExceeded,
    ConstraintSet,
    EdgeColouring,
    SearchError,
    DEFAULT_BUDGET,
    arrow,
    is_minimal,
    ramsey_number,
    shrink_to_minimal,
    solve,
    split_lift_check,
)
from .checking import check_colouring
