"""Exact vertex cover, criticality checks and hidden-optimum instance generation."""

from ._core import (
    BudgetExhausted,
    FormatError,
    Graph,
    InfeasibleError,
    InstanceBundle,
    InvalidArgument,
    alpha_edge_lower_bound,
    circulant,
    circulant_search,
    cnd_is_critical,
    cnd_mvc_size,
    complete_graph,
    cycle_graph,
    generate_hard,
    generate_structureless,
    generate_witzel,
    greedy_solve,
    is_cover,
    is_critical,
    lexmin_alpha,
    max_edges,
    mvc,
    parse_dimacs,
    path_graph,
    read_bundle,
    verify_bundle,
    write_dimacs,
)

__all__ = [name for name in dir() if not name.startswith("_")]
