"""Cycle bases of multigraphs with low maximum edge participation."""

from ._core import (
    MultiGraph,
    build_cycle_basis,
    cheeger_constant,
    coupled_run,
    fundamental_basis,
    girth,
    max_edge_participation,
    min_weight_cycle_basis,
    parse_edge_list,
    participation_lower_bound,
    process1,
    process2,
    random_regular,
    random_regular_connected,
    read_edge_list_file,
    theorem_bound,
    verify_basis,
    verify_weakly_fundamental,
)

__all__ = [
    "MultiGraph",
    "build_cycle_basis",
    "cheeger_constant",
    "coupled_run",
    "fundamental_basis",
    "girth",
    "max_edge_participation",
    "min_weight_cycle_basis",
    "parse_edge_list",
    "participation_lower_bound",
    "process1",
    "process2",
    "random_regular",
    "random_regular_connected",
    "read_edge_list_file",
    "theorem_bound",
    "verify_basis",
    "verify_weakly_fundamental",
]

__version__ = "0.1.0"
