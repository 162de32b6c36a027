from ._extlab import (
    CapError,
    CycleError,
    ParseError,
    Poset,
    WidthError,
    all_posets,
    chain_decomposition,
    classify_equality,
    correlation_table,
    count_extensions,
    extensions,
    lattice_path,
    n_matrix,
    render,
    search,
    search_scopes,
    suite_names,
    verify,
    width_two_posets,
    xyz_gap,
)

__all__ = [
    "CapError",
    "CycleError",
    "ParseError",
    "Poset",
    "WidthError",
    "all_posets",
    "chain_decomposition",
    "classify_equality",
    "correlation_table",
    "count_extensions",
    "extensions",
    "lattice_path",
    "n_matrix",
    "render",
    "search",
    "search_scopes",
    "suite_names",
    "verify",
    "width_two_posets",
    "xyz_gap",
]
