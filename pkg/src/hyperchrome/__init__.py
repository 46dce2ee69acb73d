"""Exact chromatic polynomials of hypergraphs via δ-cycles and broken cycles."""

from .chromatic import (
    ColoringBudgetExceeded,
    PruningStats,
    broken_cycle_expansion,
    chromatic_broken_cycle,
    chromatic_subset_expansion,
    chromatic_values,
    count_proper_colorings,
    is_proper,
    pruning_stats,
)
from .cycles import (
    BlockIndexer,
    block_pairing_failures,
    DeltaCycle,
    block_index,
    broken_cycles,
    closing_edges,
    enumerate_delta_cycles,
    is_delta_cyclic,
    is_delta_cyclic_witness,
    is_removable,
    max_closing_edge,
    min_closing_edge,
)
from .fileformat import HypergraphParseError, format_hypergraph, load_hypergraph, parse_hypergraph
from .generalized import (
    INTEGERS,
    POLYNOMIALS,
    AbelianGroup,
    TheoremReport,
    cancelling_family,
    check_alternating_condition,
    chromatic_term,
    full_sum,
    pruned_sum,
    signed_table_function,
    verify_generalized_theorem,
)
from .hypergraph import (
    EdgeCapExceeded,
    EdgeOrder,
    Hypergraph,
    HypergraphError,
    edge_cap,
    edge_mask,
    mask_edges,
    restricted_component_count,
    spanning_component_count,
    validate,
)
from .polynomial import Polynomial, evaluate

__version__ = "0.1.0"
