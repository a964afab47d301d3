"""Disjoint dominating set pairs joined by a perfect matching.

The central quantity is the swap number of a graph: the least size of a
dominating set D for which a second, disjoint dominating set D' exists
together with a perfect matching between D and D' using edges of the graph.
The package provides exact solvers, linear-time tree algorithms, closed-form
constructions for star products and grid graphs, and exhaustive scans over
small graphs.
"""

from .exact_solver import (
    BUDGET_EXCEEDED,
    DdmResult,
    FINITE,
    INFINITE,
    dd_m_exact,
    swap_pair_below,
)
from .graph_core import (
    BudgetError,
    ContractError,
    Graph,
    GraphParseError,
    SwapCertificate,
    cartesian_product,
    certificate_violations,
    complete_graph,
    cycle_graph,
    domination_number,
    format_graph,
    grid_graph,
    has_dominating_set,
    independence_number,
    is_connected,
    is_dominating,
    is_independent,
    is_strong_graph,
    is_tree,
    matching_between,
    parse_graph,
    path_graph,
    star_graph,
    subdivided_doubled_triangle,
    verify_certificate,
)
from .grid_constructions import (
    GridDensityReport,
    TokenBoard,
    gamma_grid_dp,
    grid_density_report,
    grid_swap_construct,
    p3_strip_swap,
    perfect_dom_member,
)
from .product_constructions import (
    ProductScanReport,
    product_question_scan,
    product_swap_general,
    star_partition_order2,
    star_product_layout,
    star_product_swap,
    tree_product_swap,
)
from .small_alpha import (
    ScanReport,
    alpha2_swap,
    alpha3_bound_check,
    alpha3_swap_exists,
    alpha3_swap_with_stage,
    canonical_form,
    canonical_id,
    conjecture_scan,
    enumerate_connected_graphs,
)
from .tree_algorithms import (
    StarPartition,
    WeakReduction,
    alpha_equals_ddm,
    alpha_equals_eviction,
    dd_m_tree,
    enumerate_trees,
    four_way_equality,
    hat_graph,
    is_weak_tree,
    s_weight,
    tree_canonical_key,
    weak_reduction,
)

__all__ = [
    "BUDGET_EXCEEDED",
    "BudgetError",
    "ContractError",
    "DdmResult",
    "FINITE",
    "Graph",
    "GraphParseError",
    "GridDensityReport",
    "INFINITE",
    "ProductScanReport",
    "ScanReport",
    "StarPartition",
    "SwapCertificate",
    "TokenBoard",
    "WeakReduction",
    "alpha2_swap",
    "alpha3_bound_check",
    "alpha3_swap_exists",
    "alpha3_swap_with_stage",
    "alpha_equals_ddm",
    "alpha_equals_eviction",
    "canonical_form",
    "canonical_id",
    "cartesian_product",
    "certificate_violations",
    "complete_graph",
    "conjecture_scan",
    "cycle_graph",
    "dd_m_exact",
    "dd_m_tree",
    "domination_number",
    "enumerate_connected_graphs",
    "enumerate_trees",
    "format_graph",
    "four_way_equality",
    "gamma_grid_dp",
    "grid_density_report",
    "grid_graph",
    "grid_swap_construct",
    "has_dominating_set",
    "hat_graph",
    "independence_number",
    "is_connected",
    "is_dominating",
    "is_independent",
    "is_strong_graph",
    "is_tree",
    "is_weak_tree",
    "matching_between",
    "p3_strip_swap",
    "parse_graph",
    "path_graph",
    "perfect_dom_member",
    "product_question_scan",
    "product_swap_general",
    "s_weight",
    "star_graph",
    "star_partition_order2",
    "star_product_layout",
    "star_product_swap",
    "subdivided_doubled_triangle",
    "swap_pair_below",
    "tree_canonical_key",
    "tree_product_swap",
    "verify_certificate",
    "weak_reduction",
]
