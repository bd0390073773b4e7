"""Monochromatic needle probabilities of k-colorings of the plane."""

from fractions import Fraction

from ._mononeedle import (
    Coloring,
    ConstantColoring,
    Estimate,
    GridColoring,
    Graph,
    Hex3Coloring,
    MkResult,
    OptimizationResult,
    ResourceLimitError,
    StripeColoring,
    catalog_names,
    coloring_kinds,
    combined_stderr,
    estimate_p_per,
    estimate_p_table,
    estimate_random_grid_ensemble,
    estimate_slab,
    estimate_slab_simplex_throw,
    estimate_via_graph_throw,
    exact_stripe_p,
    find_graph,
    is_unit_distance,
    joint_distribution,
    min_edges_non_k_colorable,
    optimize_hex_edge,
    parse_coloring,
    random_grid,
    run_cli,
    solve_mk,
    table_bound_gap,
)
from . import _mononeedle


def m_k(graph, k):
    """Exact m_k of a graph (or catalog name) as a Fraction."""
    if isinstance(graph, str):
        graph = find_graph(graph)
    r = solve_mk(graph, k)
    return Fraction(r.numerator, r.denominator)


def lower_bound(k):
    num, den, witness = _mononeedle.lower_bound(k)
    return Fraction(num, den), witness


def simplex_bound(k):
    return Fraction(*_mononeedle.simplex_bound(k))


__all__ = [name for name in dir() if not name.startswith("_")]
