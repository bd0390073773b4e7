import json
import math
from fractions import Fraction

import pytest

import mononeedle as mn


def test_exact_m_k():
    assert mn.m_k("triangle", 2) == Fraction(1, 3)
    assert mn.m_k("moser_spindle", 3) == Fraction(1, 11)
    r = mn.solve_mk(mn.find_graph("moser_spindle"), 3)
    assert str(r).startswith("1/11 ")
    assert r.witness[0] == 0
    assert r.monochromatic_edges == 1


def test_lower_and_simplex_bounds():
    value, witness = mn.lower_bound(3)
    assert value == Fraction(1, 11)
    assert witness == "moser_spindle"
    assert mn.simplex_bound(3) == Fraction(1, 6)


def test_custom_graph():
    g = mn.Graph([(0, 0), (1, 0), (0.5, math.sqrt(3) / 2)], [(0, 1), (1, 2), (0, 2)])
    assert mn.is_unit_distance(g)
    assert g.num_edges == 3
    assert mn.m_k(g, 2) == Fraction(1, 3)
    with pytest.raises(ValueError):
        mn.Graph([(0, 0)], [(0, 1)])


def test_stripe_estimate_matches_exact():
    width = math.sqrt(3) / 2
    assert abs(mn.exact_stripe_p(width) - 1 / 3) < 1e-9
    e = mn.estimate_p_per(mn.StripeColoring(width), 200_000, seed=1)
    assert abs(e.p_hat - 1 / 3) <= 4 * e.stderr
    assert e.process == "needle"
    assert e.ci95[0] <= e.p_hat <= e.ci95[1]
    assert json.loads(e.to_json())["seed"] == 1


def test_thread_count_does_not_change_results():
    c = mn.parse_coloring("hex3:0.61")
    a = mn.estimate_p_per(c, 300_000, seed=9, threads=1)
    b = mn.estimate_p_per(c, 300_000, seed=9, threads=3)
    assert a.successes == b.successes


def test_graph_throw_and_table():
    c = mn.Hex3Coloring(0.61)
    assert c.num_colors == 3
    g = mn.find_graph("moser_spindle")
    needle = mn.estimate_p_per(c, 200_000, seed=2)
    thrown = mn.estimate_via_graph_throw(c, g, 200_000, seed=3)
    assert abs(needle.p_hat - thrown.p_hat) <= 4 * mn.combined_stderr(needle, thrown)
    t = mn.estimate_p_table(c, 10.0, 50_000, seed=4)
    assert t.process == "table"
    assert t.draws >= t.n
    assert mn.table_bound_gap(10.0) == pytest.approx(0.38)


def test_random_grid():
    c = mn.random_grid(8.0, 16, 3, seed=5)
    assert c.num_colors == 3
    assert c.describe() == "grid:8:16:3:5"
    e = mn.estimate_random_grid_ensemble(8.0, 16, 2, 100_000, seed=6)
    assert abs(e.p_hat - 0.5) <= 4 * e.stderr
    with pytest.raises(ValueError):
        mn.random_grid(8.0, 4, 2, seed=1)


def test_joint_distribution_rows_sum_to_marginals():
    rows = mn.joint_distribution(mn.StripeColoring(1.0), 100_000, seed=7)
    assert len(rows) == 2
    assert sum(map(sum, rows)) == pytest.approx(1.0)


def test_min_edges_from_hex_estimate():
    e = mn.estimate_p_per(mn.Hex3Coloring(0.61), 1_000_000, seed=8)
    assert mn.min_edges_non_k_colorable(e) >= 8


def test_small_optimization():
    r = mn.optimize_hex_edge(budget=9, n=50_000, seed=10)
    assert r.coarse_points == 9
    assert 0.5 <= r.best_parameter <= 0.75
    assert len(r.trace) > 9


def test_hyperdim():
    a = mn.estimate_slab(3, math.sqrt(3) / 2, 100_000, seed=11)
    b = mn.estimate_slab_simplex_throw(3, math.sqrt(3) / 2, 100_000, seed=12)
    assert abs(a.p_hat - b.p_hat) <= 4 * mn.combined_stderr(a, b)


def test_cli_entry_point():
    code, out, err = mn.run_cli(["mk", "--graph", "moser_spindle", "--k", "3"])
    assert code == 0
    assert out.startswith("1/11 ")
    code, out, err = mn.run_cli(["mk", "--graph", "nosuch", "--k", "3"])
    assert code == 2
    assert "moser_spindle" in err


def test_resource_limit():
    with pytest.raises(mn.ResourceLimitError):
        mn.solve_mk(mn.find_graph("moser_spindle"), 3, max_nodes=5)
