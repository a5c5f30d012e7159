from decimal import Decimal, getcontext

import pytest

from gammagraphs.generate import generate_graphs, generate_trees
from gammagraphs.graph import (
    GraphError,
    complete_graph,
    cycle_graph,
    is_bipartite,
    path_graph,
    star_graph,
)
from gammagraphs.verify import (
    check_obs_bipn,
    check_obs_spn,
    check_tree_bounds,
    golden_power_bound_holds,
    run_suite,
    tree_stats,
)

P4 = path_graph(4)
C4 = cycle_graph(4)
K13 = star_graph(3)


def test_spn_c4_instance():
    # D={0,2}, u=0 has pn={0}; both slides 0->1 and 0->3 stay gamma-sets
    assert check_obs_spn(C4) == []


def test_spn_star_vacuous():
    assert check_obs_spn(K13) == []


def test_bipn_c4_and_p4():
    assert check_obs_bipn(C4) == []
    assert check_obs_bipn(P4) == []
    with pytest.raises(GraphError):
        check_obs_bipn(complete_graph(3))


def test_observations_exhaustive_to_7():
    for n in range(1, 8):
        for g in generate_graphs(n):
            assert check_obs_spn(g) == []
            if is_bipartite(g):
                assert check_obs_bipn(g) == []


def test_tree_stats_examples():
    s = tree_stats(P4)
    assert (s.leaves, s.supports, s.s_weak, s.s_strong) == (0b1001, 0b0110, 2, 0)
    s = tree_stats(K13)
    assert (s.leaves, s.supports, s.s_weak, s.s_strong) == (0b1110, 0b0001, 0, 1)
    s = tree_stats(path_graph(2))
    assert (s.leaves, s.supports, s.s_weak, s.s_strong) == (0b11, 0b11, 2, 0)


def test_tree_stats_rejects():
    with pytest.raises(GraphError):
        tree_stats(path_graph(1))
    with pytest.raises(GraphError):
        tree_stats(C4)


def test_bounds_p4():
    r = check_tree_bounds(P4)
    assert r.gamma == 2 and r.stats.s == 2
    assert r.measured["max_degree_slide"] == 2 and r.limits["max_degree_slide"] == 2
    assert r.measured["diameter_slide"] == 2 and r.limits["diameter_slide"] == 4
    assert r.measured["order"] == 4
    assert r.limits["diameter_slide_support"] == 2
    assert r.violations == []
    assert r.measured["diameter_jump"] == 2 and r.limits["diameter_jump_support"] == 0
    assert r.advisory_violations == ["diameter_jump_support"]


def test_bounds_star():
    r = check_tree_bounds(K13)
    assert r.gamma == 1
    assert r.measured["max_degree_slide"] == 0 and r.measured["diameter_slide"] == 0
    assert r.violations == [] and r.advisory_violations == []


def test_p2_breaks_support_diameter_bound():
    # K2: gamma=1, both vertices supports, slide gamma-graph is K2 with diameter 1
    r = check_tree_bounds(path_graph(2))
    assert r.measured["diameter_slide"] == 1
    assert r.limits["diameter_slide"] == 0
    assert r.violations == ["diameter_slide"]


def test_trees_3_to_12_hold_every_hard_bound():
    for n in range(3, 13):
        for t in generate_trees(n):
            r = check_tree_bounds(t)
            assert r.violations == [], r.to_record()
            assert r.slide_connected and r.slide_bipartite
            assert r.measured["order"] == r.measured["order_jump"]


def _golden_power(gamma):
    getcontext().prec = 60
    phi = (1 + Decimal(13).sqrt()) / 2
    return phi**gamma


@pytest.mark.parametrize("gamma", range(0, 12))
def test_exact_golden_bound_against_decimal(gamma):
    bound = _golden_power(gamma)
    for count in range(max(0, int(bound) - 3), int(bound) + 4):
        assert golden_power_bound_holds(count, gamma) == (Decimal(count) <= bound)


def test_suite_reports():
    rep = run_suite("small-order-connectivity", 5)
    assert rep.passed and rep.corpus_size == 1 + 2 + 4 + 11 + 34
    rep = run_suite("triangle-free", 6)
    assert rep.passed
    rep = run_suite("oracle", 6)
    assert rep.passed and rep.corpus_size == 208
    with pytest.raises(KeyError):
        run_suite("nope", 3)
    with pytest.raises(GraphError):
        run_suite("observations", 9)


def test_advisories_do_not_fail_suite():
    rep = run_suite("tree-bounds", 4)
    # P2 is the one hard violator in this range
    assert [v["tree"] for v in rep.violations] == ["A_"]
    assert len(rep.advisories) >= 1
    rep = run_suite("tree-bounds", 4, corpus=[P4, K13])
    assert rep.passed and len(rep.advisories) == 1


def test_suite_reports_are_deterministic():
    a = run_suite("observations", 6)
    b = run_suite("observations", 6)
    assert a.records == b.records and a.violations == b.violations
