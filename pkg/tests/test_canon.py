import itertools
import random

import pytest
from hypothesis import given, settings

from gammagraphs.canon import are_isomorphic, canonical_form, contains_induced
from gammagraphs.gammagraph import Model, as_graph, build_gamma_graph
from gammagraphs.generate import generate_graphs
from gammagraphs.graph import (
    Graph,
    GraphError,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    empty_graph,
    path_graph,
    star_graph,
)

from conftest import brute_isomorphic, graphs, random_relabel


def test_c4_all_labelings_one_certificate():
    c4 = cycle_graph(4)
    certs = {canonical_form(c4.relabel(p)) for p in itertools.permutations(range(4))}
    assert len(certs) == 1


def test_p4_vs_star():
    assert canonical_form(path_graph(4)) != canonical_form(star_graph(3))


def test_isomorphism_examples():
    c4 = cycle_graph(4)
    assert are_isomorphic(c4, c4.relabel([2, 0, 3, 1]))
    assert not are_isomorphic(c4, path_graph(4))
    slide = as_graph(build_gamma_graph(c4, Model.SLIDE))
    assert are_isomorphic(slide, complete_bipartite(2, 4))


def test_cap():
    with pytest.raises(GraphError):
        canonical_form(empty_graph(17))
    with pytest.raises(GraphError):
        contains_induced(empty_graph(17), empty_graph(1))
    with pytest.raises(GraphError):
        contains_induced(empty_graph(2), empty_graph(3))


def test_symmetric_16_vertex_graphs():
    rng = random.Random(7)
    for g in (empty_graph(16), complete_graph(16), complete_bipartite(8, 8), cycle_graph(16)):
        assert canonical_form(g) == canonical_form(random_relabel(g, rng))


@pytest.mark.parametrize("n", range(1, 7))
def test_relabelling_invariance_all_small_graphs(n, rng):
    for g in generate_graphs(n):
        cert = canonical_form(g)
        for _ in range(100 if n <= 5 else 10):
            assert canonical_form(random_relabel(g, rng)) == cert


def test_relabelling_invariance_order7_sample(rng):
    pool = list(generate_graphs(7))
    for g in rng.sample(pool, 100):
        cert = canonical_form(g)
        for _ in range(100):
            assert canonical_form(random_relabel(g, rng)) == cert


def test_certificates_agree_iff_brute_force_isomorphic(rng):
    # pairs with equal degree sequences are the hard cases for a certificate
    pool = [g for n in (5, 6) for g in generate_graphs(n)]
    by_degrees = {}
    for g in pool:
        key = (g.n, tuple(sorted(g.degree(v) for v in range(g.n))))
        by_degrees.setdefault(key, []).append(g)
    pairs = [p for group in by_degrees.values() for p in itertools.combinations(group, 2)]
    for g, h in rng.sample(pairs, min(200, len(pairs))):
        h = random_relabel(h, rng)
        assert (canonical_form(g) == canonical_form(h)) == brute_isomorphic(g, h)
        g2 = random_relabel(g, rng)
        assert canonical_form(g) == canonical_form(g2) and brute_isomorphic(g, g2)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7), graphs(max_n=7))
def test_are_isomorphic_matches_brute_force(g, h):
    assert are_isomorphic(g, h) == brute_isomorphic(g, h)


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=9, max_n=16))
def test_large_relabelling_invariance(g):
    rng = random.Random(g.num_edges)
    assert canonical_form(g) == canonical_form(random_relabel(g, rng))


def test_contains_induced_examples():
    assert contains_induced(complete_bipartite(2, 4), complete_bipartite(2, 3))
    assert not contains_induced(cycle_graph(4), complete_graph(3))
    assert contains_induced(cycle_graph(4), empty_graph(1))
    assert contains_induced(cycle_graph(5), path_graph(4))
    assert not contains_induced(cycle_graph(5), cycle_graph(4))
    # P3 is a subgraph of K3 but not an induced one
    assert not contains_induced(complete_graph(3), path_graph(3))


def _induced_by_subsets(g: Graph, h: Graph) -> bool:
    target = canonical_form(h)
    return any(canonical_form(g.induced(c)) == target for c in itertools.combinations(range(g.n), h.n))


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=1, max_n=7), graphs(min_n=1, max_n=4))
def test_contains_induced_matches_subset_oracle(g, h):
    if h.n > g.n:
        return
    assert contains_induced(g, h) == _induced_by_subsets(g, h)
