"""Compiled and fallback kernel paths must agree exactly."""

import numpy as np
from hypothesis import given, settings

from gammagraphs import kernels
from gammagraphs.domination import enumerate_gamma_sets

from conftest import graphs, subset_gamma_sets


def _fallback_sets(closed, k):
    out = np.zeros(4096, dtype=np.uint64)
    count = kernels.dominating_sets_of_size.py_func(closed, closed.shape[0], k, out)
    return sorted(int(x) for x in out[:count])


def test_popcount_and_bit_index():
    for x in (1, 2, 0b1011, 1 << 40, (1 << 64) - 1):
        v = np.uint64(x)
        assert kernels.popcount(v) == bin(x).count("1")
        assert kernels.bit_index(v) == (x & -x).bit_length() - 1


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=9))
def test_domination_number_paths_agree(g):
    closed = g.closed_array
    fast = kernels.min_dominating_size(closed, g.n)
    slow = kernels.min_dominating_size.py_func(closed, g.n)
    assert fast == slow == subset_gamma_sets(g)[0]


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=9))
def test_enumeration_paths_agree(g):
    gamma, sets = subset_gamma_sets(g)
    assert [int(x) for x in kernels.dominating_sets(g.closed_array, gamma)] == sets
    assert _fallback_sets(g.closed_array, gamma) == sets


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=9))
def test_edge_paths_agree(g):
    sets = np.array(enumerate_gamma_sets(g).gamma_sets, dtype=np.uint64)
    for slide in (True, False):
        vec = kernels._reconfiguration_edges_numpy(sets, g.adj_array, slide)
        out = np.zeros((max(1, len(sets) ** 2), 2), dtype=np.int64)
        count = kernels.reconfiguration_edges(sets, g.adj_array, slide, out)
        loop = kernels.reconfiguration_edges.py_func(sets, g.adj_array, slide, out.copy())
        assert count == loop == len(vec)
        assert out[:count].tolist() == vec.tolist()


def test_buffer_retry_for_many_sets():
    # edgeless graph plus K_{1,1} pieces: 2^10 minimum dominating sets
    from gammagraphs.graph import Graph

    g = Graph.from_edges(20, [(2 * i, 2 * i + 1) for i in range(10)])
    sets = kernels.dominating_sets(g.closed_array, 10)
    assert len(sets) == 1024
    assert np.all(np.diff(sets.astype(np.float64)) > 0)
