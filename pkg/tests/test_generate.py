import networkx as nx
import pytest

from gammagraphs.canon import canonical_form
from gammagraphs.generate import generate_graphs, generate_graphs_with_certs, generate_trees
from gammagraphs.graph import Graph, GraphError, is_bipartite, is_connected, is_triangle_free

# graphs by order, and free trees by order (OEIS A000088, A000055)
GRAPH_COUNTS = [1, 2, 4, 11, 34, 156, 1044, 12346]
TREE_COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159]
# bipartite graphs by order (OEIS A033995), triangle-free graphs (A006785)
BIPARTITE_COUNTS = [1, 2, 3, 7, 13, 35, 88, 303, 1119]
TRIANGLE_FREE_COUNTS = [1, 2, 3, 7, 14, 38, 107, 410]


@pytest.mark.parametrize("n, count", list(enumerate(GRAPH_COUNTS, start=1)))
def test_graph_counts(n, count):
    assert sum(1 for _ in generate_graphs(n)) == count


@pytest.mark.parametrize("n, count", list(enumerate(TREE_COUNTS, start=1)))
def test_tree_counts(n, count):
    trees = list(generate_trees(n))
    assert len(trees) == count
    for t in trees:
        assert t.num_edges == n - 1 and is_connected(t)


def test_trees_pairwise_non_isomorphic_to_12():
    for n in range(1, 13):
        trees = list(generate_trees(n))
        assert len({canonical_form(t) for t in trees}) == len(trees)


def test_tree_examples():
    assert [t.num_edges for t in generate_trees(1)] == [0]
    degs = sorted(tuple(sorted(t.degree(v) for v in range(4))) for t in generate_trees(4))
    assert degs == [(1, 1, 1, 3), (1, 1, 2, 2)]


@pytest.mark.parametrize("n, count", list(enumerate(BIPARTITE_COUNTS, start=1)))
def test_bipartite_counts(n, count):
    assert sum(1 for _ in generate_graphs(n, is_bipartite, hereditary=True)) == count


@pytest.mark.parametrize("n, count", list(enumerate(TRIANGLE_FREE_COUNTS, start=1)))
def test_triangle_free_counts(n, count):
    assert sum(1 for _ in generate_graphs(n, is_triangle_free, hereditary=True)) == count


def test_hereditary_and_plain_filter_agree():
    for n in range(1, 7):
        plain = [c for c, _ in generate_graphs_with_certs(n, is_bipartite)]
        pruned = [c for c, _ in generate_graphs_with_certs(n, is_bipartite, hereditary=True)]
        assert plain == pruned


def test_n3_bipartite_example():
    got = list(generate_graphs(3, is_bipartite))
    assert len(got) == 3
    assert sorted(g.num_edges for g in got) == [0, 1, 2]


def test_certificate_order_and_distinct():
    for n in range(1, 8):
        certs = [c for c, _ in generate_graphs_with_certs(n)]
        assert certs == sorted(certs)
        assert len(set(certs)) == len(certs)


def test_cross_check_against_networkx_atlas():
    # independent corpus: every graph up to 7 vertices
    atlas = {}
    for ref in nx.graph_atlas_g()[1:]:
        g = Graph.from_edges(ref.number_of_nodes(), ref.edges())
        atlas.setdefault(g.n, set()).add(canonical_form(g))
    for n in range(1, 8):
        ours = {c for c, _ in generate_graphs_with_certs(n)}
        assert ours == atlas[n]


def test_certificate_is_canonical_form_of_emitted_graph():
    for n in range(1, 7):
        for cert, g in generate_graphs_with_certs(n):
            assert canonical_form(g) == cert


def test_range_errors():
    with pytest.raises(GraphError):
        next(generate_graphs(0))
    with pytest.raises(GraphError):
        next(generate_graphs(11))
    with pytest.raises(GraphError):
        next(generate_trees(15))
