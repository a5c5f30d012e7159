import itertools
import random

import pytest
from hypothesis import strategies as st

from gammagraphs.graph import Graph


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    """Try every bijection; only for small n."""
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    edges_h = set(h.edges())
    for perm in itertools.permutations(range(g.n)):
        if all(tuple(sorted((perm[u], perm[v]))) in edges_h for u, v in g.edges()):
            return True
    return False


def subset_gamma_sets(g: Graph):
    """Minimum dominating sets by direct definition: N[D] covers V."""
    verts = range(g.n)
    for k in range(g.n + 1):
        found = []
        for combo in itertools.combinations(verts, k):
            covered = set(combo)
            for v in combo:
                covered.update(u for u in verts if g.has_edge(u, v))
            if len(covered) == g.n:
                found.append(sum(1 << v for v in combo))
        if found:
            return k, sorted(found)


def random_relabel(g: Graph, rng: random.Random) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, mask) if keep])


@pytest.fixture
def rng():
    return random.Random(20240517)


# acceptance lines, printed at the end of the run so they survive output capture
ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
