"""Exhaustive generation of small graphs and free trees up to isomorphism."""

from __future__ import annotations

from typing import Callable, Iterator, Optional

from .canon import canonical_labeling, same_orbit
from .graph import Graph, GraphError
from .graph6 import encode

MAX_GEN_VERTICES = 10
MAX_TREE_VERTICES = 14

Predicate = Callable[[Graph], bool]

_levels: dict[tuple, list[list[tuple[bytes, Graph]]]] = {}


def _deletion_score(child: Graph, v: int) -> tuple[int, int]:
    adj = child.adj
    row = adj[v]
    s = 0
    while row:
        low = row & -row
        s += adj[low.bit_length() - 1].bit_count()
        row ^= low
    return adj[v].bit_count(), s


def _deletion_ties(child: Graph) -> Optional[list[int]]:
    """Other vertices tying with the newest on the deletion score, or None if it loses.

    The canonical deletion vertex maximises (degree, neighbour degree sum);
    ties are broken by largest canonical position.
    """
    new = child.n - 1
    adj = child.adj
    deg_new = adj[new].bit_count()
    if any(a.bit_count() > deg_new for a in adj):
        return None
    top = _deletion_score(child, new)
    ties = []
    for v in range(new):
        if adj[v].bit_count() == deg_new:
            s = _deletion_score(child, v)
            if s > top:
                return None
            if s == top:
                ties.append(v)
    return ties


def _augment(parents: list[tuple[bytes, Graph]], keep: Optional[Predicate]) -> list[tuple[bytes, Graph]]:
    out = []
    for _, parent in parents:
        new = parent.n
        seen = set()
        for nbrs in range(1 << parent.n):
            child = parent.add_vertex(nbrs)
            ties = _deletion_ties(child)
            if ties is None:
                continue
            if keep is not None and not keep(child):
                continue
            order, code = canonical_labeling(child)
            if ties:
                ties.append(new)
                chosen = max(ties, key=order.index)
                if not same_orbit(child, new, chosen):
                    continue
            # siblings from one parent may still coincide up to its automorphisms
            if code in seen:
                continue
            seen.add(code)
            out.append((encode(child.n, code), child))
    out.sort(key=lambda item: item[0])
    return out


def graph_levels(max_n: int, keep: Optional[Predicate] = None) -> list[list[tuple[bytes, Graph]]]:
    """``levels[n]`` lists (certificate, graph) for each class of order n, sorted.

    ``keep`` must be hereditary (closed under vertex deletion): it is applied at
    every order so non-conforming parents are never extended.  Results are
    memoised per predicate.
    """
    if not 0 <= max_n <= MAX_GEN_VERTICES:
        raise GraphError(f"generation order {max_n} outside 0..{MAX_GEN_VERTICES}")
    levels = _levels.setdefault((keep,), [[(encode(0, 0), Graph(0, ()))]])
    while len(levels) <= max_n:
        levels.append(_augment(levels[-1], keep))
    return levels[: max_n + 1]


def generate_graphs(n: int, filter: Optional[Predicate] = None, hereditary: bool = False) -> Iterator[Graph]:
    """One graph per isomorphism class of order ``n`` passing ``filter``.

    Graphs come out in certificate order.  Pass ``hereditary=True`` for filters
    closed under vertex deletion (bipartite, triangle-free) to prune during
    generation instead of filtering the full corpus.
    """
    if not 1 <= n <= MAX_GEN_VERTICES:
        raise GraphError(f"generation order {n} outside 1..{MAX_GEN_VERTICES}")
    if filter is not None and hereditary:
        yield from (g for _, g in graph_levels(n, filter)[n])
        return
    for _, g in graph_levels(n)[n]:
        if filter is None or filter(g):
            yield g


def generate_graphs_with_certs(n: int, filter: Optional[Predicate] = None, hereditary: bool = False):
    """Like :func:`generate_graphs` but yields ``(certificate, graph)`` pairs."""
    if not 1 <= n <= MAX_GEN_VERTICES:
        raise GraphError(f"generation order {n} outside 1..{MAX_GEN_VERTICES}")
    level = graph_levels(n, filter if hereditary else None)[n]
    for cert, g in level:
        if hereditary or filter is None or filter(g):
            yield cert, g


# free trees --------------------------------------------------------------


def _next_rooted(seq: list[int], p: Optional[int] = None) -> Optional[list[int]]:
    """Next rooted level sequence in reverse lexicographic order."""
    if p is None:
        p = len(seq) - 1
        while seq[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while seq[q] != seq[p] - 1:
        q -= 1
    out = list(seq)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _split(seq: list[int]) -> tuple[list[int], list[int]]:
    """Subtree of the root's first child, and the tree with that subtree removed."""
    m = len(seq)
    for i in range(2, len(seq)):
        if seq[i] == 1:
            m = i
            break
    first = [d - 1 for d in seq[1:m]]
    rest = [0] + seq[m:]
    return first, rest


def _canonical_free(seq: list[int]) -> Optional[list[int]]:
    """Advance ``seq`` to the next level sequence that is a centre-rooted canonical free tree."""
    first, rest = _split(seq)
    h_first, h_rest = max(first), max(rest)
    valid = h_rest >= h_first
    if valid and h_rest == h_first:
        if len(first) > len(rest) or (len(first) == len(rest) and first > rest):
            valid = False
    if valid:
        return seq
    p = len(first)
    nxt = _next_rooted(seq, p)
    if seq[p] > 2:
        new_first, _ = _split(nxt)
        tail = list(range(1, max(new_first) + 2))
        nxt[-len(tail):] = tail
    return nxt


def _tree_from_levels(seq: list[int]) -> Graph:
    stack: list[int] = []
    edges = []
    for v, depth in enumerate(seq):
        del stack[depth:]
        if stack:
            edges.append((stack[-1], v))
        stack.append(v)
    return Graph.from_edges(len(seq), edges)


def generate_trees(n: int) -> Iterator[Graph]:
    """One labelled representative per free tree of order ``n``.

    Trees are emitted as preorder-labelled level sequences, in the successor
    order of the enumeration (root 0).
    """
    if not 1 <= n <= MAX_TREE_VERTICES:
        raise GraphError(f"tree order {n} outside 1..{MAX_TREE_VERTICES}")
    if n == 1:
        yield Graph(1, (0,))
        return
    seq: Optional[list[int]] = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while seq is not None:
        seq = _canonical_free(seq)
        if seq is None:
            break
        yield _tree_from_levels(seq)
        seq = _next_rooted(seq)
