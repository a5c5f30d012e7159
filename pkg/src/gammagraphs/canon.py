"""Canonical labelling by colour refinement and individualisation.

The search tree individualises each vertex of the first smallest non-singleton
cell, refines to an equitable ordered partition, and keeps the leaf whose
relabelled adjacency code is largest.  Two vertices of the target cell that are
twins (equal neighbourhoods apart from each other) give isomorphic subtrees,
so only one representative per twin class is expanded.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .graph import Graph, GraphError, bits, mask_of
from .graph6 import encode

MAX_CANON_VERTICES = 16


def _check_cap(g: Graph):
    if g.n > MAX_CANON_VERTICES:
        raise GraphError(f"isomorphism routines support at most {MAX_CANON_VERTICES} vertices, got {g.n}")


def refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition.

    Cells split by neighbour counts into every current cell; split pieces are
    ordered by that count vector, so the result is relabelling-invariant.
    """
    while True:
        masks = [mask_of(c) for c in cells]
        new = []
        for cell in cells:
            if len(cell) == 1:
                new.append(cell)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                a = adj[v]
                groups.setdefault(tuple((a & m).bit_count() for m in masks), []).append(v)
            if len(groups) == 1:
                new.append(cell)
            else:
                new.extend(groups[key] for key in sorted(groups))
        if len(new) == len(cells):
            return new
        cells = new


def _code(adj: Sequence[int], order: list[int]) -> int:
    value = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            value = (value << 1) | (row >> order[i] & 1)
    return value


def _twins(adj: Sequence[int], u: int, v: int) -> bool:
    mu, mv = 1 << u, 1 << v
    return adj[u] & ~mv == adj[v] & ~mu


def canonical_labeling(g: Graph, partition: Optional[list[list[int]]] = None) -> tuple[list[int], int]:
    """Return ``(order, code)`` where ``order[p]`` is the vertex placed at position ``p``.

    ``partition`` is an optional ordered vertex colouring; the labelling is then
    canonical for coloured graphs (colour classes keep their order).
    """
    adj = g.adj
    if g.n == 0:
        return [], 0
    cells = [list(c) for c in partition] if partition else [list(range(g.n))]
    best_order: list[int] = []
    best_code = -1

    def search(cells):
        nonlocal best_order, best_code
        cells = refine(adj, cells)
        target = -1
        size = g.n + 1
        for idx, cell in enumerate(cells):
            if 1 < len(cell) < size:
                target, size = idx, len(cell)
        if target < 0:
            order = [c[0] for c in cells]
            code = _code(adj, order)
            if code > best_code:
                best_code, best_order = code, order
            return
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            if any(_twins(adj, v, t) for t in tried):
                continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    search(cells)
    return best_order, best_code


def canonical_form(g: Graph) -> bytes:
    """graph6 encoding of the canonically relabelled graph."""
    _check_cap(g)
    _, code = canonical_labeling(g)
    return encode(g.n, code)


def canonical_graph(g: Graph) -> Graph:
    """The canonical representative of the isomorphism class of ``g``."""
    order, _ = canonical_labeling(g)
    perm = [0] * g.n
    for p, v in enumerate(order):
        perm[v] = p
    return g.relabel(perm)


def _degree_signature(g: Graph) -> tuple:
    return g.n, sorted(a.bit_count() for a in g.adj)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    _check_cap(g)
    _check_cap(h)
    if _degree_signature(g) != _degree_signature(h):
        return False
    return canonical_form(g) == canonical_form(h)


def same_orbit(g: Graph, u: int, v: int) -> bool:
    """True iff some automorphism of ``g`` maps ``u`` to ``v``."""
    if u == v:
        return True

    def coloured(x):
        rest = [w for w in range(g.n) if w != x]
        return [[x], rest] if rest else [[x]]

    return canonical_labeling(g, coloured(u))[1] == canonical_labeling(g, coloured(v))[1]


def contains_induced(g: Graph, h: Graph) -> bool:
    """True iff some vertex subset of ``g`` induces a copy of ``h``."""
    _check_cap(g)
    if h.n > g.n:
        raise GraphError(f"pattern has {h.n} vertices, host only {g.n}")
    if h.n == 0:
        return True
    # map pattern vertices in decreasing-degree order, checking edges and non-edges
    order = sorted(range(h.n), key=lambda v: -h.degree(v))
    host_deg = [g.degree(v) for v in range(g.n)]
    image = [0] * h.n
    back_adj = []
    for k, p in enumerate(order):
        back_adj.append([(i, h.has_edge(p, order[i])) for i in range(k)])
    need_deg = [h.degree(p) for p in order]

    def extend(k: int, used: int) -> bool:
        if k == h.n:
            return True
        cand = g.full & ~used
        for i, adjacent in back_adj[k]:
            row = g.adj[image[i]]
            cand &= row if adjacent else ~row
        for v in bits(cand):
            if host_deg[v] < need_deg[k]:
                continue
            image[k] = v
            if extend(k + 1, used | (1 << v)):
                return True
        return False

    return extend(0, 0)
