"""Simple undirected graphs on vertices 0..n-1 with bit-mask adjacency rows."""

from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional

import numpy as np

from . import kernels

MAX_VERTICES = 64


class GraphError(ValueError):
    pass


def bits(mask: int) -> Iterator[int]:
    """Vertices of a mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def format_set(mask: int) -> str:
    return "{" + ",".join(str(v) for v in bits(mask)) + "}"


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; ``adj[v]`` is the open neighbourhood of ``v``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        object.__setattr__(self, "adj", tuple(int(a) for a in self.adj))
        limit = self.full
        for v, row in enumerate(self.adj):
            if row & ~limit or row < 0:
                raise GraphError(f"row {v} has bits outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"edge {v}-{u} not symmetric")

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> Graph:
        # skips validation; callers guarantee a symmetric loop-free adjacency
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) outside 0..{n - 1}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def full(self) -> int:
        """Mask of all vertices."""
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in bits(self.adj[v] & ((1 << v) - 1))]

    @property
    def num_edges(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def relabel(self, perm: Iterable[int]) -> Graph:
        """Copy with vertex ``v`` renamed ``perm[v]``."""
        perm = list(perm)
        adj = [0] * self.n
        for v in range(self.n):
            pv = perm[v]
            for u in bits(self.adj[v]):
                adj[pv] |= 1 << perm[u]
        return Graph._trusted(self.n, tuple(adj))

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Subgraph induced on ``vertices``, renumbered in the given order."""
        vs = list(vertices)
        pos = {v: i for i, v in enumerate(vs)}
        adj = []
        for v in vs:
            adj.append(mask_of(pos[u] for u in bits(self.adj[v]) if u in pos))
        return Graph(len(vs), tuple(adj))

    def add_vertex(self, neighbours: int) -> Graph:
        """Copy with a new vertex ``n`` joined to the vertices in ``neighbours``."""
        new = self.n
        adj = [a | (1 << new) if neighbours >> v & 1 else a for v, a in enumerate(self.adj)]
        adj.append(neighbours)
        return Graph._trusted(self.n + 1, tuple(adj))

    @cached_property
    def adj_array(self) -> np.ndarray:
        return np.array(self.adj, dtype=np.uint64)

    @cached_property
    def closed_array(self) -> np.ndarray:
        return kernels.closed_masks(self.adj)

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class Bipartition:
    side_a: int
    side_b: int


# named families ---------------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def complete_bipartite(m: int, k: int) -> Graph:
    """K_{m,k} with parts 0..m-1 and m..m+k-1."""
    return Graph.from_edges(m + k, [(i, m + j) for i in range(m) for j in range(k)])


def star_graph(leaves: int) -> Graph:
    return complete_bipartite(1, leaves)


_FAMILY = re.compile(r"^(p|c|k)(\d+)(?:,(\d+))?$")


def named_graph(name: str) -> Optional[Graph]:
    """Parse ``p<n>``, ``c<n>``, ``k<n>`` or ``k<m>,<n>``; None if not a family name."""
    m = _FAMILY.match(name.strip().lower())
    if not m:
        return None
    kind, a, b = m.group(1), int(m.group(2)), m.group(3)
    if b is not None:
        if kind != "k":
            return None
        return complete_bipartite(a, int(b))
    if kind == "p":
        return path_graph(a)
    if kind == "c":
        return cycle_graph(a)
    return complete_graph(a)


# structural predicates --------------------------------------------------


def max_degree(g: Graph) -> int:
    return max((a.bit_count() for a in g.adj), default=0)


def components(g: Graph) -> list[int]:
    """Vertex masks of the connected components, ordered by lowest vertex."""
    seen = 0
    comps = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(comp)
    return comps


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return len(components(g)) == 1


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.num_edges == g.n - 1 and is_connected(g)


def _two_colour(g: Graph) -> tuple[Optional[Bipartition], Optional[list[int]]]:
    """Breadth-first 2-colouring, or an odd closed walk proving there is none."""
    colour = [-1] * g.n
    parent = [-1] * g.n
    for root in range(g.n):
        if colour[root] != -1:
            continue
        colour[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in bits(g.adj[v]):
                if colour[u] == -1:
                    colour[u] = 1 - colour[v]
                    parent[u] = v
                    queue.append(u)
                elif colour[u] == colour[v]:
                    return None, _odd_walk(parent, v, u)
    side_a = mask_of(v for v in range(g.n) if colour[v] == 0)
    return Bipartition(side_a, g.full & ~side_a), None


def _odd_walk(parent: list[int], v: int, u: int) -> list[int]:
    # v and u share a colour: tree path v->root, root->u, then edge u-v
    def to_root(x):
        out = [x]
        while parent[x] != -1:
            x = parent[x]
            out.append(x)
        return out

    up = to_root(v)
    down = to_root(u)
    return up + down[::-1][1:] + [v]


def bipartition(g: Graph) -> Optional[Bipartition]:
    """A valid 2-colouring, or None when ``g`` has an odd cycle."""
    return _two_colour(g)[0]


def odd_closed_walk(g: Graph) -> Optional[list[int]]:
    """Closed walk of odd length (first vertex repeated at the end), if any."""
    return _two_colour(g)[1]


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def is_triangle_free(g: Graph) -> bool:
    for v in range(g.n):
        higher = g.adj[v] >> (v + 1) << (v + 1)
        for u in bits(higher):
            if g.adj[u] & higher:
                return False
    return True


def eccentricities(g: Graph) -> list[float]:
    out = []
    for s in range(g.n):
        reached = frontier = 1 << s
        depth = 0
        while True:
            nxt = 0
            for u in bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~reached
            if not frontier:
                break
            reached |= frontier
            depth += 1
        out.append(depth if reached == g.full else math.inf)
    return out


def diameter(g: Graph) -> float:
    """Longest shortest-path distance; ``math.inf`` when disconnected.

    Returns an ``int`` for connected graphs (0 when n <= 1).
    """
    if g.n <= 1:
        return 0
    return max(eccentricities(g))
