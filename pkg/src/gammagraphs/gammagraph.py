"""Slide and jump gamma-graphs: reconfiguration graphs on minimum dominating sets."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import kernels
from .domination import enumerate_gamma_sets
from .graph import MAX_VERTICES, Graph, GraphError, format_set


class Model(str, Enum):
    SLIDE = "slide"
    JUMP = "jump"


@dataclass(frozen=True)
class GammaGraph:
    model: Model
    base: Graph
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def order(self) -> int:
        return len(self.vertices)

    def labels(self) -> list[str]:
        return [format_set(s) for s in self.vertices]


def jump_adjacent(g: Graph, d1: int, d2: int) -> bool:
    """D1 and D2 differ by exactly one vertex on each side."""
    return (d1 & ~d2).bit_count() == 1 and (d2 & ~d1).bit_count() == 1


def slide_adjacent(g: Graph, d1: int, d2: int) -> bool:
    if not jump_adjacent(g, d1, d2):
        return False
    x = (d1 & ~d2).bit_length() - 1
    return bool(g.adj[x] & (d2 & ~d1))


def build_gamma_graph(g: Graph, model=Model.SLIDE) -> GammaGraph:
    model = Model(model)
    sets = enumerate_gamma_sets(g).gamma_sets
    arr = np.array(sets, dtype=np.uint64)
    edges = kernels.gamma_edges(arr, g.adj_array, model is Model.SLIDE)
    return GammaGraph(model, g, sets, tuple((int(i), int(j)) for i, j in edges))


def as_graph(gg: GammaGraph) -> Graph:
    if gg.order > MAX_VERTICES:
        raise GraphError(f"gamma-graph has {gg.order} vertices, above the {MAX_VERTICES}-vertex cap")
    return Graph.from_edges(gg.order, gg.edges)


def to_dot(gg: GammaGraph) -> str:
    name = "slide" if gg.model is Model.SLIDE else "jump"
    lines = [f"graph {name}_gamma_graph {{"]
    for i, label in enumerate(gg.labels()):
        lines.append(f'  {i} [label="{label}"];')
    for i, j in gg.edges:
        lines.append(f"  {i} -- {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def structure(gg: GammaGraph) -> Graph:
    """Uncapped graph view of ``gg`` for structural measurements.

    Unlike :func:`as_graph` this accepts any order; the result is only fit for
    the bit-mask predicates in :mod:`gammagraphs.graph` (degree, diameter,
    connectivity, bipartiteness, triangles), not for kernels or isomorphism.
    """
    adj = [0] * gg.order
    for i, j in gg.edges:
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return Graph._trusted(gg.order, tuple(adj))
