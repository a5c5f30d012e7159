"""Domination number, minimum dominating sets and private neighbourhoods."""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .graph import Graph, GraphError, bits


@dataclass(frozen=True)
class DominationReport:
    gamma: int
    gamma_sets: tuple[int, ...]


@dataclass(frozen=True)
class PrivateNeighborhood:
    x: int
    pn: int
    is_self_pn: bool
    external: int


def _check_within(g: Graph, s: int):
    if s < 0 or s & ~g.full:
        raise GraphError(f"vertex set {s:#x} has bits outside 0..{g.n - 1}")


def open_neighborhood(g: Graph, s: int) -> int:
    _check_within(g, s)
    out = 0
    for v in bits(s):
        out |= g.adj[v]
    return out


def closed_neighborhood(g: Graph, s: int) -> int:
    return s | open_neighborhood(g, s)


def is_dominating(g: Graph, d: int) -> bool:
    return closed_neighborhood(g, d) == g.full


def domination_number(g: Graph) -> int:
    return kernels.domination_number(g.closed_array)


def enumerate_gamma_sets(g: Graph) -> DominationReport:
    """All minimum dominating sets, ascending by mask value."""
    gamma = domination_number(g)
    sets = kernels.dominating_sets(g.closed_array, gamma)
    return DominationReport(gamma, tuple(int(s) for s in sets))


def private_neighbors(g: Graph, d: int, x: int) -> PrivateNeighborhood:
    """pn(x, D) = N[x] - N[D - {x}]."""
    _check_within(g, d)
    if not d >> x & 1:
        raise GraphError(f"vertex {x} is not in {d:#x}")
    xbit = 1 << x
    pn = closed_neighborhood(g, xbit) & ~closed_neighborhood(g, d & ~xbit)
    return PrivateNeighborhood(x, pn, bool(pn & xbit), pn & ~xbit)
