"""Property suites: replacement observations, tree bounds, small-order facts."""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .canon import canonical_form
from .domination import enumerate_gamma_sets, private_neighbors
from .gammagraph import Model, build_gamma_graph, slide_adjacent, structure
from .generate import MAX_GEN_VERTICES, MAX_TREE_VERTICES, generate_graphs, generate_trees
from .graph import (
    Graph,
    GraphError,
    bits,
    diameter,
    format_set,
    is_bipartite,
    is_connected,
    is_tree,
    is_triangle_free,
    max_degree,
)
from .graph6 import write_graph6

MAX_OBSERVATION_VERTICES = 8
SUITES = ("observations", "tree-bounds", "small-order-connectivity", "triangle-free", "oracle")


def _name(g: Graph) -> str:
    return write_graph6(g).decode("ascii")


# brute-force oracle -------------------------------------------------------


def brute_force_domination(g: Graph) -> tuple[int, list[int]]:
    """Minimum dominating sets by testing every subset in ascending size."""
    closed = [g.adj[v] | (1 << v) for v in range(g.n)]
    for k in range(g.n + 1):
        found = []
        for combo in itertools.combinations(range(g.n), k):
            covered = 0
            for v in combo:
                covered |= closed[v]
            if covered == g.full:
                found.append(sum(1 << v for v in combo))
        if found:
            return k, sorted(found)
    raise AssertionError("unreachable: V dominates itself")


# observations ---------------------------------------------------------------


def check_obs_spn(g: Graph) -> list[dict]:
    """Self-private vertices of a gamma-set can slide to any neighbour."""
    report = enumerate_gamma_sets(g)
    gamma_sets = set(report.gamma_sets)
    bad = []
    for d in report.gamma_sets:
        for u in bits(d):
            if private_neighbors(g, d, u).pn != 1 << u:
                continue
            for v in bits(g.adj[u]):
                dv = (d & ~(1 << u)) | (1 << v)
                if dv not in gamma_sets:
                    reason = "replacement is not a gamma-set"
                elif not slide_adjacent(g, d, dv):
                    reason = "replacement not slide-adjacent"
                else:
                    continue
                bad.append({"graph": _name(g), "set": format_set(d), "u": u, "v": v, "reason": reason})
    return bad


def check_obs_bipn(g: Graph) -> list[dict]:
    """Two slides out of one vertex force that vertex to be its only private neighbour."""
    if not is_bipartite(g):
        raise GraphError("observation on double replacements needs a bipartite graph")
    report = enumerate_gamma_sets(g)
    gamma_sets = set(report.gamma_sets)
    bad = []
    for d1 in report.gamma_sets:
        for u in bits(d1):
            base = d1 & ~(1 << u)
            # neighbours of u whose swap-in gives another gamma-set
            movers = [v for v in bits(g.adj[u]) if not d1 >> v & 1 and base | (1 << v) in gamma_sets]
            for v, w in itertools.combinations(movers, 2):
                d2, d3 = base | (1 << v), base | (1 << w)
                got = (private_neighbors(g, d1, u).pn,
                       private_neighbors(g, d2, v).pn,
                       private_neighbors(g, d3, w).pn)
                if any(p != 1 << u for p in got):
                    bad.append({"graph": _name(g), "set": format_set(d1), "u": u, "v": v, "w": w,
                                "private": [format_set(p) for p in got]})
    return bad


# trees ------------------------------------------------------------------------


@dataclass(frozen=True)
class TreeStats:
    n: int
    leaves: int
    supports: int
    weak_supports: int
    strong_supports: int

    @property
    def s(self) -> int:
        return self.supports.bit_count()

    @property
    def s_weak(self) -> int:
        return self.weak_supports.bit_count()

    @property
    def s_strong(self) -> int:
        return self.strong_supports.bit_count()


def tree_stats(t: Graph) -> TreeStats:
    if t.n < 2:
        raise GraphError("leaf and support structure needs at least 2 vertices")
    if not is_tree(t):
        raise GraphError("input is not a tree")
    leaves = sum(1 << v for v in range(t.n) if t.degree(v) == 1)
    weak = strong = 0
    for v in range(t.n):
        k = (t.adj[v] & leaves).bit_count()
        if k == 1:
            weak |= 1 << v
        elif k >= 2:
            strong |= 1 << v
    return TreeStats(t.n, leaves, weak | strong, weak, strong)


def golden_power_bound_holds(count: int, gamma: int) -> bool:
    """Exact test of count <= ((1 + sqrt 13) / 2) ** gamma in integers.

    Expands (1 + sqrt 13) ** gamma = a + b sqrt 13, then compares
    count * 2**gamma - a against b sqrt 13 by squaring.
    """
    a, b = 1, 0
    for _ in range(gamma):
        a, b = a + 13 * b, a + b
    lhs = count * 2**gamma - a
    return lhs <= 0 or lhs * lhs <= 13 * b * b


@dataclass
class BoundReport:
    tree: str
    gamma: int
    stats: TreeStats
    measured: dict = field(default_factory=dict)
    limits: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)
    advisory_violations: list = field(default_factory=list)
    slide_connected: bool = True
    slide_bipartite: bool = True

    def to_record(self) -> dict:
        return {
            "tree": self.tree,
            "n": self.stats.n,
            "gamma": self.gamma,
            "s": self.stats.s,
            "s_weak": self.stats.s_weak,
            "s_strong": self.stats.s_strong,
            "measured": {k: _jsonable(v) for k, v in self.measured.items()},
            "limits": {k: _jsonable(v) for k, v in self.limits.items()},
            "violations": list(self.violations),
            "advisory_violations": list(self.advisory_violations),
            "slide_connected": self.slide_connected,
            "slide_bipartite": self.slide_bipartite,
        }


def _jsonable(x):
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    return x


HARD_BOUNDS = ("max_degree_slide", "max_degree_jump", "diameter_slide", "diameter_jump",
               "order", "diameter_slide_support")
ADVISORY_BOUNDS = ("diameter_jump_support",)


def check_tree_bounds(t: Graph) -> BoundReport:
    """Measure slide/jump gamma-graphs of a tree against the published tree bounds.

    The support-count diameter bounds apply to trees of order >= 3; the jump
    one is advisory only.
    """
    stats = tree_stats(t)
    if t.n > MAX_TREE_VERTICES:
        raise GraphError(f"tree order {t.n} above {MAX_TREE_VERTICES}")
    n = t.n
    slide = build_gamma_graph(t, Model.SLIDE)
    jump = build_gamma_graph(t, Model.JUMP)
    gamma = bin(slide.vertices[0]).count("1")
    s_view, j_view = structure(slide), structure(jump)
    rep = BoundReport(_name(t), gamma, stats)
    m, lim = rep.measured, rep.limits

    m["max_degree_slide"], lim["max_degree_slide"] = max_degree(s_view), n - gamma
    m["max_degree_jump"], lim["max_degree_jump"] = max_degree(j_view), n - gamma
    m["diameter_slide"], lim["diameter_slide"] = diameter(s_view), 2 * (2 * gamma - stats.s)
    m["diameter_jump"], lim["diameter_jump"] = diameter(j_view), 2 * gamma
    m["order"] = slide.order
    m["order_jump"] = jump.order
    lim["order"] = ((1 + math.sqrt(13)) / 2) ** gamma  # display only; verdict is exact
    for name in ("max_degree_slide", "max_degree_jump", "diameter_slide", "diameter_jump"):
        if m[name] > lim[name]:
            rep.violations.append(name)
    if slide.order != jump.order or not golden_power_bound_holds(slide.order, gamma):
        rep.violations.append("order")

    if n >= 3:
        # diameters are integers, so the fractional term can be floored
        lim["diameter_slide_support"] = min(2 * (gamma - stats.s_strong) - stats.s_weak, 2 * (n - 1) // 3)
        m["diameter_slide_support"] = m["diameter_slide"]
        if m["diameter_slide_support"] > lim["diameter_slide_support"]:
            rep.violations.append("diameter_slide_support")
        lim["diameter_jump_support"] = gamma - stats.s_weak
        m["diameter_jump_support"] = m["diameter_jump"]
        if m["diameter_jump_support"] > lim["diameter_jump_support"]:
            rep.advisory_violations.append("diameter_jump_support")

    rep.slide_connected = is_connected(s_view)
    rep.slide_bipartite = is_bipartite(s_view)
    return rep


# suites -------------------------------------------------------------------


@dataclass
class SuiteReport:
    name: str
    max_n: int
    corpus_size: int = 0
    violations: list = field(default_factory=list)
    advisories: list = field(default_factory=list)
    wall_time: float = 0.0
    details: dict = field(default_factory=dict)
    records: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def summary(self) -> dict:
        return {
            "suite": self.name,
            "max_n": self.max_n,
            "corpus_size": self.corpus_size,
            "violations": len(self.violations),
            "advisories": len(self.advisories),
            "passed": self.passed,
            "wall_time": round(self.wall_time, 3),
            "details": self.details,
        }


def _corpus(lo: int, hi: int, keep=None, corpus: Optional[Iterable[Graph]] = None) -> list[Graph]:
    if corpus is not None:
        return [g for g in corpus if lo <= g.n <= hi and (keep is None or keep(g))]
    out = []
    for n in range(lo, hi + 1):
        out.extend(generate_graphs(n, keep, hereditary=keep is not None))
    return out


def _check_max_n(name: str, max_n: int, lo: int, hi: int):
    if not lo <= max_n <= hi:
        raise GraphError(f"suite {name!r} needs {lo} <= max_n <= {hi}, got {max_n}")


def _suite_observations(rep: SuiteReport, corpus):
    _check_max_n(rep.name, rep.max_n, 1, MAX_OBSERVATION_VERTICES)
    graphs = _corpus(1, rep.max_n, corpus=corpus)
    bip = [g for g in graphs if is_bipartite(g)]
    for g in graphs:
        bad = check_obs_spn(g)
        rep.violations.extend(dict(b, observation="self-private-slide") for b in bad)
        rep.records.append({"graph": _name(g), "check": "self-private-slide", "violations": len(bad)})
    for g in bip:
        bad = check_obs_bipn(g)
        rep.violations.extend(dict(b, observation="double-slide-private") for b in bad)
        rep.records.append({"graph": _name(g), "check": "double-slide-private", "violations": len(bad)})
    rep.corpus_size = len(graphs)
    rep.details = {"graphs": len(graphs), "bipartite_graphs": len(bip)}


def _suite_tree_bounds(rep: SuiteReport, corpus):
    _check_max_n(rep.name, rep.max_n, 2, MAX_TREE_VERTICES)
    if corpus is not None:
        trees = [t for t in corpus if 2 <= t.n <= rep.max_n and is_tree(t)]
    else:
        trees = [t for n in range(2, rep.max_n + 1) for t in generate_trees(n)]
    ratios: dict[str, float] = {}
    per_order: dict[int, int] = {}
    for t in trees:
        per_order[t.n] = per_order.get(t.n, 0) + 1
        b = check_tree_bounds(t)
        rec = b.to_record()
        rep.records.append(rec)
        for name in b.violations:
            rep.violations.append({"tree": b.tree, "bound": name,
                                   "measured": _jsonable(b.measured[name]), "limit": _jsonable(b.limits[name])})
        for name in b.advisory_violations:
            rep.advisories.append({"tree": b.tree, "bound": name,
                                   "measured": _jsonable(b.measured[name]), "limit": _jsonable(b.limits[name])})
        if not b.slide_connected:
            rep.violations.append({"tree": b.tree, "bound": "slide_connected"})
        if not b.slide_bipartite:
            rep.violations.append({"tree": b.tree, "bound": "slide_bipartite"})
        for name, limit in b.limits.items():
            value = b.measured[name]
            if limit > 0 and not math.isinf(value):
                ratios[name] = max(ratios.get(name, 0.0), value / limit)
    rep.corpus_size = len(trees)
    rep.details = {"trees_per_order": {str(k): v for k, v in sorted(per_order.items())},
                   "max_ratio": {k: round(v, 4) for k, v in sorted(ratios.items())}}


def _suite_connectivity(rep: SuiteReport, corpus):
    _check_max_n(rep.name, rep.max_n, 1, MAX_OBSERVATION_VERTICES)
    counts: dict[int, int] = {}
    graphs = _corpus(1, rep.max_n, corpus=corpus)
    for g in graphs:
        connected = is_connected(structure(build_gamma_graph(g, Model.SLIDE)))
        counts[g.n] = counts.get(g.n, 0) + (not connected)
        rep.records.append({"graph": _name(g), "gamma_graph_connected": connected})
        if not connected and g.n <= 5:
            rep.violations.append({"graph": _name(g), "reason": "disconnected slide gamma-graph at order <= 5"})
    rep.corpus_size = len(graphs)
    rep.details = {"disconnected_per_order": {str(k): v for k, v in sorted(counts.items())}}


def _suite_triangle_free(rep: SuiteReport, corpus):
    _check_max_n(rep.name, rep.max_n, 1, MAX_GEN_VERTICES - 1)
    graphs = _corpus(1, rep.max_n, is_triangle_free, corpus=corpus)
    for g in graphs:
        ok = is_triangle_free(structure(build_gamma_graph(g, Model.SLIDE)))
        rep.records.append({"graph": _name(g), "gamma_graph_triangle_free": ok})
        if not ok:
            rep.violations.append({"graph": _name(g), "reason": "slide gamma-graph contains a triangle"})
    rep.corpus_size = len(graphs)


def _suite_oracle(rep: SuiteReport, corpus):
    _check_max_n(rep.name, rep.max_n, 1, MAX_OBSERVATION_VERTICES)
    graphs = _corpus(1, rep.max_n, corpus=corpus)
    for g in graphs:
        report = enumerate_gamma_sets(g)
        gamma, sets = brute_force_domination(g)
        same = report.gamma == gamma and list(report.gamma_sets) == sets
        rep.records.append({"graph": _name(g), "gamma": report.gamma, "gamma_sets": len(sets), "match": same})
        if not same:
            rep.violations.append({"graph": _name(g), "gamma": report.gamma, "oracle_gamma": gamma})
    rep.corpus_size = len(graphs)


_RUNNERS = {
    "observations": _suite_observations,
    "tree-bounds": _suite_tree_bounds,
    "small-order-connectivity": _suite_connectivity,
    "triangle-free": _suite_triangle_free,
    "oracle": _suite_oracle,
}


def run_suite(name: str, max_n: int, corpus: Optional[Iterable[Graph]] = None) -> SuiteReport:
    if name not in _RUNNERS:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    rep = SuiteReport(name, max_n)
    start = time.perf_counter()
    _RUNNERS[name](rep, list(corpus) if corpus is not None else None)
    rep.wall_time = time.perf_counter() - start
    return rep
