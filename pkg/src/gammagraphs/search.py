"""Exhaustive realizability sweeps over small graphs."""

from __future__ import annotations

import json
import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional

from .canon import MAX_CANON_VERTICES, canonical_form
from .domination import enumerate_gamma_sets
from .gammagraph import Model, as_graph, build_gamma_graph, structure
from .generate import MAX_GEN_VERTICES, generate_graphs_with_certs
from .graph import Graph, GraphError, complete_bipartite, is_bipartite, is_connected
from .graph6 import parse_graph6

log = logging.getLogger(__name__)

MAX_CENSUS_VERTICES = 8


@dataclass(frozen=True)
class SearchOutcome:
    target_cert: str
    model: Model
    n_range: tuple[int, int]
    bipartite_only: bool
    examined: int
    pruned_by_count: int
    witnesses: tuple[str, ...]

    def to_record(self) -> dict:
        return {
            "target": self.target_cert,
            "model": self.model.value,
            "n_min": self.n_range[0],
            "n_max": self.n_range[1],
            "bipartite_only": self.bipartite_only,
            "examined": self.examined,
            "pruned_by_count": self.pruned_by_count,
            "witness_count": len(self.witnesses),
            "witnesses": list(self.witnesses),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_record())


@dataclass(frozen=True)
class Decision:
    cert: str
    accepted: bool
    pruned: bool


def _decide(g: Graph, target_order: int, target_cert: bytes, model: Model, fast_path: bool) -> tuple[bool, bool]:
    """(accepted, pruned_by_count) for one candidate."""
    if fast_path:
        count = len(enumerate_gamma_sets(g).gamma_sets)
        if count != target_order:
            return False, True
    gg = build_gamma_graph(g, model)
    if gg.order != target_order:
        return False, False
    return canonical_form(as_graph(gg)) == target_cert, False


def _run_chunk(chunk, target_order, target_cert, model, fast_path):
    out = []
    for cert, g in chunk:
        accepted, pruned = _decide(g, target_order, target_cert, model, fast_path)
        out.append(Decision(cert, accepted, pruned))
    return out


def candidates(n_lo: int, n_hi: int, bipartite_only: bool, corpus: Optional[Iterable[Graph]] = None):
    """(certificate string, graph) pairs to scan, in certificate order per order n."""
    if corpus is None:
        out = []
        for n in range(n_lo, n_hi + 1):
            for cert, g in generate_graphs_with_certs(n, is_bipartite if bipartite_only else None, hereditary=True):
                out.append((cert.decode("ascii"), g))
        return out
    seen = {}
    for g in corpus:
        if not n_lo <= g.n <= n_hi:
            continue
        if bipartite_only and not is_bipartite(g):
            continue
        seen.setdefault(canonical_form(g).decode("ascii"), g)
    return sorted(seen.items(), key=lambda item: (len(item[0]), item[0]))


def _check_range(n_lo: int, n_hi: int, cap: int = MAX_GEN_VERTICES):
    if not 1 <= n_lo <= n_hi <= cap:
        raise GraphError(f"order range [{n_lo}, {n_hi}] must satisfy 1 <= lo <= hi <= {cap}")


def scan(target: Graph, n_lo: int, n_hi: int, bipartite_only: bool = False, model=Model.SLIDE,
         workers: int = 1, corpus: Optional[Iterable[Graph]] = None, fast_path: bool = True) -> list[Decision]:
    """Per-candidate accept/reject decisions, sorted by certificate."""
    model = Model(model)
    _check_range(n_lo, n_hi)
    if target.n > MAX_CANON_VERTICES:
        raise GraphError(f"target has {target.n} vertices, above the isomorphism cap {MAX_CANON_VERTICES}")
    target_cert = canonical_form(target)
    pool = candidates(n_lo, n_hi, bipartite_only, corpus)
    if workers <= 1:
        decisions = _run_chunk(pool, target.n, target_cert, model, fast_path)
    else:
        chunks = [pool[w::workers] for w in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            futures = [ex.submit(_run_chunk, c, target.n, target_cert, model, fast_path) for c in chunks]
            decisions = [d for f in futures for d in f.result()]
    decisions.sort(key=lambda d: (len(d.cert), d.cert))
    return decisions


def summarize(target: Graph, decisions: list[Decision], n_lo: int, n_hi: int,
              bipartite_only: bool, model=Model.SLIDE) -> SearchOutcome:
    return SearchOutcome(
        target_cert=canonical_form(target).decode("ascii"),
        model=Model(model),
        n_range=(n_lo, n_hi),
        bipartite_only=bipartite_only,
        examined=len(decisions),
        pruned_by_count=sum(d.pruned for d in decisions),
        witnesses=tuple(d.cert for d in decisions if d.accepted),
    )


def realizability_search(target: Graph, n_lo: int, n_hi: int, bipartite_only: bool = False,
                         model=Model.SLIDE, workers: int = 1,
                         corpus: Optional[Iterable[Graph]] = None, fast_path: bool = True) -> SearchOutcome:
    """Every graph of order n_lo..n_hi whose gamma-graph is isomorphic to ``target``."""
    decisions = scan(target, n_lo, n_hi, bipartite_only, model, workers, corpus, fast_path)
    return summarize(target, decisions, n_lo, n_hi, bipartite_only, model)


def verify_main_theorem(max_n: int = 9, workers: int = 1, corpus=None) -> SearchOutcome:
    """Search bipartite graphs of order <= max_n for a slide gamma-graph isomorphic to K_{2,3}.

    An empty witness list corroborates, for these orders only, that K_{2,3} is
    not the gamma-graph of a bipartite graph.
    """
    return realizability_search(complete_bipartite(2, 3), 1, max_n, bipartite_only=True,
                                model=Model.SLIDE, workers=workers, corpus=corpus)


def spot_check(target: Graph, decisions: list[Decision], model=Model.SLIDE,
               sample: int = 50, seed: Optional[int] = None) -> list[Decision]:
    """Re-decide a random sample without the count fast path; return disagreements."""
    if seed is None:
        seed = random.SystemRandom().randrange(2**32)
    log.info("spot check: %d of %d decisions, seed %d", min(sample, len(decisions)), len(decisions), seed)
    rng = random.Random(seed)
    picked = rng.sample(decisions, min(sample, len(decisions)))
    target_cert = canonical_form(target)
    bad = []
    for d in picked:
        g = parse_graph6(d.cert)
        accepted, _ = _decide(g, target.n, target_cert, Model(model), fast_path=False)
        if accepted != d.accepted:
            bad.append(d)
    return bad


def disconnected_gamma_graph_census(n: int, model=Model.SLIDE, corpus: Optional[Iterable[Graph]] = None) -> list[str]:
    """Certificates of order-n graphs whose gamma-graph is disconnected."""
    _check_range(n, n, MAX_CENSUS_VERTICES)
    model = Model(model)
    out = []
    for cert, g in candidates(n, n, False, corpus):
        if not is_connected(structure(build_gamma_graph(g, model))):
            out.append(cert)
    return out
