"""Command-line front end.

Exit codes: 0 completed/passed, 1 hard violations (verify only), 2 usage or
parse error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Optional

from .domination import enumerate_gamma_sets
from .gammagraph import Model, as_graph, build_gamma_graph, to_dot
from .generate import generate_graphs_with_certs, generate_trees
from .graph import Graph, GraphError, format_set, is_bipartite, named_graph
from .graph6 import parse_graph6, read_graph6_lines, write_graph6
from .search import disconnected_gamma_graph_census, scan, spot_check, summarize
from .verify import SUITES, run_suite

log = logging.getLogger("gammagraphs")


class UsageError(Exception):
    pass


def parse_input(text: str) -> Graph:
    """A named family (p4, c4, k3, k2,3) or a graph6 record."""
    g = named_graph(text)
    if g is not None:
        return g
    return parse_graph6(text.strip())


def _read_source(arg: Optional[str], path: Optional[str]) -> str:
    if arg is not None and path is not None:
        raise UsageError("give the graph either as an argument or with --input-file, not both")
    if path is not None:
        with open(path, encoding="ascii") as fh:
            return fh.read().strip()
    if arg is None or arg == "-":
        data = sys.stdin.read().strip()
        if not data:
            raise UsageError("no graph on standard input")
        return data.splitlines()[0]
    return arg


def _load_corpus(path: Optional[str]) -> Optional[list[Graph]]:
    if path is None:
        return None
    with open(path, "rb") as fh:
        return read_graph6_lines(fh)


def _emit(record: dict):
    print(json.dumps(record))


def cmd_gamma(args) -> int:
    g = parse_input(_read_source(args.graph, args.input_file))
    rep = enumerate_gamma_sets(g)
    if args.format == "records":
        _emit({"graph": write_graph6(g).decode("ascii"), "n": g.n, "gamma": rep.gamma,
               "gamma_set_count": len(rep.gamma_sets),
               "gamma_sets": [format_set(s) for s in rep.gamma_sets]})
    else:
        print(f"gamma={rep.gamma} gamma_sets={len(rep.gamma_sets)}")
    return 0


def cmd_gamma_graph(args) -> int:
    g = parse_input(_read_source(args.graph, args.input_file))
    gg = build_gamma_graph(g, args.model)
    if args.format == "dot":
        sys.stdout.write(to_dot(gg))
    elif args.format == "graph6":
        print(write_graph6(as_graph(gg)).decode("ascii"))
    elif args.format == "records":
        _emit({"graph": write_graph6(g).decode("ascii"), "model": gg.model.value, "order": gg.order,
               "vertices": gg.labels(), "edges": [list(e) for e in gg.edges]})
    else:
        labels = gg.labels()
        nbrs = [[] for _ in labels]
        for i, j in gg.edges:
            nbrs[i].append(j)
            nbrs[j].append(i)
        for i, label in enumerate(labels):
            print(f"{i} {label}: " + " ".join(str(j) for j in sorted(nbrs[i])))
    return 0


def cmd_search(args) -> int:
    target = parse_input(args.target)
    corpus = _load_corpus(args.corpus)
    lo = args.min_n
    decisions = scan(target, lo, args.max_n, args.bipartite, args.model, args.workers, corpus)
    if args.spot_check:
        bad = spot_check(target, decisions, args.model, args.spot_check, args.seed)
        log.info("spot check disagreements: %d", len(bad))
        for d in bad:
            log.warning("spot check disagrees on %s", d.cert)
    outcome = summarize(target, decisions, lo, args.max_n, args.bipartite, args.model)
    if args.format == "records":
        _emit(outcome.to_record())
    else:
        print(f"target={outcome.target_cert} model={outcome.model.value} orders={lo}..{args.max_n} "
              f"bipartite_only={outcome.bipartite_only} examined={outcome.examined} "
              f"pruned_by_count={outcome.pruned_by_count} witnesses={len(outcome.witnesses)}")
        for w in outcome.witnesses:
            print(w)
    return 0


def cmd_verify(args) -> int:
    corpus = _load_corpus(args.corpus)
    max_n = args.max_n if args.max_n is not None else 7
    rep = run_suite(args.suite, max_n, corpus)
    if args.format == "records":
        if args.verbose:
            for rec in rep.records:
                _emit(rec)
        _emit(rep.summary())
    else:
        status = "PASS" if rep.passed else "FAIL"
        print(f"{status} {rep.name} max_n={max_n} corpus={rep.corpus_size} "
              f"violations={len(rep.violations)} advisories={len(rep.advisories)} time={rep.wall_time:.2f}s")
        for v in rep.violations:
            print("violation " + json.dumps(v))
        if args.verbose:
            for a in rep.advisories:
                print("advisory " + json.dumps(a))
    return 0 if rep.passed else 1


def cmd_gen(args) -> int:
    count = 0
    if args.kind == "trees":
        for t in generate_trees(args.n):
            print(write_graph6(t).decode("ascii"))
            count += 1
    else:
        keep = is_bipartite if args.kind == "bipartite" else None
        for cert, _ in generate_graphs_with_certs(args.n, keep, hereditary=keep is not None):
            print(cert.decode("ascii"))
            count += 1
    print(f"{count} graphs", file=sys.stderr)
    return 0


def cmd_census(args) -> int:
    corpus = _load_corpus(args.corpus)
    found = disconnected_gamma_graph_census(args.n, args.model, corpus)
    for cert in found:
        print(cert)
    print(f"{len(found)} graphs with disconnected {Model(args.model).value} gamma-graph", file=sys.stderr)
    return 0


def _add_graph_input(p):
    p.add_argument("graph", nargs="?", help="graph6 record or family name (p4, c4, k3, k2,3); '-' or omitted reads stdin")
    p.add_argument("--input-file", metavar="PATH", help="read the graph6 record from a file")


def _add_model(p):
    p.add_argument("--model", choices=[m.value for m in Model], default="slide")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gammagraphs", description="gamma-graphs of small graphs")
    parser.add_argument("--verbose", "-v", action="store_true", help="progress and diagnostics on stderr")
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--verbose", "-v", action="store_true", default=argparse.SUPPRESS)

    p = sub.add_parser("gamma", parents=[common], help="domination number and gamma-set count")
    _add_graph_input(p)
    p.add_argument("--format", choices=["text", "records"], default="text")
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("gamma-graph", parents=[common], help="build the slide or jump gamma-graph")
    _add_graph_input(p)
    _add_model(p)
    p.add_argument("--format", choices=["text", "records", "dot", "graph6"], default="text")
    p.set_defaults(func=cmd_gamma_graph)

    p = sub.add_parser("search", parents=[common], help="graphs whose gamma-graph is isomorphic to a target")
    p.add_argument("target", help="target graph (graph6 or family name)")
    p.add_argument("--min-n", type=int, default=1)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--bipartite", action="store_true", help="only bipartite candidates")
    _add_model(p)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--corpus", metavar="PATH", help="graph6 file to scan instead of generated graphs")
    p.add_argument("--spot-check", type=int, default=0, metavar="K",
                   help="re-decide K random candidates without the count fast path")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--format", choices=["text", "records"], default="text")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", parents=[common], help="run a property suite")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--corpus", metavar="PATH")
    p.add_argument("--format", choices=["text", "records"], default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", parents=[common], help="one graph6 line per isomorphism class")
    p.add_argument("n", type=int)
    p.add_argument("kind", nargs="?", choices=["all", "bipartite", "trees"], default="all")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("census", parents=[common], help="graphs of order n with a disconnected gamma-graph")
    p.add_argument("n", type=int)
    _add_model(p)
    p.add_argument("--corpus", metavar="PATH")
    p.set_defaults(func=cmd_census)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    if hasattr(args, "workers") and args.workers < 1:
        parser.error("--workers must be at least 1")
    try:
        return args.func(args)
    except (UsageError, GraphError, OSError) as exc:
        print(f"gammagraphs: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
