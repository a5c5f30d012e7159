"""Compare the numba kernels with the fallback path (GAMMAGRAPHS_NO_NUMBA=1).

    python benchmarks/bench_kernels.py [--repeat 3] [--seed 7] [--max-n 8]

Each backend runs in its own interpreter, since the flag is read at import.
Calling ``func.py_func`` in-process is not a fair fallback: it still reaches
compiled helpers.  Both runs see identical inputs and must return identical
results; every workload is run once untimed so compile time is excluded.
"""
import argparse
import json
import os
import subprocess
import sys
import time

import numpy as np


def random_graph(rng, n, p):
    from gammagraphs.graph import Graph

    edges = [(u, v) for v in range(n) for u in range(v) if rng.random() < p]
    return Graph.from_edges(n, edges)


def best_of(repeat, fn):
    best, result = float("inf"), None
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t)
    return best, result


def workloads(seed, max_n):
    from gammagraphs import kernels
    from gammagraphs.graph import Graph
    from gammagraphs.search import verify_main_theorem

    rng = np.random.default_rng(seed)
    dense = [kernels.closed_masks(random_graph(rng, 40, 0.1).adj) for _ in range(5)]
    mid = [kernels.closed_masks(random_graph(rng, 24, 0.15).adj) for _ in range(5)]
    mid_gamma = [kernels.domination_number(c) for c in mid]
    # 11 disjoint edges: 2048 gamma-sets
    g = Graph.from_edges(22, [(2 * i, 2 * i + 1) for i in range(11)])
    sets = kernels.dominating_sets(kernels.closed_masks(g.adj), 11)
    adj = np.array(g.adj, dtype=np.uint64)

    return {
        "gamma, 5 x G(40, 0.1)": lambda: [kernels.domination_number(c) for c in dense],
        "gamma-sets, 5 x G(24, 0.15)": lambda: [kernels.dominating_sets(c, k).tolist()
                                               for c, k in zip(mid, mid_gamma)],
        "slide edges, 2048 sets": lambda: kernels.gamma_edges(sets, adj, True).tolist(),
        f"K2,3 search n<={max_n}, gen cached": lambda: verify_main_theorem(max_n).to_record(),
    }


def worker(args):
    from gammagraphs._accel import BACKEND

    out = {"backend": BACKEND, "rows": {}}
    for name, fn in workloads(args.seed, args.max_n).items():
        fn()  # warm caches and jit
        t, result = best_of(args.repeat, fn)
        out["rows"][name] = {"seconds": t, "result": json.dumps(result, sort_keys=True, default=str)}
    print(json.dumps(out))


def run_backend(args, disable):
    env = dict(os.environ)
    env.pop("GAMMAGRAPHS_NO_NUMBA", None)
    if disable:
        env["GAMMAGRAPHS_NO_NUMBA"] = "1"
    cmd = [sys.executable, __file__, "--worker", "--repeat", str(args.repeat),
           "--seed", str(args.seed), "--max-n", str(args.max_n)]
    res = subprocess.run(cmd, env=env, check=True, capture_output=True, text=True)
    return json.loads(res.stdout.splitlines()[-1])


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--max-n", type=int, default=8, help="order for the end-to-end search")
    ap.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args(argv)
    if args.worker:
        worker(args)
        return
    fast, slow = run_backend(args, False), run_backend(args, True)
    assert fast["backend"] == "numba" and slow["backend"] == "numpy", (fast["backend"], slow["backend"])
    print(f"{'workload':<34} {'numba ms':>10} {'fallback ms':>12} {'speedup':>9}  same")
    for name, a in fast["rows"].items():
        b = slow["rows"][name]
        same = a["result"] == b["result"]
        ratio = b["seconds"] / a["seconds"] if a["seconds"] else float("inf")
        print(f"{name:<34} {a['seconds'] * 1e3:>10.2f} {b['seconds'] * 1e3:>12.2f} {ratio:>8.1f}x  {same}")
        if not same:
            sys.exit(f"backends disagree on {name!r}")


if __name__ == "__main__":
    main()
