"""Compare the compiled kernels against the pure-Python fallback.

Backend selection happens at import time, so the script re-executes
itself in a subprocess with SPHEREROUTE_PURE_PYTHON=1 to collect the
fallback numbers, then prints a side-by-side table.

Usage: python benchmarks/kernel_bench.py [--rows 300] [--cols 300] [--repeat 3]
"""
from __future__ import annotations

import argparse
import json
import os
import statistics
import subprocess
import sys
import time


def measure(rows: int, cols: int, repeat: int) -> dict:
    import sphereroute as sr
    from sphereroute.synth import grid_graph

    g = grid_graph(rows, cols, weight_range=(1, 10), seed=7)
    n = g.node_count
    s, t = 0, n - 1
    results: dict[str, float] = {}

    def best_of(label: str, fn) -> None:
        times = []
        for _ in range(repeat):
            t0 = time.perf_counter()
            fn()
            times.append(time.perf_counter() - t0)
        results[label] = min(times)

    best_of("bfs_full", lambda: sr.bfs_hops(g, s))
    best_of("bfs_capped_r32", lambda: sr.bfs_hops(g, n // 2, cap=32))
    best_of("hop_distance", lambda: sr.hop_distance(g, s, t))
    best_of("dijkstra_p2p", lambda: sr.dijkstra(g, s, t))
    best_of("route_2tasks", lambda: sr.route(
        g, s, t, sr.PartitionConfig(r_max=rows + cols, rng_seed=1), workers=1))
    best_of("grow_cells_k64", lambda: sr.grow_cells(g, 64, seed=1))
    return {
        "backend": sr.backend_name(),
        "nodes": n,
        "edges": g.edge_count,
        "timings": results,
    }


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--rows", type=int, default=300)
    parser.add_argument("--cols", type=int, default=300)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--emit-json", action="store_true",
                        help="print one JSON object (used by the subprocess)")
    args = parser.parse_args()

    mine = measure(args.rows, args.cols, args.repeat)
    if args.emit_json:
        print(json.dumps(mine))
        return 0

    if mine["backend"] == "python":
        print("compiled backend unavailable; showing pure-Python timings only")
        for k, v in mine["timings"].items():
            print(f"{k:>16}: {v * 1e3:9.3f} ms")
        return 0

    env = dict(os.environ, SPHEREROUTE_PURE_PYTHON="1")
    proc = subprocess.run(
        [sys.executable, os.path.abspath(__file__), "--rows", str(args.rows),
         "--cols", str(args.cols), "--repeat", str(args.repeat), "--emit-json"],
        env=env, capture_output=True, text=True, check=True)
    pure = json.loads(proc.stdout.strip().splitlines()[-1])

    print(f"grid {args.rows}x{args.cols}: {mine['nodes']} nodes, "
          f"{mine['edges']} edges (best of {args.repeat})")
    print(f"{'kernel':>16} {'compiled':>12} {'pure':>12} {'speedup':>9}")
    for k in mine["timings"]:
        c = mine["timings"][k]
        p = pure["timings"][k]
        print(f"{k:>16} {c * 1e3:10.3f}ms {p * 1e3:10.3f}ms {p / c:8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
