"""Command-line entry point.

Subcommands: ``route`` (one query), ``partition`` (emit the task list as
JSON lines), ``baseline`` (run one comparison method), ``bench`` (full
experiment to CSV), and ``profiles`` (recompute profile curves from a
records CSV). Node ids are 1-based at this boundary, matching the DIMACS
convention; everything internal is 0-based.

Option precedence is flag > environment (SPHEREROUTE_<KEY>) > config file
(flat ``key=value`` lines) > built-in default, and the resolved
configuration is echoed into every output file's metadata header.

Exit codes: 0 success, 1 usage error, 2 data/IO error, 3 internal
invariant violation.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import __version__
from .bench import (
    ExperimentConfig,
    aggregate,
    dominance_table,
    metadata_lines,
    pareto_dominance,
    profiles_from_aggregate,
    read_records_csv,
    run_experiment,
    write_profiles_csv,
    write_records_csv,
    write_summary_csv,
)
from .baselines import corridor_route, dijkstra_full, grow_cells, louvain, louvain_route
from .errors import (
    DisconnectedError,
    GraphParseError,
    IncompleteRunError,
    InvariantError,
    SphereRouteError,
)
from .graph import load_graph
from .kernels import backend_name
from .partition import PartitionConfig, sph_partition
from .router import SolverSpec, default_workers, route
from .util import config_hash, utc_stamp


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _load_config_file(path: str) -> dict[str, str]:
    values: dict[str, str] = {}
    with open(path, "r", encoding="utf-8") as f:
        for lineno, raw in enumerate(f, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise GraphParseError(f"{path}: line {lineno}: expected key=value")
            key, _, value = line.partition("=")
            values[key.strip()] = value.strip()
    return values


def _parse_seed_list(value) -> tuple[int, ...]:
    if isinstance(value, (tuple, list)):
        return tuple(int(x) for x in value)
    text = value.strip()
    if ".." in text:
        lo, _, hi = text.partition("..")
        return tuple(range(int(lo), int(hi) + 1))
    return tuple(int(x) for x in text.split(",") if x)


def _parse_methods(value) -> tuple[str, ...]:
    if isinstance(value, (tuple, list)):
        return tuple(value)
    return tuple(x for x in value.split(",") if x)


class ConfigResolver:
    """flag > env > file > default, with everything recorded for echoing."""

    def __init__(self, args: argparse.Namespace):
        self.flags = vars(args)
        self.file_values: dict[str, str] = {}
        cfg_path = self.flags.get("config")
        if cfg_path:
            self.file_values = _load_config_file(cfg_path)
        self.resolved: dict[str, object] = {}

    def get(self, key: str, default, convert=None):
        convert = convert or (lambda x: x)
        value = self.flags.get(key)
        if value is not None:
            value = convert(value)
        else:
            env = os.environ.get(f"SPHEREROUTE_{key.upper()}")
            if env is not None:
                value = convert(env)
            elif key in self.file_values:
                value = convert(self.file_values[key])
            else:
                value = default
        self.resolved[key] = value
        return value


def _emit_meta_header(f, resolved: dict, graph_hash: str) -> None:
    f.write(f"# sphereroute {__version__}\n")
    f.write(f"# created={utc_stamp()}\n")
    f.write(f"# config_hash={config_hash(resolved)}\n")
    f.write(f"# graph_hash={graph_hash}\n")
    for key in sorted(resolved):
        f.write(f"# config.{key}={resolved[key]}\n")


def _resolve_terminal(node_1based: int, loaded, name: str) -> int:
    internal = node_1based - 1
    if loaded.to_original is not None:
        hits = (loaded.to_original == internal).nonzero()[0]
        if hits.size == 0:
            raise DisconnectedError(
                f"{name}={node_1based} is outside the extracted component")
        return int(hits[0])
    if not (0 <= internal < loaded.graph.node_count):
        raise DisconnectedError(f"{name}={node_1based} out of range")
    return internal


def _external_id(internal: int, loaded) -> int:
    if loaded.to_original is not None:
        return int(loaded.to_original[internal]) + 1
    return internal + 1


def _cmd_route(args: argparse.Namespace) -> int:
    res = ConfigResolver(args)
    graph_path = res.get("graph", None)
    if not graph_path:
        raise _UsageError("--graph is required")
    r_max = res.get("r_max", 1800, int)
    seed = res.get("seed", 0, int)
    workers = res.get("workers", default_workers(), int)
    solver = res.get("solver", "dijkstra")
    use_cache = bool(res.get("cache", False, lambda v: v not in ("0", "false", "")))
    largest = bool(args.largest_component)
    res.resolved["largest_component"] = largest
    loaded = load_graph(graph_path, use_cache=use_cache, largest_component=largest)
    if loaded.conflict_arcs:
        print(f"warning: {loaded.conflict_arcs} arc pairs had conflicting "
              "weights; minimum kept", file=sys.stderr)
    s = _resolve_terminal(args.s, loaded, "s")
    t = _resolve_terminal(args.t, loaded, "t")
    if s == t:
        raise _UsageError("s and t must differ")
    cfg = PartitionConfig(r_max=r_max, rng_seed=seed)
    rt, stats = route(loaded.graph, s, t, cfg, SolverSpec(solver), workers)
    payload = {
        "cost": rt.cost,
        "path_nodes": len(rt.nodes),
        "tasks": stats.task_count,
        "forced_leaves": stats.forced_leaves,
        "max_subgraph_nodes": stats.max_subgraph_nodes,
        "partition_s": stats.partition_s,
        "solve_s": stats.solve_s,
        "concat_s": stats.concat_s,
        "total_s": stats.total_s,
        "backend": backend_name(),
        "config": res.resolved,
        "config_hash": config_hash(res.resolved),
    }
    if args.emit_path:
        with open(args.emit_path, "w", encoding="utf-8") as f:
            _emit_meta_header(f, res.resolved, loaded.source_hash)
            for v in rt.nodes:
                f.write(f"{_external_id(v, loaded)}\n")
    if args.json:
        print(json.dumps(payload))
    elif not args.quiet:
        print(f"backend={backend_name()} graph={graph_path} "
              f"nodes={loaded.graph.node_count} edges={loaded.graph.edge_count}")
        print(f"cost={rt.cost!r} path_nodes={len(rt.nodes)} "
              f"tasks={stats.task_count} forced={stats.forced_leaves}")
        print(f"partition_s={stats.partition_s:.6f} solve_s={stats.solve_s:.6f} "
              f"concat_s={stats.concat_s:.6f} total_s={stats.total_s:.6f}")
    return 0


def _cmd_partition(args: argparse.Namespace) -> int:
    res = ConfigResolver(args)
    graph_path = res.get("graph", None)
    if not graph_path:
        raise _UsageError("--graph is required")
    r_max = res.get("r_max", 1800, int)
    seed = res.get("seed", 0, int)
    loaded = load_graph(graph_path)
    s = _resolve_terminal(args.s, loaded, "s")
    t = _resolve_terminal(args.t, loaded, "t")
    if s == t:
        raise _UsageError("s and t must differ")
    cfg = PartitionConfig(r_max=r_max, rng_seed=seed)
    tasks = sph_partition(loaded.graph, s, t, cfg)
    out = sys.stdout
    meta = {
        "meta": {
            "tool": f"sphereroute {__version__}",
            "config": {k: v for k, v in sorted(res.resolved.items())},
            "config_hash": config_hash(res.resolved),
            "graph_hash": loaded.source_hash,
            "tasks": len(tasks),
        }
    }
    out.write(json.dumps(meta) + "\n")
    for i, task in enumerate(tasks):
        out.write(json.dumps({
            "index": i,
            "entry": _external_id(task.entry, loaded),
            "exit": _external_id(task.exit, loaded),
            "nodes": task.subgraph.graph.node_count,
            "edges": task.subgraph.graph.edge_count,
            "radius": task.radius,
            "depth": task.depth,
            "forced": task.forced,
        }) + "\n")
    return 0


def _cmd_baseline(args: argparse.Namespace) -> int:
    res = ConfigResolver(args)
    graph_path = res.get("graph", None)
    if not graph_path:
        raise _UsageError("--graph is required")
    k = res.get("k", 64, int)
    seed = res.get("seed", 0, int)
    loaded = load_graph(graph_path)
    s = _resolve_terminal(args.s, loaded, "s")
    t = _resolve_terminal(args.t, loaded, "t")
    if s == t:
        raise _UsageError("s and t must differ")
    g = loaded.graph
    import time as _time

    t0 = _time.perf_counter()
    stats_payload: dict[str, object] = {}
    if args.method == "dijkstra":
        path = dijkstra_full(g, s, t)
    elif args.method == "corridor":
        part = grow_cells(g, k, seed)
        path, st = corridor_route(g, s, t, part)
        stats_payload = {"corridor_cells": st.corridor_cells,
                         "corridor_nodes": st.corridor_nodes,
                         "quotient_hops": st.quotient_hops,
                         "widened": st.widened, "fallback": st.fallback,
                         "cell_size_ratio": part.size_ratio}
    else:
        part = louvain(g, seed)
        path, st = louvain_route(g, s, t, part)
        stats_payload = {"communities": part.community_count,
                         "modularity": part.modularity,
                         "corridor_nodes": st.corridor_nodes,
                         "widened": st.widened, "fallback": st.fallback}
    elapsed = _time.perf_counter() - t0
    payload = {"method": args.method, "cost": path.cost,
               "path_nodes": len(path.nodes), "time_s": elapsed,
               **stats_payload}
    if args.oracle and args.method != "dijkstra":
        from .bench import gap as gap_fn

        oracle = dijkstra_full(g, s, t).cost
        payload["oracle"] = oracle
        payload["gap"] = gap_fn(path.cost, oracle)
    if args.json:
        print(json.dumps(payload))
    elif not args.quiet:
        print(" ".join(f"{k_}={v!r}" for k_, v in payload.items()))
    return 0


def _cmd_bench(args: argparse.Namespace) -> int:
    res = ConfigResolver(args)
    graph_path = res.get("graph", None)
    if not graph_path:
        raise _UsageError("--graph is required")
    r_max_raw = res.get("r_max", "auto", str)
    r_max = r_max_raw if r_max_raw == "auto" else int(r_max_raw)
    k = res.get("k", 64, int)
    workers = res.get("workers", 1, int)
    methods = res.get("methods", ("sphere", "corridor", "louvain"), _parse_methods)
    problem_seeds = res.get("problem_seeds", tuple(range(1, 31)), _parse_seed_list)
    inner_seeds = res.get("inner_seeds", tuple(range(1, 6)), _parse_seed_list)
    out_dir = res.get("output_dir", "out", str)
    loaded = load_graph(graph_path)
    cfg = ExperimentConfig(graph=graph_path, problem_seeds=tuple(problem_seeds),
                           inner_seeds=tuple(inner_seeds), methods=tuple(methods),
                           r_max=r_max, k=k, workers=workers)
    progress = None if args.quiet else lambda msg: print(msg, file=sys.stderr)
    records = run_experiment(cfg, graph=loaded.graph, progress=progress)
    rows = aggregate(records)
    profiles = profiles_from_aggregate(rows)
    os.makedirs(out_dir, exist_ok=True)
    meta = metadata_lines("records", res.resolved, loaded.source_hash)
    write_records_csv(os.path.join(out_dir, "records.csv"), records, meta)
    meta = metadata_lines("summary", res.resolved, loaded.source_hash)
    write_summary_csv(os.path.join(out_dir, "summary.csv"), rows, meta)
    meta = metadata_lines("profiles", res.resolved, loaded.source_hash)
    write_profiles_csv(os.path.join(out_dir, "profiles.csv"), profiles, meta)
    if not args.quiet:
        table = dominance_table(rows)
        if all(m in table for m in ("sphere", "corridor", "louvain")):
            report = pareto_dominance(table)
            print(f"pareto: sphere dominates both baselines on "
                  f"{report.dominates_all_count} of {len(report.instances)} instances")
        print(f"wrote records.csv, summary.csv, profiles.csv to {out_dir}")
    return 0


def _cmd_profiles(args: argparse.Namespace) -> int:
    records, _meta = read_records_csv(args.records)
    rows = aggregate(records)
    profiles = profiles_from_aggregate(rows)
    resolved = {"records": args.records, "out": args.out}
    meta = metadata_lines("profiles", resolved, "n/a")
    write_profiles_csv(args.out, profiles, meta)
    if not args.quiet:
        print(f"wrote {args.out}")
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="sphereroute", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command")

    def common(p: _Parser) -> None:
        p.add_argument("--config", help="flat key=value config file")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--quiet", action="store_true")

    p = sub.add_parser("route", help="route one s-t query")
    common(p)
    p.add_argument("--graph")
    p.add_argument("--s", type=int, required=True, help="source (1-based)")
    p.add_argument("--t", type=int, required=True, help="target (1-based)")
    p.add_argument("--r-max", dest="r_max", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--workers", type=int)
    p.add_argument("--solver")
    p.add_argument("--emit-path", dest="emit_path")
    p.add_argument("--largest-component", action="store_true")
    p.add_argument("--cache", action="store_const", const="1")
    p.set_defaults(func=_cmd_route)

    p = sub.add_parser("partition", help="emit the task list as JSON lines")
    common(p)
    p.add_argument("--graph")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--r-max", dest="r_max", type=int)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=_cmd_partition)

    p = sub.add_parser("baseline", help="run one comparison method")
    common(p)
    p.add_argument("--graph")
    p.add_argument("--method", choices=("dijkstra", "corridor", "louvain"),
                   required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--oracle", action="store_true",
                   help="also report the exact cost and gap")
    p.set_defaults(func=_cmd_baseline)

    p = sub.add_parser("bench", help="run the seeded experiment protocol")
    common(p)
    p.add_argument("--graph")
    p.add_argument("--r-max", dest="r_max")
    p.add_argument("--k", type=int)
    p.add_argument("--workers", type=int)
    p.add_argument("--methods")
    p.add_argument("--problem-seeds", dest="problem_seeds")
    p.add_argument("--inner-seeds", dest="inner_seeds")
    p.add_argument("--output-dir", dest="output_dir")
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("profiles", help="recompute profile curves from records")
    common(p)
    p.add_argument("--records", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_profiles)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "command", None):
            parser.print_usage(sys.stderr)
            return 1
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 1
    except (GraphParseError, DisconnectedError, IncompleteRunError, OSError,
            ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (InvariantError, SphereRouteError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
