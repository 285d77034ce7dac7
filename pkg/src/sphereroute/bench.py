"""Seeded experiment harness: (s, t) sampling, per-method records with
relative optimality gaps and wall-clock times, median/mean aggregation,
runtime and accuracy profiles, Pareto dominance, and the CSV formats the
plot frontend consumes.

Per-record wall-clock covers the full method call: partition + solves +
concatenation for the sphere router, and partition construction + coarse
route + refinement for the two baseline pipelines. The exact reference is
computed (and timed) once per problem seed and shared by every method and
inner seed. Records run sequentially because every record is timed.
"""
from __future__ import annotations

import random
import statistics
import time
from dataclasses import dataclass
from typing import Callable, Iterable

from .baselines import corridor_route, dijkstra_full, grow_cells, louvain, louvain_route
from .errors import IncompleteRunError, InvariantError
from .graph import Graph, load_graph
from .partition import PartitionConfig
from .router import SolverSpec, route
from .search import hop_distance
from .util import config_hash, derive_seed, utc_stamp

SPHERE = "sphere"
CORRIDOR = "corridor"
LOUVAIN = "louvain"
DIJKSTRA = "dijkstra"
PARTITION_METHODS = (SPHERE, CORRIDOR, LOUVAIN)

RECORDS_HEADER = "schema=1,p,q,method,s,t,cost,oracle,gap,time_s,tasks,fallback"
SUMMARY_HEADER = "schema=1,p,method,avg_time,avg_gap,median_gap,std_gap"
PROFILES_HEADER = "schema=1,kind,basis,method,tau,fraction"

# the rule-of-thumb band is [d/2, d/1.7]; 0.55 sits near its middle
AUTO_RMAX_FACTOR = 0.55


@dataclass(frozen=True)
class ExperimentConfig:
    graph: str | None = None
    problem_seeds: tuple[int, ...] = tuple(range(1, 31))
    inner_seeds: tuple[int, ...] = tuple(range(1, 6))
    methods: tuple[str, ...] = PARTITION_METHODS
    r_max: int | str = "auto"
    k: int = 64
    workers: int = 1

    def __post_init__(self):
        if not self.problem_seeds or not self.inner_seeds:
            raise ValueError("seed lists must be nonempty")
        if not self.methods:
            raise ValueError("methods must be nonempty")
        unknown = set(self.methods) - set(PARTITION_METHODS)
        if unknown:
            raise ValueError(f"unknown methods: {sorted(unknown)}")
        if isinstance(self.r_max, str) and self.r_max != "auto":
            raise ValueError("r_max must be an integer or 'auto'")

    def as_dict(self) -> dict:
        return {
            "graph": self.graph,
            "problem_seeds": list(self.problem_seeds),
            "inner_seeds": list(self.inner_seeds),
            "methods": list(self.methods),
            "r_max": self.r_max,
            "k": self.k,
            "workers": self.workers,
        }


@dataclass
class ExperimentRecord:
    p: int
    q: int
    method: str
    s: int  # 0-based internal ids; CSV output converts to 1-based
    t: int
    cost: float
    oracle: float
    gap: float
    time_s: float
    tasks: int
    fallback: bool


@dataclass
class AggregateRow:
    p: int
    method: str
    mean_time: float
    median_time: float
    mean_gap: float
    median_gap: float
    std_gap: float


@dataclass
class ProfileCurve:
    """Right-continuous nondecreasing step function emitted at the
    achieved breakpoints."""

    method: str
    points: list[tuple[float, float]]

    def value_at(self, tau: float) -> float:
        value = 0.0
        for x, f in self.points:
            if x <= tau:
                value = f
            else:
                break
        return value


@dataclass
class DominanceReport:
    instances: list[int]
    per_instance: dict[int, dict[str, bool]]  # p -> baseline -> target dominates
    dominate_counts: dict[str, int]
    dominates_all_count: int


def sample_st_detail(g: Graph, p: int) -> tuple[int, int, int]:
    """(s, t, resample count): uniform over ordered pairs with s != t,
    resampling pairs that straddle components."""
    if g.node_count < 2:
        raise ValueError("need at least two nodes to sample a pair")
    rng = random.Random(derive_seed("sample-st", p))
    labels = g.component_labels()
    resamples = 0
    while True:
        s = rng.randrange(g.node_count)
        t = rng.randrange(g.node_count)
        if s == t:
            continue
        if labels[s] != labels[t]:
            resamples += 1
            continue
        return s, t, resamples


def sample_st(g: Graph, p: int) -> tuple[int, int]:
    s, t, _ = sample_st_detail(g, p)
    return s, t


def gap(cost: float, oracle: float) -> float:
    """Relative optimality gap (cost - oracle) / oracle; differences below
    1e-9 relative count as exact and clamp to zero."""
    if oracle <= 0:
        raise ValueError("oracle cost must be positive")
    rel = (cost - oracle) / oracle
    if rel < -1e-9:
        raise InvariantError(f"cost {cost} beats the oracle {oracle}")
    if abs(rel) < 1e-9:
        return 0.0
    return rel


def resolve_r_max(spec: int | str, hop_d: int) -> int:
    if spec == "auto":
        return max(1, round(AUTO_RMAX_FACTOR * hop_d))
    return int(spec)


def _run_sphere(g: Graph, s: int, t: int, seed: int, r_max: int, workers: int):
    cfg = PartitionConfig(r_max=r_max, rng_seed=seed)
    t0 = time.perf_counter()
    rt, stats = route(g, s, t, cfg, SolverSpec(DIJKSTRA), workers)
    elapsed = time.perf_counter() - t0
    return rt.cost, elapsed, stats.task_count, False


def _run_corridor(g: Graph, s: int, t: int, seed: int, k: int):
    t0 = time.perf_counter()
    part = grow_cells(g, k, seed)
    path, stats = corridor_route(g, s, t, part)
    elapsed = time.perf_counter() - t0
    return path.cost, elapsed, stats.corridor_cells, stats.fallback


def _run_louvain(g: Graph, s: int, t: int, seed: int):
    t0 = time.perf_counter()
    part = louvain(g, seed)
    path, stats = louvain_route(g, s, t, part)
    elapsed = time.perf_counter() - t0
    return path.cost, elapsed, stats.corridor_cells, stats.fallback


def run_experiment(cfg: ExperimentConfig, graph: Graph | None = None,
                   progress: Callable[[str], None] | None = None) -> list[ExperimentRecord]:
    """Execute the full protocol and return one record per
    (problem seed, inner seed, method), plus exact-reference records whose
    once-measured time is replicated across inner seeds."""
    if graph is None:
        if cfg.graph is None:
            raise ValueError("no graph given")
        graph = load_graph(cfg.graph).graph
    g = graph

    def note(msg: str) -> None:
        if progress is not None:
            progress(msg)

    records: list[ExperimentRecord] = []
    warmed = False
    for p in cfg.problem_seeds:
        s, t, _ = sample_st_detail(g, p)
        hop_d = hop_distance(g, s, t)
        r_max = resolve_r_max(cfg.r_max, hop_d)
        if not warmed:
            # one warm-up per (graph, method), excluded from the records
            dijkstra_full(g, s, t)
            for m in cfg.methods:
                _dispatch(m, g, s, t, derive_seed("warmup", m), r_max, cfg)
            warmed = True
        t0 = time.perf_counter()
        oracle_path = dijkstra_full(g, s, t)
        oracle_time = time.perf_counter() - t0
        oracle = oracle_path.cost
        for q in cfg.inner_seeds:
            records.append(ExperimentRecord(
                p=p, q=q, method=DIJKSTRA, s=s, t=t, cost=oracle, oracle=oracle,
                gap=0.0, time_s=oracle_time, tasks=1, fallback=False))
        for m in cfg.methods:
            for q in cfg.inner_seeds:
                seed = derive_seed("inner", p, q, m)
                cost, elapsed, tasks, fb = _dispatch(m, g, s, t, seed, r_max, cfg)
                records.append(ExperimentRecord(
                    p=p, q=q, method=m, s=s, t=t, cost=cost, oracle=oracle,
                    gap=gap(cost, oracle), time_s=elapsed, tasks=tasks, fallback=fb))
        note(f"p={p} s={s} t={t} hop={hop_d} r_max={r_max} done")
    return records


def _dispatch(method: str, g: Graph, s: int, t: int, seed: int, r_max: int,
              cfg: ExperimentConfig):
    if method == SPHERE:
        return _run_sphere(g, s, t, seed, r_max, cfg.workers)
    if method == CORRIDOR:
        return _run_corridor(g, s, t, seed, cfg.k)
    if method == LOUVAIN:
        return _run_louvain(g, s, t, seed)
    raise ValueError(f"unknown method {method!r}")


# -- aggregation and profiles ----------------------------------------------


def aggregate(records: Iterable[ExperimentRecord]) -> list[AggregateRow]:
    """Per (problem seed, method) medians/means of gap and time plus the
    population std of the gap. Raises when any inner seed is missing."""
    records = list(records)
    by_key: dict[tuple[int, str], list[ExperimentRecord]] = {}
    oracle_by_p: dict[int, float] = {}
    all_q: set[int] = set()
    for r in records:
        by_key.setdefault((r.p, r.method), []).append(r)
        all_q.add(r.q)
        seen = oracle_by_p.setdefault(r.p, r.oracle)
        if seen != r.oracle:
            raise InvariantError(f"oracle differs across records for p={r.p}")
    missing = []
    for (p, m), rows in sorted(by_key.items()):
        have = {r.q for r in rows}
        for q in sorted(all_q - have):
            missing.append((p, m, q))
    if missing:
        raise IncompleteRunError(f"missing cells (p, method, q): {missing}")
    out = []
    for (p, m), rows in sorted(by_key.items()):
        gaps = [r.gap for r in rows]
        times = [r.time_s for r in rows]
        out.append(AggregateRow(
            p=p, method=m,
            mean_time=statistics.fmean(times),
            median_time=statistics.median(times),
            mean_gap=statistics.fmean(gaps),
            median_gap=statistics.median(gaps),
            std_gap=statistics.pstdev(gaps),
        ))
    return out


def _curves(values_by_method: dict[str, dict[int, float]],
            normalize_best: bool) -> list[ProfileCurve]:
    methods = sorted(values_by_method)
    instance_sets = [set(v) for v in values_by_method.values()]
    instances = instance_sets[0]
    for inst in instance_sets[1:]:
        if inst != instances:
            raise IncompleteRunError("methods cover different instance sets")
    if not instances:
        raise ValueError("no instances")
    n = len(instances)
    scores: dict[str, list[float]] = {}
    if normalize_best:
        best = {p: min(values_by_method[m][p] for m in methods) for p in instances}
        for m in methods:
            scores[m] = [values_by_method[m][p] / best[p] for p in sorted(instances)]
    else:
        for m in methods:
            scores[m] = [values_by_method[m][p] for p in sorted(instances)]
    curves = []
    for m in methods:
        xs = sorted(scores[m])
        points: list[tuple[float, float]] = []
        for i, x in enumerate(xs, start=1):
            frac = i / n
            if points and points[-1][0] == x:
                points[-1] = (x, frac)
            else:
                points.append((x, frac))
        curves.append(ProfileCurve(method=m, points=points))
    return curves


def performance_profile(times_by_method: dict[str, dict[int, float]]) -> list[ProfileCurve]:
    """Fraction of instances solved within ratio tau of the per-instance
    best time; breakpoints are the achieved ratios."""
    for m, vals in times_by_method.items():
        for p, v in vals.items():
            if not (v > 0):
                raise ValueError(f"nonpositive time for method {m}, instance {p}")
    return _curves(times_by_method, normalize_best=True)


def accuracy_profile(gaps_by_method: dict[str, dict[int, float]]) -> list[ProfileCurve]:
    """Fraction of instances whose gap is at most tau; breakpoints are the
    achieved gaps."""
    for m, vals in gaps_by_method.items():
        for p, v in vals.items():
            if v < 0:
                raise ValueError(f"negative gap for method {m}, instance {p}")
    return _curves(gaps_by_method, normalize_best=False)


def profiles_from_aggregate(rows: Iterable[AggregateRow]) -> list[tuple[str, str, ProfileCurve]]:
    """The four profile families: (runtime|accuracy) x (median|mean)."""
    rows = list(rows)
    tables: dict[tuple[str, str], dict[str, dict[int, float]]] = {
        ("runtime", "median"): {},
        ("runtime", "mean"): {},
        ("accuracy", "median"): {},
        ("accuracy", "mean"): {},
    }
    for r in rows:
        tables[("runtime", "median")].setdefault(r.method, {})[r.p] = r.median_time
        tables[("runtime", "mean")].setdefault(r.method, {})[r.p] = r.mean_time
        tables[("accuracy", "median")].setdefault(r.method, {})[r.p] = r.median_gap
        tables[("accuracy", "mean")].setdefault(r.method, {})[r.p] = r.mean_gap
    out: list[tuple[str, str, ProfileCurve]] = []
    for (kind, basis), table in tables.items():
        curves = performance_profile(table) if kind == "runtime" else accuracy_profile(table)
        for c in curves:
            out.append((kind, basis, c))
    return out


def pareto_dominance(avg_by_method: dict[str, dict[int, tuple[float, float]]],
                     target: str = SPHERE,
                     baselines: tuple[str, ...] = (CORRIDOR, LOUVAIN)) -> DominanceReport:
    """Per instance, `target` dominates a baseline when its (time, gap)
    pair is no worse in both coordinates and strictly better in one."""
    instances = sorted(avg_by_method[target])
    per_instance: dict[int, dict[str, bool]] = {}
    counts = {b: 0 for b in baselines}
    all_count = 0
    for p in instances:
        ts, gs = avg_by_method[target][p]
        verdicts = {}
        for b in baselines:
            tb, gb = avg_by_method[b][p]
            dominates = ts <= tb and gs <= gb and (ts < tb or gs < gb)
            verdicts[b] = dominates
            if dominates:
                counts[b] += 1
        per_instance[p] = verdicts
        if all(verdicts.values()):
            all_count += 1
    return DominanceReport(instances=instances, per_instance=per_instance,
                           dominate_counts=counts, dominates_all_count=all_count)


def dominance_table(rows: Iterable[AggregateRow]) -> dict[str, dict[int, tuple[float, float]]]:
    """Average-metric (time, gap) pairs keyed by method then instance."""
    table: dict[str, dict[int, tuple[float, float]]] = {}
    for r in rows:
        table.setdefault(r.method, {})[r.p] = (r.mean_time, r.mean_gap)
    return table


# -- CSV persistence ---------------------------------------------------------


def _fmt(x: float) -> str:
    return repr(float(x))


def metadata_lines(kind: str, config: dict, graph_hash_value: str,
                   extra: dict | None = None) -> list[str]:
    from . import __version__

    lines = [
        f"# sphereroute {__version__}",
        f"# kind={kind}",
        f"# created={utc_stamp()}",
        f"# config_hash={config_hash(config)}",
        f"# graph_hash={graph_hash_value}",
    ]
    for key in sorted(config):
        lines.append(f"# config.{key}={config[key]}")
    for key in sorted(extra or {}):
        lines.append(f"# {key}={extra[key]}")
    return lines


def write_records_csv(path, records: Iterable[ExperimentRecord], meta: list[str]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for line in meta:
            f.write(line + "\n")
        f.write(RECORDS_HEADER + "\n")
        for r in records:
            f.write(",".join([
                "1", str(r.p), str(r.q), r.method, str(r.s + 1), str(r.t + 1),
                _fmt(r.cost), _fmt(r.oracle), _fmt(r.gap), _fmt(r.time_s),
                str(r.tasks), "1" if r.fallback else "0",
            ]) + "\n")


def read_records_csv(path) -> tuple[list[ExperimentRecord], list[str]]:
    meta: list[str] = []
    records: list[ExperimentRecord] = []
    with open(path, "r", encoding="utf-8") as f:
        header_seen = False
        for line in f:
            line = line.rstrip("\n")
            if line.startswith("#"):
                meta.append(line)
                continue
            if not line:
                continue
            if not header_seen:
                if line != RECORDS_HEADER:
                    raise InvariantError(f"unexpected records header {line!r}")
                header_seen = True
                continue
            parts = line.split(",")
            if len(parts) != 12 or parts[0] != "1":
                raise InvariantError(f"bad records row {line!r}")
            records.append(ExperimentRecord(
                p=int(parts[1]), q=int(parts[2]), method=parts[3],
                s=int(parts[4]) - 1, t=int(parts[5]) - 1,
                cost=float(parts[6]), oracle=float(parts[7]), gap=float(parts[8]),
                time_s=float(parts[9]), tasks=int(parts[10]),
                fallback=parts[11] == "1"))
    if not header_seen:
        raise InvariantError("records file has no header")
    return records, meta


def write_summary_csv(path, rows: Iterable[AggregateRow], meta: list[str]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for line in meta:
            f.write(line + "\n")
        f.write(SUMMARY_HEADER + "\n")
        for r in rows:
            f.write(",".join([
                "1", str(r.p), r.method, _fmt(r.mean_time), _fmt(r.mean_gap),
                _fmt(r.median_gap), _fmt(r.std_gap),
            ]) + "\n")


def write_profiles_csv(path, profiles: Iterable[tuple[str, str, ProfileCurve]],
                       meta: list[str]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for line in meta:
            f.write(line + "\n")
        f.write(PROFILES_HEADER + "\n")
        for kind, basis, curve in profiles:
            for tau, frac in curve.points:
                f.write(",".join(["1", kind, basis, curve.method,
                                  _fmt(tau), _fmt(frac)]) + "\n")


def read_profiles_csv(path) -> list[tuple[str, str, str, float, float]]:
    rows = []
    with open(path, "r", encoding="utf-8") as f:
        header_seen = False
        for line in f:
            line = line.rstrip("\n")
            if line.startswith("#") or not line:
                continue
            if not header_seen:
                if line != PROFILES_HEADER:
                    raise InvariantError(f"unexpected profiles header {line!r}")
                header_seen = True
                continue
            parts = line.split(",")
            if len(parts) != 6 or parts[0] != "1":
                raise InvariantError(f"bad profiles row {line!r}")
            rows.append((parts[1], parts[2], parts[3], float(parts[4]), float(parts[5])))
    if not header_seen:
        raise InvariantError("profiles file has no header")
    return rows
