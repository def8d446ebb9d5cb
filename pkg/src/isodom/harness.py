"""Exhaustive verification sweeps of domination results over graph universes.

Each check knows its own hypothesis class and reports ``None`` (skipped) for
graphs outside it. Sweeps aggregate per-check verdicts; the aggregation is
order-insensitive and violations are sorted by graph6, so output does not
depend on the worker count.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import time
from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass, field
from multiprocessing import Pool
from pathlib import Path
from typing import Optional

from .claims import Claim, parse_claim
from .enumerate import (
    MAX_CONNECTED_N,
    MAX_TREE_N,
    enumerate_connected_bipartite,
    enumerate_connected_graphs,
    enumerate_trees,
    read_graph6_file,
)
from .graph import (
    Graph,
    diameter,
    emit_graph6,
    has_dominating_vertex,
    is_bipartite,
    is_connected,
    is_tree,
    iter_bits,
    parse_graph6,
    popcount,
)
from .solvers import (
    PARAMETERS,
    ParameterReport,
    SubsetTables,
    all_extremal_sets,
    compute_parameter,
    compute_report,
    is_isolate_set,
    is_maximal_by_extension,
    is_maximal_isolate_set,
)
from .structure import (
    build_spanning_tree_preserving,
    caterpillar_code,
    classify_tree_gamma,
    find_spanning_caterpillar_same_diameter,
    leafless_set_is_valid,
)

log = logging.getLogger(__name__)

UNIVERSES = ("connected", "trees", "bipartite", "file")
UNIVERSE_CAPS = {"connected": MAX_CONNECTED_N, "bipartite": MAX_CONNECTED_N, "trees": MAX_TREE_N}


class Context:
    """Lazily computed facts about one graph, shared by all checks."""

    def __init__(self, g: Graph) -> None:
        self.g = g
        self._tables: Optional[SubsetTables] = None
        self._report: Optional[ParameterReport] = None

    @property
    def tables(self) -> SubsetTables:
        if self._tables is None:
            self._tables = SubsetTables(self.g)
        return self._tables

    @property
    def report(self) -> ParameterReport:
        if self._report is None:
            self._report = compute_report(self.g, self.tables)
        return self._report

    @property
    def connected(self) -> bool:
        return is_connected(self.g)


@dataclass(frozen=True)
class CheckResult:
    passed: bool
    equality: bool = False
    diagnostic: dict = field(default_factory=dict)


@dataclass(frozen=True)
class Check:
    theorem_id: str
    description: str
    fn: Callable[[Context], Optional[CheckResult]]


def _params(r: ParameterReport, *names: str) -> dict:
    return {name: getattr(r, name) for name in names}


def _failure(ctx: Context, **extra) -> dict:
    return {"report": ctx.report.as_dict(), **extra}


def _result(ctx: Context, ok: bool, equality: bool = False, **extra) -> CheckResult:
    return CheckResult(ok, equality, {} if ok else _failure(ctx, **extra))


def _ir_gamma_bounds(ctx: Context) -> CheckResult:
    r = ctx.report
    ok = r.gamma <= 2 * r.ir and r.ir <= r.gamma <= 2 * r.ir - 1
    return _result(ctx, ok, r.gamma == 2 * r.ir - 1, values=_params(r, "gamma", "ir"))


def _domination_chain(ctx: Context) -> CheckResult:
    r = ctx.report
    chain = [r.ir, r.gamma, r.ind_dom, r.alpha, r.upper_gamma, r.IR]
    ok = all(a <= b for a, b in zip(chain, chain[1:]))
    return _result(ctx, ok, values=_params(r, "ir", "gamma", "ind_dom", "alpha", "upper_gamma", "IR"))


def _min_max_order(ctx: Context) -> CheckResult:
    r = ctx.report
    pairs = [("i0", "I0"), ("gamma0", "upper_gamma0"), ("ir0", "IR0"), ("gamma", "upper_gamma"), ("ir", "IR")]
    ok = all(getattr(r, a) <= getattr(r, b) for a, b in pairs) and r.gamma <= r.gamma_g
    return _result(ctx, ok)


def _bipartite_equalities(ctx: Context) -> Optional[CheckResult]:
    if not is_bipartite(ctx.g):
        return None
    r = ctx.report
    ok = r.alpha == r.upper_gamma == r.IR
    return _result(ctx, ok, values=_params(r, "alpha", "upper_gamma", "IR"))


def _total_isolate_bound(ctx: Context) -> Optional[CheckResult]:
    r = ctx.report
    if r.gamma_t is None:
        return None
    return _result(ctx, r.gamma_t <= r.i0 + 1, r.gamma_t == r.i0 + 1, values=_params(r, "gamma_t", "i0"))


def _maximal_isolate_characterization(ctx: Context) -> CheckResult:
    g = ctx.g
    table = ctx.tables.family("isolate", "maximal")
    disagreements = []
    for s in range(1, 1 << g.n):
        if not is_isolate_set(g, s):
            continue
        by_char = is_maximal_isolate_set(g, s)
        by_ext = is_maximal_by_extension(g, s, is_isolate_set)
        if not by_char == by_ext == bool(table[s]):
            disagreements.append({"set": list(iter_bits(s)), "characterization": by_char, "extension": by_ext})
    return _result(ctx, not disagreements, disagreements=disagreements[:5])


def _equality_graph(ctx: Context) -> Optional[bool]:
    if not ctx.connected:
        return None
    r = ctx.report
    if r.gamma_t is None:
        return None
    return r.gamma_t == r.i0 + 1


def _equality_diameter(ctx: Context) -> Optional[CheckResult]:
    eq = _equality_graph(ctx)
    if not eq:
        return None
    return _result(ctx, ctx.report.diam <= 2, True)


def _equality_dominating_vertex(ctx: Context) -> Optional[CheckResult]:
    eq = _equality_graph(ctx)
    if not eq:
        return None
    return _result(ctx, has_dominating_vertex(ctx.g), True)


def _dominating_vertex_iff(ctx: Context) -> Optional[CheckResult]:
    eq = _equality_graph(ctx)
    if eq is None:
        return None
    dv = has_dominating_vertex(ctx.g)
    return _result(ctx, eq == dv, eq, equality_holds=eq, has_dominating_vertex=dv)


def _isolate_extension_total(ctx: Context) -> Optional[CheckResult]:
    g = ctx.g
    if g.n < 2 or not ctx.connected:
        return None
    maximal = ctx.tables.members("isolate", "maximal")
    total = ctx.tables.family("total_dominating")
    bad = []
    for s in maximal:
        if s == g.full:
            continue
        for v in iter_bits(g.full & ~s):
            if not total[s | 1 << v]:
                bad.append({"set": list(iter_bits(s)), "added": v})
    return _result(ctx, not bad, failures=bad[:5])


def _leaf_support_gamma(ctx: Context) -> Optional[CheckResult]:
    g = ctx.g
    if g.n < 3 or not is_tree(g):
        return None
    rec = classify_tree_gamma(g)
    eq = rec.gamma == rec.n_minus_l
    ok = eq == rec.characterization_holds and rec.gamma <= rec.n_minus_l and leafless_set_is_valid(g, rec)
    return _result(
        ctx,
        ok,
        eq,
        gamma=rec.gamma,
        n_minus_l=rec.n_minus_l,
        all_leaf_or_support=rec.characterization_holds,
        leafless_gamma_set=list(iter_bits(rec.leafless_gamma_set)),
    )


def _diameter_lower_bound(ctx: Context) -> Optional[CheckResult]:
    if ctx.g.n < 2 or not ctx.connected:
        return None
    r = ctx.report
    twice = 2 * r.gamma_t
    return _result(ctx, twice >= r.diam + 1, twice == r.diam + 1)


def _spanning_tree_preserving(ctx: Context) -> Optional[CheckResult]:
    g = ctx.g
    if g.n < 2 or not ctx.connected:
        return None
    bad = []
    for d in all_extremal_sets(g, "gamma_t", ctx.tables):
        cert = build_spanning_tree_preserving(g, d)
        problems = cert.failures(g)
        tree_gamma_t = compute_parameter(cert.tree, "gamma_t").value
        if tree_gamma_t != popcount(d):
            problems.append("tree_gamma_t")
        if problems:
            bad.append({"dset": list(iter_bits(d)), "tree": emit_graph6(cert.tree), "problems": problems})
    return _result(ctx, not bad, failures=bad[:5])


def _spanning_caterpillar(ctx: Context) -> Optional[CheckResult]:
    g = ctx.g
    if g.n < 2 or not ctx.connected:
        return None
    r = ctx.report
    if 2 * r.gamma_t != r.diam + 1:
        return None
    t = find_spanning_caterpillar_same_diameter(g)
    ok = (
        t is not None
        and is_tree(t)
        and all(a & ~b == 0 for a, b in zip(t.adj, g.adj))
        and caterpillar_code(t) is not None
        and diameter(t) == r.diam
    )
    return _result(ctx, ok, True, caterpillar=None if t is None else emit_graph6(t))


CHECKS: dict[str, Check] = {
    c.theorem_id: c
    for c in [
        Check("ir-gamma-bounds", "gamma/2 <= ir <= gamma <= 2*ir - 1", _ir_gamma_bounds),
        Check("domination-chain", "ir <= gamma <= i <= alpha <= Gamma <= IR", _domination_chain),
        Check("min-max-order", "lower parameter <= upper parameter for each family; gamma <= gamma_g", _min_max_order),
        Check("bipartite-equalities", "alpha = Gamma = IR on bipartite graphs", _bipartite_equalities),
        Check("total-isolate-bound", "gamma_t <= i0 + 1", _total_isolate_bound),
        Check(
            "maximal-isolate-characterization",
            "isolate set maximal iff every outside vertex is adjacent to all its isolates",
            _maximal_isolate_characterization,
        ),
        Check("equality-diameter", "connected with gamma_t = i0 + 1 implies diam <= 2", _equality_diameter),
        Check(
            "equality-dominating-vertex",
            "connected with gamma_t = i0 + 1 implies a dominating vertex",
            _equality_dominating_vertex,
        ),
        Check("dominating-vertex-iff", "connected: gamma_t = i0 + 1 iff a dominating vertex exists", _dominating_vertex_iff),
        Check(
            "isolate-extension-total",
            "maximal isolate S != V plus any outside vertex is total dominating",
            _isolate_extension_total,
        ),
        Check("leaf-support-gamma", "trees n >= 3: gamma = n - l iff every vertex is a leaf or support", _leaf_support_gamma),
        Check("diameter-lower-bound", "nontrivial connected: 2*gamma_t >= diam + 1", _diameter_lower_bound),
        Check(
            "spanning-tree-preserving",
            "every minimum total dominating set survives in a component-preserving spanning tree",
            _spanning_tree_preserving,
        ),
        Check(
            "spanning-caterpillar",
            "2*gamma_t = diam + 1 implies a spanning caterpillar of equal diameter",
            _spanning_caterpillar,
        ),
    ]
}


def _claim_check(claim: Claim) -> Check:
    def fn(ctx: Context) -> Optional[CheckResult]:
        verdict = claim.holds(ctx.report)
        if verdict is None:
            return None
        return _result(ctx, verdict)

    return Check(f"claim: {claim.text}", claim.text, fn)


def resolve_check(theorem_id: str) -> Check:
    if theorem_id in CHECKS:
        return CHECKS[theorem_id]
    if theorem_id.startswith("claim:"):
        return _claim_check(parse_claim(theorem_id[len("claim:"):]))
    raise KeyError(f"unknown theorem id {theorem_id!r}; known: {', '.join(CHECKS)}")


def check_theorem(theorem_id: str, g: Graph, ctx: Optional[Context] = None) -> Optional[CheckResult]:
    """Run one check on one graph; ``None`` means the graph is outside its hypothesis."""
    return resolve_check(theorem_id).fn(ctx or Context(g))


# sweeps -----------------------------------------------------------------------------


@dataclass(frozen=True)
class SweepConfig:
    n_min: int = 1
    n_max: int = 7
    universe: str = "connected"
    theorems: tuple[str, ...] = tuple(CHECKS)
    jobs: int = 1
    path: Optional[str] = None
    output: Optional[str] = None

    def __post_init__(self) -> None:
        if self.universe not in UNIVERSES:
            raise ValueError(f"universe must be one of {UNIVERSES}")
        if self.universe == "file":
            if self.path is None:
                raise ValueError("file universe needs a path")
        else:
            cap = UNIVERSE_CAPS[self.universe]
            if not 1 <= self.n_min <= self.n_max <= cap:
                raise ValueError(f"{self.universe} universe needs 1 <= n_min <= n_max <= {cap}")
        if self.jobs < 1:
            raise ValueError("jobs must be positive")
        for tid in self.theorems:
            resolve_check(tid)

    def describe(self) -> str:
        if self.universe == "file":
            return f"file {Path(self.path).name}"
        return f"{self.universe}, n={self.n_min}..{self.n_max}"


@dataclass
class TheoremVerdict:
    theorem_id: str
    universe: str
    graphs_checked: int = 0
    graphs_skipped: int = 0
    equality_attainers: int = 0
    violations: list[tuple[str, dict]] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def merge(self, other: TheoremVerdict) -> TheoremVerdict:
        return TheoremVerdict(
            self.theorem_id,
            self.universe,
            self.graphs_checked + other.graphs_checked,
            self.graphs_skipped + other.graphs_skipped,
            self.equality_attainers + other.equality_attainers,
            sorted(self.violations + other.violations, key=lambda v: v[0]),
            self.elapsed + other.elapsed,
        )

    def as_dict(self, timing: bool = False) -> dict:
        out = {
            "theorem_id": self.theorem_id,
            "description": resolve_check(self.theorem_id).description,
            "universe": self.universe,
            "graphs_checked": self.graphs_checked,
            "graphs_skipped": self.graphs_skipped,
            "equality_attainers": self.equality_attainers,
            "passed": self.passed,
            "violations": [{"graph6": g6, "diagnostic": diag} for g6, diag in self.violations],
        }
        if timing:
            out["elapsed"] = round(self.elapsed, 3)
        return out


def universe_graphs(cfg: SweepConfig) -> Iterator[Graph]:
    if cfg.universe == "file":
        yield from read_graph6_file(cfg.path)
        return
    source = {
        "connected": enumerate_connected_graphs,
        "trees": enumerate_trees,
        "bipartite": enumerate_connected_bipartite,
    }[cfg.universe]
    for n in range(cfg.n_min, cfg.n_max + 1):
        yield from source(n)


def _evaluate(job: tuple[str, tuple[str, ...]]) -> list[Optional[tuple[bool, bool, dict]]]:
    g6, theorems = job
    ctx = Context(parse_graph6(g6))
    out = []
    for tid in theorems:
        res = resolve_check(tid).fn(ctx)
        out.append(None if res is None else (res.passed, res.equality, res.diagnostic))
    return out


def _map(jobs: list, width: int) -> Iterable:
    if width == 1:
        return map(_evaluate, jobs)
    chunk = max(1, len(jobs) // (width * 8))
    with Pool(width) as pool:
        return pool.map(_evaluate, jobs, chunksize=chunk)


def run_sweep(cfg: SweepConfig) -> list[TheoremVerdict]:
    """Run every configured check over the universe; one verdict per check."""
    start = time.perf_counter()
    universe = cfg.describe()
    graphs = [emit_graph6(g) for g in universe_graphs(cfg)]
    log.info("sweeping %d graphs (%s) with %d workers", len(graphs), universe, cfg.jobs)
    verdicts = {tid: TheoremVerdict(tid, universe) for tid in cfg.theorems}
    for g6, results in zip(graphs, _map([(g6, cfg.theorems) for g6 in graphs], cfg.jobs)):
        for tid, res in zip(cfg.theorems, results):
            v = verdicts[tid]
            if res is None:
                v.graphs_skipped += 1
                continue
            passed, equality, diagnostic = res
            v.graphs_checked += 1
            v.equality_attainers += equality
            if not passed:
                v.violations.append((g6, diagnostic))
    elapsed = time.perf_counter() - start
    out = []
    for tid in cfg.theorems:
        v = verdicts[tid]
        v.violations.sort(key=lambda item: item[0])
        for g6, _ in v.violations:
            replay = check_theorem(tid, parse_graph6(g6))
            if replay is None or replay.passed:
                raise RuntimeError(f"violation of {tid} on {g6} did not reproduce")
        v.elapsed = elapsed
        out.append(v)
    return out


def graphs_per_n(cfg: SweepConfig) -> dict[str, int]:
    counts: dict[str, int] = {}
    for g in universe_graphs(cfg):
        counts[str(g.n)] = counts.get(str(g.n), 0) + 1
    return dict(sorted(counts.items(), key=lambda kv: int(kv[0])))


def sweep_document(cfg: SweepConfig, verdicts: list[TheoremVerdict], timing: bool = False) -> dict:
    return {
        "universe": cfg.describe(),
        "graphs_per_n": graphs_per_n(cfg),
        "all_pass": all(v.passed for v in verdicts),
        "verdicts": [v.as_dict(timing) for v in verdicts],
    }


def dumps_document(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def write_document(cfg: SweepConfig, verdicts: list[TheoremVerdict], timing: bool = False) -> str:
    text = dumps_document(sweep_document(cfg, verdicts, timing))
    if cfg.output:
        Path(cfg.output).write_text(text)
    return text


CSV_HEADER = ["graph6", "n", "m", "diam", *PARAMETERS]


def parameter_table(graphs: Iterable[Graph]) -> str:
    """CSV with one row per graph; undefined parameters are left blank."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for g in graphs:
        writer.writerow(compute_report(g).row())
    return buf.getvalue()


__all__ = [
    "CHECKS",
    "CSV_HEADER",
    "Check",
    "CheckResult",
    "Context",
    "SweepConfig",
    "TheoremVerdict",
    "check_theorem",
    "dumps_document",
    "graphs_per_n",
    "parameter_table",
    "resolve_check",
    "run_sweep",
    "sweep_document",
    "universe_graphs",
    "write_document",
]
