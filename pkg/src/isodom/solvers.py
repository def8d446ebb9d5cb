"""Exact domination-type parameters by enumeration of all vertex subsets.

Two routes are kept deliberately separate. The scalar predicates
(``is_dominating`` and friends) test one subset at a time and are the
reference definitions. ``SubsetTables`` evaluates every membership predicate
over all ``2**n`` subsets at once with numpy and derives minimal/maximal
families by subset/superset closure, which is exact whether or not the
family is monotone.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Optional, Union

import numpy as np

from .graph import (
    INF,
    Graph,
    closed_neighborhood,
    complement,
    diameter,
    emit_graph6,
    has_dominating_vertex,
    iter_bits,
    open_neighborhood,
    popcount,
)

MAX_SOLVER_N = 20

# Report field order; also the CSV column order.
PARAMETERS = (
    "gamma",
    "upper_gamma",
    "ind_dom",
    "alpha",
    "gamma_t",
    "gamma_g",
    "ir",
    "IR",
    "i0",
    "I0",
    "gamma0",
    "upper_gamma0",
    "ir0",
    "IR0",
)

# alpha and beta0 name the same parameter (independence number).
ALIASES = {"beta0": "alpha", "i": "ind_dom", "Gamma": "upper_gamma", "Gamma0": "upper_gamma0"}


class UndefinedParameter(ValueError):
    """The family being optimised over is empty on this graph."""


# scalar predicates -------------------------------------------------------------


def is_dominating(g: Graph, s: int) -> bool:
    return closed_neighborhood(g, s) == g.full


def is_total_dominating(g: Graph, s: int) -> bool:
    return open_neighborhood(g, s) == g.full


def is_independent(g: Graph, s: int) -> bool:
    return not open_neighborhood(g, s) & s


def private_neighbors(g: Graph, s: int, v: int) -> int:
    """Closed private neighbors of ``v`` with respect to ``s``: N[v] - N[s - v]."""
    return (g.adj[v] | 1 << v) & ~closed_neighborhood(g, s & ~(1 << v))


def is_irredundant(g: Graph, s: int) -> bool:
    return all(private_neighbors(g, s, v) for v in iter_bits(s))


def isolates_of(g: Graph, s: int) -> int:
    """Mask of the vertices that are isolated in ``g[s]``."""
    out = 0
    for v in iter_bits(s):
        if not g.adj[v] & s:
            out |= 1 << v
    return out


def is_isolate_set(g: Graph, s: int) -> bool:
    return isolates_of(g, s) != 0


def is_maximal_isolate_set(g: Graph, s: int) -> bool:
    """Maximality test via the isolate characterization.

    An isolate set is maximal exactly when every vertex outside it is adjacent
    to all isolates of it.
    """
    iso = isolates_of(g, s)
    if not iso:
        raise ValueError("precondition: s must be an isolate set")
    for u in iter_bits(g.full & ~s):
        if g.adj[u] & iso != iso:
            return False
    return True


def is_maximal_by_extension(g: Graph, s: int, member: Callable[[Graph, int], bool]) -> bool:
    """Direct check: ``s`` is a member and no one-vertex extension is."""
    if not member(g, s):
        return False
    return not any(member(g, s | 1 << v) for v in iter_bits(g.full & ~s))


def is_maximal_by_supersets(g: Graph, s: int, member: Callable[[Graph, int], bool]) -> bool:
    """Direct check against every proper superset; exponential, for oracles only."""
    if not member(g, s):
        return False
    rest = g.full & ~s
    sub = rest
    while sub:
        if member(g, s | sub):
            return False
        sub = (sub - 1) & rest
    return True


def is_minimal_by_subsets(g: Graph, s: int, member: Callable[[Graph, int], bool]) -> bool:
    if not member(g, s):
        return False
    sub = (s - 1) & s
    while True:
        if sub != s and member(g, sub):
            return False
        if sub == 0:
            return True
        sub = (sub - 1) & s


def _both(p: Callable[[Graph, int], bool], q: Callable[[Graph, int], bool]) -> Callable[[Graph, int], bool]:
    return lambda g, s: p(g, s) and q(g, s)


SCALAR_MEMBERSHIP: dict[str, Callable[[Graph, int], bool]] = {
    "dominating": is_dominating,
    "total_dominating": is_total_dominating,
    "independent": is_independent,
    "irredundant": is_irredundant,
    "isolate": is_isolate_set,
    "global_dominating": lambda g, s: is_dominating(g, s) and is_dominating(complement(g), s),
    "independent_dominating": _both(is_independent, is_dominating),
    "isolate_dominating": _both(is_isolate_set, is_dominating),
    "isolate_irredundant": _both(is_isolate_set, is_irredundant),
}


# vectorised engine ---------------------------------------------------------------


def _neighborhood_table(n: int, adj: tuple[int, ...]) -> np.ndarray:
    table = np.zeros(1, dtype=np.int64)
    for v in range(n):
        table = np.concatenate([table, table | adj[v]])
    return table


def _down_closure(flags: np.ndarray, n: int) -> np.ndarray:
    """out[S] = any flags[T] for T subset of S."""
    out = flags.copy()
    for v in range(n):
        view = out.reshape(-1, 2, 1 << v)
        view[:, 1, :] |= view[:, 0, :]
    return out


def _up_closure(flags: np.ndarray, n: int) -> np.ndarray:
    """out[S] = any flags[T] for T superset of S."""
    out = flags.copy()
    for v in range(n):
        view = out.reshape(-1, 2, 1 << v)
        view[:, 0, :] |= view[:, 1, :]
    return out


class SubsetTables:
    """Membership tables over all subsets of one graph, built lazily."""

    def __init__(self, g: Graph) -> None:
        if g.n > MAX_SOLVER_N:
            raise ValueError(f"subset enumeration is limited to n <= {MAX_SOLVER_N}")
        self.g = g
        n = g.n
        self.subsets = np.arange(1 << n, dtype=np.int64)
        self.sizes = np.zeros(1 << n, dtype=np.int64)
        for v in range(n):
            self.sizes += (self.subsets >> v) & 1
        self.open_nbhd = _neighborhood_table(n, g.adj)
        self.closed_nbhd = self.open_nbhd | self.subsets
        self._cache: dict[tuple[str, str], np.ndarray] = {}

    def _bit(self, v: int) -> np.ndarray:
        return ((self.subsets >> v) & 1).astype(bool)

    def _membership(self, name: str) -> np.ndarray:
        g, s = self.g, self.subsets
        if name == "dominating":
            return self.closed_nbhd == g.full
        if name == "total_dominating":
            return self.open_nbhd == g.full
        if name == "independent":
            return (self.open_nbhd & s) == 0
        if name == "isolate":
            out = np.zeros(s.shape, dtype=bool)
            for v in range(g.n):
                out |= self._bit(v) & ((s & g.adj[v]) == 0)
            return out
        if name == "irredundant":
            out = np.ones(s.shape, dtype=bool)
            for v in range(g.n):
                others = self.closed_nbhd[s & ~(1 << v)]
                has_private = ((g.adj[v] | 1 << v) & ~others) != 0
                out &= ~self._bit(v) | has_private
            return out
        if name == "global_dominating":
            comp = _neighborhood_table(g.n, complement(g).adj) | s
            return self.family("dominating") & (comp == g.full)
        if name == "independent_dominating":
            return self.family("independent") & self.family("dominating")
        if name == "isolate_dominating":
            return self.family("isolate") & self.family("dominating")
        if name == "isolate_irredundant":
            return self.family("isolate") & self.family("irredundant")
        raise KeyError(f"unknown membership predicate {name!r}")

    def family(self, member: str, condition: str = "any") -> np.ndarray:
        key = (member, condition)
        if key in self._cache:
            return self._cache[key]
        if condition == "any":
            table = self._membership(member)
        elif condition in ("minimal", "maximal"):
            base = self.family(member)
            closure = _down_closure if condition == "minimal" else _up_closure
            closed = closure(base, self.g.n)
            proper = np.zeros(base.shape, dtype=bool)
            for v in range(self.g.n):
                bit = self._bit(v)
                if condition == "minimal":
                    proper |= bit & closed[self.subsets & ~(1 << v)]
                else:
                    proper |= ~bit & closed[self.subsets | 1 << v]
            table = base & ~proper
        else:
            raise ValueError(f"condition must be any/minimal/maximal, got {condition!r}")
        self._cache[key] = table
        return table

    def members(self, member: str, condition: str = "any") -> list[int]:
        return [int(s) for s in np.flatnonzero(self.family(member, condition))]


@dataclass(frozen=True)
class Extremum:
    value: int
    witness: int

    def witness_vertices(self) -> list[int]:
        return list(iter_bits(self.witness))


Membership = Union[str, Callable[[Graph, int], bool]]


def _extremum(g: Graph, member: Membership, condition: str, tables: SubsetTables | None, best) -> Extremum:
    if callable(member):
        if condition != "any":
            raise ValueError("callable membership only supports condition='any'")
        tables = tables or SubsetTables(g)
        flags = np.fromiter((member(g, s) for s in range(1 << g.n)), dtype=bool, count=1 << g.n)
    else:
        tables = tables or SubsetTables(g)
        flags = tables.family(member, condition)
    idx = np.flatnonzero(flags)
    if idx.size == 0:
        raise UndefinedParameter(f"no {condition} {member} set exists on this graph")
    sizes = tables.sizes[idx]
    target = best(sizes)
    # lowest-index subset of the extremal size, for reproducible witnesses
    witness = int(idx[np.flatnonzero(sizes == target)[0]])
    return Extremum(int(target), witness)


def min_over(g: Graph, member: Membership, condition: str = "any", tables: SubsetTables | None = None) -> Extremum:
    """Minimum cardinality over the ``condition`` members of a family, with a witness.

    Raises ``UndefinedParameter`` if the family is empty.
    """
    return _extremum(g, member, condition, tables, np.min)


def max_over(g: Graph, member: Membership, condition: str = "any", tables: SubsetTables | None = None) -> Extremum:
    return _extremum(g, member, condition, tables, np.max)


# (kind, membership, condition) for every reported parameter
DEFINITIONS: dict[str, tuple[str, str, str]] = {
    "gamma": ("min", "dominating", "any"),
    "upper_gamma": ("max", "dominating", "minimal"),
    "ind_dom": ("min", "independent_dominating", "any"),
    "alpha": ("max", "independent", "any"),
    "gamma_t": ("min", "total_dominating", "any"),
    "gamma_g": ("min", "global_dominating", "any"),
    "ir": ("min", "irredundant", "maximal"),
    "IR": ("max", "irredundant", "maximal"),
    "i0": ("min", "isolate", "maximal"),
    "I0": ("max", "isolate", "maximal"),
    "gamma0": ("min", "isolate_dominating", "minimal"),
    "upper_gamma0": ("max", "isolate_dominating", "minimal"),
    "ir0": ("min", "isolate_irredundant", "maximal"),
    "IR0": ("max", "isolate_irredundant", "maximal"),
}


def compute_parameter(g: Graph, name: str, tables: SubsetTables | None = None) -> Extremum:
    kind, member, condition = DEFINITIONS[ALIASES.get(name, name)]
    engine = min_over if kind == "min" else max_over
    return engine(g, member, condition, tables or SubsetTables(g))


@dataclass(frozen=True)
class ParameterReport:
    graph: Graph
    diam: float
    has_dominating_vertex: bool
    values: dict[str, Optional[Extremum]] = field(repr=False)

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m

    def __getattr__(self, name: str):
        values = self.__dict__.get("values")
        if values is not None:
            key = ALIASES.get(name, name)
            if key in values:
                ext = values[key]
                return None if ext is None else ext.value
        raise AttributeError(name)

    def witness(self, name: str) -> Optional[int]:
        ext = self.values[ALIASES.get(name, name)]
        return None if ext is None else ext.witness

    def as_dict(self) -> dict:
        return {
            "graph6": emit_graph6(self.graph),
            "n": self.n,
            "m": self.m,
            "diam": None if self.diam == INF else int(self.diam),
            "has_dominating_vertex": self.has_dominating_vertex,
            "parameters": {
                name: None if ext is None else {"value": ext.value, "witness": ext.witness_vertices()}
                for name, ext in self.values.items()
            },
        }

    def row(self) -> list:
        """CSV row: graph6, n, m, diam, then the fourteen parameters (blank if undefined)."""
        d = "inf" if self.diam == INF else int(self.diam)
        vals = ["" if self.values[p] is None else self.values[p].value for p in PARAMETERS]
        return [emit_graph6(self.graph), self.n, self.m, d, *vals]


def compute_report(g: Graph, tables: SubsetTables | None = None) -> ParameterReport:
    """All fourteen parameters with witnesses. ``gamma_t`` is ``None`` when undefined."""
    tables = tables or SubsetTables(g)
    values: dict[str, Optional[Extremum]] = {}
    for name in PARAMETERS:
        try:
            values[name] = compute_parameter(g, name, tables)
        except UndefinedParameter:
            if name != "gamma_t":
                raise
            values[name] = None
    # domination number as min over all dominating sets must equal min over minimal ones
    if min_over(g, "dominating", "minimal", tables).value != values["gamma"].value:
        raise AssertionError("minimum dominating set is not attained by a minimal dominating set")
    return ParameterReport(g, diameter(g), has_dominating_vertex(g), values)


def all_extremal_sets(g: Graph, name: str, tables: SubsetTables | None = None) -> list[int]:
    """Every witness set of parameter ``name`` (e.g. all minimum total dominating sets)."""
    tables = tables or SubsetTables(g)
    kind, member, condition = DEFINITIONS[ALIASES.get(name, name)]
    flags = tables.family(member, condition)
    idx = np.flatnonzero(flags)
    if idx.size == 0:
        raise UndefinedParameter(f"{name} is undefined on this graph")
    sizes = tables.sizes[idx]
    target = sizes.min() if kind == "min" else sizes.max()
    return [int(s) for s in idx[sizes == target]]


__all__ = [
    "ALIASES",
    "DEFINITIONS",
    "Extremum",
    "PARAMETERS",
    "ParameterReport",
    "SubsetTables",
    "UndefinedParameter",
    "all_extremal_sets",
    "compute_parameter",
    "compute_report",
    "is_dominating",
    "is_independent",
    "is_irredundant",
    "is_isolate_set",
    "is_maximal_by_extension",
    "is_maximal_by_supersets",
    "is_maximal_isolate_set",
    "is_minimal_by_subsets",
    "is_total_dominating",
    "isolates_of",
    "max_over",
    "min_over",
    "popcount",
    "private_neighbors",
]
