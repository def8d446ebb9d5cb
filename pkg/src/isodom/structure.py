"""Structural predicates and constructions on trees and spanning trees."""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from typing import Optional

from .graph import (
    Graph,
    GraphError,
    components,
    diameter,
    has_dominating_vertex,
    is_connected,
    is_tree,
    iter_bits,
    leaves_and_supports,
    popcount,
)
from .solvers import compute_parameter, is_dominating, is_total_dominating

__all__ = [
    "CaterpillarCode",
    "SpanningTreeCertificate",
    "TreeGammaRecord",
    "all_leaf_or_support",
    "build_spanning_tree_preserving",
    "caterpillar_code",
    "classify_tree_gamma",
    "find_spanning_caterpillar_same_diameter",
    "has_dominating_vertex",
    "is_caterpillar",
    "spanning_trees",
]


def _require_tree(t: Graph) -> None:
    if not is_tree(t):
        raise GraphError("precondition: input must be a tree")


def all_leaf_or_support(t: Graph) -> bool:
    _require_tree(t)
    leaves, supports = leaves_and_supports(t)
    return leaves | supports == t.full


@dataclass(frozen=True)
class CaterpillarCode:
    k: int
    leaf_counts: tuple[int, ...]


def caterpillar_code(t: Graph) -> Optional[CaterpillarCode]:
    """Spine length and leaf counts along the spine, or ``None`` if not a caterpillar.

    The spine is what remains after deleting every leaf. Of the code and its
    reversal the lexicographically smaller one is returned. Trees on one or
    two vertices count as caterpillars whose spine is the whole tree.
    """
    _require_tree(t)
    if t.n <= 2:
        return CaterpillarCode(t.n, (0,) * t.n)
    leaves, _ = leaves_and_supports(t)
    spine = t.full & ~leaves
    spine_deg = {v: popcount(t.adj[v] & spine) for v in iter_bits(spine)}
    if max(spine_deg.values()) > 2:
        return None
    start = min(v for v, d in spine_deg.items() if d <= 1)
    order = [start]
    prev, cur = -1, start
    while True:
        nxt = [u for u in iter_bits(t.adj[cur] & spine) if u != prev]
        if not nxt:
            break
        prev, cur = cur, nxt[0]
        order.append(cur)
    counts = tuple(popcount(t.adj[v] & leaves) for v in order)
    return CaterpillarCode(len(order), min(counts, counts[::-1]))


def is_caterpillar(t: Graph) -> bool:
    return caterpillar_code(t) is not None


@dataclass(frozen=True)
class TreeGammaRecord:
    gamma: int
    n_minus_l: int
    characterization_holds: bool
    leafless_gamma_set: int


def classify_tree_gamma(t: Graph) -> TreeGammaRecord:
    """Domination number of a tree against ``n - l`` and the leaf-or-support test.

    Also returns a minimum dominating set free of leaves, made by swapping
    each leaf of a solver witness for its support vertex.
    """
    _require_tree(t)
    if t.n < 3:
        raise GraphError("precondition: tree needs at least 3 vertices")
    gamma = compute_parameter(t, "gamma")
    leaves, _ = leaves_and_supports(t)
    leafless = gamma.witness & ~leaves
    for v in iter_bits(gamma.witness & leaves):
        leafless |= t.adj[v]
    return TreeGammaRecord(gamma.value, t.n - popcount(leaves), all_leaf_or_support(t), leafless)


# spanning trees ---------------------------------------------------------------------


@dataclass(frozen=True)
class SpanningTreeCertificate:
    tree: Graph
    dset: int
    components_before: int
    components_after: int

    def failures(self, source: Graph) -> list[str]:
        """Names of the certificate invariants that do not hold (empty when valid)."""
        t = self.tree
        bad = []
        if t.n != source.n or t.m != source.n - 1:
            bad.append("edge_count")
        if not is_connected(t):
            bad.append("connected")
        if any(a & ~b for a, b in zip(t.adj, source.adj)):
            bad.append("subgraph")
        if self.components_before != self.components_after:
            bad.append("component_count")
        if len(components(source, self.dset)) != self.components_before:
            bad.append("components_before")
        if len(components(t, self.dset)) != self.components_after:
            bad.append("components_after")
        if not is_total_dominating(t, self.dset):
            bad.append("total_domination")
        return bad


class _UnionFind:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[max(ra, rb)] = min(ra, rb)
        return True


def build_spanning_tree_preserving(g: Graph, d: int) -> SpanningTreeCertificate:
    """Spanning tree of ``g`` in which ``d`` stays total dominating with the same components.

    Steps: a BFS tree inside each component of ``g[d]``; one edge from every
    outside vertex to its lowest-indexed neighbor in ``d``; then the remaining
    edges of ``g`` in lexicographic order wherever they join two trees. Every
    edge added in the last step has an endpoint outside ``d``, because the
    components of ``g[d]`` are already spanned.
    """
    if not is_connected(g):
        raise GraphError("precondition: graph must be connected")
    if not is_total_dominating(g, d):
        raise GraphError("precondition: d must be a total dominating set")
    uf = _UnionFind(g.n)
    edges: list[tuple[int, int]] = []

    def add(u: int, v: int) -> None:
        if uf.union(u, v):
            edges.append((u, v))

    before = components(g, d)
    for comp in before:
        root = (comp & -comp).bit_length() - 1
        seen, queue = 1 << root, [root]
        for v in queue:
            for u in iter_bits(g.adj[v] & comp & ~seen):
                seen |= 1 << u
                add(v, u)
                queue.append(u)
    for v in iter_bits(g.full & ~d):
        u = (g.adj[v] & d & -(g.adj[v] & d)).bit_length() - 1
        add(v, u)
    for u, v in g.edges():
        add(u, v)
    tree = Graph.from_edges(g.n, edges)
    return SpanningTreeCertificate(tree, d, len(before), len(components(tree, d)))


def spanning_trees(g: Graph) -> Iterator[Graph]:
    """All spanning trees of a connected graph, by include/exclude over sorted edges."""
    edges = g.edges()
    n = g.n
    if n == 1:
        yield g
        return

    def rec(i: int, chosen: list[tuple[int, int]], labels: list[int]) -> Iterator[Graph]:
        if len(chosen) == n - 1:
            yield Graph.from_edges(n, chosen)
            return
        if len(edges) - i < n - 1 - len(chosen):
            return
        u, v = edges[i]
        if labels[u] != labels[v]:
            old, new = labels[v], labels[u]
            relabeled = [new if x == old else x for x in labels]
            chosen.append((u, v))
            yield from rec(i + 1, chosen, relabeled)
            chosen.pop()
        yield from rec(i + 1, chosen, labels)

    yield from rec(0, [], list(range(n)))


def find_spanning_caterpillar_same_diameter(g: Graph) -> Optional[Graph]:
    """First spanning tree of ``g`` that is a caterpillar with the diameter of ``g``."""
    if g.n < 2 or not is_connected(g):
        raise GraphError("precondition: graph must be connected with at least 2 vertices")
    target = diameter(g)
    for t in spanning_trees(g):
        if diameter(t) == target and is_caterpillar(t):
            return t
    return None


def leafless_set_is_valid(t: Graph, record: TreeGammaRecord) -> bool:
    leaves, _ = leaves_and_supports(t)
    s = record.leafless_gamma_set
    return is_dominating(t, s) and popcount(s) == record.gamma and not s & leaves
