"""Non-isomorphic graph and tree generation, random graphs, named families.

Connected graphs are grown one vertex at a time from the connected graphs
on one fewer vertex (every connected graph has a non-cut vertex, so nothing
is missed) and deduplicated by an exact canonical code. The code is the
minimal upper-triangle adjacency string over all vertex orders that respect
a colour-refinement partition; the partition is isomorphism invariant, so
the minimum is too, and minimising only inside cells keeps ``n = 8``
affordable.
"""

from __future__ import annotations

import math
import random
from collections.abc import Iterator
from functools import lru_cache
from itertools import permutations
from pathlib import Path

import numpy as np

from .graph import Graph, GraphError, is_bipartite, is_connected, iter_bits, parse_graph6

MAX_CONNECTED_N = 9
MAX_TREE_N = 14

FAMILIES = ("path", "cycle", "complete", "star", "complete_bipartite")


class EnumerationError(ValueError):
    pass


class RejectionBudgetExceeded(RuntimeError):
    pass


# canonical form --------------------------------------------------------------


def _refined_cells(n: int, adj: tuple[int, ...]) -> list[list[int]]:
    colors = [bin(a).count("1") for a in adj]
    ncolors = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in iter_bits(adj[v])))) for v in range(n)]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [rank[s] for s in sigs]
        if len(rank) == ncolors:
            break
        ncolors = len(rank)
    cells: list[list[int]] = [[] for _ in range(ncolors)]
    for v, c in enumerate(colors):
        cells[c].append(v)
    return cells


@lru_cache(maxsize=None)
def _perm_table(k: int) -> np.ndarray:
    return np.array(list(permutations(range(k))), dtype=np.int8).reshape(-1, k)


@lru_cache(maxsize=None)
def _pair_index(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    # column-major upper triangle, first pair is the most significant bit
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    rows = np.array([p[0] for p in pairs], dtype=np.intp)
    cols = np.array([p[1] for p in pairs], dtype=np.intp)
    weights = np.array([1 << (len(pairs) - 1 - k) for k in range(len(pairs))], dtype=np.int64)
    return rows, cols, weights


def _orders_within_cells(cells: list[list[int]]) -> np.ndarray:
    """Every vertex order that lists the cells in sequence, permuted inside each cell."""
    blocks = [np.asarray(cell, dtype=np.intp)[_perm_table(len(cell))] for cell in cells]
    total = math.prod(b.shape[0] for b in blocks)
    out = []
    reps = total
    for b in blocks:
        reps //= b.shape[0]
        tile = total // (b.shape[0] * reps)
        out.append(np.tile(np.repeat(b, reps, axis=0), (tile, 1)))
    return np.concatenate(out, axis=1)


def canonical_code(n: int, adj: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """Return ``(code, order)``; relabeling by ``order`` yields the canonical representative."""
    if n == 1:
        return 0, (0,)
    cells = _refined_cells(n, adj)
    orders = _orders_within_cells(cells)
    mat = np.array([[a >> j & 1 for j in range(n)] for a in adj], dtype=np.int64)
    rows, cols, weights = _pair_index(n)
    codes = mat[orders[:, rows], orders[:, cols]] @ weights
    k = int(np.argmin(codes))
    return int(codes[k]), tuple(int(v) for v in orders[k])


def _relabeled_adj(adj: tuple[int, ...], order: tuple[int, ...]) -> tuple[int, ...]:
    pos = {v: i for i, v in enumerate(order)}
    out = []
    for v in order:
        m = 0
        for u in iter_bits(adj[v]):
            m |= 1 << pos[u]
        out.append(m)
    return tuple(out)


def canonical_graph(g: Graph) -> Graph:
    _, order = canonical_code(g.n, g.adj)
    return Graph(g.n, _relabeled_adj(g.adj, order))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    return canonical_code(g.n, g.adj)[0] == canonical_code(h.n, h.adj)[0]


# connected graphs --------------------------------------------------------------


@lru_cache(maxsize=None)
def _connected(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, (0,)),)
    found: dict[int, tuple[int, ...]] = {}
    for parent in _connected(n - 1):
        for mask in range(1, 1 << (n - 1)):
            adj = tuple(a | (mask >> v & 1) << (n - 1) for v, a in enumerate(parent.adj)) + (mask,)
            code, order = canonical_code(n, adj)
            if code not in found:
                found[code] = _relabeled_adj(adj, order)
    return tuple(Graph(n, found[c]) for c in sorted(found))


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """Yield one canonical representative of each connected graph on ``n`` vertices.

    Order is ascending canonical code, so output is reproducible. Results are
    memoised per ``n``; the first call at ``n = 8`` takes tens of seconds.
    """
    if not 1 <= n <= MAX_CONNECTED_N:
        raise EnumerationError(f"connected enumeration supports 1 <= n <= {MAX_CONNECTED_N}, got {n}")
    yield from _connected(n)


# trees ---------------------------------------------------------------------------


def _tree_centers(n: int, adj: tuple[int, ...]) -> list[int]:
    deg = [bin(a).count("1") for a in adj]
    remaining = set(range(n))
    layer = [v for v in range(n) if deg[v] <= 1]
    while len(remaining) > 2:
        nxt = []
        for v in layer:
            remaining.discard(v)
            for u in iter_bits(adj[v]):
                if u in remaining:
                    deg[u] -= 1
                    if deg[u] == 1:
                        nxt.append(u)
        layer = nxt
    return sorted(remaining)


def _rooted(adj: tuple[int, ...], root: int, parent: int) -> tuple[str, list[int]]:
    """Encoding of the subtree at ``root`` and its vertices in canonical preorder."""
    kids = [_rooted(adj, u, root) for u in iter_bits(adj[root]) if u != parent]
    kids.sort(key=lambda t: t[0])
    order = [root]
    for _, sub in kids:
        order.extend(sub)
    return "(" + "".join(k[0] for k in kids) + ")", order


def tree_canonical(n: int, adj: tuple[int, ...]) -> tuple[str, list[int]]:
    """Center-rooted canonical string of a tree and a canonical vertex order."""
    centers = _tree_centers(n, adj)
    if len(centers) == 1:
        return _rooted(adj, centers[0], -1)
    a, b = centers
    sa, oa = _rooted(adj, a, b)
    sb, ob = _rooted(adj, b, a)
    if sb < sa:
        sa, oa, sb, ob = sb, ob, sa, oa
    return sa + "|" + sb, oa + ob


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, (0,)),)
    found: dict[str, tuple[int, ...]] = {}
    for parent in _trees(n - 1):
        for v in range(n - 1):
            adj = tuple(a | ((u == v) << (n - 1)) for u, a in enumerate(parent.adj)) + (1 << v,)
            code, order = tree_canonical(n, adj)
            if code not in found:
                found[code] = _relabeled_adj(adj, tuple(order))
    return tuple(Graph(n, found[c]) for c in sorted(found))


def enumerate_trees(n: int) -> Iterator[Graph]:
    """Yield one representative of each tree on ``n`` vertices, grown by leaf attachment."""
    if not 1 <= n <= MAX_TREE_N:
        raise EnumerationError(f"tree enumeration supports 1 <= n <= {MAX_TREE_N}, got {n}")
    yield from _trees(n)


def enumerate_connected_bipartite(n: int) -> Iterator[Graph]:
    return (g for g in enumerate_connected_graphs(n) if is_bipartite(g))


def read_graph6_file(path: str | Path) -> Iterator[Graph]:
    """Yield graphs from a newline-delimited graph6 file, skipping blank lines."""
    with open(path, "rb") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                yield parse_graph6(line)
            except ValueError as exc:
                raise EnumerationError(f"{path}:{lineno}: {exc}") from exc


# random and named ------------------------------------------------------------------


def random_graph(n: int, edge_prob: float, rng: random.Random) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < edge_prob]
    return Graph.from_edges(n, edges)


def random_connected_graph(n: int, edge_prob: float, seed: int, max_tries: int = 10_000) -> Graph:
    """Erdos-Renyi sample conditioned on connectivity by rejection."""
    if not 0 < edge_prob < 1:
        raise ValueError("edge_prob must lie strictly between 0 and 1")
    rng = random.Random(seed)
    for _ in range(max_tries):
        g = random_graph(n, edge_prob, rng)
        if is_connected(g):
            return g
    raise RejectionBudgetExceeded(f"no connected sample in {max_tries} draws (n={n}, p={edge_prob})")


def make_named(family: str, k: int, k2: int | None = None) -> Graph:
    """Standard small graphs. ``star`` takes the number of leaves; its center is 0.

    ``complete_bipartite`` builds K_{k,k2} (``k2`` defaults to ``k``) with the
    first part on ``0..k-1``.
    """
    if family == "path":
        if k < 1:
            raise GraphError("path needs k >= 1")
        return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])
    if family == "cycle":
        if k < 3:
            raise GraphError("cycle needs k >= 3")
        return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])
    if family == "complete":
        if k < 1:
            raise GraphError("complete graph needs k >= 1")
        return Graph.from_edges(k, [(i, j) for i in range(k) for j in range(i + 1, k)])
    if family == "star":
        if k < 1:
            raise GraphError("star needs k >= 1")
        return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])
    if family == "complete_bipartite":
        k2 = k if k2 is None else k2
        if k < 1 or k2 < 1:
            raise GraphError("complete_bipartite needs both parts >= 1")
        return Graph.from_edges(k + k2, [(i, k + j) for i in range(k) for j in range(k2)])
    raise GraphError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
