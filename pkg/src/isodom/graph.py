"""Immutable small graphs over bit masks, plus graph6 and edge-list I/O."""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field

MAX_VERTICES = 64
INF = float("inf")


class GraphError(ValueError):
    pass


class Graph6Error(ValueError):
    """Base class for malformed graph6 input."""


class Graph6LengthError(Graph6Error):
    pass


class Graph6ByteError(Graph6Error):
    pass


class Graph6TrailingError(Graph6Error):
    pass


def popcount(x: int) -> int:
    return bin(x).count("1")


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the bit mask of the open neighborhood of ``v``. Vertex
    subsets everywhere in this package are plain ``int`` bit masks.
    """

    n: int
    adj: tuple[int, ...]
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count must be in 1..{MAX_VERTICES}, got {self.n}")
        adj = tuple(self.adj)
        if len(adj) != self.n:
            raise GraphError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, nb in enumerate(adj):
            if nb & ~full:
                raise GraphError(f"neighbor of {v} out of range")
            if nb >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in iter_bits(nb):
                if not adj[u] >> v & 1:
                    raise GraphError(f"edge {v}-{u} is not symmetric")
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "_hash", hash((self.n, adj)))

    def __hash__(self) -> int:
        return self._hash

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def full(self) -> int:
        """Mask of the whole vertex set."""
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(popcount(a) for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")


def open_neighborhood(g: Graph, s: int) -> int:
    out = 0
    for v in iter_bits(s):
        out |= g.adj[v]
    return out


def closed_neighborhood(g: Graph, s: int) -> int:
    return open_neighborhood(g, s) | s


def degree(g: Graph, v: int) -> int:
    _check_vertex(g, v)
    return popcount(g.adj[v])


def distances_from(g: Graph, v: int) -> list[float]:
    """Breadth-first distances from ``v``; unreachable vertices get ``INF``."""
    _check_vertex(g, v)
    dist: list[float] = [INF] * g.n
    dist[v] = 0
    seen = 1 << v
    frontier = 1 << v
    d = 0
    while frontier:
        d += 1
        nxt = open_neighborhood(g, frontier) & ~seen
        for u in iter_bits(nxt):
            dist[u] = d
        seen |= nxt
        frontier = nxt
    return dist


def eccentricity(g: Graph, v: int) -> float:
    return max(distances_from(g, v))


def diameter(g: Graph) -> float:
    """Largest distance between two vertices; ``INF`` when disconnected."""
    return max(eccentricity(g, v) for v in range(g.n))


def component_of(g: Graph, v: int, within: int | None = None) -> int:
    """Mask of the component of ``v`` in ``g`` (or in ``g[within]``)."""
    allowed = g.full if within is None else within
    seen = frontier = 1 << v
    while frontier:
        frontier = open_neighborhood(g, frontier) & allowed & ~seen
        seen |= frontier
    return seen


def components(g: Graph, within: int | None = None) -> list[int]:
    """Component masks of ``g[within]`` ordered by lowest vertex."""
    rest = g.full if within is None else within
    out = []
    while rest:
        v = (rest & -rest).bit_length() - 1
        comp = component_of(g, v, rest)
        out.append(comp)
        rest &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    return component_of(g, 0) == g.full


def is_acyclic(g: Graph) -> bool:
    return g.m == g.n - len(components(g))


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and is_connected(g)


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] >= 0:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for u in iter_bits(g.adj[v]):
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    stack.append(u)
                elif color[u] == color[v]:
                    return False
    return True


def leaves_and_supports(g: Graph) -> tuple[int, int]:
    """Return ``(leaves, supports)``: degree-one vertices and their neighbors."""
    leaves = to_mask(v for v in range(g.n) if popcount(g.adj[v]) == 1)
    return leaves, open_neighborhood(g, leaves)


def complement(g: Graph) -> Graph:
    full = g.full
    return Graph(g.n, tuple(full & ~a & ~(1 << v) for v, a in enumerate(g.adj)))


def induced_subgraph(g: Graph, s: int) -> tuple[Graph, tuple[int, ...]]:
    """Return ``g[s]`` relabeled to ``0..|s|-1`` and the map new -> old vertex."""
    if not s & g.full:
        raise GraphError("induced subgraph of an empty vertex set")
    old = tuple(iter_bits(s & g.full))
    index = {v: i for i, v in enumerate(old)}
    adj = tuple(to_mask(index[u] for u in iter_bits(g.adj[v] & s)) for v in old)
    return Graph(len(old), adj), old


def relabel(g: Graph, perm: Iterable[int]) -> Graph:
    """Graph whose vertex ``i`` is vertex ``perm[i]`` of ``g``."""
    perm = list(perm)
    pos = {v: i for i, v in enumerate(perm)}
    return Graph(g.n, tuple(to_mask(pos[u] for u in iter_bits(g.adj[v])) for v in perm))


# graph6 ---------------------------------------------------------------------


def _n_to_bytes(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    return bytes([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])


def emit_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        a = g.adj[j]
        bits.extend(a >> i & 1 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    data = bytes(
        63 + (bits[k] << 5 | bits[k + 1] << 4 | bits[k + 2] << 3 | bits[k + 3] << 2 | bits[k + 4] << 1 | bits[k + 5])
        for k in range(0, len(bits), 6)
    )
    return (_n_to_bytes(g.n) + data).decode("ascii")


def parse_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 record. A trailing newline and a ``>>graph6<<`` header are tolerated."""
    raw = text.encode("latin-1") if isinstance(text, str) else bytes(text)
    raw = raw.rstrip(b"\r\n")
    if raw.startswith(b">>graph6<<"):
        raw = raw[len(b">>graph6<<"):]
    if not raw:
        raise Graph6LengthError("empty graph6 record")
    for pos, b in enumerate(raw):
        if not 63 <= b <= 126:
            raise Graph6ByteError(f"byte {b} at offset {pos} outside 63..126")
    if raw[0] != 126:
        n, body = raw[0] - 63, raw[1:]
    else:
        if len(raw) < 4 or raw[1] == 126:
            raise Graph6LengthError("unsupported or truncated size header")
        n = (raw[1] - 63) << 12 | (raw[2] - 63) << 6 | (raw[3] - 63)
        body = raw[4:]
    if n < 1:
        raise Graph6LengthError("graph6 record with zero vertices")
    if n > MAX_VERTICES:
        raise Graph6LengthError(f"{n} vertices exceeds the cap of {MAX_VERTICES}")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) < need:
        raise Graph6LengthError(f"expected {need} data bytes for n={n}, got {len(body)}")
    if len(body) > need:
        raise Graph6TrailingError(f"{len(body) - need} trailing bytes after graph6 data")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] - 63) >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines (0-indexed).

    An optional first line holding a single integer fixes the vertex count,
    which is the only way to express isolated trailing vertices. Blank lines
    and ``#`` comments are skipped.
    """
    n: int | None = None
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise GraphError(f"line {lineno}: expected integers, got {line!r}") from None
        if len(nums) == 1 and n is None and not edges:
            n = nums[0]
        elif len(nums) == 2:
            edges.append((nums[0], nums[1]))
        else:
            raise GraphError(f"line {lineno}: expected 'u v', got {line!r}")
    if n is None:
        if not edges:
            raise GraphError("edge list is empty")
        n = max(max(e) for e in edges) + 1
    return Graph.from_edges(n, edges)


def emit_edge_list(g: Graph) -> str:
    return "".join([f"{g.n}\n"] + [f"{u} {v}\n" for u, v in g.edges()])


def has_dominating_vertex(g: Graph) -> bool:
    """True iff some vertex is adjacent to all others (vacuously true on K1)."""
    return any(popcount(a) == g.n - 1 for a in g.adj)
