"""Graphs, clique-factor coordinates, and shortest-path tables.

Vertices are the integers 0..n-1.  Products of cliques use a row-major
mixed-radix vertex codec: in K_{m_1} x ... x K_{m_t} the vertex with
coordinates (c_1, ..., c_t) gets the flat id
((c_1 * m_2 + c_2) * m_3 + c_3) * ..., so the last coordinate varies
fastest.  Every module and the command line speak this codec.
"""

from __future__ import annotations

import math
from collections import deque
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from pathlib import Path

import numpy as np

# Unreachable sentinel in distance tables.  It is the maximal value of the
# storage dtype and is never used in arithmetic, only in comparisons.
INF = int(np.iinfo(np.uint16).max)


class Graph:
    """Immutable undirected simple graph on vertices 0..n-1."""

    __slots__ = ("n", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._adj = tuple(frozenset(s) for s in adj)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as a sorted pair, in ascending order."""
        for u in range(self.n):
            for v in sorted(self._adj[u]):
                if u < v:
                    yield (u, v)

    def edge_count(self) -> int:
        return sum(len(s) for s in self._adj) // 2

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count()})"


@dataclass(frozen=True)
class CliqueFactors:
    """Ordered clique sizes (m_1, ..., m_t) defining a product of cliques.

    Every size must be at least 2 and at least one factor is required.
    """

    sizes: tuple[int, ...]

    def __post_init__(self) -> None:
        sizes = tuple(int(s) for s in self.sizes)
        if len(sizes) == 0:
            raise ValueError("at least one clique factor is required")
        if any(s < 2 for s in sizes):
            raise ValueError(f"every clique factor must have size >= 2, got {sizes}")
        object.__setattr__(self, "sizes", sizes)

    @property
    def t(self) -> int:
        return len(self.sizes)

    @property
    def vertex_count(self) -> int:
        return math.prod(self.sizes)

    def flat_index(self, coords: Sequence[int]) -> int:
        """Row-major flat id of a coordinate tuple."""
        if len(coords) != self.t:
            raise ValueError(f"expected {self.t} coordinates, got {len(coords)}")
        flat = 0
        for c, m in zip(coords, self.sizes):
            if not 0 <= c < m:
                raise ValueError(f"coordinate {c} out of range for factor of size {m}")
            flat = flat * m + c
        return flat

    def coords_of(self, v: int) -> tuple[int, ...]:
        """Coordinate tuple of a flat vertex id (inverse of flat_index)."""
        if not 0 <= v < self.vertex_count:
            raise ValueError(f"vertex id {v} out of range")
        coords = [0] * self.t
        for i in range(self.t - 1, -1, -1):
            v, coords[i] = divmod(v, self.sizes[i])
        return tuple(coords)

    def coordinates(self) -> np.ndarray:
        """(vertex_count, t) array whose row v is coords_of(v)."""
        grid = np.unravel_index(np.arange(self.vertex_count), self.sizes)
        return np.stack(grid, axis=1).astype(np.int32)


class DistanceMatrix:
    """Immutable all-pairs distance table with INF marking unreachable."""

    __slots__ = ("values", "connected")

    def __init__(self, values: np.ndarray):
        values = np.ascontiguousarray(values, dtype=np.uint16)
        if values.ndim != 2 or values.shape[0] != values.shape[1]:
            raise ValueError("distance table must be square")
        values.setflags(write=False)
        self.values = values
        self.connected = not bool((values == INF).any())

    @property
    def n(self) -> int:
        return self.values.shape[0]

    def d(self, u: int, v: int) -> int:
        return int(self.values[u, v])

    def __repr__(self) -> str:
        return f"DistanceMatrix(n={self.n}, connected={self.connected})"


def build_clique(n: int) -> Graph:
    """Complete graph K_n."""
    if n < 1:
        raise ValueError("clique needs at least one vertex")
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def build_bipartite_minus_matching(n: int) -> Graph:
    """Complete bipartite graph K_{n,n} minus a perfect matching.

    Parts are {0..n-1} and {n..2n-1}; vertex i is matched to (and therefore
    not adjacent to) vertex n+i.
    """
    if n < 2:
        raise ValueError("needs parts of size at least 2")
    edges = ((i, n + j) for i in range(n) for j in range(n) if i != j)
    return Graph(2 * n, edges)


def tensor_product(g: Graph, h: Graph) -> Graph:
    """Tensor (categorical) product: (u,v) ~ (x,y) iff u~x in g and v~y in h.

    The product vertex (u, v) gets flat id u * h.n + v.
    """
    edges = []
    for u, x in g.edges():
        for v, y in h.edges():
            edges.append((u * h.n + v, x * h.n + y))
            edges.append((u * h.n + y, x * h.n + v))
    return Graph(g.n * h.n, edges)


def tensor_of_cliques(factors: CliqueFactors) -> Graph:
    """Iterated tensor product of cliques under the mixed-radix codec."""
    g = build_clique(factors.sizes[0])
    for m in factors.sizes[1:]:
        g = tensor_product(g, build_clique(m))
    return g


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """BFS from every vertex; unreachable entries hold INF."""
    n = g.n
    table = np.full((n, n), INF, dtype=np.uint16)
    for src in range(n):
        row = table[src]
        row[src] = 0
        queue = deque([src])
        while queue:
            u = queue.popleft()
            du = row[u]
            for w in g.neighbors(u):
                if row[w] == INF:
                    row[w] = du + 1
                    queue.append(w)
    return DistanceMatrix(table)


def tensor_clique_distances(factors: CliqueFactors) -> DistanceMatrix:
    """Distance table of the tensor product of cliques.

    When every factor has size >= 3 the product has diameter at most 2 and
    the table follows directly from coordinates: distinct vertices are at
    distance 2 when they share a coordinate and 1 otherwise.  The shortcut
    is bit-identical to BFS on the materialized graph (the test suite
    compares the two routes); smaller factors fall back to BFS.
    """
    if all(m >= 3 for m in factors.sizes):
        coords = factors.coordinates()
        n = factors.vertex_count
        share = np.zeros((n, n), dtype=bool)
        for j in range(factors.t):
            col = coords[:, j]
            share |= col[:, None] == col[None, :]
        table = np.where(share, 2, 1).astype(np.uint16)
        np.fill_diagonal(table, 0)
        return DistanceMatrix(table)
    return all_pairs_distances(tensor_of_cliques(factors))


def diameter(g: Graph) -> int | None:
    """Largest finite distance, or None when the graph is disconnected."""
    dist = all_pairs_distances(g)
    if not dist.connected:
        return None
    if g.n == 0:
        raise ValueError("diameter of the empty graph is undefined")
    return int(dist.values.max())


def check_k2_kn_isomorphism(n: int) -> bool:
    """Check that K_2 x K_n equals K_{n,n} minus a perfect matching.

    The map (0, j) -> part-A vertex j, (1, j) -> part-B vertex n + j is the
    identity under the flat codec, so the two edge sets are compared
    directly.
    """
    if n < 2:
        raise ValueError("needs n >= 2")
    prod = tensor_of_cliques(CliqueFactors((2, n)))
    model = build_bipartite_minus_matching(n)
    return prod == model


class EdgeListError(ValueError):
    """Malformed edge-list input; carries the 1-based offending line."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_edge_list(lines: str | Iterable[str]) -> Graph:
    """Parse the plain edge-list format.

    The first data line holds "<n> <m>"; the next m data lines hold one
    "u v" edge each.  Blank lines and text after "#" are ignored.  Accepts
    a whole document as one string or any iterable of lines.
    """
    if isinstance(lines, str):
        lines = lines.splitlines()
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    last_line = 0
    for lineno, raw in enumerate(lines, start=1):
        last_line = lineno
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        parts = text.split()
        if len(parts) != 2:
            raise EdgeListError(lineno, f"expected two integers, got {text!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(lineno, f"expected two integers, got {text!r}") from None
        if header is None:
            if a < 0 or b < 0:
                raise EdgeListError(lineno, "vertex and edge counts must be nonnegative")
            header = (a, b)
            continue
        n, m = header
        if len(edges) == m:
            raise EdgeListError(lineno, f"more than the declared {m} edges")
        if not (0 <= a < n and 0 <= b < n):
            raise EdgeListError(lineno, f"edge ({a}, {b}) out of range for {n} vertices")
        if a == b:
            raise EdgeListError(lineno, f"loop at vertex {a}")
        key = (min(a, b), max(a, b))
        if key in seen:
            raise EdgeListError(lineno, f"duplicate edge ({a}, {b})")
        seen.add(key)
        edges.append(key)
    if header is None:
        raise EdgeListError(last_line + 1, "missing header line")
    if len(edges) != header[1]:
        raise EdgeListError(last_line + 1, f"expected {header[1]} edges, got {len(edges)}")
    return Graph(header[0], edges)


def read_edge_list(path: str | Path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh)


def write_edge_list(g: Graph, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"{g.n} {g.edge_count()}\n")
        for u, v in g.edges():
            fh.write(f"{u} {v}\n")
