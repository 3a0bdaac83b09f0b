"""Graph families used throughout the package.

Everything here is a finite, undirected, simple graph with vertices
indexed 0..n-1.  Graphs are immutable after construction and safe to
share between threads or worker processes.

Vertex indexing of Cartesian products is row-major with the FIRST
factor major: the product vertex (g, h) gets index g*|V(H)| + h.  A
Hamming graph on alphabet size n and dimension d consequently encodes
the point (x_1, ..., x_d) as x_1*n^(d-1) + ... + x_d, i.e. x_1 is the
most significant coordinate.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from bootperc.errors import FormatError, PreconditionError, ResourceLimitError

Edge = tuple[int, int]

DEFAULT_VERTEX_CAP = 10_000_000


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph.

    ``edges`` holds normalized (min, max) pairs; ``adjacency`` holds a
    sorted neighbor tuple per vertex.  Build instances through
    :meth:`from_edges`, which validates and derives the adjacency.
    """

    vertex_count: int
    edges: frozenset[Edge]
    adjacency: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if vertex_count < 0:
            raise PreconditionError("vertex_count must be nonnegative")
        normalized: set[Edge] = set()
        for u, v in edges:
            if u == v:
                raise PreconditionError(f"self-loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise PreconditionError(
                    f"edge ({u},{v}) out of range for {vertex_count} vertices"
                )
            normalized.add(normalize_edge(u, v))
        neighbors: list[list[int]] = [[] for _ in range(vertex_count)]
        for u, v in normalized:
            neighbors[u].append(v)
            neighbors[v].append(u)
        adjacency = tuple(tuple(sorted(ns)) for ns in neighbors)
        return cls(vertex_count, frozenset(normalized), adjacency)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def edge_list(self) -> list[Edge]:
        """Edges sorted lexicographically; the canonical iteration order."""
        return sorted(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self.edges


@dataclass(frozen=True)
class HammingSpace:
    """Codec between flat vertex indices and points of [0,n)^d."""

    n: int
    d: int

    def __post_init__(self) -> None:
        if self.n < 1 or self.d < 1:
            raise PreconditionError("HammingSpace needs n >= 1 and d >= 1")

    @property
    def size(self) -> int:
        return self.n**self.d

    def encode(self, point: tuple[int, ...]) -> int:
        if len(point) != self.d:
            raise PreconditionError(f"point has {len(point)} coordinates, expected {self.d}")
        index = 0
        for x in point:
            if not 0 <= x < self.n:
                raise PreconditionError(f"coordinate {x} out of range [0,{self.n})")
            index = index * self.n + x
        return index

    def decode(self, index: int) -> tuple[int, ...]:
        if not 0 <= index < self.size:
            raise PreconditionError(f"index {index} out of range [0,{self.size})")
        coords = [0] * self.d
        for i in range(self.d - 1, -1, -1):
            index, coords[i] = divmod(index, self.n)
        return tuple(coords)


@dataclass(frozen=True)
class EdgeIndexMap:
    """Bijection between the edges of a base graph and line-graph vertices.

    Edge i of the base graph (in lexicographic order) is vertex i of the
    line graph.
    """

    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        lookup = {e: i for i, e in enumerate(self.edges)}
        object.__setattr__(self, "_lookup", lookup)

    def index_of(self, u: int, v: int) -> int:
        return self._lookup[normalize_edge(u, v)]  # type: ignore[attr-defined]

    def edge_of(self, index: int) -> Edge:
        return self.edges[index]

    def __len__(self) -> int:
        return len(self.edges)


def make_complete(n: int) -> Graph:
    """Complete graph on vertices 0..n-1."""
    if n < 1:
        raise PreconditionError("complete graph needs n >= 1")
    return Graph.from_edges(n, combinations(range(n), 2))


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product with (g_i, h_j) indexed as g_i * |V(h)| + h_j.

    Two product vertices are adjacent iff they agree in one factor and
    are adjacent in the other.
    """
    if g.vertex_count == 0 or h.vertex_count == 0:
        raise PreconditionError("cartesian_product needs nonempty factors")
    m = h.vertex_count
    edges: list[Edge] = []
    for a, b in g.edges:
        for j in range(m):
            edges.append((a * m + j, b * m + j))
    for c, e in h.edges:
        for i in range(g.vertex_count):
            edges.append((i * m + c, i * m + e))
    return Graph.from_edges(g.vertex_count * m, edges)


def make_hamming(space: HammingSpace, vertex_cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    """Hamming graph on [0,n)^d: vertices adjacent iff they differ in one coordinate.

    Enumerates edges directly from the codec rather than via iterated
    products, so the two constructions can be cross-checked.
    """
    if space.size > vertex_cap:
        raise ResourceLimitError(
            f"Hamming graph would have {space.size} vertices (cap {vertex_cap})"
        )
    n, d = space.n, space.d
    edges: list[Edge] = []
    # stride of coordinate i is n^(d-1-i); bumping coordinate value by k
    # moves the index by k*stride
    for index in range(space.size):
        point = space.decode(index)
        stride = space.size // n
        for i in range(d):
            base = index - point[i] * stride
            for y in range(point[i] + 1, n):
                edges.append((index, base + y * stride))
            stride //= n
    return Graph.from_edges(space.size, edges)


def make_line_graph(g: Graph) -> tuple[Graph, EdgeIndexMap]:
    """Line graph of g plus the edge<->vertex bijection.

    Vertices of the result are the edges of g in lexicographic order;
    two are adjacent iff the underlying edges share an endpoint.
    """
    base_edges = tuple(g.edge_list())
    emap = EdgeIndexMap(base_edges)
    line_edges: list[Edge] = []
    for v in range(g.vertex_count):
        incident = [emap.index_of(v, w) for w in g.adjacency[v]]
        for a, b in combinations(sorted(incident), 2):
            line_edges.append((a, b))
    return Graph.from_edges(len(base_edges), line_edges), emap


def graph_to_text(g: Graph) -> str:
    """Serialize as "p <n> <m>" followed by "e <u> <v>" lines, u < v, sorted."""
    lines = [f"p {g.vertex_count} {g.edge_count}"]
    for u, v in g.edge_list():
        lines.append(f"e {u} {v}")
    return "\n".join(lines) + "\n"


def graph_from_text(text: str) -> Graph:
    """Parse the format written by :func:`graph_to_text`."""
    header: tuple[int, int] | None = None
    edges: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if header is not None:
                raise FormatError(f"line {lineno}: duplicate p line")
            if len(parts) != 3:
                raise FormatError(f"line {lineno}: expected 'p <vertices> <edges>'")
            header = (int(parts[1]), int(parts[2]))
        elif parts[0] == "e":
            if header is None:
                raise FormatError(f"line {lineno}: e line before p line")
            if len(parts) != 3:
                raise FormatError(f"line {lineno}: expected 'e <u> <v>'")
            edges.append((int(parts[1]), int(parts[2])))
        else:
            raise FormatError(f"line {lineno}: unknown record {parts[0]!r}")
    if header is None:
        raise FormatError("missing p line")
    try:
        g = Graph.from_edges(header[0], edges)
    except PreconditionError as exc:
        raise FormatError(str(exc)) from exc
    if g.edge_count != header[1]:
        raise FormatError(
            f"p line declares {header[1]} edges but file defines {g.edge_count}"
        )
    return g
