"""Simple undirected graphs on vertices ``0..n-1`` with bit-row adjacency.

Every construction used elsewhere in the package (complete graphs, line
graphs, complements, Kneser graphs) lives here, together with the plain-text
edge-list format.
"""

from __future__ import annotations

from itertools import combinations
from typing import Hashable, Iterable, Iterator, NamedTuple, Sequence

from .errors import InputError, ParseError

Edge = tuple[int, int]
EdgeSubset = frozenset[Edge]


class LineVertex(NamedTuple):
    """A vertex of a line graph: the base edge ``{u, v}`` with ``u < v``."""

    u: int
    v: int

    @classmethod
    def of(cls, a: int, b: int) -> LineVertex:
        if a == b:
            raise InputError(f"line vertex needs two distinct endpoints, got {a}, {b}")
        return cls(a, b) if a < b else cls(b, a)

    def __str__(self) -> str:
        return f"{self.u}-{self.v}"


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple graph.

    ``rows[v]`` is an int whose bit ``w`` is set iff ``v`` and ``w`` are
    adjacent. ``labels`` is optional; when given it has one distinct hashable
    entry per vertex (strings for user graphs, :class:`LineVertex` for line
    graphs, original ids for induced subgraphs).
    """

    __slots__ = ("n", "rows", "labels", "_edges")

    def __init__(self, n: int, rows: Sequence[int], labels: Sequence[Hashable] | None = None):
        if n < 0:
            raise InputError("vertex count must be non-negative")
        if len(rows) != n:
            raise InputError("need exactly one adjacency row per vertex")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise InputError(f"row {v} refers to a vertex >= {n}")
            if row >> v & 1:
                raise InputError(f"self-loop at vertex {v}")
            for w in iter_bits(row):
                if not rows[w] >> v & 1:
                    raise InputError(f"adjacency is not symmetric at {v},{w}")
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise InputError("labels must have length n")
            if len(set(labels)) != n:
                raise InputError("labels must be pairwise distinct")
        self.n = n
        self.rows = tuple(rows)
        self.labels = labels
        self._edges: tuple[Edge, ...] | None = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge], labels: Sequence[Hashable] | None = None) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InputError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows, labels)

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def max_degree(self) -> int:
        return max((r.bit_count() for r in self.rows), default=0)

    def edges(self) -> tuple[Edge, ...]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        if self._edges is None:
            self._edges = tuple(
                (u, v) for u in range(self.n) for v in iter_bits(self.rows[u] >> (u + 1) << (u + 1))
            )
        return self._edges

    def edge_set(self) -> EdgeSubset:
        return frozenset(self.edges())

    @property
    def m(self) -> int:
        return len(self.edges())

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def vertex_of(self, label: Hashable) -> int:
        if self.labels is None:
            raise InputError("graph has no labels")
        try:
            return self.labels.index(label)
        except ValueError:
            raise InputError(f"no vertex labelled {label!r}") from None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n)


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InputError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, [full & ~row & ~(1 << v) for v, row in enumerate(g.rows)], g.labels)


def line_graph(g: Graph) -> Graph:
    """L(g): one vertex per edge of ``g``, adjacent iff the edges share an endpoint.

    Vertex ``i`` is the ``i``-th edge of ``g.edges()`` (lexicographic), and is
    labelled by the corresponding :class:`LineVertex`.
    """
    base = g.edges()
    incident: list[int] = [0] * g.n
    for i, (u, v) in enumerate(base):
        incident[u] |= 1 << i
        incident[v] |= 1 << i
    rows = [(incident[u] | incident[v]) & ~(1 << i) for i, (u, v) in enumerate(base)]
    return Graph(len(base), rows, [LineVertex(u, v) for u, v in base])


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph induced on ``s``, relabelled ``0..|s|-1`` in increasing id order.

    New labels are the original labels when ``g`` has them, else the original ids.
    """
    keep = sorted(set(s))
    for v in keep:
        if not 0 <= v < g.n:
            raise InputError(f"vertex {v} out of range for n={g.n}")
    pos = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        row = 0
        for w in iter_bits(g.rows[v]):
            if w in pos:
                row |= 1 << pos[w]
        rows.append(row)
    labels = [g.labels[v] for v in keep] if g.labels is not None else keep
    return Graph(len(keep), rows, labels)


def kneser_2(n: int) -> Graph:
    """KG(n, 2), built as the complement of L(K_n); labels are the 2-subsets."""
    if n < 5:
        raise InputError("KG(n,2) requires n >= 5")
    return complement(line_graph(complete_graph(n)))


def subgraph_from_edges(n: int, edges: Iterable[Edge]) -> Graph:
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# edge-list text format
# ---------------------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``; ``#`` lines are comments."""
    header: tuple[int, int] | None = None
    edges: set[Edge] = set()
    seen = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected two integers, got {line!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer token in {line!r}", lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise ParseError("header counts must be non-negative", lineno)
            header = (a, b)
            continue
        n = header[0]
        if a == b:
            raise ParseError(f"loop at vertex {a}", lineno)
        if not (0 <= a < n and 0 <= b < n):
            raise ParseError(f"vertex id out of range [0, {n})", lineno)
        edges.add(norm_edge(a, b))
        seen += 1
    if header is None:
        raise ParseError("missing 'n m' header")
    if seen != header[1]:
        raise ParseError(f"header announces {header[1]} edges, found {seen}")
    return Graph.from_edges(header[0], edges)


def serialize_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_graph(path: str) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_graph(g: Graph, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize_edge_list(g))


def all_pairs(n: int) -> list[Edge]:
    return list(combinations(range(n), 2))
