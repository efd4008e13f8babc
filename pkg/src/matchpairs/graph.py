"""Simple undirected graphs, graph6 / edge-list I/O and a few elementary queries.

Vertices are dense integers ``0..n-1``.  Edges are stored as normalized
``(u, v)`` tuples with ``u < v``; the position of an edge in ``Graph.edges``
(which is sorted) is its *edge index* and fixes every tie-break used elsewhere
in the package.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator

Edge = tuple[int, int]

MAX_GRAPH6_ORDER = 62


class GraphFormatError(ValueError):
    """Raised when a graph6 line or an edge-list document cannot be decoded."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph on vertices ``0..vertex_count-1``."""

    __slots__ = ("_n", "_edges", "_adj", "_index")

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]] = ()):
        if vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        seen: set[Edge] = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge ({u}, {v}) out of range for n={vertex_count}")
            e = norm_edge(u, v)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        self._n = vertex_count
        self._edges = tuple(sorted(seen))
        self._index = {e: i for i, e in enumerate(self._edges)}
        adj: list[list[int]] = [[] for _ in range(vertex_count)]
        for u, v in self._edges:
            adj[u].append(v)
            adj[v].append(u)
        self._adj = tuple(tuple(sorted(a)) for a in adj)

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def vertices(self) -> range:
        return range(self._n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self._index

    def edge_index(self, e: tuple[int, int]) -> int:
        return self._index[norm_edge(*e)]

    def check_edges(self, edges: Iterable[tuple[int, int]]) -> frozenset[Edge]:
        """Normalize ``edges`` and verify each belongs to the graph."""
        out = set()
        for e in edges:
            ne = norm_edge(*e)
            if ne not in self._index:
                raise ValueError(f"edge {ne} is not an edge of the graph")
            out.add(ne)
        return frozenset(out)

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> "Graph":
        return Graph(self._n, list(self._edges) + [norm_edge(*e) for e in extra])

    def relabel(self, perm: list[int]) -> "Graph":
        """Graph whose vertex ``perm[v]`` plays the role of ``v``."""
        return Graph(self._n, [(perm[u], perm[v]) for u, v in self._edges])

    def components(self) -> list[list[int]]:
        """Vertex sets of connected components, each sorted, ordered by least vertex."""
        seen = [False] * self._n
        comps = []
        for s in range(self._n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            stack = [s]
            while stack:
                v = stack.pop()
                for w in self._adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={len(self._edges)})"


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.vertex_count
    return Graph(offset, edges)


@dataclass(frozen=True)
class EdgeSubgraph:
    """A subset of a parent graph's edges, viewed as a graph on the covered vertices."""

    parent: Graph
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "edges", self.parent.check_edges(self.edges))

    def vertices(self) -> list[int]:
        return sorted({v for e in self.edges for v in e})

    def __len__(self) -> int:
        return len(self.edges)


# --------------------------------------------------------------------------
# graph6


def parse_graph6(line: str) -> Graph:
    """Decode a short-form graph6 line (``n <= 62``)."""
    data = line.strip()
    if data.startswith(">>graph6<<"):
        data = data[10:]
    if not data:
        raise GraphFormatError("empty graph6 line", 0)
    for i, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"character {ch!r} out of graph6 range", i)
    n = ord(data[0]) - 63
    if n > MAX_GRAPH6_ORDER:
        raise GraphFormatError("long-form graph6 header (n > 62) is not supported", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[1:]
    if len(body) != nbytes:
        raise GraphFormatError(
            f"expected {nbytes} adjacency bytes for n={n}, got {len(body)}",
            min(len(data), 1 + nbytes),
        )
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    if nbits % 6:
        pad = 6 - nbits % 6
        if (ord(body[-1]) - 63) & ((1 << pad) - 1):
            raise GraphFormatError("nonzero padding bits", len(data) - 1)
    return Graph(n, edges)


def to_graph6(g: Graph) -> str:
    n = g.vertex_count
    if n > MAX_GRAPH6_ORDER:
        raise ValueError(f"graph6 short form supports n <= {MAX_GRAPH6_ORDER}, got {n}")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(63 + n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(63 + val))
    return "".join(out)


def iter_graph6(lines: Iterable[str]) -> Iterator[tuple[int, str, Graph | GraphFormatError]]:
    """Yield ``(line_number, raw, graph_or_error)`` for each non-blank line."""
    for lineno, raw in enumerate(lines, 1):
        raw = raw.strip()
        if not raw:
            continue
        try:
            yield lineno, raw, parse_graph6(raw)
        except GraphFormatError as exc:
            yield lineno, raw, exc


# --------------------------------------------------------------------------
# edge lists


def parse_edge_list(text: str) -> Graph:
    """Parse ``n`` followed by one ``u v`` pair per line; ``#`` starts a comment."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise GraphFormatError("missing vertex count")
    lineno, head = rows[0]
    if len(head) != 1 or not head[0].isdigit():
        raise GraphFormatError(f"line {lineno}: first token must be the vertex count")
    n = int(head[0])
    seen: set[Edge] = set()
    for lineno, toks in rows[1:]:
        if len(toks) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(toks[0]), int(toks[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer vertex id") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {lineno}: vertex id out of range")
        if u == v:
            raise GraphFormatError(f"line {lineno}: loop at {u}")
        e = norm_edge(u, v)
        if e in seen:
            raise GraphFormatError(f"line {lineno}: duplicate edge {e}")
        seen.add(e)
    return Graph(n, seen)


def to_edge_list(g: Graph) -> str:
    return "\n".join([str(g.vertex_count)] + [f"{u} {v}" for u, v in g.edges]) + "\n"


# --------------------------------------------------------------------------
# queries


@dataclass(frozen=True)
class BipartiteCheck:
    bipartite: bool
    coloring: dict[int, int] | None = None
    odd_cycle: tuple[int, ...] | None = None  # closed walk, first == last

    def __bool__(self) -> bool:
        return self.bipartite


def is_bipartite(sub: EdgeSubgraph | Iterable[tuple[int, int]]) -> BipartiteCheck:
    """2-colour the covered vertices, or return an odd closed walk as witness."""
    edges = sub.edges if isinstance(sub, EdgeSubgraph) else {norm_edge(*e) for e in sub}
    adj: dict[int, list[int]] = {}
    for u, v in sorted(edges):
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    color: dict[int, int] = {}
    parent: dict[int, int] = {}
    for s in sorted(adj):
        if s in color:
            continue
        color[s] = 0
        parent[s] = -1
        q = deque([s])
        while q:
            v = q.popleft()
            for w in adj[v]:
                if w not in color:
                    color[w] = 1 - color[v]
                    parent[w] = v
                    q.append(w)
                elif color[w] == color[v]:
                    return BipartiteCheck(False, odd_cycle=_odd_cycle(parent, v, w))
    return BipartiteCheck(True, coloring=color)


def _odd_cycle(parent: dict[int, int], v: int, w: int) -> tuple[int, ...]:
    def chain(x):
        out = [x]
        while parent[x] != -1:
            x = parent[x]
            out.append(x)
        return out

    pv, pw = chain(v), chain(w)
    on_w = set(pw)
    lca = next(x for x in pv if x in on_w)
    left = pv[: pv.index(lca) + 1]
    right = pw[: pw.index(lca)]
    # v .. lca .. w, then back to v along the conflicting edge
    return tuple(left + right[::-1] + [v])


def isolated_vertices(g: Graph) -> list[int]:
    return [v for v in g.vertices() if g.degree(v) == 0]


def path_graph(k: int) -> Graph:
    """Path on ``k`` vertices."""
    return Graph(k, [(i, i + 1) for i in range(k - 1)])


def cycle_graph(k: int) -> Graph:
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def complete_graph(k: int) -> Graph:
    return Graph(k, [(i, j) for i in range(k) for j in range(i + 1, k)])
