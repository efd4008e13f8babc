"""The spanner, its embeddings, spanning S-forests and the U/L/Δ/B edge classes.

The spanner is two paths of length four (its *sides*) ``a-b-c-d-e`` whose
middle vertices are joined by a *bridge*.  Within the spanner, ``a, e`` are
1-vertices, ``b, d`` are 2-vertices and ``c`` is the 3-vertex; the *base* of a
vertex is the 3-vertex on its side.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .graph import Edge, Graph, disjoint_union, norm_edge
from .matching import beta, count_perfect_matchings
from .pairs import Enumeration, enumerate_m2, solve

DEFAULT_FOREST_CAP = 10**4

# side 1 = 0..4, side 2 = 5..9, both listed a, b, c, d, e
_SIDE_ROLES = (1, 2, 3, 2, 1)


class TemplateError(AssertionError):
    pass


class NotSpanningError(ValueError):
    pass


def spanner_template() -> Graph:
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (5, 6), (6, 7), (7, 8), (8, 9), (2, 7)]
    return Graph(10, edges)


@dataclass(frozen=True)
class SpannerEmbedding:
    """A spanner inside a host graph, stored as its two sides ``(a, b, c, d, e)``.

    Use ``SpannerEmbedding.make`` to get the canonical representative under
    the spanner's eight automorphisms.
    """

    side1: tuple[int, int, int, int, int]
    side2: tuple[int, int, int, int, int]

    @classmethod
    def make(cls, side1, side2) -> "SpannerEmbedding":
        s1 = tuple(side1) if side1[0] < side1[4] else tuple(side1[::-1])
        s2 = tuple(side2) if side2[0] < side2[4] else tuple(side2[::-1])
        if s1[2] > s2[2]:
            s1, s2 = s2, s1
        return cls(s1, s2)

    @property
    def sides(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return (self.side1, self.side2)

    @property
    def vertices(self) -> tuple[int, ...]:
        return self.side1 + self.side2

    @property
    def bridge(self) -> Edge:
        return norm_edge(self.side1[2], self.side2[2])

    @property
    def edges(self) -> frozenset[Edge]:
        out = {self.bridge}
        for s in self.sides:
            out.update(norm_edge(s[i], s[i + 1]) for i in range(4))
        return frozenset(out)

    def roles(self) -> dict[int, int]:
        return {v: _SIDE_ROLES[i] for s in self.sides for i, v in enumerate(s)}

    def bases(self) -> dict[int, int]:
        return {v: s[2] for s in self.sides for v in s}

    def mask(self) -> int:
        return sum(1 << v for v in self.vertices)


@dataclass(frozen=True)
class SForest:
    host: Graph
    embeddings: tuple[SpannerEmbedding, ...]

    def __post_init__(self):
        object.__setattr__(self, "embeddings", tuple(sorted(self.embeddings, key=lambda s: s.vertices)))
        seen: set[int] = set()
        for emb in self.embeddings:
            vs = set(emb.vertices)
            if vs & seen:
                raise ValueError("spanners of an S-forest must be vertex-disjoint")
            seen |= vs
            missing = [e for e in emb.edges if not self.host.has_edge(*e)]
            if missing:
                raise ValueError(f"embedding uses non-edges {missing}")

    @property
    def k(self) -> int:
        return len(self.embeddings)

    @cached_property
    def role(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for emb in self.embeddings:
            out.update(emb.roles())
        return out

    @cached_property
    def base(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for emb in self.embeddings:
            out.update(emb.bases())
        return out

    @cached_property
    def edges(self) -> frozenset[Edge]:
        return frozenset().union(*(emb.edges for emb in self.embeddings))

    @property
    def bridges(self) -> frozenset[Edge]:
        return frozenset(emb.bridge for emb in self.embeddings)

    @property
    def is_spanning(self) -> bool:
        return len(self.role) == self.host.vertex_count

    def vertices_with_role(self, r: int) -> list[int]:
        return sorted(v for v, x in self.role.items() if x == r)

    def forest_neighbor(self, v: int) -> int:
        """The unique F-neighbour of a 1-vertex."""
        for emb in self.embeddings:
            for s in emb.sides:
                if s[0] == v:
                    return s[1]
                if s[4] == v:
                    return s[3]
        raise ValueError(f"{v} is not a 1-vertex of the forest")

    def forest_graph(self) -> Graph:
        return Graph(self.host.vertex_count, self.edges)


@dataclass(frozen=True)
class EdgePartition:
    u: frozenset[Edge]
    l: frozenset[Edge]  # noqa: E741
    delta: frozenset[Edge]
    b: frozenset[Edge]

    def sizes(self) -> dict[str, int]:
        return {"u": len(self.u), "l": len(self.l), "delta": len(self.delta), "b": len(self.b)}


def s_forest(k: int) -> tuple[Graph, SForest]:
    """Disjoint union of ``k`` spanners with its own (unique) S-forest."""
    g = disjoint_union(*[spanner_template()] * k)
    embs = [
        SpannerEmbedding.make(tuple(range(10 * i, 10 * i + 5)), tuple(range(10 * i + 5, 10 * i + 10)))
        for i in range(k)
    ]
    return g, SForest(g, tuple(embs))


# --------------------------------------------------------------------------
# search


def enumerate_embeddings(g: Graph) -> list[SpannerEmbedding]:
    """Every copy of the spanner in ``g`` (not necessarily induced), canonical, sorted."""
    found: set[SpannerEmbedding] = set()
    for c1, c2 in g.edges:
        if g.degree(c1) < 3 or g.degree(c2) < 3:
            continue
        for side1 in _sides(g, c1, {c1, c2}):
            used = {c2, *side1}
            for side2 in _sides(g, c2, used):
                found.add(SpannerEmbedding.make(side1, side2))
    return sorted(found, key=lambda s: s.vertices)


def _sides(g: Graph, c: int, used: set[int]):
    """Paths a-b-c-d-e through ``c`` avoiding ``used`` (one orientation each)."""
    nb = [w for w in g.neighbors(c) if w not in used]
    for i, b in enumerate(nb):
        for d in nb[i + 1:]:
            blocked = used | {b, d}
            for a in g.neighbors(b):
                if a in blocked:
                    continue
                for e in g.neighbors(d):
                    if e in blocked or e == a:
                        continue
                    yield (a, b, c, d, e)


def find_spanning_s_forests(g: Graph, cap: int = DEFAULT_FOREST_CAP) -> Enumeration:
    """All sets of vertex-disjoint spanners covering V(g) (exact cover by backtracking)."""
    n = g.vertex_count
    if n == 0 or n % 10:
        return Enumeration([], False)
    embs = enumerate_embeddings(g)
    by_vertex: list[list[SpannerEmbedding]] = [[] for _ in range(n)]
    masks = {emb: emb.mask() for emb in embs}
    for emb in embs:
        for v in emb.vertices:
            by_vertex[v].append(emb)
    full = (1 << n) - 1
    out: list[SForest] = []
    truncated = False

    def cover(covered: int, chosen: list[SpannerEmbedding]) -> bool:
        nonlocal truncated
        if covered == full:
            if len(out) >= cap:
                truncated = True
                return False
            out.append(SForest(g, tuple(chosen)))
            return True
        free = ~covered & full
        v = (free & -free).bit_length() - 1
        for emb in by_vertex[v]:
            if masks[emb] & covered:
                continue
            chosen.append(emb)
            ok = cover(covered | masks[emb], chosen)
            chosen.pop()
            if not ok:
                return False
        return True

    cover(0, [])
    return Enumeration(out, truncated)


# --------------------------------------------------------------------------
# roles and edge classes


def vertex_role(f: SForest, v: int) -> int:
    return f.role[v]


def base_of(f: SForest, v: int) -> int:
    if f.role.get(v) != 1:
        raise ValueError(f"base_of needs a 1-vertex, {v} has role {f.role.get(v)}")
    return f.base[v]


def edge_role_pair(f: SForest, e: tuple[int, int]) -> tuple[int, int]:
    i, j = f.role[e[0]], f.role[e[1]]
    return (i, j) if i <= j else (j, i)


def classify_edges(g: Graph, f: SForest, literal_b: bool = True) -> EdgePartition:
    """Split E(g) into U(F), L(F), Δ(G,F) and B(G,F).

    With ``literal_b=False`` the forest's own bridges are dropped from B, so
    the four sets no longer cover E(g).
    """
    if not f.is_spanning or f.host != g:
        raise NotSpanningError("classify_edges needs a spanning S-forest of g")
    role, base = f.role, f.base
    u = frozenset(e for e in f.edges if role[e[0]] == 1 or role[e[1]] == 1)
    l = frozenset(e for e in f.edges - u if role[e[0]] == 2 or role[e[1]] == 2)  # noqa: E741
    delta = frozenset(
        (x, y) for x, y in g.edges
        if (role[x] == 1 and base[x] == y) or (role[y] == 1 and base[y] == x)
    )
    b = frozenset(g.edges) - u - l - delta
    if not literal_b:
        b -= f.edges
    return EdgePartition(u, l, delta, b)


# --------------------------------------------------------------------------
# template self-check


def check_template() -> dict[str, object]:
    """Recompute the spanner's defining numbers; raise ``TemplateError`` on mismatch."""
    g = spanner_template()
    _, f = s_forest(1)
    part = classify_edges(g, f)
    sol = solve(g)
    m2 = enumerate_m2(g)
    report = {
        "degrees": sorted(g.degree(v) for v in g.vertices()),
        "beta": beta(g),
        "lambda": sol.lam,
        "alpha": sol.alpha,
        "perfect_matchings": count_perfect_matchings(g),
        "u": len(part.u),
        "l": len(part.l),
        "bridge_in_some_m2_pair": any(f.bridges & p.union for p in m2),
        "embeddings": len(enumerate_embeddings(g)),
    }
    expected = {
        "degrees": [1, 1, 1, 1, 2, 2, 2, 2, 3, 3],
        "beta": 5, "lambda": 8, "alpha": 4, "perfect_matchings": 1,
        "u": 4, "l": 4, "bridge_in_some_m2_pair": False, "embeddings": 1,
    }
    bad = {k: (report[k], v) for k, v in expected.items() if report[k] != v}
    if bad:
        raise TemplateError(f"spanner template self-check failed (got, expected): {bad}")
    return report
