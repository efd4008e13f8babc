"""Trails, alternating paths and cycles.

Two entry points with different scope:

* ``decompose`` splits the symmetric difference of two *matchings* into its
  maximal alternating paths and (simple) even cycles;
* ``enumerate_alt_even_cycles`` lists every alternating closed trail for two
  arbitrary disjoint edge sets.  Vertices may repeat there, edges may not.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Edge, EdgeSubgraph, Graph, norm_edge
from .matching import Matching, NotAMatchingError, as_edge_set, _pairwise_disjoint
from .pairs import Enumeration, _components_of

DEFAULT_CYCLE_CAP = 10**5


@dataclass(frozen=True, eq=False)
class Trail:
    """``vertices[j-1], edges[j-1], vertices[j]`` ... with all edges distinct.

    Equality ignores direction, and for closed trails also the starting point.
    """

    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if len(self.vertices) != len(self.edges) + 1:
            raise ValueError("a trail of length n has n+1 vertices")
        for j, e in enumerate(self.edges):
            if norm_edge(self.vertices[j], self.vertices[j + 1]) != e:
                raise ValueError(f"edge {e} does not join consecutive vertices")
        if len(set(self.edges)) != len(self.edges):
            raise ValueError("a trail may not repeat an edge")

    @classmethod
    def from_vertices(cls, walk) -> "Trail":
        walk = tuple(walk)
        return cls(walk, tuple(norm_edge(a, b) for a, b in zip(walk, walk[1:])))

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def is_cycle(self) -> bool:
        return len(self.edges) > 0 and self.vertices[0] == self.vertices[-1]

    @property
    def is_path(self) -> bool:
        return len(set(self.vertices)) == len(self.vertices)

    @property
    def end_edges(self) -> tuple[Edge, ...]:
        if not self.edges:
            return ()
        return (self.edges[0], self.edges[-1])

    def canonical(self) -> tuple[Edge, ...]:
        """Lexicographically least edge sequence among the equal trails."""
        es = self.edges
        if not self.is_cycle:
            return min(es, es[::-1])
        n = len(es)
        options = []
        for seq in (es, es[::-1]):
            for r in range(n):
                options.append(seq[r:] + seq[:r])
        return min(options)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Trail):
            return NotImplemented
        return self.is_cycle == other.is_cycle and self.canonical() == other.canonical()

    def __hash__(self) -> int:
        return hash((self.is_cycle, self.canonical()))

    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)


@dataclass
class AlternatingDecomposition:
    mp_o_a: list[Trail] = field(default_factory=list)
    mp_o_b: list[Trail] = field(default_factory=list)
    mp_e: list[Trail] = field(default_factory=list)
    cycles: list[Trail] = field(default_factory=list)

    @property
    def paths(self) -> list[Trail]:
        return self.mp_o_a + self.mp_o_b + self.mp_e

    def components(self) -> list[Trail]:
        return self.paths + self.cycles

    def __len__(self) -> int:
        return len(self.paths) + len(self.cycles)


def _decompose(a: frozenset[Edge], b: frozenset[Edge]) -> AlternatingDecomposition:
    out = AlternatingDecomposition()
    for walk, ew, is_cycle in _components_of(a ^ b):
        if is_cycle:
            t = Trail(tuple(walk) + (walk[0],), tuple(ew))
            out.cycles.append(t)
            continue
        t = Trail(tuple(walk), tuple(ew))
        if len(ew) % 2 == 0:
            out.mp_e.append(t)
        elif ew[0] in a:
            out.mp_o_a.append(t)
        else:
            out.mp_o_b.append(t)
    return out


def decompose(g: Graph, a, b) -> AlternatingDecomposition:
    """Maximal A-B alternating paths and even cycles covering A △ B."""
    ae, be = as_edge_set(g, a), as_edge_set(g, b)
    if not (_pairwise_disjoint(ae) and _pairwise_disjoint(be)):
        raise NotAMatchingError("decompose needs two matchings")
    return _decompose(ae, be)


def cardinality_diff_check(a: Matching, b: Matching) -> tuple[int, int]:
    """``(|A| - |B|, |MP_o^A| - |MP_o^B|)``; the two numbers always agree."""
    d = _decompose(a.edges, b.edges)
    return len(a) - len(b), len(d.mp_o_a) - len(d.mp_o_b)


def is_alternating(t: Trail, a, b) -> bool:
    """Edges alternate between A \\ B and B \\ A (starting on either side)."""
    a, b = frozenset(a), frozenset(b)
    sides = (a - b, b - a)
    if not t.edges:
        return True
    first = 0 if t.edges[0] in sides[0] else 1
    return all(e in sides[(first + j) % 2] for j, e in enumerate(t.edges))


def enumerate_alt_even_cycles(
    g: Graph, x, y, cap: int = DEFAULT_CYCLE_CAP
) -> Enumeration:
    """All X-Y alternating even closed trails, each reported once in canonical form.

    Every such trail contains an X edge; the search roots each trail at its
    smallest X edge (by edge index) and only uses larger X edges afterwards,
    which leaves exactly the two traversal directions per trail to deduplicate.
    """
    xs, ys = as_edge_set(g, x), as_edge_set(g, y)
    if xs & ys:
        raise ValueError("X and Y must be disjoint")
    idx = {e: g.edge_index(e) for e in xs | ys}
    x_adj: dict[int, list[tuple[int, Edge]]] = {}
    y_adj: dict[int, list[tuple[int, Edge]]] = {}
    for e in sorted(xs):
        u, v = e
        x_adj.setdefault(u, []).append((v, e))
        x_adj.setdefault(v, []).append((u, e))
    for e in sorted(ys):
        u, v = e
        y_adj.setdefault(u, []).append((v, e))
        y_adj.setdefault(v, []).append((u, e))

    found: dict[tuple[Edge, ...], Trail] = {}
    truncated = False

    def extend(start: int, root_idx: int, cur: int, verts: list[int], es: list[Edge],
               used: set[Edge], want_x: bool) -> bool:
        nonlocal truncated
        table = x_adj if want_x else y_adj
        for w, e in table.get(cur, ()):
            if e in used or (want_x and idx[e] <= root_idx):
                continue
            verts.append(w)
            es.append(e)
            used.add(e)
            if not want_x and w == start:
                t = Trail(tuple(verts), tuple(es))
                key = t.canonical()
                if key not in found:
                    if len(found) >= cap:
                        truncated = True
                        return False
                    found[key] = t
            if not extend(start, root_idx, w, verts, es, used, not want_x):
                return False
            used.discard(e)
            es.pop()
            verts.pop()
        return True

    for e0 in sorted(xs, key=idx.__getitem__):
        u, v = e0
        for s, t in ((u, v), (v, u)):
            if not extend(s, idx[e0], t, [s, t], [e0], {e0}, False):
                break
        if truncated:
            break
    return Enumeration(sorted(found.values(), key=Trail.canonical), truncated)


def cycle_edge_subgraph(g: Graph, c: Trail, y) -> EdgeSubgraph:
    """The edges of ``c`` lying in ``y``, as a subgraph of ``g``."""
    ys = as_edge_set(g, y)
    return EdgeSubgraph(g, frozenset(e for e in c.edges if e in ys))
