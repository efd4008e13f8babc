"""Exact λ(G), α(G) and the optimal pair sets M₂(G), M₂(G, M).

A pair of disjoint matchings has a union ``K`` whose components are paths and
even cycles; conversely every such ``K`` splits into two disjoint matchings,
and the larger side can take ``ceil(l/2)`` edges of a path of length ``l`` and
half of every cycle.  So

    λ(G) = max |K|,   α(G) = max (|K| + #odd paths of K) / 2  over |K| = λ(G),

and ``solve`` runs a branch and bound over such edge subsets ``K``, one
connected component at a time (both quantities are additive over components).
``solve_brute`` assigns every edge to H, H' or neither and shares no code with
the search; it exists to check it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Iterator

from .graph import Edge, Graph, norm_edge
from .matching import Matching, as_edge_set, beta

BRUTE_EDGE_LIMIT = 20
DEFAULT_M2_CAP = 10**6


class InfeasibleUnionError(ValueError):
    """The edge set is not the union of two disjoint matchings."""


class SolverLimitError(RuntimeError):
    pass


@dataclass(frozen=True)
class DisjointPair:
    graph: Graph
    h: frozenset[Edge]
    h_prime: frozenset[Edge]

    def __post_init__(self):
        h = Matching(self.graph, self.h).edges
        hp = Matching(self.graph, self.h_prime).edges
        if h & hp:
            raise ValueError("H and H' share an edge")
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "h_prime", hp)

    @property
    def union(self) -> frozenset[Edge]:
        return self.h | self.h_prime

    @property
    def size(self) -> int:
        return len(self.h) + len(self.h_prime)


@dataclass
class PairSolution:
    lam: int
    alpha: int
    witness: DisjointPair
    optimal_pairs: list[DisjointPair] | None = None

    def __post_init__(self):
        assert len(self.witness.h) == self.alpha
        assert self.witness.size == self.lam
        assert 2 * self.alpha >= self.lam


@dataclass
class Enumeration:
    """A capped enumeration result; ``truncated`` is set when the cap was hit."""

    items: list = field(default_factory=list)
    truncated: bool = False

    def __iter__(self):
        return iter(self.items)

    def __len__(self) -> int:
        return len(self.items)

    def __getitem__(self, i):
        return self.items[i]


# --------------------------------------------------------------------------
# splitting a union into two matchings


def _components_of(edges: Iterable[Edge]) -> list[tuple[list[int], list[Edge], bool]]:
    """Components of an edge set of max degree 2, as (vertex walk, edge walk, is_cycle)."""
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    for v, nb in adj.items():
        if len(nb) > 2:
            raise InfeasibleUnionError(f"vertex {v} has degree {len(nb)} > 2")
    seen: set[int] = set()
    comps = []
    # paths first, walked from their lower endpoint
    for start in sorted(v for v, nb in adj.items() if len(nb) == 1):
        if start in seen:
            continue
        walk, ew = _walk(adj, start, seen)
        comps.append((walk, ew, False))
    for start in sorted(adj):
        if start in seen:
            continue
        walk, ew = _walk(adj, start, seen)
        comps.append((walk, ew, True))
    return comps


def _walk(adj, start, seen):
    walk, ew = [start], []
    seen.add(start)
    prev, cur = None, start
    while True:
        nxt = next((w for w in adj[cur] if w != prev), None)
        if nxt is None:
            break
        ew.append(norm_edge(cur, nxt))
        if nxt == start:
            break
        seen.add(nxt)
        walk.append(nxt)
        prev, cur = cur, nxt
    return walk, ew


def split_union(g: Graph, k) -> DisjointPair:
    """Split a union of paths and even cycles into (H, H') with |H| as large as possible."""
    edges = as_edge_set(g, k)
    h, hp = set(), set()
    for _walk_v, ew, is_cycle in _components_of(edges):
        if is_cycle and len(ew) % 2:
            raise InfeasibleUnionError(f"odd cycle of length {len(ew)}")
        for i, e in enumerate(ew):
            (h if i % 2 == 0 else hp).add(e)
    return DisjointPair(g, frozenset(h), frozenset(hp))


def _all_splits(g: Graph, edges: frozenset[Edge]) -> Iterator[tuple[frozenset, frozenset]]:
    """Every ordered split of a union achieving the maximum larger side."""
    comps = _components_of(edges)
    choices = []
    for _w, ew, is_cycle in comps:
        a = frozenset(ew[0::2])
        b = frozenset(ew[1::2])
        if not is_cycle and len(ew) % 2:
            choices.append(((a, b),))
        else:
            choices.append(((a, b), (b, a)))
    for combo in product(*choices):
        h = frozenset().union(*(c[0] for c in combo))
        hp = frozenset().union(*(c[1] for c in combo))
        yield h, hp


# --------------------------------------------------------------------------
# branch and bound over union subgraphs


class _UnionSearch:
    """Depth-first search over edge subsets of max degree 2 with no odd cycle.

    Works on one connected component given as local vertex ids ``0..n-1``.
    """

    def __init__(self, n: int, edges: list[tuple[int, int]], beta_bound: int):
        self.n = n
        self.edges = edges
        self.m = len(edges)
        self.beta_bound = beta_bound
        # remaining-incidence suffix counts for the degree bound
        self.rem = [[0] * n for _ in range(self.m + 1)]
        for i in range(self.m - 1, -1, -1):
            row = self.rem[i + 1][:]
            u, v = edges[i]
            row[u] += 1
            row[v] += 1
            self.rem[i] = row
        self.deg = [0] * n
        self.end = list(range(n))
        self.plen = [0] * n
        self.size = 0
        self.odd = 0
        self.chosen: list[int] = []

    def _bound(self, i: int) -> int:
        rem = self.rem[i]
        deg = self.deg
        s = 0
        for v in range(self.n):
            r = rem[v]
            if r:
                c = 2 - deg[v]
                s += c if c < r else r
        return self.size + min(s // 2, self.m - i)

    def _try_add(self, i: int):
        u, v = self.edges[i]
        deg, end, plen = self.deg, self.end, self.plen
        if deg[u] == 2 or deg[v] == 2:
            return None
        if end[u] == v and deg[u] > 0:
            if plen[u] % 2 == 0:
                return None  # would close an odd cycle
            undo = ("cycle",)
            deg[u] += 1
            deg[v] += 1
            self.odd -= 1
        else:
            eu, ev = end[u], end[v]
            lu, lv = plen[u], plen[v]
            total = lu + lv + 1
            undo = ("path", eu, ev, lu, lv)
            self.odd += (total & 1) - (lu & 1) - (lv & 1)
            end[eu], end[ev] = ev, eu
            plen[eu] = plen[ev] = total
            deg[u] += 1
            deg[v] += 1
        self.size += 1
        self.chosen.append(i)
        return undo

    def _undo(self, i: int, undo) -> None:
        u, v = self.edges[i]
        self.deg[u] -= 1
        self.deg[v] -= 1
        self.size -= 1
        self.chosen.pop()
        if undo[0] == "cycle":
            self.odd += 1
            return
        _, eu, ev, lu, lv = undo
        total = lu + lv + 1
        self.odd -= (total & 1) - (lu & 1) - (lv & 1)
        # endpoints before the merge were (eu, u) and (v, ev)
        self.end[eu], self.end[u] = u, eu
        self.end[ev], self.end[v] = v, ev
        self.plen[eu] = self.plen[u] = lu
        self.plen[ev] = self.plen[v] = lv

    def h_value(self) -> int:
        return (self.size + self.odd) // 2

    def best(self) -> tuple[int, int, list[int]]:
        """Lexicographic maximum of (|K|, larger side) and one witness."""
        self.best_val = (-1, -1)
        self.best_sel: list[int] = []
        self._best(0)
        return self.best_val[0], self.best_val[1], self.best_sel

    def _best(self, i: int) -> None:
        ub = self._bound(i)
        bs, bh = self.best_val
        if ub < bs or (ub == bs and bh >= self.beta_bound):
            return
        if i == self.m:
            val = (self.size, self.h_value())
            if val > self.best_val:
                self.best_val = val
                self.best_sel = list(self.chosen)
            return
        undo = self._try_add(i)
        if undo is not None:
            self._best(i + 1)
            self._undo(i, undo)
        self._best(i + 1)

    def all_optimal(self, lam: int, alpha: int, cap: int) -> tuple[list[list[int]], bool]:
        self.found: list[list[int]] = []
        self.target = (lam, alpha)
        self.cap = cap
        self.hit_cap = False
        self._all(0)
        return self.found, self.hit_cap

    def _all(self, i: int) -> None:
        if self.hit_cap or self._bound(i) < self.target[0]:
            return
        if i == self.m:
            if (self.size, self.h_value()) == self.target:
                if len(self.found) >= self.cap:
                    self.hit_cap = True
                    return
                self.found.append(list(self.chosen))
            return
        undo = self._try_add(i)
        if undo is not None:
            self._all(i + 1)
            self._undo(i, undo)
        self._all(i + 1)


def _component_graphs(g: Graph) -> list[tuple[list[int], list[Edge], Graph]]:
    """Non-trivial components, relabelled in BFS order so that the edge order
    used by the search saturates vertex degrees early."""
    out = []
    for comp in g.components():
        if len(comp) < 2:
            continue
        order = [comp[0]]
        pos = {comp[0]: 0}
        for v in order:
            for w in g.neighbors(v):
                if w not in pos:
                    pos[w] = len(order)
                    order.append(w)
        edges = sorted({norm_edge(pos[u], pos[w]) for u in order for w in g.neighbors(u)})
        out.append((order, edges, Graph(len(order), edges)))
    return out


def _search_for(comp_graph: Graph, edges: list[Edge]) -> _UnionSearch:
    return _UnionSearch(comp_graph.vertex_count, edges, beta(comp_graph))


def solve(g: Graph) -> PairSolution:
    """Exact λ(G) and α(G) with a witness pair from M₂(G)."""
    lam = alpha = 0
    union: set[Edge] = set()
    for comp, edges, cg in _component_graphs(g):
        s, h, sel = _search_for(cg, edges).best()
        lam += s
        alpha += h
        union.update(norm_edge(comp[edges[i][0]], comp[edges[i][1]]) for i in sel)
    witness = split_union(g, union)
    return PairSolution(lam, alpha, witness)


def enumerate_m2(g: Graph, cap: int = DEFAULT_M2_CAP) -> Enumeration:
    """All ordered pairs (H, H') with |H|+|H'| = λ(G) and |H| = α(G), up to ``cap``."""
    per_comp: list[list[frozenset[Edge]]] = []
    truncated = False
    for comp, edges, cg in _component_graphs(g):
        search = _search_for(cg, edges)
        lam, alpha, _ = search.best()
        unions, hit = search.all_optimal(lam, alpha, cap)
        truncated |= hit
        per_comp.append([
            frozenset(norm_edge(comp[edges[i][0]], comp[edges[i][1]]) for i in sel)
            for sel in unions
        ])
    pairs: list[DisjointPair] = []
    for combo in product(*per_comp):
        union = frozenset().union(*combo)
        for h, hp in _all_splits(g, union):
            if len(pairs) >= cap:
                return Enumeration(pairs, True)
            pairs.append(DisjointPair(g, h, hp))
    return Enumeration(pairs, truncated)


def select_m2_overlap(g: Graph, m, cap: int = DEFAULT_M2_CAP) -> Enumeration:
    """M₂(G, M): the optimal pairs whose union meets ``m`` in as many edges as possible."""
    medges = as_edge_set(g, m)
    Matching(g, medges)
    if len(medges) != beta(g):
        raise ValueError("M must be a maximum matching")
    m2 = enumerate_m2(g, cap)
    if not m2.items:
        return m2
    overlaps = [len(medges & p.union) for p in m2]
    best = max(overlaps)
    return Enumeration([p for p, o in zip(m2, overlaps) if o == best], m2.truncated)


def overlap(pair: DisjointPair, m) -> int:
    medges = m.edges if isinstance(m, Matching) else frozenset(norm_edge(*e) for e in m)
    return len(medges & pair.union)


# --------------------------------------------------------------------------
# exhaustive oracle


def solve_brute(g: Graph, limit: int = BRUTE_EDGE_LIMIT) -> PairSolution:
    """Assign each edge to H, H' or neither; keep the lexicographic best (|H|+|H'|, max side).

    Refuses graphs with more than ``limit`` edges; raise it knowingly (K7 needs 21).
    """
    m = g.edge_count
    if m > limit:
        raise SolverLimitError(f"brute force refused: {m} edges > {limit}")
    edges = g.edges
    best = [(-1, -1), 0, 0]

    def rec(i: int, hm: int, hpm: int, hs: int, hps: int, hmask: int, hpmask: int):
        if i == m:
            val = (hs + hps, max(hs, hps))
            if val > best[0]:
                best[0] = val
                best[1], best[2] = (hmask, hpmask) if hs >= hps else (hpmask, hmask)
            return
        u, v = edges[i]
        bit = (1 << u) | (1 << v)
        if not hm & bit:
            rec(i + 1, hm | bit, hpm, hs + 1, hps, hmask | 1 << i, hpmask)
        if not hpm & bit:
            rec(i + 1, hm, hpm | bit, hs, hps + 1, hmask, hpmask | 1 << i)
        rec(i + 1, hm, hpm, hs, hps, hmask, hpmask)

    rec(0, 0, 0, 0, 0, 0, 0)
    (lam, alpha), hmask, hpmask = best
    pick = lambda mask: frozenset(e for i, e in enumerate(edges) if mask >> i & 1)
    return PairSolution(lam, alpha, DisjointPair(g, pick(hmask), pick(hpmask)))
