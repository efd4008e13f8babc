"""Matchings: validation, maximum cardinality matching, augmenting paths, counting.

Maximum matching uses Edmonds' blossom-shrinking augmenting-path search, so it
is exact on general (non-bipartite) graphs.  The returned witness is the
lexicographically least maximum matching under edge-index order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .graph import Edge, Graph, norm_edge


class NotAMatchingError(ValueError):
    pass


@dataclass(frozen=True)
class Matching:
    graph: Graph
    edges: frozenset[Edge]

    def __post_init__(self):
        edges = self.graph.check_edges(self.edges)
        if not _pairwise_disjoint(edges):
            raise NotAMatchingError("edge set contains adjacent edges")
        object.__setattr__(self, "edges", edges)

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[Edge]:
        return iter(sorted(self.edges))

    def __contains__(self, e) -> bool:
        return norm_edge(*e) in self.edges

    def covers(self, v: int) -> bool:
        return any(v in e for e in self.edges)

    def mate(self, v: int) -> int | None:
        for a, b in self.edges:
            if a == v:
                return b
            if b == v:
                return a
        return None


def _pairwise_disjoint(edges: Iterable[Edge]) -> bool:
    seen: set[int] = set()
    for u, v in edges:
        if u in seen or v in seen:
            return False
        seen.add(u)
        seen.add(v)
    return True


def as_edge_set(g: Graph, edges) -> frozenset[Edge]:
    if isinstance(edges, Matching):
        return edges.edges
    return g.check_edges(edges)


def is_matching(g: Graph, edges) -> bool:
    """True iff ``edges`` (all of which must lie in ``g``) are pairwise vertex-disjoint."""
    return _pairwise_disjoint(as_edge_set(g, edges))


# --------------------------------------------------------------------------
# Edmonds' blossom algorithm (cardinality version)


def _find_augmenting(
    adj: list[list[int]], match: list[int], root: int
) -> tuple[int, list[int]]:
    """BFS from a free ``root``; returns the free end of an augmenting path
    (or -1) together with the parent pointers that trace it back."""
    n = len(adj)
    used = [False] * n
    parent = [-1] * n
    base = list(range(n))
    used[root] = True
    q = deque([root])

    def lca(a: int, b: int) -> int:
        mark = [False] * n
        while True:
            a = base[a]
            mark[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if mark[b]:
                return b
            b = parent[match[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    while q:
        v = q.popleft()
        for to in adj[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                cur = lca(v, to)
                blossom = [False] * n
                mark_path(v, cur, to, blossom)
                mark_path(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            q.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    return to, parent
                used[match[to]] = True
                q.append(match[to])
    return -1, parent


def _augment(match: list[int], end: int, parent: list[int]) -> None:
    v = end
    while v != -1:
        pv = parent[v]
        ppv = match[pv]
        match[v] = pv
        match[pv] = v
        v = ppv


def _adjacency(g: Graph, removed: frozenset[int] = frozenset()) -> list[list[int]]:
    return [
        [] if v in removed else [w for w in g.neighbors(v) if w not in removed]
        for v in g.vertices()
    ]


def _maximize(adj: list[list[int]], match: list[int]) -> list[int]:
    # greedy warm start keeps the number of blossom searches small
    for v in range(len(adj)):
        if match[v] == -1:
            for w in adj[v]:
                if match[w] == -1:
                    match[v], match[w] = w, v
                    break
    for v in range(len(adj)):
        if match[v] == -1 and adj[v]:
            end, parent = _find_augmenting(adj, match, v)
            if end != -1:
                _augment(match, end, parent)
    return match


def _matching_size(g: Graph, removed: frozenset[int] = frozenset()) -> int:
    match = _maximize(_adjacency(g, removed), [-1] * g.vertex_count)
    return sum(1 for v, w in enumerate(match) if w > v)


def beta(g: Graph) -> int:
    """Size of a maximum matching."""
    return _matching_size(g)


def maximum_matching(g: Graph) -> Matching:
    """Lexicographically least maximum matching (edges compared by index)."""
    target = beta(g)
    removed: set[int] = set()
    chosen = []
    for u, v in g.edges:
        if len(chosen) == target:
            break
        if u in removed or v in removed:
            continue
        trial = frozenset(removed | {u, v})
        if 1 + len(chosen) + _matching_size(g, trial) == target:
            chosen.append((u, v))
            removed = set(trial)
    return Matching(g, frozenset(chosen))


def has_augmenting_path(g: Graph, m) -> bool:
    """True iff some path alternating w.r.t. ``m`` joins two vertices missed by ``m``."""
    edges = as_edge_set(g, m)
    if not _pairwise_disjoint(edges):
        raise NotAMatchingError("edge set contains adjacent edges")
    match = [-1] * g.vertex_count
    for u, v in edges:
        match[u], match[v] = v, u
    adj = _adjacency(g)
    for v in g.vertices():
        if match[v] == -1 and adj[v]:
            if _find_augmenting(adj, match, v)[0] != -1:
                return True
    return False


def count_perfect_matchings(g: Graph) -> int:
    """Exact count: eliminate the lowest remaining vertex against each neighbour."""
    n = g.vertex_count
    if n % 2:
        return 0
    nbr = [sum(1 << w for w in g.neighbors(v)) for v in g.vertices()]

    @lru_cache(maxsize=None)
    def count(mask: int) -> int:
        if mask == 0:
            return 1
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        opts = nbr[v] & rest
        total = 0
        while opts:
            low = opts & -opts
            total += count(rest & ~low)
            opts ^= low
        return total

    return count((1 << n) - 1)
