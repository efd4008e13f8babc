from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from matchpairs.graph import Graph, complete_graph, cycle_graph, disjoint_union
from matchpairs.harness import POLICIES, CorpusSpec, gen_corpus
from matchpairs.matching import beta, count_perfect_matchings
from matchpairs.pairs import enumerate_m2, solve
from matchpairs.structure import (
    NotSpanningError,
    SForest,
    SpannerEmbedding,
    base_of,
    check_template,
    classify_edges,
    edge_role_pair,
    enumerate_embeddings,
    find_spanning_s_forests,
    s_forest,
    spanner_template,
    vertex_role,
)

A1, B1, C1, D1, E1 = range(5)
A2, B2, C2, D2, E2 = range(5, 10)


def test_template_numbers():
    g = spanner_template()
    assert g.vertex_count == 10 and g.edge_count == 9
    assert beta(g) == 5
    assert (solve(g).lam, solve(g).alpha) == (8, 4)
    assert count_perfect_matchings(g) == 1
    report = check_template()
    assert report["u"] == 4 and report["l"] == 4


def test_embedding_canonical_under_automorphisms():
    sides = [(A1, B1, C1, D1, E1), (A2, B2, C2, D2, E2)]
    forms = set()
    for s1, s2 in (sides, sides[::-1]):
        for f1 in (s1, s1[::-1]):
            for f2 in (s2, s2[::-1]):
                forms.add(SpannerEmbedding.make(f1, f2))
    assert len(forms) == 1


def test_embedding_counts():
    assert len(enumerate_embeddings(spanner_template())) == 1
    assert enumerate_embeddings(complete_graph(2)) == []
    assert len(enumerate_embeddings(s_forest(2)[0])) == 2


def test_spanning_forest_search():
    assert len(find_spanning_s_forests(spanner_template())) == 1
    assert len(find_spanning_s_forests(cycle_graph(10))) == 0
    assert len(find_spanning_s_forests(complete_graph(12))) == 0
    assert len(find_spanning_s_forests(Graph(0, []))) == 0
    assert len(find_spanning_s_forests(s_forest(3)[0])) == 1


def test_forest_cap():
    # both Δ chords on side 1 plus one on side 2 give 8 spanning S-forests
    g = spanner_template().with_edges([(A1, C1), (C1, E1), (A2, C2)])
    assert len(find_spanning_s_forests(g)) == 8
    res = find_spanning_s_forests(g, cap=5)
    assert res.truncated and len(res) == 5


def test_forest_rejects_overlap_and_non_edges():
    g = spanner_template()
    emb = SpannerEmbedding.make((A1, B1, C1, D1, E1), (A2, B2, C2, D2, E2))
    with pytest.raises(ValueError):
        SForest(g, (emb, emb))
    with pytest.raises(ValueError):
        SForest(Graph(10, g.edges[:-1]), (emb,))


def test_classify_spanner():
    g, f = s_forest(1)
    part = classify_edges(g, f)
    assert part.sizes() == {"u": 4, "l": 4, "delta": 0, "b": 1}
    assert part.b == {(C1, C2)}
    g2 = g.with_edges([(A1, C1)])
    part = classify_edges(g2, SForest(g2, f.embeddings))
    assert part.delta == {(A1, C1)}
    g3, f3 = s_forest(2)
    assert classify_edges(g3, f3).sizes() == {"u": 8, "l": 8, "delta": 0, "b": 2}


def test_classify_variant_drops_bridges():
    g, f = s_forest(1)
    part = classify_edges(g, f, literal_b=False)
    assert part.b == frozenset()


def test_classify_needs_spanning_forest():
    g, f = s_forest(1)
    bigger = disjoint_union(g, complete_graph(2))
    with pytest.raises(NotSpanningError):
        classify_edges(bigger, SForest(bigger, f.embeddings))


def test_roles_and_bases():
    _, f = s_forest(1)
    assert vertex_role(f, A1) == 1 and base_of(f, A1) == C1
    assert vertex_role(f, B1) == 2
    assert vertex_role(f, C2) == 3
    assert base_of(f, E2) == C2
    with pytest.raises(ValueError):
        base_of(f, B1)
    assert f.forest_neighbor(A1) == B1 and f.forest_neighbor(E2) == D2


def test_edge_role_pairs():
    g, f = s_forest(2)
    part = classify_edges(g, f)
    assert {edge_role_pair(f, e) for e in f.bridges} == {(3, 3)}
    assert {edge_role_pair(f, e) for e in part.u} == {(1, 2)}
    assert {edge_role_pair(f, e) for e in part.l} == {(2, 3)}


@pytest.mark.parametrize("k", [1, 2, 3])
def test_s_forest_parameters(k):
    g, f = s_forest(k)
    sol = solve(g)
    assert sol.lam == 2 * sol.alpha == 8 * k
    assert beta(g) == 5 * k
    assert count_perfect_matchings(g) == 1


@pytest.mark.parametrize("k", [1, 2])
def test_m2_pairs_are_u_and_l(k):
    g, f = s_forest(k)
    part = classify_edges(g, f)
    for p in enumerate_m2(g):
        assert p.union == part.u | part.l


def test_inner_vertices_covered_twice_and_ones_missed():
    g, f = s_forest(1)
    pairs = list(enumerate_m2(g))
    cov = lambda es: {v for e in es for v in e}
    for p in pairs:
        inner = {v for v in g.vertices() if f.role[v] > 1}
        assert inner <= cov(p.h) and inner <= cov(p.h_prime)
    for v in f.vertices_with_role(1):
        assert any(v not in cov(p.h) for p in pairs)
        assert any(v not in cov(p.h_prime) for p in pairs)


@given(st.sampled_from(POLICIES), st.integers(1, 2), st.integers(0, 10**6))
def test_partition_and_beta_on_s_graphs(policy, k, seed):
    for item in gen_corpus(CorpusSpec("s_graph", k, policy, 2, seed)):
        g, f = item.graph, item.forest
        part = classify_edges(g, f)
        sets = (part.u, part.l, part.delta, part.b)
        assert sum(map(len, sets)) == g.edge_count
        assert frozenset().union(*sets) == frozenset(g.edges)
        assert f.bridges <= part.b
        assert beta(g) == 5 * k
