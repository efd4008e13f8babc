"""Matching-theory properties as hypothesis tests, 500 examples each."""

from __future__ import annotations

from collections import Counter

from conftest import graph_with_two_matchings, graphs
from hypothesis import event, given, settings
from hypothesis import strategies as st
from oracles import all_matchings

from matchpairs.alternating import decompose, enumerate_alt_even_cycles, is_alternating
from matchpairs.characterization import check_condition_c, check_condition_c_variant
from matchpairs.graph import Graph
from matchpairs.matching import Matching, maximum_matching
from matchpairs.pairs import enumerate_m2, solve
from matchpairs.structure import SForest, classify_edges, edge_role_pair, s_forest, spanner_template

TRIALS = settings(max_examples=500)


@TRIALS
@given(graph_with_two_matchings())
def test_cycle_degrees_balance(case):
    g, a, b = case
    for c in decompose(g, a, b).cycles:
        deg_a, deg_b = Counter(), Counter()
        for e in c.edges:
            (deg_a if e in a else deg_b).update(e)
        assert all(deg_a[v] == deg_b[v] for v in c.vertex_set())


@TRIALS
@given(graph_with_two_matchings())
def test_decomposition_covers_symmetric_difference(case):
    g, a, b = case
    d = decompose(g, a, b)
    seen: list = [e for t in d.components() for e in t.edges]
    assert len(seen) == len(set(seen))
    assert set(seen) == a ^ b
    for t in d.components():
        assert is_alternating(t, a, b)
    for t in d.cycles:
        assert len(set(t.vertices)) == t.length  # simple
    # maximality: no path end can be extended by an unused A or B edge
    for t in d.paths:
        for end, last in ((t.vertices[0], t.edges[0]), (t.vertices[-1], t.edges[-1])):
            other = b if last in a else a
            assert not any(end in e for e in other - a.intersection(b) if e != last)


@TRIALS
@given(graph_with_two_matchings())
def test_parity_edge_counts(case):
    g, a, b = case
    d = decompose(g, a, b)
    count = lambda t, s: sum(e in s for e in t.edges)
    for t in d.mp_e + d.cycles:
        assert count(t, a) == count(t, b)
    for t in d.mp_o_a:
        assert count(t, a) == count(t, b) + 1
    for t in d.mp_o_b:
        assert count(t, b) == count(t, a) + 1


@TRIALS
@given(graph_with_two_matchings())
def test_cardinality_difference(case):
    g, a, b = case
    d = decompose(g, a, b)
    assert len(a) - len(b) == len(d.mp_o_a) - len(d.mp_o_b)


@TRIALS
@given(graph_with_two_matchings())
def test_berge_no_h_start_odd_paths(case):
    g, _, h = case
    m = maximum_matching(g)
    d = decompose(g, m, h)
    assert d.mp_o_b == []
    assert len(m) - len(h) == len(d.mp_o_a)


@TRIALS
@given(graphs(max_n=9, max_m=14))
def test_m2_has_no_odd_h_prime_paths(g):
    for p in enumerate_m2(g):
        assert decompose(g, p.h, p.h_prime).mp_o_b == []


@st.composite
def _even_heavy_graphs(draw):
    # unions of even cycles and paths make λ = 2α common
    if draw(st.booleans()):
        return draw(graphs(max_n=8, max_m=10))
    n = draw(st.integers(2, 9))
    perm = draw(st.permutations(range(n)))
    edges = {tuple(sorted((perm[i], perm[i + 1]))) for i in range(n - 1)}
    if draw(st.booleans()) and n % 2 == 0 and n >= 4:
        edges.add(tuple(sorted((perm[0], perm[-1]))))
    extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=2))
    edges |= {tuple(sorted(e)) for e in extra if e[0] != e[1]}
    return Graph(n, sorted(edges))


@TRIALS
@given(_even_heavy_graphs())
def test_lambda_twice_alpha_means_no_odd_paths(g):
    sol = solve(g)
    if sol.lam != 2 * sol.alpha:
        event("lambda != 2 alpha")
        return
    event("lambda == 2 alpha")
    m2 = {(p.h, p.h_prime) for p in enumerate_m2(g)}
    ms = all_matchings(list(g.edges))
    for h in ms:
        for hp in ms:
            if h & hp or len(h) + len(hp) != sol.lam:
                continue
            assert decompose(g, h, hp).mp_o_a == decompose(g, h, hp).mp_o_b == []
            assert (h, hp) in m2


@st.composite
def s_graph_instances(draw):
    """An S-forest with a few random extra edges, and the construction forest."""
    k = draw(st.integers(1, 2))
    g0, f0 = s_forest(k)
    non_edges = [(u, v) for u in g0.vertices() for v in range(u + 1, g0.vertex_count)
                 if not g0.has_edge(u, v)]
    extra = draw(st.lists(st.sampled_from(non_edges), unique=True, max_size=6))
    g = g0.with_edges(extra)
    return g, SForest(g, f0.embeddings)


@TRIALS
@given(s_graph_instances())
def test_two_two_equals_three_three_on_l_b_cycles(case):
    g, f = case
    part = classify_edges(g, f)
    cycles = enumerate_alt_even_cycles(g, part.l, part.b)
    assert not cycles.truncated
    event(f"cycles: {min(len(cycles), 3)}{'+' if len(cycles) >= 3 else ''}")
    for c in cycles:
        roles = Counter(edge_role_pair(f, e) for e in c.edges)
        assert roles[(2, 2)] == roles[(3, 3)]


@TRIALS
@given(s_graph_instances())
def test_condition_c_variants_agree(case):
    g, f = case
    part = classify_edges(g, f)
    a, b = check_condition_c(g, f, part), check_condition_c_variant(g, f, part)
    event(f"condition (c): {a.status}")
    assert a.status == b.status


def test_berge_on_fixed_matching_type():
    g = spanner_template()
    m = maximum_matching(g)
    h = Matching(g, frozenset({(1, 2), (6, 7)}))
    assert decompose(g, m, h).mp_o_b == []
