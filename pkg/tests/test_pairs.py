from __future__ import annotations

import pytest
from conftest import graphs
from hypothesis import given
from oracles import pair_oracle

from matchpairs.graph import Graph, complete_graph, cycle_graph, disjoint_union, path_graph
from matchpairs.matching import beta, maximum_matching
from matchpairs.pairs import (
    DisjointPair,
    InfeasibleUnionError,
    SolverLimitError,
    enumerate_m2,
    overlap,
    select_m2_overlap,
    solve,
    solve_brute,
    split_union,
)
from matchpairs.structure import s_forest, spanner_template

SPANNER_BRIDGE = (2, 7)


@pytest.mark.parametrize("g, lam, alpha", [
    (spanner_template(), 8, 4),
    (complete_graph(2), 1, 1),
    (cycle_graph(5), 4, 2),
    (path_graph(4), 3, 2),
    (cycle_graph(3), 2, 1),
    (cycle_graph(4), 4, 2),
    (Graph(3, []), 0, 0),
])
def test_solver_examples(g, lam, alpha):
    for sol in (solve(g), solve_brute(g)):
        assert (sol.lam, sol.alpha) == (lam, alpha)
        assert len(sol.witness.h) == alpha and sol.witness.size == lam


def test_brute_guard():
    with pytest.raises(SolverLimitError):
        solve_brute(complete_graph(7))


def test_disjoint_pair_rejects_overlap():
    with pytest.raises(ValueError):
        DisjointPair(path_graph(2), frozenset({(0, 1)}), frozenset({(0, 1)}))


def test_split_union_examples():
    p = split_union(path_graph(4), path_graph(4).edges)
    assert (len(p.h), len(p.h_prime)) == (2, 1)
    c4 = cycle_graph(4)
    p = split_union(c4, c4.edges)
    assert (len(p.h), len(p.h_prime)) == (2, 2)
    with pytest.raises(InfeasibleUnionError):
        split_union(cycle_graph(3), cycle_graph(3).edges)
    with pytest.raises(InfeasibleUnionError):
        split_union(complete_graph(4), [(0, 1), (0, 2), (0, 3)])


def test_m2_examples():
    k2 = complete_graph(2)
    assert [(p.h, p.h_prime) for p in enumerate_m2(k2)] == [(frozenset({(0, 1)}), frozenset())]
    c4 = cycle_graph(4)
    pairs = enumerate_m2(c4)
    assert len(pairs) == 2 and not pairs.truncated
    assert {p.h for p in pairs} == {frozenset({(0, 1), (2, 3)}), frozenset({(0, 3), (1, 2)})}
    sp = enumerate_m2(spanner_template())
    assert len(sp) == 4
    assert all(SPANNER_BRIDGE not in p.union for p in sp)


def test_m2_cap_flags_truncation():
    res = enumerate_m2(cycle_graph(4), cap=1)
    assert res.truncated and len(res) == 1


def test_select_overlap_examples():
    k2 = complete_graph(2)
    sel = select_m2_overlap(k2, [(0, 1)])
    assert len(sel) == 1 and overlap(sel[0], [(0, 1)]) == 1
    g = spanner_template()
    m = maximum_matching(g)
    sel = select_m2_overlap(g, m)
    assert len(sel) > 0 and {overlap(p, m) for p in sel} == {4}
    c4 = cycle_graph(4)
    for m in ([(0, 1), (2, 3)], [(0, 3), (1, 2)]):
        assert {overlap(p, m) for p in select_m2_overlap(c4, m)} == {2}
    with pytest.raises(ValueError):
        select_m2_overlap(c4, [(0, 1)])


@given(graphs(max_n=8, max_m=10))
def test_m2_matches_oracle(g):
    lam, alpha, m2 = pair_oracle(g)
    sol = solve(g)
    assert (sol.lam, sol.alpha) == (lam, alpha)
    got = enumerate_m2(g)
    assert not got.truncated
    assert {(p.h, p.h_prime) for p in got} == m2
    assert len(got) == len(m2)


@given(graphs(max_n=9, max_m=16))
def test_solve_matches_brute(g):
    a, b = solve(g), solve_brute(g)
    assert (a.lam, a.alpha) == (b.lam, b.alpha)


@given(graphs(max_n=10, max_m=20))
def test_sandwich_and_ratio_bound(g):
    sol, b = solve(g), beta(g)
    assert sol.alpha <= b <= sol.lam <= 2 * b
    assert 4 * b <= 5 * sol.alpha


@given(graphs(max_n=9, max_m=14))
def test_components_add_up(g):
    h = disjoint_union(g, spanner_template())
    a, b = solve(g), solve(h)
    assert (b.lam, b.alpha) == (a.lam + 8, a.alpha + 4)


# if G itself is paths and even cycles, every M2 pair covers E(G)
def test_m2_covers_path_cycle_graphs():
    for g in (path_graph(5), cycle_graph(6), disjoint_union(path_graph(4), cycle_graph(4))):
        for p in enumerate_m2(g):
            assert p.union == frozenset(g.edges)


def test_s_forest_pairs_use_u_and_l():
    g, f = s_forest(2)
    pairs = enumerate_m2(g)
    assert len(pairs) == 16
    assert all(not (p.union & f.bridges) for p in pairs)
