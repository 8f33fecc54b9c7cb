from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import from_nx, regular_graphs, small_graphs
from oracles import brute_hamiltonian_cycles
from perfham import corpus
from perfham.graph import GraphError, complete_graph, cycle_graph, is_two_factor
from perfham.hamilton import (count_hamiltonian_cycles, find_hamiltonian_cycle, hamiltonian_cycle_edges,
                              hamiltonian_cycles, two_factors)


@given(small_graphs(max_n=8))
def test_cycles_match_permutation_search(g):
    got = list(hamiltonian_cycles(g))
    assert len(got) == len(set(got))
    assert set(got) == brute_hamiltonian_cycles(g)


@pytest.mark.parametrize("name, count", [
    ("tetrahedron", 3), ("cube", 6), ("octahedron", 16), ("dodecahedron", 30), ("icosahedron", 1280),
])
def test_platonic_cycle_counts(name, count):
    assert count_hamiltonian_cycles(corpus.load(name).graph) == count


def test_complete_graph_count():
    # (n-1)!/2
    assert count_hamiltonian_cycles(complete_graph(7)) == 360


def test_petersen_has_none():
    assert find_hamiltonian_cycle(from_nx(nx.petersen_graph())) is None


def test_grinberg_graph_has_none():
    assert count_hamiltonian_cycles(corpus.load("grinberg44").graph) == 0


def test_required_edges_filter():
    g = corpus.load("icosahedron").graph
    e = 0
    through = [c for c in hamiltonian_cycle_edges(g) if e in c]
    assert sorted(hamiltonian_cycle_edges(g, [e])) == sorted(through)


def test_forbidden_vertices():
    g = complete_graph(5)
    cyc = list(hamiltonian_cycles(g, forbidden_vertices=[4]))
    assert len(cyc) == 3 and all(4 not in c for c in cyc)


def test_incompatible_requirements():
    g = complete_graph(5)
    with pytest.raises(GraphError):
        list(hamiltonian_cycles(g, [g.edge_id(0, 1), g.edge_id(0, 2), g.edge_id(0, 3)]))
    with pytest.raises(GraphError):
        list(hamiltonian_cycles(g, [g.edge_id(0, 1)], forbidden_vertices=[1]))


def test_cycle_order_is_deterministic():
    g = corpus.load("cube").graph
    assert list(hamiltonian_cycles(g)) == list(hamiltonian_cycles(g))


@given(regular_graphs(degrees=(3, 4), max_n=10))
def test_two_factors_match_subset_search(g):
    got = [tuple(f) for f in two_factors(g)]
    assert len(got) == len(set(got))
    assert all(is_two_factor(g, f) for f in got)
    count = 0
    for es in combinations(range(g.m), g.n):
        deg = [0] * g.n
        for e in es:
            for x in g.edges[e]:
                deg[x] += 1
        if all(d == 2 for d in deg):
            count += 1
    assert len(got) == count


@given(regular_graphs(degrees=(4,), max_n=9), st.integers(3, 6))
def test_two_factor_shape_filter(g, a):
    shape = sorted([a, g.n - a])
    if shape[0] < 3:
        return
    want = [f for f in two_factors(g) if sorted(map(len, f)) == shape]
    assert list(two_factors(g, shape)) == want


def test_hamiltonian_cycles_are_two_factors_with_one_cycle():
    g = corpus.load("octahedron").graph
    ham = {c for c in hamiltonian_cycles(g)}
    single = {f[0] for f in two_factors(g) if len(f) == 1}
    assert ham == single


@given(st.integers(3, 12))
def test_cycle_graph_has_one(n):
    assert list(hamiltonian_cycles(cycle_graph(n))) == [tuple(range(n))]
