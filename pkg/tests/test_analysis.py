import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from perfham import corpus
from perfham.analysis import (all_two_factors_bridgeless, bridge_in_remainder, euler_stats,
                              hamiltonian_pair_census, is_charonian, is_strongly_charonian,
                              verify_ph_connectivity)
from perfham.constructions import charonian_chain
from perfham.factorisation import enumerate_factorisations, perfect_pairs
from perfham.graph import Graph, GraphError, complete_graph, cycle_edge_ids, diamonds
from perfham.hamilton import count_hamiltonian_cycles, hamiltonian_cycles

from conftest import small_graphs
from oracles import brute_bridges, brute_hamiltonian_cycles

# found by sweeping random 5-regular graphs on 10 vertices; frozen here
NON_CHARONIAN = Graph(10, [
    (0, 1), (0, 3), (0, 5), (0, 8), (0, 9), (1, 2), (1, 4), (1, 6), (1, 9), (2, 3), (2, 4), (2, 6), (2, 7),
    (3, 4), (3, 5), (3, 6), (4, 8), (4, 9), (5, 6), (5, 7), (5, 8), (6, 7), (7, 8), (7, 9), (8, 9)])


def remainder_bridges(g, cyc):
    return brute_bridges(g.delete_edges(cycle_edge_ids(g, cyc)))


@given(small_graphs(2, 9), st.data())
def test_bridge_in_remainder_matches_oracle(g, data):
    removed = data.draw(st.sets(st.sampled_from(range(g.m)))) if g.m else set()
    got = bridge_in_remainder(g, removed)
    keep = [e for e in range(g.m) if e not in removed]
    expect = {keep[b] for b in brute_bridges(g.delete_edges(removed))}
    assert got == (min(expect) if expect else None)


# ---------------------------------------------------------------- charonian


def test_icosahedron_is_strongly_charonian():
    ico = corpus.load("icosahedron").graph
    v = is_strongly_charonian(ico)
    assert v.holds is True and v.counterexample is None
    assert is_charonian(ico).holds


def test_icosahedron_all_two_factors():
    v = all_two_factors_bridgeless(corpus.load("icosahedron").graph)
    assert v.holds is True and v.checked > 0
    assert v.kind == "2-factor"


def test_k6_is_charonian():
    v = is_charonian(complete_graph(6))
    assert v.holds and v.checked == 60


def test_non_charonian_certificate():
    g = NON_CHARONIAN
    assert g.regularity() == 5
    v = is_charonian(g)
    assert v.holds is False
    cyc = v.counterexample
    assert sorted(cyc) == list(range(g.n))
    rest = g.delete_edges(cycle_edge_ids(g, cyc))
    assert brute_bridges(rest)
    assert g.edges[v.bridge] not in {tuple(sorted(p)) for p in zip(cyc, cyc[1:] + cyc[:1])}
    assert not is_strongly_charonian(g)


@pytest.mark.slow
def test_sampled_cycles_recheck_independently():
    g = charonian_chain(*chain_args(), 2).graph
    v = is_charonian(g)
    assert v.holds
    rnd = random.Random(3)
    pool = []
    for i, cyc in enumerate(hamiltonian_cycles(g)):
        if len(pool) < 100:
            pool.append(cyc)
        else:
            j = rnd.randrange(i + 1)
            if j < 100:
                pool[j] = cyc
        if i > 20000:
            break
    assert len(pool) == 100
    for cyc in pool:
        assert not remainder_bridges(g, cyc)


def chain_args():
    g = corpus.load("icosahedron").graph
    x, y = g.edges[0]
    z = next(w for w in g.adj[y] if w != x)
    return g, (x, y), (y, z)


@given(small_graphs(4, 8))
@settings(max_examples=40)
def test_charonian_matches_bruteforce(g):
    cycles = brute_hamiltonian_cycles(g)
    if not cycles:
        with pytest.raises(GraphError, match="not hamiltonian"):
            is_charonian(g)
        return
    expect = all(not remainder_bridges(g, c) for c in cycles)
    v = is_charonian(g)
    assert v.holds is expect
    if expect:
        assert v.checked == len(cycles)
    # strong implies plain
    if is_strongly_charonian(g).holds:
        assert v.holds


def test_strong_implies_plain_on_corpus():
    for name in ["octahedron", "icosahedron", "k6"]:
        g = corpus.load(name).graph
        if is_strongly_charonian(g).holds:
            assert is_charonian(g).holds


def test_budget_gives_inconclusive():
    ico = corpus.load("icosahedron").graph
    v = is_charonian(ico, budget=10)
    assert v.holds is None and v.inconclusive and not v
    assert v.checked > 10


def test_jobs_do_not_change_the_verdict():
    a = is_charonian(NON_CHARONIAN, jobs=1)
    b = is_charonian(NON_CHARONIAN, jobs=3)
    assert (a.holds, a.counterexample, a.bridge) == (b.holds, b.counterexample, b.bridge)


def test_non_hamiltonian_rejected():
    with pytest.raises(GraphError, match="not hamiltonian"):
        is_charonian(corpus.load("grinberg44").graph)
    with pytest.raises(GraphError, match="not hamiltonian"):
        is_strongly_charonian(Graph(4, [(0, 1), (1, 2), (2, 3)]))


# ------------------------------------------------------------------- census


def test_census_k4():
    g = complete_graph(4)
    for e, f in combinations(g.edges, 2):
        if set(e) & set(f):
            assert hamiltonian_pair_census(g, e, f) == 1


def test_census_bounded_by_total():
    for name in ["icosahedron", "octahedron", "k6"]:
        g = corpus.load(name).graph
        total = count_hamiltonian_cycles(g)
        for e, f in combinations(g.edges, 2):
            if len(set(e) & set(f)) == 1:
                h = hamiltonian_pair_census(g, e, f)
                assert 0 < h < total
                break


def test_census_grinberg_is_zero():
    g = corpus.load("grinberg44").graph
    e = g.edges[0]
    f = next(x for x in g.edges if x != e and set(x) & set(e))
    assert hamiltonian_pair_census(g, e, f) == 0


def test_census_needs_adjacent_edges():
    g = complete_graph(4)
    with pytest.raises(GraphError):
        hamiltonian_pair_census(g, (0, 1), (2, 3))


# ------------------------------------------------------ connectivity facts


def ph_quintic_entries():
    return [e for e in corpus.coloured_entries()
            if e.graph.regularity() == 5 and perfect_pairs(e.colouring).all_perfect]


@pytest.mark.parametrize("entry", ph_quintic_entries(), ids=lambda e: e.name)
def test_ph_connectivity_on_corpus(entry):
    rep = verify_ph_connectivity(entry.graph, entry.colouring, samples=1000)
    assert rep.ok, rep.violations
    assert rep.connectivity >= 4 and rep.sampled == 1000


def test_conn4_graph_has_connectivity_four():
    e = corpus.load("conn4_26")
    rep = verify_ph_connectivity(e.graph, e.colouring, samples=200)
    assert rep.connectivity == 4 and rep.ok
    assert (6, 7, 12, 16) in rep.four_cuts and not rep.cycle_cuts


def test_k6_connectivity_five():
    col = next(iter(enumerate_factorisations(complete_graph(6))))
    rep = verify_ph_connectivity(col.graph, col, samples=200)
    assert rep.ok and rep.connectivity == 5 and not rep.four_cuts


def test_seven_cut_profile_seen():
    e = corpus.load("kotzig20_k10")
    rep = verify_ph_connectivity(e.graph, e.colouring, samples=3000, seed=1)
    assert rep.profiles.get(7, set()) <= {(1, 1, 1, 1, 3)}


def test_connectivity_rejects_imperfect():
    e = corpus.load("kotzig20_k05")
    with pytest.raises(GraphError):
        verify_ph_connectivity(e.graph, e.colouring)


# ------------------------------------------------------------ face counts


def embedded_quintic():
    return [e for e in corpus.entries() if e.rotation is not None and e.graph.regularity() == 5]


@pytest.mark.parametrize("entry", embedded_quintic(), ids=lambda e: e.name)
def test_euler_identities(entry):
    s = euler_stats(entry.graph, entry.rotation)
    assert sum(k * c for k, c in s.faces.items()) == 2 * s.m == 5 * s.n
    assert s.n - s.m + sum(s.faces.values()) == 2
    assert s.s == 6 * s.f3 - 2 * s.m
    assert s.ok


def test_icosahedron_is_tight():
    e = corpus.load("icosahedron")
    s = euler_stats(e.graph, e.rotation)
    assert (s.f3, s.n + 8) == (20, 20)
    assert s.s == 60 and s.diamonds == 30 == s.s // 2
    assert len(diamonds(e.graph)) == 30


def test_twenty_vertex_face_count():
    e = corpus.load("kotzig20_k10")
    assert euler_stats(e.graph, e.rotation).f3 >= 28


def test_euler_stats_rejects_foreign_rotation():
    with pytest.raises(GraphError):
        euler_stats(corpus.load("cube").graph, corpus.load("icosahedron").rotation)
