import random
from collections import Counter
from itertools import combinations, product

import pytest

from perfham import corpus
from perfham.analysis import is_charonian
from perfham.constructions import (CONDITIONS, ConstructionError, Fragment, block_chain, charonian_chain,
                                   divorce, glue_triangles, hamiltonian_pair_paths, marriage,
                                   suitability_check, triangle_glue, vertex_substitution)
from perfham.factorisation import EdgeColouring, enumerate_factorisations, perfect_pairs, three_edge_colour_cubic
from perfham.graph import (Graph, complete_graph, components, edge_connectivity, edge_cut,
                           essential_edge_connectivity, is_connected)
from perfham.iso import canonical_form, is_automorphism, is_isomorphic

# ------------------------------------------------------------------ marriage


def k6_colouring():
    return next(iter(enumerate_factorisations(complete_graph(6))))


def test_k6_marriage():
    col = k6_colouring()
    res = marriage(col, 0, col, 0)
    assert res.graph.n == 10 and res.graph.regularity() == 5
    assert perfect_pairs(res.colouring).k == 10


def test_twenty_vertex_marriage_with_embedding():
    g10, g0 = corpus.load("kotzig20_k10"), corpus.load("kotzig20_k00")
    res = marriage(g10.colouring, 0, g0.colouring, 0, g10.rotation, g0.rotation)
    assert res.graph.n == 38
    assert perfect_pairs(res.colouring).k == 0
    assert res.rotation is not None and res.rotation.planar


def perfect_hosts():
    return [e for e in corpus.coloured_entries()
            if e.graph.regularity() == 5 and perfect_pairs(e.colouring).all_perfect]


def quintic_hosts():
    return [e for e in corpus.coloured_entries() if e.graph.regularity() == 5]


def test_marriage_keeps_k_of_the_second_graph():
    rnd = random.Random(11)
    gs, hs = perfect_hosts(), quintic_hosts()
    for _ in range(20):
        g, h = rnd.choice(gs), rnd.choice(hs)
        x, y = rnd.randrange(g.graph.n), rnd.randrange(h.graph.n)
        res = marriage(g.colouring, x, h.colouring, y)
        assert res.graph.n == g.graph.n + h.graph.n - 2
        assert res.colouring.is_factorisation()
        assert perfect_pairs(res.colouring).k == perfect_pairs(h.colouring).k


def test_marriage_profile_is_intersection():
    rnd = random.Random(5)
    hs = quintic_hosts()
    for _ in range(15):
        g, h = rnd.choice(hs), rnd.choice(hs)
        res = marriage(g.colouring, 0, h.colouring, 1)
        hp = h.colouring.permute(list(res.h_permutation))
        both = set(perfect_pairs(g.colouring).perfect_pairs) & set(perfect_pairs(hp).perfect_pairs)
        assert set(perfect_pairs(res.colouring).perfect_pairs) == both


def test_marriage_rejects_mixed_degrees():
    with pytest.raises(ConstructionError):
        marriage(corpus.load("icosahedron_k0").colouring, 0,
                 three_edge_colour_cubic(corpus.load("cube").graph), 0)


# ------------------------------------------------------------------- divorce


def test_fragment_is_suitable():
    rep = suitability_check(corpus.fragment())
    assert rep.suitable and rep.failing == []
    assert set(rep.conditions) == set(CONDITIONS) and len(CONDITIONS) == 10
    assert rep.embedding == "a, b, c, d on a common face"
    for res in rep.conditions.values():
        assert res.witness and res.certificate == "witness"


def test_divorce_output():
    f = corpus.fragment()
    res = divorce(f)
    g = res.graph
    assert g.n == 2 * f.graph.n - 4 and g.regularity() == 5
    prof = perfect_pairs(res.colouring)
    assert prof.all_perfect and len(prof.cycles) == 10
    assert is_automorphism(g, res.involution)
    assert res.involution != list(range(g.n))


def test_divorce_reproduces_the_connectivity_four_graph():
    assert is_isomorphic(divorce(corpus.fragment()).graph, corpus.load("conn4_26").graph)


def test_fragment_precondition_errors():
    f = corpus.fragment()
    bad = Fragment(f.graph, f.a, f.b, f.d, f.c, f.colouring, f.rotation)
    assert bad.validate()
    with pytest.raises(ConstructionError, match="deg"):
        suitability_check(bad)


def kempe_perturbations(f):
    g, col = f.graph, f.colouring
    for i, j in combinations(range(1, 6), 2):
        es = [e for e in range(g.m) if col.colours[e] in (i, j)]
        sub = Graph(g.n, [g.edges[e] for e in es])
        for comp in components(sub):
            if len(comp) < 2:
                continue
            cs = list(col.colours)
            for e in es:
                if g.edges[e][0] in comp:
                    cs[e] = i + j - cs[e]
            fr = Fragment(g, f.a, f.b, f.c, f.d, EdgeColouring(g, tuple(cs), 5), f.rotation)
            if not fr.validate():
                yield fr


def test_perturbed_fragment_fails_with_certificate():
    seen = 0
    for fr in kempe_perturbations(corpus.fragment()):
        rep = suitability_check(fr)
        assert not rep.suitable
        for name in rep.failing:
            res = rep.conditions[name]
            assert res.witness is None and res.certificate.startswith("no such paths")
        with pytest.raises(ConstructionError, match="not suitable"):
            divorce(fr)
        seen += 1
    assert seen > 0


# -------------------------------------------------------------- triangle glue


def test_triangle_glue_on_corpus_instance():
    e = corpus.load("order24")
    tris = glue_triangles(e.graph)
    assert tris
    for t in tris:
        res = triangle_glue(e.colouring, t)
        assert res.graph.n == 2 * (e.graph.n - 3)
        assert res.graph.regularity() == 5
        assert perfect_pairs(res.colouring).all_perfect


def test_triangle_glue_k6_rejected():
    with pytest.raises(ConstructionError, match="nine"):
        triangle_glue(k6_colouring(), (0, 1, 2))


def test_triangle_glue_needs_a_triangle():
    e = corpus.load("order24")
    with pytest.raises(ConstructionError):
        triangle_glue(e.colouring, (0, 1, 23) if not e.graph.has_edge(0, 23) else (0, 2, 23))


# ------------------------------------------------------------ charonian chain


def ico_edges():
    g = corpus.load("icosahedron").graph
    x, y = g.edges[0]
    z = next(w for w in g.adj[y] if w != x)
    return g, (x, y), (y, z)


def test_chain_k1_is_the_seed():
    g, e, e2 = ico_edges()
    assert is_isomorphic(charonian_chain(g, e, e2, 1).graph, g)


@pytest.mark.slow
def test_chain_k2_structure_and_colourings():
    g, e, e2 = ico_edges()
    ch = charonian_chain(g, e, e2, 2)
    assert ch.graph.n == 24 and ch.graph.regularity() == 5
    assert ch.h == len(hamiltonian_pair_paths(g, e, e2)) > 0
    assert len(edge_cut(ch.graph, range(12))) == 2
    cols = {}
    for col in ch.colourings():
        assert col.is_factorisation()
        assert perfect_pairs(col).k >= 1
        cols[col.colours] = col
    assert len(cols) == ch.h ** 2


def test_chain_connecting_edges_form_two_cuts():
    g, e, e2 = ico_edges()
    ch = charonian_chain(g, e, e2, 3)
    for a, b in combinations(ch.connecting, 2):
        rest = ch.graph.delete_edges([a, b])
        assert len(components(rest)) == 2


@pytest.mark.slow
@pytest.mark.parametrize("k", [1, 2])
def test_chain_is_charonian(k):
    g, e, e2 = ico_edges()
    assert is_charonian(charonian_chain(g, e, e2, k).graph).holds


def test_chain_errors():
    g, e, e2 = ico_edges()
    far = next(f for f in g.edges if not set(f) & set(e))
    with pytest.raises(ConstructionError, match="adjacent"):
        charonian_chain(g, e, far, 2)
    with pytest.raises(ConstructionError):
        charonian_chain(g, e, e2, 0)


# -------------------------------------------------------- vertex substitution


def contract(sub):
    mult = Counter()
    for u, v in sub.links:
        a, b = sub.copy_of[u], sub.copy_of[v]
        mult[(min(a, b), max(a, b))] += 1
    return mult


@pytest.mark.parametrize("host", ["tetrahedron", "cube", "grinberg44"])
def test_substitution_structure(host):
    h = corpus.load(host).graph
    c3 = three_edge_colour_cubic(h)
    f1, f2 = c3.colour_class(1), c3.colour_class(2)
    ico = corpus.load("icosahedron").graph
    sub = vertex_substitution(h, f1, f2, ico, 0)
    g = sub.graph
    assert g.n == h.n * 11 and g.regularity() == 5 and is_connected(g)
    mult = contract(sub)
    for e, (u, v) in enumerate(h.edges):
        assert mult[(u, v)] == 1 + (e in f1 or e in f2)
    per_copy = Counter(sub.copy_of[x] for link in sub.links for x in link)
    assert set(per_copy.values()) == {5}


def test_substitution_on_k4_has_44_vertices():
    h = complete_graph(4)
    c3 = three_edge_colour_cubic(h)
    sub = vertex_substitution(h, c3.colour_class(1), c3.colour_class(2), corpus.load("icosahedron").graph, 5)
    assert sub.graph.n == 44 and edge_connectivity(sub.graph) == 5


def test_substitution_errors():
    h = complete_graph(4)
    c3 = three_edge_colour_cubic(h)
    ico = corpus.load("icosahedron").graph
    with pytest.raises(ConstructionError):
        vertex_substitution(h, c3.colour_class(1), c3.colour_class(1), ico, 0)
    with pytest.raises(ConstructionError):
        vertex_substitution(h, c3.colour_class(1), [0], ico, 0)
    with pytest.raises(ConstructionError):
        vertex_substitution(ico, [], [], ico, 0)


# --------------------------------------------------------------- block chains


@pytest.mark.parametrize("tag", ["A", "B"])
def test_single_block_matches_closure(tag):
    g, col = block_chain(tag)
    assert g.n == 22 and perfect_pairs(col).all_perfect
    assert is_isomorphic(g, corpus.load(f"closure{tag}").graph)
    assert essential_edge_connectivity(g) == 8


def test_blocks_differ():
    a, b = corpus.quintic_blocks()["A"], corpus.quintic_blocks()["B"]
    assert not is_isomorphic(a.graph, b.graph)


@pytest.mark.parametrize("seq", ["AA", "AB", "BA", "BB", "ABA", "BBA"])
def test_chains_are_perfectly_hamiltonian(seq):
    g, col = block_chain(seq)
    assert g.n == 20 * len(seq) + 2
    assert g.regularity() == 5 and perfect_pairs(col).all_perfect


def test_order_of_two_block_chain():
    assert block_chain("AB")[0].n == 42


def up_to_reversal(k):
    return len({min(w, w[::-1]) for w in product("AB", repeat=k)})


@pytest.mark.parametrize("k", [1, 2, 3])
def test_chain_isomorphism_classes(k):
    forms = {canonical_form(block_chain("".join(w))[0]) for w in product("AB", repeat=k)}
    # at least one class per word up to reversal ...
    assert len(forms) >= up_to_reversal(k)
    # ... and, with these blocks, reversal gives a new graph, so every word is its own class
    assert len(forms) == 2 ** k


def test_junction_is_the_only_small_cut():
    g, _ = block_chain("AB")
    junction = edge_cut(g, list(range(20)) + [40])
    assert len(junction) == 5
    assert essential_edge_connectivity(g) == 5
    # collapsing either side of the junction gives a closure, which has no nontrivial cut below 8
    for tag in "AB":
        assert essential_edge_connectivity(block_chain(tag)[0]) == 8


def test_small_block_chains():
    for deg in (3, 4):
        blocks = corpus.small_blocks(deg)
        for seq in ["1", "2", "12", "21", "112"]:
            g, col = block_chain(seq, blocks)
            assert g.regularity() == deg and perfect_pairs(col).all_perfect


def test_empty_sequence():
    with pytest.raises(ConstructionError):
        block_chain("")
    with pytest.raises(ConstructionError, match="unknown block"):
        block_chain("AXB")
