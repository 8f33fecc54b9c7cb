from collections import Counter
from itertools import combinations

import pytest
from hypothesis import given

from conftest import regular_graphs
from perfham import corpus
from perfham.factorisation import ColouringError, enumerate_factorisations, perfect_pairs
from perfham.graph import complete_graph
from perfham.kempe import CapExceeded, bichromatic_components, kempe_classes, kempe_switch


def corpus_colourings():
    return [(e.name, e.colouring) for e in corpus.coloured_entries()]


def every_switch(col):
    for i, j in combinations(range(1, col.d + 1), 2):
        for cyc in bichromatic_components(col, i, j):
            yield (i, j), cyc, kempe_switch(col, cyc)


@pytest.mark.parametrize("name, col", corpus_colourings(), ids=[n for n, _ in corpus_colourings()])
def test_switch_invariants_on_corpus(name, col):
    k = perfect_pairs(col).k
    sizes = sorted(len(col.colour_class(c)) for c in range(1, col.d + 1))
    for pair, cyc, out in every_switch(col):
        assert out.is_factorisation()
        assert kempe_switch(out, cyc) == col
        assert sorted(len(out.colour_class(c)) for c in range(1, col.d + 1)) == sizes
        if len(cyc) == col.graph.n:
            assert perfect_pairs(out).k == k


@given(regular_graphs(degrees=(3, 4, 5), max_n=10))
def test_switch_involution_on_random_graphs(g):
    for col in list(enumerate_factorisations(g))[:10]:
        for _, cyc, out in every_switch(col):
            assert kempe_switch(out, cyc) == col


@pytest.mark.parametrize("name, classes", [
    ("tetrahedron", 1), ("cube", 1), ("octahedron", 2), ("dodecahedron", 10), ("icosahedron", 2),
])
def test_platonic_classes(name, classes):
    assert kempe_classes(corpus.load(name).graph).classes == classes


def test_icosahedron_class_sizes():
    assert sorted(kempe_classes(corpus.load("icosahedron").graph).sizes) == [136, 644]


def test_k6_classes():
    part = kempe_classes(complete_graph(6))
    assert part.classes == 6 and part.sizes == [1] * 6


def class_count_bound_holds(part):
    perfect = [i for i, c in enumerate(part.colourings) if perfect_pairs(c).all_perfect]
    rest = len(part.colourings) - len(perfect)
    sizes = Counter(part.class_of)
    assert all(sizes[part.class_of[i]] == 1 for i in perfect)
    if rest:
        assert part.classes >= len(perfect) + 1
    else:
        assert part.classes == len(perfect)


@pytest.mark.parametrize("name", ["octahedron", "dodecahedron", "icosahedron", "tetrahedron", "cube"])
def test_perfect_colourings_are_isolated(name):
    class_count_bound_holds(kempe_classes(corpus.load(name).graph))


def test_perfect_colourings_isolated_k6():
    class_count_bound_holds(kempe_classes(complete_graph(6)))


@given(regular_graphs(degrees=(3, 4, 5), max_n=10))
def test_partition_properties_random(g):
    part = kempe_classes(g)
    class_count_bound_holds(part)
    # members of a class are linked by switches: every single switch stays in the class
    index = {c.colours: i for i, c in enumerate(part.colourings)}
    for i, col in enumerate(part.colourings[:15]):
        for _, _, out in every_switch(col):
            assert part.class_of[index[out.canonical().colours]] == part.class_of[i]


def test_partition_is_job_independent():
    g = corpus.load("icosahedron").graph
    a, b = kempe_classes(g, jobs=1), kempe_classes(g, jobs=2)
    assert a.class_of == b.class_of
    assert [c.colours for c in a.colourings] == [c.colours for c in b.colourings]


def test_cap():
    with pytest.raises(CapExceeded):
        kempe_classes(corpus.load("icosahedron").graph, cap=100)


def test_switch_rejects_non_components():
    col = corpus.load("icosahedron_k0").colouring
    cyc = bichromatic_components(col, 1, 2)[0]
    with pytest.raises(ColouringError):
        kempe_switch(col, cyc[:-1])
    with pytest.raises(ColouringError):
        bichromatic_components(col, 1, 1)
    g = col.graph
    tri = next((a, b, c) for a, b, c in combinations(range(g.n), 3)
               if g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c))
    with pytest.raises(ColouringError):
        kempe_switch(col, tri)
