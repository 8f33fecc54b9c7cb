import pytest

from perfham import corpus
from perfham.factorisation import perfect_pairs
from perfham.graph import face_vector

NAMES = corpus.names()


def test_expected_entries_present():
    want = {"tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron", "k6", "grinberg44",
            "conn4_26", "conn4_fragment", "blockA", "blockB", "closureA", "closureB",
            "cubic_block1", "cubic_block2", "quartic_block1", "quartic_block2"}
    want |= {f"kotzig20_k{k:02d}" for k in range(11)}
    want |= {f"icosahedron_k{k}" for k in (0, 2, 3, 4, 5, 6, 7, 8)}
    want |= {f"order{n}" for n in range(22, 38, 2) if n != 24} | {"order24"}
    assert want <= set(NAMES)


@pytest.mark.parametrize("name", NAMES)
def test_entry_verifies(name):
    e = corpus.load(name)
    assert corpus.verify_entry(e) == []
    assert e.meta.get("name") == name
    assert e.provenance
    if e.colouring is not None:
        assert e.colouring.is_proper()
    if e.rotation is not None:
        g = e.graph
        assert g.n - g.m + sum(face_vector(g, e.rotation).values()) == 2


@pytest.mark.parametrize("name", [n for n in NAMES if corpus.load(n).claimed_k is not None])
def test_claimed_perfect_pair_counts(name):
    e = corpus.load(name)
    assert perfect_pairs(e.colouring).k == e.claimed_k


def test_twenty_vertex_family_covers_zero_to_ten():
    ks = sorted(e.claimed_k for e in corpus.family("kotzig20"))
    assert ks == list(range(11))
    graphs = {e.graph for e in corpus.family("kotzig20")}
    assert len(graphs) == 1


def test_order_family_is_perfect():
    for e in corpus.entries():
        if e.name.startswith("order"):
            assert e.graph.n == int(e.name[5:])
            assert e.graph.regularity() == 5
            assert perfect_pairs(e.colouring).all_perfect


def test_verify_entry_flags_problems():
    e = corpus.load("kotzig20_k03")
    broken = corpus.CorpusEntry(e.name, e.graph, e.rotation, e.colouring, dict(e.meta, k="4"))
    assert any("claimed k=4" in msg for msg in corpus.verify_entry(broken))


def test_blocks():
    blocks = corpus.quintic_blocks()
    for tag, b in blocks.items():
        assert b.graph.n == 20 and len(b.left) == len(b.right) == 5
        assert b.closure().regularity() == 5
    for deg in (3, 4):
        small = corpus.small_blocks(deg)
        assert all(b.degree == deg for b in small.values())


def test_fragment_terminals():
    f = corpus.fragment()
    assert f.validate() == []
    assert f.on_common_face()
