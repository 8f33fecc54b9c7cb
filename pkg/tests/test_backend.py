import os
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import regular_graphs, small_graphs
from perfham import _backend, _kernels_py, corpus

compiled = pytest.importorskip("perfham._kernels", reason="compiled kernels not built")


def colourings(mod, g, pre=None):
    return list(mod.ColouringSearch(g.n, g.edges, g.regularity(), pre, True))


def covers(mod, g, **kw):
    args = dict(active=None, required=(), hamiltonian=True, lengths=None)
    args.update(kw)
    return list(mod.CycleCoverSearch(g.n, g.edges, args["active"], args["required"], args["hamiltonian"],
                                     args["lengths"]))


@given(regular_graphs(degrees=(3, 4, 5), max_n=12))
def test_colouring_kernels_agree_in_order(g):
    pre = [0] * g.m
    for i, e in enumerate(g.inc[0]):
        pre[e] = i + 1
    assert colourings(compiled, g, pre) == colourings(_kernels_py, g, pre)


@given(small_graphs(min_n=3, max_n=9), st.booleans())
def test_cycle_kernels_agree_in_order(g, ham):
    assert covers(compiled, g, hamiltonian=ham) == covers(_kernels_py, g, hamiltonian=ham)


@pytest.mark.parametrize("name", ["icosahedron", "dodecahedron", "order22"])
def test_cycle_kernels_agree_on_corpus(name):
    g = corpus.load(name).graph
    assert covers(compiled, g, required=(0,)) == covers(_kernels_py, g, required=(0,))
    active = [v != 0 for v in range(g.n)]
    assert covers(compiled, g, active=active) == covers(_kernels_py, g, active=active)


def test_length_filter_agrees():
    g = corpus.load("icosahedron").graph
    a = covers(compiled, g, hamiltonian=False, lengths=[4, 8])
    assert a == covers(_kernels_py, g, hamiltonian=False, lengths=[4, 8])


def test_icosahedron_colourings_agree():
    g = corpus.load("icosahedron").graph
    pre = [0] * g.m
    for i, e in enumerate(g.inc[0]):
        pre[e] = i + 1
    assert colourings(compiled, g, pre) == colourings(_kernels_py, g, pre)


def test_pure_flag_selects_python_backend():
    code = "import perfham; print(perfham.BACKEND)"
    for flag, want in [("1", "python"), ("0", "compiled")]:
        out = subprocess.run([sys.executable, "-c", code], env=dict(os.environ, PERFHAM_PURE=flag),
                             capture_output=True, text=True, check=True)
        assert out.stdout.strip() == want
    assert _backend.BACKEND in ("compiled", "python")


def test_pure_backend_end_to_end():
    code = ("from perfham import corpus, spectrum, kempe_classes;"
            "g = corpus.load('icosahedron').graph;"
            "print(spectrum(g).spectrum, kempe_classes(g).classes)")
    out = subprocess.run([sys.executable, "-c", code], env=dict(os.environ, PERFHAM_PURE="1"),
                         capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "[0, 2, 3, 4, 5, 6, 7, 8] 2"
