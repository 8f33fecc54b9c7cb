"""Regenerate src/perfham/data/*.cel from the TikZ figure sources.

Usage: python3 tools/make_corpus.py SOURCE.md src/perfham/data

networkx is used here only to obtain planar embeddings and the Platonic
solids; the package itself does not depend on it.
"""

from __future__ import annotations

import re
import sys
from pathlib import Path

import networkx as nx

sys.path.insert(0, str(Path(__file__).resolve().parent))
from grinberg_search import grinberg44  # noqa: E402
from tikz_graphs import parse_drawings  # noqa: E402

from perfham.factorisation import EdgeColouring, perfect_pairs  # noqa: E402
from perfham.formats import CelDocument, write_cel  # noqa: E402
from perfham.constructions import ConstructionError, align_fragment  # noqa: E402
from perfham.graph import Graph, RotationSystem, components  # noqa: E402

_NUM = re.compile(r"^\(\s*(-?[\d.]+)\s*,\s*(-?[\d.]+)\s*\)$")


def embed(g: Graph) -> RotationSystem | None:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    if not nx.is_connected(h):
        return None
    ok, emb = nx.check_planarity(h)
    if not ok:
        return None
    return RotationSystem.from_neighbours(g, [list(emb.neighbors_cw_order(v)) for v in range(g.n)])


def relabel(ids):
    order = sorted(ids)
    return {v: i for i, v in enumerate(order)}


def doc_for(edges: dict, mapping: dict | None = None, meta=(), comments=(), rotate=True) -> CelDocument:
    if mapping is None:
        mapping = relabel({x for e in edges for x in e})
    g = Graph(len(mapping), [(mapping[u], mapping[v]) for u, v in edges])
    col = None
    if all(c is not None for c in edges.values()):
        col = EdgeColouring.from_mapping(g, {(mapping[u], mapping[v]): c for (u, v), c in edges.items()}, 5)
    rot = embed(g) if rotate else None
    meta = list(meta)
    if col is not None and g.regularity() == col.d:
        meta.append(("k", str(perfect_pairs(col).k)))
    return CelDocument(g, rot, col, meta, list(comments))


def y_of(node: str) -> float:
    m = _NUM.match(node.replace(" ", ""))
    if not m:
        raise ValueError(f"cannot evaluate coordinate {node}")
    return float(m.group(2))


def stub_sides(drawing, mapping):
    """Left/right stub vertices ordered top to bottom."""
    left, right = [], []
    for v, spec in drawing.stubs:
        if spec.startswith("++"):
            ang = float(spec[2:].split(":")[0])
            side = left if ang == 180 else right
            y = y_of(drawing.nodes[str(v)])
        else:
            x, y = (float(t) for t in spec.split(","))
            side = left if x < 0 else right
        side.append((-y, v))
    return [mapping[v] for _, v in sorted(left)], [mapping[v] for _, v in sorted(right)]


def bottom_fragment(host: CelDocument) -> CelDocument:
    """Lower half of the connectivity-4 graph with its four cut vertices as terminals."""
    g, col, rot = host.graph, host.colouring, host.rotation
    cut = [int(x) for x in dict(host.meta)["cut"].split()]
    rest, old = g.delete_vertices(cut)
    comps = [sorted(old[v] for v in c) for c in components(rest)]
    lower = next(c for c in comps if 13 in c)
    keep = sorted(lower + cut)
    mp = {v: i for i, v in enumerate(keep)}
    eids = [e for e, (u, v) in enumerate(g.edges) if u in mp and v in mp]
    f = Graph(len(keep), [(mp[g.edges[e][0]], mp[g.edges[e][1]]) for e in eids])
    fcol = EdgeColouring.from_mapping(f, {(mp[g.edges[e][0]], mp[g.edges[e][1]]): col.colours[e] for e in eids}, 5)
    frot = RotationSystem.from_neighbours(
        f, [[mp[w] for w in rot.neighbour_order(v) if w in mp] for v in keep])
    deg = {v: f.degree(mp[v]) for v in cut}
    d = next(v for v in cut if deg[v] == 2)
    b, c = next((u, w) for u, w in g.edges if u in cut and w in cut)
    a = next(v for v in cut if v not in (b, c, d))
    for bb, cc in ((b, c), (c, b)):
        try:
            frag = align_fragment(f, fcol, mp[a], mp[bb], mp[cc], mp[d], frot)
        except ConstructionError:
            continue
        if frag.on_common_face():
            break
    else:
        raise SystemExit("fragment colours cannot be aligned")
    terms = f"{frag.a} {frag.b} {frag.c} {frag.d}"
    return CelDocument(f, frot, frag.colouring,
                       [("name", "conn4_fragment"), ("family", "conn4_fragment"), ("terminals", terms),
                        ("host_vertices", " ".join(map(str, keep)))],
                       ["lower half of conn4_26 including its 4-vertex cut; terminals a b c d"])


def platonic() -> dict[str, Graph]:
    out = {}
    for name, h in [("tetrahedron", nx.tetrahedral_graph()), ("cube", nx.cubical_graph()),
                    ("octahedron", nx.octahedral_graph()), ("dodecahedron", nx.dodecahedral_graph()),
                    ("k6", nx.complete_graph(6))]:
        h = nx.convert_node_labels_to_integers(h, ordering="sorted")
        out[name] = Graph(h.number_of_nodes(), h.edges())
    return out


def main(src: str, dest: str) -> None:
    ds = parse_drawings(Path(src).read_text())
    out = Path(dest)
    out.mkdir(parents=True, exist_ok=True)
    files: dict[str, CelDocument] = {}

    for name, g in platonic().items():
        rot = embed(g) if name != "k6" else None
        files[name] = CelDocument(g, rot, None, [("name", name), ("family", name)],
                                  ["standard graph"])

    # 20-vertex quintic graph: one drawing with ten perfect pairs, ten more with k = 0..9
    files["kotzig20_k10"] = doc_for(ds[0].edges, meta=[("name", "kotzig20_k10"), ("family", "kotzig20")],
                                    comments=["20-vertex planar quintic graph, colouring with ten perfect pairs"])
    for d in ds[7:17]:
        nm = f"kotzig20_k{d.label:02d}"
        files[nm] = doc_for(d.edges, meta=[("name", nm), ("family", "kotzig20")],
                            comments=[f"20-vertex planar quintic graph, colouring with {d.label} perfect pairs"])

    ico = [d for d in ds if d.kind == "icosahedron"]
    files["icosahedron"] = doc_for({e: None for e in ico[0].edges}, meta=[("name", "icosahedron"), ("family", "icosahedron")],
                                   comments=["icosahedron in the labelling of its coloured drawings"])
    for d in ico:
        nm = f"icosahedron_k{d.label}"
        files[nm] = doc_for(d.edges, meta=[("name", nm), ("family", "icosahedron")],
                            comments=[f"icosahedron, colouring with {d.label} perfect pairs"])

    files["conn4_26"] = doc_for(ds[17].edges, meta=[("name", "conn4_26"), ("family", "conn4_26"),
                                                    ("cut", "6 7 12 16")],
                                comments=["26-vertex planar quintic perfectly hamiltonian graph of connectivity 4"])

    for d in ds[26:34]:
        n = len(d.nodes)
        nm = f"order{n}"
        files[nm] = doc_for(d.edges, meta=[("name", nm), ("family", nm)],
                            comments=[f"planar quintic perfectly hamiltonian graph on {n} vertices"])

    for tag, blk, clo in [("A", ds[5], ds[34]), ("B", ds[6], ds[35])]:
        bv = {x for e in blk.edges for x in e} | {v for v, _ in blk.stubs}
        mp = relabel(bv)
        left, right = stub_sides(blk, mp)
        files[f"block{tag}"] = doc_for(blk.edges, mp, meta=[
            ("name", f"block{tag}"), ("family", f"block{tag}"),
            ("left", " ".join(map(str, left))), ("right", " ".join(map(str, right)))],
            comments=[f"quintic building block {tag}: 20 vertices, five dangling edges per side"])
        # closure: same block labels first, then left cap and right cap
        caps = sorted({x for e in clo.edges for x in e} - bv)
        by_side = sorted(caps, key=lambda c: float(clo.nodes[str(c)].strip("()").split(",")[0]))
        cm = dict(mp)
        cm[by_side[0]] = 20
        cm[by_side[1]] = 21
        files[f"closure{tag}"] = doc_for(clo.edges, cm, meta=[
            ("name", f"closure{tag}"), ("family", f"closure{tag}"), ("caps", "20 21"),
            ("left", " ".join(map(str, left))), ("right", " ".join(map(str, right)))],
            comments=[f"22-vertex closure of block {tag} by one vertex on each side"])

    for idx, nm, deg in [(36, "cubic_block1", 3), (37, "cubic_block2", 3),
                         (38, "quartic_block1", 4), (39, "quartic_block2", 4)]:
        blk = ds[idx]
        bv = {x for e in blk.edges for x in e} | {v for v, _ in blk.stubs}
        mp = relabel(bv)
        left, right = stub_sides(blk, mp)
        files[nm] = doc_for(blk.edges, mp, meta=[
            ("name", nm), ("family", nm), ("degree", str(deg)),
            ("left", " ".join(map(str, left))), ("right", " ".join(map(str, right)))],
            comments=[f"{'cubic' if deg == 3 else 'quartic'} building block with dangling edges"])

    files["conn4_fragment"] = bottom_fragment(files["conn4_26"])

    g44 = grinberg44()
    files["grinberg44"] = CelDocument(g44, embed(g44), None, [("name", "grinberg44"), ("family", "grinberg44")],
                                      ["Grinberg's 44-vertex non-hamiltonian cyclically 5-edge-connected cubic polyhedron",
                                       "rebuilt as the dual of the face spiral in tools/grinberg_search.py"])

    for nm, doc in files.items():
        (out / f"{nm}.cel").write_text(write_cel(doc))
    print(f"wrote {len(files)} files to {out}")


if __name__ == "__main__":
    main(*sys.argv[1:3])
