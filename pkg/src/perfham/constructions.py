"""Graph-building operations on coloured regular graphs.

Every builder re-verifies its output (properness, and the perfect-pair
profile where one is promised) before returning it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import chain, permutations, product
from typing import Iterator, Sequence

from .factorisation import (EdgeColouring, Enumeration, perfect_pairs,
                            three_edge_colour_cubic)
from .graph import Graph, RotationSystem, cycle_edge_ids, cycles_from_edges, triangles
from .hamilton import hamiltonian_cycle_edges
from .iso import is_automorphism


class ConstructionError(ValueError):
    pass


def _build(n: int, coloured: dict[tuple[int, int], int], d: int) -> tuple[Graph, EdgeColouring]:
    g = Graph(n, coloured.keys())
    cs = [0] * g.m
    for (u, v), c in coloured.items():
        cs[g.edge_id(u, v)] = c
    return g, EdgeColouring(g, tuple(cs), d)


def _add(coloured: dict, u: int, v: int, c: int) -> None:
    key = (min(u, v), max(u, v))
    if u == v:
        raise ConstructionError("construction produced a loop")
    old = coloured.get(key)
    if old is not None and old != c:
        raise ConstructionError(f"edge {key} receives colours {old} and {c}")
    coloured[key] = c


# ----------------------------------------------------------------- marriage

@dataclass
class Marriage:
    graph: Graph
    colouring: EdgeColouring
    rotation: RotationSystem | None
    g_map: dict[int, int]
    h_map: dict[int, int]
    h_permutation: tuple[int, ...]

    def __iter__(self):
        yield self.graph
        yield self.colouring


def _colour_cycle_at(col: EdgeColouring, rot: RotationSystem, v: int) -> list[int]:
    return [col.colours[e] for e in rot.rot[v]]


def _same_cycle(a: Sequence[int], b: Sequence[int]) -> bool:
    n = len(a)
    return any(list(a[i:]) + list(a[:i]) == list(b) for i in range(n))


def marriage(gcol: EdgeColouring, x: int, hcol: EdgeColouring, y: int,
             grot: RotationSystem | None = None, hrot: RotationSystem | None = None) -> Marriage:
    """Delete ``x`` and ``y`` and join their neighbours along equal colours.

    Colours of the second graph are permuted by the least permutation that
    aligns the stubs; with both rotation systems given it must also make the
    colour order at ``y`` the reverse of the order at ``x``, and the result
    carries the combined embedding.
    """
    g, h = gcol.graph, hcol.graph
    d = gcol.d
    if g.regularity() != d or h.regularity() != hcol.d or hcol.d != d:
        raise ConstructionError("both graphs must be regular of the same degree with d colours")
    gcol.require_factorisation()
    hcol.require_factorisation()
    embedded = grot is not None and hrot is not None
    perm = None
    for p in permutations(range(1, d + 1)):
        if embedded:
            at_x = _colour_cycle_at(gcol, grot, x)
            at_y = [p[c - 1] for c in _colour_cycle_at(hcol, hrot, y)]
            if not _same_cycle(at_x, at_y[::-1]):
                continue
        perm = p
        break
    if perm is None:
        raise ConstructionError("no colour permutation reverse-aligns the rotations")
    hp = hcol.permute(perm)
    g_map = {v: i for i, v in enumerate(v for v in range(g.n) if v != x)}
    off = g.n - 1
    h_map = {v: off + i for i, v in enumerate(v for v in range(h.n) if v != y)}
    coloured: dict = {}
    stub_g, stub_h = {}, {}
    for e, (u, v) in enumerate(g.edges):
        if x in (u, v):
            stub_g[gcol.colours[e]] = u if v == x else v
        else:
            _add(coloured, g_map[u], g_map[v], gcol.colours[e])
    for e, (u, v) in enumerate(h.edges):
        if y in (u, v):
            stub_h[hp.colours[e]] = u if v == y else v
        else:
            _add(coloured, h_map[u], h_map[v], hp.colours[e])
    for c in range(1, d + 1):
        _add(coloured, g_map[stub_g[c]], h_map[stub_h[c]], c)
    out, col = _build(g.n + h.n - 2, coloured, d)
    if not col.is_factorisation():
        raise ConstructionError("marriage produced an improper colouring")
    rot = None
    if embedded:
        rot = _married_rotation(out, g, x, grot, g_map, h, y, hrot, h_map, gcol, hp)
    return Marriage(out, col, rot, g_map, h_map, perm)


def _married_rotation(out, g, x, grot, g_map, h, y, hrot, h_map, gcol, hp) -> RotationSystem:
    order: list[list[int]] = [[] for _ in range(out.n)]
    col_g = {gcol.colours[e]: g.other(e, x) for e in g.inc[x]}
    col_h = {hp.colours[e]: h.other(e, y) for e in h.inc[y]}
    partner_g = {col_g[c]: h_map[col_h[c]] for c in col_g}
    partner_h = {col_h[c]: g_map[col_g[c]] for c in col_h}
    for src, rot, x0, vmap, partner in ((g, grot, x, g_map, partner_g), (h, hrot, y, h_map, partner_h)):
        for v in range(src.n):
            if v == x0:
                continue
            seq = []
            for w in rot.neighbour_order(v):
                seq.append(partner[v] if w == x0 else vmap[w])
            order[vmap[v]] = seq
    return RotationSystem.from_neighbours(out, order, planar=grot.planar and hrot.planar)


# ------------------------------------------------------------------ divorce

CONDITIONS = ("i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x")

# colour pair, terminal pairs of the required paths, removed terminals, edge bc required
_RULES = {
    "i": ((1, 2), (("c", "d"),), (), True),
    "ii": ((1, 3), (("b", "d"),), (), True),
    "iii": ((1, 4), (("a", "c"),), ("d",), True),
    "iv": ((1, 5), (("a", "b"),), ("d",), True),
    "v": ((2, 3), (("b", "c"),), (), False),
    "vi": ((2, 4), (("a", "d"),), ("c",), False),
    "vii": ((2, 5), (("a", "d"), ("b", "c")), (), False),
    "viii": ((3, 4), (("a", "b"), ("c", "d")), (), False),
    "ix": ((3, 5), (("a", "d"),), ("b",), False),
    "x": ((4, 5), (("b", "c"),), ("a", "d"), False),
}

PI = {1: 1, 2: 4, 3: 5, 4: 2, 5: 3}


@dataclass(frozen=True)
class Fragment:
    graph: Graph
    a: int
    b: int
    c: int
    d: int
    colouring: EdgeColouring
    rotation: RotationSystem | None = None

    @property
    def terminals(self) -> dict[str, int]:
        return {"a": self.a, "b": self.b, "c": self.c, "d": self.d}

    def validate(self) -> list[str]:
        """Violated structural clauses (empty when the fragment is well formed)."""
        g, col = self.graph, self.colouring
        bad = []
        t = self.terminals
        if len(set(t.values())) != 4:
            bad.append("terminals must be distinct")
            return bad
        for name in "abc":
            if g.degree(t[name]) != 3:
                bad.append(f"deg({name}) must be 3")
        if g.degree(self.d) != 2:
            bad.append("deg(d) must be 2")
        others = [v for v in range(g.n) if v not in t.values()]
        if any(g.degree(v) != 5 for v in others):
            bad.append("non-terminal vertices must have degree 5")
        inner = [(u, v) for u, v in g.edges if u in t.values() and v in t.values()]
        if inner != [tuple(sorted((self.b, self.c)))]:
            bad.append("bc must be the only edge among a, b, c, d")
        if col.d != 5 or not col.is_proper():
            bad.append("colouring must be a proper 5-edge-colouring")
        elif g.has_edge(self.b, self.c) and col.colour_of(self.b, self.c) != 1:
            bad.append("c(bc) must be 1")
        return bad

    def on_common_face(self) -> bool | None:
        if self.rotation is None:
            return None
        want = [self.a, self.b, self.c, self.d]
        for face in self.rotation.faces():
            pos = [face.index(v) for v in want if v in face]
            if len(pos) < 4:
                continue
            for seq in (pos, pos[::-1]):
                k = seq.index(min(seq))
                rolled = seq[k:] + seq[:k]
                if rolled == sorted(rolled):
                    return True
        return False


@dataclass(frozen=True)
class ConditionResult:
    holds: bool
    colours: tuple[int, int]
    witness: tuple[tuple[int, ...], ...] | None
    nodes: int

    @property
    def certificate(self) -> str:
        return "witness" if self.holds else f"no such paths: search exhausted after {self.nodes} nodes"


@dataclass
class SuitabilityReport:
    conditions: dict[str, ConditionResult]
    embedding: str

    @property
    def suitable(self) -> bool:
        return all(r.holds for r in self.conditions.values())

    @property
    def failing(self) -> list[str]:
        return [k for k in CONDITIONS if not self.conditions[k].holds]


def _bichromatic_adj(f: Fragment, colours: tuple[int, int], keep: set[int]) -> dict[int, list[int]]:
    g, col = f.graph, f.colouring
    adj: dict[int, list[int]] = {v: [] for v in keep}
    for e, (u, v) in enumerate(g.edges):
        if col.colours[e] in colours and u in keep and v in keep:
            adj[u].append(v)
            adj[v].append(u)
    return adj


def _path_system(adj: dict[int, list[int]], pairs: list[tuple[int, int]], cover: set[int],
                 need_edge: tuple[int, int] | None):
    """Vertex-disjoint paths joining each pair and covering ``cover`` exactly."""
    nodes = 0
    used: set[int] = set()
    paths: list[list[int]] = []

    def edge_ok() -> bool:
        if need_edge is None:
            return True
        u, v = need_edge
        for p in paths:
            for s, t in zip(p, p[1:]):
                if {s, t} == {u, v}:
                    return True
        return False

    def grow(idx: int, path: list[int]) -> bool:
        nonlocal nodes
        nodes += 1
        v = path[-1]
        target = pairs[idx][1]
        if v == target:
            paths.append(path[:])
            if idx + 1 == len(pairs):
                if used == cover and edge_ok():
                    return True
            else:
                s = pairs[idx + 1][0]
                if s not in used:
                    used.add(s)
                    if grow(idx + 1, [s]):
                        return True
                    used.discard(s)
            paths.pop()
            return False
        for w in sorted(adj[v]):
            if w in used:
                continue
            later = {p[0] for p in pairs[idx + 1:]} | {p[1] for p in pairs[idx + 1:]}
            if w in later:
                continue
            used.add(w)
            path.append(w)
            if grow(idx, path):
                return True
            path.pop()
            used.discard(w)
        return False

    s0 = pairs[0][0]
    used.add(s0)
    ok = grow(0, [s0])
    return ok, (tuple(tuple(p) for p in paths) if ok else None), nodes


def check_condition(f: Fragment, name: str) -> ConditionResult:
    colours, pairs, removed, needs_bc = _RULES[name]
    t = f.terminals
    keep = set(range(f.graph.n)) - {t[r] for r in removed}
    adj = _bichromatic_adj(f, colours, keep)
    tp = [(t[s], t[u]) for s, u in pairs]
    ok, wit, nodes = _path_system(adj, tp, keep, (f.b, f.c) if needs_bc else None)
    return ConditionResult(ok, colours, wit, nodes)


def suitability_check(f: Fragment) -> SuitabilityReport:
    bad = f.validate()
    if bad:
        raise ConstructionError("fragment invalid: " + "; ".join(bad))
    face = f.on_common_face()
    embedding = {None: "embedding not verified", True: "a, b, c, d on a common face",
                 False: "a, b, c, d not on a common face"}[face]
    return SuitabilityReport({k: check_condition(f, k) for k in CONDITIONS}, embedding)


def align_fragment(graph: Graph, colouring: EdgeColouring, a: int, b: int, c: int, d: int,
                   rotation: RotationSystem | None = None) -> Fragment:
    """Fragment whose colours are permuted so that the terminals see the colour sets a divorce needs."""
    want = {a: {1, 2, 3}, b: {1, 2, 4}, c: {1, 3, 5}, d: {2, 3}}
    for p in permutations(range(1, 6)):
        col = colouring.permute(p)
        if col.colour_of(b, c) == 1 and all(col.colours_at(v) == s for v, s in want.items()):
            return Fragment(graph, a, b, c, d, col, rotation)
    raise ConstructionError("no colour permutation gives the terminal colour sets")


@dataclass
class Divorce:
    graph: Graph
    colouring: EdgeColouring
    involution: list[int]
    report: SuitabilityReport

    def __iter__(self):
        yield self.graph
        yield self.colouring


def divorce(f: Fragment) -> Divorce:
    """Glue a fragment to a recoloured copy of itself along a, b, c, d."""
    rep = suitability_check(f)
    if not rep.suitable:
        raise ConstructionError("fragment not suitable: fails " + ", ".join(rep.failing))
    g, col = f.graph, f.colouring
    n = g.n
    terms = {f.a, f.b, f.c, f.d}
    copy_id: dict[int, int] = {f.a: f.d, f.d: f.a, f.b: f.c, f.c: f.b}
    nxt = n
    for v in range(n):
        if v not in terms:
            copy_id[v] = nxt
            nxt += 1
    coloured: dict = {}
    for e, (u, v) in enumerate(g.edges):
        _add(coloured, u, v, col.colours[e])
        _add(coloured, copy_id[u], copy_id[v], PI[col.colours[e]])
    out, ocol = _build(nxt, coloured, 5)
    if out.n != 2 * n - 4 or out.regularity() != 5:
        raise ConstructionError("divorce output is not quintic of order 2n - 4")
    if not ocol.is_factorisation() or not perfect_pairs(ocol).all_perfect:
        raise ConstructionError("divorce output colouring is not perfect")
    inv = [0] * out.n
    for v in range(n):
        inv[v] = copy_id[v]
        inv[copy_id[v]] = v
    if not is_automorphism(out, inv):
        raise ConstructionError("copy swap is not an automorphism")
    return Divorce(out, ocol, inv, rep)


# ------------------------------------------------------------ triangle glue

# neighbour of v_i carrying each colour, as in the gluing pattern
_GLUE_SLOTS = {1: {2: 1, 4: 2, 5: 3}, 2: {3: 4, 4: 5, 5: 6}, 3: {1: 7, 4: 8, 5: 9}}
_GLUE_PAIRS = ((1, 1), (2, 8), (3, 6), (4, 4), (5, 2), (6, 9), (7, 7), (8, 5), (9, 3))


@dataclass
class Glue:
    graph: Graph
    colouring: EdgeColouring
    triangle: tuple[int, int, int]
    source_colouring: EdgeColouring

    def __iter__(self):
        yield self.graph
        yield self.colouring


def _glue_once(col: EdgeColouring, v: tuple[int, int, int]) -> tuple[Graph, EdgeColouring] | None:
    g = col.graph
    v1, v2, v3 = v
    tri_colours = (col.colour_of(v1, v2), col.colour_of(v2, v3), col.colour_of(v3, v1))
    rest = [c for c in range(1, 6) if c not in tri_colours]
    for r in (rest, rest[::-1]):
        sigma = dict(zip(tri_colours, (1, 2, 3)))
        sigma.update(zip(r, (4, 5)))
        pc = col.permute(sigma)
        x = {}
        for i, vi in enumerate(v, 1):
            for e in g.inc[vi]:
                w = g.other(e, vi)
                if w in v:
                    continue
                x[_GLUE_SLOTS[i][pc.colours[e]]] = (w, pc.colours[e])
        n = g.n
        keep = [u for u in range(n) if u not in v]
        first = {u: i for i, u in enumerate(keep)}
        second = {u: len(keep) + i for i, u in enumerate(keep)}
        coloured: dict = {}
        for e, (a, b) in enumerate(g.edges):
            if a in v or b in v:
                continue
            _add(coloured, first[a], first[b], pc.colours[e])
            _add(coloured, second[a], second[b], pc.colours[e])
        for i, j in _GLUE_PAIRS:
            (xi, ci), (yj, cj) = x[i], x[j]
            if ci != cj:
                raise ConstructionError("gluing pattern joins stubs of different colours")
            _add(coloured, first[xi], second[yj], ci)
        out, ocol = _build(2 * len(keep), coloured, 5)
        if ocol.is_factorisation() and perfect_pairs(ocol).all_perfect:
            return out, ocol
    return None


def glue_triangles(g: Graph) -> list[tuple[int, int, int]]:
    """Triangles whose outside neighbourhood has nine distinct vertices."""
    out = []
    for t in triangles(g):
        nb = [w for v in t for w in g.adj[v] if w not in t]
        if len(nb) == 9 and len(set(nb)) == 9:
            out.append(t)
    return out


def triangle_glue(col: EdgeColouring, tri: Sequence[int], budget: int = 1000) -> Glue:
    """Two copies of ``G - tri`` joined by the nine-edge gluing pattern."""
    g = col.graph
    col.require_factorisation()
    if g.regularity() != 5:
        raise ConstructionError("graph is not quintic")
    t = tuple(sorted(tri))
    if len(set(t)) != 3 or not all(g.has_edge(a, b) for a, b in ((t[0], t[1]), (t[1], t[2]), (t[0], t[2]))):
        raise ConstructionError("not a triangle")
    nb = [w for v in t for w in g.adj[v] if w not in t]
    if len(set(nb)) != 9:
        raise ConstructionError("triangle neighbourhood is not nine distinct vertices")
    if not perfect_pairs(col).all_perfect:
        raise ConstructionError("colouring is not perfect")
    tried = 0
    for c in chain([col], Enumeration(g)):
        if c is not col and not perfect_pairs(c).all_perfect:
            continue
        for order in permutations(t):
            res = _glue_once(c, order)
            if res is not None:
                return Glue(res[0], res[1], order, c)
        tried += 1
        if tried >= budget:
            break
    raise ConstructionError("pattern unrealisable")


# ---------------------------------------------------------- charonian chain

@dataclass
class CharonianChain:
    graph: Graph
    k: int
    seed: Graph
    x: int
    y: int
    e_prime: tuple[int, int]
    connecting: list[int]
    e_prime_copies: list[int]
    paths: list[tuple[int, ...]] = field(repr=False)

    @property
    def h(self) -> int:
        return len(self.paths)

    def _vid(self, i: int, v: int) -> int:
        return i * self.seed.n + v

    def hamiltonian_cycle_edges(self, choice: Sequence[int]) -> list[int]:
        """Cycle of the chain built from one seed path per copy."""
        g = self.graph
        eids = list(self.connecting)
        for i, p in enumerate(choice):
            path = self.paths[p]
            for a, b in zip(path, path[1:]):
                eids.append(g.edge_id(self._vid(i, a), self._vid(i, b)))
        return eids

    def colouring(self, choice: Sequence[int]) -> EdgeColouring | None:
        g = self.graph
        eids = self.hamiltonian_cycle_edges(choice)
        cyc = cycles_from_edges(g, eids)
        if len(cyc) != 1 or len(cyc[0]) != g.n:
            raise ConstructionError("assembled cycle is not hamiltonian")
        seq = cycle_edge_ids(g, cyc[0])
        start = seq.index(self.connecting[0])
        cs = [0] * g.m
        for pos in range(len(seq)):
            cs[seq[(start + pos) % len(seq)]] = 1 + pos % 2
        if any(cs[e] != 1 for e in self.connecting) or any(cs[e] != 2 for e in self.e_prime_copies):
            raise ConstructionError("connecting edges and copies of e' do not alternate as required")
        rest = [e for e in range(g.m) if not cs[e]]
        sub = Graph(g.n, [g.edges[e] for e in rest])
        c3 = three_edge_colour_cubic(sub, offset=2)
        if not c3:
            return None
        for e in rest:
            cs[e] = c3.colours[sub.edge_id(*g.edges[e])]
        return EdgeColouring(g, tuple(cs), 5)

    def colourings(self) -> Iterator[EdgeColouring]:
        """The h^k colourings, one per choice of seed path in every copy."""
        for choice in product(range(self.h), repeat=self.k):
            col = self.colouring(choice)
            if col is None:
                raise ConstructionError("remainder of an assembled cycle is not 3-edge-colourable")
            yield col


def hamiltonian_pair_paths(g: Graph, e: tuple[int, int], e2: tuple[int, int]) -> list[tuple[int, ...]]:
    """Hamiltonian x-y paths of ``g - xy`` that use ``e2``, from cycles through both edges."""
    x, y = e
    eid, eid2 = g.edge_id(x, y), g.edge_id(*e2)
    out = []
    for eids in hamiltonian_cycle_edges(g, (eid, eid2)):
        cyc = list(cycles_from_edges(g, eids)[0])
        i = cyc.index(x)
        cyc = cyc[i:] + cyc[:i]
        if cyc[1] == y:
            cyc = [cyc[0]] + cyc[1:][::-1]
        out.append(tuple(cyc))
    return sorted(out)


def charonian_chain(g: Graph, e: tuple[int, int], e2: tuple[int, int], k: int) -> CharonianChain:
    """``k`` copies of ``g - xy`` joined in a ring by the edges ``y_i x_{i+1}``."""
    if k < 1:
        raise ConstructionError("k must be positive")
    x, y = e
    if not g.has_edge(x, y) or not g.has_edge(*e2):
        raise ConstructionError("edges must belong to the graph")
    if len(set(e) & set(e2)) != 1:
        raise ConstructionError("e' must be adjacent to e")
    paths = hamiltonian_pair_paths(g, (x, y), e2)
    if not paths:
        raise ConstructionError("no hamiltonian cycle through e and e'")
    n = g.n
    edges = []
    eid_xy = g.edge_id(x, y)
    for i in range(k):
        for f, (u, v) in enumerate(g.edges):
            if f != eid_xy:
                edges.append((i * n + u, i * n + v))
    links = [(i * n + y, ((i + 1) % k) * n + x) for i in range(k)]
    out = Graph(k * n, edges + links)
    connecting = sorted(out.edge_id(*p) for p in links)
    ep = [out.edge_id(i * n + e2[0], i * n + e2[1]) for i in range(k)]
    return CharonianChain(out, k, g, x, y, tuple(e2), connecting, ep, paths)


# ------------------------------------------------------- vertex substitution

@dataclass
class Substitution:
    graph: Graph
    copy_of: list[int]
    links: list[tuple[int, int]]


def vertex_substitution(h: Graph, f1: Sequence[int], f2: Sequence[int], g: Graph, gv: int,
                        bijection: dict[int, Sequence[int]] | None = None) -> Substitution:
    """Replace every vertex of a cubic graph by a copy of ``g - gv``.

    Edges of ``h`` in ``f1`` or ``f2`` become two links, the others one, so
    every copy receives five links. ``bijection[u]`` lists, in the order of
    ``u``'s links (adjacency order, doubled links adjacent), which deficient
    vertex of the copy takes each link; the default is id order.
    """
    if h.regularity() != 3:
        raise ConstructionError("h must be cubic")
    if g.regularity() != 5:
        raise ConstructionError("g must be quintic")
    m1, m2 = set(f1), set(f2)
    for m in (m1, m2):
        cover = [x for e in m for x in h.edges[e]]
        if len(cover) != h.n or len(set(cover)) != h.n:
            raise ConstructionError("f1 and f2 must be perfect matchings")
    if m1 & m2:
        raise ConstructionError("f1 and f2 must be disjoint")
    rest, old = g.delete_vertices([gv])
    deficient = sorted(i for i, v in enumerate(old) if v in g.adj[gv])
    size = rest.n
    edges = [(u * size + a, u * size + b) for u in range(h.n) for a, b in rest.edges]
    slots: dict[int, list[tuple[int, int]]] = {u: [] for u in range(h.n)}
    for u in range(h.n):
        for w in h.adj[u]:
            e = h.edge_id(u, w)
            mult = 2 if e in m1 or e in m2 else 1
            for j in range(mult):
                slots[u].append((e, j))
    for u in range(h.n):
        if len(slots[u]) != 5:
            raise ConstructionError("degree bookkeeping failed")
    where: dict[tuple[int, int, int], int] = {}
    for u in range(h.n):
        order = list(bijection[u]) if bijection and u in bijection else deficient
        if sorted(order) != deficient:
            raise ConstructionError("bijection must use each deficient vertex once")
        for (e, j), target in zip(slots[u], order):
            where[(u, e, j)] = u * size + target
    links = []
    for e, (u, w) in enumerate(h.edges):
        for j in range(2 if e in m1 or e in m2 else 1):
            links.append((where[(u, e, j)], where[(w, e, j)]))
    out = Graph(h.n * size, edges + links)
    if out.regularity() != 5:
        raise ConstructionError("substitution output is not quintic")
    return Substitution(out, [i // size for i in range(out.n)], links)


# -------------------------------------------------------------- block chains

@dataclass(frozen=True)
class Block:
    """A regular graph minus two cap vertices, with stub vertices per side (top to bottom)."""

    name: str
    graph: Graph
    left: tuple[int, ...]
    right: tuple[int, ...]
    closure_colouring: EdgeColouring | None = None

    @property
    def degree(self) -> int:
        return len(self.left)

    def closure(self) -> Graph:
        n = self.graph.n
        caps = [(v, n) for v in self.left] + [(v, n + 1) for v in self.right]
        return Graph(n + 2, list(self.graph.edges) + caps)


class BlockSequence(tuple):
    """Non-empty word over block names, e.g. ``BlockSequence("ABA")``."""

    def __new__(cls, word):
        items = tuple(word)
        if not items:
            raise ConstructionError("block sequence must be non-empty")
        return super().__new__(cls, items)

    def __str__(self) -> str:
        return "".join(map(str, self))


def _closure_colours(block: Block) -> tuple[dict[tuple[int, int], int], list[int], list[int]]:
    col = block.closure_colouring
    if col is None:
        from .factorisation import is_perfectly_hamiltonian
        ok, col = is_perfectly_hamiltonian(block.closure())
        if not ok:
            raise ConstructionError(f"closure of block {block.name} is not perfectly hamiltonian")
    cg = col.graph
    n = block.graph.n
    inner = {}
    for e, (u, v) in enumerate(block.graph.edges):
        inner[(u, v)] = col.colour_of(u, v)
    left = [col.colour_of(v, n) for v in block.left]
    right = [col.colour_of(v, n + 1) for v in block.right]
    if cg.n != n + 2:
        raise ConstructionError("closure colouring has the wrong order")
    return inner, left, right


def block_chain(seq: Sequence[str] | str, blocks: dict[str, Block] | None = None) -> tuple[Graph, EdgeColouring]:
    """Chain blocks left to right and cap both ends with one vertex each."""
    seq = BlockSequence(seq)
    if blocks is None:
        from .corpus import quintic_blocks
        blocks = quintic_blocks()
    unknown = sorted(set(seq) - set(blocks))
    if unknown:
        raise ConstructionError(f"unknown block {unknown[0]!r}; have {', '.join(sorted(blocks))}")
    parts = [blocks[s] for s in seq]
    d = parts[0].degree
    if any(p.degree != d or len(p.right) != d for p in parts):
        raise ConstructionError("blocks have different numbers of stubs")
    coloured: dict = {}
    offset = 0
    prev_right: list[tuple[int, int]] | None = None
    first_left: list[tuple[int, int]] = []
    perm: dict[int, int] = {}
    for i, blk in enumerate(parts):
        inner, lc, rc = _closure_colours(blk)
        if prev_right is None:
            perm = {c: c for c in range(1, d + 1)}
            first_left = [(offset + v, perm[c]) for v, c in zip(blk.left, lc)]
        else:
            perm = {lc[t]: prev_right[t][1] for t in range(d)}
            for t, v in enumerate(blk.left):
                _add(coloured, prev_right[t][0], offset + v, prev_right[t][1])
        for (u, v), c in inner.items():
            _add(coloured, offset + u, offset + v, perm[c])
        prev_right = [(offset + v, perm[c]) for v, c in zip(blk.right, rc)]
        offset += blk.graph.n
    lcap, rcap = offset, offset + 1
    for v, c in first_left:
        _add(coloured, lcap, v, c)
    for v, c in prev_right:
        _add(coloured, rcap, v, c)
    g, col = _build(offset + 2, coloured, d)
    if not col.is_factorisation():
        raise ConstructionError("chained colouring is improper")
    if not perfect_pairs(col).all_perfect:
        raise ConstructionError("chained colouring is not perfect")
    return g, col
