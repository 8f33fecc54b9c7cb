"""Simple undirected graphs and the structural algorithms built on them."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised for malformed graphs or inputs violating a precondition."""


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    Edges are stored as ``(u, v)`` pairs with ``u < v`` sorted
    lexicographically; the position of a pair in :attr:`edges` is its EdgeId.
    """

    __slots__ = ("n", "edges", "adj", "inc", "_index")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise GraphError("negative vertex count")
        norm = []
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            norm.append((u, v) if u < v else (v, u))
        norm.sort()
        for a, b in zip(norm, norm[1:]):
            if a == b:
                raise GraphError(f"duplicate edge {a}")
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(norm)
        self._index = {e: i for i, e in enumerate(self.edges)}
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)
        self.inc: tuple[tuple[int, ...], ...] = tuple(
            tuple(self._index[(u, w) if u < w else (w, u)] for w in self.adj[u]) for u in range(n)
        )

    @property
    def m(self) -> int:
        return len(self.edges)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def regularity(self) -> int | None:
        """Common degree if the graph is regular, else ``None``."""
        degs = set(self.degrees())
        if len(degs) == 1:
            return degs.pop()
        return 0 if self.n == 0 else None

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._index

    def edge_id(self, u: int, v: int) -> int:
        try:
            return self._index[(u, v) if u < v else (v, u)]
        except KeyError:
            raise GraphError(f"no edge ({u}, {v})") from None

    def other(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        return b if v == a else a

    def delete_vertices(self, vs: Iterable[int]) -> tuple["Graph", list[int]]:
        """Remove ``vs``; returns the new graph and ``old_of_new`` vertex map."""
        drop = set(vs)
        keep = [v for v in range(self.n) if v not in drop]
        new = {v: i for i, v in enumerate(keep)}
        es = [(new[u], new[v]) for u, v in self.edges if u in new and v in new]
        return Graph(len(keep), es), keep

    def delete_edges(self, eids: Iterable[int]) -> "Graph":
        drop = set(eids)
        return Graph(self.n, [e for i, e in enumerate(self.edges) if i not in drop])

    def add_edges(self, pairs: Iterable[tuple[int, int]]) -> "Graph":
        return Graph(self.n, list(self.edges) + list(pairs))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def disjoint_union(self, other: "Graph") -> "Graph":
        k = self.n
        return Graph(k + other.n, list(self.edges) + [(u + k, v + k) for u, v in other.edges])

    def induced_edges(self, vs: Iterable[int]) -> list[int]:
        s = set(vs)
        return [i for i, (u, v) in enumerate(self.edges) if u in s and v in s]


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


# ---------------------------------------------------------------------------
# components and cuts


def components(g: Graph, edge_ids: Iterable[int] | None = None,
               vertices: Iterable[int] | None = None) -> list[list[int]]:
    """Connected components, optionally restricted to an edge subset."""
    verts = sorted(set(range(g.n) if vertices is None else vertices))
    if edge_ids is None:
        nbrs = {v: [w for w in g.adj[v]] for v in verts}
    else:
        nbrs = {v: [] for v in verts}
        for e in edge_ids:
            u, v = g.edges[e]
            if u in nbrs and v in nbrs:
                nbrs[u].append(v)
                nbrs[v].append(u)
    seen: set[int] = set()
    out = []
    for s in verts:
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        stack = [s]
        while stack:
            x = stack.pop()
            for y in nbrs[x]:
                if y in nbrs and y not in seen:
                    seen.add(y)
                    comp.append(y)
                    stack.append(y)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def bridges(g: Graph) -> set[int]:
    """EdgeIds of all bridges (iterative low-link DFS)."""
    disc = [-1] * g.n
    low = [0] * g.n
    out: set[int] = set()
    t = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = t
        t += 1
        # frame: vertex, edge used to enter, iterator position
        stack = [(root, -1, 0)]
        while stack:
            v, pe, i = stack[-1]
            if i < len(g.adj[v]):
                stack[-1] = (v, pe, i + 1)
                w = g.adj[v][i]
                e = g.inc[v][i]
                if e == pe:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, e, 0))
                else:
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[v])
                    if low[v] > disc[p]:
                        out.add(pe)
    return out


@dataclass(frozen=True)
class EdgeCut:
    side: frozenset[int]
    edges: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.edges)


def edge_cut(g: Graph, s: Iterable[int]) -> EdgeCut:
    side = frozenset(s)
    if not side or len(side) >= g.n or not side <= set(range(g.n)):
        raise GraphError("degenerate partition")
    es = tuple(i for i, (u, v) in enumerate(g.edges) if (u in side) != (v in side))
    return EdgeCut(side, es)


# ---------------------------------------------------------------------------
# flows


def _max_flow(n: int, arcs: list[tuple[int, int]], s: int, t: int, limit: int | None = None) -> int:
    """Unit-capacity max flow by BFS augmenting paths.

    ``arcs`` are directed unit-capacity arcs. Stops early once ``limit`` is
    reached.
    """
    head: list[int] = []
    cap: list[int] = []
    out: list[list[int]] = [[] for _ in range(n)]
    for a, b in arcs:
        out[a].append(len(head))
        head.append(b)
        cap.append(1)
        out[b].append(len(head))
        head.append(a)
        cap.append(0)
    flow = 0
    while limit is None or flow < limit:
        prev = [-1] * n
        prev[s] = -2
        q = deque([s])
        while q and prev[t] == -1:
            x = q.popleft()
            for a in out[x]:
                y = head[a]
                if cap[a] and prev[y] == -1:
                    prev[y] = a
                    q.append(y)
        if prev[t] == -1:
            break
        y = t
        while y != s:
            a = prev[y]
            cap[a] -= 1
            cap[a ^ 1] += 1
            y = head[a ^ 1]
        flow += 1
    return flow


def _local_vertex_connectivity(g: Graph, s: int, t: int, limit: int | None = None) -> int:
    # split v into v_in=2v, v_out=2v+1
    arcs = []
    for v in range(g.n):
        if v != s and v != t:
            arcs.append((2 * v, 2 * v + 1))
    for u, v in g.edges:
        arcs.append((2 * u + 1 if u not in (s, t) else 2 * u, 2 * v))
        arcs.append((2 * v + 1 if v not in (s, t) else 2 * v, 2 * u))
    return _max_flow(2 * g.n, arcs, 2 * s, 2 * t, limit)


def vertex_connectivity(g: Graph) -> int:
    """Minimum size of a vertex separator (``n-1`` for complete graphs)."""
    if g.n <= 1:
        return 0
    if not is_connected(g):
        return 0
    if g.m == g.n * (g.n - 1) // 2:
        return g.n - 1
    best = min(g.degrees())
    # some vertex among the first best+1 lies outside a minimum separator
    i = 0
    while i <= best and i < g.n:
        for j in range(i + 1, g.n):
            if not g.has_edge(i, j):
                best = min(best, _local_vertex_connectivity(g, i, j, best))
        i += 1
    return best


def min_st_edge_cut(g: Graph, sources: Iterable[int], sinks: Iterable[int], limit: int | None = None) -> int:
    """Minimum number of edges separating two disjoint vertex sets."""
    src, snk = set(sources), set(sinks)
    if src & snk:
        raise GraphError("terminal sets overlap")
    # contract terminals onto two extra nodes
    S, T = g.n, g.n + 1

    def node(v: int) -> int:
        return S if v in src else T if v in snk else v

    arcs = []
    for u, v in g.edges:
        a, b = node(u), node(v)
        if a == b:
            continue
        arcs.append((a, b))
        arcs.append((b, a))
    return _max_flow(g.n + 2, arcs, S, T, limit)


def edge_connectivity(g: Graph) -> int:
    if g.n <= 1 or not is_connected(g):
        return 0
    return min(min_st_edge_cut(g, [0], [v]) for v in range(1, g.n))


def essential_edge_connectivity(g: Graph) -> int:
    """Smallest edge cut leaving two components that each contain an edge."""
    if not is_connected(g) or g.m < 2:
        raise GraphError("essential edge-connectivity needs a connected graph with two edges")
    best: int | None = None
    for i, (a, b) in enumerate(g.edges):
        for j in range(i + 1, g.m):
            c, d = g.edges[j]
            if {a, b} & {c, d}:
                continue
            val = min_st_edge_cut(g, (a, b), (c, d), best)
            if best is None or val < best:
                best = val
    if best is None:
        raise GraphError("no essential cut")
    return best


# ---------------------------------------------------------------------------
# triangles, diamonds


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    out = []
    for u, v in g.edges:
        for w in g.adj[v]:
            if w > v and g.has_edge(u, w):
                out.append((u, v, w))
    return sorted(out)


def diamonds(g: Graph) -> list[tuple[tuple[int, int, int], tuple[int, int, int]]]:
    """Unordered pairs of triangles sharing exactly one edge, in canonical order."""
    tris = triangles(g)
    by_edge: dict[tuple[int, int], list[int]] = {}
    for k, t in enumerate(tris):
        for e in combinations(t, 2):
            by_edge.setdefault(e, []).append(k)
    pairs = set()
    for ks in by_edge.values():
        for a, b in combinations(ks, 2):
            pairs.add((a, b))
    return [(tris[a], tris[b]) for a, b in sorted(pairs)]


def shared_edge(t1: Sequence[int], t2: Sequence[int]) -> tuple[int, int]:
    common = sorted(set(t1) & set(t2))
    if len(common) != 2:
        raise GraphError("triangles do not form a diamond")
    return common[0], common[1]


# ---------------------------------------------------------------------------
# rotation systems and faces


class RotationSystem:
    """Cyclic order of incident EdgeIds around every vertex."""

    __slots__ = ("graph", "rot", "planar", "_pos")

    def __init__(self, graph: Graph, rot: Sequence[Sequence[int]], planar: bool = True):
        if len(rot) != graph.n:
            raise GraphError("rotation system size mismatch")
        self.graph = graph
        self.rot = tuple(tuple(r) for r in rot)
        self.planar = planar
        self._pos = []
        for v, r in enumerate(self.rot):
            if sorted(r) != sorted(graph.inc[v]):
                raise GraphError(f"rotation at vertex {v} does not list its incident edges exactly once")
            self._pos.append({e: i for i, e in enumerate(r)})
        if planar:
            f = len(self.faces())
            if graph.n - graph.m + f != 2:
                raise GraphError(f"Euler check failed: n - m + f = {graph.n - graph.m + f}")

    @classmethod
    def from_neighbours(cls, graph: Graph, order: Sequence[Sequence[int]], planar: bool = True) -> "RotationSystem":
        return cls(graph, [[graph.edge_id(v, w) for w in order[v]] for v in range(graph.n)], planar)

    def neighbour_order(self, v: int) -> list[int]:
        return [self.graph.other(e, v) for e in self.rot[v]]

    def faces(self) -> list[list[int]]:
        """Facial walks as vertex sequences; every dart lies on exactly one."""
        g = self.graph
        seen: set[tuple[int, int]] = set()
        out = []
        for e0, (a, b) in enumerate(g.edges):
            for start in ((a, e0), (b, e0)):
                if start in seen:
                    continue
                walk = []
                v, e = start
                while (v, e) not in seen:
                    seen.add((v, e))
                    walk.append(v)
                    w = g.other(e, v)
                    r = self.rot[w]
                    e = r[(self._pos[w][e] + 1) % len(r)]
                    v = w
                if (v, e) != start:
                    raise GraphError("inconsistent rotation system")
                out.append(walk)
        return out


def face_vector(g: Graph, rot: RotationSystem) -> dict[int, int]:
    """Map face length ``k`` to the number ``f_k`` of faces of that length."""
    if rot.graph != g:
        raise GraphError("rotation system belongs to a different graph")
    fv: dict[int, int] = {}
    for f in rot.faces():
        fv[len(f)] = fv.get(len(f), 0) + 1
    return dict(sorted(fv.items()))


# ---------------------------------------------------------------------------
# cycles


def canonical_cycle(seq: Sequence[int]) -> tuple[int, ...]:
    """Rotate/reflect a cyclic vertex sequence to start at its minimum vertex."""
    k = len(seq)
    i = min(range(k), key=seq.__getitem__)
    fwd = tuple(seq[(i + j) % k] for j in range(k))
    bwd = tuple(seq[(i - j) % k] for j in range(k))
    return min(fwd, bwd)


def cycles_from_edges(g: Graph, eids: Iterable[int]) -> list[tuple[int, ...]]:
    """Split a 2-regular edge set into canonical cycles, sorted."""
    nb: dict[int, list[int]] = {}
    for e in eids:
        u, v = g.edges[e]
        nb.setdefault(u, []).append(v)
        nb.setdefault(v, []).append(u)
    if any(len(x) != 2 for x in nb.values()):
        raise GraphError("edge set is not 2-regular")
    seen: set[int] = set()
    out = []
    for s in sorted(nb):
        if s in seen:
            continue
        cyc = [s]
        seen.add(s)
        prev, cur = s, nb[s][0]
        while cur != s:
            cyc.append(cur)
            seen.add(cur)
            a, b = nb[cur]
            prev, cur = cur, (b if a == prev else a)
        out.append(canonical_cycle(cyc))
    return sorted(out)


def cycle_edge_ids(g: Graph, cyc: Sequence[int]) -> list[int]:
    k = len(cyc)
    return [g.edge_id(cyc[i], cyc[(i + 1) % k]) for i in range(k)]


def is_cycle(g: Graph, cyc: Sequence[int]) -> bool:
    k = len(cyc)
    return k >= 3 and len(set(cyc)) == k and all(g.has_edge(cyc[i], cyc[(i + 1) % k]) for i in range(k))


def is_two_factor(g: Graph, cycles: Sequence[Sequence[int]]) -> bool:
    verts = [v for c in cycles for v in c]
    return sorted(verts) == list(range(g.n)) and all(is_cycle(g, c) for c in cycles)
