"""Slow, obviously-correct reference implementations used as test oracles."""

from itertools import combinations, permutations, product

from perfham.graph import Graph


def components_count(n, edges):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for u, v in edges:
        parent[find(u)] = find(v)
    return len({find(v) for v in range(n)})


def brute_bridges(g: Graph) -> set[int]:
    base = components_count(g.n, g.edges)
    return {i for i in range(g.m) if components_count(g.n, g.edges[:i] + g.edges[i + 1:]) > base}


def brute_vertex_connectivity(g: Graph) -> int:
    n = g.n
    if any(not g.has_edge(u, v) for u, v in combinations(range(n), 2)):
        for k in range(n):
            for s in combinations(range(n), k):
                rest, _ = g.delete_vertices(s)
                if rest.n > 1 and components_count(rest.n, rest.edges) > 1:
                    return k
    return max(n - 1, 0)


def brute_essential_edge_connectivity(g: Graph) -> int | None:
    best = None
    for mask in range(1, 2 ** (g.n - 1)):
        side = {v for v in range(g.n) if mask >> v & 1}
        inside = any(u in side and v in side for u, v in g.edges)
        outside = any(u not in side and v not in side for u, v in g.edges)
        if inside and outside:
            cut = sum((u in side) != (v in side) for u, v in g.edges)
            best = cut if best is None else min(best, cut)
    return best


def brute_hamiltonian_cycles(g: Graph) -> set[tuple[int, ...]]:
    from perfham.graph import canonical_cycle
    if g.n < 3:
        return set()
    out = set()
    for rest in permutations(range(1, g.n)):
        cyc = (0,) + rest
        if all(g.has_edge(cyc[i], cyc[(i + 1) % g.n]) for i in range(g.n)):
            out.add(canonical_cycle(cyc))
    return out


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    target = set(h.edges)
    for p in permutations(range(g.n)):
        if all(((p[u], p[v]) if p[u] < p[v] else (p[v], p[u])) in target for u, v in g.edges):
            return True
    return False


def brute_factorisations(g: Graph, d: int) -> set[tuple[int, ...]]:
    """All proper d-edge-colourings, quotiented by renaming colours."""
    out = set()
    for cs in product(range(1, d + 1), repeat=g.m):
        ok = True
        for v in range(g.n):
            seen = [cs[e] for e in g.inc[v]]
            if len(set(seen)) != len(seen):
                ok = False
                break
        if ok:
            out.add(relabel_first_seen(cs))
    return out


def factorisations_by_matchings(g: Graph, d: int) -> set[frozenset]:
    """1-factorisations as sets of perfect matchings, via exact cover."""
    matchings = []
    for es in combinations(range(g.m), g.n // 2):
        vs = [x for e in es for x in g.edges[e]]
        if len(set(vs)) == g.n:
            matchings.append(frozenset(es))
    out = set()

    def grow(chosen, used):
        if len(chosen) == d:
            if len(used) == g.m:
                out.add(frozenset(chosen))
            return
        free = min(e for e in range(g.m) if e not in used)
        for mt in matchings:
            if free in mt and not mt & used:
                grow(chosen + [mt], used | mt)

    grow([], frozenset())
    return out


def relabel_first_seen(cs):
    mp = {}
    return tuple(mp.setdefault(c, len(mp) + 1) for c in cs)


def pair_is_hamiltonian(g: Graph, cs, i, j) -> bool:
    es = [g.edges[e] for e in range(g.m) if cs[e] in (i, j)]
    return components_count(g.n, es) == 1
