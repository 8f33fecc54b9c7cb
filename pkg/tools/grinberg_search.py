"""Face-spiral search for small non-hamiltonian cyclically 5-edge-connected cubic polyhedra.

The 44-vertex graph shipped as grinberg44.cel is the dual of the spiral
``GRINBERG44_SPIRAL``; ``main`` reruns the search over a few face-size
distributions with 24 faces and lists every hit up to isomorphism.
"""

from __future__ import annotations

import sys
from itertools import combinations

from perfham.graph import Graph, components
from perfham.hamilton import find_hamiltonian_cycle
from perfham.iso import canonical_labelling

GRINBERG44_SPIRAL = (5, 5, 5, 5, 5, 8, 5, 8, 5, 8, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 6, 6, 6)
DISTRIBUTIONS = ({5: 18, 6: 3, 8: 3}, {5: 18, 7: 6}, {5: 12, 6: 12}, {5: 15, 6: 6, 7: 3}, {5: 21, 9: 3})


def windup(sizes: list[int]) -> dict[int, set[int]] | None:
    """Dual triangulation from a face spiral, or None if the spiral is invalid."""
    nf = len(sizes)
    adj = {i: set() for i in range(nf)}

    def link(a, b):
        if b in adj[a]:
            return False
        adj[a].add(b)
        adj[b].add(a)
        return len(adj[a]) <= sizes[a] and len(adj[b]) <= sizes[b]

    link(0, 1)
    if not link(2, 1) or not link(2, 0):
        return None
    bnd = [0, 1, 2]
    for k in range(3, nf - 1):
        if not link(k, bnd[-1]) or not link(k, bnd[0]):
            return None
        while len(adj[bnd[0]]) == sizes[bnd[0]]:
            bnd.pop(0)
            if len(bnd) < 2 or not link(k, bnd[0]):
                return None
        while len(adj[bnd[-1]]) == sizes[bnd[-1]]:
            bnd.pop()
            if len(bnd) < 2 or not link(k, bnd[-1]):
                return None
        bnd.append(k)
    last = nf - 1
    for b in bnd:
        if not link(last, b):
            return None
    if any(len(adj[v]) != sizes[v] for v in adj):
        return None
    return adj


def dual_cubic(adj: dict[int, set[int]]) -> Graph | None:
    nf = len(adj)
    tris = [t for t in combinations(range(nf), 3)
            if t[1] in adj[t[0]] and t[2] in adj[t[0]] and t[2] in adj[t[1]]]
    if len(tris) != 2 * nf - 4:
        return None  # separating triangle present
    by_edge: dict[tuple[int, int], list[int]] = {}
    for i, (a, b, c) in enumerate(tris):
        for e in ((a, b), (a, c), (b, c)):
            by_edge.setdefault(e, []).append(i)
    if any(len(x) != 2 for x in by_edge.values()):
        return None
    return Graph(len(tris), [tuple(sorted(x)) for x in by_edge.values()])


def no_short_separating_cycles(adj: dict[int, set[int]]) -> bool:
    nf = len(adj)
    tg = Graph(nf, [(a, b) for a in adj for b in adj[a] if a < b])
    for a, b, c in combinations(range(nf), 3):
        if b in adj[a] and c in adj[b] and c in adj[a]:
            h, _ = tg.delete_vertices([a, b, c])
            if len(components(h)) > 1:
                return False
    for a in range(nf):
        for b, d in combinations(sorted(adj[a]), 2):
            for c in adj[b] & adj[d]:
                if c != a and c not in adj[a] and b not in adj[d]:
                    h, _ = tg.delete_vertices([a, b, c, d])
                    if len(components(h)) > 1:
                        return False
    return True


def grinberg44() -> Graph:
    g = dual_cubic(windup(list(GRINBERG44_SPIRAL)))
    assert g is not None and g.n == 44
    return g


def _extend(k, sizes, adj, bnd):
    """Add face ``k`` to a partial spiral; None when a face overflows."""
    adj = {v: set(x) for v, x in adj.items()}
    adj[k] = set()
    bnd = list(bnd)

    def link(a, b):
        if b in adj[a]:
            return False
        adj[a].add(b)
        adj[b].add(a)
        return len(adj[a]) <= sizes[a] and len(adj[b]) <= sizes[b]

    if k == 0:
        return adj, [0]
    if k == 1:
        link(0, 1)
        return adj, [0, 1]
    if k == 2:
        return (adj, [0, 1, 2]) if link(2, 1) and link(2, 0) else None
    if not link(k, bnd[-1]) or not link(k, bnd[0]):
        return None
    while len(adj[bnd[0]]) == sizes[bnd[0]]:
        bnd.pop(0)
        if len(bnd) < 2 or not link(k, bnd[0]):
            return None
    while len(adj[bnd[-1]]) == sizes[bnd[-1]]:
        bnd.pop()
        if len(bnd) < 2 or not link(k, bnd[-1]):
            return None
    bnd.append(k)
    return adj, bnd


def search(dist: dict[int, int]) -> dict:
    nf = sum(dist.values())
    found = {}

    def close(sizes, adj, bnd):
        adj = {v: set(x) for v, x in adj.items()}
        last = nf - 1
        adj[last] = set()
        for b in bnd:
            if b in adj[last]:
                return
            adj[last].add(b)
            adj[b].add(last)
        if any(len(adj[v]) != sizes[v] for v in adj) or not no_short_separating_cycles(adj):
            return
        g = dual_cubic(adj)
        if g is None or g.regularity() != 3 or find_hamiltonian_cycle(g) is not None:
            return
        found.setdefault(canonical_labelling(g)[1], (tuple(sizes), g))

    def dfs(k, sizes, adj, bnd, left):
        for s in sorted(left):
            if not left[s]:
                continue
            sizes.append(s)
            if k == nf - 1:
                close(sizes, adj, bnd)
            else:
                st = _extend(k, sizes, adj, bnd)
                if st is not None:
                    left[s] -= 1
                    dfs(k + 1, sizes, st[0], st[1], left)
                    left[s] += 1
            sizes.pop()

    dfs(0, [], {}, [], dict(dist))
    return found


def main() -> None:
    seen = {}
    for dist in DISTRIBUTIONS:
        hits = search(dist)
        print(dist, len(hits), "hit(s)", flush=True)
        seen.update(hits)
    for spiral, g in seen.values():
        print(spiral, g.n, "vertices")


if __name__ == "__main__":
    sys.setrecursionlimit(10000)
    main()
