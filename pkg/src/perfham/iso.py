"""Graph isomorphism by colour refinement plus individualisation.

``canonical_form`` explores the full individualisation tree and keeps the
lexicographically least relabelled edge list, which is fine for the few
dozen vertices this package deals with. ``is_isomorphic`` runs a paired
search that stops at the first consistent bijection.
"""

from __future__ import annotations

from typing import Sequence

from .graph import Graph


def _refine(g: Graph, colours: list[int]) -> tuple[list[int], list]:
    """Equitable refinement; returns new colours and an invariant trace."""
    trace = []
    cur = colours
    ncls = len(set(cur))
    while True:
        sigs = [(cur[v], tuple(sorted(cur[w] for w in g.adj[v]))) for v in range(g.n)]
        order = sorted(set(sigs))
        trace.append(tuple(order))
        index = {s: i for i, s in enumerate(order)}
        nxt = [index[s] for s in sigs]
        if len(order) == ncls:
            return nxt, trace
        cur, ncls = nxt, len(order)


def _target_cell(colours: list[int]) -> list[int] | None:
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colours):
        cells.setdefault(c, []).append(v)
    best = None
    for c in sorted(cells):
        cell = cells[c]
        if len(cell) > 1 and (best is None or len(cell) < len(best)):
            best = cell
    return best


def _individualise(colours: list[int], v: int) -> list[int]:
    out = [2 * c + 1 for c in colours]
    out[v] = 2 * colours[v]
    return out


def _certificate(g: Graph, colours: list[int]) -> tuple[tuple[int, int], ...]:
    return tuple(sorted((min(colours[u], colours[v]), max(colours[u], colours[v])) for u, v in g.edges))


def canonical_labelling(g: Graph) -> tuple[list[int], tuple[tuple[int, int], ...]]:
    """Return ``(perm, cert)`` with ``perm[v]`` the canonical label of ``v``.

    Two graphs are isomorphic exactly when their certificates agree.
    """
    best: list = [None, None]

    def walk(colours: list[int]) -> None:
        colours, _ = _refine(g, colours)
        cell = _target_cell(colours)
        if cell is None:
            cert = _certificate(g, colours)
            if best[1] is None or cert < best[1]:
                best[0], best[1] = colours, cert
            return
        for v in cell:
            walk(_individualise(colours, v))

    walk([0] * g.n)
    return best[0], best[1]


def canonical_form(g: Graph) -> Graph:
    perm, _ = canonical_labelling(g)
    return g.relabel(perm)


def _verify(g: Graph, h: Graph, phi: Sequence[int]) -> bool:
    if sorted(phi) != list(range(h.n)):
        return False
    return all(h.has_edge(phi[u], phi[v]) for u, v in g.edges)


def find_isomorphism(g: Graph, h: Graph) -> list[int] | None:
    """A bijection ``phi`` with ``uv in E(g) <=> phi[u]phi[v] in E(h)``, or None."""
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return None

    def walk(cg: list[int], ch: list[int]) -> list[int] | None:
        cg, tg = _refine(g, cg)
        ch, th = _refine(h, ch)
        if tg != th:
            return None
        cell = _target_cell(cg)
        if cell is None:
            inv = {c: w for w, c in enumerate(ch)}
            phi = [inv[c] for c in cg]
            return phi if _verify(g, h, phi) else None
        v = cell[0]
        for w in range(h.n):
            if ch[w] == cg[v]:
                found = walk(_individualise(cg, v), _individualise(ch, w))
                if found is not None:
                    return found
        return None

    return walk([0] * g.n, [0] * h.n)


def is_isomorphic(g: Graph, h: Graph, witness: bool = False):
    """Exact isomorphism test; with ``witness=True`` return ``(bool, phi)``."""
    phi = find_isomorphism(g, h)
    if witness:
        return phi is not None, phi
    return phi is not None


def is_automorphism(g: Graph, phi: Sequence[int]) -> bool:
    return _verify(g, g, phi)
