"""Frontier splitting of the search kernels across worker processes.

Each search is partitioned by fixing the choices at a few vertices, so the
subtrees are disjoint and their union is the sequential output. Results are
merged and sorted, which makes them independent of the worker count.
"""

from __future__ import annotations

import multiprocessing as mp
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations, permutations
from typing import Iterable, Sequence

from ._backend import ColouringSearch, CycleCoverSearch
from .graph import Graph


def _pool(jobs: int) -> ProcessPoolExecutor:
    return ProcessPoolExecutor(max_workers=jobs, mp_context=mp.get_context("fork"))


def colouring_frontier(g: Graph, pre: Sequence[int], d: int, target: int) -> list[list[int]]:
    """Split a precolouring into disjoint extensions until at least ``target`` exist."""
    tasks = [list(pre)]
    for v in range(g.n):
        if len(tasks) >= target:
            break
        nxt = []
        for p in tasks:
            free = [e for e in g.inc[v] if not p[e]]
            if not free:
                nxt.append(p)
                continue
            seen_v = {p[e] for e in g.inc[v] if p[e]}
            for combo in permutations([c for c in range(1, d + 1) if c not in seen_v], len(free)):
                q = p[:]
                ok = True
                for e, c in zip(free, combo):
                    w = g.other(e, v)
                    if any(q[f] == c for f in g.inc[w]):
                        ok = False
                        break
                    q[e] = c
                if ok:
                    nxt.append(q)
        tasks = nxt
    return tasks


def _colour_task(args):
    n, edges, d, pre = args
    return list(ColouringSearch(n, edges, d, pre, True))


def _spectrum_task(args):
    from .factorisation import EdgeColouring, perfect_pairs
    n, edges, d, pre = args
    g = Graph(n, edges)
    counts: dict[int, int] = {}
    best: dict[int, tuple[int, ...]] = {}
    for cs in ColouringSearch(n, edges, d, pre, True):
        k = perfect_pairs(EdgeColouring(g, cs, d)).k
        counts[k] = counts.get(k, 0) + 1
        if k not in best or cs < best[k]:
            best[k] = cs
    return counts, best


def _tasks(g: Graph, jobs: int):
    from .factorisation import Enumeration
    en = Enumeration(g)
    if en.detail:
        return en.d, []
    pre = en.base_precolouring
    return en.d, [(g.n, g.edges, en.d, p) for p in colouring_frontier(g, pre, en.d, 8 * jobs)]


def parallel_colourings(g: Graph, jobs: int) -> list[tuple[int, ...]]:
    d, tasks = _tasks(g, jobs)
    out: list[tuple[int, ...]] = []
    with _pool(jobs) as ex:
        for chunk in ex.map(_colour_task, tasks):
            out.extend(chunk)
    out.sort()
    return out


def parallel_spectrum(g: Graph, jobs: int):
    d, tasks = _tasks(g, jobs)
    counts: dict[int, int] = {}
    best: dict[int, tuple[int, ...]] = {}
    with _pool(jobs) as ex:
        for c, b in ex.map(_spectrum_task, tasks):
            for k, v in c.items():
                counts[k] = counts.get(k, 0) + v
            for k, cs in b.items():
                if k not in best or cs < best[k]:
                    best[k] = cs
    return counts, best


def _links_task(args):
    from .kempe import _switch_targets
    n, edges, d, chunk = args
    g = Graph(n, edges)
    return [(t, s) for t in chunk for s in _switch_targets(g, t, d)]


def parallel_kempe_links(g: Graph, d: int, tuples: list[tuple[int, ...]], jobs: int):
    size = max(1, len(tuples) // (8 * jobs) + 1)
    chunks = [(g.n, g.edges, d, tuples[i:i + size]) for i in range(0, len(tuples), size)]
    links = []
    with _pool(jobs) as ex:
        for part in ex.map(_links_task, chunks):
            links.extend(part)
    links.sort()
    return links


def hamiltonian_frontier(g: Graph, required: Iterable[int], forbidden: Iterable[int]) -> list[list[int]]:
    """Disjoint required-edge sets covering every hamiltonian cycle."""
    req = sorted(set(required))
    forb = set(forbidden)
    touched = {x for e in req for x in g.edges[e]}
    for v in range(g.n):
        if v in forb or v in touched:
            continue
        inc = [e for e in g.inc[v] if not forb & set(g.edges[e])]
        return [sorted(req + [a, b]) for a, b in combinations(sorted(inc), 2)]
    return [req]


def _ham_task(args):
    n, edges, active, req = args
    return list(CycleCoverSearch(n, edges, active, req, True, None))


def parallel_hamiltonian_edges(g: Graph, jobs: int, required: Iterable[int] = (),
                               forbidden: Iterable[int] = ()) -> list[tuple[int, ...]]:
    forb = set(forbidden)
    active = [v not in forb for v in range(g.n)]
    tasks = [(g.n, g.edges, active, r) for r in hamiltonian_frontier(g, required, forb)]
    out: list[tuple[int, ...]] = []
    with _pool(jobs) as ex:
        for part in ex.map(_ham_task, tasks):
            out.extend(part)
    out.sort()
    return out
