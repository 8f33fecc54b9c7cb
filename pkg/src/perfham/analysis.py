"""Whole-graph verifiers: charonian sweeps, connectivity facts, face statistics."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .factorisation import EdgeColouring, cut_profile, perfect_pairs
from .graph import (Graph, GraphError, RotationSystem, components, cycles_from_edges, diamonds,
                    edge_cut, face_vector, vertex_connectivity)
from .hamilton import hamiltonian_cycle_edges, two_factor_edges


def bridge_in_remainder(g: Graph, removed: Iterable[int]) -> int | None:
    """Least bridge of ``g`` minus the given edges, or None."""
    gone = set(removed)
    n = g.n
    disc = [-1] * n
    low = [0] * n
    timer = 0
    found: list[int] = []
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(g.inc[root]))]
        while stack:
            v, pe, it = stack[-1]
            advanced = False
            for e in it:
                if e == pe or e in gone:
                    continue
                w = g.other(e, v)
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, e, iter(g.inc[w])))
                    advanced = True
                    break
                low[v] = min(low[v], disc[w])
            if not advanced:
                stack.pop()
                if stack:
                    u = stack[-1][0]
                    low[u] = min(low[u], low[v])
                    if low[v] > disc[u]:
                        found.append(pe)
    return min(found) if found else None


@dataclass
class CharonianVerdict:
    """``holds`` is True, False, or None when the cycle budget ran out."""

    holds: bool | None
    checked: int
    counterexample: tuple[int, ...] | None = None
    bridge: int | None = None
    kind: str = "hamiltonian cycle"

    @property
    def inconclusive(self) -> bool:
        return self.holds is None

    def __bool__(self) -> bool:
        return bool(self.holds)


def _frontier_tasks(g: Graph) -> list[list[int]]:
    from .parallel import hamiltonian_frontier
    return hamiltonian_frontier(g, (), ())


def _sweep_task(args):
    n, edges, req, budget = args
    from ._backend import CycleCoverSearch
    g = Graph(n, edges)
    count = 0
    for eids in CycleCoverSearch(n, edges, None, req, True, None):
        count += 1
        b = bridge_in_remainder(g, eids)
        if b is not None:
            return count, eids, b
        if budget is not None and count > budget:
            break
    return count, None, None


def _sweep(g: Graph, budget: int | None, jobs: int) -> CharonianVerdict:
    tasks = [(g.n, g.edges, req, budget) for req in _frontier_tasks(g)]
    if jobs > 1:
        from .parallel import _pool
        with _pool(jobs) as ex:
            results = list(ex.map(_sweep_task, tasks))
    else:
        results = []
        total = 0
        for t in tasks:
            r = _sweep_task(t)
            results.append(r)
            total += r[0]
            if r[1] is not None or (budget is not None and total > budget):
                break
    total = 0
    for count, eids, bridge in results:
        if eids is not None:
            return CharonianVerdict(False, total + count, cycles_from_edges(g, eids)[0], bridge)
        total += count
        if budget is not None and total > budget:
            return CharonianVerdict(None, total)
    return CharonianVerdict(True, total)


def is_charonian(g: Graph, budget: int | None = None, jobs: int = 1) -> CharonianVerdict:
    """Every hamiltonian cycle leaves a bridgeless remainder.

    Cycles are swept in a fixed order (a split on the edge pairs at the
    lowest vertex, then the search order), so the counterexample does not
    depend on ``jobs``.
    """
    if next(hamiltonian_cycle_edges(g), None) is None:
        raise GraphError("not hamiltonian")
    return _sweep(g, budget, jobs)


def _two_factor_sweep(g: Graph, shape: Sequence[int] | None, budget: int | None,
                      kind: str) -> CharonianVerdict:
    count = 0
    for eids in two_factor_edges(g, shape):
        count += 1
        b = bridge_in_remainder(g, eids)
        if b is not None:
            return CharonianVerdict(False, count, cycles_from_edges(g, eids), b, kind)
        if budget is not None and count > budget:
            return CharonianVerdict(None, count, kind=kind)
    return CharonianVerdict(True, count, kind=kind)


def is_strongly_charonian(g: Graph, budget: int | None = None, jobs: int = 1) -> CharonianVerdict:
    """Charonian, and every 2-factor made of a 4-cycle and an (n-4)-cycle leaves no bridge."""
    first = is_charonian(g, budget, jobs)
    if not first.holds:
        return first
    second = _two_factor_sweep(g, (4, g.n - 4), budget, "{4, n-4} 2-factor")
    second.checked += first.checked
    return second


def all_two_factors_bridgeless(g: Graph, budget: int | None = None) -> CharonianVerdict:
    return _two_factor_sweep(g, None, budget, "2-factor")


def hamiltonian_pair_census(g: Graph, e: tuple[int, int], e2: tuple[int, int]) -> int:
    """Number of hamiltonian cycles through both (adjacent) edges."""
    if len(set(e) & set(e2)) != 1:
        raise GraphError("edges must be adjacent")
    req = (g.edge_id(*e), g.edge_id(*e2))
    return sum(1 for _ in hamiltonian_cycle_edges(g, req))


# --------------------------------------------------------- PH connectivity

@dataclass
class ConnectivityReport:
    connectivity: int
    four_cuts: list[tuple[int, ...]]
    cycle_cuts: list[tuple[int, ...]]
    sampled: int
    profiles: dict[int, set[tuple[int, ...]]] = field(default_factory=dict)
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _is_four_cycle(g: Graph, x: Sequence[int]) -> bool:
    sub = [(u, v) for u, v in combinations(sorted(x), 2) if g.has_edge(u, v)]
    if len(sub) != 4:
        return False
    deg = {v: 0 for v in x}
    for u, v in sub:
        deg[u] += 1
        deg[v] += 1
    return all(c == 2 for c in deg.values())


def sorted_profile(phi: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted(phi))


def verify_ph_connectivity(g: Graph, col: EdgeColouring, samples: int = 1000,
                           seed: int = 0) -> ConnectivityReport:
    """Connectivity facts forced by a perfect 1-factorisation of a quintic graph."""
    col.require_factorisation()
    if g.regularity() != 5:
        raise GraphError("graph is not quintic")
    if not perfect_pairs(col).all_perfect:
        raise GraphError("colouring is not perfect")
    kappa = vertex_connectivity(g)
    rep = ConnectivityReport(kappa, [], [], 0)
    if kappa < 4:
        rep.violations.append(f"vertex connectivity {kappa} < 4")
    if kappa == 4:
        for x in combinations(range(g.n), 4):
            rest, _ = g.delete_vertices(x)
            if len(components(rest)) > 1:
                rep.four_cuts.append(x)
                if _is_four_cycle(g, x):
                    rep.cycle_cuts.append(x)
        if rep.cycle_cuts:
            rep.violations.append("a 4-vertex cut induces a 4-cycle")
    rng = random.Random(seed)
    for _ in range(samples):
        size = rng.randint(1, g.n - 1)
        s = rng.sample(range(g.n), size)
        cut = edge_cut(g, s)
        prof = sorted_profile(cut_profile(col, cut))
        rep.profiles.setdefault(len(cut), set()).add(prof)
        rep.sampled += 1
    for k in (0, 1, 2, 3, 4, 6):
        if rep.profiles.get(k):
            rep.violations.append(f"edge cut of size {k} found")
    if rep.profiles.get(7, set()) - {(1, 1, 1, 1, 3)}:
        rep.violations.append("7-edge cut with a profile other than (1,1,1,1,3)")
    return rep


# ------------------------------------------------------------ face counts

@dataclass
class EulerStats:
    n: int
    m: int
    faces: dict[int, int]
    f3: int
    f3_bound: bool
    s: int
    s_bound: bool
    diamonds: int
    diamond_bound: bool

    @property
    def ok(self) -> bool:
        return self.f3_bound and self.s_bound and self.diamond_bound


def euler_stats(g: Graph, rot: RotationSystem) -> EulerStats:
    if rot.graph != g:
        raise GraphError("rotation system belongs to another graph")
    fv = face_vector(g, rot)
    nf = sum(fv.values())
    if g.n - g.m + nf != 2:
        raise GraphError("embedding fails the Euler check")
    f3 = fv.get(3, 0)
    s = 6 * f3 - 2 * g.m
    dia = len(diamonds(g))
    return EulerStats(g.n, g.m, dict(sorted(fv.items())), f3, f3 >= g.n + 8, s, s >= g.n + 48,
                      dia, 2 * dia >= s)
