"""Edge-Kempe switches and equivalence classes of 1-factorisations."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .factorisation import ColouringError, EdgeColouring, Enumeration, _pair_cycles, canonical_colours
from .graph import Graph, canonical_cycle, cycle_edge_ids

DEFAULT_CAP = 10 ** 7


class CapExceeded(RuntimeError):
    pass


def bichromatic_components(col: EdgeColouring, i: int, j: int) -> list[tuple[int, ...]]:
    if i == j:
        raise ColouringError("need two distinct colours")
    return sorted(canonical_cycle(c) for c in _pair_cycles(col, i, j))


def kempe_switch(col: EdgeColouring, cycle: Sequence[int]) -> EdgeColouring:
    """Swap the two colours along one bichromatic component given as a vertex cycle."""
    g = col.graph
    try:
        eids = cycle_edge_ids(g, cycle)
    except Exception as exc:
        raise ColouringError("not a cycle of the graph") from exc
    used = {col.colours[e] for e in eids}
    if len(used) != 2 or len(eids) < 2:
        raise ColouringError("cycle is not bichromatic")
    i, j = sorted(used)
    if canonical_cycle(cycle) not in bichromatic_components(col, i, j):
        raise ColouringError("cycle is not a bichromatic component")
    cs = list(col.colours)
    for e in eids:
        cs[e] = i + j - cs[e]
    return EdgeColouring(g, tuple(cs), col.d)


def _switch_targets(g: Graph, cs: tuple[int, ...], d: int):
    """Canonical colour tuples reachable by one switch on a non-spanning component."""
    col = EdgeColouring(g, cs, d)
    for i, j in combinations(range(1, d + 1), 2):
        comps = _pair_cycles(col, i, j)
        if len(comps) == 1:
            continue  # switching a spanning cycle is a colour transposition
        for cyc in comps:
            out = list(cs)
            for e in cycle_edge_ids(g, cyc):
                out[e] = i + j - out[e]
            yield canonical_colours(out)


@dataclass
class KempePartition:
    colourings: list[EdgeColouring]
    class_of: list[int]
    status: str = "complete"

    @property
    def classes(self) -> int:
        return len(set(self.class_of))

    @property
    def sizes(self) -> list[int]:
        sizes: dict[int, int] = {}
        for c in self.class_of:
            sizes[c] = sizes.get(c, 0) + 1
        return [sizes[c] for c in sorted(sizes)]

    def members(self, cls: int) -> list[EdgeColouring]:
        return [col for col, c in zip(self.colourings, self.class_of) if c == cls]


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def partition_from_links(g: Graph, d: int, tuples: list[tuple[int, ...]], links) -> KempePartition:
    index = {t: i for i, t in enumerate(tuples)}
    parent = list(range(len(tuples)))
    for a, b in links:
        ra, rb = _find(parent, index[a]), _find(parent, index[b])
        if ra != rb:
            # keep the smaller index as root so the result is order independent
            if ra < rb:
                parent[rb] = ra
            else:
                parent[ra] = rb
    roots: dict[int, int] = {}
    class_of = []
    for i in range(len(tuples)):
        r = _find(parent, i)
        class_of.append(roots.setdefault(r, len(roots)))
    cols = [EdgeColouring(g, t, d) for t in tuples]
    return KempePartition(cols, class_of)


def kempe_classes(g: Graph, cap: int = DEFAULT_CAP, jobs: int = 1) -> KempePartition:
    """Partition all canonical 1-factorisations of ``g`` into Kempe classes."""
    en = Enumeration(g)
    if jobs > 1:
        from .parallel import parallel_colourings, parallel_kempe_links
        tuples = []
        for t in parallel_colourings(g, jobs):
            tuples.append(t)
            if len(tuples) > cap:
                raise CapExceeded(f"more than {cap} colourings")
    else:
        tuples = []
        for t in en.raw():
            tuples.append(t)
            if len(tuples) > cap:
                raise CapExceeded(f"more than {cap} colourings")
    tuples.sort()
    if not tuples:
        return KempePartition([], [], "no proper colouring")
    d = g.regularity()
    if jobs > 1:
        links = parallel_kempe_links(g, d, tuples, jobs)
    else:
        links = ((t, s) for t in tuples for s in _switch_targets(g, t, d))
    return partition_from_links(g, d, tuples, links)


__all__ = ["CapExceeded", "DEFAULT_CAP", "KempePartition", "bichromatic_components",
           "kempe_classes", "kempe_switch"]
