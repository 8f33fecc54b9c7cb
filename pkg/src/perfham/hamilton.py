"""Hamiltonian cycles and 2-factors by edge-decision backtracking."""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Iterator

from ._backend import CycleCoverSearch
from .graph import Graph, GraphError, canonical_cycle, cycles_from_edges


def _check_required(g: Graph, required: set[int], forbidden: set[int]) -> None:
    load: Counter[int] = Counter()
    for e in required:
        u, v = g.edges[e]
        if u in forbidden or v in forbidden:
            raise GraphError("required edge touches a forbidden vertex")
        load[u] += 1
        load[v] += 1
    if any(c > 2 for c in load.values()):
        raise GraphError("a vertex is incident to three required edges")


def hamiltonian_cycle_edges(g: Graph, required_edges: Iterable[int] = (),
                            forbidden_vertices: Iterable[int] = ()) -> Iterator[tuple[int, ...]]:
    """Edge-id sets of hamiltonian cycles of ``g - forbidden`` through ``required``."""
    req, forb = set(required_edges), set(forbidden_vertices)
    _check_required(g, req, forb)
    active = [v not in forb for v in range(g.n)]
    return iter(CycleCoverSearch(g.n, g.edges, active, sorted(req), True, None))


def hamiltonian_cycles(g: Graph, required_edges: Iterable[int] = (),
                       forbidden_vertices: Iterable[int] = ()) -> Iterator[tuple[int, ...]]:
    """Every hamiltonian cycle once, as a canonical vertex sequence.

    Cycles come out in the deterministic order of the search tree: branch on
    the lowest vertex with fewest undecided edges, take its lowest edge, try
    "in" before "out".
    """
    for eids in hamiltonian_cycle_edges(g, required_edges, forbidden_vertices):
        yield cycles_from_edges(g, eids)[0]


def count_hamiltonian_cycles(g: Graph, required_edges: Iterable[int] = (),
                             forbidden_vertices: Iterable[int] = ()) -> int:
    return sum(1 for _ in hamiltonian_cycle_edges(g, required_edges, forbidden_vertices))


def find_hamiltonian_cycle(g: Graph, required_edges: Iterable[int] = (),
                           forbidden_vertices: Iterable[int] = ()) -> tuple[int, ...] | None:
    return next(hamiltonian_cycles(g, required_edges, forbidden_vertices), None)


def two_factor_edges(g: Graph, shape: Iterable[int] | None = None) -> Iterator[tuple[int, ...]]:
    want = None if shape is None else sorted(shape)
    lengths = None if want is None else sorted(set(want))
    for eids in CycleCoverSearch(g.n, g.edges, None, (), False, lengths):
        if want is not None:
            got = sorted(len(c) for c in cycles_from_edges(g, eids))
            if got != want:
                continue
        yield eids


def two_factors(g: Graph, shape: Iterable[int] | None = None) -> Iterator[list[tuple[int, ...]]]:
    """All spanning 2-regular subgraphs, optionally with a given cycle-length multiset."""
    for eids in two_factor_edges(g, shape):
        yield cycles_from_edges(g, eids)


__all__ = [
    "canonical_cycle",
    "count_hamiltonian_cycles",
    "find_hamiltonian_cycle",
    "hamiltonian_cycle_edges",
    "hamiltonian_cycles",
    "two_factor_edges",
    "two_factors",
]
