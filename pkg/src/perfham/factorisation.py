"""Edge colourings, 1-factorisation enumeration and perfect-pair profiles."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Sequence

from ._backend import ColouringSearch
from .graph import (EdgeCut, Graph, GraphError, RotationSystem, bridges, canonical_cycle,
                    cycle_edge_ids, cycles_from_edges, diamonds, is_two_factor,
                    vertex_connectivity)
from .hamilton import hamiltonian_cycle_edges


class ColouringError(ValueError):
    pass


@dataclass(frozen=True)
class Failure:
    """Negative outcome of a search that is not an error (falsy)."""

    reason: str

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class EdgeColouring:
    graph: Graph
    colours: tuple[int, ...]
    d: int

    def __post_init__(self):
        if len(self.colours) != self.graph.m:
            raise ColouringError("colour array length differs from edge count")
        if any(not 1 <= c <= self.d for c in self.colours):
            raise ColouringError(f"colours must lie in 1..{self.d}")

    @classmethod
    def from_sequence(cls, g: Graph, colours: Sequence[int], d: int | None = None) -> "EdgeColouring":
        cs = tuple(int(c) for c in colours)
        return cls(g, cs, d if d is not None else max(cs, default=0))

    @classmethod
    def from_mapping(cls, g: Graph, mapping: dict, d: int | None = None) -> "EdgeColouring":
        """Build from ``{(u, v): colour}`` with either endpoint order."""
        cs = [0] * g.m
        for (u, v), c in mapping.items():
            cs[g.edge_id(u, v)] = c
        return cls.from_sequence(g, cs, d)

    def __getitem__(self, e: int) -> int:
        return self.colours[e]

    def colour_of(self, u: int, v: int) -> int:
        return self.colours[self.graph.edge_id(u, v)]

    def is_proper(self) -> bool:
        g = self.graph
        return all(len({self.colours[e] for e in g.inc[v]}) == len(g.inc[v]) for v in range(g.n))

    def is_factorisation(self) -> bool:
        """Proper on a d-regular graph, so every colour class is a perfect matching."""
        return self.graph.regularity() == self.d and self.is_proper()

    def require_factorisation(self) -> None:
        if not self.is_factorisation():
            raise ColouringError("not a 1-factorisation")

    def colour_class(self, i: int) -> list[int]:
        return [e for e, c in enumerate(self.colours) if c == i]

    def colours_at(self, v: int) -> set[int]:
        return {self.colours[e] for e in self.graph.inc[v]}

    def permute(self, perm: dict[int, int] | Sequence[int]) -> "EdgeColouring":
        """Apply a colour permutation, given as a dict or as ``perm[c-1]``."""
        if isinstance(perm, dict):
            f = perm.get
            cs = tuple(f(c, c) for c in self.colours)
        else:
            cs = tuple(perm[c - 1] for c in self.colours)
        return EdgeColouring(self.graph, cs, self.d)

    def canonical(self) -> "EdgeColouring":
        """Least representative under colour permutation: relabel by first use."""
        relabel: dict[int, int] = {}
        for c in self.colours:
            if c not in relabel:
                relabel[c] = len(relabel) + 1
        nxt = len(relabel) + 1
        for c in range(1, self.d + 1):
            if c not in relabel:
                relabel[c] = nxt
                nxt += 1
        return EdgeColouring(self.graph, tuple(relabel[c] for c in self.colours), self.d)

    def is_canonical(self) -> bool:
        return self.canonical().colours == self.colours


def canonical_colours(colours: Sequence[int]) -> tuple[int, ...]:
    relabel: dict[int, int] = {}
    out = []
    for c in colours:
        r = relabel.get(c)
        if r is None:
            r = relabel[c] = len(relabel) + 1
        out.append(r)
    return tuple(out)


# ---------------------------------------------------------------- profiles

def _pair_cycles(col: EdgeColouring, i: int, j: int) -> list[list[int]]:
    """Vertex sequences of the cycles of E_i + E_j, by walking."""
    g, cs = col.graph, col.colours
    mate = [[-1, -1] for _ in range(g.n)]
    for e, c in enumerate(cs):
        if c == i or c == j:
            u, v = g.edges[e]
            k = 0 if c == i else 1
            mate[u][k] = v
            mate[v][k] = u
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s] or mate[s][0] < 0:
            continue
        cyc = [s]
        seen[s] = True
        prev_k = 0
        v = mate[s][0]
        while v != s:
            seen[v] = True
            cyc.append(v)
            prev_k ^= 1
            v = mate[v][prev_k]
        out.append(cyc)
    return out


@dataclass(frozen=True)
class PerfectPairProfile:
    n: int
    cycles: dict[tuple[int, int], int]

    @property
    def perfect(self) -> dict[tuple[int, int], bool]:
        return {p: c == 1 for p, c in self.cycles.items()}

    @property
    def perfect_pairs(self) -> list[tuple[int, int]]:
        return [p for p, c in self.cycles.items() if c == 1]

    @property
    def k(self) -> int:
        return sum(1 for c in self.cycles.values() if c == 1)

    @property
    def all_perfect(self) -> bool:
        return all(c == 1 for c in self.cycles.values())


def perfect_pairs(col: EdgeColouring) -> PerfectPairProfile:
    col.require_factorisation()
    n = col.graph.n
    cycles = {}
    for i, j in combinations(range(1, col.d + 1), 2):
        # both classes are perfect matchings, so the cycles cover every vertex
        cycles[(i, j)] = len(_pair_cycles(col, i, j))
    return PerfectPairProfile(n, cycles)


def count_perfect_pairs(col: EdgeColouring) -> int:
    return perfect_pairs(col).k


# ------------------------------------------------------------- enumeration

class Enumeration:
    """Iterable over canonical 1-factorisations of a regular graph.

    ``status`` reads ``"not run"`` until iteration finishes, then either
    ``"complete"`` or ``"no proper colouring"``; a graph failing the
    preconditions (irregular, odd order) reports the latter immediately
    with the reason in ``detail``.
    """

    def __init__(self, g: Graph, pre: Sequence[int] | None = None):
        self.graph = g
        self.d = g.regularity()
        self.count = 0
        self.status = "not run"
        self.detail = ""
        self._pre = pre
        if self.d is None or self.d == 0:
            self.detail = "graph is not regular"
        elif g.n % 2:
            self.detail = "odd order"
        if self.detail:
            self.status = "no proper colouring"

    @property
    def base_precolouring(self) -> list[int]:
        pre = [0] * self.graph.m
        for i, e in enumerate(sorted(self.graph.inc[0])):
            pre[e] = i + 1
        return pre

    def raw(self) -> Iterator[tuple[int, ...]]:
        if self.detail:
            return
        pre = self._pre if self._pre is not None else self.base_precolouring
        g = self.graph
        self.count = 0
        for cs in ColouringSearch(g.n, g.edges, self.d, pre, True):
            # colours at vertex 0 are 1..d on EdgeIds 0..d-1, so this already holds
            assert cs == canonical_colours(cs)
            self.count += 1
            yield cs
        self.status = "complete" if self.count else "no proper colouring"
        if not self.count:
            self.detail = "no proper d-edge-colouring"

    def __iter__(self) -> Iterator[EdgeColouring]:
        g, d = self.graph, self.d
        for cs in self.raw():
            yield EdgeColouring(g, cs, d)


def enumerate_factorisations(g: Graph) -> Enumeration:
    """All 1-factorisations of ``g`` up to colour permutation, canonical form."""
    return Enumeration(g)


def count_factorisations(g: Graph, jobs: int = 1) -> int:
    if jobs > 1:
        from .parallel import parallel_colourings
        return sum(1 for _ in parallel_colourings(g, jobs))
    return sum(1 for _ in Enumeration(g).raw())


@dataclass
class SpectrumReport:
    spectrum: list[int]
    witnesses: dict[int, EdgeColouring]
    total: int
    counts: dict[int, int] = field(default_factory=dict)
    status: str = "complete"


def _profile_k(g: Graph, cs: Sequence[int], d: int) -> int:
    return perfect_pairs(EdgeColouring(g, tuple(cs), d)).k


def spectrum(g: Graph, jobs: int = 1) -> SpectrumReport:
    """Achievable perfect-pair counts; the witness for each k is the least colouring."""
    d = g.regularity()
    if jobs > 1:
        from .parallel import parallel_spectrum
        counts, best = parallel_spectrum(g, jobs)
    else:
        counts, best = {}, {}
        en = Enumeration(g)
        for cs in en.raw():
            k = _profile_k(g, cs, d)
            counts[k] = counts.get(k, 0) + 1
            if k not in best or cs < best[k]:
                best[k] = cs
    total = sum(counts.values())
    wit = {k: EdgeColouring(g, best[k], d) for k in sorted(best)}
    return SpectrumReport(sorted(counts), wit, total, dict(sorted(counts.items())),
                          "complete" if total else "no proper colouring")


def is_perfectly_hamiltonian(g: Graph) -> tuple[bool, EdgeColouring | None]:
    for col in Enumeration(g):
        if perfect_pairs(col).all_perfect:
            return True, col
    return False, None


# ------------------------------------------------------------ cubic graphs

def three_edge_colour_cubic(g: Graph, offset: int = 0) -> EdgeColouring | Failure:
    """Proper 3-edge-colouring with colours ``offset+1 .. offset+3``.

    The returned colouring has ``d = offset + 3``.
    """
    if g.regularity() != 3:
        raise GraphError("graph is not cubic")
    if bridges(g):
        return Failure("bridge")
    pre = [0] * g.m
    for i, e in enumerate(sorted(g.inc[0])):
        pre[e] = i + 1
    cs = next(iter(ColouringSearch(g.n, g.edges, 3, pre, True)), None)
    if cs is None:
        return Failure("class-2")
    return EdgeColouring(g, tuple(c + offset for c in cs), 3 + offset)


def extend_two_factor(g: Graph, f: Sequence[Sequence[int]]) -> EdgeColouring | Failure:
    """Colour the 2-factor ``f`` with 1/2 alternately and the rest with 3, 4, 5."""
    if g.regularity() != 5:
        raise GraphError("graph is not quintic")
    if not is_two_factor(g, f):
        raise GraphError("not a 2-factor of the graph")
    if any(len(c) % 2 for c in f):
        raise ColouringError("parity")
    cs = [0] * g.m
    for cyc in f:
        for pos, e in enumerate(cycle_edge_ids(g, cyc)):
            cs[e] = 1 + pos % 2
    rest = [e for e in range(g.m) if not cs[e]]
    sub = Graph(g.n, [g.edges[e] for e in rest])
    col3 = three_edge_colour_cubic(sub, offset=2)
    if not col3:
        return col3
    for e in rest:
        cs[e] = col3.colours[sub.edge_id(*g.edges[e])]
    return EdgeColouring(g, tuple(cs), 5)


def bounded_factorisation(g: Graph, rot: RotationSystem | None = None) -> EdgeColouring | Failure:
    """A 1-factorisation with at most nine perfect pairs, built around a diamond.

    For a diamond with shared edge ``pq``, apexes ``v`` and ``w``, take the
    4-cycle ``v p w q`` together with a hamiltonian cycle of the remaining
    graph as a 2-factor and extend it; the pair (1, 2) is then not perfect.
    """
    if g.regularity() != 5:
        raise GraphError("graph is not quintic")
    if rot is not None and rot.graph != g:
        raise GraphError("rotation system belongs to another graph")
    if vertex_connectivity(g) < 5:
        raise GraphError("graph is not 5-connected")
    ds = diamonds(g)
    if not ds:
        raise GraphError("no diamond")
    for t1, t2 in ds:
        p, q = sorted(set(t1) & set(t2))
        apexes = sorted([next(x for x in t1 if x not in t2), next(x for x in t2 if x not in t1)])
        for v in apexes:
            w = apexes[1] if v == apexes[0] else apexes[0]
            square = canonical_cycle([v, p, w, q])
            for eids in hamiltonian_cycle_edges(g, (), (v, p, q, w)):
                big = cycles_from_edges(g, eids)[0]
                col = extend_two_factor(g, [square, big])
                if col and perfect_pairs(col).k <= 9:
                    return col
    return Failure("diamonds exhausted")


# ------------------------------------------------------------------ peeling

def peel(col: EdgeColouring, drop: int | tuple[int, int]) -> tuple[Graph, EdgeColouring]:
    """Remove one colour class, or a perfect pair of classes, and relabel."""
    col.require_factorisation()
    gone = {drop} if isinstance(drop, int) else set(drop)
    if any(not 1 <= c <= col.d for c in gone):
        raise ColouringError("colour out of range")
    if len(gone) == 2:
        i, j = sorted(gone)
        if perfect_pairs(col).cycles[(i, j)] != 1:
            raise ColouringError("pair not perfect")
    elif len(gone) != 1:
        raise ColouringError("drop one colour or a pair of distinct colours")
    keep = [c for c in range(1, col.d + 1) if c not in gone]
    newc = {c: i + 1 for i, c in enumerate(keep)}
    g = col.graph
    pairs = [(g.edges[e], newc[c]) for e, c in enumerate(col.colours) if c not in gone]
    h = Graph(g.n, [p for p, _ in pairs])
    cs = [0] * h.m
    for (u, v), c in pairs:
        cs[h.edge_id(u, v)] = c
    return h, EdgeColouring(h, tuple(cs), len(keep))


# ------------------------------------------------------------------- parity

@dataclass(frozen=True)
class ParityReport:
    phi: tuple[int, ...]
    checked: tuple[tuple[int, int], ...]
    violations: tuple[tuple[int, int], ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def cut_profile(col: EdgeColouring, cut: EdgeCut) -> tuple[int, ...]:
    phi = [0] * col.d
    for e in cut.edges:
        phi[col.colours[e] - 1] += 1
    return tuple(phi)


def parity_check(col: EdgeColouring, cut: EdgeCut,
                 profile: PerfectPairProfile | None = None) -> ParityReport:
    """For each perfect pair the two colours must cross the cut a positive even number of times."""
    if profile is None:
        profile = perfect_pairs(col)
    phi = cut_profile(col, cut)
    checked = tuple(profile.perfect_pairs)
    bad = tuple((i, j) for i, j in checked if (phi[i - 1] + phi[j - 1]) % 2 or phi[i - 1] + phi[j - 1] == 0)
    return ParityReport(phi, checked, bad)


__all__ = [
    "ColouringError", "EdgeColouring", "Enumeration", "Failure", "ParityReport",
    "PerfectPairProfile", "SpectrumReport", "bounded_factorisation", "canonical_colours",
    "count_factorisations", "count_perfect_pairs", "cut_profile", "enumerate_factorisations",
    "extend_two_factor", "is_perfectly_hamiltonian", "parity_check", "peel", "perfect_pairs",
    "spectrum", "three_edge_colour_cubic",
]
