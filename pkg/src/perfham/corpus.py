"""Bundled graphs, colourings and building blocks."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .factorisation import EdgeColouring, perfect_pairs
from .formats import CelDocument, read_cel
from .graph import Graph, RotationSystem

_PKG = "perfham.data"


@dataclass
class CorpusEntry:
    name: str
    graph: Graph
    rotation: RotationSystem | None
    colouring: EdgeColouring | None
    meta: dict[str, str] = field(default_factory=dict)
    provenance: str = ""

    @property
    def claimed_k(self) -> int | None:
        k = self.meta.get("k")
        return None if k is None else int(k)

    def ints(self, key: str) -> list[int]:
        return [int(x) for x in self.meta.get(key, "").split()]


def entry_from_document(name: str, doc: CelDocument) -> CorpusEntry:
    return CorpusEntry(name, doc.graph, doc.rotation, doc.colouring, dict(doc.meta),
                       " ".join(doc.comments))


def data_dir() -> Path:
    return Path(__file__).with_name("data")


def names() -> list[str]:
    return sorted(p.name[:-4] for p in resources.files(_PKG).iterdir() if p.name.endswith(".cel"))


@lru_cache(maxsize=None)
def load(name: str) -> CorpusEntry:
    text = resources.files(_PKG).joinpath(f"{name}.cel").read_text(encoding="utf-8")
    return entry_from_document(name, read_cel(text))


def entries() -> list[CorpusEntry]:
    return [load(n) for n in names()]


def coloured_entries() -> list[CorpusEntry]:
    return [e for e in entries() if e.colouring is not None and e.graph.regularity() == e.colouring.d]


def family(name: str) -> list[CorpusEntry]:
    return [e for e in entries() if e.meta.get("family") == name]


def verify_entry(entry: CorpusEntry) -> list[str]:
    """Problems found when re-checking a corpus entry (empty list means it verifies)."""
    issues = []
    col = entry.colouring
    if col is not None:
        if not col.is_proper():
            issues.append("stored colouring is not proper")
        elif entry.graph.regularity() == col.d:
            k = perfect_pairs(col).k
            if entry.claimed_k is not None and k != entry.claimed_k:
                issues.append(f"claimed k={entry.claimed_k} but recount gives {k}")
    if entry.rotation is not None:
        g = entry.graph
        f = len(entry.rotation.faces())
        if g.n - g.m + f != 2:
            issues.append("embedding fails the Euler check")
    return issues


def quintic_blocks() -> dict:
    from .constructions import Block
    out = {}
    for tag in "AB":
        blk = load(f"block{tag}")
        clo = load(f"closure{tag}")
        out[tag] = Block(tag, blk.graph, tuple(blk.ints("left")), tuple(blk.ints("right")), clo.colouring)
    return out


def small_blocks(degree: int) -> dict:
    """The two cubic (``degree=3``) or quartic (``degree=4``) building blocks, keyed "1" and "2"."""
    from .constructions import Block
    kind = {3: "cubic", 4: "quartic"}[degree]
    out = {}
    for tag in "12":
        blk = load(f"{kind}_block{tag}")
        out[tag] = Block(tag, blk.graph, tuple(blk.ints("left")), tuple(blk.ints("right")))
    return out


def fragment(name: str = "conn4_fragment"):
    """The stored divorce fragment with its terminals and aligned colouring."""
    from .constructions import Fragment
    e = load(name)
    a, b, c, d = e.ints("terminals")
    return Fragment(e.graph, a, b, c, d, e.colouring, e.rotation)
