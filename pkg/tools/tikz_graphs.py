"""Extract graph drawings from TikZ figure source.

Each drawing becomes a record holding its node ids, coloured edges and
(for the block drawings) dangling stubs. Only the subset of TikZ used by the
figures is understood: ``\\draw[colourK] (a) -- (b);``, ``(a) edge[...] (b)``
and chained ``(a) -- (b) -- (c)`` paths with ``(v) -- (x,y)`` or
``(v) to ++(angle:len)`` stubs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

_ENV_BEGIN = re.compile(r"\\begin\{(tikzpicture|smallestquinticperfham|icosahedron)\}(\{(\d+)\})?")
_NODE = re.compile(r"\\node(?:\[[^\]]*\])?\s*\((\w+)\)\s*at\s*(\(([^()]|\([^()]*\))*\))")
_TOKEN = re.compile(r"\(([^()]*)\)|--|\bedge\b(\[[^\]]*\])?|\bto\b(\[[^\]]*\])?|\+\+\(([^()]*)\)")
_COLOUR = re.compile(r"colour(\d)(b?)")


@dataclass
class Drawing:
    kind: str
    line: int
    label: int | None
    nodes: dict[str, str] = field(default_factory=dict)
    edges: dict[tuple[int, int], int | None] = field(default_factory=dict)
    stubs: list[tuple[int, str]] = field(default_factory=list)

    def add_edge(self, u: int, v: int, colour: int | None) -> None:
        key = (min(u, v), max(u, v))
        old = self.edges.get(key)
        if old is not None and colour is not None and old != colour:
            raise ValueError(f"line {self.line}: edge {key} drawn with colours {old} and {colour}")
        self.edges[key] = colour if colour is not None else old


def _draw_statements(body: str):
    for m in re.finditer(r"\\(?:draw|path)(.*?);", body, re.S):
        yield m.group(1)


def _parse_draw(stmt: str, drawing: Drawing) -> None:
    cm = _COLOUR.search(stmt)
    colour = int(cm.group(1)) + 1 if cm else None
    # strip the leading option block so its contents are not read as tokens
    s = stmt.strip()
    if s.startswith("["):
        s = s[s.index("]") + 1:]
    prev: str | None = None
    pending = False
    for tok in _TOKEN.finditer(s):
        text = tok.group(0)
        if text == "--" or text.startswith("edge") or text.startswith("to"):
            pending = True
            continue
        if text.startswith("++"):
            drawing.stubs.append((int(prev), "++" + tok.group(4)))
            pending = False
            continue
        inner = tok.group(1).strip()
        if "," in inner or ":" in inner:
            if pending and prev is not None:
                drawing.stubs.append((int(prev), inner))
            pending = False
            prev = None
            continue
        if pending and prev is not None:
            drawing.add_edge(int(prev), int(inner), colour)
        prev = inner
        pending = False


def parse_drawings(text: str) -> list[Drawing]:
    lines = text.splitlines()
    starts = []
    for i, line in enumerate(lines):
        m = _ENV_BEGIN.search(line)
        if m and "newenvironment" not in lines[max(i - 1, 0)]:
            starts.append((i, m.group(1), m.group(3)))
    out = []
    for i, kind, label in starts:
        end_tag = "\\end{" + kind + "}"
        j = i + 1
        while end_tag not in lines[j] and not (kind == "tikzpicture" and "}{" in lines[j]):
            j += 1
        body = "\n".join(lines[i + 1: j])
        d = Drawing(kind=kind, line=i + 1, label=int(label) if label else None)
        for m in _NODE.finditer(body):
            d.nodes[m.group(1)] = m.group(2)
        for stmt in _draw_statements(body):
            _parse_draw(stmt, d)
        out.append(d)
    return out
