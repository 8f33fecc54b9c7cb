"""graph6, planar_code and the line-oriented CEL format."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .factorisation import EdgeColouring
from .graph import Graph, GraphError, RotationSystem


class FormatError(ValueError):
    """Parse failure; ``pos`` is a byte offset or a 1-based line number."""

    def __init__(self, msg: str, pos: int | None = None):
        super().__init__(msg if pos is None else f"{msg} (at {pos})")
        self.pos = pos


# ------------------------------------------------------------------ graph6

_G6_HEADER = b">>graph6<<"


def _g6_size(data: bytes, i: int) -> tuple[int, int]:
    def byte(k: int) -> int:
        if k >= len(data):
            raise FormatError("truncated size field", k)
        b = data[k] - 63
        if not 0 <= b < 64:
            raise FormatError("byte out of range", k)
        return b

    first = byte(i)
    if first < 63:
        return first, i + 1
    if byte(i + 1) < 63:
        return sum(byte(i + 1 + k) << (6 * (2 - k)) for k in range(3)), i + 4
    return sum(byte(i + 2 + k) << (6 * (5 - k)) for k in range(6)), i + 8


def read_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    i = len(_G6_HEADER) if data.startswith(_G6_HEADER) else 0
    if i >= len(data):
        raise FormatError("empty graph6 record", i)
    n, i = _g6_size(data, i)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[i:]
    if len(body) != need:
        raise FormatError(f"expected {need} data bytes, found {len(body)}", i)
    bits = []
    for k, b in enumerate(body):
        x = b - 63
        if not 0 <= x < 64:
            raise FormatError("byte out of range", i + k)
        bits.extend((x >> (5 - s)) & 1 for s in range(6))
    if any(bits[nbits:]):
        raise FormatError("nonzero padding", len(data) - 1)
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            if bits[k]:
                edges.append((u, v))
            k += 1
    return Graph(n, edges)


def write_graph6(g: Graph, header: bool = False) -> bytes:
    n = g.n
    if n < 63:
        out = [n + 63]
    elif n < 258048:
        out = [126] + [((n >> (6 * k)) & 63) + 63 for k in (2, 1, 0)]
    else:
        out = [126, 126] + [((n >> (6 * k)) & 63) + 63 for k in (5, 4, 3, 2, 1, 0)]
    bits = [1 if g.has_edge(u, v) else 0 for v in range(1, n) for u in range(v)]
    bits += [0] * (-len(bits) % 6)
    for k in range(0, len(bits), 6):
        out.append(sum(b << (5 - s) for s, b in enumerate(bits[k:k + 6])) + 63)
    return (_G6_HEADER if header else b"") + bytes(out)


# ------------------------------------------------------------- planar_code

_PC_HEADER = b">>planar_code<<"


def read_planar_code(data: bytes) -> Iterator[tuple[Graph, RotationSystem]]:
    """Decode a planar_code stream (one-byte entries, clockwise neighbour lists)."""
    if not data.startswith(_PC_HEADER):
        raise FormatError("missing >>planar_code<< header", 0)
    i = len(_PC_HEADER)
    while i < len(data):
        start = i
        n = data[i]
        i += 1
        if n == 0:
            raise FormatError("zero-vertex record", start)
        order: list[list[int]] = []
        for v in range(n):
            nb = []
            while True:
                if i >= len(data):
                    raise FormatError("truncated record", i)
                x = data[i]
                i += 1
                if x == 0:
                    break
                if x > n:
                    raise FormatError("neighbour out of range", i - 1)
                nb.append(x - 1)
            order.append(nb)
        pairs = set()
        for v, nb in enumerate(order):
            if len(set(nb)) != len(nb) or v in nb:
                raise FormatError("loop or repeated neighbour", start)
            for w in nb:
                pairs.add((min(v, w), max(v, w)))
        for v, nb in enumerate(order):
            for w in nb:
                if v not in order[w]:
                    raise FormatError("asymmetric adjacency", start)
        g = Graph(n, sorted(pairs))
        try:
            rot = RotationSystem.from_neighbours(g, order, planar=True)
        except GraphError as exc:
            raise FormatError(str(exc), start) from exc
        yield g, rot


def write_planar_code(items: list[tuple[Graph, RotationSystem]]) -> bytes:
    out = bytearray(_PC_HEADER)
    for g, rot in items:
        if g.n > 255:
            raise FormatError("planar_code one-byte form holds at most 255 vertices")
        out.append(g.n)
        for v in range(g.n):
            out.extend(w + 1 for w in rot.neighbour_order(v))
            out.append(0)
    return bytes(out)


# -------------------------------------------------------------------- CEL

@dataclass
class CelDocument:
    graph: Graph
    rotation: RotationSystem | None = None
    colouring: EdgeColouring | None = None
    meta: list[tuple[str, str]] = field(default_factory=list)
    comments: list[str] = field(default_factory=list)

    def get(self, key: str, default: str | None = None) -> str | None:
        for k, v in self.meta:
            if k == key:
                return v
        return default

    def ints(self, key: str) -> list[int]:
        v = self.get(key)
        return [] if v is None else [int(x) for x in v.split()]


def read_cel(text: str) -> CelDocument:
    n = None
    edges: list[tuple[int, int, int | None]] = []
    seen: dict[tuple[int, int], int] = {}
    rots: dict[int, tuple[list[int], int]] = {}
    meta: list[tuple[str, str]] = []
    comments: list[str] = []
    for lineno, raw in enumerate(text.split("\n"), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#@"):
            key, _, value = line[2:].strip().partition(" ")
            if not key:
                raise FormatError("empty metadata key", lineno)
            meta.append((key, value.strip()))
            continue
        if line.startswith("#"):
            comments.append(line[1:].strip())
            continue
        parts = line.split()
        try:
            nums = [int(x) for x in parts[1:]]
        except ValueError:
            raise FormatError("non-integer field", lineno) from None
        if parts[0] == "v":
            if n is not None or len(nums) != 1 or nums[0] < 0:
                raise FormatError("bad or repeated vertex count", lineno)
            n = nums[0]
        elif parts[0] == "e":
            if n is None:
                raise FormatError("edge before vertex count", lineno)
            if len(nums) not in (2, 3):
                raise FormatError("edge needs two endpoints and an optional colour", lineno)
            u, w = nums[0], nums[1]
            if not (0 <= u < n and 0 <= w < n) or u == w:
                raise FormatError("bad endpoint", lineno)
            key = (min(u, w), max(u, w))
            if key in seen:
                raise FormatError("duplicate edge", lineno)
            seen[key] = lineno
            colour = nums[2] if len(nums) == 3 else None
            if colour is not None and colour < 1:
                raise FormatError("colours start at 1", lineno)
            edges.append((key[0], key[1], colour))
        elif parts[0] == "rot":
            if not nums:
                raise FormatError("rotation needs a vertex", lineno)
            if nums[0] in rots:
                raise FormatError("repeated rotation", lineno)
            rots[nums[0]] = (nums[1:], lineno)
        else:
            raise FormatError(f"unknown record {parts[0]!r}", lineno)
    if n is None:
        raise FormatError("missing vertex count")
    g = Graph(n, [(u, w) for u, w, _ in edges])
    colouring = None
    coloured = [c is not None for _, _, c in edges]
    if any(coloured):
        if not all(coloured):
            raise FormatError("some edges lack a colour", seen[next((u, w) for u, w, c in edges if c is None)])
        cs = [0] * g.m
        for u, w, c in edges:
            cs[g.edge_id(u, w)] = c
        for v in range(n):
            at = [cs[e] for e in g.inc[v]]
            if len(set(at)) != len(at):
                clash = next(e for e in g.inc[v] if at.count(cs[e]) > 1)
                raise FormatError("colour clash", seen[g.edges[clash]])
        colouring = EdgeColouring(g, tuple(cs), max(cs))
    rotation = None
    if rots:
        stray = [v for v in rots if not 0 <= v < n]
        if stray:
            raise FormatError("dangling rotation reference", rots[stray[0]][1])
        rot = []
        for v in range(n):
            if v not in rots:
                raise FormatError(f"no rotation for vertex {v}")
            ids, lineno = rots[v]
            if any(not 0 <= e < g.m for e in ids):
                raise FormatError("dangling rotation reference", lineno)
            rot.append(ids)
        try:
            rotation = RotationSystem(g, rot, planar=True)
        except GraphError as exc:
            raise FormatError(str(exc)) from exc
    return CelDocument(g, rotation, colouring, meta, comments)


def write_cel(doc: CelDocument) -> str:
    g = doc.graph
    lines = [f"# {c}" if c else "#" for c in doc.comments]
    lines += [f"#@ {k} {v}".rstrip() for k, v in doc.meta]
    lines.append(f"v {g.n}")
    for e, (u, w) in enumerate(g.edges):
        if doc.colouring is not None:
            lines.append(f"e {u} {w} {doc.colouring.colours[e]}")
        else:
            lines.append(f"e {u} {w}")
    if doc.rotation is not None:
        for v in range(g.n):
            lines.append("rot " + " ".join(str(x) for x in [v, *doc.rotation.rot[v]]))
    return "\n".join(lines) + "\n"
