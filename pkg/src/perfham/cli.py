"""Command-line front end.

Exit codes: 0 all checks pass, 1 property false, 2 error, 3 inconclusive.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Any, Callable

from . import analysis, constructions, corpus, factorisation, formats, kempe
from .factorisation import EdgeColouring, perfect_pairs
from .graph import Graph, GraphError, edge_connectivity, vertex_connectivity

OK, FALSE, ERROR, INCONCLUSIVE = 0, 1, 2, 3


class CliError(Exception):
    pass


# ------------------------------------------------------------------ inputs

def load_document(spec: str) -> formats.CelDocument:
    """A CEL or graph6 file, or the name of a bundled corpus entry."""
    path = Path(spec)
    if path.is_file():
        data = path.read_bytes()
        if path.suffix in (".g6", ".graph6"):
            return formats.CelDocument(formats.read_graph6(data.splitlines()[0]))
        return formats.read_cel(data.decode("utf-8"))
    name = path.name[:-4] if path.name.endswith(".cel") else path.name
    if name in corpus.names():
        return formats.read_cel(corpus.data_dir().joinpath(f"{name}.cel").read_text(encoding="utf-8"))
    raise CliError(f"no such file or corpus entry: {spec}")


def _coloured(doc: formats.CelDocument, what: str) -> EdgeColouring:
    if doc.colouring is None:
        raise CliError(f"{what} carries no colouring")
    return doc.colouring


def _ints(text: str, sep: str = ",") -> list[int]:
    try:
        return [int(x) for x in text.split(sep) if x.strip()]
    except ValueError:
        raise CliError(f"expected integers separated by '{sep}': {text!r}") from None


def _edge(text: str) -> tuple[int, int]:
    parts = _ints(text.replace("-", " "), " ")
    if len(parts) != 2:
        raise CliError(f"edges are written u-v, got {text!r}")
    return parts[0], parts[1]


def _summary(g: Graph) -> dict[str, Any]:
    return {"n": g.n, "m": g.m, "degree": g.regularity()}


def _built(g: Graph, col: EdgeColouring | None, rot=None, meta=()) -> dict[str, Any]:
    out = _summary(g)
    if col is not None:
        prof = perfect_pairs(col)
        out.update(k=prof.k, all_perfect=prof.all_perfect, colours=list(col.colours))
    out["cel"] = formats.write_cel(formats.CelDocument(g, rot, col, list(meta)))
    return out


# ------------------------------------------------------------- subcommands

def cmd_colourings(args) -> tuple[int, dict]:
    g = load_document(args.file).graph
    en = factorisation.enumerate_factorisations(g)
    rows, total, truncated = [], 0, False
    for col in en:
        if args.limit is not None and total >= args.limit:
            truncated = True
            break
        rows.append({"colours": list(col.colours), "k": perfect_pairs(col).k})
        total += 1
    rep = {"graph": _summary(g), "count": total, "truncated": truncated, "colourings": rows,
           "status": en.status}
    return (OK if total else FALSE), rep


def cmd_spectrum(args) -> tuple[int, dict]:
    g = load_document(args.file).graph
    sr = factorisation.spectrum(g, jobs=args.jobs)
    rep = {"graph": _summary(g), "spectrum": sr.spectrum, "total": sr.total,
           "counts": {str(k): v for k, v in sr.counts.items()},
           "witnesses": {str(k): list(c.colours) for k, c in sr.witnesses.items()},
           "status": sr.status}
    return (OK if sr.total else FALSE), rep


def cmd_kempe(args) -> tuple[int, dict]:
    g = load_document(args.file).graph
    part = kempe.kempe_classes(g, cap=args.cap, jobs=args.jobs)
    rep = {"graph": _summary(g), "colourings": len(part.colourings), "classes": part.classes,
           "sizes": part.sizes, "status": part.status}
    return (OK if part.colourings else FALSE), rep


def cmd_marry(args) -> tuple[int, dict]:
    gd, hd = load_document(args.g), load_document(args.h)
    res = constructions.marriage(_coloured(gd, "g"), args.x, _coloured(hd, "h"), args.y,
                                 gd.rotation, hd.rotation)
    rep = _built(res.graph, res.colouring, res.rotation)
    rep["h_permutation"] = list(res.h_permutation)
    return OK, rep


def cmd_divorce(args) -> tuple[int, dict]:
    doc = load_document(args.fragment)
    t = doc.ints("terminals")
    if len(t) != 4:
        raise CliError("fragment needs a '#@ terminals a b c d' line")
    frag = constructions.Fragment(doc.graph, *t, _coloured(doc, "fragment"), doc.rotation)
    rep = constructions.suitability_check(frag)
    conds = {name: r.holds for name, r in rep.conditions.items()}
    if not rep.suitable:
        return FALSE, {"suitable": False, "failing": rep.failing, "conditions": conds}
    res = constructions.divorce(frag)
    out = _built(res.graph, res.colouring)
    out.update(suitable=True, conditions=conds, involution=res.involution)
    return OK, out


def cmd_glue(args) -> tuple[int, dict]:
    doc = load_document(args.g)
    if args.colouring in ("-", "stored"):
        col = _coloured(doc, "graph")
    elif Path(args.colouring).is_file() or args.colouring.endswith(".cel"):
        col = _coloured(load_document(args.colouring), "colouring file")
        col = EdgeColouring.from_sequence(doc.graph, col.colours)
    else:
        col = EdgeColouring.from_sequence(doc.graph, _ints(args.colouring))
    tri = _ints(args.triangle)
    res = constructions.triangle_glue(col, tri, budget=args.budget)
    rep = _built(res.graph, res.colouring)
    rep["triangle"] = list(res.triangle)
    return OK, rep


def cmd_chain(args) -> tuple[int, dict]:
    g = load_document(args.seed).graph
    parts = args.edges.split(",")
    if len(parts) != 2:
        raise CliError("--edges takes two edges, e.g. 0-1,1-2")
    ch = constructions.charonian_chain(g, _edge(parts[0]), _edge(parts[1]), args.k)
    col = ch.colouring([0] * ch.k)
    if col is None:
        return FALSE, {"h": ch.h, "k": ch.k, "reason": "remainder not 3-edge-colourable"}
    rep = _built(ch.graph, col)
    rep.update(h=ch.h, copies=ch.k, colourings_lower_bound=ch.h ** ch.k)
    return (OK if rep["all_perfect"] else FALSE), rep


def cmd_blocks(args) -> tuple[int, dict]:
    g, col = constructions.block_chain(args.seq)
    rep = _built(g, col)
    rep["sequence"] = args.seq
    return (OK if rep["all_perfect"] else FALSE), rep


def cmd_substitute(args) -> tuple[int, dict]:
    hd, gd = load_document(args.h), load_document(args.g)
    hcol = _coloured(hd, "h")
    c1, c2 = _ints(args.f)
    sub = constructions.vertex_substitution(hd.graph, hcol.colour_class(c1), hcol.colour_class(c2),
                                            gd.graph, args.v)
    rep = _built(sub.graph, None)
    rep["links"] = [list(p) for p in sub.links]
    return OK, rep


def _verdict_code(v: analysis.CharonianVerdict) -> int:
    return INCONCLUSIVE if v.holds is None else (OK if v.holds else FALSE)


def _verdict(v: analysis.CharonianVerdict) -> dict:
    out = {"holds": v.holds, "checked": v.checked, "kind": v.kind}
    if v.counterexample is not None:
        ce = v.counterexample
        out["counterexample"] = [list(c) for c in ce] if ce and isinstance(ce[0], tuple) else list(ce)
        out["bridge"] = v.bridge
    return out


def cmd_charonian(args) -> tuple[int, dict]:
    g = load_document(args.file).graph
    if args.all_2_factors:
        v = analysis.all_two_factors_bridgeless(g, args.budget)
    elif args.strong:
        v = analysis.is_strongly_charonian(g, args.budget, args.jobs)
    else:
        v = analysis.is_charonian(g, args.budget, args.jobs)
    return _verdict_code(v), {"graph": _summary(g), **_verdict(v)}


def cmd_stats(args) -> tuple[int, dict]:
    doc = load_document(args.file)
    g = doc.graph
    rep: dict[str, Any] = {"graph": _summary(g), "vertex_connectivity": vertex_connectivity(g),
                           "edge_connectivity": edge_connectivity(g)}
    code = OK
    if doc.rotation is not None:
        es = analysis.euler_stats(g, doc.rotation)
        rep["euler"] = {"faces": {str(k): v for k, v in es.faces.items()}, "f3": es.f3,
                        "f3_bound": es.f3_bound, "s": es.s, "s_bound": es.s_bound,
                        "diamonds": es.diamonds, "diamond_bound": es.diamond_bound}
        if g.regularity() == 5 and not es.ok:
            code = FALSE
    col = doc.colouring
    if col is not None and g.regularity() == 5 and perfect_pairs(col).all_perfect:
        cr = analysis.verify_ph_connectivity(g, col, samples=args.samples)
        rep["ph_connectivity"] = {"four_cuts": len(cr.four_cuts), "four_cycle_cuts": len(cr.cycle_cuts),
                                  "sampled_cuts": cr.sampled, "violations": cr.violations}
        if not cr.ok:
            code = FALSE
    return code, rep


def cmd_verify_corpus(args) -> tuple[int, dict]:
    root = Path(args.dir)
    if not root.is_dir():
        raise CliError(f"not a directory: {args.dir}")
    results = {}
    for p in sorted(root.glob("*.cel")):
        try:
            entry = corpus.entry_from_document(p.stem, formats.read_cel(p.read_text(encoding="utf-8")))
            results[p.name] = corpus.verify_entry(entry)
        except (formats.FormatError, GraphError, ValueError) as exc:
            results[p.name] = [f"unreadable: {exc}"]
    bad = sorted(k for k, v in results.items() if v)
    return (FALSE if bad else OK), {"files": len(results), "failing": bad,
                                   "issues": {k: v for k, v in results.items() if v}}


def _census_one(item: tuple[str, Graph]) -> bool | None:
    prop, g = item
    if prop == "ph":
        return factorisation.is_perfectly_hamiltonian(g)[0]
    try:
        return analysis.is_charonian(g).holds
    except GraphError:
        return False


def cmd_census(args) -> tuple[int, dict]:
    data = sys.stdin.buffer.read() if args.stream == "-" else Path(args.stream).read_bytes()
    graphs = [g for g, _ in formats.read_planar_code(data)]
    items = [(args.property, g) for g in graphs]
    if args.jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(args.jobs) as ex:
            verdicts = list(ex.map(_census_one, items))
    else:
        verdicts = [_census_one(i) for i in items]
    by_order: dict[str, list[int]] = {}
    for g, v in zip(graphs, verdicts):
        row = by_order.setdefault(str(g.n), [0, 0])
        row[0] += 1
        row[1] += bool(v)
    rep = {"property": args.property, "graphs": len(graphs), "with_property": sum(map(bool, verdicts)),
           "by_order": {k: {"graphs": a, "with_property": b} for k, (a, b) in sorted(by_order.items(), key=lambda kv: int(kv[0]))},
           "indices": [i for i, v in enumerate(verdicts) if v]}
    return OK, rep


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--jobs", type=int, default=1, help="worker processes (output does not depend on it)")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--out", help="write the report here instead of stdout")

    p = argparse.ArgumentParser(prog="perfham", parents=[common],
                                description="1-factorisations, perfect pairs and Kempe classes of regular graphs")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name: str, fn: Callable, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.set_defaults(func=fn)
        return sp

    sp = add("colourings", cmd_colourings, "list 1-factorisations up to colour renaming")
    sp.add_argument("file")
    sp.add_argument("--limit", type=int)
    add("spectrum", cmd_spectrum, "achievable perfect-pair counts").add_argument("file")
    sp = add("kempe", cmd_kempe, "Kempe equivalence classes")
    sp.add_argument("file")
    sp.add_argument("--cap", type=int, default=kempe.DEFAULT_CAP)
    sp = add("marry", cmd_marry, "join two coloured graphs at a vertex each")
    sp.add_argument("g")
    sp.add_argument("x", type=int)
    sp.add_argument("h")
    sp.add_argument("y", type=int)
    add("divorce", cmd_divorce, "double a suitable fragment").add_argument("fragment")
    sp = add("glue", cmd_glue, "glue two copies along a triangle")
    sp.add_argument("g")
    sp.add_argument("colouring", help="'stored', a CEL file, or comma-separated colours")
    sp.add_argument("triangle", help="u,v,w")
    sp.add_argument("--budget", type=int, default=1000)
    sp = add("chain", cmd_chain, "ring of copies of a seed graph")
    sp.add_argument("--seed", required=True)
    sp.add_argument("--edges", required=True, help="x-y,y-z")
    sp.add_argument("-k", type=int, required=True)
    add("blocks", cmd_blocks, "chain of quintic blocks, e.g. ABBA").add_argument("seq")
    sp = add("substitute", cmd_substitute, "replace the vertices of a cubic graph")
    sp.add_argument("h")
    sp.add_argument("f", help="two colour classes of h's colouring, e.g. 1,2")
    sp.add_argument("g")
    sp.add_argument("v", type=int)
    sp = add("charonian", cmd_charonian, "bridgeless remainders of hamiltonian cycles")
    sp.add_argument("file")
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--strong", action="store_true")
    mode.add_argument("--all-2-factors", action="store_true")
    sp.add_argument("--budget", type=int)
    sp = add("stats", cmd_stats, "face counts and connectivity checks")
    sp.add_argument("file")
    sp.add_argument("--samples", type=int, default=1000)
    add("verify-corpus", cmd_verify_corpus, "re-check every CEL file in a directory").add_argument("dir")
    sp = add("census", cmd_census, "count graphs in a planar_code stream with a property")
    sp.add_argument("stream", help="file or '-' for stdin")
    sp.add_argument("--property", choices=("ph", "charonian"), required=True)
    return p


def render(rep: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rep, sort_keys=True, separators=(",", ":")) + "\n"
    lines = []
    for key in sorted(rep):
        val = rep[key]
        if key == "cel":
            continue
        if not isinstance(val, str):
            val = json.dumps(val, sort_keys=True, separators=(",", ":"))
        lines.append(f"{key}: {val}")
    text = "\n".join(lines) + "\n"
    if "cel" in rep:
        text += rep["cel"]
    return text


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.jobs < 1:
        parser.error("--jobs must be at least 1")
    try:
        code, rep = args.func(args)
    except kempe.CapExceeded as exc:
        print(f"perfham: refused: {exc}", file=sys.stderr)
        return ERROR
    except (CliError, GraphError, formats.FormatError, constructions.ConstructionError,
            factorisation.ColouringError, OSError, ValueError) as exc:
        print(f"perfham: error: {exc}", file=sys.stderr)
        return ERROR
    rep = {"command": args.command, "exit": code, **rep}
    text = render(rep, args.format)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
