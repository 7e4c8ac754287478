"""Command-line front end: JSON on stdin/stdout, SVG for drawings.

Exit codes: 0 success, 2 the checked property fails (a certificate is
printed), 1 bad input or usage.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .coloring import NotABABFreeError, three_color
from .constructions import build_Hc, build_tree_hypergraph
from .generators import random_points
from .geometry.compact import PseudoDiskPolygon, compactify, evenize
from .geometry.curves import CurveFamily, PointSet, PolylineCurve, hypergraph_from_curves
from .geometry.disks import (
    Disk,
    StabbedDiskFamily,
    enumerate_stabbed_disks,
    hypergraph_from_stabbed_disks,
    stabbed_order,
    trace_hypergraph,
)
from .geometry.lenses import realize_as_curves
from .geometry.rational import fmt, fmt_point, point
from .geometry.svg import render_svg
from .hypergraph import (
    Coloring,
    OrderedHypergraph,
    colorability_oracle,
    hypergraph_from_doc,
    monochromatic_edges,
)
from .pattern import HalfIntegerL, find_abl_free_order, is_abl_free_ordered

OK, FAILS, ERROR = 0, 2, 1


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":")) + "\n"


def _load_json(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{what}: malformed JSON ({exc})") from None


def _read_file(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _hypergraph_doc(h: OrderedHypergraph) -> dict:
    return {"vertices": list(h.vertices), "edges": [list(e) for e in h.edges]}


def _coloring_doc(col: Coloring) -> dict:
    return {"colors": list(col.colors), "palette": col.palette_size}


def _points_from_doc(doc) -> PointSet:
    if "points" not in doc:
        raise UsageError('expected a "points" list of ["x","y"] pairs')
    return PointSet(tuple(point(p) for p in doc["points"]), tuple(doc.get("labels", ())))


def _points_doc(points: PointSet, order=None) -> dict:
    order = range(len(points)) if order is None else order
    return {"points": [fmt_point(points.points[k]) for k in order], "labels": [points.labels[k] for k in order]}


def _curves_from_doc(doc) -> CurveFamily:
    return CurveFamily(tuple(PolylineCurve.from_doc(c) for c in doc.get("curves", [])), doc.get("t_bound"))


def _curve_doc(points: PointSet, family: CurveFamily) -> dict:
    doc = _points_doc(points)
    doc["curves"] = [c.to_doc() for c in family.curves]
    if family.t_bound is not None:
        doc["t_bound"] = family.t_bound
    return doc


def _disk_from_doc(d) -> Disk:
    try:
        return Disk(d["cx"], d["cy"], d["r2"])
    except (KeyError, TypeError) as exc:
        raise UsageError(f"malformed disk {d!r}: {exc}") from None


def _disk_doc(d: Disk) -> dict:
    return {"cx": fmt(d.cx), "cy": fmt(d.cy), "r2": fmt(d.r2)}


def _polygon_from_doc(verts) -> PseudoDiskPolygon:
    return PseudoDiskPolygon(tuple(point(v) for v in verts))


# subcommands: each takes (args, stdin text) and returns (exit code, output text)


def cmd_check_free(args, text):
    h = hypergraph_from_doc(_load_json(text, "hypergraph"))
    v = is_abl_free_ordered(h, args.l)
    if v is None:
        return OK, _dump({"free": True})
    return FAILS, _dump({"free": False, "edge_a": list(v.edge_a), "edge_b": list(v.edge_b), "witness": list(v.witness)})


def cmd_find_order(args, text):
    h = hypergraph_from_doc(_load_json(text, "hypergraph"))
    order = find_abl_free_order(h, args.l)
    if order is None:
        return FAILS, _dump("none")
    if args.reorder:
        return OK, _dump(_hypergraph_doc(h.reorder(order)))
    return OK, _dump({"order": order})


def cmd_color3(args, text):
    h = hypergraph_from_doc(_load_json(text, "hypergraph"))
    if args.verify_input:
        v = is_abl_free_ordered(h, 2)
        if v is not None:
            return FAILS, _dump(
                {"error": "input not ABAB-free", "edge_a": list(v.edge_a), "edge_b": list(v.edge_b), "witness": list(v.witness)}
            )
    try:
        col = three_color(h)
    except NotABABFreeError as exc:
        return FAILS, _dump({"error": str(exc), "certificate": exc.certificate})
    doc = _coloring_doc(col)
    if args.attach:
        doc = {"hypergraph": _hypergraph_doc(h), **doc}
    return OK, _dump(doc)


def cmd_verify(args, text):
    doc = _load_json(text, "coloring")
    if args.hypergraph:
        h = hypergraph_from_doc(_load_json(_read_file(args.hypergraph), "hypergraph"))
    elif isinstance(doc, dict) and "hypergraph" in doc:
        h = hypergraph_from_doc(doc["hypergraph"])
    else:
        raise UsageError('need the hypergraph: pass --hypergraph FILE or pipe "color3 --attach" output')
    if not isinstance(doc, dict) or "colors" not in doc:
        raise UsageError('expected a "colors" list')
    col = Coloring(tuple(doc["colors"]))
    if len(col) != h.n:
        raise UsageError(f"coloring has {len(col)} entries for {h.n} vertices")
    bad = monochromatic_edges(h, col)
    ok = not bad and col.palette_size <= args.max_colors
    out = {"proper": not bad, "palette": col.palette_size, "max_colors": args.max_colors}
    if bad:
        out["monochromatic"] = [list(e) for e in bad]
    return (OK if ok else FAILS), _dump(out)


def cmd_gen_hc(args, text):
    return OK, _dump(_hypergraph_doc(build_Hc(args.c, args.m)))


def cmd_gen_tree(args, text):
    return OK, _dump(_hypergraph_doc(build_tree_hypergraph(args.a, args.b)))


def cmd_oracle_color(args, text):
    h = hypergraph_from_doc(_load_json(text, "hypergraph"))
    col = colorability_oracle(h, args.c)
    if col is None:
        return FAILS, _dump("none")
    return OK, _dump(_coloring_doc(col))


def cmd_from_curves(args, text):
    doc = _load_json(text, "curve family")
    h = hypergraph_from_curves(_points_from_doc(doc), _curves_from_doc(doc))
    return OK, _dump(_hypergraph_doc(h))


def cmd_realize(args, text):
    h = hypergraph_from_doc(_load_json(text, "hypergraph"))
    points, family = realize_as_curves(h, args.l)
    return OK, _dump(_curve_doc(points, family))


def cmd_evenize(args, text):
    doc = _load_json(text, "curve family")
    points = _points_from_doc(doc)
    return OK, _dump(_curve_doc(points, evenize(points, _curves_from_doc(doc))))


def cmd_compactify(args, text):
    doc = _load_json(text, "curve family")
    points = _points_from_doc(doc) if "points" in doc else None
    polys, stab = compactify(_curves_from_doc(doc), points)
    out = _points_doc(points) if points is not None else {}
    out["polygons"] = [[fmt_point(v) for v in p.vertices] for p in polys]
    out["stab"] = fmt_point(stab)
    return OK, _dump(out)


def cmd_from_disks(args, text):
    doc = _load_json(text, "disk family")
    if "stab" not in doc:
        raise UsageError('expected a "stab" point')
    family = StabbedDiskFamily(tuple(_disk_from_doc(d) for d in doc.get("disks", [])), point(doc["stab"]))
    return OK, _dump(_hypergraph_doc(hypergraph_from_stabbed_disks(_points_from_doc(doc), family)))


def cmd_enum_disks(args, text):
    if args.random is not None:
        points = random_points(random.Random(args.seed), args.random, avoid=(0, 0))
        stab = point((0, 0))
    else:
        doc = _load_json(text, "point set")
        if "stab" not in doc:
            raise UsageError('expected a "stab" point (or use --random N)')
        points, stab = _points_from_doc(doc), point(doc["stab"])
    family = enumerate_stabbed_disks(points, stab)
    order = stabbed_order(points.points, stab)
    if args.emit_disks:
        out = _points_doc(points, order)
        out["stab"] = fmt_point(stab)
        out["disks"] = [_disk_doc(d) for d in family.disks]
        return OK, _dump(out)
    return OK, _dump(_hypergraph_doc(trace_hypergraph(points, family.disks, order)))


def cmd_render(args, text):
    doc = _load_json(text, "scene")
    points = _points_from_doc(doc).points if "points" in doc else ()
    curves = _curves_from_doc(doc).curves
    polygons = [_polygon_from_doc(p) for p in doc.get("polygons", [])]
    disks = [_disk_from_doc(d) for d in doc.get("disks", [])]
    stab = point(doc["stab"]) if "stab" in doc else None
    colors = None
    if args.colors:
        cdoc = _load_json(_read_file(args.colors), "coloring")
        colors = list(cdoc["colors"]) if isinstance(cdoc, dict) and "colors" in cdoc else None
        if colors is None:
            raise UsageError(f'{args.colors}: expected a "colors" list')
    return OK, render_svg(points, curves, polygons, disks, stab, colors)


def _l_value(s: str) -> HalfIntegerL:
    try:
        return HalfIntegerL.of(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ababfree", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help_text, reads_input=True):
        sp = sub.add_parser(name, help=help_text, description=help_text)
        if reads_input:
            sp.add_argument("-i", "--input", help="input file (default: stdin)")
        sp.add_argument("-o", "--output", help="output file (default: stdout)")
        sp.set_defaults(func=func, reads_input=reads_input)
        return sp

    sp = add("check-free", cmd_check_free, "check (AB)^l-freeness under the given vertex order")
    sp.add_argument("--l", type=_l_value, default=HalfIntegerL(4), help="l, a multiple of 1/2 (default 2)")
    sp = add("find-order", cmd_find_order, "search all vertex orders for an (AB)^l-free one")
    sp.add_argument("--l", type=_l_value, default=HalfIntegerL(4), help="l, a multiple of 1/2 (default 2)")
    sp.add_argument("--reorder", action="store_true", help="print the reordered hypergraph instead of the order")
    sp = add("color3", cmd_color3, "proper 3-coloring of an ABAB-free hypergraph")
    sp.add_argument("--verify-input", action="store_true", help="check ABAB-freeness before coloring")
    sp.add_argument("--attach", action="store_true", help="include the hypergraph in the output (for verify)")
    sp = add("verify", cmd_verify, "check that a coloring is proper and uses at most --max-colors colors")
    sp.add_argument("--hypergraph", help="hypergraph file (otherwise taken from the input document)")
    sp.add_argument("--max-colors", type=int, default=3)
    sp = add("gen-hc", cmd_gen_hc, "the non-c-colorable m-uniform hypergraph H_c", reads_input=False)
    sp.add_argument("--c", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp = add("gen-tree", cmd_gen_tree, "the tree hypergraph H(a, b) in DFS order", reads_input=False)
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--b", type=int, required=True)
    sp = add("oracle-color", cmd_oracle_color, "lexicographically least proper c-coloring by exhaustive search")
    sp.add_argument("--c", type=int, required=True)
    add("from-curves", cmd_from_curves, "hypergraph of points on or above each curve")
    sp = add("realize", cmd_realize, "realize an (AB)^l-free hypergraph by x-monotone curves")
    sp.add_argument("--l", type=_l_value, default=HalfIntegerL(4), help="l, a multiple of 1/2 (default 2)")
    add("evenize", cmd_evenize, "reroute curve tails so every pair crosses an even number of times")
    add("compactify", cmd_compactify, "close an even curve family into stabbed polygons")
    add("from-disks", cmd_from_disks, "hypergraph of points inside each stabbed disk")
    sp = add("enum-disks", cmd_enum_disks, "all traces of disks containing the stab point")
    sp.add_argument("--random", type=int, metavar="N", help="use N random integer points around the origin")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--emit-disks", action="store_true", help="print the disk family instead of the hypergraph")
    sp = add("render", cmd_render, "draw points, curves, polygons and disks as SVG")
    sp.add_argument("--colors", help="coloring file; point k gets color k")
    return p


def run(argv=None, stdin=None) -> tuple[int, str, str]:
    """Run one subcommand; returns ``(exit code, stdout text, stderr text)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed its message; usage errors are input errors
        return (OK if not exc.code else ERROR), "", ""
    try:
        text = ""
        if args.reads_input and getattr(args, "random", None) is None:
            if args.input:
                text = _read_file(args.input)
            else:
                text = (stdin if stdin is not None else sys.stdin).read()
        code, out = args.func(args, text)
    except (UsageError, ValueError, TypeError, KeyError) as exc:
        msg = exc.args[0] if exc.args else exc.__class__.__name__
        return ERROR, "", f"ababfree {args.command}: {msg}\n"
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(out)
        except OSError as exc:
            return ERROR, "", f"ababfree {args.command}: cannot write {args.output}: {exc.strerror}\n"
        return code, "", ""
    return code, out, ""


def main(argv=None) -> int:
    code, out, err = run(argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
