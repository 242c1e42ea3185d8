"""Command-line interface.

One subcommand per counted shape or semigroup query, exact rational
input everywhere the geometry allows it, optional decomposition traces
(--trace) and optional brute-force cross-checking (--check).

Exit codes: 0 success, 1 input error, 2 the brute-force check disagreed
with the reported count.
"""

import argparse
import json
import sys
from dataclasses import dataclass

from . import oracle
from .polygons import (
    Polygon,
    Triangle,
    pick_audit,
    polygon_count,
    polygon_from_text,
    triangle_case,
    triangle_count,
    triangulate,
)
from .rationals import format_rational, parse_int, parse_rational
from .semigroup import TwoGenSemigroup
from .tetra import denumerant3, tetra_count, tetra_slice_counts
from .triangles import (
    HYPOTENUSE,
    LEG_X,
    LEG_Y,
    StableRightTriangle,
    quadrant_blocks,
    quadrant_count,
    rect_count,
    stable_right_count,
    stable_right_reduction,
)

_EXCLUDE_PARTS = {"hyp": HYPOTENUSE, "legx": LEG_X, "legy": LEG_Y}


@dataclass
class CountReport:
    shape: str
    count: int
    trace: dict | None = None
    oracle: int | None = None
    agreed: bool | None = None

    def to_dict(self):
        out = {"shape": self.shape, "count": str(self.count)}
        if self.trace is not None:
            out["trace"] = self.trace
        if self.oracle is not None:
            out["oracle"] = str(self.oracle)
        if self.agreed is not None:
            out["agreed"] = self.agreed
        return out


def dumps_canonical(obj):
    """The one JSON writer: fixed key order (insertion), fixed separators."""
    return json.dumps(obj, separators=(", ", ": "))


def render_text(report):
    lines = [f"{report.shape}: {report.count}"]
    if report.trace:
        for key, value in report.trace.items():
            if isinstance(value, list):
                value = ", ".join(str(v) for v in value)
            lines.append(f"  {key}: {value}")
    if report.oracle is not None:
        verdict = "agreed" if report.agreed else "DISAGREED"
        lines.append(f"  oracle: {report.oracle} ({verdict})")
    return "\n".join(lines)


def _rational_args(args, names):
    return [parse_rational(getattr(args, name)) for name in names]


def _int_args(args, names):
    return [parse_int(getattr(args, name)) for name in names]


# --- subcommand handlers ---------------------------------------------------


def _cmd_thr(args):
    a, b, c = _int_args(args, ["a", "b", "c"])
    count = quadrant_count(a, b, c)
    trace = None
    if args.trace:
        blocks = quadrant_blocks(a, b, c)
        trace = {
            "k": blocks.k,
            "blocks": [str(n) for n in blocks.block_counts],
            "tail_terms": [str(n) for n in blocks.tail_terms],
        }
    report = CountReport(f"thr({a}, {b}, {c})", count, trace)
    if args.check:
        report.oracle = oracle.brute_halfplane_quadrant(a, b, c, budget=args.oracle_budget)
    return report


def _cmd_rect(args):
    x0, y0, x1, y1 = _rational_args(args, ["x0", "y0", "x1", "y1"])
    count = rect_count((x0, y0), (x1, y1))
    report = CountReport(
        f"rect({format_rational(x0)}, {format_rational(y0)}, "
        f"{format_rational(x1)}, {format_rational(y1)})",
        count,
    )
    if args.check:
        report.oracle = oracle.brute_rect((x0, y0), (x1, y1), budget=args.oracle_budget)
    return report


def _parse_exclude(values):
    parts = set()
    for value in values or ():
        for token in value.split(","):
            token = token.strip()
            if token not in _EXCLUDE_PARTS:
                raise ValueError(f"unknown boundary part {token!r} (use hyp, legx, legy)")
            parts.add(_EXCLUDE_PARTS[token])
    return parts


def _cmd_rtri(args):
    ax, ay, bx, by, cx, cy = _rational_args(args, ["ax", "ay", "bx", "by", "cx", "cy"])
    tri = StableRightTriangle(corner=(ax, ay), y_vertex=(bx, by), x_vertex=(cx, cy))
    parts = _parse_exclude(args.exclude)
    count = stable_right_count(tri, exclude=parts)
    trace = None
    if args.trace:
        kind, data = stable_right_reduction(tri)
        if kind == "quadrant":
            trace = {"reduction": kind,
                     "a": str(data[0]), "b": str(data[1]), "c": str(data[2])}
        else:
            trace = {"reduction": kind}
        if parts:
            trace["excluded"] = sorted(parts)
    report = CountReport(f"rtri(A=({ax}, {ay}), B=({bx}, {by}), C=({cx}, {cy}))", count, trace)
    if args.check:
        excl = []
        if HYPOTENUSE in parts:
            excl.append(tri.hypotenuse)
        if LEG_X in parts:
            excl.append(tri.leg_x)
        if LEG_Y in parts:
            excl.append(tri.leg_y)
        report.oracle = oracle.brute_triangle(
            Triangle(*tri.vertices), exclude_segments=excl, budget=args.oracle_budget
        )
    return report


def _cmd_tri(args):
    coords = _rational_args(args, ["x1", "y1", "x2", "y2", "x3", "y3"])
    tri = Triangle((coords[0], coords[1]), (coords[2], coords[3]), (coords[4], coords[5]))
    count = triangle_count(tri)
    trace = {"case": triangle_case(tri)} if args.trace else None
    report = CountReport(
        "tri(" + ", ".join(format_rational(v) for v in coords) + ")", count, trace
    )
    if args.check:
        report.oracle = oracle.brute_triangle(tri, budget=args.oracle_budget)
    return report


def _read_polygon(path):
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    return polygon_from_text(text)


def _cmd_poly(args):
    poly = _read_polygon(args.file)
    count = polygon_count(poly)
    trace = None
    if args.trace:
        tris = triangulate(poly)
        trace = {
            "triangles": len(tris),
            "triangle_counts": [str(triangle_count(t)) for t in tris],
        }
    report = CountReport(f"poly(n={len(poly.vertices)})", count, trace)
    if args.check:
        report.oracle = oracle.brute_polygon(poly, budget=args.oracle_budget)
    return report


def _cmd_tetra(args):
    a1, a2, a3, b = _int_args(args, ["a1", "a2", "a3", "b"])
    count = tetra_count(a1, a2, a3, b)
    trace = None
    if args.trace:
        trace = {"slices": [str(n) for n in tetra_slice_counts(a1, a2, a3, b)]}
    report = CountReport(f"tetra({a1}, {a2}, {a3}; {b})", count, trace)
    if args.check:
        report.oracle = oracle.brute_tetra(a1, a2, a3, b, budget=args.oracle_budget)
    return report


def _cmd_denumerant(args):
    a, b, c = _int_args(args, ["a", "b", "c"])
    count = TwoGenSemigroup(a, b).denumerant(c)
    report = CountReport(f"denumerant({c}; {a}, {b})", count)
    if args.check:
        report.oracle = oracle.brute_denumerant2(a, b, c)
    return report


def _cmd_denumerant3(args):
    a1, a2, a3, n = _int_args(args, ["a1", "a2", "a3", "n"])
    count = denumerant3(a1, a2, a3, n)
    report = CountReport(f"denumerant({n}; {a1}, {a2}, {a3})", count)
    if args.check:
        report.oracle = oracle.brute_denumerant3(a1, a2, a3, n)
    return report


def _cmd_semigroup(args):
    a, b = _int_args(args, ["a", "b"])
    sg = TwoGenSemigroup(a, b)
    shape = f"semigroup({a}, {b})"
    if args.gaps:
        gaps = sg.gaps()
        report = CountReport(shape + " gaps", len(gaps), {"gaps": [str(n) for n in gaps]})
        if args.check:
            report.oracle = len(oracle.brute_gaps(a, b))
    elif args.apery is not None:
        s = parse_int(args.apery)
        ap = sg.apery(s)
        # the count is the set's sum: a checksum that detects any wrong element
        report = CountReport(shape + f" apery({s})", sum(ap), {"apery": [str(n) for n in ap]})
        if args.check:
            report.oracle = sum(oracle.brute_apery(a, b, s))
    elif args.contains is not None:
        n = parse_int(args.contains)
        member = sg.contains(n)
        report = CountReport(shape + f" contains({n})", 1 if member else 0,
                             {"contains": member})
        if args.check:
            report.oracle = 1 if oracle.brute_contains(a, b, n, budget=args.oracle_budget) else 0
    elif args.upto is not None:
        c = parse_int(args.upto)
        report = CountReport(shape + f" upto({c})", sg.count_upto(c))
        if args.check:
            report.oracle = oracle.brute_count_upto(a, b, c, budget=args.oracle_budget)
    else:
        report = CountReport(
            shape,
            sg.genus,
            {"frobenius": str(sg.frobenius), "genus": str(sg.genus)},
        )
        if args.check:
            gaps = oracle.brute_gaps(a, b)
            report.oracle = len(gaps)
    return report


def _cmd_pick(args):
    poly = _read_polygon(args.file)
    audit = pick_audit(poly)
    total = audit.interior + audit.boundary
    trace = {
        "area": format_rational(audit.area),
        "interior": str(audit.interior),
        "boundary": str(audit.boundary),
        "holds": audit.holds,
    }
    report = CountReport(f"pick(n={len(poly.vertices)})", total, trace)
    if args.check:
        report.oracle = oracle.brute_polygon(poly, budget=args.oracle_budget)
    return report


# --- driver ----------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="latticecount",
        description="Exact lattice-point counts for rational triangles, "
        "polygons and stable right tetrahedra.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the report as JSON")
    common.add_argument("--trace", action="store_true",
                        help="include the decomposition trace")
    common.add_argument("--check", action="store_true",
                        help="cross-check against the brute-force oracle")
    common.add_argument("--oracle-budget", type=int, default=oracle.DEFAULT_CELL_BUDGET,
                        metavar="N", help="cell budget for the brute-force oracle")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("thr", parents=[common],
                        help="count a*x + b*y <= c over x, y >= 0 (a, b coprime)")
    for name in ("a", "b", "c"):
        sp.add_argument(name)
    sp.set_defaults(handler=_cmd_thr)

    sp = sub.add_parser("rect", parents=[common], help="count a stable rectangle")
    for name in ("x0", "y0", "x1", "y1"):
        sp.add_argument(name)
    sp.set_defaults(handler=_cmd_rect)

    sp = sub.add_parser("rtri", parents=[common],
                        help="count a stable right triangle (A right angle, "
                        "B above/below A, C beside A)")
    for name in ("ax", "ay", "bx", "by", "cx", "cy"):
        sp.add_argument(name)
    sp.add_argument("--exclude", action="append", metavar="PART",
                    help="boundary parts to exclude: hyp, legx, legy "
                    "(repeatable, comma-separated)")
    sp.set_defaults(handler=_cmd_rtri)

    sp = sub.add_parser("tri", parents=[common], help="count a general triangle")
    for name in ("x1", "y1", "x2", "y2", "x3", "y3"):
        sp.add_argument(name)
    sp.set_defaults(handler=_cmd_tri)

    sp = sub.add_parser("poly", parents=[common],
                        help="count a simple polygon read from FILE or - (stdin)")
    sp.add_argument("file")
    sp.set_defaults(handler=_cmd_poly)

    sp = sub.add_parser("tetra", parents=[common],
                        help="count a1*x1 + a2*x2 + a3*x3 <= b over xi >= 0")
    for name in ("a1", "a2", "a3", "b"):
        sp.add_argument(name)
    sp.set_defaults(handler=_cmd_tetra)

    sp = sub.add_parser("denumerant", parents=[common],
                        help="representations of c as x*a + y*b (a, b coprime)")
    for name in ("a", "b", "c"):
        sp.add_argument(name)
    sp.set_defaults(handler=_cmd_denumerant)

    sp = sub.add_parser("denumerant3", parents=[common],
                        help="representations of n over three generators")
    for name in ("a1", "a2", "a3", "n"):
        sp.add_argument(name)
    sp.set_defaults(handler=_cmd_denumerant3)

    sp = sub.add_parser("semigroup", parents=[common],
                        help="invariants of the numerical semigroup <a, b>")
    sp.add_argument("a")
    sp.add_argument("b")
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--gaps", action="store_true", help="list the gaps")
    group.add_argument("--apery", metavar="S", help="Apery set w.r.t. generator S")
    group.add_argument("--contains", metavar="N", help="membership of N")
    group.add_argument("--upto", metavar="C", help="count elements in [0, C]")
    sp.set_defaults(handler=_cmd_semigroup)

    sp = sub.add_parser("pick", parents=[common],
                        help="Pick's-theorem audit of an integral-vertex polygon")
    sp.add_argument("file")
    sp.set_defaults(handler=_cmd_pick)

    return parser


def run(argv, out=None, err=None):
    """Run the CLI; returns the exit code (0 ok, 1 input error, 2 oracle
    disagreement)."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        report = args.handler(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return 1
    if args.check and report.oracle is not None:
        report.agreed = report.count == report.oracle
    if args.json:
        print(dumps_canonical(report.to_dict()), file=out)
    else:
        print(render_text(report), file=out)
    return 2 if report.agreed is False else 0


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
