"""Command-line front end.

Subcommands: ``construct`` (build a family member and export it),
``table`` (the per-n comparison table), ``verify`` (re-check an exported
polygon document), ``asymptotics`` (scaled gap vs. limit constant).

Exit codes: 0 ok, 1 verification failure, 2 usage, 3 construction
failure, 4 I/O or parse failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import report as report_mod
from .constants import K1, d_coefficient
from .constructions import Family, construct
from .errors import (
    InfeasibleAlpha,
    MaximizerFailed,
    NewtonFailed,
    NotSmall,
    SmallPolyError,
)
from .geometry import (
    Polygon,
    VERIFY_TOL,
    boundary_order,
    diameter,
    diameter_graph,
    is_convex,
    is_mirror_symmetric,
)

SCHEMA_VERSION = 1
_CHECK_NAMES = ("small", "convex", "symmetric", "diameter_graph_optimal")


def _even_int(text: str) -> int:
    value = int(text)
    if value % 2 != 0:
        raise argparse.ArgumentTypeError(f"{value} is not even")
    return value


def _r12(value: float) -> float:
    return round(float(value), 12)


def compute_checks(poly: Polygon, tol: float = VERIFY_TOL) -> dict:
    dia, _ = diameter(poly)
    small = abs(dia - 1.0) <= tol
    try:
        optimal = diameter_graph(poly, tol).has_optimal_structure
    except NotSmall:
        optimal = False
    return {
        "small": small,
        "convex": is_convex(poly),
        "symmetric": is_mirror_symmetric(poly, tol),
        "diameter_graph_optimal": optimal,
    }


def polygon_document(result) -> dict:
    poly = result.polygon
    dia, _ = diameter(poly)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "family": result.family.value,
        "n": result.n,
    }
    for name in ("alpha", "beta", "gamma"):
        value = getattr(result, name)
        if value is not None:
            doc[name] = _r12(value)
    doc["vertices"] = [[_r12(x), _r12(y)] for x, y in poly.vertices]
    doc["area"] = _r12(result.area)
    doc["diameter"] = _r12(dia)
    doc["checks"] = compute_checks(poly)
    return doc


def render_json(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def render_csv(doc: dict) -> str:
    lines = ["key,value"]
    for key in ("schema_version", "family", "n"):
        lines.append(f"{key},{doc[key]}")
    for key in ("alpha", "beta", "gamma"):
        if key in doc:
            lines.append(f"{key},{doc[key]:.12f}")
    lines.append(f"area,{doc['area']:.12f}")
    lines.append(f"diameter,{doc['diameter']:.12f}")
    for name, value in doc["checks"].items():
        lines.append(f"check_{name},{str(value).lower()}")
    for k, (x, y) in enumerate(doc["vertices"]):
        lines.append(f"v{k}_x,{x:.12f}")
        lines.append(f"v{k}_y,{y:.12f}")
    return "\n".join(lines) + "\n"


def _boundary_segments(poly: Polygon) -> list[tuple[int, int]]:
    order = boundary_order(poly)
    return [(order[i], order[(i + 1) % len(order)]) for i in range(len(order))]


def render_svg(poly: Polygon) -> str:
    def sx(x: float) -> float:
        return 400.0 * x + 220.0

    def sy(y: float) -> float:
        return 420.0 - 400.0 * y

    verts = poly.vertices
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        'width="440" height="440" viewBox="0 0 440 440">',
    ]
    for i, j in _boundary_segments(poly):
        (x1, y1), (x2, y2) = verts[i], verts[j]
        parts.append(
            f'<line class="boundary" x1="{sx(x1):.2f}" y1="{sy(y1):.2f}" '
            f'x2="{sx(x2):.2f}" y2="{sy(y2):.2f}" stroke="black" '
            'stroke-dasharray="6 4" fill="none"/>'
        )
    for i, j in diameter_graph(poly).edges:
        (x1, y1), (x2, y2) = verts[i], verts[j]
        parts.append(
            f'<line class="diameter" x1="{sx(x1):.2f}" y1="{sy(y1):.2f}" '
            f'x2="{sx(x2):.2f}" y2="{sy(y2):.2f}" stroke="black"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_tikz(poly: Polygon) -> str:
    verts = poly.vertices
    order = boundary_order(poly)
    path = " -- ".join(f"({verts[i][0]:.4f},{verts[i][1]:.4f})" for i in order)
    lines = [
        "\\begin{tikzpicture}[scale=4]",
        f"\t\\draw[dashed] {path} -- cycle;",
    ]
    for i, j in diameter_graph(poly).edges:
        lines.append(
            f"\t\\draw ({verts[i][0]:.4f},{verts[i][1]:.4f}) -- "
            f"({verts[j][0]:.4f},{verts[j][1]:.4f});"
        )
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"


def _write_output(text: str, out: str | None) -> int:
    if out is None:
        sys.stdout.write(text)
        return 0
    try:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
    except OSError as exc:
        print(f"error: cannot write {out}: {exc}", file=sys.stderr)
        return 4
    return 0


def cmd_construct(args) -> int:
    if args.n < (4 if args.family == "regular" else 6):
        print(f"error: n too small for family {args.family}", file=sys.stderr)
        return 2
    if args.family == "mossinghoff-prime" and args.n < 8:
        print("error: mossinghoff-prime requires n >= 8", file=sys.stderr)
        return 2
    try:
        result = construct(Family(args.family), args.n)
    except (MaximizerFailed, NewtonFailed, InfeasibleAlpha) as exc:
        print(f"error: construction failed: {exc}", file=sys.stderr)
        return 3
    if args.format == "json":
        text = render_json(polygon_document(result))
    elif args.format == "csv":
        text = render_csv(polygon_document(result))
    elif args.format == "svg":
        text = render_svg(result.polygon)
    else:
        text = render_tikz(result.polygon)
    return _write_output(text, args.out)


def _table_csv(reports) -> str:
    header = (
        "n,alpha_hat,area_regular,area_regular_plus,"
        "area_mossinghoff,area_mossinghoff_prime,area_bn,upper_bound"
    )
    lines = [header]
    for r in reports:
        lines.append(
            f"{r.n},{r.alpha_hat:.10f},{r.area_regular:.10f},"
            f"{r.area_regular_plus:.10f},{r.area_mossinghoff:.10f},"
            f"{r.area_mossinghoff_prime:.10f},{r.area_bn:.10f},"
            f"{r.upper_bound:.10f}"
        )
    return "\n".join(lines) + "\n"


def _table_markdown(reports) -> str:
    header = (
        "| n | alpha_hat | A(regular) | A(regular-plus) | A(mossinghoff) "
        "| A(mossinghoff-prime) | A(bn) | upper bound |"
    )
    sep = "|---" * 8 + "|"
    lines = [header, sep]
    for r in reports:
        lines.append(
            f"| {r.n} | {r.alpha_hat:.10f} | {r.area_regular:.10f} "
            f"| {r.area_regular_plus:.10f} | {r.area_mossinghoff:.10f} "
            f"| {r.area_mossinghoff_prime:.10f} | {r.area_bn:.10f} "
            f"| {r.upper_bound:.10f} |"
        )
    return "\n".join(lines) + "\n"


def cmd_table(args) -> int:
    if args.n_max < 6:
        print("error: --n-max must be >= 6", file=sys.stderr)
        return 2
    try:
        reports = report_mod.table1(args.n_max)
    except SmallPolyError as exc:
        print(f"error: construction failed: {exc}", file=sys.stderr)
        return 3
    text = _table_csv(reports) if args.format == "csv" else _table_markdown(reports)
    code = _write_output(text, args.out)
    if code != 0:
        return code
    if args.figure:
        from . import plotting

        plotting.save_table_figure(reports, args.figure)
        if not args.quiet:
            print(f"figure written to {args.figure}", file=sys.stderr)
    return 0


def _load_document(path: str):
    with open(path, "r", encoding="utf-8") as handle:
        doc = json.load(handle)
    if not isinstance(doc, dict):
        raise ValueError("document must be a JSON object")
    n = doc["n"]
    vertices = doc["vertices"]
    if not isinstance(n, int) or len(vertices) != n:
        raise ValueError("vertex count does not match n")
    poly = Polygon(n, tuple((float(x), float(y)) for x, y in vertices))
    return doc, poly


def cmd_verify(args) -> int:
    try:
        doc, poly = _load_document(args.file)
    except (OSError, ValueError, KeyError, TypeError, json.JSONDecodeError) as exc:
        print(f"error: malformed document: {exc}", file=sys.stderr)
        return 4
    recomputed = compute_checks(poly, args.tol)
    recorded = doc.get("checks", {})
    all_ok = True
    for name in _CHECK_NAMES:
        value = recomputed[name]
        matches = name not in recorded or bool(recorded[name]) == value
        if name == "diameter_graph_optimal":
            ok = matches
        else:
            ok = value and matches
        all_ok &= ok
        status = "PASS" if ok else "FAIL"
        if not args.quiet:
            print(f"{name}: {status} (computed {str(value).lower()})")
    return 0 if all_ok else 1


def cmd_asymptotics(args) -> int:
    n = args.n
    if n < 6:
        print("error: --n must be >= 6", file=sys.stderr)
        return 2
    try:
        if args.series == "ub-gap":
            value, limit = report_mod.gap_vs_bound(n), K1
            print(f"series=ub-gap n={n} scaled={value:.12f} limit={limit:.12f}")
        elif args.series == "mn-gap":
            value, limit = report_mod.gap_vs_mossinghoff(n), d_coefficient(n)
            print(f"series=mn-gap n={n} scaled={value:.12f} limit={limit:.12f}")
        elif args.series == "alpha":
            series = report_mod.alpha_hat_series(n)
            from .constructions import construct_bn

            numeric = construct_bn(n).alpha_star
            print(
                f"series=alpha n={n} series_value={series:.12f} "
                f"numeric={numeric:.12f} abs_diff={abs(series - numeric):.3e}"
            )
            value, limit = series, numeric
        else:
            if args.u is None:
                print("error: --series penalty requires --u", file=sys.stderr)
                return 2
            value = report_mod.perturbation_penalty(n, args.u)
            limit = report_mod.penalty_limit(args.u)
            print(
                f"series=penalty n={n} u={args.u} scaled={value:.12f} "
                f"limit={limit:.12f}"
            )
    except SmallPolyError as exc:
        print(f"error: construction failed: {exc}", file=sys.stderr)
        return 3
    if args.figure:
        from . import plotting

        ns = [k for k in range(6, n + 1, 2)]
        if len(ns) > 32:
            step = len(ns) // 32 + 1
            ns = ns[::step] + ([n] if ns[-1] != n else [])
        if args.series == "ub-gap":
            vals = [report_mod.gap_vs_bound(k) for k in ns]
            plotting.save_gap_figure(ns, vals, K1, "n^3 (ub - A(Bn))", args.figure)
        elif args.series == "mn-gap":
            vals = [report_mod.gap_vs_mossinghoff(k) for k in ns]
            plotting.save_gap_figure(
                ns, vals, d_coefficient(n), "n^5 (A(Bn)-A(Mn))/3pi^3", args.figure
            )
        elif args.series == "alpha":
            from .constructions import construct_bn

            vals = [
                abs(report_mod.alpha_hat_series(k) - construct_bn(k).alpha_star)
                for k in ns
            ]
            plotting.save_gap_figure(ns, vals, 0.0, "|series - numeric|", args.figure)
        else:
            vals = [report_mod.perturbation_penalty(k, args.u) for k in ns]
            plotting.save_gap_figure(
                ns, vals, report_mod.penalty_limit(args.u), "scaled penalty",
                args.figure,
            )
        if not args.quiet:
            print(f"figure written to {args.figure}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="smallpoly",
        description="Construct and verify maximal-area small polygons.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build one polygon and export it")
    p.add_argument(
        "--family",
        required=True,
        choices=[f.value for f in Family],
    )
    p.add_argument("--n", required=True, type=_even_int)
    p.add_argument("--format", default="json", choices=["json", "csv", "svg", "tikz"])
    p.add_argument("--out", default=None)
    p.add_argument("--quiet", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("table", help="per-n comparison table")
    p.add_argument("--n-max", required=True, type=_even_int)
    p.add_argument("--format", default="csv", choices=["csv", "markdown"])
    p.add_argument("--out", default=None)
    p.add_argument("--figure", default=None, help="also render a matplotlib figure")
    p.add_argument("--quiet", action="store_true")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="re-run geometry checks on a JSON document")
    p.add_argument("--file", required=True)
    p.add_argument("--tol", type=float, default=VERIFY_TOL)
    p.add_argument("--quiet", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("asymptotics", help="scaled gaps vs. limit constants")
    p.add_argument("--n", required=True, type=_even_int)
    p.add_argument(
        "--series",
        default="ub-gap",
        choices=["ub-gap", "mn-gap", "alpha", "penalty"],
    )
    p.add_argument("--u", type=float, default=None)
    p.add_argument("--figure", default=None, help="also render a matplotlib figure")
    p.add_argument("--quiet", action="store_true")
    p.set_defaults(func=cmd_asymptotics)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
