"""Command-line front end.

Exit codes: 0 success, 1 invalid input, 2 numerical failure, 3 size cap
exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import bounds, enumeration, kelmans, spectral
from .errors import AlphaSpectraError, ValidationError
from .mixed_graph import degree_sequence, graph_from_json, graph_to_json

FMT = "{:.12f}"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def parse_alpha_grid(text: str) -> list[float]:
    """``"0,0.5,1"`` or ``"start:step:end"`` (end inclusive); sorted, unique."""
    text = text.strip()
    try:
        if ":" in text:
            start, step, end = (float(x) for x in text.split(":"))
            if step <= 0:
                raise ValidationError("alpha grid step must be positive")
            count = int(np.floor((end - start) / step + 1e-9)) + 1
            values = [round(start + i * step, 12) for i in range(max(count, 0))]
        else:
            values = [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise ValidationError(f"cannot parse alpha grid {text!r}") from None
    if not values:
        raise ValidationError("empty alpha grid")
    for a in values:
        spectral._check_alpha(a)
    return sorted(set(values))


def parse_order_range(text: str) -> list[int]:
    """``"5"``, ``"2:7"`` (inclusive) or ``"3,5,6"``."""
    try:
        if ":" in text:
            lo, hi = (int(x) for x in text.split(":"))
            return list(range(lo, hi + 1))
        return sorted({int(x) for x in text.split(",")})
    except ValueError:
        raise ValidationError(f"cannot parse order range {text!r}") from None


def _read_graph(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from None
    return graph_from_json(text)


def _alpha(value: str) -> float:
    try:
        return spectral._check_alpha(float(value))
    except ValueError:
        raise ValidationError(f"alpha must be a number, got {value!r}") from None


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_radius(args) -> str:
    G = _read_graph(args.graph)
    rho = spectral.spectral_radius(spectral.a_alpha(G, _alpha(args.alpha)), args.tol)
    if args.format == "json":
        return json.dumps({"alpha": float(args.alpha), "rho": float(FMT.format(rho))}) + "\n"
    return FMT.format(rho) + "\n"


def cmd_aalpha(args) -> str:
    G = _read_graph(args.graph)
    M = spectral.a_alpha(G, _alpha(args.alpha))
    if args.format == "json":
        return json.dumps([[float(FMT.format(x)) for x in row] for row in M]) + "\n"
    sep = "," if args.format == "csv" else " "
    return "".join(sep.join(FMT.format(x) for x in row) + "\n" for row in M)


def cmd_kelmans(args) -> str:
    G = _read_graph(args.graph)
    return graph_to_json(kelmans.graph_kelmans(G, args.a, args.b)) + "\n"


def _class_record(cf) -> str:
    return json.dumps(
        {
            "key": cf.key,
            "degree_sequence": list(degree_sequence(cf.graph)),
            "graph": json.loads(graph_to_json(cf.graph)),
        }
    )


def cmd_enumerate(args) -> str:
    return "".join(_class_record(cf) + "\n" for cf in enumeration.enumerate_mixed_trees(args.order, args.size))


def cmd_poset(args) -> str:
    poset = enumeration.build_poset(args.order, args.size)
    if args.format == "json":
        return json.dumps(
            {
                "nodes": [cf.key for cf in poset.nodes],
                "relations": sorted(poset.relations),
                "covers": sorted(poset.covers),
            }
        ) + "\n"
    return poset.to_dot()


def cmd_maximal(args) -> str:
    T = _read_graph(args.graph)
    exhaustive = enumeration.is_maximal(T)
    structural = enumeration.classify_maximal(T)
    if args.format == "json":
        return json.dumps({"is_maximal": exhaustive, "classify_maximal": structural}) + "\n"
    return f"is_maximal {str(exhaustive).lower()}\nclassify_maximal {str(structural).lower()}\n"


def cmd_bounds(args) -> str:
    a = _alpha(args.alpha)
    lo = bounds.lower_bound(args.order, args.size, a)
    hi = bounds.upper_bound(args.order, args.size, a)
    if args.format == "json":
        return json.dumps({"lower": float(FMT.format(lo)), "upper": float(FMT.format(hi))}) + "\n"
    return f"lower {FMT.format(lo)}\nupper {FMT.format(hi)}\n"


def cmd_verify(args) -> str:
    grid = parse_alpha_grid(args.alpha_grid)
    sizes = None if args.size is None else [args.size]
    report = bounds.verify_bounds(parse_order_range(args.order), sizes, grid, args.tol)
    args._verify_ok = report.ok
    return report.to_csv()


def cmd_star_root(args) -> str:
    root = bounds.star_quadratic_root(args.order, args.size, args.extra_out, _alpha(args.alpha))
    return FMT.format(root) + "\n"


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="alpha-spectra", description="A_alpha spectral radii of mixed graphs and trees")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, fmt="plain", choices=("plain", "json")):
        sp.add_argument("--out", help="write output to this path instead of stdout")
        sp.add_argument("--format", default=fmt, choices=choices)

    sp = sub.add_parser("radius", help="print rho_alpha of a graph")
    sp.add_argument("graph", help="graph JSON file, or - for stdin")
    sp.add_argument("--alpha", required=True)
    sp.add_argument("--tol", type=float, default=spectral.DEFAULT_TOL)
    common(sp)
    sp.set_defaults(func=cmd_radius)

    sp = sub.add_parser("aalpha", help="print the A_alpha matrix")
    sp.add_argument("graph")
    sp.add_argument("--alpha", required=True)
    common(sp, choices=("plain", "json", "csv"))
    sp.set_defaults(func=cmd_aalpha)

    sp = sub.add_parser("kelmans", help="Kelmans transformation from b to a")
    sp.add_argument("graph")
    sp.add_argument("a", type=int)
    sp.add_argument("b", type=int)
    common(sp, "json", ("json",))
    sp.set_defaults(func=cmd_kelmans)

    sp = sub.add_parser("enumerate", help="stream mixed tree classes as JSON lines")
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument("--size", type=int, required=True)
    common(sp, "json", ("json",))
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("poset", help="poset of mixed tree classes")
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument("--size", type=int, required=True)
    common(sp, "dot", ("dot", "json"))
    sp.set_defaults(func=cmd_poset)

    sp = sub.add_parser("maximal", help="maximality of a mixed tree, two ways")
    sp.add_argument("graph")
    common(sp)
    sp.set_defaults(func=cmd_maximal)

    sp = sub.add_parser("bounds", help="lower and upper bounds for T(n, m)")
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument("--size", type=int, required=True)
    sp.add_argument("--alpha", required=True)
    common(sp)
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("verify", help="check both bounds over every tree class")
    sp.add_argument("--order", required=True, help="n, lo:hi or a,b,c")
    sp.add_argument("--size", type=int, help="restrict to one size (default: all)")
    sp.add_argument("--alpha-grid", default="0,0.25,0.5,0.75,1")
    sp.add_argument("--tol", type=float, default=1e-8)
    common(sp, "csv", ("csv",))
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("star-root", help="rho_alpha of a mixed star from its quadratic")
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument("--size", type=int, required=True)
    sp.add_argument("--extra-out", type=int, required=True)
    sp.add_argument("--alpha", required=True)
    common(sp)
    sp.set_defaults(func=cmd_star_root)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "tol", 1.0) <= 0:
        print("alpha-spectra: error: --tol must be positive", file=sys.stderr)
        return 1
    try:
        text = args.func(args)
    except AlphaSpectraError as exc:
        print(f"alpha-spectra: error: {exc}", file=sys.stderr)
        return exc.exit_code
    _emit(text, args.out)
    if getattr(args, "_verify_ok", True) is False:
        print("alpha-spectra: bound violation found", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
