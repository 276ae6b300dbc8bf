"""Command-line front end: ``dinfty VERB ...``.

Exit codes: 0 success, 1 a verification failed or formula and oracle disagree,
2 bad usage or unparsable labels.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cluster, suites
from .arquiver import Window, WindowUnderflow, _rep_neighbours, h_minus, h_plus
from .catalog import tau_rep_power
from .fields import Field
from .hom import ext, hom
from .labels import LabelError, LabelParseError, all_labels, parse_label
from .objects import parse_cluster, parse_derived, tau_cluster, tau_derived
from .regions import in_backward_rectangle, in_forward_rectangle

SUITES = (
    "formulas",
    "ar-catalog",
    "two-cy",
    "uf",
    "rok",
    "cdetr",
    "coincide",
    "in-t",
    "force-bo",
    "no-two-cycles",
)


def _field(args) -> Field:
    return Field(None) if args.field == "rational" else Field(args.prime)


def _parse(text: str, category: str):
    if category == "rep":
        return parse_label(text)
    if category == "derived":
        return parse_derived(text)
    return parse_cluster(text)


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, default=str))
    else:
        print(text)


# verbs


def cmd_hom(args, functor=hom) -> int:
    x, y = _parse(args.x, args.category), _parse(args.y, args.category)
    field = _field(args)
    if args.method == "both":
        f = functor(x, y, args.category, field)
        o = functor(x, y, args.category, field, oracle_only=True)
        verdict = "MATCH" if f == o else "MISMATCH"
        _emit(args, {"formula": f, "oracle": o, "verdict": verdict}, f"{f} {o} {verdict}")
        return 0 if f == o else 1
    d = functor(x, y, args.category, field, oracle_only=args.method == "oracle")
    _emit(args, {"dim": d}, str(d))
    return 0


def cmd_ext(args) -> int:
    return cmd_hom(args, functor=ext)


def cmd_tau(args) -> int:
    obj = _parse(args.x, args.category)
    if args.category == "rep":
        out = tau_rep_power(obj, args.power)
    elif args.category == "derived":
        out = tau_derived(obj, args.power)
    else:
        out = tau_cluster(obj, args.power)
    text = "NONE" if out is None else str(out)
    _emit(args, {"object": None if out is None else text}, text)
    return 0


def cmd_region(args) -> int:
    x = parse_cluster(args.x)
    window = Window(args.window)
    window.require(x)
    regions = {"H": sorted(cluster.forbidden_region(x, window, _field(args)))}
    if x.connecting:
        regions["H+"] = sorted(h_plus(x, window))
        regions["H-"] = sorted(h_minus(x, window))
    else:
        regions["forward"] = [y for y in window.regular if in_forward_rectangle(x.label, y.label)]
        regions["backward"] = [y for y in window.regular if in_backward_rectangle(x.label, y.label)]
    if args.format == "json":
        print(json.dumps({k: [str(o) for o in v] for k, v in regions.items()}))
    else:
        for name, objs in regions.items():
            for o in objs:
                print(f"{name}\t{o}")
    return 0


_COLOURS = {0: "white", 1: "lightblue", 2: "steelblue"}


def cmd_heatmap(args) -> int:
    x = parse_label(args.x)
    field = _field(args)
    labels = all_labels(args.window)
    dims = {y: hom(x, y, "rep", field) for y in labels}
    if args.format == "dot":
        print("digraph heatmap {")
        print(f'  label="dim Hom({x}, -)";')
        for y in labels:
            colour = _COLOURS.get(dims[y], "navy")
            print(f'  "{y}" [label="{y}\\n{dims[y]}", style=filled, fillcolor={colour}];')
        for y in labels:
            for z in sorted(_rep_neighbours(y, forward=True)):
                if z.m <= args.window:
                    print(f'  "{y}" -> "{z}";')
        print("}")
    elif args.format == "json":
        print(json.dumps({str(y): d for y, d in dims.items()}))
    else:
        for y in labels:
            print(f"{y}\t{dims[y]}")
    return 0


def _run_suite(name: str, args) -> cluster.Report:
    N, field = args.window, _field(args)
    window = Window(N)
    if name == "formulas":
        return suites.formulas_suite(N, field)
    if name == "ar-catalog":
        return suites.ar_catalog_suite(N, field)
    if name == "two-cy":
        return suites.two_cy_suite(N, field)
    if name == "uf":
        return suites.uf_suite(N, field)
    if name == "rok":
        rep = cluster.check_rok(window, field)
        rep.extend(cluster.check_rok(window, field, require_ext_zero=False))
        return rep
    if name == "force-bo":
        return cluster.check_force_bo(window, field)
    if name == "no-two-cycles":
        return cluster.rigid_suite(args.count, window, args.seed, field)[0]
    ts = args.t
    rep = cluster.Report(name)
    if name == "cdetr":
        for t in ts or range(0, (N - 7) // 2 + 1):
            rep.extend(cluster.check_cdetr(t, window, field))
    elif name == "coincide":
        for t in ts or range(0, (N - 6) // 2 + 1):
            rep.extend(cluster.check_coincide(t, window, field))
    elif name == "in-t":
        for t in ts or range(3, (N - 3) // 2 + 1, 2):
            rep.extend(cluster.check_in_t(t, window, field))
    return rep


def cmd_verify(args) -> int:
    rep = _run_suite(args.suite, args).sorted() if args.sort else _run_suite(args.suite, args)
    sys.stdout.write(rep.to_json() if args.format == "json" else rep.to_tsv())
    return 0 if rep.ok else 1


def cmd_enumerate_tilting(args) -> int:
    window = Window(args.window)
    field = _field(args)
    seed = [parse_cluster(s) for s in args.start]
    out = []
    for i in range(args.count):
        s = args.seed + i
        T = cluster.rigid_completion(seed, window, s, field, args.order)
        out.append({"seed": s, "size": len(T), "objects": [str(o) for o in T]})
    if args.format == "json":
        print(json.dumps(out, indent=2))
    else:
        print(f"# {cluster.HEADER}")
        for row in out:
            print(f"{row['seed']}\t{row['size']}\t{' '.join(row['objects'])}")
    return 0


# parser


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--window", type=int, default=15, help="largest support vertex (default 15)")
    p.add_argument("--prime", type=int, default=1009, help="characteristic for --field gfp")
    p.add_argument("--field", choices=("gfp", "rational"), default="gfp")
    p.add_argument("--seed", type=int, default=0, help="random seed for rigid-set completion")
    p.add_argument("--format", choices=("tsv", "json", "dot"), default="tsv")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="dinfty",
        description="Hom/Ext dimensions and cluster-category checks for the zigzag D-infinity quiver.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    for verb, func in (("hom", cmd_hom), ("ext", cmd_ext)):
        p = sub.add_parser(verb, parents=[common], help=f"dimension of {verb.capitalize()}(X, Y)")
        p.add_argument("x")
        p.add_argument("y")
        p.add_argument("--category", choices=("rep", "derived", "cluster"), default="rep")
        p.add_argument("--method", choices=("formula", "oracle", "both"), default="formula")
        p.set_defaults(func=func)

    p = sub.add_parser("tau", parents=[common], help="AR translate")
    p.add_argument("x")
    p.add_argument("--power", type=int, default=1)
    p.add_argument("--category", choices=("rep", "derived", "cluster"), default="rep")
    p.set_defaults(func=cmd_tau)

    p = sub.add_parser("region", parents=[common], help="forbidden region and its pieces inside the window")
    p.add_argument("x")
    p.set_defaults(func=cmd_region)

    p = sub.add_parser("heatmap", parents=[common], help="dim Hom_rep(X, -) over the window")
    p.add_argument("x")
    p.set_defaults(func=cmd_heatmap)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--t", type=int, action="append", help="restrict to these orbit indices (repeatable)")
    p.add_argument("--count", type=int, default=10, help="rigid sets for no-two-cycles")
    p.add_argument("--sort", action="store_true", help="sort report lines")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate-tilting", parents=[common], help="window-maximal rigid sets")
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--order", choices=("random", "sorted"), default="random")
    p.add_argument("--start", nargs="*", default=[], help="rigid seed objects")
    p.set_defaults(func=cmd_enumerate_tilting)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format == "dot" and args.verb != "heatmap":
        parser.error("--format dot is only available for heatmap")
    try:
        if args.field == "gfp":
            Field(args.prime)
        return args.func(args)
    except (LabelParseError, LabelError, WindowUnderflow, ValueError) as exc:
        print(f"dinfty: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
