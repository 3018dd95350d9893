"""Command-line front end: ``metrigraph {index,verify,contract,trees,inverse}``.

Exit status is 0 on success, 1 on bad input or an exceeded cap, and 2 when
an identity check fails.  Exact rationals are printed as ``"p/q"`` strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from importlib import resources

from . import inverse_wiener as iw
from .corpus import random_corpus
from .freetrees import CapExceeded, enumerate_free_trees, parents_from_levels
from .graph import ContractionSeq, GraphError
from .graphio import dumps_edgelist, format_fraction, graph_to_dict, read_graph, write_graph
from .identities import CATALOG_IDS, DEFAULT_TOL, verify_many
from .invariants import index_report
from .kernels import wiener_from_levels
from .resistance import numeric_mode

EXIT_OK, EXIT_INPUT, EXIT_FAILED = 0, 1, 2


def load_schema(name: str) -> dict:
    """JSON schema shipped for one output shape (``index``, ``verify``, ``inverse_poly`` ...)."""
    return json.loads(resources.files("metrigraph").joinpath("schemas", f"{name}.schema.json").read_text())


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # usage errors are input errors; keep 2 for failed verification
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def render_value(x):
    """Numbers as JSON-safe values: exact ones as strings, floats as floats."""
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, Fraction):
        return format_fraction(x)
    if isinstance(x, int):
        return str(x)
    if isinstance(x, float):
        return x
    if isinstance(x, (tuple, list)):
        return [render_value(y) for y in x]
    raise TypeError(f"cannot render {type(x).__name__}")


def _plain(x):
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (tuple, list)):
        return [_plain(y) for y in x]
    if isinstance(x, Fraction):
        return format_fraction(x)
    return x


def _emit(args, payload: dict, text_lines) -> None:
    if args.output == "json":
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        for line in text_lines(payload):
            sys.stdout.write(line + "\n")


def _load(path: str):
    try:
        return read_graph(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


# subcommands --------------------------------------------------------------------


def cmd_index(args) -> int:
    g = _load(args.graph)
    with numeric_mode(args.mode):
        report = index_report(g)
    payload = {"mode": args.mode, "fingerprint": g.fingerprint, **report.as_dict(render_value)}
    _emit(args, payload, lambda p: [f"{k}: {v}" for k, v in p.items()])
    return EXIT_OK


def _identity_list(spec: str) -> list[str]:
    if spec == "all":
        return list(CATALOG_IDS)
    names = [s.strip().upper() for s in spec.split(",") if s.strip()]
    unknown = [n for n in names if n not in CATALOG_IDS]
    if unknown or not names:
        raise InputError(f"unknown identity {', '.join(unknown) or spec!r}; "
                         f"known: {', '.join(CATALOG_IDS)}")
    return names


def cmd_verify(args) -> int:
    identities = _identity_list(args.identities)
    if (args.graph is None) == (args.random is None):
        raise InputError("give either a graph file or --random N")
    if args.random is not None:
        if args.random < 1:
            raise InputError("--random needs a positive count")
        graphs = random_corpus(args.random, args.seed, max_v=args.max_vertices or 7)
    else:
        graphs = [_load(args.graph)]
    results = []
    counts = {"passed": 0, "failed": 0, "skipped": 0}
    all_rows = verify_many(graphs, identities, args.tol, args.jobs, args.mode)
    for g, rows in zip(graphs, all_rows):
        for ident, params, report, reason in rows:
            row = {"graph": g.fingerprint, "identity": ident, "params": _plain(params)}
            if report is None:
                row.update(status="skipped", reason=reason)
                counts["skipped"] += 1
            else:
                row.update(status="pass" if report.passed else "fail",
                           relation=report.relation,
                           left=render_value(report.left),
                           right=render_value(report.right))
                if report.lower is not None:
                    row["lower"] = render_value(report.lower)
                if report.witness:
                    row["witness"] = _plain(report.witness)
                counts["passed" if report.passed else "failed"] += 1
            results.append(row)
    payload = {"mode": args.mode, "graphs": len(graphs), "summary": counts, "results": results}

    def text(p):
        for r in p["results"]:
            detail = r.get("reason") or f"{r['left']} {r['relation']} {r['right']}"
            yield f"{r['status'].upper():7} {r['identity']:14} {r['graph']} {json.dumps(r['params'])} {detail}"
        s = p["summary"]
        yield f"{s['passed']} passed, {s['failed']} failed, {s['skipped']} skipped"

    _emit(args, payload, text)
    return EXIT_FAILED if counts["failed"] else EXIT_OK


def cmd_contract(args) -> int:
    g = _load(args.graph)
    try:
        edges = tuple(int(x) for x in args.edges.split(",") if x.strip())
    except ValueError:
        raise InputError(f"--edges must be comma-separated edge ids, got {args.edges!r}") from None
    h, vmap = ContractionSeq(edges).apply(g)
    if args.out:
        write_graph(h, args.out)
    payload = {"contracted": list(edges), "vertex_map": list(vmap), "graph": graph_to_dict(h)}
    if args.output == "json":
        _emit(args, payload, None)
    else:
        sys.stdout.write(dumps_edgelist(h))
    return EXIT_OK


def cmd_trees(args) -> int:
    n = args.n
    trees = []
    spectrum = set()
    count = 0
    for levels in enumerate_free_trees(n).level_sequences():
        w = wiener_from_levels(levels)
        spectrum.add(w)
        count += 1
        if args.list:
            parent = parents_from_levels(levels)
            trees.append({"edges": [[parent[i], i] for i in range(1, n)], "wiener": w})
    payload = {"n": n, "count": count, "spectrum": sorted(spectrum)}
    if args.list:
        payload["trees"] = trees

    def text(p):
        yield f"n: {p['n']}"
        yield f"count: {p['count']}"
        yield "spectrum: " + " ".join(map(str, p["spectrum"]))
        for t in p.get("trees", []):
            yield f"W={t['wiener']} " + " ".join(f"{a}-{b}" for a, b in t["edges"])

    _emit(args, payload, text)
    return EXIT_OK


def cmd_inverse(args) -> int:
    if (args.poly is None) == (not args.forbidden_wiener):
        raise InputError("give exactly one of --poly F|G or --forbidden-wiener")
    if args.poly is not None:
        bound = iw.EXTENDED_BOUND if args.extended else (args.bound or iw.DEFAULT_BOUND)
        payload = iw.excluded_report(args.poly, bound, args.budget, args.jobs)
        key = "excluded"
    else:
        if args.extended:
            raise InputError("--extended applies to --poly only")
        bound = args.bound or 160
        payload = iw.forbidden_report(bound, args.max_vertices or iw.MAX_TREE_VERTICES)
        key = "forbidden_wiener"

    def text(p):
        yield f"bound: {p['bound']}"
        yield f"{key} ({p['count']}): " + " ".join(map(str, p[key]))

    _emit(args, payload, text)
    return EXIT_OK


# parser -------------------------------------------------------------------------


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _positive_float(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}") from None
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be > 0, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=("exact", "float"), default="exact")
    common.add_argument("--tol", type=_positive_float, default=DEFAULT_TOL,
                        help="relative tolerance in float mode")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--bound", type=_positive_int)
    common.add_argument("--max-vertices", type=_positive_int)
    common.add_argument("--output", choices=("json", "text"), default="json")
    common.add_argument("--jobs", type=_positive_int, default=1, help="worker processes")

    parser = _Parser(prog="metrigraph", description="Resistance invariants and contraction identities "
                                                    "for metrized graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("index", parents=[common], help="print v, e, length, Kf, W, x, y, r")
    p.add_argument("graph")
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("verify", parents=[common], help="check catalog identities")
    p.add_argument("graph", nargs="?")
    p.add_argument("--random", type=int, metavar="N", help="check N seeded random multigraphs")
    p.add_argument("--identities", default="all", help="comma-separated ids or 'all'")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("contract", parents=[common], help="contract a sequence of edges")
    p.add_argument("graph")
    p.add_argument("--edges", required=True, help="edge ids, each relative to the previous result")
    p.add_argument("--out", help="write the contracted graph here (.json or edge list)")
    p.set_defaults(func=cmd_contract)

    p = sub.add_parser("trees", parents=[common], help="free trees on n vertices and their Wiener indices")
    p.add_argument("n", type=_positive_int)
    p.add_argument("--list", action="store_true", help="include every tree")
    p.set_defaults(func=cmd_trees)

    p = sub.add_parser("inverse", parents=[common], help="integers missed by F, G or tree Wiener indices")
    p.add_argument("--poly", type=str.upper, choices=("F", "G"))
    p.add_argument("--forbidden-wiener", action="store_true")
    p.add_argument("--extended", action="store_true", help=f"use bound {iw.EXTENDED_BOUND}")
    p.add_argument("--budget", type=_positive_int, default=iw.DEFAULT_BUDGET,
                   help="maximum polynomial evaluations")
    p.set_defaults(func=cmd_inverse)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, GraphError, CapExceeded, iw.BoundTooLargeForBudget,
            iw.BoundNeedsLargerTrees) as exc:
        print(f"metrigraph: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
