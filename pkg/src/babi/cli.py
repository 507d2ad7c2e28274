"""Command line interface: construct, verify, bound, search, catalog.

Exit codes: 0 success, 2 invalid arguments, 3 construction or validation
failure, 4 search budget exhausted. The data stream (stdout) carries only
JSON or graph6 unless ``--text`` is given; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .bounds import all_bounds
from .constructions import RECIPES, ConstructionError
from .graph import BabiParams, verify_babi
from .graph6 import Graph6Error, graph6_encode, read_graph6, write_graph6
from .named import ASSET_ENV, AssetNotFoundError, AssetValidationError, NamedGraphError
from .search.search import SearchSpec, count_nonisomorphic, exhaustive_min, BudgetExhausted

EXIT_OK, EXIT_ARGS, EXIT_FAIL, EXIT_BUDGET = 0, 2, 3, 4


class UsageError(Exception):
    pass


def _emit(obj, text: bool, render=None) -> None:
    if text and render is not None:
        print(render(obj))
    else:
        print(json.dumps(obj, sort_keys=True))


def _params(text: str) -> BabiParams:
    try:
        return BabiParams.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def cmd_construct(args) -> int:
    recipe = RECIPES[args.recipe]
    kwargs = {}
    for name in recipe.params:
        value = args.assets if name == "assets" else getattr(args, name)
        if value is None and name != "assets":
            raise UsageError(f"recipe {recipe.name} needs --{name}")
        kwargs[name] = value
    built = recipe.run(**kwargs)
    cert = built.certificate.to_dict()
    if args.output:
        write_graph6(built.graph, args.output)
        _emit(cert, args.text, _render_cert)
    elif args.format == "graph6":
        sys.stdout.write(graph6_encode(built.graph).decode() + "\n")
    else:
        _emit({"graph6": graph6_encode(built.graph).decode(), "certificate": cert}, False)
    return EXIT_OK


def cmd_verify(args) -> int:
    path = Path(args.file)
    if not path.is_file():
        raise UsageError(f"no such file: {path}")
    G = read_graph6(path)
    cert = verify_babi(G, args.params, provenance=f"file {path.name}")
    _emit(cert.to_dict(), args.text, _render_cert)
    return EXIT_OK if cert.balanced else EXIT_FAIL


def cmd_bound(args) -> int:
    out = {"params": [args.r, args.s, args.g], "bounds": all_bounds(args.r, args.s, args.g)}
    _emit(out, args.text, lambda o: "\n".join(f"{k}: {v}" for k, v in o["bounds"].items()))
    return EXIT_OK


def cmd_search(args) -> int:
    p = BabiParams(args.r, args.s, args.g)
    if args.count is not None:
        try:
            n = count_nonisomorphic(p, args.count, node_limit=args.node_limit, workers=args.workers)
        except BudgetExhausted as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_BUDGET
        _emit({"params": [p.r, p.s, p.g], "order": args.count, "count": n}, args.text)
        return EXIT_OK
    spec = SearchSpec(
        p,
        args.vmax,
        "prove-min" if args.prove_min else "find-first",
        node_limit=args.node_limit,
        time_limit=args.time_limit,
        v_min=args.vmin,
    )
    out = exhaustive_min(spec, workers=args.workers, checkpoint=args.checkpoint, resume=args.resume)
    _emit({"spec": spec.to_dict(), "outcome": out.to_dict()}, args.text)
    if not out.exhaustive:
        print("warning: search budget exhausted; result is not exhaustive", file=sys.stderr)
        return EXIT_BUDGET
    return EXIT_OK


def cmd_catalog(args) -> int:
    items = [r.to_dict() for r in RECIPES.values()]
    _emit(items, args.text, lambda xs: "\n".join(f"{x['name']}: order {x['order']} ({x['domain']})" for x in xs))
    return EXIT_OK


def _render_cert(c: dict) -> str:
    return (
        f"order {c['order']}, girth {c['girth']}, degrees {c['degrees']}, balanced {c['balanced']}\n"
        f"census {c['census']}\n{c['provenance']}"
    )


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--assets", default=argparse.SUPPRESS,
        help=f"asset directory (default: ${ASSET_ENV}, then the packaged data)",
    )
    common.add_argument(
        "--text", action="store_true", default=argparse.SUPPRESS, help="human-readable output instead of JSON"
    )
    ap = argparse.ArgumentParser(
        prog="babi", description="Balanced biregular graphs: build, verify, bound, search.", parents=[common]
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name: str, **kw) -> argparse.ArgumentParser:
        return sub.add_parser(name, parents=[common], **kw)

    c = add("construct", help="run a named recipe")
    c.add_argument("recipe", choices=sorted(RECIPES))
    c.add_argument("--r", type=int)
    c.add_argument("--s", type=int)
    c.add_argument("--q", type=int)
    c.add_argument("--type", type=int, choices=(1, 2))
    c.add_argument("--gamma", help="petersen, robertson, heawood, hoffman_singleton, cycle:N, matching:N")
    c.add_argument("--gr", help="r-regular input for compose (same names as --gamma)")
    c.add_argument("--gs", help="s-regular input for compose")
    c.add_argument("--g", type=int, help="girth for compose")
    c.add_argument("-o", "--output", help="write graph6 here and print only the certificate")
    c.add_argument("--format", choices=("json", "graph6"), default="json")
    c.set_defaults(func=cmd_construct)

    v = add("verify", help="check a graph6 file against (r,s;g)")
    v.add_argument("file")
    v.add_argument("--params", type=_params, required=True, metavar="R,S,G")
    v.set_defaults(func=cmd_verify)

    b = add("bound", help="all bounds that apply to (r,s;g)")
    b.add_argument("r", type=int)
    b.add_argument("s", type=int)
    b.add_argument("g", type=int)
    b.set_defaults(func=cmd_bound)

    s = add("search", help="exhaustive search for the smallest babi-graph")
    s.add_argument("r", type=int)
    s.add_argument("s", type=int)
    s.add_argument("g", type=int)
    s.add_argument("--vmax", type=int, help="largest order to try")
    s.add_argument("--vmin", type=int, help="smallest order to try (default: the babi lower bound)")
    s.add_argument("--prove-min", action="store_true")
    s.add_argument("--count", type=int, metavar="V", help="count isomorphism classes on V vertices instead")
    s.add_argument("--node-limit", type=int)
    s.add_argument("--time-limit", type=float, help="seconds")
    s.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    s.add_argument("--checkpoint", help="write progress here after every subtree")
    s.add_argument("--resume", help="continue from a checkpoint file")
    s.set_defaults(func=cmd_search)

    k = add("catalog", help="list recipes")
    k.set_defaults(func=cmd_catalog)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_ARGS
    if args.command == "search" and args.count is None and args.vmax is None:
        print("error: search needs --vmax or --count", file=sys.stderr)
        return EXIT_ARGS
    # options shared by the top level and the subcommands are suppressed when absent
    args.assets = getattr(args, "assets", None)
    args.text = getattr(args, "text", False)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        if isinstance(exc, (Graph6Error, AssetValidationError)):
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_FAIL
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ARGS
    except (ConstructionError, NamedGraphError, AssetNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
