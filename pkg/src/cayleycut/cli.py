"""Command-line front end: gen, analyze, kappa, verify, cut.

Exit codes are stable: 0 success, 1 verification failure, 2 usage or
parse error, 3 capacity refusal, 4 budget exhausted with a partial
result.  JSON is the default output format and is byte-deterministic for
a fixed command line and seed; tables are a human convenience with no
stability guarantee.

The default memory budget refuses to materialize adjacency beyond 7!
vertices; raise --mem-vertices (up to the library cap of 9!) to go
larger.  Randomized commands default to seed 1729 rather than the clock.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import factorial

from . import claims
from .cayley import (
    CapacityError,
    CayleyGraph,
    MAX_MATERIALIZE_VERTICES,
    dot_export,
    find_type_a_cycle,
    find_type_b_cycle,
    girth,
    k24_free_check,
)
from .connectivity import (
    CutCertificate,
    is_rk_cut,
    kappa1_search,
    min_rk_cut_search,
    neighborhood_cut_of_cycle,
    verify_certificate,
    vertex_connectivity,
)
from .gengraph import (
    NAMED_FAMILIES,
    build_k_tree,
    build_named,
    find_triangle,
    format_edgelist,
    is_connected_gengraph,
    is_k_tree,
    parse_edgelist,
)
from .permutation import parse_permutation, rank

DEFAULT_SEED = claims.DEFAULT_SEED
DEFAULT_MEM_VERTICES = factorial(7)

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3
EXIT_BUDGET = 4


def _add_shared(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help="seed for randomized steps (default %(default)s)")
    parser.add_argument("--budget", type=float, default=600.0,
                        help="time budget per search in seconds (default %(default)s)")
    parser.add_argument("--mem-vertices", type=int, default=DEFAULT_MEM_VERTICES,
                        help="materialization ceiling in vertices (default 7!)")
    parser.add_argument("--format", choices=("json", "table", "dot"),
                        default="json", help="output format (default json)")
    parser.add_argument("--out", default=None, help="output path (default stdout)")


def _emit(text: str, out_path) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(obj, out_path) -> None:
    _emit(json.dumps(obj, indent=2, sort_keys=True) + "\n", out_path)


def _load_gen(path: str):
    with open(path, encoding="utf-8") as fh:
        return parse_edgelist(fh.read())


def _mem_cap(args) -> int:
    return min(args.mem_vertices, MAX_MATERIALIZE_VERTICES)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cayleycut",
        description="transposition-generated Cayley graphs: structure, "
                    "restricted connectivity, cut certificates",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="emit or validate a generating graph")
    group = p_gen.add_mutually_exclusive_group(required=True)
    group.add_argument("--family", choices=NAMED_FAMILIES + ("k-tree",))
    group.add_argument("--file", help="edge-list file to read back")
    p_gen.add_argument("-n", type=int, help="vertex count for --family")
    p_gen.add_argument("-k", type=int, default=None, help="clique size for k-tree")
    p_gen.add_argument("--policy", choices=("canonical", "seeded"),
                       default="canonical")
    p_gen.add_argument("--validate", default=None, metavar="k-tree:K",
                       help="recognition check; exit 1 when it fails")
    _add_shared(p_gen)

    p_an = sub.add_parser("analyze", help="structural metrics of a generating graph")
    p_an.add_argument("genfile")
    _add_shared(p_an)

    p_k = sub.add_parser("kappa", help="connectivity search")
    p_k.add_argument("genfile")
    p_k.add_argument("--level", type=int, choices=(0, 1, 2), required=True)
    p_k.add_argument("--smax", type=int, default=None,
                     help="small-side bound (default: proof bound for <= 32 "
                          "vertices, else 8)")
    p_k.add_argument("--workers", type=int, default=1)
    _add_shared(p_k)

    p_v = sub.add_parser("verify", help="run the claim harness")
    p_v.add_argument("genfile", nargs="?", default=None)
    p_v.add_argument("--suite", choices=claims.SUITE_NAMES, default=None)
    _add_shared(p_v)

    p_c = sub.add_parser("cut", help="construct or replay a cut certificate")
    p_c.add_argument("genfile")
    p_c.add_argument("--type", choices=("A", "B"), default=None)
    p_c.add_argument("--base", default=None, help="base permutation (text form)")
    p_c.add_argument("--replay", default=None, help="certificate JSON to re-verify")
    _add_shared(p_c)
    return parser


# ---------------------------------------------------------------------------
# subcommands


def _cmd_gen(args) -> int:
    if args.family:
        if args.n is None:
            print("gen: -n is required with --family", file=sys.stderr)
            return EXIT_USAGE
        if args.family == "k-tree":
            if args.k is None:
                print("gen: -k is required with --family k-tree", file=sys.stderr)
                return EXIT_USAGE
            gen, _ = build_k_tree(args.n, args.k, args.policy, args.seed)
        else:
            gen = build_named(args.family, args.n)
    else:
        gen = _load_gen(args.file)

    if args.validate:
        spec = args.validate
        if not spec.startswith("k-tree:"):
            print(f"gen: unsupported validation {spec!r}", file=sys.stderr)
            return EXIT_USAGE
        k = int(spec.split(":", 1)[1])
        ok, detail = is_k_tree(gen, k)
        _emit_json({"validate": spec, "ok": ok,
                    "witness": detail if ok else None,
                    "reason": None if ok else detail}, args.out)
        return EXIT_OK if ok else EXIT_VERIFY_FAIL

    if args.format == "json":
        _emit_json({"n": gen.n, "m": gen.m,
                    "edges": [list(e) for e in gen.edges]}, args.out)
    elif args.format == "dot":
        lines = ["graph gen {"]
        lines += [f"  {i} -- {j};" for i, j in gen.edges]
        lines.append("}")
        _emit("\n".join(lines) + "\n", args.out)
    else:
        _emit(format_edgelist(gen), args.out)
    return EXIT_OK


def _cmd_analyze(args) -> int:
    gen = _load_gen(args.genfile)
    graph = CayleyGraph(gen)
    if args.format == "dot":
        _emit(dot_export(graph), args.out)
        return EXIT_OK
    ktree = {}
    for k in range(1, gen.n):
        ok, _ = is_k_tree(gen, k)
        ktree[str(k)] = ok
    info = {
        "n": gen.n,
        "m": gen.m,
        "has_triangle": find_triangle(gen) is not None,
        "connected": is_connected_gengraph(gen),
        "is_k_tree": ktree,
        "cayley": {"vertices": graph.vertex_count, "degree": graph.degree},
    }
    cap = _mem_cap(args)
    if graph.vertex_count <= cap:
        graph.materialize(cap)
        info["cayley"]["girth"] = girth(graph)
        from .cayley import bipartite_parity_check, degree_regularity_check

        info["cayley"]["bipartite"] = bipartite_parity_check(graph)
        info["cayley"]["regular"] = degree_regularity_check(graph)
        if graph.vertex_count <= factorial(5):
            info["cayley"]["k24_free"] = k24_free_check(graph).free
        else:
            result = k24_free_check(graph, samples=100000, seed=args.seed)
            info["cayley"]["k24_free"] = result.free
            info["cayley"]["k24_free_mode"] = f"sampled:100000:seed{args.seed}"
    else:
        for field in ("girth", "bipartite", "regular", "k24_free"):
            info["cayley"][field] = "skipped"
        if graph.vertex_count > MAX_MATERIALIZE_VERTICES:
            print(f"analyze: {graph.vertex_count} vertices exceed the library "
                  f"cap of {MAX_MATERIALIZE_VERTICES}", file=sys.stderr)
            return EXIT_CAPACITY
    _emit_json(info, args.out)
    return EXIT_OK


def _cmd_kappa(args) -> int:
    gen = _load_gen(args.genfile)
    graph = CayleyGraph(gen)
    cap = _mem_cap(args)
    adj = graph.adjacency(cap)
    if args.level == 0:
        value = vertex_connectivity(adj)
        _emit_json({"k": 0, "kappa": value, "certification": "max-flow"}, args.out)
        return EXIT_OK
    s_max = args.smax
    if s_max is None and len(adj) > 32:
        s_max = 8
    if args.level == 1:
        report = kappa1_search(adj, s_max=s_max, workers=args.workers,
                               budget_seconds=args.budget)
    else:
        report = min_rk_cut_search(adj, 2, s_max=s_max, workers=args.workers,
                                   budget_seconds=args.budget)
    _emit_json(report.as_dict(), args.out)
    return EXIT_BUDGET if report.certification == "partial" else EXIT_OK


def _cmd_verify(args) -> int:
    if args.suite:
        report = claims.run_suite(args.suite, seed=args.seed, budget=args.budget)
    elif args.genfile:
        gen = _load_gen(args.genfile)
        report = claims.single_instance_report(gen, seed=args.seed,
                                               budget=args.budget)
    else:
        print("verify: need a genfile or --suite", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "table":
        _emit(claims.traceability_table(report), args.out)
    else:
        _emit_json(report, args.out)
    return EXIT_OK if report["summary"]["fail"] == 0 else EXIT_VERIFY_FAIL


def _cmd_cut(args) -> int:
    gen = _load_gen(args.genfile)
    graph = CayleyGraph(gen)
    cap = _mem_cap(args)
    adj = graph.adjacency(cap)

    if args.replay:
        with open(args.replay, encoding="utf-8") as fh:
            cert = CutCertificate.from_dict(json.load(fh))
        ok, reason = verify_certificate(adj, cert)
        _emit_json({"replay": args.replay, "ok": ok, "reason": reason}, args.out)
        return EXIT_OK if ok else EXIT_VERIFY_FAIL

    if args.type is None:
        print("cut: need --type A|B or --replay", file=sys.stderr)
        return EXIT_USAGE
    base = 0 if args.base is None else rank(parse_permutation(args.base))
    if args.type == "B":
        tri = find_triangle(gen)
        if tri is None:
            print("cut: type B needs a triangle in the generating graph",
                  file=sys.stderr)
            return EXIT_USAGE
        cycle = find_type_b_cycle(graph, base, set(tri))
    else:
        pair = _first_disjoint_pair(gen)
        if pair is None:
            print("cut: type A needs two disjoint generator edges",
                  file=sys.stderr)
            return EXIT_USAGE
        cycle = find_type_a_cycle(graph, base, pair[0], pair[1])
    cert = neighborhood_cut_of_cycle(adj, cycle)
    ok, reason, witness = is_rk_cut(adj, cert.cut_f, 2)
    payload = cert.as_dict()
    payload["cycle_kind"] = cycle.kind
    payload["verified"] = ok
    if not ok:
        payload["reason"] = f"{reason}" + (f" at {witness}" if witness is not None else "")
    _emit_json(payload, args.out)
    return EXIT_OK if ok else EXIT_VERIFY_FAIL


def _first_disjoint_pair(gen):
    import itertools

    for e1, e2 in itertools.combinations(gen.edges, 2):
        if not set(e1) & set(e2):
            return e1, e2
    return None


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    handlers = {
        "gen": _cmd_gen,
        "analyze": _cmd_analyze,
        "kappa": _cmd_kappa,
        "verify": _cmd_verify,
        "cut": _cmd_cut,
    }
    try:
        return handlers[args.command](args)
    except CapacityError as exc:
        print(f"{args.command}: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (ValueError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"{args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
