"""Command-line front end.

Subcommands:
  ramsey   compute R_k(i, j) in a graph class with the full extremal list
  cocolor  compute or bound c_k(m) for a graph class
  verify   check graphs in a file for class membership and cleanliness
  tables   recompute registered values and compare
  convert  translate between graph6 and edge-list text
"""

from __future__ import annotations

import argparse
import os
import sys

from . import tables
from .cocolor import (
    CocolorParams,
    NeedsCandidatesError,
    cocolorable,
    find_witnesses,
    formula_c_oracle,
    search_c_value,
    straight_upper_bound,
)
from .defect import DefectParams, find_bounded_degree_set
from .generate import (
    LevelSet,
    RamseyResult,
    ResourceStop,
    SearchParams,
    checkpoint_path,
    read_level,
    run_ramsey,
    run_seeded,
    singleton_level,
    write_level,
)
from .graph import Graph, complement, from_graph6, to_graph6
from .recognition import GraphClass, in_class

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _graph_class(name: str) -> GraphClass:
    try:
        return GraphClass(name.lower())
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown graph class {name!r}")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--class", dest="graph_class", type=_graph_class, default=GraphClass.PERFECT,
        help="graph class: perfect, bipartite, chordal, cograph, all",
    )
    p.add_argument("-k", type=int, required=True, help="defect bound")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--time-limit", type=float, default=3600.0,
                   help="wall-clock budget in seconds (default 1 hour)")
    p.add_argument("--mem-cap", type=float, default=4.0,
                   help="approximate memory budget in GiB")


def _level_cap(mem_cap_gib: float) -> int:
    # a stored graph plus canonical key costs on the order of a kilobyte
    return max(1000, int(mem_cap_gib * (1 << 30) // 1024))


def _load_graphs(path: str) -> list[Graph]:
    graphs = []
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            raw = raw.strip()
            if not raw or raw.startswith("#"):
                continue
            try:
                graphs.append(from_graph6(raw))
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: {exc}") from exc
    return graphs


def _write_graphs(path: str, graphs: list[Graph]) -> None:
    with open(path, "w") as fh:
        for g in graphs:
            fh.write(to_graph6(g) + "\n")


def _checkpoint_dir(args) -> str | None:
    if getattr(args, "checkpoint", None):
        return args.checkpoint
    return os.environ.get("RAMSEY_CHECKPOINT_DIR")


def cmd_ramsey(args) -> int:
    try:
        defect = DefectParams(args.k, args.i, args.j)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    params = SearchParams(args.graph_class, defect)
    ckdir = _checkpoint_dir(args)

    def save(level: LevelSet) -> None:
        if ckdir:
            write_level(checkpoint_path(ckdir, params, level.order), level, params)

    seed = singleton_level()
    if args.seed:
        seed, seed_params = read_level(args.seed)
        if seed_params != params:
            print("error: seed checkpoint was written for different parameters",
                  file=sys.stderr)
            return EXIT_USAGE
    cap = _level_cap(args.mem_cap)
    name = f"R_{args.k}^{args.graph_class.value}({args.i},{args.j})"
    try:
        if args.seed or args.stop_order is not None:
            level = seed
            # checkpoints hold complete levels, so resuming keeps the
            # complete-level extension pruning available
            for level in run_seeded(
                seed, params, stop_order=args.stop_order, threads=args.threads,
                on_level=save, time_limit=args.time_limit, max_level_graphs=cap,
                complete=True if args.seed else None,
            ):
                print(f"order {level.order}: {len(level)} graphs")
                if not level.graphs:
                    print(f"{name} = {level.order}")
            if args.out and level.graphs:
                _write_graphs(args.out, list(level))
            return EXIT_OK
        result: RamseyResult = run_ramsey(
            params, threads=args.threads, time_limit=args.time_limit,
            max_level_graphs=cap, on_level=save,
        )
    except ResourceStop as exc:
        print(f"lower bound: {name} >= {exc.lower_bound}, incomplete ({exc})")
        if args.out:
            _write_graphs(args.out, list(exc.last_level))
        return EXIT_RESOURCE
    print(f"{name} = {result.value}")
    print(f"extremal: {len(result.extremal)} graphs")
    for g in result.extremal:
        print(to_graph6(g))
    if args.out:
        _write_graphs(args.out, list(result.extremal))
    return EXIT_OK


def cmd_cocolor(args) -> int:
    if args.m < 1:
        print("error: m must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    params = CocolorParams(args.graph_class, args.k, args.m)
    tag = f"c[k={args.k}][m={args.m}][class={args.graph_class.value}]"
    if args.upper_bound:
        prev = formula_c_oracle(args.graph_class, args.k, args.m - 1)
        if prev is None:
            print("error: no known value for m - 1 to bound from",
                  file=sys.stderr)
            return EXIT_USAGE
        try:
            bound = straight_upper_bound(params, prev)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        print(f"{tag} <= {bound}")
        return EXIT_OK
    closed = formula_c_oracle(args.graph_class, args.k, args.m)
    if closed is not None and not args.long_run:
        print(f"c = {closed}")
        return EXIT_OK
    limit = args.time_limit
    try:
        value, witnesses = search_c_value(params, time_limit=limit)
    except NeedsCandidatesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceStop as exc:
        print(f"{tag} >= {exc.lower_bound}, incomplete ({exc})")
        return EXIT_RESOURCE
    print(f"c = {value}")
    print(f"witnesses at {value + 1}: {len(witnesses)}")
    for g in witnesses:
        print(f"witness {to_graph6(g)}")
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        graphs = _load_graphs(args.file)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    failures = 0
    for idx, g in enumerate(graphs, 1):
        problems = []
        if not in_class(g, args.graph_class):
            problems.append(f"not in class {args.graph_class.value}")
        if args.m is not None:
            if cocolorable(g, args.k, args.m):
                problems.append(f"({args.k},{args.m})-cocolorable")
        else:
            if args.i is None or args.j is None:
                print("error: verify needs -i and -j, or -m", file=sys.stderr)
                return EXIT_USAGE
            crows = complement(g).adj
            if args.i <= g.n and find_bounded_degree_set(crows, g.n, args.k, args.i):
                problems.append(f"has a {args.k}-dense {args.i}-set")
            if args.j <= g.n and find_bounded_degree_set(g.adj, g.n, args.k, args.j):
                problems.append(f"has a {args.k}-sparse {args.j}-set")
        if problems:
            failures += 1
            print(f"graph {idx} ({to_graph6(g)}): FAIL: {'; '.join(problems)}")
        else:
            print(f"graph {idx} ({to_graph6(g)}): ok")
    print(f"{len(graphs) - failures}/{len(graphs)} graphs verified")
    return EXIT_OK if failures == 0 else EXIT_FAIL


def cmd_tables(args) -> int:
    scope = args.scope
    tiers = {"small"} if scope == "small" else {"small", "medium", "full"}
    failures = 0
    stops = 0
    for entry in tables.entries():
        if entry.tier not in tiers:
            continue
        cell = (f"{entry.graph_class.value} k={entry.k} "
                f"i={entry.i} j={entry.j}")
        if args.only and args.only not in cell:
            continue
        params = SearchParams(
            entry.graph_class, DefectParams(entry.k, entry.i, entry.j)
        )
        try:
            # desk-scale cells are attempted within the budget and stop
            # honestly rather than report a wrong value
            result = run_ramsey(params, threads=args.threads,
                                time_limit=args.time_limit,
                                max_level_graphs=_level_cap(args.mem_cap))
        except ResourceStop as exc:
            stops += 1
            print(f"STOP {cell}: reached order {exc.lower_bound - 1} "
                  f"within budget (expected value {entry.value})")
            continue
        ok = result.value == entry.value and (
            entry.count is None or len(result.extremal) == entry.count
        )
        expect_count = "-" if entry.count is None else str(entry.count)
        got = f"{result.value}({len(result.extremal)})"
        want = f"{entry.value}({expect_count})"
        if ok:
            print(f"PASS {cell}: {got}")
        else:
            failures += 1
            print(f"FAIL {cell}: got {got}, expected {want}")
    if failures:
        return EXIT_FAIL
    return EXIT_RESOURCE if stops else EXIT_OK


def cmd_convert(args) -> int:
    try:
        graphs = _load_graphs(args.file)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.to == "edges":
        for g in graphs:
            pairs = " ".join(f"{u}-{v}" for u, v in g.edges())
            print(f"n={g.n} {pairs}".rstrip())
    else:
        for g in graphs:
            print(to_graph6(g))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="defram",
        description="defective Ramsey numbers and cocoloring in graph classes",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ramsey", help="compute R_k(i, j) with extremal graphs")
    _add_common(p)
    p.add_argument("-i", type=int, required=True, help="dense set size")
    p.add_argument("-j", type=int, required=True, help="sparse set size")
    p.add_argument("--seed", help="checkpoint file to resume from")
    p.add_argument("--stop-order", type=int,
                   help="stop after generating this order")
    p.add_argument("--checkpoint", help="directory for level checkpoints")
    p.add_argument("--out", help="write the final graph list to this file")
    p.set_defaults(func=cmd_ramsey)

    p = sub.add_parser("cocolor", help="compute or bound c_k(m)")
    _add_common(p)
    p.add_argument("-m", type=int, required=True, help="number of classes")
    p.add_argument("--upper-bound", action="store_true",
                   help="print the clique-union upper bound instead")
    p.add_argument("--long-run", action="store_true",
                   help="search even when a closed form exists")
    p.set_defaults(func=cmd_cocolor)

    p = sub.add_parser("verify", help="check a graph6 file")
    _add_common(p)
    p.add_argument("file", help="graph6 file, one graph per line")
    p.add_argument("-i", type=int, help="dense set size to exclude")
    p.add_argument("-j", type=int, help="sparse set size to exclude")
    p.add_argument("-m", type=int,
                   help="check non-(k,m)-cocolorability instead")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tables", help="recompute registered values")
    p.add_argument("--scope", choices=["small", "full"], default="small")
    p.add_argument("--only", help=argparse.SUPPRESS)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--time-limit", type=float, default=3600.0)
    p.add_argument("--mem-cap", type=float, default=4.0)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("convert", help="graph6 <-> edge list")
    p.add_argument("file")
    p.add_argument("--to", choices=["edges", "graph6"], default="edges")
    p.set_defaults(func=cmd_convert)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
