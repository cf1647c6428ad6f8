"""``edsolve`` command line: solve, kernelize, mmm, matrix, oracle, bench.

Exit status: 0 = yes, 1 = no, 2 = usage or input error.  Reports are JSON
objects carrying ``"schema": 1``.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import oracle
from .bench import fit_growth, run_growth
from .eds import Report, solve_eds
from .eds1 import solve_eds1
from .generators import seeded_rng
from .graph import Graph, ParseError, parse_graph, parse_matrix, to_dimacs, to_edgelist
from .kernel import KernelStatus, kernel_stats, kernelize, solve_with_kernel
from .reductions import solve_matrix_domination, solve_mmm

SCHEMA = 1
YES, NO, ERROR = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _load_graph(args) -> tuple[Graph, str]:
    text = _read(args.input)
    fmt = args.format
    if fmt == "auto":
        fmt = "dimacs" if any(ln.split()[:1] == ["p"] for ln in text.splitlines()) else "edgelist"
    return parse_graph(text, fmt), fmt


def _edges_out(edges, fmt: str) -> list[list[int]]:
    # DIMACS ids are 1-based at the boundary
    shift = 1 if fmt == "dimacs" else 0
    return [[u + shift, v + shift] for u, v in sorted(edges)]


def _emit(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")


def _report(args, rep: Report, fmt: str, started: float) -> int:
    _emit({
        "schema": SCHEMA,
        "command": args.command,
        "instance": args.input,
        "algorithm": rep.algorithm,
        "k": rep.k,
        "decision": "yes" if rep.decision else "no",
        "size": rep.best_size,
        "witness": _edges_out(rep.witness.edges, fmt) if rep.witness else None,
        "stats": rep.stats.summary(trace=args.trace),
        "y": rep.y_used,
        "z": rep.z_used,
        "wall_time": round(time.perf_counter() - started, 6),
    })
    return YES if rep.decision else NO


def cmd_solve(args) -> int:
    started = time.perf_counter()
    g, fmt = _load_graph(args)
    if args.alg == "auto":
        rep = solve_with_kernel(g, args.k)
    else:
        solver = solve_eds if args.alg == "eds" else solve_eds1
        if args.kernelize_first:
            rep = solve_with_kernel(g, args.k, solver=solver)
            rep.algorithm = args.alg + "+kernel"
        else:
            rep = solver(g, args.k)
    return _report(args, rep, fmt, started)


def cmd_kernelize(args) -> int:
    started = time.perf_counter()
    g, fmt = _load_graph(args)
    r = kernelize(g, args.k)
    out = {
        "schema": SCHEMA,
        "command": "kernelize",
        "instance": args.input,
        "k": args.k,
        "k_prime": r.k_prime,
        "status": r.status.value,
        "m0": _edges_out(r.m0, fmt),
    }
    if r.status is KernelStatus.KERNEL:
        kg = r.kernel_graph
        out["kernel"] = {
            "n": kg.n,
            "edges": _edges_out(kg.edges, fmt),
            "text": to_dimacs(kg) if fmt == "dimacs" else to_edgelist(kg),
        }
        shift = 1 if fmt == "dimacs" else 0
        roles = r.roles()
        out["roles"] = {
            "original": [[a + shift, b + shift] for a, b in roles["original"]],
            "pendant": [[a + shift, b + shift] for a, b in roles["pendant"]],
            "deleted": [v + shift for v in roles["deleted"]],
        }
        out["labeled"] = [v + shift for v in sorted(r.labeled)]
        out["overloaded"] = [v + shift for v in sorted(r.overloaded)]
        out["ledger"] = kernel_stats(r).as_dict()
    out["wall_time"] = round(time.perf_counter() - started, 6)
    _emit(out)
    return NO if r.status is KernelStatus.REJECTED else YES


def cmd_mmm(args) -> int:
    started = time.perf_counter()
    g, fmt = _load_graph(args)
    mm = solve_mmm(g, args.k)
    _emit({
        "schema": SCHEMA, "command": "mmm", "instance": args.input, "k": args.k,
        "decision": "yes" if mm is not None else "no",
        "size": None if mm is None else len(mm),
        "matching": None if mm is None else _edges_out(mm, fmt),
        "wall_time": round(time.perf_counter() - started, 6),
    })
    return YES if mm is not None else NO


def cmd_matrix(args) -> int:
    started = time.perf_counter()
    mat = parse_matrix(_read(args.input))
    sel = solve_matrix_domination(mat, args.k)
    _emit({
        "schema": SCHEMA, "command": "matrix", "instance": args.input, "k": args.k,
        "decision": "yes" if sel is not None else "no",
        "size": None if sel is None else len(sel),
        "selection": None if sel is None else [list(x) for x in sorted(sel)],
        "wall_time": round(time.perf_counter() - started, 6),
    })
    return YES if sel is not None else NO


def cmd_oracle(args) -> int:
    started = time.perf_counter()
    if args.problem == "matrix":
        mat = parse_matrix(_read(args.input))
        size, sel = oracle.brute_matrix_domination(mat)
        result = [list(x) for x in sorted(sel)]
    else:
        g, fmt = _load_graph(args)
        if args.problem == "eds":
            size, sol = oracle.brute_min_eds(g)
            result = _edges_out(sol.edges, fmt)
        else:
            size, mm = oracle.brute_min_maximal_matching(g)
            result = _edges_out(mm, fmt)
    out = {
        "schema": SCHEMA, "command": "oracle", "problem": args.problem,
        "instance": args.input, "size": size, "witness": result,
        "wall_time": round(time.perf_counter() - started, 6),
    }
    if args.k is not None:
        out["k"] = args.k
        out["decision"] = "yes" if size <= args.k else "no"
    _emit(out)
    return YES if args.k is None or size <= args.k else NO


def cmd_bench(args) -> int:
    started = time.perf_counter()
    algs = ("eds", "eds1") if args.alg == "both" else (args.alg,)
    rows = run_growth(args.family, args.kmax, seeded_rng(), algs, per_k=args.per_k)
    for row in rows:
        _emit({"schema": SCHEMA, "command": "bench", **row.as_dict()})
    _emit({
        "schema": SCHEMA, "command": "bench", "family": args.family, "summary": True,
        "fit": fit_growth(rows),
        "all_within_bound": all(r.within_bound for r in rows),
        "wall_time": round(time.perf_counter() - started, 6),
    })
    return YES


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="edsolve", description="Parameterized edge dominating set toolkit")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_input(sp):
        sp.add_argument("input", nargs="?", default="-", help="instance file, '-' for stdin")
        sp.add_argument("--format", choices=("auto", "dimacs", "edgelist"), default="auto")

    sp = sub.add_parser("solve", help="decide PEDS")
    sp.add_argument("--alg", choices=("eds", "eds1", "auto"), default="auto")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--kernelize-first", action="store_true")
    sp.add_argument("--trace", action="store_true", help="dump per-node budget drops")
    graph_input(sp)
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("kernelize", help="reduce to a kernel and print the size ledger")
    sp.add_argument("--k", type=int, required=True)
    graph_input(sp)
    sp.set_defaults(func=cmd_kernelize)

    sp = sub.add_parser("mmm", help="maximal matching with at most k edges")
    sp.add_argument("--k", type=int, required=True)
    graph_input(sp)
    sp.set_defaults(func=cmd_mmm)

    sp = sub.add_parser("matrix", help="0/1 matrix domination with at most k entries")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("input", nargs="?", default="-")
    sp.set_defaults(func=cmd_matrix)

    sp = sub.add_parser("oracle", help="exhaustive ground truth")
    problems = sp.add_subparsers(dest="problem", required=True, parser_class=_Parser)
    for name in ("eds", "mmm", "matrix"):
        pp = problems.add_parser(name)
        pp.add_argument("--k", type=int, default=None)
        if name == "matrix":
            pp.add_argument("input", nargs="?", default="-")
        else:
            graph_input(pp)
        pp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("bench", help="leaf growth on forced-no instance families")
    sp.add_argument("--family", choices=("paths", "cycles", "cubic", "gnp"), required=True)
    sp.add_argument("--kmax", type=int, required=True)
    sp.add_argument("--alg", choices=("eds", "eds1", "both"), default="both")
    sp.add_argument("--per-k", type=int, default=1)
    sp.set_defaults(func=cmd_bench)
    return p


def run_cli(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "k", None) is not None and args.k < 0:
            raise UsageError("--k must be non-negative")
        return args.func(args)
    except UsageError as exc:
        print(f"edsolve: usage error: {exc}", file=sys.stderr)
        return ERROR
    except (ParseError, ValueError, OSError) as exc:
        print(f"edsolve: error: {exc}", file=sys.stderr)
        return ERROR


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
