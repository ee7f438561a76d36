"""Command-line entry point.

Reports go to stdout as JSON (``verify-k43``, ``conjecture``, ``status``) or
CSV (``sweep``); ``gen`` writes the graph text format.  Anything meant for a
human goes to stderr.

Exit codes: 0 success, 1 failed verification, 2 bad arguments, 3 an
enumeration cap prevented a definite answer.
"""

from __future__ import annotations

import argparse
import json
import logging
import platform
import sys

import numpy as np

from hamspan import __version__
from hamspan.experiments import (
    DEFAULT_SEED,
    EXACT_LIMIT,
    PSpec,
    TrialConfig,
    default_threads,
    predicate_names,
    sweep,
)
from hamspan.graph import (
    RNG_ALGORITHM,
    GraphError,
    format_graph,
    gen_gnp,
    gen_k_hat,
    gen_square_cycle,
    read_graph,
    structural_predicates,
)
from hamspan.hamilton import DEFAULT_CAP, UNKNOWN, hamilton_generated_status
from hamspan.verify import test_conjecture5, verify_proposition4

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_UNKNOWN = 0, 1, 2, 3


def environment() -> dict:
    return {
        "hamspan": __version__,
        "python": platform.python_version(),
        "numpy": np.__version__,
        "rng": RNG_ALGORITHM,
    }


def _emit_json(obj) -> None:
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def cmd_verify_k43(args) -> int:
    report = verify_proposition4()
    ok = report.ok
    _emit_json({
        "config": {"command": "verify-k43"},
        "environment": environment(),
        "passed": ok,
        "seven_circuits_valid": report.seven_circuits_valid,
        "matrix_matches_paper": report.matrix_matches_paper,
        "rank": report.rank,
        "cycle_dim": report.cycle_dim,
        "total_hamilton_circuits": report.total_hamilton_circuits,
        "quotient_dim": report.quotient_dim,
        "full_span": report.full_span,
        "edge_labels": report.edge_labels,
        "matrix": ["".join(map(str, row)) for row in report.matrix],
    })
    return EXIT_OK if ok else EXIT_FAILED


def cmd_conjecture(args) -> int:
    res = test_conjecture5(args.s, cap=args.cap, count_all=not args.no_count)
    out = {"config": {"command": "conjecture", "s": args.s, "cap": args.cap},
           "environment": environment()}
    out.update(res.to_dict())
    _emit_json(out)
    return EXIT_UNKNOWN if res.status.kind == UNKNOWN else EXIT_OK


def cmd_status(args) -> int:
    g = read_graph(args.input)
    st = structural_predicates(g)
    status = hamilton_generated_status(g, cap=args.cap)
    _emit_json({
        "config": {"command": "status", "input": args.input, "cap": args.cap},
        "environment": environment(),
        "n": g.n,
        "m": g.m,
        "structure": {
            "min_degree": st.min_degree,
            "components": st.components,
            "is_connected": st.is_connected,
            "is_forest": st.is_forest,
            "is_circuit": st.is_circuit,
            "is_bipartite": st.is_bipartite,
            "coloring": st.coloring,
            "odd_cycle": st.odd_cycle,
            "has_triangle": st.has_triangle,
            "degree2_vertices": st.degree2_vertices,
        },
        "status": status.to_dict(),
    })
    return EXIT_UNKNOWN if status.kind == UNKNOWN else EXIT_OK


def _p_specs(args) -> list[PSpec]:
    if args.formula:
        specs = []
        for item in args.formula:
            k, c = item.split(",")
            specs.append(PSpec(k=float(k), c=float(c)))
        return specs
    if args.eps:
        return [PSpec(eps=e) for e in args.eps]
    return [PSpec(p=p) for p in args.p]


def cmd_sweep(args) -> int:
    configs = [
        TrialConfig(n=n, p_spec=spec, trials=args.trials, master_seed=args.seed,
                    property=args.property, cap=args.cap, exact_max_n=args.exact_max_n)
        for n in args.n
        for spec in _p_specs(args)
    ]
    threads = args.threads or default_threads()
    print(json.dumps({"command": "sweep", "threads": threads, "environment": environment(),
                      "configs": [c.resolved() for c in configs]}), file=sys.stderr)
    if args.out and args.out != "-":
        with open(args.out, "w", newline="") as fh:
            sweep(configs, fh, threads=threads)
    else:
        sweep(configs, sys.stdout, threads=threads)
    return EXIT_OK


def cmd_gen(args) -> int:
    fam = args.family
    if fam == "khat":
        if args.s is None:
            raise GraphError("--family khat needs --s")
        g = gen_k_hat(args.s)
        cfg = {"family": fam, "s": args.s}
    elif fam == "csq":
        if args.n is None:
            raise GraphError("--family csq needs --n")
        g = gen_square_cycle(args.n)
        cfg = {"family": fam, "n": args.n}
    else:
        if args.n is None or args.p is None:
            raise GraphError("--family gnp needs --n and --p")
        g = gen_gnp(args.n, args.p, args.seed)
        cfg = {"family": fam, "n": args.n, "p": args.p, "seed": args.seed, "rng": RNG_ALGORITHM}
    print(json.dumps({"command": "gen", **cfg, "output": args.output}), file=sys.stderr)
    text = format_graph(g)
    if args.output and args.output != "-":
        with open(args.output, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hamspan", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-k43", help="reproduce the seven-circuit rank-7 certificate")
    p.set_defaults(func=cmd_verify_k43)

    p = sub.add_parser("conjecture", help="Hamilton-generation status of K^{s^,s-1}")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--no-count", action="store_true", help="skip the full circuit count")
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("status", help="structural and Hamilton-generation report for a graph file")
    p.add_argument("--input", required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_status)

    p = sub.add_parser("sweep", help="Monte Carlo property estimates as CSV")
    p.add_argument("--n", type=int, nargs="+", required=True)
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--p", type=float, nargs="+")
    grp.add_argument("--formula", nargs="+", metavar="K,C")
    grp.add_argument("--eps", type=float, nargs="+")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--property", default="min_degree>=1",
                   help="one of: " + ", ".join(predicate_names()))
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--exact-max-n", type=int, default=EXACT_LIMIT)
    p.add_argument("--threads", type=int, default=None,
                   help="worker processes (default: $HAMSPAN_THREADS or CPU count)")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("gen", help="write a generated graph in the text format")
    p.add_argument("--family", choices=["khat", "csq", "gnp"], required=True)
    p.add_argument("--s", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--output", default="-")
    p.set_defaults(func=cmd_gen)
    return ap


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, stream=sys.stderr, format="%(levelname)s %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, ValueError, KeyError) as exc:
        print(f"hamspan: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"hamspan: {exc}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
