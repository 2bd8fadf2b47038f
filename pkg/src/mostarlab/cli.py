"""Command-line front end.

    mostarlab compute [FILE]            Mo and per-edge profile of graph6 lines
    mostarlab construct SPEC            build a family member, print graph6 + invariants
    mostarlab bounds --n N --k K        evaluate the closed-form bounds
    mostarlab enumerate --n N [...]     class sizes or exact extremal values
    mostarlab verify [--claims ...]     run the claim harness and write a report

Exit status: 0 on success (refuted claims included), 2 on bad parameters,
1 on I/O failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bounds import cyclomatic_bound, max_bound, min_bound
from .enumerate import GraphClassFilter, check_order, enumerate_class, enumerate_connected, extremal_search
from .errors import EmptyClass, MostarLabError
from .families import FamilySpec
from .graph import bridges, cyclomatic_number, decode_graph6, encode_graph6, is_connected
from .mostar import contribution_profile, mostar_index
from .verify import VerifyConfig, parse_claims, run_all

EXIT_OK, EXIT_IO, EXIT_USAGE = 0, 1, 2


def _emit(args, record: dict, text: str) -> None:
    if args.format == "machine":
        print(json.dumps(record, sort_keys=True))
    else:
        print(text)


def cmd_compute(args) -> int:
    try:
        stream = open(args.input) if args.input and args.input != "-" else sys.stdin
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    ok = failed = 0
    with stream:
        for lineno, raw in enumerate(stream, 1):
            line = raw.strip()
            if not line:
                continue
            try:
                g = decode_graph6(line)
                if not is_connected(g):
                    raise MostarLabError("graph is not connected")
                profile = contribution_profile(g)
            except MostarLabError as exc:
                failed += 1
                _emit(args, {"line": lineno, "graph6": line, "error": str(exc)},
                      f"{line}\terror: {exc}")
                continue
            ok += 1
            mo = mostar_index(g)
            record = {
                "line": lineno, "graph6": line, "n": g.n, "m": g.m, "mo": mo,
                "profile": [{"edge": list(c.edge), "n_u": c.n_u, "n_v": c.n_v,
                             "equidistant": c.equidistant, "imbalance": c.imbalance} for c in profile],
            }
            parts = " ".join(f"{c.edge.u}-{c.edge.v}:{c.n_u}/{c.n_v}/{c.equidistant}" for c in profile)
            _emit(args, record, f"{line}\tMo={mo}\t{parts}")
    return EXIT_OK if ok or not failed else EXIT_USAGE


def cmd_construct(args) -> int:
    if args.spec:
        spec = FamilySpec.parse(args.spec)
    else:
        if not args.family or args.n is None:
            raise ValueError("give a spec like family=path,n=4 or --family NAME --n N")
        spec = FamilySpec.parse(f"family={args.family},n={args.n}"
                                + (f",k={args.k}" if args.k is not None else "")
                                + (f",mu={args.mu}" if args.mu is not None else ""))
    g = spec.build()
    summary = {"family": spec.family, "graph6": encode_graph6(g), "n": g.n, "m": g.m,
               "k": len(bridges(g)), "mu": cyclomatic_number(g), "mo": mostar_index(g)}
    text = (f"{summary['graph6']}\n"
            f"n={g.n} m={g.m} k={summary['k']} mu={summary['mu']} Mo={summary['mo']}")
    _emit(args, summary, text)
    return EXIT_OK


def cmd_bounds(args) -> int:
    record = {"n": args.n, "k": args.k, "max_bound": max_bound(args.n, args.k),
              "min_bound": min_bound(args.n, args.k)}
    if args.mu is not None:
        record["mu"] = args.mu
        record["cyclomatic_bound"] = cyclomatic_bound(args.n, args.k, args.mu)
    text = " ".join(f"{k}={v}" for k, v in record.items())
    _emit(args, record, text)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    check_order(args.n)
    if args.objective is None:
        if args.k is None and args.mu is None:
            count = enumerate_connected(args.n, workers=args.workers)
        else:
            count = enumerate_class(GraphClassFilter(args.n, args.k, args.mu), workers=args.workers)
        _emit(args, {"n": args.n, "k": args.k, "mu": args.mu, "labeled_graphs": count},
              f"n={args.n} k={args.k} mu={args.mu} labeled_graphs={count}")
        return EXIT_OK
    flt = GraphClassFilter(args.n, args.k, args.mu)
    try:
        res = extremal_search(flt, args.objective, workers=args.workers)
    except EmptyClass:
        _emit(args, {"n": args.n, "k": args.k, "mu": args.mu, "objective": args.objective.upper(),
                     "status": "EMPTY"}, f"n={args.n} k={args.k} mu={args.mu} EMPTY")
        return EXIT_OK
    record = {"n": args.n, "k": args.k, "mu": args.mu, "objective": res.objective, "value": res.value,
              "witnesses": list(res.witnesses), "class_size_labeled": res.class_size_labeled}
    text = (f"{res.objective} Mo={res.value} over {res.class_size_labeled} labeled graphs\n"
            + "\n".join(res.witnesses))
    _emit(args, record, text)
    return EXIT_OK


def cmd_verify(args) -> int:
    config = VerifyConfig.with_max_n(args.max_n, claims=parse_claims(args.claims), workers=args.workers)
    check_order(args.max_n)
    report = run_all(config)
    body = report.to_json() if args.format == "machine" else report.to_table()
    if args.out:
        try:
            with open(args.out, "w") as fh:
                fh.write(body)
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_IO
    else:
        sys.stdout.write(body)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mostarlab", description="Mostar index laboratory")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, default_format="table"):
        p.add_argument("--format", choices=("machine", "table"), default=default_format)
        return p

    p = common(sub.add_parser("compute", help="Mo and contribution profile of graph6 lines"))
    p.add_argument("input", nargs="?", help="file of graph6 lines (default: stdin)")
    p.set_defaults(func=cmd_compute)

    p = common(sub.add_parser("construct", help="build a named family member"))
    p.add_argument("spec", nargs="?", help="family=NAME,n=N[,k=K][,mu=MU]")
    p.add_argument("--family")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--mu", type=int)
    p.set_defaults(func=cmd_construct)

    p = common(sub.add_parser("bounds", help="evaluate the closed-form bounds"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mu", type=int)
    p.set_defaults(func=cmd_bounds)

    p = common(sub.add_parser("enumerate", help="class sizes and extremal values"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--mu", type=int)
    p.add_argument("--objective", choices=("max", "min"))
    p.add_argument("--workers", type=int)
    p.set_defaults(func=cmd_enumerate)

    p = common(sub.add_parser("verify", help="run the claim verification harness"))
    p.add_argument("--claims", default="all", help="comma list such as L6,T1 or 'all'")
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--out")
    p.add_argument("--workers", type=int)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (MostarLabError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
