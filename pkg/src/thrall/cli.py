"""Command-line surface: expansion, witnesses, bijection tracing, verification.

Exit codes: 0 success, 1 verification mismatch, 2 parse/usage error,
3 unsolved index class.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .shapes import (
    SkewShape,
    enumerate_partitions,
    format_partition,
    parse_partition,
    parse_skew,
    size,
)
from .tableaux import (
    Tableau,
    enumerate_lr,
    enumerate_syt,
    format_tableau,
    parse_tableau,
    tableau_to_json,
    weight as tableau_weight,
)
from .domino import enumerate_ydt, render_ascii, spin, to_json as domino_to_json
from .vanleeuwen import phi0_trace, psi, omega, vartheta, split_star_components
from .jdt import rectify
from . import subsets, symfunc

OK, MISMATCH, PARSE_ERROR, UNSOLVED = 0, 1, 2, 3


def _chain_json(diagram) -> dict:
    return {
        "arrows": [{"from": list(a), "to": list(b)} for a, b in diagram.arrows],
        "chains": [
            {
                "open": ch.open,
                "dominoes": [
                    {"cells": [list(c) for c in d.cells], "label": d.label}
                    for d in ch.dominoes
                ],
            }
            for ch in diagram.chains
        ],
    }


def cmd_expand(args) -> int:
    lam = parse_partition(args.lam)
    oracle = tableau = None
    if args.method in ("oracle", "both"):
        oracle = symfunc.higher_lie_character(lam)
    if args.method in ("tableau", "both"):
        tableau = subsets.expansion_from_tableaux(lam)
    result = tableau if tableau is not None else oracle
    if args.method == "both" and oracle != tableau:
        print("mismatch between tableau counts and the oracle:")
        for mu in enumerate_partitions(size(lam)):
            a = symfunc.schur_coefficient(oracle, mu)
            b = symfunc.schur_coefficient(tableau, mu)
            if a != b:
                print(f"  mu={format_partition(mu)}: oracle={a} tableau={b}")
        return MISMATCH
    if args.json:
        print(json.dumps(symfunc.expansion_to_json(result), indent=2))
    else:
        print(symfunc.format_expansion(result))
    return OK


def cmd_thrall(args) -> int:
    lam = parse_partition(args.lam)
    mu = parse_partition(args.mu)
    witnesses = subsets.thrall_subset(lam, mu)
    oracle = symfunc.schur_coefficient(symfunc.higher_lie_character(lam), mu)
    if args.json:
        report = subsets.ThrallReport(
            lam, mu, oracle, len(witnesses), tuple(witnesses), oracle == len(witnesses)
        )
        print(json.dumps(report.to_json(), indent=2))
    else:
        print(
            f"lambda={format_partition(lam)} mu={format_partition(mu)} "
            f"oracle={oracle} count={len(witnesses)} "
            f"matched={str(oracle == len(witnesses)).lower()}"
        )
        for w in witnesses:
            print(format_tableau(w))
    return OK if oracle == len(witnesses) else MISMATCH


def cmd_trace_xi(args) -> int:
    t = parse_tableau(args.tableau)
    log: list[str] | None = [] if args.slides else None
    u, s = vartheta(t)
    stages = [
        {
            "stage": "vartheta",
            "state": {"U": tableau_to_json(u), "S": tableau_to_json(s)},
        }
    ]
    d_lr = psi(u, s, log)
    stage = {"stage": "psi", "state": tableau_to_json(d_lr)}
    if log is not None:
        stage["switch_log"] = list(log)
    stages.append(stage)
    m = omega(d_lr)
    _, lower, _ = split_star_components(m)
    stages.append(
        {
            "stage": "omega",
            "state": tableau_to_json(m),
            "lower_component": tableau_to_json(lower),
        }
    )
    trace = phi0_trace(m)
    stages.append({"stage": "d", "state": domino_to_json(trace[0][0])})
    for i, (dom, diagram) in enumerate(trace[1:], start=1):
        stages.append(
            {
                "stage": f"theta[{i}]",
                "state": domino_to_json(dom),
                "step": _chain_json(diagram),
            }
        )
    final = trace[-1][0]
    stages.append(
        {
            "stage": "result",
            "state": {
                "U": tableau_to_json(u),
                "D": domino_to_json(final),
                "spin": str(spin(final)),
                "weight": list(final.weight()),
            },
        }
    )
    print(json.dumps(stages, indent=2))
    if args.ascii:
        for dom, _ in trace:
            print(render_ascii(dom), file=sys.stderr)
            print(file=sys.stderr)
    return OK


def cmd_verify(args) -> int:
    nmax = args.nmax
    if nmax is None:
        nmax = int(os.environ.get("THRALL_NMAX", "6"))
    any_mismatch = False
    for n in range(1, nmax + 1):
        for lam in enumerate_partitions(n):
            if not subsets.solved_class(lam):
                oracle = symfunc.higher_lie_character(lam)
                print(f"lambda={format_partition(lam)}  no tableau formula known")
                for mu in enumerate_partitions(n):
                    c = symfunc.schur_coefficient(oracle, mu)
                    bound = len(subsets.syt_lambda(lam, mu))
                    if c or bound:
                        print(
                            f"  mu={format_partition(mu)}: oracle={c} "
                            f"block-congruence count={bound}"
                        )
                continue
            reports = subsets.verify(lam)
            bad = [r for r in reports if not r.matched]
            status = "ok" if not bad else "MISMATCH"
            print(
                f"lambda={format_partition(lam)}  shapes={len(reports)}  "
                f"matched={len(reports) - len(bad)}  {status}"
            )
            for r in bad:
                any_mismatch = True
                print(
                    f"  mu={format_partition(r.mu)}: oracle={r.oracle} "
                    f"count={r.tableau_count}"
                )
    return MISMATCH if any_mismatch else OK


def cmd_enumerate(args) -> int:
    if args.kind == "syt":
        shape = parse_skew(args.shape)
        objs = enumerate_syt(shape)
        return _emit_tableaux(objs, args.json)
    if args.kind == "lr":
        if args.weight is None:
            raise ValueError("--weight is required for kind=lr")
        shape = parse_skew(args.shape)
        objs = enumerate_lr(shape, parse_partition(args.weight))
        return _emit_tableaux(objs, args.json)
    if args.kind == "ydt":
        if args.weight is None:
            raise ValueError("--weight is required for kind=ydt")
        shape = parse_partition(args.shape)
        ydts = enumerate_ydt(shape, parse_partition(args.weight))
        if args.json:
            print(json.dumps([domino_to_json(d) for d in ydts], indent=2))
        else:
            for d in ydts:
                print(json.dumps(domino_to_json(d)))
        return OK
    raise ValueError(f"unknown kind {args.kind!r}")


def _emit_tableaux(objs: list[Tableau], as_json: bool) -> int:
    if as_json:
        print(json.dumps([tableau_to_json(t) for t in objs], indent=2))
    else:
        for t in objs:
            print(format_tableau(t))
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thrall",
        description="Schur expansions of higher Lie module characters: "
        "tableau counts against an exact symmetric-function oracle.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="Schur expansion for an index partition")
    p.add_argument("--lambda", dest="lam", required=True, help='partition, e.g. "4,2"')
    p.add_argument(
        "--method", choices=["tableau", "oracle", "both"], default="both"
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("thrall", help="refined subset witnesses for (lambda, mu)")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_thrall)

    p = sub.add_parser("trace-xi", help="staged trace of the spin bijection")
    p.add_argument(
        "--tableau", required=True, help='rows "/"-separated, e.g. "1 2 4 7 9/3 5 10/6 8"'
    )
    p.add_argument("--slides", action="store_true", help="log individual switches")
    p.add_argument("--ascii", action="store_true", help="render frames to stderr")
    p.set_defaults(func=cmd_trace_xi)

    p = sub.add_parser("verify", help="compare all solved classes against the oracle")
    p.add_argument("--nmax", type=int, default=None, help="defaults to $THRALL_NMAX or 6")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="list tableaux or domino tableaux")
    p.add_argument("--kind", choices=["syt", "lr", "ydt"], required=True)
    p.add_argument("--shape", required=True, help='partition or skew "outer/inner"')
    p.add_argument("--weight", default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return PARSE_ERROR if e.code not in (0, None) else OK
    try:
        return args.func(args)
    except subsets.UnsolvedClass as e:
        print(f"error: {e}", file=sys.stderr)
        return UNSOLVED
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return PARSE_ERROR


if __name__ == "__main__":
    sys.exit(main())
