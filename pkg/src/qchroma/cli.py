"""Command line: enumerate, series, realize, foata, stats, verify."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .colorings import (
    alpha_G,
    coinv,
    coinv_set,
    des,
    des_G,
    format_word,
    inv,
    inv_set,
    inverse,
    maj_comp,
    parse_permutation,
    tilde_des_G,
    tilde_inv_G,
)
from .compositions import enumerate_compositions, format_comp
from .foata import certificate, phi_foata_inv
from .forests import check_spanning, enumerate_isf, format_forest, parse_forest, phi, wt
from .graphs import (
    NotInterval,
    SimpleGraph,
    as_interval,
    enumerate_dyck,
    enumerate_interval,
    interval_realization,
    is_dyck,
    is_interval,
    parse_graph,
)
from .series import KINDS, build
from .verify import CLAIMS, iter_sweep, load_defaults, parse_range, select_graphs, summarize

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _graph(text: str) -> SimpleGraph:
    try:
        return parse_graph(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _perm(text: str, n: int) -> tuple[int, ...]:
    try:
        sigma = parse_permutation(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if len(sigma) != n:
        raise UsageError(f"permutation {text!r} has length {len(sigma)}, graph has {n} vertices")
    return sigma


def _emit(args, payload, text_lines: Sequence[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def _pairs(s) -> list[list[int]]:
    return [list(p) for p in sorted(s)]


def _set_text(s) -> str:
    return "{" + ",".join(str(x) for x in sorted(s)) + "}"


# --- subcommands ----------------------------------------------------------------

def cmd_enumerate(args) -> int:
    if args.kind in ("interval", "dyck"):
        gen = enumerate_interval if args.kind == "interval" else enumerate_dyck
        items = [g.key() for g in gen(args.n)]
    elif args.kind == "compositions":
        items = [format_comp(a) for a in enumerate_compositions(args.n)]
    else:
        if args.graph is None:
            raise UsageError("--kind forests needs --graph")
        g = _graph(args.graph)
        items = [format_forest(forest) for forest in enumerate_isf(g)]
    if args.count:
        _emit(args, {"kind": args.kind, "count": len(items)}, [str(len(items))])
    else:
        _emit(args, {"kind": args.kind, "count": len(items), "items": items}, items)
    return EXIT_OK


def cmd_series(args) -> int:
    g = _graph(args.graph)
    forest = None
    if args.kind == "forest":
        if args.forest is None:
            raise UsageError("--kind forest needs --forest")
        try:
            forest = parse_forest(args.forest, g.n)
            check_spanning(g, forest)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    try:
        elem = build(args.kind, g, forest, args.route)
    except NotInterval as exc:
        raise UsageError(str(exc)) from None
    elem = elem.to(args.basis)
    _emit(args, elem.to_json(), [str(elem)])
    return EXIT_OK


def cmd_realize(args) -> int:
    g = _graph(args.graph)
    try:
        ig = as_interval(g)
    except NotInterval as exc:
        raise UsageError(str(exc)) from None
    intervals = interval_realization(ig)
    payload = {
        "graph": ig.key(),
        "intervals": [[str(a), str(b)] for a, b in intervals],
    }
    lines = [f"{v}: [{a}, {b}]" for v, (a, b) in enumerate(intervals, start=1)]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_foata(args) -> int:
    g = _graph(args.graph)
    if not is_interval(g):
        print("warning: the statistic identity is only claimed for interval graphs", file=sys.stderr)
    sigma = _perm(args.perm, g.n)
    if args.inverse:
        pre = phi_foata_inv(g, sigma)
        _emit(args, {"graph": g.key(), "perm": list(sigma), "preimage": list(pre)}, [format_word(pre)])
        return EXIT_OK
    cert = certificate(g, sigma)
    payload = {
        "graph": g.key(),
        "perm": list(sigma),
        "image": list(cert["image"]),
        "inv": cert["inv"],
        "tilde_inv": cert["tilde_inv"],
        "maj_comp": cert["maj_comp"],
        "holds": cert["holds"],
    }
    lines = [
        format_word(cert["image"]),
        f"inv = {cert['inv']} = {cert['tilde_inv']} + {cert['maj_comp']}"
        if cert["holds"]
        else f"inv = {cert['inv']} != {cert['tilde_inv']} + {cert['maj_comp']}",
    ]
    _emit(args, payload, lines)
    return EXIT_OK if cert["holds"] or not is_interval(g) else EXIT_FAIL


def cmd_stats(args) -> int:
    g = _graph(args.graph)
    sigma = _perm(args.perm, g.n)
    forest = phi(g, sigma)
    stats = {
        "inv": inv(g, sigma),
        "coinv": coinv(g, sigma),
        "Inv": _pairs(inv_set(g, sigma)),
        "CoInv": _pairs(coinv_set(g, sigma)),
        "Des": sorted(des(sigma)),
        "Des_G": sorted(des_G(g, sigma)),
        "Des_G_inverse": sorted(des_G(g, inverse(sigma))),
        "tilde_Des": sorted(tilde_des_G(g, sigma)),
        "tilde_inv": tilde_inv_G(g, sigma),
        "maj_comp": maj_comp(g, sigma),
        "alpha_G": format_comp(alpha_G(g, sigma)),
        "phi": format_forest(forest),
        "wt": wt(g, forest),
    }
    lines = []
    for key, value in stats.items():
        if isinstance(value, list) and value and isinstance(value[0], list):
            value = "{" + ",".join(f"({a},{b})" for a, b in value) + "}"
        elif isinstance(value, list):
            value = _set_text(value)
        lines.append(f"{key}: {value}")
    _emit(args, {"graph": g.key(), "perm": list(sigma), **stats}, lines)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.list:
        for cid, claim in CLAIMS.items():
            print(f"{cid:24s} {claim.kind:10s} {claim.family:9s} {claim.summary}")
        return EXIT_OK
    try:
        defaults = load_defaults(args.config)
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot read config: {exc}") from None
    claim_ids = list(CLAIMS) if args.claim == "all" else [args.claim]
    for cid in claim_ids:
        if cid not in CLAIMS:
            raise UsageError(f"unknown claim {cid!r}; see --list")
    graph_filter = None
    if args.filter == "dyck":
        graph_filter = is_dyck
    elif args.filter == "non-dyck":
        graph_filter = lambda g: not is_dyck(g)  # noqa: E731
    exit_code = EXIT_OK
    report = []
    for cid in claim_ids:
        sizes = args.n if args.n is not None else defaults.get(cid, {}).get("n", "1..4")
        try:
            ns = parse_range(sizes)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        graphs = select_graphs(cid, ns, args.sample, args.seed, graph_filter)
        verdicts = []
        try:
            for v in iter_sweep(cid, graphs, args.jobs):
                verdicts.append(v)
                if not v.passed and args.format == "text":
                    tag = "FAIL" if v.kind == "theorem" else "COUNTEREXAMPLE"
                    print(f"{tag} {cid} {v.graph} {json.dumps(v.witness)}", flush=True)
        except (MemoryError, KeyboardInterrupt) as exc:
            print(f"sweep interrupted after {len(verdicts)} graphs: {exc!r}", file=sys.stderr)
            exit_code = EXIT_FAIL
        summary = summarize(cid, verdicts)
        if summary.fatal:
            exit_code = EXIT_FAIL
        report.append((summary, verdicts))
        if args.format == "text":
            status = "pass" if not summary.failures else ("FAIL" if summary.fatal else "counterexamples")
            print(
                f"{cid}: {summary.passed}/{summary.total} graphs pass "
                f"({summary.kind}, n={sizes}, {summary.seconds:.2f}s) {status}"
            )
    if args.format == "json":
        print(
            json.dumps(
                [
                    {"summary": s.to_json(), "verdicts": [v.to_json() for v in vs]}
                    for s, vs in report
                ],
                indent=2,
            )
        )
    return exit_code


# --- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qchroma",
        description="Chromatic and LLT quasisymmetric functions of interval graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("enumerate", help="list graphs, forests or compositions")
    p.add_argument("--kind", choices=("interval", "dyck", "forests", "compositions"), required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--graph", help="graph literal (for --kind forests)")
    p.add_argument("--count", action="store_true", help="print only the number of items")
    common(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("series", help="chromatic, LLT or forest quasisymmetric function")
    p.add_argument("--graph", required=True)
    p.add_argument("--kind", choices=KINDS, default="chrom")
    p.add_argument("--forest", help='forest literal, e.g. "[1:2<1,3<1]"')
    p.add_argument("--basis", choices=("L", "M", "Psi"), default="L")
    p.add_argument("--route", choices=("perm", "monomial"), default="perm")
    common(p)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("realize", help="intervals whose overlap graph is the given graph")
    p.add_argument("--graph", required=True)
    common(p)
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("foata", help="Foata-type bijection and its statistic certificate")
    p.add_argument("--graph", required=True)
    p.add_argument("--perm", required=True)
    p.add_argument("--inverse", action="store_true")
    common(p)
    p.set_defaults(func=cmd_foata)

    p = sub.add_parser("stats", help="all statistics of a permutation on a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--perm", required=True)
    common(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("verify", help="sweep a claim over graphs")
    p.add_argument("--claim", default="all")
    p.add_argument("--n", help='sizes, e.g. "3..6" or "5"; defaults come from the config')
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--sample", type=int, default=None, help="random graphs per n")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--filter", choices=("all", "dyck", "non-dyck"), default="all")
    p.add_argument("--config", help="JSON file with per-claim defaults")
    p.add_argument("--list", action="store_true", help="list registered claims")
    common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "n", None) is None and args.command == "enumerate" and args.kind != "forests":
        parser.error("--n is required for this kind")
    if getattr(args, "n", None) is not None and args.command == "enumerate" and args.n < 1:
        parser.error("--n must be positive")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"qchroma: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
