"""Command-line entry point: ``balgroups <subcommand> ...``.

CSV and JSON outputs are deterministic; text output is for people and may change.
Exit codes: 0 ok, 1 verify failure, 2 invalid input, 3 decider disagreement.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import balanced as bal
from .census import census_csv, census_json, census_scan
from .parallel import SHARDS_ENV, default_shards
from .rank import rank_Ed, rank_stats, stats_csv

METHODS = {"def": "definition", "char": "characters", "fast": "fast"}

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_DISAGREE = 0, 1, 2, 3


class InputError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _emit(args, text: str) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _witness(v: bal.BalancedVerdict):
    if v.witness is None:
        return None
    if v.method == "definition":
        return sorted(v.witness)
    return list(v.witness.exponents)


def balanced_report(d: int, gens: list[int], methods: list[str]) -> dict:
    verdicts = [bal.subgroup_verdict(d, gens, m) for m in methods]
    H = verdicts[0].subgroup
    return {
        "d": d,
        "generators": list(gens),
        "subgroup_order": len(H),
        "verdicts": [{"method": v.method, "balanced": v.balanced, "witness": _witness(v)} for v in verdicts],
        "agree": len({v.balanced for v in verdicts}) == 1,
    }


def cmd_balanced(args) -> int:
    if args.d < 3:
        raise InputError(f"--d must be at least 3, got {args.d}")
    if args.h and args.p is not None:
        raise InputError("give either --h or --p, not both")
    gens = args.h or ([args.p] if args.p is not None else None)
    if not gens:
        raise InputError("give generators with --h or --p")
    bad = [g for g in gens if math.gcd(g, args.d) != 1]
    if bad:
        raise InputError(f"generators {bad} are not units mod {args.d}")
    methods = list(METHODS.values()) if args.method == "all" else [METHODS[args.method]]
    rep = balanced_report(args.d, gens, methods)
    if args.format == "json":
        _emit(args, json.dumps(rep, sort_keys=True, indent=1) + "\n")
    elif args.format == "csv":
        lines = ["d,generators,method,balanced"]
        g = " ".join(map(str, gens))
        lines += [f"{args.d},{g},{v['method']},{int(v['balanced'])}" for v in rep["verdicts"]]
        _emit(args, "\n".join(lines) + "\n")
    else:
        out = [f"H = <{', '.join(map(str, gens))}> mod {args.d}, order {rep['subgroup_order']}"]
        for v in rep["verdicts"]:
            word = "balanced" if v["balanced"] else "not balanced"
            line = f"  {v['method']:<11} {word}"
            if v["witness"] is not None:
                kind = "coset" if v["method"] == "definition" else "odd character exponents"
                line += f"  (witness {kind}: {v['witness']})"
            out.append(line)
        if not rep["agree"]:
            out.append("DISAGREEMENT between deciders")
        _emit(args, "\n".join(out) + "\n")
    if not rep["agree"]:
        print("DISAGREEMENT between deciders", file=sys.stderr)
        return EXIT_DISAGREE
    return EXIT_OK


def cmd_order2_scan(args) -> int:
    if args.d_max < 3:
        raise InputError(f"--d-max must be at least 3, got {args.d_max}")
    pairs = bal.order2_scan(args.d_max, shards=args.shards)
    if args.format == "json":
        _emit(args, json.dumps({"d_max": args.d_max, "pairs": [list(p) for p in pairs]}, indent=1) + "\n")
    elif args.format == "csv":
        _emit(args, "d,h\n" + "".join(f"{d},{h}\n" for d, h in pairs))
    else:
        body = "\n".join(f"  <{h}> mod {d}" for d, h in pairs) or "  (none)"
        _emit(args, f"balanced order-2 subgroups other than <-1> and <d/2+1>, d <= {args.d_max}:\n{body}\n")
    return EXIT_OK


def cmd_census(args) -> int:
    if abs(args.p) <= 1:
        raise InputError(f"|p| must exceed 1, got {args.p}")
    if args.x_max < 3:
        raise InputError(f"--x-max must be at least 3, got {args.x_max}")
    records = args.records
    if args.format == "csv" and records == "none":
        records = "members"
    table, recs = census_scan(args.p, args.x_max, args.checkpoints, shards=args.shards, records=records)
    if args.format == "json":
        _emit(args, census_json(table, recs if records != "none" else None))
    elif args.format == "csv":
        _emit(args, census_csv(recs))
    else:
        out = [f"census for p = {args.p}, x <= {args.x_max}"]
        out.append(f"{'x':>10} {'B_p':>8} {'B_p0':>8} {'B_p1':>8} {'B_p*':>8} {'B_p0 loglog/x':>14} {'B_p*/B_p1':>10}")
        for row in table.rows():
            out.append(
                f"{row['x']:>10} {row['Bp']:>8} {row['Bp0']:>8} {row['Bp1']:>8} {row['Bpstar']:>8}"
                f" {str(row['Bp0_norm']):>14} {str(row['ratio_star_over_B1']):>10}"
            )
        _emit(args, "\n".join(out) + "\n")
    return EXIT_OK


def cmd_rank(args) -> int:
    try:
        rep = rank_Ed(args.q, args.d, method=METHODS.get(args.method, args.method))
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if args.format == "json":
        _emit(args, rep.to_json())
    elif args.format == "csv":
        lines = ["e,balanced,phi,l,contribution"]
        lines += [f"{r.e},{int(r.balanced)},{r.phi},{r.l},{r.contribution}" for r in rep.rows]
        lines.append(f"# rank,{rep.rank}")
        _emit(args, "\n".join(lines) + "\n")
    else:
        out = [f"E_{rep.d} over F_{rep.q}(u): rank {rep.rank}"]
        for r in rep.rows:
            if r.balanced:
                out.append(f"  e = {r.e}: phi/l = {r.phi}/{r.l} = {r.contribution}")
        _emit(args, "\n".join(out) + "\n")
    return EXIT_OK


def cmd_stats(args) -> int:
    try:
        stats = rank_stats(args.q, args.x_max, shards=args.shards)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if args.format == "json":
        _emit(args, json.dumps(stats, sort_keys=True, indent=1) + "\n")
    elif args.format == "csv":
        _emit(args, stats_csv(stats))
    else:
        _emit(
            args,
            f"q = {stats['q']}, d <= {stats['x_max']}: average rank {stats['average']},"
            f" max {stats['max_rank']} at d = {stats['argmax']},"
            f" contribution of d with -1 in <p>: {stats['b1_rank_sum']} of {stats['rank_sum']}\n",
        )
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import run_checks

    failed = 0
    results = []
    for res in run_checks(args.tier):
        failed += not res.passed
        results.append(res)
        if args.format == "text":
            print(res.line(), flush=True)
    if args.format == "json":
        payload = [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results]
        _emit(args, json.dumps({"tier": args.tier, "results": payload}, indent=1) + "\n")
    elif args.format == "csv":
        _emit(args, "name,passed\n" + "".join(f"{r.name},{int(r.passed)}\n" for r in results))
    return EXIT_VERIFY if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="balgroups", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="subcommand", required=True)

    def common(sp, shards=False):
        sp.add_argument("--format", choices=("text", "csv", "json"), default="text")
        sp.add_argument("--output", "-o", help="write to this file instead of stdout")
        if shards:
            sp.add_argument(
                "--shards", type=_positive, default=None, help=f"worker shards (default ${SHARDS_ENV} or 1)"
            )

    sp = sub.add_parser("balanced", help="decide balancedness of one subgroup")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--h", type=int, nargs="+", help="generators")
    sp.add_argument("--p", type=int, help="single generator (may be negative)")
    sp.add_argument("--method", choices=("def", "char", "fast", "all"), default="fast")
    common(sp)
    sp.set_defaults(func=cmd_balanced)

    sp = sub.add_parser("order2-scan", help="balanced order-2 subgroups beyond the two standard ones")
    sp.add_argument("--d-max", type=int, required=True)
    common(sp, shards=True)
    sp.set_defaults(func=cmd_order2_scan)

    sp = sub.add_parser("census", help="counts of B_p, B_p0, B_p1, B_p* up to x")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--x-max", type=int, required=True)
    sp.add_argument("--checkpoints", type=_int_list, default=None)
    sp.add_argument("--records", choices=("none", "members", "all"), default="none")
    common(sp, shards=True)
    sp.set_defaults(func=cmd_census)

    sp = sub.add_parser("rank", help="rank of E_d over F_q(u)")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--method", choices=("def", "fast"), default="fast")
    common(sp)
    sp.set_defaults(func=cmd_rank)

    sp = sub.add_parser("stats", help="rank statistics for d <= x")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--x-max", type=int, required=True)
    common(sp, shards=True)
    sp.set_defaults(func=cmd_stats)

    sp = sub.add_parser("verify", help="run the oracle-equivalence suites")
    sp.add_argument("--tier", choices=("quick", "full"), default="quick")
    common(sp)
    sp.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "shards", 0) is None:
        args.shards = default_shards()
    try:
        return args.func(args)
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
