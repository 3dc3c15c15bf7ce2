"""Command-line front end.

Subcommands: stats, units, solve, classify, sweep, oeis-check.  Every
subcommand accepts --json (one canonical object, keys sorted, integers as
decimal strings so 64-bit consumers never overflow) and --bound to
override the command's working bound; sweep also accepts --csv.

Exit codes: 0 success or match, 1 predicate mismatch (oeis-check, the
units --oracle self-check), 2 usage or parse errors, 3 capability errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Sequence

from .arith import SUPPORTED_BOUND
from .bfile import BFile, compare_bfile
from .classify import (
    BRUTE_FORCE_BOUND,
    SweepSpec,
    classify,
    is_carmichael,
    is_generalized_carmichael,
    is_knodel,
    parse_rule,
    sweep,
)
from .errors import CapabilityError, DomainError
from .solver import (
    SOLUTION_CAP,
    enumerate_rdu_one_solutions,
    is_rdu_one,
    solve_rdu_one,
)
from .unitgroup import ENUMERATION_BOUND, enumerate_k_units, k_unit_stats

__all__ = ["main"]


def _jsonable(value: Any) -> Any:
    """Integers become decimal strings; bools and None pass through."""
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return {"num": str(value.numerator), "den": str(value.denominator)}
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _emit_json(command: str, inputs: dict, result: dict) -> None:
    obj = {"command": command, "input": _jsonable(inputs), "result": _jsonable(result)}
    print(json.dumps(obj, sort_keys=True))


def _emit_table(rows: list[tuple[str, str]]) -> None:
    width = max(len(key) for key, _ in rows)
    for key, value in rows:
        print(f"{key.ljust(width)}  {value}")


def _bool(value: bool) -> str:
    return "true" if value else "false"


def _reject_csv(args: argparse.Namespace) -> None:
    if args.csv:
        raise DomainError("--csv is only supported for the sweep subcommand")


def _cmd_stats(args: argparse.Namespace) -> int:
    _reject_csv(args)
    bound = args.bound or SUPPORTED_BOUND
    stats = k_unit_stats(args.n, args.k, bound=bound)
    if args.json:
        _emit_json(
            "stats",
            {"n": stats.n, "k": stats.k},
            {"phi": stats.phi, "du": stats.du, "pdu": stats.pdu, "rdu": stats.rdu},
        )
    else:
        _emit_table(
            [
                ("n", str(stats.n)),
                ("k", str(stats.k)),
                ("phi", str(stats.phi)),
                ("du", str(stats.du)),
                ("pdu", f"{stats.pdu.numerator}/{stats.pdu.denominator}"),
                ("rdu", str(stats.rdu)),
            ]
        )
    return 0


def _cmd_units(args: argparse.Namespace) -> int:
    _reject_csv(args)
    bound = args.bound or ENUMERATION_BOUND
    units = enumerate_k_units(args.n, args.k, bound=bound)
    oracle_report: dict | None = None
    exit_code = 0
    if args.oracle:
        expected = k_unit_stats(args.n, args.k).du
        matched = expected == len(units)
        oracle_report = {"expected_count": expected, "matched": matched}
        if not matched:
            print(
                f"oracle mismatch: closed form expects {expected} k-units, "
                f"enumeration found {len(units)}",
                file=sys.stderr,
            )
            exit_code = 1
    if args.json:
        result: dict[str, Any] = {"count": len(units), "residues": units}
        if oracle_report is not None:
            result["oracle"] = oracle_report
        _emit_json("units", {"n": args.n, "k": args.k}, result)
    else:
        print(" ".join(str(a) for a in units))
        if oracle_report is not None and oracle_report["matched"]:
            print(f"oracle ok: count {len(units)} matches the closed form")
    return exit_code


def _cmd_solve(args: argparse.Namespace) -> int:
    _reject_csv(args)
    if args.limit is not None and not args.enumerate:
        raise DomainError("--limit requires --enumerate")
    bound = args.bound or SUPPORTED_BOUND
    cap = args.bound or SOLUTION_CAP
    sol = solve_rdu_one(args.k, bound=bound)
    solutions: list[int] | None = None
    if args.enumerate:
        solutions = enumerate_rdu_one_solutions(args.k, limit=args.limit, cap=cap, bound=bound)
    truncated = solutions is not None and len(solutions) < sol.count
    if args.json:
        result: dict[str, Any] = {
            "parity": sol.k_parity,
            "beta": sol.beta,
            "m": sol.m,
            "set_a": list(sol.set_a),
            "set_b": [[q, e] for q, e in sol.set_b],
            "n_max": sol.n_max,
            "count": sol.count,
        }
        if solutions is not None:
            result["solutions"] = solutions
            result["truncated"] = truncated
        _emit_json("solve", {"k": args.k}, result)
    else:
        rows = [
            ("k", str(sol.k)),
            ("parity", sol.k_parity),
            ("beta", str(sol.beta)),
            ("M", str(sol.m)),
            ("A", "{" + ", ".join(str(p) for p in sol.set_a) + "}"),
            ("B", "{" + ", ".join(f"{q}^{e}" for q, e in sol.set_b) + "}"),
            ("n_max", str(sol.n_max)),
            ("count", str(sol.count)),
        ]
        _emit_table(rows)
        if solutions is not None:
            print("solutions  " + " ".join(str(d) for d in solutions))
            if truncated:
                print(f"... truncated to {len(solutions)} of {sol.count}")
    return 0


def _cmd_classify(args: argparse.Namespace) -> int:
    _reject_csv(args)
    bound = args.bound or SUPPORTED_BOUND
    brute = args.bound or BRUTE_FORCE_BOUND
    if args.liars and (args.n < 3 or args.n % 2 == 0):
        raise DomainError(f"--liars requires odd n >= 3, got {args.n}")
    report = classify(
        args.n,
        liars=args.liars,
        knodel_indices=tuple(args.knodel or ()),
        gen_carmichael_ks=tuple(args.gen_carmichael or ()),
        bound=bound,
        brute_bound=brute,
    )
    if args.json:
        result: dict[str, Any] = {
            "factorization": [[p, e] for p, e in report.evidence.factors],
            "composite": report.is_composite,
            "carmichael": report.carmichael,
            "carmichael_reason": report.carmichael_reason,
            "knodel": [[i, v] for i, v in report.knodel_for],
            "gen_carmichael": [[k, v] for k, v in report.gen_carmichael_for],
        }
        if report.fermat_liar_count is not None:
            result["fermat_liars"] = report.fermat_liar_count
        _emit_json("classify", {"n": args.n}, result)
    else:
        rows = [
            ("n", str(report.n)),
            ("factorization", str(report.evidence)),
            ("composite", _bool(report.is_composite)),
        ]
        verdict = _bool(report.carmichael)
        if report.carmichael_reason is not None:
            verdict += f"  ({report.carmichael_reason})"
        rows.append(("carmichael", verdict))
        if report.fermat_liar_count is not None:
            rows.append(("fermat-liars", str(report.fermat_liar_count)))
        for i, v in report.knodel_for:
            rows.append((f"knodel:{i}", _bool(v)))
        for k, v in report.gen_carmichael_for:
            rows.append((f"gen-carmichael:{k}", _bool(v)))
        _emit_table(rows)
    return 0


def _cmd_sweep(args: argparse.Namespace) -> int:
    bound = args.bound or SUPPORTED_BOUND
    rule = parse_rule(args.rule)
    spec = SweepSpec(lo=args.lo, hi=args.hi, rule=rule)
    result = sweep(
        spec, composite_only=args.composite_only, odd_only=args.odd_only, bound=bound
    )
    summary = f"hits={len(result.hits)} skipped={len(result.skipped)}"
    if args.json:
        _emit_json(
            "sweep",
            {
                "from": args.lo,
                "to": args.hi,
                "rule": rule.text,
                "composite_only": args.composite_only,
                "odd_only": args.odd_only,
            },
            {
                "hits": list(result.hits),
                "skipped": list(result.skipped),
                "hit_count": len(result.hits),
                "skip_count": len(result.skipped),
            },
        )
    elif args.csv:
        print("n,exponent")
        for n in result.hits:
            print(f"{n},{rule(n)}")
        print(summary, file=sys.stderr)
    else:
        for n in result.hits:
            print(n)
        print(summary)
    return 0


_PREDICATE_HELP = "carmichael | knodel:I | gen-carmichael:K | rdu-one:K"


def _predicate(name: str, brute_bound: int):
    base, _, raw = name.partition(":")
    if base == "carmichael":
        if raw:
            raise DomainError("the carmichael predicate takes no parameter")
        return is_carmichael
    try:
        parameter = int(raw)
    except ValueError:
        raise DomainError(f"predicate {name!r} needs an integer parameter") from None
    if base == "knodel":
        return lambda n: is_knodel(n, parameter)
    if base == "gen-carmichael":
        return lambda n: is_generalized_carmichael(n, parameter, bound=brute_bound)
    if base == "rdu-one":
        return lambda n: is_rdu_one(n, parameter)
    raise DomainError(f"unknown predicate {name!r}; expected {_PREDICATE_HELP}")


def _cmd_oeis_check(args: argparse.Namespace) -> int:
    _reject_csv(args)
    brute = args.bound or BRUTE_FORCE_BOUND
    bfile = BFile.parse_path(args.bfile)
    predicate = _predicate(args.predicate, brute)
    report = compare_bfile(bfile, args.predicate, predicate, args.limit)
    if args.json:
        _emit_json(
            "oeis-check",
            {"bfile": args.bfile, "predicate": args.predicate, "limit": args.limit},
            {
                "compared": report.compared,
                "limit": report.limit,
                "missing": list(report.missing),
                "extra": list(report.extra),
                "matched": report.matched,
            },
        )
    else:
        _emit_table(
            [
                ("bfile", args.bfile),
                ("predicate", args.predicate),
                ("limit", str(report.limit)),
                ("compared", str(report.compared)),
                ("missing", " ".join(map(str, report.missing)) or "none"),
                ("extra", " ".join(map(str, report.extra)) or "none"),
                ("verdict", "match" if report.matched else "MISMATCH"),
            ]
        )
    return 0 if report.matched else 1


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one canonical JSON object")
    common.add_argument("--csv", action="store_true", help="CSV output (sweep only)")
    common.add_argument(
        "--bound",
        type=int,
        default=None,
        metavar="N",
        help="override the command's working bound (factorization, enumeration, or brute force)",
    )

    parser = argparse.ArgumentParser(
        prog="kunits",
        description="k-units modulo n: statistics, the rdu_k(n)=1 solver, and classifiers",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", parents=[common], help="phi, du, pdu and rdu for (n, k)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(handler=_cmd_stats)

    p = sub.add_parser("units", parents=[common], help="enumerate the k-units modulo n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument(
        "--oracle",
        action="store_true",
        help="cross-check the enumerated count against the closed form; exit 1 on mismatch",
    )
    p.set_defaults(handler=_cmd_units)

    p = sub.add_parser("solve", parents=[common], help="solve rdu_k(n) = 1 for a fixed k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--enumerate", action="store_true", help="also list the solutions")
    p.add_argument("--limit", type=int, default=None, help="truncate the solution list")
    p.set_defaults(handler=_cmd_solve)

    p = sub.add_parser("classify", parents=[common], help="classifier verdicts for one n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--carmichael",
        action="store_true",
        help="accepted for symmetry; the Carmichael verdict is always reported",
    )
    p.add_argument("--liars", action="store_true", help="count Fermat liars (odd n only)")
    p.add_argument(
        "--knodel", type=int, action="append", metavar="I", help="test i-Knodel membership"
    )
    p.add_argument(
        "--gen-carmichael",
        type=int,
        action="append",
        metavar="K",
        help="test generalized-Carmichael membership for shift K",
    )
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("sweep", parents=[common], help="scan a range for rdu_f(n)(n) = 1")
    p.add_argument("--from", dest="lo", type=int, required=True)
    p.add_argument("--to", dest="hi", type=int, required=True)
    p.add_argument(
        "--rule", required=True, help="exponent rule: const:K | n | n-I | n+I | A*n+B | poly:c0,c1,..."
    )
    p.add_argument("--composite-only", action="store_true")
    p.add_argument("--odd-only", action="store_true")
    p.set_defaults(handler=_cmd_sweep)

    p = sub.add_parser(
        "oeis-check", parents=[common], help="compare a local OEIS b-file against a predicate"
    )
    p.add_argument("bfile", help="path to the b-file")
    p.add_argument("--predicate", required=True, help=_PREDICATE_HELP)
    p.add_argument("--limit", type=int, default=None, help="compare values up to this limit")
    p.set_defaults(handler=_cmd_oeis_check)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else int(exc.code)
    try:
        return args.handler(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapabilityError as exc:
        print(f"capability error: {exc}", file=sys.stderr)
        return 3
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
