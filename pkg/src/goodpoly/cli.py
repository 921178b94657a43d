"""Command-line surface: gamma, fibers, search, verify and the LRC demo.

Exit codes: 0 success (verify: all instances passed), 1 verify found
failures, 2 usage or parse errors, 3 precondition violations, 4 resource
guards.  Identical invocations (including --seed) produce byte-identical
output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .constructions import family_members, parse_descriptor
from .errors import FormatError, PreconditionError, ResourceLimitError
from .gf import parse_field_spec
from .goodness import goodness_report
from .lrc import (Codeword, build_code, encode, erasure_decode, local_repair,
                  min_distance_bruteforce)
from .polyring import Poly
from .suites import SUITES, run_suite, worker_count

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_PRECONDITION = 3
EXIT_GUARD = 4

SEARCH_GUARD = 10 ** 7


def _dump_json(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _csv_line(values) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="").writerow(values)
    return buf.getvalue()


def _print(line: str) -> None:
    sys.stdout.write(line + "\n")


def _require_poly(args) -> Poly:
    field = parse_field_spec(args.field)
    given = [x for x in (args.poly, args.family) if x]
    if len(given) != 1:
        raise FormatError("provide exactly one of --poly or --family")
    if args.poly:
        f = Poly.from_string(field, args.poly)
    else:
        members = list(family_members(field, args.family))
        if len(members) != 1:
            raise FormatError(
                f"family {args.family!r} has {len(members)} members; "
                "pin its parameters to select one polynomial")
        f = members[0][1]
    return f


def _report_row(rep, include_fibers: bool):
    d = rep.to_dict(include_fibers=include_fibers)
    return d


def cmd_gamma(args) -> int:
    f = _require_poly(args)
    rep = goodness_report(f, slack=args.slack)
    if args.format == "json":
        _print(_dump_json(_report_row(rep, include_fibers=False)))
    else:
        _print(_csv_line(["q", "n", "gamma", "bound", "inferred_orders",
                          "constant_field_is_base"]))
        _print(_csv_line([rep.q, rep.n, rep.gamma, rep.bound,
                          ";".join(str(o) for o in rep.inferred_orders),
                          rep.constant_field_is_base]))
    return EXIT_OK


def cmd_fibers(args) -> int:
    f = _require_poly(args)
    rep = goodness_report(f, slack=args.slack)
    if args.format == "json":
        _print(_dump_json(_report_row(rep, include_fibers=True)))
    else:
        _print(_csv_line(["c", "members"]))
        for c, members in rep.fibers:
            _print(_csv_line([c, ";".join(str(x) for x in members)]))
    return EXIT_OK


def cmd_search(args) -> int:
    field = parse_field_spec(args.field)
    given = [x for x in (args.family, args.exhaustive) if x]
    if len(given) != 1:
        raise FormatError("provide exactly one of --family or --exhaustive")
    descriptor = args.family or f"exhaustive:{args.exhaustive}"
    kind, params = parse_descriptor(descriptor)
    if kind == "exhaustive":
        try:
            dmax = int(params.get("max-degree", ""))
        except ValueError:
            raise FormatError("exhaustive sweeps need max-degree=<int>")
        if field.q ** (dmax - 1) > SEARCH_GUARD:
            raise ResourceLimitError(
                f"exhaustive sweep size q^(D-1) = {field.q ** (dmax - 1)} "
                f"exceeds the guard {SEARCH_GUARD}")
    records = []
    for label, f in family_members(field, descriptor):
        rep = goodness_report(f, slack=args.slack)
        records.append((rep.gamma, f.encoding(), label, f, rep))
    records.sort(key=lambda t: (-t[0], t[1]))
    if args.format == "csv":
        _print(_csv_line(["poly", "label", "gamma", "bound", "inferred_orders"]))
    for g, _, label, f, rep in records:
        if args.format == "json":
            _print(_dump_json({"poly": f.to_string(), "label": label,
                               "gamma": g, "bound": rep.bound,
                               "inferred_orders": list(rep.inferred_orders)}))
        else:
            _print(_csv_line([f.to_string(), label, g, rep.bound,
                              ";".join(str(o) for o in rep.inferred_orders)]))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite not in SUITES:
        raise FormatError(f"unknown suite {args.suite!r}; "
                          f"choose from {', '.join(sorted(SUITES))}")
    workers = worker_count(args.workers)
    total = 0
    failures = 0
    emit_csv = args.format == "csv"
    if emit_csv:
        _print(_csv_line(["suite", "params", "expected", "actual", "pass"]))
    for rec in run_suite(args.suite, qmax=args.qmax, trials=args.trials,
                         seed=args.seed, workers=workers):
        total += 1
        if not rec["pass"]:
            failures += 1
        if emit_csv:
            params = ";".join(f"{k}={v}" for k, v in rec["params"].items())
            _print(_csv_line([rec["suite"], params, rec["expected"],
                              rec["actual"], rec["pass"]]))
        else:
            _print(_dump_json(rec))
    summary = {"suite": args.suite, "instances": total,
               "failures": failures, "pass": failures == 0}
    _print(_dump_json(summary) if not emit_csv
           else _csv_line(["summary", args.suite, total, failures, failures == 0]))
    return EXIT_OK if failures == 0 else EXIT_FAIL


def _require_code(args):
    field = parse_field_spec(args.field)
    f = Poly.from_string(field, args.poly)
    return build_code(f, args.k, m=args.groups)


def cmd_lrc_build(args) -> int:
    code = _require_code(args)
    info = code.to_dict()
    if args.format == "json":
        _print(_dump_json(info))
    else:
        _print(_csv_line(["field", "poly", "q", "r", "k", "N", "groups"]))
        groups = "|".join(f"{g['c']}:" + ";".join(str(x) for x in g["members"])
                          for g in info["groups"])
        _print(_csv_line([info["field"], info["poly"], info["q"], info["r"],
                          info["k"], info["N"], groups]))
    return EXIT_OK


def cmd_lrc_encode(args) -> int:
    code = _require_code(args)
    try:
        message = [int(t) for t in args.msg.split(",")]
    except ValueError:
        raise FormatError(f"bad message {args.msg!r}")
    word = encode(code, message)
    _print(word.to_string())
    return EXIT_OK


def cmd_lrc_repair(args) -> int:
    code = _require_code(args)
    word = Codeword.from_string(code.field, args.word)
    erased = word.erased_positions()
    value = local_repair(code, word)
    out = {"position": erased[0], "value": value, "reads": word.reads}
    if args.format == "json":
        _print(_dump_json(out))
    else:
        _print(_csv_line(["position", "value", "reads"]))
        _print(_csv_line([out["position"], out["value"], out["reads"]]))
    return EXIT_OK


def cmd_lrc_decode(args) -> int:
    code = _require_code(args)
    word = Codeword.from_string(code.field, args.word)
    message = erasure_decode(code, word)
    if message is None:
        out = {"decoded": False, "reason": "surviving positions have rank < k"}
    else:
        out = {"decoded": True, "message": list(message)}
    if args.format == "json":
        _print(_dump_json(out))
    else:
        _print(_csv_line(["decoded", "message"]))
        _print(_csv_line([out["decoded"],
                          ";".join(str(v) for v in out.get("message", []))]))
    return EXIT_OK


def cmd_lrc_distance(args) -> int:
    code = _require_code(args)
    d = min_distance_bruteforce(code)
    optimal = code.N - code.k - (code.k + code.r - 1) // code.r + 2
    out = {"min_distance": d, "singleton_type_bound": optimal,
           "optimal": d == optimal}
    if args.format == "json":
        _print(_dump_json(out))
    else:
        _print(_csv_line(["min_distance", "singleton_type_bound", "optimal"]))
        _print(_csv_line([d, optimal, out["optimal"]]))
    return EXIT_OK


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--slack", type=float, default=8.0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="goodpoly",
        description="Fiber census of polynomials over finite fields and the "
                    "locally recoverable codes built from them.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gamma", help="count full-size fibers of a polynomial")
    p.add_argument("--field", required=True)
    p.add_argument("--poly")
    p.add_argument("--family")
    _add_common(p)
    p.set_defaults(handler=cmd_gamma)

    p = sub.add_parser("fibers", help="list the full-size fibers")
    p.add_argument("--field", required=True)
    p.add_argument("--poly")
    p.add_argument("--family")
    _add_common(p)
    p.set_defaults(handler=cmd_fibers)

    p = sub.add_parser("search", help="sweep a family or an exhaustive range")
    p.add_argument("--field", required=True)
    p.add_argument("--family")
    p.add_argument("--exhaustive", metavar="max-degree=D[,min-degree=d]")
    _add_common(p)
    p.set_defaults(handler=cmd_search)

    p = sub.add_parser("verify", help="run one exhaustive verification suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--qmax", type=int)
    p.add_argument("--trials", type=int)
    p.add_argument("--workers", type=int)
    _add_common(p)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("lrc", help="build, encode, repair, decode, audit")
    lsub = p.add_subparsers(dest="lrc_command", required=True)
    for name, handler, extra in (
            ("build", cmd_lrc_build, ()),
            ("encode", cmd_lrc_encode, ("--msg",)),
            ("repair", cmd_lrc_repair, ("--word",)),
            ("decode", cmd_lrc_decode, ("--word",)),
            ("distance", cmd_lrc_distance, ())):
        lp = lsub.add_parser(name)
        lp.add_argument("--field", required=True)
        lp.add_argument("--poly", required=True)
        lp.add_argument("--k", type=int, required=True)
        lp.add_argument("--groups", type=int)
        for flag in extra:
            lp.add_argument(flag, required=True)
        _add_common(lp)
        lp.set_defaults(handler=handler)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PreconditionError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
