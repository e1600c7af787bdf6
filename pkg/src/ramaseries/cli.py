"""Command line front end: list, verify and run catalog identities.

Exit codes: 0 when every MUST_PASS entry is contained, 1 when at least one
is not, 2 for usage or configuration errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .catalog import default_precision, list_identities, run_suite, verify
from .catalog.records import Status
from .errors import DomainError, UnknownIdentity
from .numeric import PREC_ENV_VAR, to_decimal

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _param_pairs(items) -> dict:
    out = {}
    for item in items or ():
        name, sep, value = item.partition("=")
        if not sep or not name.strip():
            raise UsageError(f"--param expects name=value, got {item!r}")
        out[name.strip()] = value.strip()
    return out


def _width(text):
    if text is None:
        return None
    try:
        w = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"--width expects a number such as 1e-30, got {text!r}") from None
    if w <= 0:
        raise UsageError("--width must be positive")
    return w


def _precision(bits):
    try:
        return bits if bits is not None else default_precision()
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_list(args) -> int:
    records = list_identities(args.filter)
    if args.json:
        json.dump([r.summary() for r in records], sys.stdout, indent=2)
        sys.stdout.write("\n")
        return EXIT_OK
    for r in records:
        params = ",".join(s.name for s in r.schema) or "-"
        print(f"{r.id:<20} {r.status.value:<10} params={params:<8} n={len(r.defaults):<3} {r.lhs_text}")
    print(f"{len(records)} identities")
    return EXIT_OK


def cmd_verify(args) -> int:
    res = verify(args.id, _param_pairs(args.param), precision=_precision(args.prec),
                 target_width=_width(args.width), max_terms=args.max_terms)
    digits = max(40, res.precision_bits // 3)
    params = ", ".join(f"{k}={v}" for k, v in res.params.items()) or "-"
    print(f"id         {res.id}")
    print(f"params     {params}")
    print(f"status     {res.status.value}")
    print(f"lo         {to_decimal(res.bracket.lo, digits)}")
    print(f"hi         {to_decimal(res.bracket.hi, digits)}")
    print(f"rhs        {to_decimal(res.rhs_value, digits)}")
    print(f"contained  {res.contained}")
    print(f"residual   {to_decimal(res.residual, 12)}")
    print(f"terms      {res.terms_used}{'' if res.converged else ' (max terms reached before target width)'}")
    print(f"elapsed    {res.elapsed_seconds:.3f}s")
    if not res.contained and res.status is Status.MUST_PASS:
        return EXIT_FAIL
    return EXIT_OK


def cmd_run(args) -> int:
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    report = run_suite(args.filter, precision=_precision(args.prec), jobs=args.jobs)
    for e in report.entries:
        params = ",".join(f"{k}={v}" for k, v in e["params"].items())
        if "error" in e:
            verdict = "ERROR"
        elif e["contained"]:
            verdict = "ok"
        else:
            verdict = "FAIL" if e["status"] == Status.MUST_PASS.value else "AS_PRINTED residual " + e["residual"][:14]
        detail = e.get("error") or f"{e['terms_used']} terms {e['elapsed_seconds']:.2f}s"
        print(f"{e['id']:<20} {params:<22} {verdict:<10} {detail}")
    s = report.summary
    print(f"total {s['total']}  passed {s['passed']}  failed {s['failed']}  "
          f"as-printed discrepancies {s['as_printed_discrepancies']}")
    if args.report:
        try:
            with open(args.report, "w", encoding="utf-8") as fh:
                json.dump(report.to_json(), fh, indent=2)
                fh.write("\n")
        except OSError as exc:
            print(f"error: cannot write report: {exc}", file=sys.stderr)
            return EXIT_USAGE
    return report.exit_code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ramaseries",
                                     description="Certified verification of series identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list", help="list catalog identities")
    p.add_argument("--filter", help="glob on identity ids, e.g. 'COR1.*'")
    p.add_argument("--json", action="store_true", help="print record summaries as JSON")
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("verify", help="verify one identity")
    p.add_argument("--id", required=True)
    p.add_argument("--param", action="append", metavar="NAME=VALUE",
                   help="parameter value; repeat for several (z=1/sqrt(5), x=2*pi/3, p=3)")
    p.add_argument("--prec", type=int, help=f"working precision in bits (default ${PREC_ENV_VAR} or 256)")
    p.add_argument("--width", help="target bracket width (default per identity)")
    p.add_argument("--max-terms", type=int, default=2_000_000)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("run", help="verify the default instantiations")
    p.add_argument("--filter", help="glob on identity ids")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--report", help="write a JSON report to this path")
    p.add_argument("--prec", type=int, help="working precision in bits")
    p.set_defaults(func=cmd_run)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, UnknownIdentity, DomainError) as exc:
        msg = f"unknown identity {exc.args[0]!r}" if isinstance(exc, UnknownIdentity) else str(exc)
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:  # precision outside the supported range
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
