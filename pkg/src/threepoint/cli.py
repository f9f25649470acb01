"""Command line interface.

Subcommands:
  verify    run verification suites from a JSON config, write a JSON report
  bracket   bracket of two current-algebra elements in text syntax
  reduce    central coordinates of f dg for two ring elements
  apply     one realized mode application to a Fock state

Exit status: 0 on success (all asserted suites pass), 1 on verification
failure, 2 on malformed input or configuration.
"""

from __future__ import annotations

import argparse
import json
import sys

from .rational import parse_rational, rat_str
from .ring import parse_ring
from . import kahler
from .current import bracket, format_current, parse_current
from .fock import HeisenbergParams, format_fock, parse_fock
from .realization import Realization, RealizationConfig
from .verify import ALL_SUITES, VerifyConfig, report_to_json, run


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="threepoint",
        description="exact three-point current algebra kernel and verifier")
    sub = parser.add_subparsers(dest="command", required=True)

    pv = sub.add_parser("verify", help="run verification suites")
    pv.add_argument("--config", help="JSON config file")
    pv.add_argument("--out", help="write the JSON report here")
    pv.add_argument("--suites", help="comma separated suite subset "
                                     f"(default: all of {','.join(ALL_SUITES)})")
    pv.add_argument("--r", type=int, choices=(0, 1))
    pv.add_argument("--kappa0")
    pv.add_argument("--chi1")
    pv.add_argument("--variant", choices=("paper", "derived"))
    pv.add_argument("--window", nargs=2, type=int, metavar=("M_MIN", "M_MAX"))
    pv.add_argument("--degree-max", type=int)
    pv.add_argument("--quiet", action="store_true")

    pb = sub.add_parser("bracket", help="bracket of two elements, "
                                        "e.g. \"h1[0]\" \"e1[0]\"")
    pb.add_argument("x")
    pb.add_argument("y")

    pr = sub.add_parser("reduce", help="central coordinates of f dg")
    pr.add_argument("f")
    pr.add_argument("g")

    pa = sub.add_parser("apply", help="apply a realized current mode to a state")
    pa.add_argument("symbol", choices=("e", "f", "h", "e1", "f1", "h1"))
    pa.add_argument("mode", type=int)
    pa.add_argument("state", help="e.g. \"x[0]^2*y1[-2]*v0\"")
    pa.add_argument("--r", type=int, choices=(0, 1), default=0)
    pa.add_argument("--kappa0", default="1")
    pa.add_argument("--lam", default="1")
    pa.add_argument("--mu", default="0")
    pa.add_argument("--nu", default="1")
    pa.add_argument("--varkappa", default="1")
    return parser


def _cmd_verify(args) -> int:
    data = {}
    if args.config:
        with open(args.config, "r", encoding="ascii") as fh:
            data = json.load(fh)
    if args.suites:
        data["suites"] = [s.strip() for s in args.suites.split(",") if s.strip()]
    if args.r is not None:
        data["r"] = args.r
    if args.kappa0 is not None:
        data["kappa0"] = args.kappa0
    if args.chi1 is not None:
        data["chi1"] = args.chi1
    if args.variant is not None:
        data["heis_variant"] = args.variant
    if args.window is not None:
        data["window"] = list(args.window)
    if args.degree_max is not None:
        data["degree_max"] = args.degree_max
    cfg = VerifyConfig.from_json_dict(data)
    report = run(cfg)
    blob = report_to_json(report)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(blob)
    if not args.quiet:
        summary = report["summary"]
        for suite, counts in summary["per_suite"].items():
            tag = "asserted" if counts["asserted"] else "report-only"
            print(f"{suite}: {counts['passed']} passed, "
                  f"{counts['failed']} failed ({tag})")
        print(f"total: {summary['passed']} passed, {summary['failed']} failed, "
              f"{summary['asserted_failed']} asserted failures")
    return 0 if report["summary"]["asserted_failed"] == 0 else 1


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "bracket":
            x = parse_current(args.x)
            y = parse_current(args.y)
            print(format_current(bracket(x, y)))
            return 0
        if args.command == "reduce":
            pair = kahler.pairing(parse_ring(args.f), parse_ring(args.g))
            print(str(pair))
            return 0
        if args.command == "apply":
            params = HeisenbergParams(
                lam=parse_rational(args.lam), mu=parse_rational(args.mu),
                nu=parse_rational(args.nu), vk=parse_rational(args.varkappa),
                kappa0=parse_rational(args.kappa0), chi1=0)
            real = Realization(RealizationConfig(r=args.r, heis=params))
            vec = parse_fock(args.state)
            print(format_fock(real.apply_mode(args.symbol, args.mode, vec)))
            return 0
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    parser.error("no command")
    return 2


if __name__ == "__main__":
    sys.exit(main())
