"""Command-line front end.

Exit codes: 0 success, 1 tolerance failure (report still written), 2 input error.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
import time
from typing import List, Optional

from . import harness
from .errors import RegpairError
from .harness import EXIT_INPUT, EXIT_OK, EXIT_TOLERANCE, RunConfig, cjson

log = logging.getLogger("regpair")


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--grid", type=int, default=4096, help="samples on the circle (power of two)")
    parser.add_argument("--dim-n", type=int, default=512, help="internal Toeplitz dimension N")
    parser.add_argument("--trunc-m", type=int, default=64, help="outer truncation M")
    parser.add_argument("--methods", default="closed,integral,operator",
                        help="comma-separated subset of closed,integral,operator")
    parser.add_argument("--format", dest="fmt", choices=("json", "csv"), default="json")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--tol-analytic", type=float, default=1e-9)
    parser.add_argument("--tol-operator", type=float, default=1e-4)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="regpair", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="diagnostics on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pair", help="pair {f, g} with a loop using every method")
    p.add_argument("f")
    p.add_argument("g")
    p.add_argument("loop")
    _common(p)

    p = sub.add_parser("symbol", help="pair two circle functions given as fourier(...) literals")
    p.add_argument("p")
    p.add_argument("q")
    _common(p)

    p = sub.add_parser("tame", help="tame symbol of {f, g} at a point")
    p.add_argument("f")
    p.add_argument("g")
    p.add_argument("point", help="complex number such as 0, 2, 1+2i, or inf")
    _common(p)

    p = sub.add_parser("mahler", help="Mahler measure of a polynomial")
    p.add_argument("poly")
    _common(p)

    p = sub.add_parser("converge", help="operator determinants over a list of truncations M")
    p.add_argument("f")
    p.add_argument("g")
    p.add_argument("loop")
    p.add_argument("--m-list", default="8,16,32,64")
    _common(p)

    p = sub.add_parser("selftest", help="run every property suite")
    p.add_argument("--suite", action="append", choices=sorted(harness.SUITES),
                   help="restrict to one suite (repeatable)")
    _common(p)
    return parser


def _config(args) -> RunConfig:
    return RunConfig(
        grid=args.grid, dim_n=args.dim_n, trunc_m=args.trunc_m,
        tol_analytic=args.tol_analytic, tol_operator=args.tol_operator,
        methods=tuple(m.strip() for m in args.methods.split(",") if m.strip()),
        fmt=args.fmt, seed=args.seed,
    )


def _emit_scalar(name: str, value, fmt: str, extra: dict, out) -> None:
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        if isinstance(value, complex):
            w.writerow([f"{name}_re", f"{name}_im"])
            w.writerow([repr(value.real), repr(value.imag)])
        else:
            w.writerow([name])
            w.writerow([repr(value)])
        return
    payload = {"schema": harness.SCHEMA, **extra,
               name: cjson(value) if isinstance(value, complex) else value}
    json.dump(payload, out, indent=2)
    out.write("\n")


def run(argv: Optional[List[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(message)s")
    try:
        config = _config(args)
        if args.command in ("pair", "symbol"):
            if args.command == "pair":
                report = harness.pair(args.f, args.g, args.loop, config)
            else:
                report = harness.symbol(args.p, args.q, config)
            if config.fmt == "json":
                json.dump(report.to_dict(), out, indent=2)
                out.write("\n")
            else:
                out.write(report.to_csv())
            for name, ok in report.checks.items():
                if not ok:
                    log.warning("tolerance failure: %s = %.3e", name, report.deviations[name])
            return EXIT_OK if report.passed else EXIT_TOLERANCE

        if args.command == "tame":
            value = harness.tame(args.f, args.g, args.point)
            _emit_scalar("tame_symbol", value, config.fmt,
                         {"inputs": {"f": args.f, "g": args.g, "point": args.point}}, out)
            return EXIT_OK

        if args.command == "mahler":
            value = harness.mahler(args.poly, config.grid)
            _emit_scalar("mahler_measure", value, config.fmt, {"inputs": {"poly": args.poly}}, out)
            return EXIT_OK

        if args.command == "converge":
            m_list = [int(m) for m in args.m_list.split(",")]
            rows = harness.converge(args.f, args.g, args.loop, m_list, config)
            if config.fmt == "json":
                json.dump({"schema": harness.SCHEMA, "rows": rows}, out, indent=2)
                out.write("\n")
            else:
                w = csv.DictWriter(out, fieldnames=["M", "re", "im", "deviation"], lineterminator="\n")
                w.writeheader()
                w.writerows({k: (repr(v) if isinstance(v, float) else v) for k, v in r.items()}
                            for r in rows)
            return EXIT_OK

        if args.command == "selftest":
            t0 = time.perf_counter()
            results = harness.selftest(config, args.suite)
            for r in results:
                print(r.line(), file=out)
            passed = all(r.passed for r in results)
            print(f"{'PASS' if passed else 'FAIL'}  {sum(r.passed for r in results)}/{len(results)} "
                  f"suites in {time.perf_counter() - t0:.1f}s (seed={config.seed})", file=out)
            return EXIT_OK if passed else EXIT_TOLERANCE
    except (RegpairError, ValueError, ZeroDivisionError) as exc:
        print(f"regpair: error: {exc}", file=sys.stderr)
        if args.fmt == "json":
            error = {"type": type(exc).__name__, "message": str(exc)}
            for attr in ("offset", "expected"):
                if getattr(exc, attr, None) is not None:
                    error[attr] = getattr(exc, attr)
            json.dump({"schema": harness.SCHEMA, "command": args.command, "error": error,
                       "passed": False}, out, indent=2)
            out.write("\n")
        return EXIT_INPUT
    parser.error(f"unknown command {args.command}")
    return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
