"""Command line: hgl scenario|run|fit|gb|list."""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from fractions import Fraction

from ..growth import FitError, LengthSequence, NoFit, fit_quasipolynomial
from ..groebner import buchberger
from ..ring import RingError
from .dsl import ScenarioError, parse_scenario
from .runner import (
    BUILTINS,
    InfiniteLengthError,
    RunReport,
    _jsonable,
    run_builtin,
    run_scenario,
)


def characteristic_warning(p, fit):
    """Message when a positive characteristic is small against the fitted data, else None."""
    if not p or fit is None or isinstance(fit, NoFit) or fit.degree is None:
        return None
    bad = math.factorial(fit.degree) % p == 0 or any(
        Fraction(c).denominator % p == 0 for poly in fit.polynomials for c in poly)
    if bad:
        return (f"warning: characteristic {p} divides a denominator of the fitted "
                f"coefficients or {fit.degree}!; lengths may differ from characteristic 0")
    return None


def _emit(rep, args, out):
    if args.format == "json":
        out.write(rep.to_json(timing=args.timing))
    else:
        out.write(rep.to_csv())


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def cmd_scenario(args, out):
    rep = run_builtin(args.name, args.max_period, args.workers)
    _emit(rep, args, out)
    return 0


def cmd_run(args, out):
    spec = parse_scenario(_read(args.file))
    if args.max_period:
        spec.max_period = args.max_period
    rep = run_scenario(spec, args.name or args.file, args.workers)
    msg = characteristic_warning(spec.characteristic, rep.fit)
    if msg:
        print(msg, file=sys.stderr)
    _emit(rep, args, out)
    return 0


def read_sequence_csv(text):
    """Rows ``n,length``; a header and ``#`` comments are skipped. n must be consecutive."""
    ns, vals = [], []
    for row in csv.reader(line for line in text.splitlines()
                          if line.strip() and not line.lstrip().startswith("#")):
        if not row or row[0].strip() == "n":
            continue
        if len(row) < 2:
            raise FitError(f"bad row {row!r}: expected n,length")
        try:
            ns.append(int(row[0]))
            vals.append(int(row[1]))
        except ValueError:
            raise FitError(f"bad row {row!r}: expected integers") from None
    if not ns:
        raise FitError("no data rows")
    if ns != list(range(ns[0], ns[0] + len(ns))):
        raise FitError("n must be consecutive and increasing")
    return LengthSequence(ns[0], vals, "csv")


def cmd_fit(args, out):
    seq = read_sequence_csv(_read(args.csv))
    fit = fit_quasipolynomial(seq, args.max_period or 6, args.max_degree)
    rep = RunReport("fit", seq.provenance, seq, fit)
    _emit(rep, args, out)
    return 0


def cmd_gb(args, out):
    spec = parse_scenario(_read(args.file), require_functor=False)
    ring = spec.build_ring()
    if not spec.ideals:
        raise ScenarioError("no ideal declared", 1, 1)
    result = {}
    for name, gens in spec.ideals.items():
        gb = buchberger([ring(g) for g in gens], ring)
        result[name] = [str(f) for f in gb.polynomials()]
    if args.format == "json":
        out.write(json.dumps(_jsonable(result), sort_keys=True, indent=2) + "\n")
    else:
        for name, polys in result.items():
            out.write(f"{name}:\n")
            for f in polys:
                out.write(f"  {f}\n")
    return 0


def cmd_list(args, out):
    for name in BUILTINS:
        out.write(name + "\n")
    return 0


def build_parser():
    ap = argparse.ArgumentParser(prog="hgl", description="Length growth of Ext and Tor")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--max-period", type=int, default=None)
        p.add_argument("--timing", action="store_true", help="include timing in JSON")
        p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("scenario", help="run a built-in scenario")
    p.add_argument("name", choices=BUILTINS)
    common(p)
    p.set_defaults(func=cmd_scenario)

    p = sub.add_parser("run", help="run a scenario file")
    p.add_argument("file")
    p.add_argument("--name", default=None)
    common(p)
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("fit", help="fit an n,length CSV sequence")
    p.add_argument("csv")
    p.add_argument("--max-degree", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("gb", help="print reduced Groebner bases of the declared ideals")
    p.add_argument("file")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_gb)

    p = sub.add_parser("list", help="list built-in scenarios")
    p.set_defaults(func=cmd_list)
    return ap


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (ScenarioError, FitError, RingError, InfiniteLengthError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
