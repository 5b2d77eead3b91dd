"""Command-line entry point.

Every command prints one report on stdout.  Exit status is 0 when all checks
pass, 1 when any fails, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import planepart, verify, vertex
from .kernels import BACKENDS
from .series import PowerSeries, bkp_product_series, macmahon_series

FORMATS = ("json", "csv", "text")


def _nonneg(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return n


def _positive(text: str) -> int:
    n = _nonneg(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="json")
    common.add_argument("--threads", type=_positive, default=1,
                        help="worker threads for the plane-partition scan (default 1)")
    common.add_argument("--backend", choices=["auto", *sorted(BACKENDS)], default="auto",
                        help="plane-partition scan implementation")
    common.add_argument("--timing", action="store_true",
                        help="include elapsed milliseconds in the report")

    p = argparse.ArgumentParser(prog="bkpplane", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    ser = sub.add_parser("series", help="product-formula series")
    ser_sub = ser.add_subparsers(dest="which", required=True)
    for name, helptext in (("product", "prod ((1+q^n)/(1-q^n))^n"),
                           ("macmahon", "prod (1-q^n)^-n, for reference")):
        sp = ser_sub.add_parser(name, parents=[common], help=helptext)
        sp.add_argument("--order", type=_nonneg, required=True)

    cen = sub.add_parser("census", parents=[common],
                         help="weighted count of diagonally strict plane partitions")
    cen.add_argument("--max-volume", type=_nonneg, required=True)
    cen.add_argument("--list", action="store_true", help="also list every partition")

    sp = sub.add_parser("scalar-product", parents=[common],
                        help="vertex-operator transfer DP")
    sp.add_argument("--order", type=_nonneg, required=True)

    ver = sub.add_parser("verify", help="exhaustive checks")
    ver_sub = ver.add_subparsers(dest="which", required=True)
    v = ver_sub.add_parser("lemma1", parents=[common])
    v.add_argument("--max-weight", type=_nonneg, required=True)
    v = ver_sub.add_parser("algebra", parents=[common])
    v.add_argument("--max-weight", type=_nonneg, required=True)
    v = ver_sub.add_parser("commutation", parents=[common])
    v.add_argument("--order", type=_positive, required=True)
    v = ver_sub.add_parser("path-width", parents=[common])
    v.add_argument("--max-volume", type=_nonneg, required=True)
    v = ver_sub.add_parser("all", parents=[common])
    v.add_argument("--budget", choices=sorted(verify.BUDGETS), default="small")
    return p


def _series_output(series: PowerSeries, fmt: str, report: dict) -> str:
    if fmt == "csv":
        return series.to_csv().rstrip("\n")
    if fmt == "text":
        return series.to_text()
    report["payload"] = series.to_dict()
    return json.dumps(report, ensure_ascii=False)


def _checks_output(results, fmt: str, report: dict) -> str:
    report["status"] = "pass" if all(r.passed for r in results) else "fail"
    if fmt == "json":
        report["payload"] = {"checks": [r.to_dict() for r in results]}
        return json.dumps(report, ensure_ascii=False)
    lines = []
    for r in results:
        lines.append(f"{'PASS' if r.passed else 'FAIL'} {r.name} "
                     + " ".join(f"{k}={v}" for k, v in r.details.items()))
        for cex in r.counterexamples:
            lines.extend("    " + ln for ln in str(cex).splitlines())
    if fmt == "csv":
        return "\n".join(["check,status"] + [f"{r.name},{'pass' if r.passed else 'fail'}"
                                             for r in results])
    return "\n".join(lines)


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    backend = None if args.backend == "auto" else args.backend
    command = args.command + (f" {args.which}" if getattr(args, "which", None) else "")
    params = {k.replace("_", "-"): v for k, v in sorted(vars(args).items())
              if k not in ("command", "which", "format", "timing")}
    report = {"command": command, "parameters": params, "status": "pass", "payload": None}
    t0 = time.perf_counter()

    if args.command == "series":
        fn = bkp_product_series if args.which == "product" else macmahon_series
        series = fn(args.order)
    elif args.command == "scalar-product":
        series = vertex.scalar_product_series(args.order)
    elif args.command == "census":
        series = planepart.census(args.max_volume, backend=backend, threads=args.threads)
        if args.list:
            listing = planepart.census_listing(args.max_volume)
            if args.format == "json":
                report["listing"] = listing
            else:
                rows = [f"{e['volume']}\t{e['paths']}\t{e['weight']}\t{e['heights']}"
                        for e in listing]
                print("volume\tpaths\tweight\theights", file=out)
                print("\n".join(rows), file=out)
    else:
        series = None

    if series is not None:
        if args.timing:
            report["elapsed_ms"] = round((time.perf_counter() - t0) * 1000, 3)
        print(_series_output(series, args.format, report), file=out)
        return 0

    which = args.which
    if which == "lemma1":
        results = [verify.check_lemma1(args.max_weight)]
    elif which == "algebra":
        results = [verify.check_algebra(args.max_weight)]
    elif which == "commutation":
        results = [verify.check_commutation(args.order)]
    elif which == "path-width":
        results = [verify.check_path_width(args.max_volume, backend=backend,
                                           threads=args.threads)]
    else:
        results = verify.run_all(args.budget, backend=backend, threads=args.threads)
    if args.timing:
        report["elapsed_ms"] = round((time.perf_counter() - t0) * 1000, 3)
    print(_checks_output(results, args.format, report), file=out)
    return 0 if report["status"] == "pass" else 1


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
