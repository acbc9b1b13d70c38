"""Command-line front end.

Exit codes: 0 ok, 1 disagreement found by ``verify``, 2 invalid arguments,
3 resource guard refusal, 4 closed form unavailable.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import __version__
from . import fatpoints
from .cache import resolve_cache_path
from .grading import Params, gens_count
from .hilbert import (
    CONJECTURED,
    METHODS,
    default_method,
    hf_table,
    hf_value,
    numerator_from_hf,
    series_closed_form,
)
from .oracle import DEFAULT_MAX_BLOCK_ENTRIES, ResourceGuardError, fat_oracle
from .sweep import GuardRefusal, SweepSpec, reproducer, run_sweep, summarize

EXIT_OK = 0
EXIT_DISAGREE = 1
EXIT_USAGE = 2
EXIT_GUARD = 3
EXIT_NO_CLOSED_FORM = 4

CSV_HEADER = ("n", "k", "d", "degree", "method", "value")

POLY_SYNTAX = """\
generator polynomials are printed one per line as terms c*x0^a0*x1^a1*...
joined by ' + ' / ' - '; a coefficient of 1 and exponents 0 are omitted and
x1^1 is written x1.  Example: x1^4 - 2*x0^2*x1^2 + x0^4"""


class UsageError(Exception):
    pass


def _params_dict(p: Params) -> dict:
    return {"n": p.n, "k": p.k, "d": p.d}


def _csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow(r)
    return buf.getvalue().rstrip("\n")


def _params(args) -> Params:
    try:
        return Params(args.n, args.k, args.d)
    except ValueError as exc:
        raise UsageError(str(exc))


def hf_report(p: Params, method: str, degree=None, max_block_entries=DEFAULT_MAX_BLOCK_ENTRIES) -> dict:
    if degree is not None:
        if degree < 0:
            raise UsageError("degree must be nonnegative")
        if method == "oracle":
            from .oracle import hf_oracle
            values = [hf_oracle(p, degree, max_block_entries=max_block_entries)]
        else:
            values = [hf_value(p, degree, method)]
        degrees = [degree]
    else:
        opts = {"max_block_entries": max_block_entries} if method == "oracle" else {}
        values = list(hf_table(p, method, **opts).values)
        degrees = list(range(len(values)))
    report = {
        "params": _params_dict(p),
        "method": method,
        "values": [str(v) for v in values],
        "conjectural": method == CONJECTURED and p.k > 2,
    }
    if degree is not None:
        report["degree"] = degree
    report["_degrees"] = degrees
    return report


def _emit_values(report: dict, fmt: str) -> str:
    degrees = report.pop("_degrees")
    p = report["params"]
    if fmt == "json":
        return json.dumps(report)
    if fmt == "csv":
        return _csv((p["n"], p["k"], p["d"], i, report["method"], v)
                    for i, v in zip(degrees, report["values"]))
    return ",".join(report["values"])


def cmd_hf(args) -> int:
    p = _params(args)
    method = args.method or default_method(p)
    if method == "proved-k2" and p.k != 2:
        raise UsageError("method proved-k2 requires k = 2")
    if method == "series":
        try:
            series_closed_form(p)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_NO_CLOSED_FORM
    report = hf_report(p, method, args.degree, args.max_block_entries)
    if report["conjectural"] and args.format == "text":
        print("# conjectural: general-k weight-count formula", file=sys.stderr)
    print(_emit_values(report, args.format))
    return EXIT_OK


def cmd_series(args) -> int:
    p = _params(args)
    if args.from_hf:
        method = args.method or default_method(p)
        opts = {"max_block_entries": args.max_block_entries} if method == "oracle" else {}
        hs = numerator_from_hf(hf_table(p, method, **opts))
        tag = f"from-hf:{method}"
    else:
        try:
            hs = series_closed_form(p)
        except ValueError as exc:
            print(f"error: {exc} (use --from-hf)", file=sys.stderr)
            return EXIT_NO_CLOSED_FORM
        tag = "series"
    if args.format == "json":
        print(json.dumps({"params": _params_dict(p), "method": tag,
                          "numerator": [str(c) for c in hs.numerator],
                          "denom_exponent": hs.denom_exponent}))
    elif args.format == "csv":
        print(_csv((p.n, p.k, p.d, i, "series-numerator", c) for i, c in enumerate(hs.numerator)))
    else:
        print("numerator: " + ",".join(str(c) for c in hs.numerator))
        print(f"denominator: (1-t)^{hs.denom_exponent}")
    return EXIT_OK


def cmd_betti(args) -> int:
    p = _params(args)
    if p.n < 1:
        raise UsageError("betti needs n >= 1")
    table = fatpoints.betti(p.n, p.k, p.d)
    if args.format == "json":
        print(json.dumps({"params": _params_dict(p),
                          "betti": [{"i": i, "shift": s, "value": str(b)} for i, s, b in table.entries]}))
    elif args.format == "csv":
        print(_csv((p.n, p.k, p.d, s, "betti", b) for _, s, b in table.entries))
    else:
        print("beta=[" + ",".join(map(str, table.values)) + "] shifts=["
              + ",".join(map(str, table.shifts)) + "]")
    return EXIT_OK


def cmd_gens(args) -> int:
    p = _params(args)
    count = gens_count(p)
    if args.format == "json":
        print(json.dumps({"params": _params_dict(p), "gens": str(count)}))
    elif args.format == "csv":
        print(_csv([(p.n, p.k, p.d, p.D, "gens", count)]))
    else:
        print(count)
    return EXIT_OK


def cmd_fatpoints(args) -> int:
    p = _params(args)
    n, k, d = p.n, p.k, p.d
    if args.gens:
        if n < 1:
            raise UsageError("generators need n >= 1")
        polys = [g.to_text() for g in fatpoints.fat_generators(n, k, d)]
        if args.format == "json":
            print(json.dumps({"params": _params_dict(p), "generators": polys}))
        elif args.format == "csv":
            print(_csv((n, k, d, k * d, "generator", g) for g in polys))
        else:
            print("\n".join(polys))
        return EXIT_OK
    method = "oracle" if args.oracle else "series"
    if args.degree is not None:
        if args.degree < 0:
            raise UsageError("degree must be nonnegative")
        degrees = [args.degree]
    else:
        degrees = list(range(fatpoints.regularity_bound(n, k, d) + 1))
    if args.oracle:
        values = [fat_oracle(n, k, d, m, max_block_entries=args.max_block_entries) for m in degrees]
    else:
        table = fatpoints.fat_hf_table(n, k, d, max(degrees))
        values = [table[m] for m in degrees]
    report = {"params": _params_dict(p), "method": method,
              "values": [str(v) for v in values], "conjectural": False, "_degrees": degrees}
    if args.degree is not None:
        report["degree"] = args.degree
    print(_emit_values(report, args.format))
    return EXIT_OK


def _int_set(text: str) -> tuple:
    """Parse '3', '1:4' (inclusive) or '2,3,5'."""
    try:
        if ":" in text:
            lo, hi = text.split(":")
            vals = tuple(range(int(lo), int(hi) + 1))
        else:
            vals = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise UsageError(f"bad integer range {text!r}")
    if not vals:
        raise UsageError(f"empty range {text!r}")
    return vals


def cmd_verify(args) -> int:
    methods = tuple(m.strip() for m in args.methods.split(",") if m.strip())
    degrees = None
    if args.degrees != "all":
        rng = _int_set(args.degrees)
        degrees = (min(rng), max(rng))
    try:
        spec = SweepSpec(_int_set(args.n), _int_set(args.k), _int_set(args.d), methods,
                         degrees=degrees, jobs=args.jobs,
                         cache_path=resolve_cache_path(args.cache),
                         max_block_entries=args.max_block_entries,
                         skip_guarded=args.skip_guarded)
    except ValueError as exc:
        raise UsageError(str(exc))
    try:
        outcomes, written = run_sweep(spec)
    except GuardRefusal as exc:
        print(f"error: resource guard refused {exc} (use --skip-guarded)", file=sys.stderr)
        return EXIT_GUARD
    summary = summarize(outcomes, written)
    if args.format == "json":
        print(json.dumps(summary))
    elif args.format == "csv":
        rows = []
        for o in outcomes:
            for m in sorted(o.values):
                for i in sorted(o.values[m]):
                    rows.append((*o.params, i, m, o.values[m][i]))
        print(_csv(rows))
    else:
        for o in outcomes:
            n, k, d = o.params
            flag = "DISAGREE" if o.disagreements else "ok"
            print(f"n={n} k={k} d={d} {o.status} {flag}")
        print(f"tuples={summary['tuples']} computed={summary['computed']} cached={summary['cached']} "
              f"guarded={summary['guarded']} records_written={written} "
              f"disagreements={len(summary['disagreements'])}")
    if summary["disagreements"]:
        first = summary["disagreements"][0]
        print(f"first disagreement: n={first['n']} k={first['k']} d={first['d']} degree={first['degree']} "
              + " ".join(f"{m}={v}" for m, v in first["values"].items()), file=sys.stderr)
        for line in reproducer(first):
            print("  reproduce: " + line, file=sys.stderr)
        return EXIT_DISAGREE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for verify")
    common.add_argument("--cache", default=None,
                        help="JSONL result cache for verify (default: $POWIDEAL_CACHE)")
    common.add_argument("--max-block-entries", type=int, default=DEFAULT_MAX_BLOCK_ENTRIES,
                        help="largest matrix (rows*cols) the rank oracles may build")
    common.add_argument("--skip-guarded", action="store_true",
                        help="verify: skip methods refused by the resource guard instead of failing")

    triple = argparse.ArgumentParser(add_help=False)
    triple.add_argument("--n", type=int, required=True, help="number of variables minus one")
    triple.add_argument("--k", type=int, required=True, help="order of the root of unity")
    triple.add_argument("--d", type=int, required=True)

    parser = argparse.ArgumentParser(prog="powideal", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hf", parents=[common, triple], help="Hilbert function of R_{n,k,d}")
    p.add_argument("--degree", type=int)
    p.add_argument("--method", choices=METHODS,
                   help="default: proved-k2 when k = 2, conjectured otherwise")
    p.set_defaults(func=cmd_hf)

    p = sub.add_parser("series", parents=[common, triple], help="Hilbert series numerator")
    p.add_argument("--from-hf", action="store_true", help="derive the numerator from the HF table")
    p.add_argument("--method", choices=METHODS, help="engine used with --from-hf")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("betti", parents=[common, triple], help="Betti numbers of the fat-point scheme")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("gens", parents=[common, triple], help="number of minimal generators of I_{n,k,d}")
    p.set_defaults(func=cmd_gens)

    p = sub.add_parser("fatpoints", parents=[common, triple], help="fat points on the xi-points",
                       epilog=POLY_SYNTAX, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--degree", type=int)
    p.add_argument("--oracle", action="store_true", help="interpolation-matrix rank instead of the series")
    p.add_argument("--gens", action="store_true", help="print the generators")
    p.set_defaults(func=cmd_fatpoints)

    p = sub.add_parser("verify", parents=[common], help="cross-check engines over a parameter sweep")
    p.add_argument("--n", required=True, help="e.g. 1:4 or 1,2,3")
    p.add_argument("--k", required=True)
    p.add_argument("--d", required=True)
    p.add_argument("--methods", default="conjectured,comp,duality",
                   help="comma list from: " + ",".join(METHODS))
    p.add_argument("--degrees", default="all", help="'all' (0..kd-1) or lo:hi")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceGuardError as exc:
        print(f"error: resource guard: {exc}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
