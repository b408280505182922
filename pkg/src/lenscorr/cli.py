"""Command-line front end.

Exit codes: 0 success, 1 a verification found a counterexample, 2 bad usage
or invalid input.
"""

import argparse
import csv
import io
import json
import sys
from math import gcd, isqrt

from . import sweeps
from .correction import d_table, normalize_lens
from .dedekind import dedekind_sum, rademacher_sum, sigma_sum
from .invariants import AlexanderPolynomial, casson_walker_surgery, d_surgery, d_surgery_table, vanishing_spinc
from .records import OutputRecord, render

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(args, text):
    if args.output in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def cmd_d_table(args):
    lens = normalize_lens(args.p, args.q)
    table = d_table(lens, args.method)
    p_out = -lens.p if lens.orientation_flips else lens.p
    records = [OutputRecord(p_out, lens.q, n, v, "d") for n, v in enumerate(table)]
    _emit(args, render(records, args.format))
    return EXIT_OK


def cmd_sums(args):
    q, p = args.q, args.p
    if args.kind == "dedekind":
        record = OutputRecord(p, q, None, dedekind_sum(q, p), "dedekind")
    else:
        fn = rademacher_sum if args.kind == "rademacher" else sigma_sum
        record = OutputRecord(p, q, args.shift, fn(q, p, args.shift), args.kind)
    _emit(args, render([record], args.format))
    return EXIT_OK


def cmd_verify(args):
    if args.p_max < 2:
        raise UsageError("--p-max must be at least 2")

    def progress(msg):
        print(f"[{args.suite}] {msg}", file=sys.stderr, flush=True)

    results = sweeps.run(args.suite, args.p_max, seed=args.seed, progress=None if args.quiet else progress)
    if args.format == "json":
        payload = [
            {
                "suite": r.suite,
                "p_max": r.p_max,
                "unit": r.unit,
                "checked": r.checked,
                "violations": r.violations,
                "counterexample": r.counterexample,
                "details": r.details,
            }
            for r in results
        ]
        _emit(args, json.dumps(payload) + "\n")
    else:
        _emit(args, "".join(r.summary() + "\n" for r in results))
    return EXIT_OK if all(r.ok for r in results) else EXIT_VIOLATION


def cmd_search_vanishing(args):
    if not 2 <= args.p_min <= args.p_max:
        raise UsageError("need 2 <= --p-min <= --p-max")
    rows, violated = [], False
    for p in range(args.p_min, args.p_max + 1):
        root = isqrt(p)
        if args.square_only and root * root != p:
            continue
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            zeros = vanishing_spinc(normalize_lens(p, q))
            if args.square_only and len(zeros) > root:
                violated = True
                print(f"bound violated: L({p},{q}) has {len(zeros)} > {root} vanishing terms", file=sys.stderr)
            rows.append({"p": p, "q": q, "zero_labels": zeros})
    if args.format == "json":
        text = json.dumps(rows) + "\n"
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["p", "q", "zero_labels"])
        for row in rows:
            writer.writerow([row["p"], row["q"], ";".join(map(str, row["zero_labels"]))])
        text = buf.getvalue()
    _emit(args, text)
    return EXIT_VIOLATION if violated else EXIT_OK


def cmd_surgery(args):
    alex = AlexanderPolynomial.parse(args.alex)
    p, q = args.p, args.q
    if args.n is None:
        values = d_surgery_table(p, q, alex)
        records = [OutputRecord(p, q, n, v, "d_surgery") for n, v in enumerate(values)]
    else:
        records = [OutputRecord(p, q, args.n, d_surgery(p, q, args.n, alex), "d_surgery")]
    records.append(OutputRecord(p, q, None, casson_walker_surgery(p, q, alex), "casson_walker"))
    _emit(args, render(records, args.format))
    return EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default=argparse.SUPPRESS)
    common.add_argument("--output", metavar="PATH", default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="lenscorr", description=__doc__)
    parser.add_argument("--format", choices=("csv", "json"), default="csv", help="output format (default csv)")
    parser.add_argument("--output", metavar="PATH", default=None, help="write to PATH instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("d-table", parents=[common], help="correction terms of L(p, q)")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--method", choices=("closed", "recursive", "tange"), default="closed")
    p.set_defaults(func=cmd_d_table)

    p = sub.add_parser("sums", parents=[common], help="Dedekind and Dedekind-Rademacher sums")
    p.add_argument("q", type=int)
    p.add_argument("p", type=int)
    p.add_argument("--kind", choices=("dedekind", "rademacher", "sigma"), default="dedekind")
    p.add_argument("--shift", type=int, default=0, help="n in s(q,p;n) and sigma(q,p;n)")
    p.set_defaults(func=cmd_sums)

    p = sub.add_parser("verify", parents=[common], help="run an exhaustive verification sweep")
    p.add_argument("suite", choices=(*sweeps.SUITES, "all"))
    p.add_argument("--p-max", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--quiet", action="store_true", help="no progress on stderr")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search-vanishing", parents=[common], help="list labels with vanishing correction term")
    p.add_argument("--p-min", type=int, default=2)
    p.add_argument("--p-max", type=int, required=True)
    p.add_argument("--square-only", action="store_true", help="only orders m^2; check the at-most-m bound")
    p.set_defaults(func=cmd_search_vanishing)

    p = sub.add_parser("surgery", parents=[common], help="p/q surgery on a knot from its Alexander polynomial")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--alex", required=True, help="symmetric coefficients a_0,a_1,...,a_m")
    p.add_argument("--n", type=int, default=None)
    p.set_defaults(func=cmd_surgery)
    return parser


def _glue_option_values(argv):
    # "--alex -1,1" would otherwise be read as an unknown option
    out = list(argv)
    for i, tok in enumerate(out[:-1]):
        if tok == "--alex" and out[i + 1].startswith("-"):
            out[i : i + 2] = [f"--alex={out[i + 1]}"]
            break
    return out


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(_glue_option_values(sys.argv[1:] if argv is None else argv))
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"lenscorr {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
