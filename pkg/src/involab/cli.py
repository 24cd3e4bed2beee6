"""involab command line.

Exit codes: 0 success, 1 usage error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from decimal import Decimal

from . import enumeration as en
from . import tables
from .checks import GF_CLASSES, SUITES, run_suite
from .coloring import color_1324, encode
from .perm import Permutation

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2
FORMATS = ("text", "csv", "json", "bfile")

# default n-ranges for the reference tables
TABLE_RANGES = {"1": (5, 11), "2": (12, 16), "3": (5, 14), "ratios": (1, 16)}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _perm(text: str) -> Permutation:
    try:
        return Permutation.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def parse_range(text: str) -> tuple[int, int]:
    """'12' or '5..11' (also '5-11') -> (lo, hi), checked against the cap."""
    sep = ".." if ".." in text else ("-" if "-" in text.lstrip("-") else None)
    try:
        lo, hi = (int(p) for p in text.split(sep, 1)) if sep else (int(text),) * 2
    except ValueError:
        raise UsageError(f"bad n-range {text!r}") from None
    cap = en.max_n()
    if not 0 <= lo <= hi <= cap:
        raise UsageError(f"n-range {text!r} must satisfy 0 <= lo <= hi <= {cap}")
    return lo, hi


def _emit(header: list[str], rows: list[list], fmt: str, out) -> None:
    """Write a table of exact values in the requested format."""
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    elif fmt == "json":
        out.write(json.dumps([dict(zip(header, map(str, r))) for r in rows]) + "\n")
    elif fmt == "bfile":
        if len(header) != 2:
            raise UsageError("b-file output needs exactly one sequence")
        out.write("".join(f"{r[0]} {r[1]}\n" for r in rows))
    else:
        cells = [header] + [[str(c) for c in r] for r in rows]
        widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
        for r in cells:
            out.write("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() + "\n")


# -- verbs --------------------------------------------------------------

def cmd_count(args, out) -> int:
    lo, hi = parse_range(args.n)
    basis = args.pattern
    if args.simple:
        table = en.simple_count_table(basis, hi, args.involutions, args.threads)
    else:
        table = en.count_table(basis, hi, args.involutions, args.threads)
    if lo == hi and args.format == "text":
        out.write(f"{table[hi]}\n")
        return EXIT_OK
    _emit(["n", "count"], [[n, table[n]] for n in range(lo, hi + 1)], args.format, out)
    return EXIT_OK


def cmd_simples(args, out) -> int:
    lo, hi = parse_range(args.n)
    if lo < 2:
        raise UsageError("simple permutations have length >= 2")
    rows = []
    for n in range(lo, hi + 1):
        if args.involutions:
            found = en.simple_involutions(args.pattern, n)
        else:
            found = en.simples_of_class(args.pattern, n)
        rows.extend([n, str(p)] for p in sorted(found))
    _emit(["n", "perm"], rows, "text" if args.format == "bfile" else args.format, out)
    return EXIT_OK


def _gf_series(name: str, order: int):
    from .series import KNOWN, gf_known, gf_word_pairs, staircase_closed

    if name == "word-pairs":
        return gf_word_pairs(order)
    if name in GF_CLASSES:
        return GF_CLASSES[name][1](order)
    if name.startswith("staircase-") and name[-1] in "012":
        return staircase_closed(int(name[-1]), order)
    key = name.replace("-", "_")
    if key in KNOWN:
        return gf_known(key, order)
    raise UsageError(f"unknown class {name!r}; choose from {', '.join(gf_choices())}")


def gf_choices() -> list[str]:
    from .series import KNOWN

    return (sorted(GF_CLASSES) + ["word-pairs", "staircase-0", "staircase-1",
                                  "staircase-2"] + sorted(k.replace("_", "-") for k in KNOWN))


def cmd_gf(args, out) -> int:
    if args.order < 0:
        raise UsageError("order must be nonnegative")
    g = _gf_series(args.cls, args.order)
    coeffs = g.integers()
    if args.format == "text":
        out.write(" ".join(map(str, coeffs)) + "\n")
    else:
        _emit(["n", "a(n)"], [[n, c] for n, c in enumerate(coeffs) if
                              args.format != "bfile" or n >= 1], args.format, out)
    return EXIT_OK


def cmd_growth(args, out) -> int:
    from . import growth

    name = args.cls
    if name in ("av-i-2413", "av-i-1342", "av-i-1234"):
        report = growth.growth_constants()[name]
    elif name == "av-i-2341":
        report = growth.growth_2341()
    elif name == "av-i-1324-upper":
        report = growth.upper_bound_1324()
    elif name == "av-i-1324-lower":
        report = growth.lower_bound_1324()
    elif name.startswith("av-i-"):
        pattern = _perm(name[len("av-i-"):])
        _, hi = parse_range(args.n)
        counts = en.count_table([pattern], hi, True, args.threads)
        report = growth.empirical_growth([counts[n] for n in range(1, hi + 1)],
                                         source=name)
    else:
        raise UsageError(f"unknown class {name!r}")
    if args.format == "json":
        out.write(report.to_json() + "\n")
    else:
        d = report.to_dict()
        for key, value in d.items():
            if isinstance(value, dict):
                for k, v in value.items():
                    out.write(f"{key}.{k}: {v}\n")
            else:
                out.write(f"{key}: {value}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if not 1 <= args.max_n <= en.max_n():
        raise UsageError(f"--max-n must lie in 1..{en.max_n()}")
    failed = 0
    results = []
    for res in run_suite(args.suite, args.max_n, args.threads):
        failed += not res.ok
        if args.format == "json":
            results.append({"check": res.name, "ok": res.ok, "mismatches": res.mismatches})
        else:
            out.write(res.line() + "\n")
            out.flush()
    if args.format == "json":
        out.write(json.dumps(results) + "\n")
    return EXIT_VERIFY if failed else EXIT_OK


def cmd_color(args, out) -> int:
    colored = color_1324(args.perm)
    pair = encode(args.perm)
    data = {"perm": str(colored.perm), "colors": colored.colors, "e": pair.e, "v": pair.v}
    if args.format == "json":
        out.write(json.dumps(data) + "\n")
    else:
        for k, v in data.items():
            out.write(f"{k}: {v}\n")
    return EXIT_OK


def _ratio(a: int, b: int) -> str:
    return str((Decimal(a) / Decimal(b)).quantize(Decimal("0.000001")))


def cmd_table(args, out) -> int:
    which = args.which
    lo, hi = parse_range(args.n) if args.n else TABLE_RANGES[which]
    if args.n is None and hi > en.max_n():
        raise UsageError(f"table {which} needs n up to {hi}; raise INVOLAB_MAX_N")
    if which == "ratios":
        fmt = "csv" if args.format == "text" else args.format
        n1324 = en.count_table([(1, 3, 2, 4)], hi, True, args.threads)
        n1234 = en.count_table([(1, 2, 3, 4)], hi, True, args.threads)
        n2413 = en.count_table([(2, 4, 1, 3)], hi, True, args.threads)
        rows = [[n, _ratio(n1234[n], n1324[n]), _ratio(n2413[n], n1324[n])]
                for n in range(max(lo, 1), hi + 1)]
        _emit(["n", "av-i-1234/av-i-1324", "av-i-2413/av-i-1324"], rows, fmt, out)
        return EXIT_OK
    columns, reference = tables.TABLES[which]
    rows, mismatches = [], []
    computed = {}
    for pat in columns:
        beta = [Permutation.parse(pat)]
        if which == "3":
            computed[pat] = en.simple_count_table(beta, hi, True, args.threads)
        else:
            computed[pat] = en.count_table(beta, hi, True, args.threads)
    for n in range(lo, hi + 1):
        row = [n]
        for pat in columns:
            c = computed[pat][n]
            row.append(c)
            want = reference.get(n, {}).get(pat)
            if want is not None and want != c:
                mismatches.append(f"{pat} n={n}: computed {c}, reference {want}")
        rows.append(row)
    _emit(["n", *columns], rows, "text" if args.format == "bfile" else args.format, out)
    if mismatches:
        sys.stderr.write("mismatch with the reference table:\n")
        sys.stderr.write("".join(f"  {m}\n" for m in mismatches))
        return EXIT_VERIFY
    return EXIT_OK


# -- parser -------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--threads", type=int, default=None,
                        help="enumeration threads (default: available cores)")
    common.add_argument("--timing", action="store_true",
                        help="report elapsed time on stderr")

    p = _Parser(prog="involab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    c = sub.add_parser("count", parents=[common], help="count avoiders")
    c.add_argument("--pattern", type=_perm, action="append", required=True,
                   help="basis element; repeat for several")
    c.add_argument("--n", required=True, help="length or range lo..hi")
    c.add_argument("--involutions", action="store_true")
    c.add_argument("--simple", action="store_true")
    c.set_defaults(func=cmd_count)

    s = sub.add_parser("simples", parents=[common], help="list simple avoiders")
    s.add_argument("--pattern", type=_perm, action="append", required=True)
    s.add_argument("--n", required=True)
    s.add_argument("--involutions", action="store_true")
    s.set_defaults(func=cmd_simples)

    g = sub.add_parser("gf", parents=[common], help="series coefficients")
    g.add_argument("--class", dest="cls", required=True)
    g.add_argument("--order", type=int, default=20)
    g.set_defaults(func=cmd_gf)

    gr = sub.add_parser("growth", parents=[common], help="growth rate report")
    gr.add_argument("--class", dest="cls", required=True)
    gr.add_argument("--n", default="14", help="length for empirical estimates")
    gr.set_defaults(func=cmd_growth)

    v = sub.add_parser("verify", parents=[common], help="run cross-checks")
    v.add_argument("--suite", default="all", choices=["all", *SUITES])
    v.add_argument("--max-n", type=int, default=10)
    v.set_defaults(func=cmd_verify)

    co = sub.add_parser("color", parents=[common], help="color a 1324-avoider")
    co.add_argument("--perm", type=_perm, required=True)
    co.set_defaults(func=cmd_color)

    t = sub.add_parser("table", parents=[common], help="reproduce a table")
    t.add_argument("which", choices=["1", "2", "3", "ratios"])
    t.add_argument("--n", default=None, help="range lo..hi")
    t.set_defaults(func=cmd_table)
    return p


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        code = args.func(args, out)
    except (UsageError, ValueError, argparse.ArgumentTypeError) as exc:
        sys.stderr.write(f"involab: error: {exc}\n")
        return EXIT_USAGE
    if args.timing:
        sys.stderr.write(f"elapsed: {time.perf_counter() - start:.3f}s\n")
    return code


def run(argv: list[str]) -> tuple[int, str]:
    """Run a command and capture its standard output."""
    buf = io.StringIO()
    try:
        code = main(argv, buf)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else EXIT_USAGE
    return code, buf.getvalue()


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
