"""Command-line front-end.

Exit codes: 0 success, 1 negative result (argument outside the grounded
extension, failed verification, framework too large for brute force),
2 input problems (unreadable/malformed files, unknown names, bad flags).
"""

import argparse
import csv
import os
import sys

from . import oracle
from .af import load_af
from .construct import construct_for, grounded_with_minmax
from .errors import (
    NotInGroundedError,
    OracleTooLargeError,
    ParseError,
)
from .labelling import IN, INFINITY, OUT, format_certificate, parse_certificate
from .pipeline import compare, small_strongly_admissible
from .semantics import is_admissible_labelling, minmax_violations


def build_parser():
    parser = argparse.ArgumentParser(
        prog="strongadm",
        description=(
            "Compute and check small strongly admissible labellings that "
            "certify membership of the grounded extension."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="compute a labelling for a query argument")
    solve.add_argument("af_file", help="framework file (.tgf or .apx)")
    solve.add_argument(
        "--alg",
        choices=("grounded", "alg1", "alg3", "minimal"),
        default="alg3",
        help="grounded labelling, bottom-up construction, construct+prune, "
        "or brute-force minimal (default: alg3)",
    )
    solve.add_argument("--query", help="argument name (required except for grounded)")
    solve.add_argument("--format", choices=("tgf", "apx", "auto"), default="auto")
    solve.add_argument(
        "--max-n", type=int, default=None, help="brute-force size cap for --alg minimal"
    )

    verify = sub.add_parser("verify", help="check a labelling/numbering certificate")
    verify.add_argument("af_file")
    verify.add_argument("certificate", help="certificate file (in/out/undec/mm lines)")
    verify.add_argument("--query", help="also require this argument to be IN")
    verify.add_argument("--format", choices=("tgf", "apx", "auto"), default="auto")

    enum = sub.add_parser("enumerate", help="list all strongly admissible sets")
    enum.add_argument("af_file")
    enum.add_argument("--format", choices=("tgf", "apx", "auto"), default="auto")
    enum.add_argument("--max-n", type=int, default=None, help="brute-force size cap")

    bench = sub.add_parser("bench", help="run the comparison harness over a manifest")
    bench.add_argument("manifest", help="lines of 'af-path<TAB>query'; # comments")
    bench.add_argument("--output", default="-", help="CSV path (default: stdout)")
    bench.add_argument("--repeats", type=int, default=5, help="timing repeats")
    bench.add_argument(
        "--oracle-limit", type=int, default=None, help="size cap for the minimal column"
    )
    bench.add_argument(
        "--no-oracle",
        action="store_true",
        help="skip the brute-force minimal column entirely",
    )
    return parser


def _query_index(af, name):
    if name not in af:
        raise ParseError(f"no argument named {name!r} in the framework")
    return af.index(name)


def _oracle_limit(max_n):
    if max_n is None:
        return oracle.DEFAULT_LIMIT
    return oracle.OracleLimit(subset_max_n=max_n, labelling_max_n=max_n)


def cmd_solve(args):
    af = load_af(args.af_file, args.format)
    query = None
    if args.query is not None:
        query = _query_index(af, args.query)
    if query is None and args.alg != "grounded":
        raise ParseError(f"--alg {args.alg} requires --query")

    if args.alg == "grounded":
        result = grounded_with_minmax(af)
        lab, mm = result.lab, result.mm
        if query is not None and lab.codes[query] != IN:
            raise NotInGroundedError(args.query)
    elif args.alg == "alg1":
        result = construct_for(af, query)
        lab, mm = result.lab, result.mm
    elif args.alg == "alg3":
        result = small_strongly_admissible(af, query)
        lab, mm = result.lab, result.mm
    else:
        lab, mm, _ = oracle.minimal_strongly_admissible_for(
            af, query, _oracle_limit(args.max_n)
        )
    sys.stdout.write(format_certificate(lab, mm))
    return 0


def cmd_verify(args):
    af = load_af(args.af_file, args.format)
    with open(args.certificate, encoding="utf-8") as handle:
        lab, mm = parse_certificate(af, handle.read())
    query = _query_index(af, args.query) if args.query is not None else None

    problem = _first_admissibility_problem(af, lab)
    if problem is None:
        violations = minmax_violations(af, lab, mm)
        if violations:
            problem = f"numbering: {violations[0]}"
    if problem is None:
        for i in sorted(mm):
            if mm[i] == INFINITY:
                problem = (
                    f"not strongly admissible: min-max value of {af.names[i]} is inf"
                )
                break
    if problem is None and query is not None and lab.codes[query] != IN:
        problem = f"query {args.query} is not labelled IN"

    if problem is not None:
        print(f"FAIL: {problem}")
        return 1
    print("ok")
    return 0


def _first_admissibility_problem(af, lab):
    codes = lab.codes
    for x in range(af.n):
        if codes[x] == IN:
            for y in af.attackers_of[x]:
                if codes[y] != OUT:
                    return (
                        f"not admissible: {af.names[x]} is IN but its attacker "
                        f"{af.names[y]} is not OUT"
                    )
        elif codes[x] == OUT:
            if not any(codes[y] == IN for y in af.attackers_of[x]):
                return f"not admissible: {af.names[x]} is OUT but has no IN attacker"
    return None


def cmd_enumerate(args):
    af = load_af(args.af_file, args.format)
    sets = oracle.enumerate_strongly_admissible_sets(af, _oracle_limit(args.max_n))
    for s in sets:
        print("{" + ", ".join(af.names[i] for i in sorted(s)) + "}")
    return 0


def _read_manifest(path):
    rows = []
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.rstrip("\n").rstrip("\r")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2 or not parts[0] or not parts[1]:
                raise ParseError(
                    f"{path}:{lineno}: expected 'af-path<TAB>query', got {line!r}"
                )
            rows.append((parts[0], parts[1]))
    return rows


BENCH_COLUMNS = [
    "framework",
    "query",
    "grounded_size",
    "alg1_size",
    "alg3_size",
    "min_size",
    "alg1_pct",
    "alg3_pct",
    "alg3_vs_min_pct",
    "t_grounded_ns",
    "t_alg1_ns",
    "t_alg3_ns",
    "t_min_ns",
    "error",
]


def _cell(value, pct=False):
    if value is None:
        return ""
    if pct:
        return f"{value:.1f}"
    return str(value)


def cmd_bench(args):
    if args.repeats < 1:
        raise ParseError("--repeats must be at least 1")
    manifest_rows = _read_manifest(args.manifest)
    base = os.path.dirname(os.path.abspath(args.manifest))
    limit = _oracle_limit(args.oracle_limit)

    if args.output == "-":
        out_handle = sys.stdout
        close = False
    else:
        out_handle = open(args.output, "w", newline="", encoding="utf-8")
        close = True
    try:
        writer = csv.writer(out_handle)
        writer.writerow(BENCH_COLUMNS)
        cache = {}
        for path, query_name in manifest_rows:
            cells, error = _bench_row(path, query_name, base, cache, args, limit)
            writer.writerow([path, query_name] + cells + [error])
    finally:
        if close:
            out_handle.close()
    return 0


def _bench_row(path, query_name, base, cache, args, limit):
    empty = [""] * 11
    try:
        resolved = path if os.path.isabs(path) else os.path.join(base, path)
        if resolved not in cache:
            cache[resolved] = load_af(resolved, "auto")
        af = cache[resolved]
        query = _query_index(af, query_name)
        with_oracle = not args.no_oracle and af.n <= limit.subset_max_n
        row = compare(
            af, query, with_oracle=with_oracle, repeats=args.repeats, limit=limit
        )
    except (ParseError, OSError, NotInGroundedError) as exc:
        return empty, str(exc)
    error = ""
    if not args.no_oracle and af.n > limit.subset_max_n:
        error = str(OracleTooLargeError(af.n, limit.subset_max_n))
    cells = [
        _cell(row.grounded_size),
        _cell(row.alg1_size),
        _cell(row.alg3_size),
        _cell(row.min_size),
        _cell(row.alg1_pct, pct=True),
        _cell(row.alg3_pct, pct=True),
        _cell(row.alg3_vs_min_pct, pct=True),
        _cell(row.t_grounded_ns),
        _cell(row.t_alg1_ns),
        _cell(row.t_alg3_ns),
        _cell(row.t_min_ns),
    ]
    return cells, error


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "solve": cmd_solve,
        "verify": cmd_verify,
        "enumerate": cmd_enumerate,
        "bench": cmd_bench,
    }
    try:
        return handlers[args.command](args)
    except (NotInGroundedError, OracleTooLargeError) as exc:
        print(exc, file=sys.stderr)
        return 1
    except (ParseError, OSError) as exc:
        print(exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
