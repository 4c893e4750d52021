"""Command-line front end.

Exit codes: 0 success, 1 semantic failure (e.g. a family that does not
verify), 2 invalid parameters, 3 unreadable or malformed input.

    xorclique construct --method affine --p 3 | xorclique verify --in -
    xorclique bounds --k 5 --N 15
    xorclique solve --k 2 --N 6 --time-limit 60s
    xorclique table --k-max 6 --N-max 40 --out-csv table.csv
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys
from math import comb
from pathlib import Path

from . import constructions
from .bounds import DEFAULT_RAMSEY_THRESHOLD, report
from .errors import InvalidParams, MalformedFamily, TooLarge, XorCliqueError
from .family import SetFamily, trivial_construction, verify_semiintersecting
from .field import gf, is_prime_power
from .graph import vertex_cap
from .latin import latin_family_from_mols, mols_from_field, read_squares
from .solve import solve_f

EXIT_OK, EXIT_FAIL, EXIT_PARAMS, EXIT_INPUT = 0, 1, 2, 3

METHODS = ("trivial", "affine", "stacked", "bign", "weighted", "latin", "best")
REQUIRED = {
    "trivial": ("k", "N"),
    "affine": ("p",),
    "stacked": ("p", "l"),
    "bign": ("p", "N"),
    "weighted": ("k", "p"),
    "latin": ("k",),
    "best": ("k", "N"),
}
CSV_COLUMNS = ("k", "N", "lower", "lower_provenance", "upper_min", "upper_rule", "exact")


def parse_duration(text: str) -> float:
    m = re.fullmatch(r"\s*([0-9]*\.?[0-9]+)\s*(ms|s|m|h)?\s*", text)
    if not m:
        raise argparse.ArgumentTypeError(f"bad duration {text!r}")
    scale = {"ms": 1e-3, "s": 1.0, "m": 60.0, "h": 3600.0}[m.group(2) or "s"]
    return float(m.group(1)) * scale


def _emit(obj, out: str | None = None) -> None:
    text = json.dumps(obj, indent=2)
    if out and out != "-":
        Path(out).write_text(text + "\n")
    else:
        print(text)


def _fail(code: int, exc: BaseException) -> int:
    print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
    return code


def _build(args) -> SetFamily:
    missing = [name for name in REQUIRED[args.method] if getattr(args, name) is None]
    if missing:
        raise InvalidParams(f"--method {args.method} needs " + ", ".join(f"--{m}" for m in missing))
    m = args.method
    if m == "trivial":
        return trivial_construction(args.k, args.N)
    if m == "affine":
        return constructions.affine_construction(args.p)
    if m == "stacked":
        return constructions.stacked_affine(args.p, args.l)
    if m == "bign":
        return constructions.big_n_construction(args.p, args.N)
    if m == "weighted":
        return constructions.weighted_pk_construction(args.k, args.p)
    if m == "latin":
        if args.mols_file:
            squares = read_squares(args.mols_file)
        elif is_prime_power(args.k):
            squares = mols_from_field(gf(args.k))[: max(args.k - 2, 0)]
        else:
            raise InvalidParams(f"k={args.k} is not a prime power; supply --mols-file")
        if args.m is not None:
            squares = squares[: args.m]
        return latin_family_from_mols(squares, args.k)
    return constructions.best_known_lower(args.k, args.N)[1]


def cmd_construct(args) -> int:
    try:
        fam = _build(args)
    except OSError as exc:
        return _fail(EXIT_INPUT, exc)
    except XorCliqueError as exc:
        return _fail(EXIT_PARAMS, exc)
    _emit(fam.to_dict(), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        text = sys.stdin.read() if args.input == "-" else Path(args.input).read_text()
        fam = SetFamily.from_json(text)
    except (OSError, MalformedFamily) as exc:
        return _fail(EXIT_INPUT, exc)
    rep = verify_semiintersecting(fam)
    _emit(rep.to_dict())
    return EXIT_OK if rep.valid else EXIT_FAIL


def cmd_bounds(args) -> int:
    try:
        rep = report(args.k, args.N, ramsey_threshold=args.ramsey_threshold)
    except XorCliqueError as exc:
        return _fail(EXIT_PARAMS, exc)
    _emit(rep.to_dict())
    if not rep.consistent:
        print(f"inconsistent: lower {rep.lower} exceeds upper {rep.upper.value}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_solve(args) -> int:
    try:
        if args.export_dimacs and comb(args.N, args.k) ** 2 > vertex_cap():
            raise TooLarge(f"product graph for (k={args.k}, N={args.N}) exceeds the vertex cap")
        rep = solve_f(args.k, args.N, time_limit=args.time_limit, thread_count=args.threads,
                      ramsey_threshold=args.ramsey_threshold, force_solver=args.force,
                      export_dimacs=args.export_dimacs)
    except XorCliqueError as exc:
        return _fail(EXIT_PARAMS, exc)
    if rep.clique is None:
        _emit(rep.to_dict())
    else:
        out = rep.clique.to_dict()
        out["report"] = rep.to_dict()
        _emit(out)
    return EXIT_OK if rep.consistent else EXIT_FAIL


def table_rows(k_max: int, n_max: int, ramsey_threshold: int = DEFAULT_RAMSEY_THRESHOLD):
    for k in range(1, k_max + 1):
        for N in range(k, n_max + 1):
            rep = report(k, N, ramsey_threshold=ramsey_threshold)
            up = rep.upper
            yield {
                "k": k, "N": N, "lower": rep.lower, "lower_provenance": rep.lower_provenance,
                "upper_min": up.value, "upper_rule": up.rule,
                "exact": "" if rep.exact is None else rep.exact,
            }


def cmd_table(args) -> int:
    try:
        rows = list(table_rows(args.k_max, args.N_max, args.ramsey_threshold))
    except XorCliqueError as exc:
        return _fail(EXIT_PARAMS, exc)
    fh = open(args.out_csv, "w", newline="") if args.out_csv and args.out_csv != "-" else sys.stdout
    try:
        writer = csv.DictWriter(fh, fieldnames=CSV_COLUMNS)
        writer.writeheader()
        writer.writerows(rows)
    finally:
        if fh is not sys.stdout:
            fh.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="xorclique", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="emit a semiintersecting family as JSON")
    c.add_argument("--method", choices=METHODS, required=True)
    for name in ("k", "p", "l", "N", "m"):
        c.add_argument(f"--{name}", type=int)
    c.add_argument("--mols-file", help="Latin squares, n lines of n symbols each, blank-line separated")
    c.add_argument("--out", help="output path (default: stdout)")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="check a family JSON; exit 0 iff semiintersecting")
    v.add_argument("--in", dest="input", default="-", help="family JSON path, '-' for stdin")
    v.set_defaults(func=cmd_verify)

    for name, func, helptext in (("bounds", cmd_bounds, "bound report for (k, N)"),
                                 ("solve", cmd_solve, "pin f(k, N) with the clique solver")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--N", type=int, required=True)
        p.add_argument("--ramsey-threshold", type=int, default=DEFAULT_RAMSEY_THRESHOLD,
                       help="upper bound on R(7,7) used by the k=2 rule (default 924)")
        p.set_defaults(func=func)
        if name == "solve":
            p.add_argument("--time-limit", type=parse_duration, default=None, help="e.g. 60s, 5m")
            p.add_argument("--threads", type=int, default=1)
            p.add_argument("--export-dimacs", metavar="PATH")
            p.add_argument("--force", action="store_true", help="search even when the bounds already meet")

    t = sub.add_parser("table", help="CSV sweep of bound reports")
    t.add_argument("--k-max", type=int, required=True)
    t.add_argument("--N-max", type=int, required=True)
    t.add_argument("--out-csv", default="-")
    t.add_argument("--ramsey-threshold", type=int, default=DEFAULT_RAMSEY_THRESHOLD)
    t.set_defaults(func=cmd_table)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
