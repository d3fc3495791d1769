"""Command-line entry point: ``shintani-classnum {classnum,table,inspect}``.

Exit codes: 0 ok, 2 ineligible or bad input, 3 cross-method mismatch, 4 parse error.
Rationals are written as "num/den" strings, never floats.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .errors import ShintaniError
from .expansion import eps_expand, period_length_of_inv_p
from .field import QuadRat, check_pair, eligibility, make_field
from .oracle import class_number_direct
from .residue import find_generator, pinned_generator
from .shintani import cycle_decompose, enumerate_R, kernel_elements
from .theorem_one import cd_constants, class_number_thm1, signed_summands
from .theorem_two import class_number_thm2, cycle_terms

EXIT_OK, EXIT_INPUT, EXIT_MISMATCH, EXIT_PARSE = 0, 2, 3, 4
METHODS = ("thm1", "thm2", "direct")


class ExitError(Exception):
    def __init__(self, code: int, payload: dict) -> None:
        super().__init__(payload)
        self.code = code
        self.payload = payload


def q_str(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _field_or_exit(d: int, p: int | None = None):
    """The field for d; with p given, also insist that (d, p) is eligible."""
    try:
        if p is None:
            return make_field(d)
        field, report = check_pair(d, p)
    except ShintaniError as exc:
        raise ExitError(EXIT_INPUT, {"d": d, "error": exc.code, "message": exc.message})
    if not report.eligible:
        raise ExitError(
            EXIT_INPUT, {"d": d, "p": p, "eligible": False, "failures": list(report.failures)}
        )
    return field


def parse_rho(text: str) -> tuple[int, int]:
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError:
        raise ExitError(EXIT_PARSE, {"error": "BAD_RHO", "message": f"expected a,b, got {text!r}"})
    return a, b


def parse_alpha(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ExitError(EXIT_PARSE, {"error": "BAD_ALPHA", "message": f"expected num/den, got {text!r}"})


def run_classnum(
    d: int,
    p: int,
    method: str = "all",
    rho: tuple[int, int] | None = None,
    crosscheck: bool = True,
    timing: bool = False,
    max_digits: int | None = None,
) -> dict:
    field = _field_or_exit(d, p)
    try:
        gen = pinned_generator(field, p, *rho) if rho else find_generator(field, p)
    except ShintaniError as exc:
        raise ExitError(EXIT_INPUT, {"d": d, "p": p, "error": exc.code, "message": exc.message})
    params = cd_constants(field, gen)
    methods = METHODS if method == "all" else (method,)
    h, times = {}, {}
    cycles = None
    for m in methods:
        start = time.perf_counter()
        if m == "thm1":
            h[m] = class_number_thm1(field, p, gen)
        elif m == "thm2":
            cycles, _ = cycle_decompose(field, p)
            h[m] = class_number_thm2(field, p, cycles)
        else:
            h[m] = class_number_direct(field, p)
        times[m] = round((time.perf_counter() - start) * 1000, 3)
    ell = period_length_of_inv_p(field, p, max_digits)
    report = {
        "d": d,
        "p": p,
        "methods": list(methods),
        "h": h,
        "ell": ell,
        "rho": [gen.a, gen.b],
        "C": params.C,
        "D": params.D,
        "cycle_count": len(cycles) if cycles is not None else field.t * (p * p - 1) // ell,
    }
    if timing:
        report["timing_ms"] = times
    if crosscheck and len(set(h.values())) > 1:
        raise ExitError(EXIT_MISMATCH, {**report, "error": "INTERNAL_INCONSISTENCY"})
    return report


def _table1_row(args: tuple[int, int]) -> dict:
    d, p = args
    field = make_field(d)
    gen = find_generator(field, p)
    params = cd_constants(field, gen)
    terms = signed_summands(field, p, params)
    t = field.t
    return {
        "p": p,
        "rho": [gen.a, gen.b],
        "C": params.C,
        "D": params.D,
        "first_summands": terms[:2],
        "last_summand": terms[-1],
        "denominator": 16 * t * t * p * p,
        "h": class_number_thm1(field, p, gen),
    }


def _table2_row(args: tuple[int, int]) -> dict:
    d, p = args
    field = make_field(d)
    cycles, _ = cycle_decompose(field, p)
    return {
        "p": p,
        "expansion": eps_expand(field, QuadRat(Fraction(1, p))).render(),
        "ell": period_length_of_inv_p(field, p),
        "cycle_contributions": [q_str(term.contribution) for term in cycle_terms(field, p, cycles)],
        "h": class_number_thm2(field, p, cycles),
    }


def run_table(d: int, pmax: int, which: str, jobs: int = 1) -> dict:
    field = _field_or_exit(d)
    primes = [p for p in range(2, pmax + 1) if eligibility(field, p).eligible]
    worker = _table1_row if which == "table1" else _table2_row
    tasks = [(d, p) for p in primes]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(worker, tasks))
    else:
        rows = [worker(task) for task in tasks]
    return {"d": d, "which": which, "rows": rows}


def run_inspect(d: int, p: int | None, what: str, max_digits: int | None = None) -> dict:
    if what.startswith("eps-expand:"):
        alpha = parse_alpha(what.split(":", 1)[1])
        field = _field_or_exit(d)
        if alpha <= 0:
            raise ExitError(EXIT_INPUT, {"error": "NOT_POSITIVE", "alpha": q_str(alpha)})
        exp = eps_expand(field, QuadRat(alpha), max_digits)
        return {
            "d": d,
            "what": "eps-expand",
            "alpha": q_str(alpha),
            "expansion": exp.render(),
            "integer_digits": list(exp.integer_digits),
            "preperiod": list(exp.fractional_preperiod),
            "period": list(exp.period),
        }
    if what == "kernel":
        field = _field_or_exit(d)
        return {"d": d, "what": what, "points": [str(k.point) for k in kernel_elements(field)]}
    if p is None:
        raise ExitError(EXIT_INPUT, {"error": "MISSING_P", "message": f"--what {what} needs --p"})
    field = _field_or_exit(d, p)
    if what == "shintani-set":
        return {"d": d, "p": p, "what": what, "points": [str(r) for r in sorted(enumerate_R(field, p))]}
    if what == "cycles":
        cycles, trivial = cycle_decompose(field, p)
        return {
            "d": d,
            "p": p,
            "what": what,
            "cycles": [
                {"rep": str(c.rep), "length": c.length, "points": [str(q) for q in c.points]}
                for c in cycles
            ],
            "trivial": [str(r) for r in trivial],
        }
    raise ExitError(EXIT_PARSE, {"error": "BAD_WHAT", "message": f"unknown --what {what!r}"})


def _tsv(rows: list[dict]) -> str:
    if not rows:
        return ""
    header = list(rows[0])
    lines = ["\t".join(header)]
    for row in rows:
        lines.append("\t".join(_cell(row[k]) for k in header))
    return "\n".join(lines) + "\n"


def _cell(v) -> str:
    if isinstance(v, list):
        return ",".join(map(str, v))
    if isinstance(v, dict):
        return ",".join(f"{k}={v[k]}" for k in v)
    return str(v)


def _dump(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, sort_keys=False) + "\n"
    if "rows" in payload:
        return _tsv(payload["rows"])
    if payload.get("what") == "eps-expand":
        return payload["expansion"] + "\n"
    if payload.get("what") == "kernel":
        return "[" + ", ".join(payload["points"]) + "]\n"
    if payload.get("what") == "shintani-set":
        return "\n".join(payload["points"]) + "\n"
    if payload.get("what") == "cycles":
        return "".join(
            f"{c['rep']}\t{c['length']}\t{' '.join(c['points'])}\n" for c in payload["cycles"]
        )
    flat = {k: v for k, v in payload.items() if k != "h"}
    flat.update({f"h_{k}": v for k, v in payload.get("h", {}).items()})
    return _tsv([flat])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="shintani-classnum", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classnum", help="class number of F(sqrt(-p)) by one or all methods")
    c.add_argument("--d", type=int, required=True)
    c.add_argument("--p", type=int, required=True)
    c.add_argument("--method", choices=(*METHODS, "all"), default="all")
    c.add_argument("--rho", help="pin the generator a+b*theta as 'a,b'")
    c.add_argument("--format", choices=("json", "tsv"), default="json")
    c.add_argument("--no-crosscheck", action="store_true")
    c.add_argument("--timing", action="store_true", help="add wall-clock timings (breaks byte-stability)")
    c.add_argument("--max-digits", type=int)

    t = sub.add_parser("table", help="per-prime rows for the recurrence (table1) or cycle (table2) method")
    t.add_argument("--d", type=int, required=True)
    t.add_argument("--pmax", type=int, required=True)
    t.add_argument("--which", choices=("table1", "table2"), default="table1")
    t.add_argument("--format", choices=("json", "tsv"), default="json")
    t.add_argument("--jobs", type=int, default=None)

    i = sub.add_parser("inspect", help="dump the Shintani set, cycles, kernel or an expansion")
    i.add_argument("--d", type=int, required=True)
    i.add_argument("--p", type=int)
    i.add_argument("--what", required=True, help="shintani-set | cycles | kernel | eps-expand:NUM/DEN")
    i.add_argument("--format", choices=("text", "json"), default="text")
    i.add_argument("--max-digits", type=int)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_PARSE
    try:
        if args.command == "classnum":
            payload = run_classnum(
                args.d,
                args.p,
                args.method,
                parse_rho(args.rho) if args.rho else None,
                crosscheck=not args.no_crosscheck,
                timing=args.timing,
                max_digits=args.max_digits,
            )
        elif args.command == "table":
            jobs = args.jobs or int(os.environ.get("SHINTANI_JOBS", "1"))
            payload = run_table(args.d, args.pmax, args.which, jobs)
        else:
            payload = run_inspect(args.d, args.p, args.what, args.max_digits)
    except ExitError as exc:
        sys.stdout.write(json.dumps(exc.payload) + "\n")
        return exc.code
    except ShintaniError as exc:
        sys.stdout.write(json.dumps({"error": exc.code, "message": exc.message}) + "\n")
        return EXIT_MISMATCH if exc.code in ("INTERNAL_INCONSISTENCY", "NON_INTEGRAL_RESULT") else EXIT_INPUT
    sys.stdout.write(_dump(payload, args.format))
    return EXIT_OK
