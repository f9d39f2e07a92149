"""Command-line front end: ``python -m divcodes <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .catalog import DEFAULT_TABLE_BUDGET, DEFAULT_TABLE_TRIALS, build_catalog, catalog_json
from .classical import build_qr, extend_parity
from .css import css_from_self_dual, gamma, validate_css
from .distance import DEFAULT_BUDGET, DistanceError, classical_min_distance, css_distance, isd_upper_bound
from .divisibility import is_doubly_even_span, is_triply_even_span
from .doubling import DoublingError, double
from .formats import FormatError, read_classical, read_css, write_classical, write_css
from .gates import check_transversal_diagonal, check_transversal_hadamard

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_BUDGET = 0, 1, 2, 3
CHECKS = ("doubly-even", "triply-even", "clifford", "T")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _is_css_file(path: str) -> bool:
    return any(line.strip().upper().startswith("[SX]") for line in Path(path).read_text().splitlines())


def cmd_qr(args) -> int:
    try:
        C = build_qr(args.p)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.extend:
        C = extend_parity(C)
    if args.out:
        Path(args.out).write_text(write_classical(C))
    rep = classical_min_distance(C, args.budget)
    print(f"[{C.n},{C.k}]")
    state = "certified" if rep.certified else f"lower {rep.lower}, witnessed"
    print(f"d = {rep.upper} ({state})")
    return EXIT_OK


def cmd_css(args) -> int:
    C = read_classical(args.from_selfdual)
    try:
        Q = css_from_self_dual(C, label=Path(args.from_selfdual).stem)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    _emit(write_css(Q), args.out)
    print(f"[[{Q.n},{Q.k}]]", file=sys.stderr if not args.out else sys.stdout)
    return EXIT_OK


def cmd_double(args) -> int:
    Q1, Q2 = read_css(args.q1), read_css(args.q2)
    try:
        Q3, diag = double(Q1, Q2, args.budget, args.seed)
    except DoublingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    print(_dump(diag.to_dict()), end="", file=sys.stderr if not args.out else sys.stdout)
    if Q3 is None:
        return EXIT_VERIFY
    _emit(write_css(Q3), args.out)
    return EXIT_OK


def _distance_dict(rep) -> dict:
    return {"lower": rep.lower, "upper": rep.upper, "certified": rep.certified}


def cmd_distance(args) -> int:
    path = args.code
    if _is_css_file(path):
        Q = read_css(path)
        if Q.k != 1:
            print(f"error: expected k = 1, got k = {Q.k}", file=sys.stderr)
            return EXIT_VERIFY
        if args.mode == "exact":
            dist = css_distance(Q, args.budget, trials=args.trials, seed=args.seed)
            parts = {"X": dist.dx, "Z": dist.dz}
        else:
            parts = {
                "X": isd_upper_bound(Q.sx, Q.lx, args.trials, args.seed),
                "Z": isd_upper_bound(Q.sz, Q.lz, args.trials, args.seed),
            }
        lower = min(r.lower for r in parts.values())
        upper = min(r.upper for r in parts.values() if r.upper is not None)
        certified = lower == upper
        report = {
            "label": Path(path).stem,
            "n": Q.n,
            "k": Q.k,
            "d": {"lower": lower, "upper": upper, "certified": certified},
            "sides": {side: r.to_dict() for side, r in parts.items()},
            "divisibility": _divisibility(Q),
            "gates": _gate_dict(Q),
            "gamma": round(gamma(Q.n, 1, upper), 3) if upper and upper > 1 else None,
            "lineage": None,
            "seed": args.seed,
            "effort": {"candidates": sum(r.candidates for r in parts.values())},
        }
    else:
        C = read_classical(path)
        if args.mode == "exact":
            rep = classical_min_distance(C, args.budget, trials=args.trials, seed=args.seed)
        else:
            rep = isd_upper_bound(C.generator, None, args.trials, args.seed)
        certified = rep.certified
        report = {
            "label": Path(path).stem,
            "n": C.n,
            "k": C.k,
            "d": _distance_dict(rep),
            "report": rep.to_dict(),
            "seed": args.seed,
            "effort": {"candidates": rep.candidates},
        }
    print(_dump(report), end="")
    if args.mode == "exact" and not certified:
        return EXIT_BUDGET
    return EXIT_OK


def _divisibility(Q) -> str:
    if is_triply_even_span(Q.sx):
        return "triply-even"
    if is_doubly_even_span(Q.sx):
        return "doubly-even"
    return "none"


def _gate_dict(Q) -> dict:
    reports = {
        "H": check_transversal_hadamard(Q),
        "S": check_transversal_diagonal(Q, 2),
        "T": check_transversal_diagonal(Q, 3),
    }
    return {g: r.to_dict() for g, r in reports.items()}


def cmd_verify(args) -> int:
    Q = read_css(args.code)
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    unknown = [c for c in checks if c not in CHECKS]
    if unknown:
        raise UsageError(f"unknown check {unknown[0]!r}; choose from {', '.join(CHECKS)}")
    results = {}
    valid = validate_css(Q)
    results["css"] = bool(valid)
    for c in checks:
        if c == "doubly-even":
            results[c] = bool(is_doubly_even_span(Q.sx))
        elif c == "triply-even":
            results[c] = bool(is_triply_even_span(Q.sx))
        elif c == "clifford":
            results[c] = (
                check_transversal_hadamard(Q).preserves_codespace
                and check_transversal_diagonal(Q, 2).preserves_codespace
            )
        else:
            results[c] = check_transversal_diagonal(Q, 3).preserves_codespace
    for name, ok in results.items():
        print(f"{name}: {'pass' if ok else 'fail'}")
    if not valid:
        for failure in valid.failures:
            print(f"  css check failed: {failure}")
    return EXIT_OK if all(results.values()) else EXIT_VERIFY


def cmd_table(args) -> int:
    catalog = build_catalog(args.max_p, budget=args.budget, seed=args.seed, trials=args.trials)
    _emit(catalog_json(catalog), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="divcodes", description="Divisible CSS codes: construction and verification.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("qr", help="build a quadratic-residue code")
    p.add_argument("--p", type=int, required=True, help="prime length")
    p.add_argument("--extend", action="store_true", help="append an overall parity bit")
    p.add_argument("--out", help="classical code file to write")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_qr)

    p = sub.add_parser("css", help="doubly even CSS code from a type-II self-dual code")
    p.add_argument("--from-selfdual", required=True, dest="from_selfdual")
    p.add_argument("--out")
    p.set_defaults(func=cmd_css)

    p = sub.add_parser("double", help="double a doubly even code against a triply even code")
    p.add_argument("--q1", required=True)
    p.add_argument("--q2", required=True)
    p.add_argument("--out")
    p.add_argument("--budget", type=int, default=4096, help="seam candidates to try")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_double)

    p = sub.add_parser("distance", help="minimum distance report")
    p.add_argument("--code", required=True)
    p.add_argument("--mode", choices=("exact", "sample"), default="exact")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=1000)
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("verify", help="divisibility and transversal gate checks")
    p.add_argument("--code", required=True)
    p.add_argument("--checks", default="clifford")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="regenerate the code table as JSON")
    p.add_argument("--max-p", type=int, required=True, dest="max_p")
    p.add_argument("--out")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=DEFAULT_TABLE_BUDGET)
    p.add_argument("--trials", type=int, default=DEFAULT_TABLE_TRIALS)
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (FormatError, UsageError, DoublingError, DistanceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
