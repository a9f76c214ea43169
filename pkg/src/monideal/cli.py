"""Command line front end.

Exit codes: 0 success (all checks hold), 1 a VIOLATED verdict or failed
self-check, 2 usage or parse error, 3 a resource cap was exceeded.
"""
from __future__ import annotations

import argparse
import sys
import warnings
from fractions import Fraction

from . import __version__
from .errors import (
    ConfigError,
    DomainError,
    IdealSyntaxError,
    InternalConsistencyError,
    ResourceLimitError,
    UnsupportedIdealError,
)
from .harness import ALL_CHECKS, DEFAULT_CHECKS, SweepConfig, sweep, verify_ideal
from .lattice import MonomialIdeal, colength, order
from .multiplier import k_level, multiplier_ideal
from .newton import (
    complement_volume,
    dual_normals,
    integral_closure,
    lct,
    multiplicity,
    scaled_multiplicity,
)
from .parse import format_ideal, parse_ideal, parse_ideal_list
from .radial import (
    H_volume_check,
    ProofGadgetParams,
    f_monotonicity_check,
    lemma_Q_check,
    uJ_exclusion_check,
)
from .reports import ReportDocument, Verdict, emit_json, ideal_payload

EXIT_OK, EXIT_VIOLATED, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


def rational(text: str) -> Fraction:
    try:
        c = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")
    if c <= 0:
        raise argparse.ArgumentTypeError(f"c must be positive, got {text}")
    return c


def _grid(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad grid {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS keeps a subcommand from resetting a --json given before it
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit a JSON report document")

    ideal_args = argparse.ArgumentParser(add_help=False)
    ideal_args.add_argument("ideal", help='ideal such as "(x^5, y^4, z^2)", or - to read one per line from stdin')
    ideal_args.add_argument("--dim", type=int, default=None, help="ambient dimension")

    p = argparse.ArgumentParser(prog="monideal", description=__doc__.splitlines()[0])
    p.add_argument("--json", action="store_true", help="emit a JSON report document")
    p.add_argument("--version", action="version", version=f"monideal {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("info", parents=[common, ideal_args], help="length, e, lct, closure, normals")
    s.add_argument("--c", type=rational, default=None)

    s = sub.add_parser("multiplier", parents=[common, ideal_args], help="multiplier ideal I(a^c)")
    s.add_argument("--c", type=rational, required=True)

    s = sub.add_parser("verify", parents=[common, ideal_args], help="all theorem checks on one ideal")
    s.add_argument("--c", type=rational, action="append", default=None)

    s = sub.add_parser("sweep", parents=[common], help="checks over seeded random ideals")
    s.add_argument("--n", type=int, action="append", default=None, help="dimension (repeatable)")
    s.add_argument("--count", type=int, default=200, help="ideals per dimension")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--max-exp", type=int, default=6)
    s.add_argument("--c", type=rational, action="append", default=None)
    s.add_argument("--check", action="append", choices=ALL_CHECKS, default=None)
    s.add_argument("--workers", type=int, default=1)

    s = sub.add_parser("radial", parents=[common, ideal_args], help="symmetrisation lab (n = 2, 3)")
    s.add_argument("--c", type=rational, default=Fraction(1))
    s.add_argument("--resolution", type=int, default=None)
    s.add_argument("--tol", type=float, default=1e-6)
    s.add_argument("--seed", type=int, default=0)

    s = sub.add_parser("gadget", parents=[common], help="K_i, f(a) and hyperplane checks for (n, k)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--grid", type=_grid, default=None, help="comma-separated a values")
    s.add_argument("--samples", type=int, default=1_000_000)
    s.add_argument("--seed", type=int, default=0)
    return p


def _ideals(args) -> list[MonomialIdeal]:
    if args.ideal == "-":
        return parse_ideal_list(sys.stdin.read(), args.dim)
    return [parse_ideal(args.ideal, args.dim)]


def _info(a: MonomialIdeal, c) -> dict:
    out = {
        "ideal": ideal_payload(a),
        "text": format_ideal(a),
        "length": colength(a),
        "multiplicity": multiplicity(a),
        "complement_volume": complement_volume(a),
        "lct": lct(a),
        "integral_closure": ideal_payload(integral_closure(a)),
        "normals": [list(v) for v in dual_normals(a).normals],
    }
    if c is not None:
        out["c"] = c
        out["scaled_multiplicity"] = scaled_multiplicity(a, c)
        out["multiplier_ideal"] = ideal_payload(multiplier_ideal(a, c))
    return out


def _multiplier(a: MonomialIdeal, c) -> dict:
    J = multiplier_ideal(a, c)
    return {
        "ideal": ideal_payload(a),
        "c": c,
        "multiplier_ideal": ideal_payload(J),
        "text": format_ideal(J),
        "order": order(J),
        "k": k_level(a, c),
    }


def _fmt(x) -> str:
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict) and set(x) == {"n", "gens"}:
        return format_ideal(MonomialIdeal._derived(x["n"], x["gens"]))
    if isinstance(x, list) and x and isinstance(x[0], tuple | list) and isinstance(x[0][0], Fraction):
        return ", ".join("(" + ", ".join(str(v) for v in row) + ")" for row in x)
    return str(x)


def _print_text(doc: ReportDocument, out):
    for res in doc.results:
        for key, val in res.items():
            if key != "ideal":
                print(f"{key:>20}: {_fmt(val)}", file=out)
        print(file=out)
    for r in doc.reports:
        label = r.name if r.ideal is None else f"{r.name} {format_ideal(r.ideal)}"
        if r.c is not None:
            label += f" c={r.c}"
        line = f"[{r.verdict.value}] {label}"
        if r.verdict is Verdict.VIOLATED:
            line += f"  witness={r.witness}  (implementation bug: the statement is a theorem)"
        print(line, file=out)
    for s in doc.skipped:
        print(f"[skipped] {s['check']}: {s['reason']}", file=out)
    if doc.reports or doc.skipped:
        summary = ", ".join(f"{k}={v}" for k, v in doc.summary.items())
        print(f"summary: {summary}", file=out)


def _exit_code(doc: ReportDocument) -> int:
    if any(r.verdict is Verdict.VIOLATED for r in doc.reports):
        return EXIT_VIOLATED
    if doc.skipped:
        return EXIT_RESOURCE
    return EXIT_OK


def run_command(argv=None, out=None) -> int:
    """Parse argv, run the subcommand, write its output; returns the exit code."""
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            doc = _dispatch(args)
        for w in caught:
            print(f"warning: {w.message}", file=sys.stderr)
    except IdealSyntaxError as exc:
        print(f"error: {exc}\n{exc.caret()}", file=sys.stderr)
        return EXIT_USAGE
    except (UnsupportedIdealError, DomainError, ConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"error: resource cap exceeded: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except InternalConsistencyError as exc:
        print(f"internal consistency failure (bug): {exc}", file=sys.stderr)
        return EXIT_VIOLATED
    if args.json:
        out.write(emit_json(doc).decode("utf-8"))
    else:
        _print_text(doc, out)
    return _exit_code(doc)


def _dispatch(args) -> ReportDocument:
    cmd = args.command
    if cmd == "info":
        results = [_info(a, args.c) for a in _ideals(args)]
        return ReportDocument({"command": "info", "c": args.c}, [], results=results)
    if cmd == "multiplier":
        results = [_multiplier(a, args.c) for a in _ideals(args)]
        return ReportDocument({"command": "multiplier", "c": args.c}, [], results=results)
    if cmd == "verify":
        cs = args.c or [Fraction(1)]
        docs = [verify_ideal(a, cs) for a in _ideals(args)]
        reports = [r for d in docs for r in d.reports]
        skipped = [s for d in docs for s in d.skipped]
        config = {"command": "verify", "cs": cs, "checks": list(DEFAULT_CHECKS)}
        return ReportDocument(config, reports, skipped)
    if cmd == "sweep":
        config = SweepConfig(
            dims=tuple(args.n or (2, 3)),
            count=args.count,
            seed=args.seed,
            max_exp=args.max_exp,
            cs=tuple(args.c or SweepConfig().cs),
            checks=tuple(args.check or DEFAULT_CHECKS),
            workers=args.workers,
        )
        doc = sweep(config)
        doc.config = dict(doc.config, command="sweep")
        return doc
    if cmd == "radial":
        reports = []
        for a in _ideals(args):
            res = args.resolution or {2: 512, 3: 64}.get(a.n, 64)
            reports.append(lemma_Q_check(a, args.c, res, tol=args.tol, seed=args.seed))
            reports.append(uJ_exclusion_check(a, args.c))
        config = {"command": "radial", "c": args.c, "resolution": args.resolution,
                  "tolerance": args.tol, "seed": args.seed}
        return ReportDocument(config, reports)
    if cmd == "gadget":
        params = ProofGadgetParams(args.n, args.k, args.grid or [])
        reports = [f_monotonicity_check(params)]
        if 2 <= args.n <= 4:
            q, r = params.q, params.r
            for a in sorted({params.n + params.k, params.n + params.k + 2}):
                if a > r * (q + 2):
                    reports.append(H_volume_check(args.n, r, q, a, args.samples, args.seed))
        config = {"command": "gadget", "n": args.n, "k": args.k, "samples": args.samples,
                  "seed": args.seed}
        return ReportDocument(config, reports)
    raise ConfigError(f"unknown command {cmd}")


def main(argv=None) -> int:
    return run_command(argv)


if __name__ == "__main__":
    sys.exit(main())
