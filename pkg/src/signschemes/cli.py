"""Command-line front end.

Subcommands: gen (render a generated scheme), normalize (build a move
certificate, optionally with a trace), check (replay a certificate
file), verify (run the corroboration suites), bound (the discriminant
bound calculator).

Exit codes: 0 success or accepted, 1 verification failure or rejected
certificate, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from .bounds import discriminant_bound
from .errors import (
    AlgorithmInvariantError,
    BoundViolationError,
    DimensionError,
    DomainError,
    ResourceLimitError,
    TriangleIndexError,
)
from .moves import Certificate, certificate_from_json, certificate_to_json, certificate_to_obj
from .normalize import (
    build_certificate,
    check_certificate,
    render_trace,
    trace_build,
    trace_to_obj,
)
from .oracle import (
    report_to_json,
    verify_bound,
    verify_identities,
    verify_inequalities,
    verify_monotonicity,
)
from .schemes import format_signs, generate_scheme, parse_signs

SEED_ENV = "SIGNSCHEMES_SEED"

# Tokens shaped like sign vectors, e.g. '-,-,-' or '-1,1' or '--+'.
_DASH_VECTOR = re.compile(r"-[+\-01,\s]*")


def _escape_dash_vectors(argv):
    # argparse reads a leading '-' as an option prefix, but sign vectors
    # may legitimately start with one. A leading space keeps argparse
    # happy; parse_signs strips it. The bare '--' separator is kept.
    return [
        " " + tok if tok != "--" and _DASH_VECTOR.fullmatch(tok) else tok
        for tok in argv
    ]


def _cmd_gen(args) -> int:
    print(generate_scheme(parse_signs(args.signs)).render())
    return 0


def _cmd_normalize(args) -> int:
    eps = parse_signs(args.signs)
    if args.trace:
        steps = trace_build(eps)
        cert = Certificate(eps, steps[-1].moves)
    else:
        steps = None
        cert = build_certificate(eps)
    if args.json:
        if steps is not None:
            obj = {
                "certificate": certificate_to_obj(cert),
                "trace": trace_to_obj(eps, steps)["steps"],
            }
            print(json.dumps(obj, separators=(",", ":")))
        else:
            print(certificate_to_json(cert))
        return 0
    if steps is not None:
        print(render_trace(eps, steps))
    elif cert.moves:
        for m in cert.moves:
            print(m)
    else:
        print("already normalized")
    return 0


def _cmd_check(args) -> int:
    eps = parse_signs(args.signs)
    try:
        with open(args.certificate, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: cannot read {args.certificate}: {exc}", file=sys.stderr)
        return 2
    try:
        cert = certificate_from_json(text)
    except (ValueError, KeyError, TypeError) as exc:
        print(f"error: certificate parse error: {exc}", file=sys.stderr)
        return 2
    report = check_certificate(eps, cert)
    if args.json:
        obj = {
            "eps": list(report.eps),
            "accepted": report.accepted,
            "source_matches": report.source_matches,
            "disjoint": report.disjoint,
            "preconditions_ok": report.preconditions_ok,
            "final_is_reference": report.final_is_reference,
            "residual_wrong": [list(p) for p in report.residual_wrong],
            "failures": list(report.failures),
        }
        print(json.dumps(obj, separators=(",", ":")))
    else:
        print(f"sign vector: {format_signs(eps)}")
        print(f"moves: {len(cert.moves)}")
        print(f"sign vector matches: {_yn(report.source_matches)}")
        print(f"touched positions disjoint: {_yn(report.disjoint)}")
        print(f"move preconditions hold: {_yn(report.preconditions_ok)}")
        print(f"final scheme is target: {_yn(report.final_is_reference)}")
        if report.residual_wrong:
            spots = ", ".join(f"({i},{j})" for i, j in report.residual_wrong)
            print(f"residual wrong positions: {spots}")
        for line in report.failures:
            print(f"fail: {line}")
        print("accepted" if report.accepted else "rejected")
    return 0 if report.accepted else 1


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _cmd_verify(args) -> int:
    if args.seed is not None:
        seed = args.seed
    else:
        raw = os.environ.get(SEED_ENV, "0")
        try:
            seed = int(raw)
        except ValueError:
            print(f"error: {SEED_ENV}={raw!r} is not an integer", file=sys.stderr)
            return 2
    suites = (
        ("lemmas", "monotonicity", "bound")
        if args.suite == "all"
        else (args.suite,)
    )
    named_reports = []
    for suite in suites:
        if suite == "lemmas":
            named_reports.append(("identities", verify_identities(args.n_max, seed=seed)))
            named_reports.append(
                ("inequalities", verify_inequalities(args.samples, seed=seed))
            )
        elif suite == "monotonicity":
            named_reports.append(
                (
                    "monotonicity",
                    verify_monotonicity(
                        min(args.n_max, 8),
                        samples_per_move=max(10, args.samples // 100),
                        seed=seed,
                    ),
                )
            )
        else:
            for n in range(1, args.n_max + 1):
                named_reports.append(
                    (f"bound n={n}", verify_bound(n, budget=args.samples, seed=seed))
                )
    violations = []
    for name, rep in named_reports:
        violations.extend(f"{name}: {v}" for v in getattr(rep, "violations", ()))
    if args.json:
        obj = {
            "seed": seed,
            "reports": [
                {"suite": name, **json.loads(report_to_json(rep))}
                for name, rep in named_reports
            ],
            "violations": len(violations),
        }
        print(json.dumps(obj, separators=(",", ":")))
    else:
        for name, rep in named_reports:
            print(f"{name}: {_summarize(rep)}")
        for line in violations:
            print(f"violation: {line}")
        print("verify: OK" if not violations else f"verify: {len(violations)} violation(s)")
    return 0 if not violations else 1


def _summarize(rep) -> str:
    cls = type(rep).__name__
    if cls == "IdentityReport":
        return (
            f"vectors={rep.vectors_checked} squares={rep.squares_checked} "
            f"sums={rep.sums_checked} parity={rep.parity_checked} "
            f"seed={rep.seed} violations={len(rep.violations)}"
        )
    if cls == "InequalityReport":
        return (
            f"samples={rep.samples} corners={rep.corner_checks} "
            f"max_residual={rep.max_residual:.3g} seed={rep.seed} "
            f"violations={len(rep.violations)}"
        )
    if cls == "MonotonicityReport":
        return (
            f"certificates={rep.certificates} moves={rep.moves_checked} "
            f"samples_per_move={rep.samples_per_move} seed={rep.seed} "
            f"violations={len(rep.violations)}"
        )
    return (
        f"best={rep.best_value:.12g} bound={rep.bound} method={rep.method} "
        f"attained={_yn(rep.attained)} evaluations={rep.evaluations} seed={rep.seed}"
    )


def _cmd_bound(args) -> int:
    res = discriminant_bound(args.degree, args.regulator, args.gamma)
    src = "table" if res.gamma_from_table else "input"
    print(
        f"degree {res.degree}, regulator {res.regulator:.12g}, "
        f"gamma {res.gamma:.12g} ({src})"
    )
    print(f"log|d| <= {res.value:.12g}")
    print(f"  main term:     {res.main_term:.12g}")
    print(f"  additive term: {res.additive_term:.12g}  [floor(n/2) * log 4]")
    print(
        f"  classical additive term, for comparison: "
        f"{res.comparison_additive:.12g}  [n * log n]"
    )
    print(
        "note: applies to totally real primitive fields; "
        "field properties are not checked"
    )
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="signschemes",
        description=(
            "Sign-vector triangular schemes, rewrite-move certificates, "
            "and cube polynomial maxima."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="render the scheme generated by a sign vector")
    p.add_argument("signs", help="sign vector, e.g. '+,-,+' or '+-+' or '1,-1,1'")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("normalize", help="build a move certificate for a sign vector")
    p.add_argument("signs", help="sign vector")
    p.add_argument("--trace", action="store_true", help="show the column-by-column trace")
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    p.set_defaults(func=_cmd_normalize)

    p = sub.add_parser("check", help="replay a certificate file against a sign vector")
    p.add_argument("signs", help="sign vector")
    p.add_argument("certificate", help="path to a certificate JSON file")
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("verify", help="run the corroboration suites")
    p.add_argument(
        "--suite",
        choices=("lemmas", "monotonicity", "bound", "all"),
        default="all",
        help="which suite to run (default: all)",
    )
    p.add_argument("--n-max", type=int, default=6, help="largest dimension to sweep")
    p.add_argument("--samples", type=int, default=10_000, help="sampling budget")
    p.add_argument(
        "--seed",
        type=int,
        default=None,
        help=f"random seed (default: ${SEED_ENV} or 0)",
    )
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bound", help="discriminant bound from degree and regulator")
    p.add_argument("degree", type=int, help="field degree n >= 2")
    p.add_argument("regulator", type=float, help="regulator, positive")
    p.add_argument(
        "gamma",
        type=float,
        nargs="?",
        default=None,
        help="Hermite constant of rank n-1 (default: built-in table, n-1 <= 8)",
    )
    p.set_defaults(func=_cmd_bound)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_escape_dash_vectors(list(argv)))
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (DomainError, DimensionError, TriangleIndexError, ResourceLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (BoundViolationError, AlgorithmInvariantError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
