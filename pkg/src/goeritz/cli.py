"""Command-line frontend.

Exit codes: 0 success, 1 mathematically negative verdict, 2 usage error,
3 resource exhaustion.  Verdict-bearing commands accept --json; the sweep
also emits TSV with the pinned column order family, n, strands, logLambda,
normalized, pennerBound, converged.  Words are whitespace-separated signed
integers; strand counts are always passed separately.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import constants, lamination, wicket, wordproblem
from .words import (
    BraidWord,
    compose,
    format_word,
    half_twist,
    inverse,
    parse_word,
    s_map,
)

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_RESOURCES = 3


def _iter_cap(default: int) -> int:
    value = os.environ.get("GOERITZ_MAX_STEPS")
    return int(value) if value is not None else default


def _fmt(value: float) -> str:
    return f"{value:.6g}"


def _parse_tangle(text: str, arcs: int) -> wicket.TrivialTangle:
    if text == "A":
        return wicket.standard_tangle(arcs)
    if text == "B":
        return wicket.tangle_B(arcs)
    if text == "C":
        return wicket.tangle_C(arcs)
    if text.startswith("conj:"):
        return wicket.TrivialTangle(arcs, parse_word(text[5:], 2 * arcs))
    raise ValueError(f"unknown tangle literal {text!r}")


def _emit(payload: dict, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def cmd_braid(args: argparse.Namespace) -> int:
    n = args.strands
    if args.action == "eq":
        a = parse_word(args.words[0], n)
        b = parse_word(args.words[1], n)
        equal = wordproblem.braid_equal(a, b)
        _emit({"equal": equal}, args.json, "equal" if equal else "not equal")
        return EXIT_OK if equal else EXIT_FALSE
    word = parse_word(args.words[0], n)
    reduced = wordproblem.handle_reduce(word)
    _emit(
        {"strands": n, "word": format_word(reduced)},
        args.json,
        format_word(reduced) if reduced.letters else "(empty word)",
    )
    return EXIT_OK


def cmd_wicket(args: argparse.Namespace) -> int:
    word = parse_word(args.word, 2 * args.arcs)
    tangle = _parse_tangle(args.tangle, args.arcs)
    report = wicket.member_sw(word, tangle)
    payload = {"member": report.verdict}
    text = "member"
    if not report.verdict:
        witness = " ".join(str(l) for l in report.witness.letters)
        payload.update({"witness_index": report.witness_index, "witness": witness})
        text = f"not a member: wicket {report.witness_index} maps to {witness}"
    _emit(payload, args.json, text)
    return EXIT_OK if report.verdict else EXIT_FALSE


def cmd_goeritz(args: argparse.Namespace) -> int:
    n = args.bridge
    dec = wicket.BridgeDecomposition(
        n, parse_word(args.top, 2 * n), parse_word(args.bottom, 2 * n)
    )
    word = parse_word(args.word, 2 * n)
    report = wicket.is_goeritz_element(dec, word)
    payload = {"goeritz": report.verdict}
    text = "certified Goeritz element"
    if not report.verdict:
        witness = " ".join(str(l) for l in report.witness.letters)
        payload.update({"witness_index": report.witness_index, "witness": witness})
        text = f"not a Goeritz element: wicket {report.witness_index} maps to {witness}"
    _emit(payload, args.json, text)
    return EXIT_OK if report.verdict else EXIT_FALSE


def cmd_entropy(args: argparse.Namespace) -> int:
    word = parse_word(args.word, args.strands)
    report = lamination.entropy_estimate(
        word, max_iterations=args.max_iter, tolerance=args.tol
    )
    payload = {
        "strands": report.strands,
        "length": report.word_length,
        "logLambda": float(_fmt(report.log_lambda)),
        "converged": report.converged,
        "classification": report.classification,
    }
    text = (
        f"log lambda = {_fmt(report.log_lambda)} "
        f"[{report.classification}, converged={report.converged}]"
    )
    _emit(payload, args.json, text)
    return EXIT_OK if report.converged or report.classification != "inconclusive" else EXIT_RESOURCES


def cmd_sweep(args: argparse.Namespace) -> int:
    # Disk estimates: for small indices the spherical entropy may differ.
    records = lamination.family_sweep(
        args.family,
        range(args.start, args.end + 1),
        max_iterations=args.max_iter,
        tolerance=args.tol,
    )
    if args.json:
        print(
            json.dumps(
                [
                    {
                        "family": r.family,
                        "n": r.n,
                        "strands": r.strands,
                        "logLambda": float(_fmt(r.log_lambda)),
                        "normalized": float(_fmt(r.normalized)),
                        "pennerBound": float(_fmt(r.penner_bound)),
                        "converged": r.converged,
                    }
                    for r in records
                ]
            )
        )
    else:
        print("family\tn\tstrands\tlogLambda\tnormalized\tpennerBound\tconverged")
        for r in records:
            print(
                f"{r.family}\t{r.n}\t{r.strands}\t{_fmt(r.log_lambda)}\t"
                f"{_fmt(r.normalized)}\t{_fmt(r.penner_bound)}\t{r.converged}"
            )
    return EXIT_OK if all(r.converged for r in records) else EXIT_RESOURCES


def cmd_plat(args: argparse.Namespace) -> int:
    n = args.bridge
    dec = wicket.BridgeDecomposition(
        n, parse_word(args.top, 2 * n), parse_word(args.bottom, 2 * n)
    )
    inv = wicket.plat_invariants(dec)
    linking = "-" if inv.linking is None else str(inv.linking)
    _emit(
        {
            "components": inv.components,
            "linking": None if inv.linking is None else inv.linking,
            "crossings": inv.crossings,
        },
        args.json,
        f"components: {inv.components}  |lk|: {linking}  crossings: {inv.crossings}",
    )
    return EXIT_OK


def cmd_mcg(args: argparse.Namespace) -> int:
    n = args.strands
    a = s_map(parse_word(args.words[0], n))
    b = s_map(parse_word(args.words[1], n))
    equal = wordproblem.mcg_equal(a, b)
    _emit({"equal": equal}, args.json, "equal mapping classes" if equal else "distinct mapping classes")
    return EXIT_OK if equal else EXIT_FALSE


def cmd_constants(args: argparse.Namespace) -> int:
    report = constants.solve_R(args.h)
    payload = {
        "h": report.h,
        "m": report.m,
        "R": report.R,
        "ceilR": report.ceil_R,
        "twoRplusTwo": report.two_R_plus_two,
        "quasiconvexityCap": report.quasiconvexity_cap,
        "delta": report.delta,
        "N": report.N,
    }
    text = (
        f"m = {_fmt(report.m)}  R = {_fmt(report.R)}  ceil(R) = {report.ceil_R}\n"
        f"2R+2 = {_fmt(report.two_R_plus_two)} (cap {_fmt(report.quasiconvexity_cap)})\n"
        f"N = max(2K+4, 2K+2*{_fmt(report.delta)}) = {_fmt(report.N)}"
    )
    _emit(payload, args.json, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="goeritz",
        description="Wicket-group certification, braid word problem, and "
        "dilatation estimates on lamination coordinates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("braid", help="word problem utilities")
    p.add_argument("action", choices=["eq", "normalize"])
    p.add_argument("-n", "--strands", type=int, required=True)
    p.add_argument("words", nargs="+")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_braid)

    p = sub.add_parser("wicket", help="wicket group membership")
    p.add_argument("action", choices=["member"])
    p.add_argument("-n", "--arcs", dest="arcs", type=int, required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--tangle", default="A")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_wicket)

    p = sub.add_parser("goeritz", help="certify a Goeritz element")
    p.add_argument("action", choices=["member"])
    p.add_argument("--bridge", type=int, required=True)
    p.add_argument("--top", default="")
    p.add_argument("--bottom", default="")
    p.add_argument("--word", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_goeritz)

    p = sub.add_parser("entropy", help="growth-rate estimate for one braid")
    p.add_argument("-n", "--strands", type=int, required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--max-iter", type=int, default=_iter_cap(200))
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_entropy)

    p = sub.add_parser("sweep", help="normalized-entropy family sweep")
    p.add_argument("--family", choices=["unknot", "hopf"], required=True)
    p.add_argument("--from", dest="start", type=int, default=1)
    p.add_argument("--to", dest="end", type=int, default=8)
    p.add_argument("--max-iter", type=int, default=_iter_cap(4000))
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--json", action="store_true")
    p.add_argument("--tsv", action="store_true", help="TSV is the default text format")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("plat", help="plat invariants of a decomposition")
    p.add_argument("action", choices=["info"])
    p.add_argument("--bridge", type=int, required=True)
    p.add_argument("--top", default="")
    p.add_argument("--bottom", default="")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_plat)

    p = sub.add_parser("mcg", help="mapping-class equality on the sphere")
    p.add_argument("-n", "--strands", type=int, required=True)
    p.add_argument("words", nargs=2)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_mcg)

    p = sub.add_parser("constants", help="the finiteness constants")
    p.add_argument("--h", type=float, default=constants.H_ZERO)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_constants)

    return parser


def run(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except wordproblem.ResourceExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCES
    except (ValueError, AssertionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
