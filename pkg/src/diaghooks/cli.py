"""Command-line front end; a thin layer of parsing and formatting over the library.

Exit codes are part of the contract: 0 success, 1 disagreement between two
computation routes, 2 parse error, 3 bad modulus/residue, 4 not a core,
5 bad quotient, 6 not self-conjugate.
"""

import argparse
import json
import sys
from dataclasses import asdict

from .abacus import from_core_and_quotient, is_p_core, p_core, p_quotient, render_ascii
from .bisequence import diagonal_bisequence, is_symmetric_p_core
from .errors import (
    BadModulus,
    BadPartitionSyntax,
    BadResidue,
    CenterResidue,
    DiagHookError,
    EvenModulus,
    InconsistentQuotient,
    InvalidDeltaSet,
    LengthMismatch,
    NonMonotonic,
    NonPositivePart,
    NotACore,
    NotStrictlyDecreasing,
    NotSymmetric,
    NotSymmetricBisequence,
    NotSymmetricQuotient,
    WrongQuotientLength,
)
from .formula import delta_general
from .partitions import DeltaSet, Partition, delta_of, from_delta_lengths
from .verify import run_verify

_EXIT_CODES: tuple[tuple[tuple[type, ...], int], ...] = (
    ((BadPartitionSyntax, NonMonotonic, NonPositivePart, InvalidDeltaSet, NotStrictlyDecreasing, LengthMismatch), 2),
    ((BadModulus, EvenModulus, BadResidue, CenterResidue), 3),
    ((NotACore,), 4),
    ((WrongQuotientLength, NotSymmetricQuotient, InconsistentQuotient), 5),
    ((NotSymmetric, NotSymmetricBisequence), 6),
)


def parse_partition(text: str) -> Partition:
    """Parse comma-separated parts with optional exponents, e.g. '6^2,2'."""
    text = text.strip()
    if not text:
        return Partition(())
    parts: list[int] = []
    pos = 0
    for token in text.split(","):
        stripped = token.strip()
        base, caret, exp = stripped.partition("^")
        if not base.isdigit() or (caret and not exp.isdigit()):
            raise BadPartitionSyntax(f"bad token {stripped!r} at position {pos}")
        parts.extend([int(base)] * (int(exp) if caret else 1))
        pos += len(token) + 1
    return Partition(tuple(parts))


def parse_int_list(text: str) -> list[int]:
    out = []
    pos = 0
    for token in text.split(","):
        stripped = token.strip()
        if not stripped.isdigit():
            raise BadPartitionSyntax(f"bad integer {stripped!r} at position {pos}")
        out.append(int(stripped))
        pos += len(token) + 1
    return out


def _input_partition(text: str, from_delta: bool) -> Partition:
    if from_delta:
        return from_delta_lengths(parse_int_list(text))
    return parse_partition(text)


def _lengths(delta: DeltaSet) -> str:
    return ",".join(str(d) for d in delta.lengths) if delta.lengths else "(empty)"


def cmd_core(args) -> int:
    la = parse_partition(args.partition)
    core = p_core(la, args.p)
    quotient = p_quotient(la, args.p)
    if args.json:
        print(json.dumps({
            "partition": list(la.parts),
            "p": args.p,
            "core": list(core.parts),
            "quotient": [list(c.parts) for c in quotient],
            "weights": {"total": la.weight, "core": core.weight, "quotient": [c.weight for c in quotient]},
        }))
    else:
        print(f"core: {core}")
        print(f"quotient: {', '.join(str(c) for c in quotient)}")
        print(f"weights: n={la.weight} core={core.weight} quotient={[c.weight for c in quotient]}")
    return 0


def cmd_quotient(args) -> int:
    la = parse_partition(args.partition)
    quotient = p_quotient(la, args.p)
    if args.json:
        print(json.dumps({
            "partition": list(la.parts),
            "p": args.p,
            "quotient": [list(c.parts) for c in quotient],
        }))
    else:
        for g, c in enumerate(quotient):
            print(f"{g}: {c}")
    return 0


def cmd_delta(args) -> int:
    core = _input_partition(args.core, args.from_delta)
    quotient = tuple(parse_partition(q) for q in (args.quotient or []))
    p = args.p
    formula = delta_general(core, quotient, p) if args.method in ("formula", "both") else None
    rebuilt = from_core_and_quotient(core, quotient, p)
    oracle = delta_of(rebuilt) if args.method in ("oracle", "both") else None
    shown = formula if formula is not None else oracle
    expected = core.weight + p * sum(c.weight for c in quotient)
    conserved = shown.total == expected
    agree = (formula == oracle) if formula is not None and oracle is not None else None
    if args.json:
        print(json.dumps({
            "core": list(core.parts),
            "quotient": [list(c.parts) for c in quotient],
            "p": p,
            "partition": list(rebuilt.parts),
            "n": expected,
            "delta_formula": list(formula.lengths) if formula is not None else None,
            "delta_oracle": list(oracle.lengths) if oracle is not None else None,
            "conserved": conserved,
            "agree": agree,
        }))
    else:
        print(f"partition: {rebuilt}  (n={expected})")
        if formula is not None:
            print(f"delta (formula): {_lengths(formula)}")
        if oracle is not None:
            print(f"delta (oracle):  {_lengths(oracle)}")
        print(f"conservation: sum={shown.total} n={expected} -> {'OK' if conserved else 'FAIL'}")
        if agree is not None:
            print(f"verdict: {'AGREE' if agree else 'DISAGREE'}")
    if agree is False or not conserved:
        return 1
    return 0


def cmd_check_core(args) -> int:
    la = _input_partition(args.partition, args.from_delta)
    if not la.is_symmetric:
        raise NotSymmetric(f"{la} is not self-conjugate")
    by_criterion = is_symmetric_p_core(diagonal_bisequence(la), args.p)
    by_hooks = is_p_core(la, args.p)
    agree = by_criterion == by_hooks
    if args.json:
        print(json.dumps({
            "partition": list(la.parts),
            "p": args.p,
            "criterion": by_criterion,
            "direct": by_hooks,
            "agree": agree,
            "is_core": by_hooks,
        }))
    else:
        print(f"criterion: {'CORE' if by_criterion else 'NOT A CORE'}")
        print(f"direct:    {'CORE' if by_hooks else 'NOT A CORE'}")
        print(f"verdict: {'CORE' if by_hooks else 'NOT A CORE'}" if agree else "verdict: DISAGREE")
    return 0 if agree else 1


def cmd_render(args) -> int:
    la = parse_partition(args.partition)
    print(render_ascii(la, args.p))
    return 0


def cmd_verify(args) -> int:
    moduli = parse_int_list(args.primes)
    report = run_verify(args.n_max, moduli)
    if args.json:
        payload = {
            "n_max": report.n_max,
            "primes": list(report.moduli),
            "cells": report.cells,
            "failures": report.failures,
            "first_failure": asdict(report.first_failure) if report.first_failure else None,
        }
        if report.first_failure:
            payload["first_failure"]["partition"] = list(report.first_failure.partition)
        print(json.dumps(payload))
    else:
        print(f"checked {report.cells} (lambda,p) cells, {report.failures} failures")
        if report.first_failure:
            f = report.first_failure
            print(f"first failure: n={f.n} partition={Partition(f.partition)} p={f.p} check={f.check}")
            print(f"  {f.detail}")
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diaghooks",
        description="Diagonal hook lengths of self-conjugate partitions via p-cores and p-quotients.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_p(sp):
        sp.add_argument("--p", type=int, required=True, help="number of runners (>= 2)")

    sp = sub.add_parser("core", help="p-core and p-quotient of a partition")
    sp.add_argument("partition", help="e.g. '3,2,1' or '6^2,2'; empty string for the empty partition")
    add_p(sp)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_core)

    sp = sub.add_parser("quotient", help="p-quotient of a partition")
    sp.add_argument("partition")
    add_p(sp)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_quotient)

    sp = sub.add_parser("delta", help="diagonal hook lengths from a core and quotient")
    sp.add_argument("--core", default="", help="core partition (or delta lengths with --from-delta)")
    sp.add_argument("--from-delta", action="store_true", help="read --core as a list of diagonal hook lengths")
    sp.add_argument("--quotient", action="append", default=[], metavar="PARTITION",
                    help="one quotient component; repeat exactly p times")
    add_p(sp)
    sp.add_argument("--method", choices=("formula", "oracle", "both"), default="both")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_delta)

    sp = sub.add_parser("check-core", help="test a self-conjugate partition for p-core-ness both ways")
    sp.add_argument("partition", help="partition (or delta lengths with --from-delta)")
    sp.add_argument("--from-delta", action="store_true")
    add_p(sp)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_check_core)

    sp = sub.add_parser("render", help="ASCII abacus with the axis marked")
    sp.add_argument("partition")
    add_p(sp)
    sp.set_defaults(func=cmd_render)

    sp = sub.add_parser("verify", help="exhaustive formula-vs-diagram sweep")
    sp.add_argument("--n-max", type=int, default=20)
    sp.add_argument("--primes", default="3,5,7", help="comma-separated moduli")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DiagHookError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        for types, code in _EXIT_CODES:
            if isinstance(exc, types):
                return code
        return 2


if __name__ == "__main__":
    sys.exit(main())
