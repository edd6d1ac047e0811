"""Command-line front end.

Subcommands: eval (determinant, optionally with the factorization tree),
classify (membership verdict for rank 2, 3 or 4), witness (explicit tuple
realizing a value), verify (exhaustive lemma checks), sweep (box
enumeration).  Exit codes: 0 for success / member / verified, 1 for a
definite negative (non-member, failed verification, sweep violations),
2 for usage errors or infeasible factorizations.  Values are read and
printed as decimal strings of unbounded size.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from gdet.classify import (
    FactorizationInfeasibleError,
    classify_c22,
    classify_c23,
    classify_c24,
)
from gdet.core import Assignment, FactorTree, det_group, factor_tree
from gdet.sweep import SweepConfig, sweep
from gdet.verify import (
    ALL_LEMMA_IDS,
    PARITY_LEMMA_IDS,
    RESIDUE_LEMMA_IDS,
    SIGNATURE_LEMMA_IDS,
    verify_all,
    verify_d2_residue_lemma,
    verify_impossibility_cases,
    verify_parity_suite,
)
from gdet.witness import family_for, witness_for


def _int_list(raw: str) -> list[int]:
    try:
        return [int(part) for part in raw.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {exc}")


def _print_tree(node: FactorTree, indent: int = 0) -> None:
    vals = ", ".join(str(v) for v in node.values)
    print(f"{'  ' * indent}D{node.rank}({vals}) = {node.value}")
    for child in node.children:
        _print_tree(child, indent + 1)


def _cmd_eval(args: argparse.Namespace) -> int:
    try:
        a = Assignment(args.n, tuple(args.values))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.tree:
        _print_tree(factor_tree(a))
    else:
        print(det_group(a))
    return 0


def _cmd_classify(args: argparse.Namespace) -> int:
    try:
        if args.group == "c2_2":
            verdict = classify_c22(args.value)
        elif args.group == "c2_3":
            verdict = classify_c23(args.value)
        else:
            verdict = classify_c24(args.value, seed=args.seed)
    except FactorizationInfeasibleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(verdict.describe())
    return 0 if verdict.member else 1


def _cmd_witness(args: argparse.Namespace) -> int:
    try:
        family = family_for(args.value, seed=args.seed)
        if family is None:
            verdict = classify_c24(args.value, seed=args.seed)
            print(verdict.describe())
            return 1
        a = witness_for(args.value, seed=args.seed)
    except FactorizationInfeasibleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    params = ", ".join(f"{k}={v}" for k, v in vars(family).items())
    print(f"{type(family).__name__}({params})")
    assert a is not None
    print(",".join(str(v) for v in a.values))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        if args.lemma == "all":
            reports = verify_all(args.window)
        elif args.lemma in RESIDUE_LEMMA_IDS:
            reports = [verify_d2_residue_lemma(args.lemma, args.window)]
        elif args.lemma in PARITY_LEMMA_IDS:
            reports = [r for r in verify_parity_suite() if r.lemma_id == args.lemma]
        elif args.lemma in SIGNATURE_LEMMA_IDS:
            reports = [
                r for r in verify_impossibility_cases() if r.lemma_id == args.lemma
            ]
        else:
            known = ", ".join(ALL_LEMMA_IDS)
            print(f"error: unknown lemma {args.lemma!r} (known: {known})", file=sys.stderr)
            return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    for report in reports:
        print(report.line())
    return 0 if all(r.passed for r in reports) else 1


def _cmd_sweep(args: argparse.Namespace) -> int:
    if args.resume and not args.out:
        print("error: --resume needs --out", file=sys.stderr)
        return 2
    try:
        cfg = SweepConfig(
            n=args.n,
            alphabet=tuple(args.alphabet),
            chunk_size=args.chunk_size,
            worker_count=args.jobs,
            output_path=args.out,
            resume_from=(args.out + ".ckpt") if args.resume else None,
            checkpoint_every=args.checkpoint_every,
            seed=args.seed,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        result = sweep(cfg)
    except (OSError, RuntimeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"tuples: {result.total_enumerated}")
    print(f"distinct values: {result.distinct_values}")
    print(f"violations: {len(result.violations)}")
    for check, value, tup in result.violations[:20]:
        print(f"  {check} failed for {value} at {tup}")
    if result.flagged:
        print(f"flagged (factorization infeasible): {len(result.flagged)}")
    return 0 if result.complete and not result.violations else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gdet", description="Integer group determinants of C2^n."
    )
    parser.add_argument("--seed", type=int, default=None, help="factorization RNG seed")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a determinant")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--values", type=_int_list, required=True)
    p.add_argument("--tree", action="store_true", help="print the factorization tree")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("classify", help="membership verdict for a value")
    p.add_argument("value", type=int)
    p.add_argument("--group", choices=("c2_2", "c2_3", "c2_4"), default="c2_4")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("witness", help="explicit tuple realizing a value")
    p.add_argument("value", type=int)
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("verify", help="exhaustive lemma verification")
    p.add_argument("--lemma", default="all")
    p.add_argument("--window", type=int, default=32)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("sweep", help="enumerate a box of assignments")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alphabet", type=_int_list, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--chunk-size", type=int, default=1 << 16)
    p.add_argument("--checkpoint-every", type=int, default=8)
    p.add_argument("--out", default=None)
    p.add_argument("--resume", action="store_true")
    p.set_defaults(func=_cmd_sweep)
    return parser


def _join_list_flags(argv: list[str]) -> list[str]:
    """Turn '--values -1,0,1' into '--values=-1,0,1'.

    argparse refuses separated values starting with '-' unless they look
    like plain negative numbers, which comma lists do not.
    """
    out = []
    tokens = iter(argv)
    for token in tokens:
        if token in ("--values", "--alphabet"):
            value = next(tokens, None)
            out.append(token if value is None else f"{token}={value}")
        else:
            out.append(token)
    return out


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_join_list_flags(list(argv)))
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    return args.func(args)


def entry() -> None:
    sys.exit(main())
