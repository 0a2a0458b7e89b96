"""Command line front end.  Exit codes: 0 success, 1 failed check, 2 bad input."""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path
from typing import Optional

from .algorithm import AlgorithmSeq, seq_product
from .catalog import CATALOG, to_sequency
from .config import SizeLimitError, active_limits
from .dot import export_dot
from .factory import (
    build,
    enumerate_bit_index_members,
    enumerate_members,
    factorize,
    sample_member,
)
from .groups import (
    count_algorithms,
    count_algorithms_simplified,
    count_bit_index_algorithms,
)
from .membership import NotMemberError, check_corner_condition, check_membership, spreading_matrix
from .oracle import evaluate, hadamard
from .textio import (
    AlgorithmDocument,
    ParseError,
    format_document,
    format_factors,
    format_sequence,
    parse_document,
    parse_factors,
)

__all__ = ["main"]


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _check_one(P: AlgorithmSeq, mode: str) -> tuple[bool, Optional[str]]:
    if mode == "fast":
        report = check_membership(P)
        return report.passed, report.witness
    if mode == "oracle":
        ok = bool((evaluate(P) == hadamard(P.n)).all())
        return ok, None if ok else "computed matrix differs from the transform"
    ok = check_corner_condition(P)
    return ok, None if ok else "a central partial product has a nonzero bottom-right corner"


def _cmd_check(args) -> int:
    mode = "oracle" if args.oracle else "corners" if args.corners else "fast"
    failures = 0
    for path in args.files:
        P = parse_document(_read(path)).seq
        ok, reason = _check_one(P, mode)
        if ok:
            print(f"PASS {mode} {path}")
        else:
            failures += 1
            print(f"FAIL {mode} {path}: {reason}")
    return 1 if failures else 0


def _cmd_count(args) -> int:
    n = args.n
    print(f"n={n}")
    print(f"members             {count_algorithms(n)}")
    print(f"members-simplified  {count_algorithms_simplified(n)}")
    print(f"bit-index           {count_bit_index_algorithms(n)}")
    return 0


def _format_row(P: AlgorithmSeq, table: bool) -> str:
    if not table:
        return format_sequence(P)
    mats = "; ".join(m.to_text() for m in P)
    prod = seq_product(P, 0, P.n).to_text()
    x = spreading_matrix(P).to_text()
    return f"{mats} | product {prod} | X {x}"


def _cmd_enumerate(args) -> int:
    source = enumerate_bit_index_members if args.bit_index else enumerate_members
    reference = hadamard(args.n) if args.verify_oracle else None
    raw = 0
    distinct = 0
    verified = 0
    failed = 0
    seen: set[str] = set()
    for P in source(args.n, dedupe=False):
        raw += 1
        if args.dedupe:
            k = P.key()
            if k in seen:
                continue
            seen.add(k)
        distinct += 1
        if reference is not None:
            if (evaluate(P) == reference).all():
                verified += 1
            else:
                failed += 1
        print(_format_row(P, args.format == "table"))
    summary = f"# raw={raw}"
    if args.dedupe:
        summary += f" distinct={distinct}"
    if reference is not None:
        summary += f" verified={verified}"
    print(summary)
    return 1 if failed else 0


def _cmd_sample(args) -> int:
    P = sample_member(args.n, args.seed)
    meta = {"n": str(args.n)}
    if args.seed is not None:
        meta["seed"] = str(args.seed)
    sys.stdout.write(format_document(AlgorithmDocument(P, meta)))
    return 0


def _cmd_factorize(args) -> int:
    P = parse_document(_read(args.file)).seq
    print(format_factors(factorize(P)))
    return 0


def _cmd_build(args) -> int:
    f = parse_factors(_read(args.file))
    print(format_sequence(build(f)))
    return 0


def _cmd_catalog(args) -> int:
    P = CATALOG[args.name](args.n)
    if args.sequency:
        P = to_sequency(P)
    print(format_sequence(P))
    return 0


def _cmd_export_dot(args) -> int:
    P = parse_document(_read(args.file)).seq
    text = export_dot(P)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s]
    for n in sizes:
        P = sample_member(n, seed=n)
        best = min(
            _timed(check_membership, P) for _ in range(args.repeat)
        )
        print(f"n={n} min_ms={best * 1e3:.3f}")
    guard = active_limits().oracle_max_n
    try:
        hadamard(guard + 1)
        print(f"oracle accepted n={guard + 1}, guard not active")
    except SizeLimitError:
        print(f"oracle refused n={guard + 1} (limit {guard})")
    return 0


def _timed(fn, *fn_args) -> float:
    t0 = time.perf_counter()
    fn(*fn_args)
    return time.perf_counter() - t0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wht",
        description="Construct, verify and export fast Walsh-Hadamard transform algorithms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="verify sequence files")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--fast", action="store_true", help="structural check (default)")
    g.add_argument("--oracle", action="store_true", help="compare against the dense transform")
    g.add_argument("--corners", action="store_true", help="corner condition only")
    p.add_argument("files", nargs="+", help=".alg files, or - for stdin")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("count", help="closed-form algorithm counts")
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("enumerate", help="list all members at a small size")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--bit-index", action="store_true", help="permutation-matrix stages only")
    p.add_argument("--dedupe", action="store_true", help="drop duplicate sequences")
    p.add_argument("--verify-oracle", action="store_true", help="verify each against the transform")
    p.add_argument("--format", choices=("alg", "table"), default="alg")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("sample", help="draw a uniform random member")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=_cmd_sample)

    p = sub.add_parser("factorize", help="recover the (B, Q) coordinates of a member")
    p.add_argument("file")
    p.set_defaults(func=_cmd_factorize)

    p = sub.add_parser("build", help="build a member from a factor file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("catalog", help="print a named reference algorithm")
    p.add_argument("name", choices=sorted(CATALOG))
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--sequency", action="store_true", help="reorder output rows to sequency")
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("export-dot", help="render the dataflow as DOT")
    p.add_argument("file")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_export_dot)

    p = sub.add_parser("bench", help="time the fast check across sizes")
    p.add_argument("--sizes", default="4,8,16,32,64")
    p.add_argument("--repeat", type=int, default=5)
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except NotMemberError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ParseError, SizeLimitError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
