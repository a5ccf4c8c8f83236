"""Command-line front end: gen, encode, decode, verify, bench.

Exit codes: 0 success, 1 verification or benchmark assertion failure,
2 usage error (bad flags, malformed files, unknown names).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bench as bench_mod
from . import verify as verify_mod
from .codec import (
    CLASSIC,
    GA,
    CleanupMemory,
    EncodedRecord,
    SymbolTable,
    classic_decode,
    classic_encode,
    ga_decode,
    ga_encode,
    gen_symbols,
)

DEFAULT_GA_THRESHOLD = 0.5


def _split_names(text: str, flag: str) -> list:
    names = [part.strip() for part in text.split(",")]
    if not all(names):
        raise ValueError(f"{flag} needs a comma-separated list of names")
    return names


def _parse_pairs(text: str) -> list:
    pairs = []
    for chunk in text.split(","):
        role, eq, filler = chunk.partition("=")
        if not eq or not role.strip() or not filler.strip():
            raise ValueError(f"bad pair {chunk!r}, expected role=filler")
        pairs.append((role.strip(), filler.strip()))
    return pairs


def _parse_weights(text: str) -> list:
    try:
        return [float(part) for part in text.split(",")]
    except ValueError:
        raise ValueError(f"bad weight list {text!r}") from None


def _emit(args, payload: dict, text: str) -> None:
    print(json.dumps(payload, indent=2) if args.json else text)


def cmd_gen(args) -> int:
    roles = _split_names(args.roles, "--roles")
    fillers = _split_names(args.fillers, "--fillers")
    table = gen_symbols(args.seed, args.n, args.k, roles, fillers)
    table.save(args.out)
    _emit(
        args,
        {"path": args.out, "n": table.n, "k": table.k,
         "roles": len(table.roles), "fillers": len(table.fillers)},
        f"wrote symbol table n={table.n} k={table.k} "
        f"({len(table.roles)} roles, {len(table.fillers)} fillers) -> {args.out}",
    )
    return 0


def cmd_encode(args) -> int:
    table = SymbolTable.load(args.infile)
    pairs = _parse_pairs(args.pairs)
    if args.codec == GA:
        weights = _parse_weights(args.weights) if args.weights else None
        record = ga_encode(table, pairs, weights)
        summary = f"{len(record.payload)} terms"
    else:
        if args.weights:
            raise ValueError("--weights applies to the ga codec only")
        record = classic_encode(table, pairs, args.seed)
        summary = "1 bit string"
    record.save(args.out)
    _emit(
        args,
        {"path": args.out, "codec": record.codec, "n": record.n,
         "terms": len(record.payload) if record.codec == GA else 1},
        f"wrote {record.codec} record ({summary}, n={record.n}) -> {args.out}",
    )
    return 0


def cmd_decode(args) -> int:
    record = EncodedRecord.load(args.infile)
    table = SymbolTable.load(args.memory)
    if record.codec == GA:
        res = ga_decode(record, table, args.role)
        threshold = DEFAULT_GA_THRESHOLD if args.threshold is None else args.threshold
        below = abs(res.score) < threshold
        _emit(
            args,
            {"role": args.role, "filler": res.filler, "score": res.score,
             "ambiguous": res.ambiguous, "residual_terms": res.residual_terms,
             "below_threshold": below},
            f"role={args.role} filler={res.filler} score={res.score:g} "
            f"ambiguous={'yes' if res.ambiguous else 'no'} "
            f"residual-terms={res.residual_terms} "
            f"below-threshold={'yes' if below else 'no'}",
        )
    else:
        if args.role not in table.roles:
            raise ValueError(f"unknown role {args.role!r}")
        memory = CleanupMemory.from_table(table, "hamming")
        res = classic_decode(record.bits, table.roles[args.role], memory)
        below = args.threshold is not None and res.distance > args.threshold
        _emit(
            args,
            {"role": args.role, "filler": res.filler, "distance": res.distance,
             "ambiguous": res.ambiguous, "below_threshold": below},
            f"role={args.role} filler={res.filler} distance={res.distance} "
            f"ambiguous={'yes' if res.ambiguous else 'no'}"
            + (" below-threshold=yes" if below else ""),
        )
    return 0


def cmd_verify(args) -> int:
    report = verify_mod.run_verification(args.m)
    _emit(args, report.to_json(), report.format_text())
    return 0 if report.passed else 1


def cmd_bench(args) -> int:
    sizes = tuple(args.n) if args.n else bench_mod.DEFAULT_SIZES
    result = bench_mod.run_bench(sizes, args.seed)
    _emit(args, result, bench_mod.format_text(result))
    return 0 if result.get("passed", True) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bladebind",
        description="Role/filler records over blade algebra and classic XOR codecs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a seeded random symbol table")
    p.add_argument("--n", type=int, required=True, help="string dimension")
    p.add_argument("--k", type=int, required=True, help="filler support width")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--roles", default="r1,r2,r3", help="comma-separated role names")
    p.add_argument("--fillers", default="f1,f2,f3", help="comma-separated filler names")
    p.add_argument("--out", default="symbols.json")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(handler=cmd_gen)

    p = sub.add_parser("encode", help="encode role=filler pairs into a record")
    p.add_argument("--in", dest="infile", required=True, help="symbol table file")
    p.add_argument("--pairs", required=True, help="role=filler[,role=filler...]")
    p.add_argument("--codec", choices=[GA, CLASSIC], default=GA)
    p.add_argument("--weights", help="comma-separated reals (ga codec only)")
    p.add_argument("--seed", type=int, default=0, help="tie seed (classic chunking)")
    p.add_argument("--out", default="record.json")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(handler=cmd_encode)

    p = sub.add_parser("decode", help="unbind a role and clean up the filler")
    p.add_argument("--in", dest="infile", required=True, help="record file")
    p.add_argument("--memory", required=True, help="symbol table file for clean-up")
    p.add_argument("--role", required=True)
    p.add_argument(
        "--threshold",
        type=float,
        default=None,
        help="ga: min |score| before flagging (default 0.5); classic: max distance",
    )
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(handler=cmd_decode)

    p = sub.add_parser("verify", help="replay the pinned four-bit worked record")
    p.add_argument("--m", type=int, default=verify_mod.FIXTURE_M,
                   help="Pauli factor count (the fixture pins 4)")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("bench", help="time the sign kernel and the codecs")
    p.add_argument("--n", type=int, action="append",
                   help="size to measure (repeatable; default 1024 and 10000)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(handler=cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
