"""Command-line interface: generate, encode, inspect, combine, benchmark.

Sets travel between commands either as newline-delimited decimal integers
(the text interchange form) or as serialized .cncs/.wahs files.  The bench
command emits one CSV row per (structure, metric, spec point).

Exit codes: 0 success, 1 runtime failure (bad data, infeasible spec, I/O),
2 usage error.
"""

import argparse
import csv
import os
import sys
from typing import List, Optional

from .bench import CSV_COLUMNS, METRICS, STRUCTURES, run_suite
from .datagen import GeneratorSpec, generate
from .errors import SerializationError
from .sets import ConciseSet, Op, WahSet, load_set, perform_operation

_OPS = {"and": Op.AND, "or": Op.OR, "xor": Op.XOR, "andnot": Op.ANDNOT}


def _read_values(path: str) -> List[int]:
    stream = sys.stdin if path == "-" else open(path, "r", encoding="ascii")
    try:
        return [int(line) for line in stream if line.strip()]
    finally:
        if stream is not sys.stdin:
            stream.close()


def _write_text(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="ascii") as f:
            f.write(text)


def _cmd_gen(args) -> int:
    spec = _spec_from_args(args.dist, args.cardinality, args.density,
                           args.max_ratio, args.skew, args.seed)
    values = generate(spec)
    _write_text(args.output, "".join(f"{v}\n" for v in values))
    return 0


def _cmd_encode(args) -> int:
    values = sorted(set(_read_values(args.input)))
    cls = WahSet if args.format == "wah" else ConciseSet
    data = cls(values).serialize()
    with open(args.output, "wb") as f:
        f.write(data)
    return 0


def _cmd_op(args) -> int:
    with open(args.left, "rb") as f:
        a = load_set(f.read())
    with open(args.right, "rb") as f:
        b = load_set(f.read())
    result = perform_operation(a, b, _OPS[args.operation])
    with open(args.output, "wb") as f:
        f.write(result.serialize())
    return 0


def _cmd_inspect(args) -> int:
    with open(args.file, "rb") as f:
        s = load_set(f.read())
    mixed = isinstance(s, ConciseSet)
    lines = [
        f"format: {'concise' if mixed else 'wah'}",
        f"words: {s.word_count}",
        f"max: {'-' if s.max is None else s.max}",
        f"cardinality: {s.cardinality()}",
    ]
    base = 0
    for idx, w in enumerate(s.words):
        if w >= 0x80000000:
            bits = (w & 0x7FFFFFFF).bit_count()
            span = 31
            desc = f"literal bits={bits}"
        else:
            blocks = (w & s._CMASK) + s._CADJ
            span = 31 * blocks
            kind = "fill 1's" if w & 0x40000000 else "fill 0's"
            if mixed:
                desc = f"{kind} pos={(w >> 25) & 31} blocks={blocks}"
            else:
                desc = f"{kind} blocks={blocks}"
        lines.append(f"#{idx} {w:08X}h {desc} covers {base}..{base + span - 1}")
        base += span
    _write_text(args.output, "".join(line + "\n" for line in lines))
    return 0


def _spec_from_args(dist, cardinality, density, max_ratio, skew, seed) -> GeneratorSpec:
    if dist == "uniform":
        if density is None:
            raise ValueError("--density is required for uniform workloads")
        return GeneratorSpec("uniform", cardinality, density=density, seed=seed)
    if max_ratio is None:
        raise ValueError("--max-ratio is required for zipf workloads")
    return GeneratorSpec("zipf", cardinality, max_over_cardinality=max_ratio,
                         skew=skew, seed=seed)


def _csv_list(kind, allowed=None):
    def parse(text: str):
        items = [kind(part) for part in text.split(",") if part]
        if not items:
            raise argparse.ArgumentTypeError("empty list")
        if allowed:
            for item in items:
                if item not in allowed:
                    raise argparse.ArgumentTypeError(
                        f"{item!r} not one of {', '.join(allowed)}")
        return items
    return parse


def _cmd_bench(args) -> int:
    knobs = args.density if args.dist == "uniform" else args.max_ratio
    if knobs is None:
        raise ValueError("--density (uniform) or --max-ratio (zipf) is required")
    specs = [
        _spec_from_args(args.dist, card, knob if args.dist == "uniform" else None,
                        knob if args.dist == "zipf" else None, args.skew, seed)
        for card in args.cardinality
        for knob in knobs
        for seed in args.seed
    ]
    rows = run_suite(specs, args.structures, args.metric, args.reps,
                     parallel=args.parallel)
    out = sys.stdout if args.output in (None, "-") else open(
        args.output, "w", newline="", encoding="ascii")
    try:
        writer = csv.writer(out)
        writer.writerow(CSV_COLUMNS)
        for r in rows:
            writer.writerow(r.csv_row())
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="concise",
                                description="Compressed integer set toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="emit a synthetic sorted integer list")
    g.add_argument("--dist", choices=("uniform", "zipf"), default="uniform")
    g.add_argument("--cardinality", type=int, required=True)
    g.add_argument("--density", type=float)
    g.add_argument("--max-ratio", type=float)
    g.add_argument("--skew", type=float, default=1.0)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--output", "-o")
    g.set_defaults(func=_cmd_gen)

    e = sub.add_parser("encode", help="compress newline-delimited integers")
    e.add_argument("input", help="text file of integers, or - for stdin")
    e.add_argument("--output", "-o", required=True)
    e.add_argument("--format", choices=("concise", "wah"), default="concise")
    e.set_defaults(func=_cmd_encode)

    i = sub.add_parser("inspect", help="dump the words of a serialized set")
    i.add_argument("file")
    i.add_argument("--output", "-o")
    i.set_defaults(func=_cmd_inspect)

    o = sub.add_parser("op", help="combine two serialized sets")
    o.add_argument("left")
    o.add_argument("right")
    o.add_argument("operation", choices=sorted(_OPS))
    o.add_argument("--output", "-o", required=True)
    o.set_defaults(func=_cmd_op)

    b = sub.add_parser("bench", help="run benchmark points, emit CSV")
    b.add_argument("--dist", choices=("uniform", "zipf"), default="uniform")
    b.add_argument("--cardinality", type=_csv_list(int), default=[10000])
    b.add_argument("--density", type=_csv_list(float))
    b.add_argument("--max-ratio", type=_csv_list(float))
    b.add_argument("--skew", type=float, default=1.0)
    b.add_argument("--seed", type=_csv_list(int), default=[0])
    b.add_argument("--structures", type=_csv_list(str, STRUCTURES),
                   default=list(STRUCTURES))
    b.add_argument("--metric", type=_csv_list(str, METRICS), default=["words"])
    b.add_argument("--reps", type=int, default=100)
    b.add_argument("--parallel", type=int, default=0,
                   help="worker processes for independent spec points")
    b.add_argument("--output", "-o")
    b.set_defaults(func=_cmd_bench)
    return p


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BrokenPipeError:
        # downstream reader (e.g. head) closed stdout: exit quietly
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 1
    except (ValueError, SerializationError, OSError) as exc:
        print(f"concise: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
