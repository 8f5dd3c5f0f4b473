"""Measurement harness behind the bench CLI command.

Each benchmark point is one generator spec evaluated for some structures
and metrics.  Timings use the monotonic nanosecond clock, run a couple of
warm-up iterations, and report the arithmetic mean over the requested
repetitions (default 100).  Memory is reported as 32-bit words per stored
element; no object-header accounting of any host runtime is attempted.
"""

import random
import time
from dataclasses import dataclass, replace
from typing import Dict, List, Sequence

from .datagen import GeneratorSpec, generate
from .plain import bitmap_from_sorted, list_op
from .sets import ConciseSet, Op, WahSet, perform_operation

__all__ = [
    "BenchmarkResult",
    "STRUCTURES",
    "METRICS",
    "METRIC_NAMES",
    "CSV_COLUMNS",
    "run_point",
    "run_suite",
]

STRUCTURES = ("concise", "wah", "bitmap", "array")
METRICS = ("words", "intersect", "union", "xor", "diff", "append", "remove")
METRIC_NAMES = {
    "words": "wordsPerElement",
    "intersect": "intersectNanos",
    "union": "unionNanos",
    "xor": "xorNanos",
    "diff": "diffNanos",
    "append": "appendNanos",
    "remove": "removeNanos",
}
CSV_COLUMNS = ("structure", "distribution", "cardinality", "density_or_maxratio",
               "skew", "seed", "metric", "value", "repetitions")

_BINARY_OPS = {"intersect": Op.AND, "union": Op.OR, "xor": Op.XOR, "diff": Op.ANDNOT}
_LIST_OPS = {"intersect": "and", "union": "or", "xor": "xor", "diff": "andnot"}
# second operand of binary metrics comes from the same spec, reseeded
_PARTNER_SEED_OFFSET = 0x5EED


@dataclass(frozen=True)
class BenchmarkResult:
    structure: str
    metric: str  # canonical metric name, e.g. wordsPerElement
    spec: GeneratorSpec
    value: float
    repetitions: int

    def csv_row(self) -> List[str]:
        s = self.spec
        knob = s.density if s.distribution == "uniform" else s.max_over_cardinality
        return [
            self.structure,
            s.distribution,
            str(s.cardinality),
            repr(knob),
            repr(s.skew),
            str(s.seed),
            self.metric,
            f"{self.value:.6g}",
            str(self.repetitions),
        ]


def _mean_ns(fn, reps: int) -> float:
    for _ in range(2 if reps > 2 else 1):  # warm-up, excluded from the mean
        fn()
    clock = time.perf_counter_ns
    total = 0
    for _ in range(reps):
        t0 = clock()
        fn()
        total += clock() - t0
    return total / reps


def _build_bitmap_by_appends(values: Sequence[int]) -> int:
    return bitmap_from_sorted(values)


def _array_without(values: List[int], victim: int) -> List[int]:
    return [v for v in values if v != victim]


def run_point(spec: GeneratorSpec, structures: Sequence[str],
              metrics: Sequence[str], reps: int) -> List[BenchmarkResult]:
    """All requested (structure, metric) measurements for one spec point."""
    for s in structures:
        if s not in STRUCTURES:
            raise ValueError(f"unknown structure {s!r}")
    for m in metrics:
        if m not in METRICS:
            raise ValueError(f"unknown metric {m!r}")
    values = generate(spec)
    need_partner = any(m in _BINARY_OPS for m in metrics)
    partner = (generate(replace(spec, seed=spec.seed + _PARTNER_SEED_OFFSET))
               if need_partner else [])
    victims = random.Random(spec.seed + 1).choices(values, k=min(reps, 32))

    built: Dict[str, object] = {}
    for s in structures:
        if s == "concise":
            built[s] = (ConciseSet(values), ConciseSet(partner))
        elif s == "wah":
            built[s] = (WahSet(values), WahSet(partner))
        elif s == "bitmap":
            built[s] = (bitmap_from_sorted(values), bitmap_from_sorted(partner))
        else:
            built[s] = (list(values), list(partner))

    results = []
    for metric in metrics:
        for s in structures:
            a, b = built[s]
            if metric == "words":
                if s in ("concise", "wah"):
                    words = a.word_count
                elif s == "bitmap":
                    words = (values[-1] + 1 + 31) // 32 if values else 0
                else:
                    words = len(values)
                results.append(BenchmarkResult(
                    s, METRIC_NAMES[metric], spec, words / spec.cardinality, 1))
                continue
            if metric in _BINARY_OPS:
                if s in ("concise", "wah"):
                    op = _BINARY_OPS[metric]
                    fn = lambda: perform_operation(a, b, op)
                elif s == "bitmap":
                    if metric == "intersect":
                        fn = lambda: a & b
                    elif metric == "union":
                        fn = lambda: a | b
                    elif metric == "xor":
                        fn = lambda: a ^ b
                    else:
                        fn = lambda: a & ~b
                else:
                    lop = _LIST_OPS[metric]
                    fn = lambda: list_op(a, b, lop)
                value = _mean_ns(fn, reps)
            elif metric == "append":
                if s == "concise":
                    fn = lambda: ConciseSet(values)
                elif s == "wah":
                    fn = lambda: WahSet(values)
                elif s == "bitmap":
                    fn = lambda: _build_bitmap_by_appends(values)
                else:
                    fn = lambda: list(values)
                value = _mean_ns(fn, reps) / spec.cardinality
            else:  # remove
                it = iter(victims * (reps // len(victims) + 2))
                if s in ("concise", "wah"):
                    fn = lambda: a.remove(next(it))
                elif s == "bitmap":
                    fn = lambda: a & ~(1 << next(it))
                else:
                    fn = lambda: _array_without(a, next(it))
                value = _mean_ns(fn, reps)
            results.append(BenchmarkResult(s, METRIC_NAMES[metric], spec, value, reps))
    return results


def _run_point_args(args) -> List[BenchmarkResult]:
    return run_point(*args)


def run_suite(specs: Sequence[GeneratorSpec], structures: Sequence[str],
              metrics: Sequence[str], reps: int,
              parallel: int = 0) -> List[BenchmarkResult]:
    """Measure every spec point; optionally fan points out to processes."""
    if parallel and len(specs) > 1:
        import multiprocessing

        jobs = [(sp, tuple(structures), tuple(metrics), reps) for sp in specs]
        with multiprocessing.Pool(parallel) as pool:
            chunks = pool.map(_run_point_args, jobs)
        return [r for chunk in chunks for r in chunk]
    out = []
    for sp in specs:
        out.extend(run_point(sp, structures, metrics, reps))
    return out
