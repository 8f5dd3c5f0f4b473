"""Deterministic synthetic integer-set generators.

Two workload shapes drive the benchmarks: uniform draws over a range fixed
by a target density (cardinality / range), and Zipf-distributed draws over
a range fixed by a max-to-cardinality ratio, where value v is sampled with
probability proportional to 1 / (v + 1)**skew.  Both resample duplicates
until the requested number of distinct values is reached.

Reproducibility contract: generation uses the Mersenne Twister stream of
``random.Random(seed)`` and the rejection-inversion sampler implemented
below.  The same spec yields the same list on any platform; neither the
PRNG nor the sampler may change without a format version bump.
"""

import math
import random
from dataclasses import dataclass
from typing import List

from .words import MAX_ALLOWED_INTEGER

__all__ = ["GeneratorSpec", "generate", "zipf_sample"]


@dataclass(frozen=True)
class GeneratorSpec:
    """Parameters of one synthetic workload.

    distribution: "uniform" (needs density) or "zipf" (needs
    max_over_cardinality); skew is the Zipf exponent.
    """

    distribution: str
    cardinality: int
    density: float = None
    max_over_cardinality: float = None
    skew: float = 1.0
    seed: int = 0

    def __post_init__(self):
        if self.distribution not in ("uniform", "zipf"):
            raise ValueError(f"unknown distribution {self.distribution!r}")
        if self.cardinality < 1:
            raise ValueError("cardinality must be positive")
        if self.distribution == "uniform":
            if self.density is None or not 0.0 < self.density <= 1.0:
                raise ValueError("uniform spec needs density in (0, 1]")
        else:
            if self.max_over_cardinality is None or self.max_over_cardinality < 1.0:
                raise ValueError("zipf spec needs max_over_cardinality >= 1")
            if self.skew <= 0.0:
                raise ValueError("skew must be positive")
        n = self.value_range()
        if self.cardinality > n:
            raise ValueError(
                f"infeasible spec: cardinality {self.cardinality} > range {n}")
        if n > MAX_ALLOWED_INTEGER + 1:
            raise ValueError(f"range {n} exceeds {MAX_ALLOWED_INTEGER + 1}")

    def value_range(self) -> int:
        """Number of candidate values; draws fall in [0, range)."""
        if self.distribution == "uniform":
            return math.ceil(self.cardinality / self.density)
        return round(self.cardinality * self.max_over_cardinality)


class _ZipfSampler:
    """Bounded Zipf sampling by rejection inversion.

    Draws k in {1..n} with P(k) proportional to k**-skew using the
    flattened-histogram inversion of Hörmann and Derflinger; exact for any
    skew > 0 without materializing the n-point distribution.
    """

    __slots__ = ("n", "skew", "_hx0", "_hn", "_s")

    def __init__(self, n: int, skew: float):
        self.n = n
        self.skew = skew
        self._hx0 = self._h_integral(1.5) - 1.0
        self._hn = self._h_integral(n + 0.5)
        self._s = 2.0 - self._h_integral_inverse(
            self._h_integral(2.5) - self._h(2.0))

    def _h(self, x: float) -> float:
        return x ** -self.skew

    def _h_integral(self, x: float) -> float:
        if self.skew == 1.0:
            return math.log(x)
        return (x ** (1.0 - self.skew) - 1.0) / (1.0 - self.skew)

    def _h_integral_inverse(self, u: float) -> float:
        if self.skew == 1.0:
            return math.exp(u)
        t = 1.0 + u * (1.0 - self.skew)
        if t < 0.0:
            t = 0.0
        return t ** (1.0 / (1.0 - self.skew))

    def sample(self, rng: random.Random) -> int:
        if self.n == 1:
            return 1
        while True:
            u = self._hn + rng.random() * (self._hx0 - self._hn)
            x = self._h_integral_inverse(u)
            k = int(x + 0.5)
            if k < 1:
                k = 1
            elif k > self.n:
                k = self.n
            if k - x <= self._s or u >= self._h_integral(k + 0.5) - self._h(k):
                return k


def zipf_sample(rng: random.Random, n: int, skew: float) -> int:
    """One draw from {0..n-1} with P(v) proportional to (v + 1)**-skew."""
    return _ZipfSampler(n, skew).sample(rng) - 1


def generate(spec: GeneratorSpec) -> List[int]:
    """Produce the spec's sorted list of distinct integers.

    Exactly spec.cardinality values in [0, spec.value_range()); the same
    spec always yields the same list.
    """
    n = spec.value_range()
    k = spec.cardinality
    rng = random.Random(spec.seed)
    if k == n:
        return list(range(n))
    if spec.distribution == "uniform":
        if 2 * k <= n:
            chosen = set()
            add = chosen.add
            randrange = rng.randrange
            while len(chosen) < k:
                add(randrange(n))
            return sorted(chosen)
        # dense case: cheaper to draw the excluded values
        excluded = set()
        add = excluded.add
        randrange = rng.randrange
        while len(excluded) < n - k:
            add(randrange(n))
        return [v for v in range(n) if v not in excluded]
    sampler = _ZipfSampler(n, spec.skew)
    chosen = set()
    add = chosen.add
    while len(chosen) < k:
        add(sampler.sample(rng) - 1)
    return sorted(chosen)
