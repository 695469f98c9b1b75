"""Seeded Monte Carlo: critical values and power of the uniformity statistic.

Reproducibility contract
------------------------
Every replicate draws from its own Philox substream, derived by jumping the
base generator ``stream_id`` blocks ahead of the seed. Replicate i of a
null simulation uses stream i; replicate i of an alternative (power)
simulation uses stream ALT_STREAM_OFFSET + i, so the two never share
variates. Identical (seed, stream_id) always reproduces the same sequence,
regardless of execution order or worker count, which makes every table
cell a pure function of (seed, n, m, alpha, reps, alternative).
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .distributions import DistributionSpec
from .spacing import Sample

# Alternative-distribution replicates live in their own block of substreams.
ALT_STREAM_OFFSET = 1 << 32

CRITICAL = "critical"
POWER = "power"


@dataclass(frozen=True)
class RngSpec:
    """A 64-bit seed plus a substream index.

    (seed, stream_id) pins the variate sequence exactly; substreams are
    non-overlapping blocks of the keyed Philox cycle (counter jump-ahead).
    """

    seed: int = 0
    stream_id: int = 0

    def __post_init__(self):
        if not 0 <= int(self.seed) < 2**64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed!r}")
        if int(self.stream_id) < 0:
            raise ValueError(f"stream_id must be nonnegative, got {self.stream_id!r}")

    def generator(self) -> np.random.Generator:
        return np.random.Generator(np.random.Philox(key=self.seed).jumped(self.stream_id))

    def substream(self, offset: int) -> "RngSpec":
        return RngSpec(self.seed, self.stream_id + offset)


def _as_rng(rng) -> RngSpec:
    if isinstance(rng, RngSpec):
        return rng
    return RngSpec(int(rng))


@dataclass(frozen=True)
class SimulationTable:
    """A grid of (n, m) -> critical value or power, plus its provenance."""

    kind: str
    alpha: float
    reps: int
    seed: int
    rows: dict[tuple[int, int], float]
    alternative: DistributionSpec | None = None

    def __post_init__(self):
        if self.kind not in (CRITICAL, POWER):
            raise ValueError(f"unknown table kind {self.kind!r}")
        if not 0.0 < self.alpha < 1.0:
            raise ValueError(f"alpha must lie in (0, 1), got {self.alpha}")
        for (n, m), value in self.rows.items():
            if m < 1 or 2 * m > n:
                raise ValueError(f"invalid cell (n={n}, m={m}) in table")
            if self.kind == CRITICAL and not value > 0.0:
                raise ValueError(f"critical value at (n={n}, m={m}) must be > 0")
            if self.kind == POWER and not 0.0 <= value <= 1.0:
                raise ValueError(f"power at (n={n}, m={m}) must lie in [0, 1]")


def _validate_cell(n, m):
    if int(n) != n or n < 2:
        raise ValueError(f"sample size must be an integer >= 2, got {n!r}")
    if int(m) != m or m < 1 or 2 * m > n:
        raise ValueError(f"window m={m!r} outside [1, n/2] for n={n}")


def _validate_run(alpha, reps):
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must lie in (0, 1), got {alpha}")
    if int(reps) != reps or reps < 1000:
        raise ValueError(f"need at least 1000 replications, got {reps!r}")


def _variates(dist: DistributionSpec | None, n: int, gen: np.random.Generator):
    """n draws from ``dist`` (None means standard uniform)."""
    if dist is None:
        return gen.random(n)
    if dist.kind == "uniform":
        a, b = dist.params
        return a + (b - a) * gen.random(n)
    if dist.kind == "beta":
        a, b = dist.params
        if a == 1.0:
            # Exact inverse cdf of beta(1, b).
            return 1.0 - (1.0 - gen.random(n)) ** (1.0 / b)
        x = gen.gamma(a, size=n)
        y = gen.gamma(b, size=n)
        return x / (x + y)
    raise ValueError(f"unsupported sampling law {dist.describe()}")


def sample_uniform(n, rng=0) -> Sample:
    """n standard-uniform variates, pinned by (seed, stream_id)."""
    if int(n) != n or n < 1:
        raise ValueError(f"sample size must be a positive integer, got {n!r}")
    return Sample(_as_rng(rng).generator().random(int(n)))


def sample_beta(a, b, n, rng=0) -> Sample:
    """n beta(a, b) variates: exact inverse cdf when a == 1, else the
    two-gamma ratio construction."""
    if int(n) != n or n < 1:
        raise ValueError(f"sample size must be a positive integer, got {n!r}")
    dist = DistributionSpec("beta", (a, b))
    return Sample(_variates(dist, int(n), _as_rng(rng).generator()))


def _sample_matrix(dist, n, reps, rng: RngSpec, offset: int) -> np.ndarray:
    """(reps, n) matrix whose row i comes from substream stream_id+offset+i."""
    base = np.random.Philox(key=rng.seed)
    start = rng.stream_id + offset
    out = np.empty((reps, n), dtype=np.float64)
    for i in range(reps):
        gen = np.random.Generator(base.jumped(start + i))
        out[i] = _variates(dist, n, gen)
    return out


def _quantile_rank(alpha: float, reps: int) -> int:
    """1-based order statistic defining the empirical (1-alpha) quantile."""
    k = math.ceil((1.0 - alpha) * reps)
    return min(max(k, 1), reps)


def _null_statistics(n, m_values, reps, rng) -> dict[int, np.ndarray]:
    xs = _sample_matrix(None, n, reps, rng, offset=0)
    xs.sort(axis=1)
    return {m: kernels.spacing_stat_batch(xs, m) for m in m_values}


def critical_value(n, m, alpha, reps=10000, rng=0) -> float:
    """Empirical (1-alpha) quantile of the statistic over ``reps`` uniform
    null samples of size n; deterministic given the seed."""
    _validate_cell(n, m)
    _validate_run(alpha, reps)
    rng = _as_rng(rng)
    stats = _null_statistics(int(n), [int(m)], int(reps), rng)[int(m)]
    return float(np.sort(stats)[_quantile_rank(alpha, int(reps)) - 1])


def power(n, m, alpha, alt: DistributionSpec, reps=10000, rng=0, critical=None) -> float:
    """Proportion of alternative-distributed samples whose statistic reaches
    the critical value.

    The critical value is resimulated from the same seed's dedicated null
    substreams unless one is injected via ``critical``.
    """
    _validate_cell(n, m)
    _validate_run(alpha, reps)
    rng = _as_rng(rng)
    if critical is None:
        critical = critical_value(n, m, alpha, reps, rng)
    xs = _sample_matrix(alt, int(n), int(reps), rng, offset=ALT_STREAM_OFFSET)
    xs.sort(axis=1)
    stats = kernels.spacing_stat_batch(xs, int(m))
    return float(np.mean(stats >= critical))


def _table_column(args):
    """All cells of one sample size; the parallel unit of build_table."""
    kind, n, m_values, alpha, reps, seed, stream_id, alt = args
    rng = RngSpec(seed, stream_id)
    null_stats = _null_statistics(n, m_values, reps, rng)
    rank = _quantile_rank(alpha, reps)
    column = {}
    if kind == CRITICAL:
        for m, stats in null_stats.items():
            column[m] = float(np.sort(stats)[rank - 1])
    else:
        alt_xs = _sample_matrix(alt, n, reps, rng, offset=ALT_STREAM_OFFSET)
        alt_xs.sort(axis=1)
        for m, stats in null_stats.items():
            crit = float(np.sort(stats)[rank - 1])
            column[m] = float(np.mean(kernels.spacing_stat_batch(alt_xs, m) >= crit))
    return n, column


def build_table(
    kind,
    n_list,
    m_list,
    alpha=0.05,
    reps=10000,
    rng=0,
    alt: DistributionSpec | None = None,
    workers=1,
) -> SimulationTable:
    """Simulate a (n, m) grid of critical values or powers.

    Pairs violating m <= n/2 are skipped and left absent from the result.
    The table is a pure function of its arguments and the seed; the worker
    count only changes how the independent sample-size columns are
    scheduled.
    """
    if kind not in (CRITICAL, POWER):
        raise ValueError(f"table kind must be '{CRITICAL}' or '{POWER}', got {kind!r}")
    if kind == POWER and alt is None:
        raise ValueError("a power table needs an alternative distribution")
    n_values = _unique_positive(n_list, "sample size", minimum=2)
    m_values = _unique_positive(m_list, "window", minimum=1)
    _validate_run(alpha, reps)
    rng = _as_rng(rng)

    jobs = []
    for n in n_values:
        valid = [m for m in m_values if 2 * m <= n]
        if valid:
            jobs.append((kind, n, valid, float(alpha), int(reps), rng.seed, rng.stream_id, alt))

    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=int(workers)) as pool:
            columns = dict(pool.map(_table_column, jobs))
    else:
        columns = dict(map(_table_column, jobs))

    rows = {
        (n, m): value
        for n, column in columns.items()
        for m, value in column.items()
    }
    return SimulationTable(
        kind=kind,
        alpha=float(alpha),
        reps=int(reps),
        seed=rng.seed,
        rows=rows,
        alternative=alt,
    )


def _unique_positive(values, label, *, minimum):
    out = []
    for v in values:
        if int(v) != v or v < minimum:
            raise ValueError(f"{label} entries must be integers >= {minimum}, got {v!r}")
        if int(v) not in out:
            out.append(int(v))
    if not out:
        raise ValueError(f"empty {label} grid")
    return out
