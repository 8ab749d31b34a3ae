"""
Stats.

The Monte Carlo harness: seeded ensembles of the continuous time dynamics,
and the estimators that compare them with the kernel and the macroscopic
layer.

Every replica draws from its own `RngStream(seed, replica)`, so a report is a
function of the spec alone, whatever the worker count. Replicas run through
`joblib` in fixed size batches and are reduced in replica order.
"""

from __future__ import annotations

import math
import time
import typing

import joblib
import numpy as np

from akpz.abc.ensemble import EnsembleReport
from akpz.abc.ensemble import EnsembleSpec
from akpz.abc.ensemble import QueryStatistics
from akpz.abc.laws import RngStream
from akpz.abc.results import Estimate
from akpz.abc.results import FrequencyReport
from akpz.abc.results import FrequencyRow
from akpz.dynamics import ctmc_run
from akpz.errors import DomainException
from akpz.errors import InsufficientSamplesException
from akpz.errors import InvalidArgumentException
from akpz.geometry import green_covariance
from akpz.geometry import limit_shape
from akpz.geometry import limit_shape_extended
from akpz.geometry import omega
from akpz.interlacing import classify_lozenge
from akpz.interlacing import height
from akpz.interlacing import packed_initial
from akpz.internal.logger import logger
from akpz.kernel import corr_det

if typing.TYPE_CHECKING:
    from akpz.abc.points import MacroPoint
    from akpz.abc.points import SpaceTimePoint
    from akpz.enums import LozengeType
    from akpz.internal.types import FloatArray

__all__ = (
    "BOOTSTRAP_RESAMPLES",
    "VARIANCE_TARGET",
    "ensemble_samples",
    "run_ensemble",
    "ols_slope",
    "variance_slope",
    "shape_error",
    "mean_height_ratio",
    "covariance_pair",
    "frequency_vs_determinant",
)

_logger = logger.getChild("stats")

BOOTSTRAP_RESAMPLES: typing.Final[int] = 200
"""Resamples behind the variance slope interval."""
BOOTSTRAP_STREAM: typing.Final[int] = 1 << 40
"""The replica index reserved for bootstrap randomness."""
BATCH_PER_JOB: typing.Final[int] = 8
"""Replicas per worker between two deadline checks."""
VARIANCE_TARGET: typing.Final[float] = 1.0 / (2.0 * math.pi**2)
"""The growth rate of `Var h` in `ln t` inside the curved region."""
Z_CRITICAL: typing.Final[float] = 1.959963984540054
"""The two sided 95% normal quantile."""


def _replica_heights(
    spec: EnsembleSpec, alphas: typing.Sequence[float] | None, replica: int
) -> list[int]:
    generator = RngStream(seed=spec.seed, replica=replica).generator()
    state = packed_initial(spec.n)
    clock = 0.0
    out: list[int] = []
    for t in spec.times:
        state = ctmc_run(state, t - clock, generator, alphas=alphas)
        clock = t
        out.extend(height(state, x, level) for x, level in spec.query_points)
    return out


def _run_replicas(
    fn: typing.Callable[..., typing.Any],
    args: tuple[typing.Any, ...],
    replicas: int,
    jobs: int,
    deadline: float | None,
) -> tuple[list[typing.Any], bool, float]:
    start = time.perf_counter()
    results: list[typing.Any] = []
    batch = max(1, jobs) * BATCH_PER_JOB
    with joblib.Parallel(n_jobs=jobs) as parallel:
        for first in range(0, replicas, batch):
            if deadline is not None and time.perf_counter() - start > deadline:
                break
            stop = min(first + batch, replicas)
            results.extend(parallel(joblib.delayed(fn)(*args, replica) for replica in range(first, stop)))
    elapsed = time.perf_counter() - start
    complete = len(results) == replicas
    if not complete:
        _logger.warning(f"deadline of {deadline}s reached after {len(results)} of {replicas} replicas")
    return results, complete, elapsed


def ensemble_samples(
    spec: EnsembleSpec,
    *,
    jobs: int = 1,
    deadline: float | None = None,
    alphas: typing.Sequence[float] | None = None,
) -> tuple[FloatArray, bool, float]:
    """
    Ensemble samples.

    The raw height samples of an ensemble, one row per replica and one
    column per observable, time-major.

    Returns
    -------
    tuple[numpy.ndarray, bool, float]
        The samples, whether every replica ran, and the wall time.
    """
    results, complete, elapsed = _run_replicas(_replica_heights, (spec, alphas), spec.replicas, jobs, deadline)
    columns = len(spec.times) * len(spec.query_points)
    samples = np.asarray(results, dtype=np.float64).reshape(len(results), columns)
    return samples, complete, elapsed


def run_ensemble(
    spec: EnsembleSpec,
    *,
    jobs: int = 1,
    deadline: float | None = None,
    alphas: typing.Sequence[float] | None = None,
) -> EnsembleReport:
    """
    Run ensemble.

    Run `spec.replicas` independent packed starts and summarise the heights.

    Parameters
    ----------
    spec
        The ensemble.
    jobs
        Worker count for `joblib`; -1 uses every core.
    deadline
        Optional wall clock budget in seconds. When it runs out, the report
        covers the replicas finished so far and is marked incomplete.
    alphas
        Optional per level clock rates.

    Raises
    ------
    InsufficientSamplesException
        Raised when fewer than 2 replicas finished.
    """
    samples, complete, elapsed = ensemble_samples(spec, jobs=jobs, deadline=deadline, alphas=alphas)
    count = samples.shape[0]
    if count < 2:
        raise InsufficientSamplesException(f"{count} replicas finished, at least 2 are needed")
    means = samples.mean(axis=0)
    variances = samples.var(axis=0, ddof=1)
    covariance = np.atleast_2d(np.cov(samples, rowvar=False, ddof=1))
    queries: list[QueryStatistics] = []
    column = 0
    for t in spec.times:
        for x, level in spec.query_points:
            queries.append(
                QueryStatistics(
                    x=x,
                    n=level,
                    t=t,
                    mean=float(means[column]),
                    variance=float(variances[column]),
                    stderr=float(math.sqrt(variances[column] / count)),
                )
            )
            column += 1
    _logger.debug(f"ensemble of {count} replicas, {column} observables, {elapsed:.2f}s")
    return EnsembleReport(
        spec=spec,
        queries=queries,
        covariance=covariance.tolist(),
        replicas=count,
        complete=complete,
        wall_time=elapsed,
        seeds=list(range(count)),
    )


def ols_slope(xs: typing.Sequence[float] | FloatArray, ys: typing.Sequence[float] | FloatArray) -> float:
    """The ordinary least squares slope of `ys` against `xs`."""
    x = np.asarray(xs, dtype=np.float64)
    y = np.asarray(ys, dtype=np.float64)
    centred = x - x.mean()
    return float(np.dot(centred, y - y.mean()) / np.dot(centred, centred))


def _bootstrap_generator(seed: int) -> np.random.Generator:
    return RngStream(seed=seed, replica=BOOTSTRAP_STREAM).generator()


def _check_replicas(replicas: int, needed: int = 2) -> None:
    if replicas < needed:
        raise InsufficientSamplesException(f"{replicas} replicas cannot give an interval, at least {needed} are needed")


def variance_slope(
    lam: float,
    c: float,
    times: typing.Sequence[float],
    replicas: int,
    seed: int,
    *,
    jobs: int = 1,
    resamples: int = BOOTSTRAP_RESAMPLES,
) -> Estimate:
    """
    Variance slope.

    Regress `Var h([(λ - c)t], [ct], t)` against `ln t`. Inside the curved
    region the slope tends to `1 / 2π²`.

    The interval is a replica bootstrap: every resample redraws the replicas
    of each time independently and refits.

    Parameters
    ----------
    lam
        `λ = ν/τ`, inside `((1 - √c)², (1 + √c)²)`.
    c
        `c = η/τ`.
    times
        At least three increasing times, each with `[ct] >= 1`.
    replicas
        Replicas per time.
    seed
        The base seed; time `i` uses `seed + i`.
    jobs
        Worker count.
    resamples
        Bootstrap resamples.

    Raises
    ------
    DomainException
        Raised when `λ` is outside the curved region.
    InvalidArgumentException
        Raised for fewer than three times, or times that are not increasing.
    InsufficientSamplesException
        Raised when `replicas < 2`.
    """
    root = math.sqrt(c)
    if not (1.0 - root) ** 2 < lam < (1.0 + root) ** 2:
        raise DomainException(f"λ = {lam} is outside ((1 - √c)², (1 + √c)²) for c = {c}")
    if len(times) < 3 or any(b <= a for a, b in zip(times, times[1:])):
        raise InvalidArgumentException(f"need at least three increasing times, got {list(times)}")
    _check_replicas(replicas)

    columns: list[FloatArray] = []
    for i, t in enumerate(times):
        n = math.floor(c * t)
        if n < 1:
            raise InvalidArgumentException(f"[ct] = {n} at t = {t}, at least one level is needed")
        x = math.floor((lam - c) * t)
        spec = EnsembleSpec(n=n, times=(float(t),), query_points=((x, n),), replicas=replicas, seed=seed + i)
        samples, _, _ = ensemble_samples(spec, jobs=jobs)
        columns.append(samples[:, 0])
        _logger.debug(f"variance at t = {t}: {float(np.var(samples[:, 0], ddof=1)):.4f}")

    logs = np.log(np.asarray(times, dtype=np.float64))
    slope = ols_slope(logs, [np.var(column, ddof=1) for column in columns])
    generator = _bootstrap_generator(seed)
    boot = np.empty(resamples, dtype=np.float64)
    for b in range(resamples):
        variances = [np.var(column[generator.integers(0, column.size, column.size)], ddof=1) for column in columns]
        boot[b] = ols_slope(logs, variances)
    low, high = np.percentile(boot, [2.5, 97.5])
    return Estimate(
        name="variance_slope",
        value=slope,
        stderr=float(np.std(boot, ddof=1)),
        ci_low=float(low),
        ci_high=float(high),
        target=VARIANCE_TARGET,
    )


def _height_samples(point: MacroPoint, scale: float, replicas: int, seed: int, jobs: int) -> tuple[FloatArray, int]:
    x, n, t = point.scaled(scale)
    if n < 1:
        raise InvalidArgumentException(f"[ηL] = {n}, at least one level is needed")
    spec = EnsembleSpec(n=n, times=(t,), query_points=((x, n),), replicas=replicas, seed=seed)
    samples, _, _ = ensemble_samples(spec, jobs=jobs)
    return samples[:, 0], n


def mean_height_ratio(point: MacroPoint, scale: float, replicas: int, seed: int, *, jobs: int = 1) -> Estimate:
    """
    Mean height ratio.

    `E h([(ν-η)L], [ηL], τL) / L` against the limit shape, at any positive
    point. Off the curved region the target is the facet value.

    Raises
    ------
    InsufficientSamplesException
        Raised when `replicas < 2`.
    """
    _check_replicas(replicas)
    samples, _ = _height_samples(point, scale, replicas, seed, jobs)
    mean = float(samples.mean()) / scale
    stderr = float(samples.std(ddof=1)) / math.sqrt(samples.size) / scale
    return Estimate(
        name="mean_height_ratio",
        value=mean,
        stderr=stderr,
        ci_low=mean - Z_CRITICAL * stderr,
        ci_high=mean + Z_CRITICAL * stderr,
        target=limit_shape_extended(point)[1],
    )


def shape_error(point: MacroPoint, scale: float, replicas: int, seed: int, *, jobs: int = 1) -> Estimate:
    """
    Shape error.

    The relative error `|E h / L - h(p)| / h(p)` of the finite `L` mean
    height against the limit shape.

    Raises
    ------
    DomainException
        Raised when `point` is outside the curved region.
    InsufficientSamplesException
        Raised when `replicas < 2`.
    """
    target = limit_shape(point).h
    ratio = mean_height_ratio(point, scale, replicas, seed, jobs=jobs)
    error = abs(ratio.value - target) / target
    stderr = ratio.stderr / target
    return Estimate(
        name="shape_error",
        value=error,
        stderr=stderr,
        ci_low=max(0.0, error - Z_CRITICAL * stderr),
        ci_high=error + Z_CRITICAL * stderr,
    )


def covariance_pair(
    p1: MacroPoint,
    p2: MacroPoint,
    scale: float,
    replicas: int,
    seed: int,
    *,
    jobs: int = 1,
) -> Estimate:
    """
    Covariance pair.

    Estimate `E[H_L(p1) H_L(p2)]` with `H_L = √π (h - E h)`, the empirical
    ensemble mean standing in for `E h`, and compare it with the Green
    function `𝒢(Ω(p1), Ω(p2))`.

    Both heights come from the same replicas, so swapping the points gives
    the same estimate.

    Raises
    ------
    DomainException
        Raised when a point is outside the curved region.
    InvalidArgumentException
        Raised when the points are not space-like: one must have both the
        earlier time and the higher level.
    InsufficientSamplesException
        Raised when `replicas < 3`.
    """
    _check_replicas(replicas, 3)
    omega1, omega2 = omega(p1).omega, omega(p2).omega
    if (p1.tau - p2.tau) * (p1.eta - p2.eta) > 0.0:
        raise InvalidArgumentException("the points must be space-like: the earlier one needs the higher level")
    x1, n1, t1 = p1.scaled(scale)
    x2, n2, t2 = p2.scaled(scale)
    times = tuple(sorted({t1, t2}))
    queries = tuple(dict.fromkeys([(x1, n1), (x2, n2)]))
    spec = EnsembleSpec(n=max(n1, n2), times=times, query_points=queries, replicas=replicas, seed=seed)
    samples, _, _ = ensemble_samples(spec, jobs=jobs)
    first = times.index(t1) * len(queries) + queries.index((x1, n1))
    second = times.index(t2) * len(queries) + queries.index((x2, n2))
    a = samples[:, first] - samples[:, first].mean()
    b = samples[:, second] - samples[:, second].mean()
    products = math.pi * a * b
    count = products.size
    value = float(products.sum()) / (count - 1)
    stderr = float(products.std(ddof=1)) / math.sqrt(count)
    target = None if omega1 == omega2 else green_covariance(omega1, omega2)
    return Estimate(
        name="covariance_pair",
        value=value,
        stderr=stderr,
        ci_low=value - Z_CRITICAL * stderr,
        ci_high=value + Z_CRITICAL * stderr,
        target=target,
    )


def _replica_events(
    points: tuple[SpaceTimePoint, ...],
    types: tuple[LozengeType, ...] | None,
    n: int,
    seed: int,
    replica: int,
) -> list[bool]:
    generator = RngStream(seed=seed, replica=replica).generator()
    state = packed_initial(n)
    clock = 0.0
    hits = [False] * len(points)
    for t in sorted({point.t for point in points}):
        state = ctmc_run(state, t - clock, generator)
        clock = t
        for i, point in enumerate(points):
            if point.t != t:
                continue
            if types is None:
                hits[i] = bool(np.any(state.level(point.n) == point.x))
            else:
                hits[i] = classify_lozenge(state, point.x, point.n) is types[i]
    return hits


def _describe(points: typing.Sequence[SpaceTimePoint], types: typing.Sequence[LozengeType] | None) -> str:
    parts = []
    for i, point in enumerate(points):
        label = f"({point.x},{point.n},{point.t:g})"
        parts.append(label if types is None else f"{types[i].value}@{label}")
    return " & ".join(parts)


def frequency_vs_determinant(
    points: typing.Sequence[SpaceTimePoint],
    types: typing.Sequence[LozengeType] | None,
    replicas: int,
    seed: int,
    *,
    jobs: int = 1,
) -> FrequencyReport:
    """
    Frequency vs determinant.

    Compare empirical event frequencies with correlation determinants. Each
    point alone is one event, and when there are several, so is their
    conjunction.

    Parameters
    ----------
    points
        Space-like points, each with its own time.
    types
        Optional lozenge types, one per point. Without them the events are
        occupations.
    replicas
        The replica count.
    seed
        The base seed.
    jobs
        Worker count.

    Returns
    -------
    FrequencyReport
        One row per event and the largest `|z|`.

    Raises
    ------
    InvalidArgumentException
        Raised for an empty point list or points that are not space-like.
    """
    if not points:
        raise InvalidArgumentException("at least one point is required")
    _check_replicas(replicas)
    frozen_points = tuple(points)
    frozen_types = tuple(types) if types is not None else None
    corr_det(frozen_points, frozen_types)
    n = max(point.n for point in frozen_points)
    results, _, _ = _run_replicas(
        _replica_events, (frozen_points, frozen_types, n, seed), replicas, jobs, None
    )
    hits = np.asarray(results, dtype=bool).reshape(replicas, len(frozen_points))

    events: list[list[int]] = [[i] for i in range(len(frozen_points))]
    if len(frozen_points) > 1:
        events.append(list(range(len(frozen_points))))
    rows: list[FrequencyRow] = []
    for event in events:
        subset = [frozen_points[i] for i in event]
        subset_types = [frozen_types[i] for i in event] if frozen_types is not None else None
        determinant = corr_det(subset, subset_types)
        frequency = float(np.mean(np.all(hits[:, event], axis=1)))
        p = min(max(determinant, 0.0), 1.0)
        stderr = math.sqrt(p * (1.0 - p) / replicas)
        if stderr > 0.0:
            z = (frequency - determinant) / stderr
        else:
            z = 0.0 if abs(frequency - determinant) < 1e-10 else math.inf
        rows.append(
            FrequencyRow(
                event=_describe(subset, subset_types),
                frequency=frequency,
                determinant=determinant,
                stderr=stderr,
                z=z,
            )
        )
    return FrequencyReport(replicas=replicas, rows=rows, max_z=max(abs(row.z) for row in rows))


# MIT License

# Copyright (c) 2024 The akpz developers

# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:

# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.

# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.
