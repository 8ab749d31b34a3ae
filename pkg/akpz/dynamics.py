"""
Dynamics.

The stochastic evolutions of interlacing arrays.

- `ctmc_run`: continuous time blocking and pushing.
- `seq_update`: one step of the sequential discrete time chain, for any of
  the four step families.
- `parallel_update`: one step of the parallel chain, and `aztec_shuffle`,
  its Aztec diamond specialisation.
- `project_row` and `tasep_reference`: the one dimensional projections.

Every sampler also has an exact counterpart (`seq_transition_probability`,
`parallel_distribution`, ...), used as an oracle by the tests and suites.
"""

from __future__ import annotations

import itertools
import math
import typing

import numpy as np

from akpz.abc.laws import StepLaw
from akpz.abc.laws import as_generator
from akpz.enums import RowSide
from akpz.enums import StepFamily
from akpz.errors import InternalInvariantException
from akpz.errors import InvalidArgumentException
from akpz.interlacing import InterlacingArray
from akpz.interlacing import level_offset
from akpz.interlacing import packed_initial
from akpz.interlacing import validate
from akpz.internal.converters import json_dumps
from akpz.internal.jit import njit
from akpz.internal.logger import TRACE_LEVEL
from akpz.internal.logger import logger

if typing.TYPE_CHECKING:
    from akpz.internal.types import FloatArray
    from akpz.internal.types import IntArray
    from akpz.internal.types import RngLike

__all__ = (
    "ctmc_run",
    "seq_update",
    "conditional_segments",
    "segment_probability",
    "seq_transition_probability",
    "seq_distribution",
    "parallel_update",
    "parallel_transition_probability",
    "parallel_distribution",
    "aztec_schedule",
    "aztec_shuffle",
    "aztec_distribution",
    "project_row",
    "tasep_reference",
)

_logger = logger.getChild("dynamics")

EVENT_CHUNK: typing.Final[int] = 1 << 20
"""Events drawn per batch by the continuous time samplers."""

Distribution = dict[tuple[int, ...], float]
"""Exact law over flat position tuples."""


def _check_alphas(alphas: typing.Sequence[float] | None, n: int) -> tuple[float, ...]:
    if alphas is None:
        return (1.0,) * n
    weights = tuple(float(alpha) for alpha in alphas)
    if len(weights) != n:
        raise InvalidArgumentException(f"expected {n} level weights, got {len(weights)}")
    if any(not alpha > 0.0 for alpha in weights):
        raise InvalidArgumentException(f"level weights must be positive, got {weights}")
    return weights


def _require_valid(a: InterlacingArray, *, relaxed: bool = False) -> None:
    report = validate(a, relaxed=relaxed)
    if not report.ok:
        raise InvalidArgumentException(f"invalid interlacing array at (k={report.k}, m={report.m}): {report.reason}")


def _particle_labels(n: int) -> tuple[IntArray, IntArray]:
    levels = np.repeat(np.arange(1, n + 1, dtype=np.int64), np.arange(1, n + 1))
    ks = np.arange(levels.size, dtype=np.int64) - (levels * (levels - 1)) // 2 + 1
    return levels, ks


# Continuous time


@njit
def _ctmc_events(positions: IntArray, n: int, levels: IntArray, ks: IntArray, pushed: IntArray) -> None:
    for e in range(levels.shape[0]):
        m = levels[e]
        k = ks[e]
        index = m * (m - 1) // 2 + k - 1
        x = positions[index]
        if k <= m - 1 and x == positions[(m - 1) * (m - 2) // 2 + k - 1] - 1:
            pushed[e] = 0
            continue
        positions[index] = x + 1
        count = 1
        mm = m
        kk = k
        # drag the diagonal string x_k^m = x_{k+1}^{m+1} = ...
        while mm < n:
            up = (mm + 1) * mm // 2 + kk
            if positions[up] != x:
                break
            positions[up] = x + 1
            mm += 1
            kk += 1
            count += 1
        pushed[e] = count


def ctmc_run(
    a: InterlacingArray,
    duration: float,
    rng: RngLike,
    *,
    alphas: typing.Sequence[float] | None = None,
    trace: typing.BinaryIO | None = None,
) -> InterlacingArray:
    """
    Ctmc run.

    Run the blocking and pushing chain for `duration` units of time.

    Every particle carries an exponential clock, of rate `α_m` on level `m`.
    When the clock of `x_k^m` rings, the jump is blocked if
    `x_k^m = x_k^{m-1} - 1`; otherwise the particle moves right by one and
    drags along the longest diagonal string `x_{k+1}^{m+1} = ... ` sitting
    at its old position. Blocked rings still consume time.

    The run is exact: the number of rings is Poisson with mean
    `duration · Σ m α_m`, and each ring picks a level with probability
    proportional to `m α_m` and then a uniform particle on that level.

    Parameters
    ----------
    a
        The starting array. It is not modified.
    duration
        The run length, nonnegative.
    rng
        The randomness.
    alphas
        Optional per level clock rates. Defaults to 1 everywhere.
    trace
        Optional binary sink for a newline delimited JSON event log,
        one `{"t", "k", "m", "c"}` object per ring, where `c` counts the
        particles moved (0 when blocked).

    Returns
    -------
    InterlacingArray
        The array at time `duration`.

    Raises
    ------
    InvalidArgumentException
        Raised when `a` does not interlace, `duration` is negative, or the
        rates are malformed.
    """
    if not duration >= 0.0:
        raise InvalidArgumentException(f"duration must be nonnegative, got {duration}")
    _require_valid(a)
    rates = _check_alphas(alphas, a.n)
    out = a.copy()
    if duration == 0.0:
        return out

    generator = as_generator(rng)
    levels, ks = _particle_labels(a.n)
    cumulative = np.cumsum(np.asarray(rates, dtype=np.float64)[levels - 1])
    total = float(cumulative[-1])

    remaining = int(generator.poisson(total * duration))
    _logger.log(TRACE_LEVEL, f"ctmc run of {a.n} levels over {duration}: {remaining} rings")

    recorded: list[tuple[IntArray, IntArray, IntArray]] = []
    while remaining > 0:
        size = min(remaining, EVENT_CHUNK)
        chosen = np.searchsorted(cumulative, generator.random(size) * total, side="right")
        np.minimum(chosen, levels.size - 1, out=chosen)
        pushed = np.zeros(size, dtype=np.int64)
        _ctmc_events(out.positions, a.n, levels[chosen], ks[chosen], pushed)
        if trace is not None:
            recorded.append((levels[chosen], ks[chosen], pushed))
        remaining -= size

    if trace is not None and recorded:
        event_levels = np.concatenate([chunk[0] for chunk in recorded])
        event_ks = np.concatenate([chunk[1] for chunk in recorded])
        event_pushed = np.concatenate([chunk[2] for chunk in recorded])
        # drawn after the events, so a trace never changes the trajectory
        times = np.sort(generator.uniform(0.0, duration, event_levels.size))
        for t, k, m, c in zip(times.tolist(), event_ks.tolist(), event_levels.tolist(), event_pushed.tolist()):
            trace.write(json_dumps({"t": t, "k": k, "m": m, "c": c}) + b"\n")

    return out


# Sequential update


def conditional_segments(
    family: StepFamily, old: IntArray, below: IntArray | None
) -> tuple[FloatArray, FloatArray]:
    """
    Conditional segments.

    The segments the new positions of a whole level are conditioned to, with
    `±inf` where a neighbour is missing.

    Parameters
    ----------
    family
        The step family.
    old
        The old positions of the level.
    below
        The new positions of the level below, None on level 1.
    """
    a = old.astype(np.float64)
    m = a.size
    lo = np.full(m, -np.inf)
    hi = np.full(m, np.inf)

    match family:
        case StepFamily.BERNOULLI_LEFT:
            lo[:] = a - 1.0
            hi[:] = a
        case StepFamily.BERNOULLI_RIGHT:
            lo[:] = a
            hi[:] = a + 1.0
        case StepFamily.GEOMETRIC_LEFT:
            lo[1:] = a[:-1] + 1.0
            hi[:] = a
        case StepFamily.GEOMETRIC_RIGHT:
            lo[:] = a
            hi[:-1] = a[1:] - 1.0

    if below is not None:
        b = below.astype(np.float64)
        lo[1:] = np.maximum(lo[1:], b)
        hi[:-1] = np.minimum(hi[:-1], b - 1.0)
    return lo, hi


def _truncated_geometric(u: FloatArray, width: FloatArray, rho: float) -> FloatArray:
    """
    Offsets `j` in `0..width` with weight `rho^j`, by inverse CDF.

    `rho` must not exceed 1; `width` may be infinite when `rho < 1`.
    """
    if rho == 1.0:
        return np.minimum(np.floor(u * (width + 1.0)), width)
    with np.errstate(over="ignore", under="ignore"):
        tail = np.power(rho, width + 1.0)
    return np.minimum(np.floor(np.log1p(-u * (1.0 - tail)) / math.log(rho)), width)


def _sample_segments(lo: FloatArray, hi: FloatArray, ratio: float, u: FloatArray, level: int) -> IntArray:
    if np.any(lo > hi):
        k = int(np.flatnonzero(lo > hi)[0]) + 1
        raise InternalInvariantException(f"empty conditioning segment for particle {k} of level {level}")
    if ratio < 1.0:
        if np.any(np.isinf(lo)):
            raise InternalInvariantException(f"segment unbounded below on level {level} with ratio {ratio} < 1")
        return (lo + _truncated_geometric(u, hi - lo, ratio)).astype(np.int64)
    if ratio > 1.0:
        if np.any(np.isinf(hi)):
            raise InternalInvariantException(f"segment unbounded above on level {level} with ratio {ratio} > 1")
        return (hi - _truncated_geometric(u, hi - lo, 1.0 / ratio)).astype(np.int64)
    if np.any(np.isinf(lo) | np.isinf(hi)):
        raise InternalInvariantException(f"unbounded segment on level {level} with ratio 1")
    return (lo + _truncated_geometric(u, hi - lo, 1.0)).astype(np.int64)


def _check_law(a: InterlacingArray, law: StepLaw) -> None:
    if law.n < a.n:
        raise InvalidArgumentException(f"step law covers {law.n} levels, array has {a.n}")


def seq_update(a: InterlacingArray, law: StepLaw, rng: RngLike) -> InterlacingArray:
    """
    Seq update.

    One step of the sequential chain. Levels are updated from 1 to `n`; the
    new position of `x_k^m` has weight proportional to `r^y` on a segment
    fixed by its old neighbours and the already updated level `m - 1`, with
    `r = law.ratio(m)`:

    | family | segment |
    |---|---|
    | `1 + β⁺z` | `[max(x_k - 1, y_{k-1}), min(x_k, y_k - 1)]` |
    | `1 + β⁻/z` | `[max(x_k, y_{k-1}), min(x_k + 1, y_k - 1)]` |
    | `(1 - γ⁺z)⁻¹` | `[max(x_{k-1} + 1, y_{k-1}), min(x_k, y_k - 1)]` |
    | `(1 - γ⁻/z)⁻¹` | `[max(x_k, y_{k-1}), min(x_{k+1}, y_k) - 1]` |

    Here `x` is the old level `m` and `y` the new level `m - 1`; bounds
    involving missing neighbours are dropped.

    Parameters
    ----------
    a
        The array. It is not modified.
    law
        The step law, covering at least `a.n` levels.
    rng
        The randomness. One uniform is drawn per particle.

    Returns
    -------
    InterlacingArray
        The updated array.

    Raises
    ------
    InvalidArgumentException
        Raised when `a` does not interlace or the law is too short.
    InternalInvariantException
        Raised when a conditioning segment is empty or unbounded on the
        wrong side.
    """
    _require_valid(a)
    _check_law(a, law)
    generator = as_generator(rng)
    uniforms = generator.random(level_offset(a.n + 1))
    out = a.copy()
    below: IntArray | None = None
    for m in range(1, a.n + 1):
        lo, hi = conditional_segments(law.family, a.level(m), below)
        start = level_offset(m)
        new = _sample_segments(lo, hi, law.ratio(m), uniforms[start : start + m], m)
        out.positions[start : start + m] = new
        below = new
    return out


def segment_probability(value: int, lo: float, hi: float, ratio: float) -> float:
    """The weight of `value` under `r^y` conditioned to `[lo, hi]`."""
    if not lo <= value <= hi:
        return 0.0
    if ratio == 1.0:
        return 1.0 / (hi - lo + 1.0)
    if ratio < 1.0:
        rho, offset = ratio, value - lo
    else:
        rho, offset = 1.0 / ratio, hi - value
    width = hi - lo
    tail = 0.0 if math.isinf(width) else rho ** (width + 1.0)
    return rho**offset * (1.0 - rho) / (1.0 - tail)


def seq_transition_probability(a: InterlacingArray, b: InterlacingArray, law: StepLaw) -> float:
    """
    Seq transition probability.

    The exact probability that one `seq_update` step takes `a` to `b`.

    Raises
    ------
    InvalidArgumentException
        Raised when the arrays differ in size or the law is too short.
    """
    if a.n != b.n:
        raise InvalidArgumentException(f"arrays differ in size: {a.n} and {b.n}")
    _check_law(a, law)
    probability = 1.0
    below: IntArray | None = None
    for m in range(1, a.n + 1):
        lo, hi = conditional_segments(law.family, a.level(m), below)
        new = b.level(m)
        ratio = law.ratio(m)
        for k in range(m):
            probability *= segment_probability(int(new[k]), float(lo[k]), float(hi[k]), ratio)
            if probability == 0.0:
                return 0.0
        below = new
    return probability


def seq_distribution(a: InterlacingArray, law: StepLaw) -> Distribution:
    """
    Seq distribution.

    The full one step law of the sequential chain from `a`, keyed by flat
    position tuples. Only the Bernoulli families have finite support.

    Raises
    ------
    InvalidArgumentException
        Raised for a geometric family.
    """
    if law.family not in (StepFamily.BERNOULLI_LEFT, StepFamily.BERNOULLI_RIGHT):
        raise InvalidArgumentException(f"{law.family.value} steps have unbounded support")
    _require_valid(a)
    _check_law(a, law)
    out: Distribution = {}

    def extend(m: int, below: IntArray | None, prefix: tuple[int, ...], weight: float) -> None:
        if m > a.n:
            out[prefix] = out.get(prefix, 0.0) + weight
            return
        lo, hi = conditional_segments(law.family, a.level(m), below)
        ratio = law.ratio(m)
        options = [
            [(y, segment_probability(y, float(lo[k]), float(hi[k]), ratio)) for y in range(int(lo[k]), int(hi[k]) + 1)]
            for k in range(m)
        ]
        for choice in itertools.product(*options):
            level = tuple(y for y, _ in choice)
            factor = math.prod(p for _, p in choice)
            if factor > 0.0:
                extend(m + 1, np.asarray(level, dtype=np.int64), prefix + level, weight * factor)

    extend(1, None, (), 1.0)
    return out


# Parallel update


def _check_schedule(beta_schedule: typing.Sequence[float], n: int, step: int) -> tuple[float, ...]:
    schedule = tuple(float(beta) for beta in beta_schedule)
    if step < 0:
        raise InvalidArgumentException(f"step index must be nonnegative, got {step}")
    if len(schedule) < step + n:
        raise InvalidArgumentException(
            f"step {step} with {n} levels reads β_{step + n - 1}, schedule has {len(schedule)} entries"
        )
    if any(not beta >= 0.0 for beta in schedule):
        raise InvalidArgumentException(f"schedule entries must be nonnegative, got {schedule}")
    return schedule


def _parallel_bounds(positions: IntArray, m: int) -> tuple[IntArray, IntArray]:
    start = level_offset(m)
    x = positions[start : start + m]
    lo = x.copy()
    hi = x + 1
    if m > 1:
        below = positions[level_offset(m - 1) : start]
        lo[1:] = np.maximum(lo[1:], below)
        hi[:-1] = np.minimum(hi[:-1], below - 1)
    return lo, hi


def _parallel_step(
    positions: IntArray, n: int, schedule: tuple[float, ...], alphas: tuple[float, ...], step: int, uniforms: FloatArray
) -> IntArray:
    new = positions.copy()
    for m in range(1, n + 1):
        beta = schedule[step + n - m]
        if beta == 0.0:
            continue
        lo, hi = _parallel_bounds(positions, m)
        if np.any(lo > hi):
            k = int(np.flatnonzero(lo > hi)[0]) + 1
            raise InternalInvariantException(f"empty parallel segment for particle {k} of level {m}")
        start = level_offset(m)
        weight = alphas[m - 1] * beta
        jump = uniforms[start : start + m] < weight / (1.0 + weight)
        # forced moves have lo == hi
        new[start : start + m] = np.where(lo == hi, lo, lo + jump)
    return new


def parallel_update(
    a: InterlacingArray,
    beta_schedule: typing.Sequence[float],
    alphas: typing.Sequence[float] | None,
    step: int,
    rng: RngLike,
) -> InterlacingArray:
    """
    Parallel update.

    One step of the parallel chain. Every particle looks only at the
    previous state: `x_k^m` is forced to stay when `x_k^m = x_k^{m-1} - 1`,
    forced to jump when `x_k^m = x_{k-1}^{m-1} - 1`, and otherwise jumps
    right by one with probability `α_m β / (1 + α_m β)`.

    Level `m` at step `t` reads `β = beta_schedule[t + n - m]`. A zero entry
    freezes the level for the step.

    Parameters
    ----------
    a
        The array, in the relaxed space `validate(a, relaxed=True)` accepts.
    beta_schedule
        The nonnegative weights, at least `step + n` of them.
    alphas
        Per level weights, 1 everywhere when None.
    step
        The step index `t`.
    rng
        The randomness. One uniform is drawn per particle.

    Raises
    ------
    InvalidArgumentException
        Raised when a schedule index is out of range, or the array is
        outside the relaxed space.
    """
    _require_valid(a, relaxed=True)
    schedule = _check_schedule(beta_schedule, a.n, step)
    weights = _check_alphas(alphas, a.n)
    uniforms = as_generator(rng).random(level_offset(a.n + 1))
    return InterlacingArray(a.n, _parallel_step(a.positions, a.n, schedule, weights, step, uniforms))


def parallel_transition_probability(
    a: InterlacingArray,
    b: InterlacingArray,
    beta_schedule: typing.Sequence[float],
    alphas: typing.Sequence[float] | None,
    step: int,
) -> float:
    """The exact probability that one `parallel_update` step takes `a` to `b`."""
    if a.n != b.n:
        raise InvalidArgumentException(f"arrays differ in size: {a.n} and {b.n}")
    schedule = _check_schedule(beta_schedule, a.n, step)
    weights = _check_alphas(alphas, a.n)
    probability = 1.0
    for m in range(1, a.n + 1):
        old = a.level(m)
        new = b.level(m)
        beta = schedule[step + a.n - m]
        if beta == 0.0:
            if not np.array_equal(old, new):
                return 0.0
            continue
        lo, hi = _parallel_bounds(a.positions, m)
        p = weights[m - 1] * beta / (1.0 + weights[m - 1] * beta)
        for k in range(m):
            y = int(new[k])
            if not lo[k] <= y <= hi[k]:
                return 0.0
            if lo[k] < hi[k]:
                probability *= p if y == hi[k] else 1.0 - p
    return probability


def parallel_distribution(
    a: InterlacingArray,
    beta_schedule: typing.Sequence[float],
    alphas: typing.Sequence[float] | None,
    step: int,
) -> Distribution:
    """The full one step law of the parallel chain from `a`, keyed by flat position tuples."""
    schedule = _check_schedule(beta_schedule, a.n, step)
    weights = _check_alphas(alphas, a.n)
    options: list[list[tuple[int, float]]] = []
    for m in range(1, a.n + 1):
        beta = schedule[step + a.n - m]
        if beta == 0.0:
            options.extend([(int(x), 1.0)] for x in a.level(m))
            continue
        lo, hi = _parallel_bounds(a.positions, m)
        p = weights[m - 1] * beta / (1.0 + weights[m - 1] * beta)
        for k in range(m):
            if lo[k] == hi[k]:
                options.append([(int(lo[k]), 1.0)])
            elif lo[k] < hi[k]:
                options.append([(int(lo[k]), 1.0 - p), (int(hi[k]), p)])
            else:
                raise InternalInvariantException(f"empty parallel segment for particle {k + 1} of level {m}")
    out: Distribution = {}
    for choice in itertools.product(*options):
        key = tuple(y for y, _ in choice)
        out[key] = out.get(key, 0.0) + math.prod(q for _, q in choice)
    return out


# Aztec diamond


def aztec_schedule(n: int, beta: float) -> tuple[float, ...]:
    """The schedule `β_k = β` for `k >= n - 1` and `0` below, of length `2n - 1`."""
    return (0.0,) * (n - 1) + (float(beta),) * n


def _check_aztec(n: int, beta: float) -> None:
    if n < 1:
        raise InvalidArgumentException(f"size must be at least 1, got {n}")
    if not beta > 0.0:
        raise InvalidArgumentException(f"weight must be positive, got {beta}")


def aztec_shuffle(n: int, beta: float, rng: RngLike) -> InterlacingArray:
    """
    Aztec shuffle.

    The domino shuffling of an Aztec diamond of size `n`, as `n` steps of the
    parallel chain from the packed array with `α ≡ 1` and `aztec_schedule`.
    Level `m` first moves at step `m - 1`.

    Parameters
    ----------
    n
        The size.
    beta
        The weight of vertical dominoes, positive.
    rng
        The randomness.
    """
    _check_aztec(n, beta)
    schedule = aztec_schedule(n, beta)
    alphas = (1.0,) * n
    generator = as_generator(rng)
    state = packed_initial(n)
    positions = state.positions
    for step in range(n):
        positions = _parallel_step(positions, n, schedule, alphas, step, generator.random(positions.size))
    _logger.log(TRACE_LEVEL, f"aztec shuffle of size {n} done")
    return InterlacingArray(n, positions)


def aztec_distribution(n: int, beta: float) -> Distribution:
    """The exact law of `aztec_shuffle(n, beta)`, by enumeration. Small `n` only."""
    _check_aztec(n, beta)
    schedule = aztec_schedule(n, beta)
    current: Distribution = {tuple(packed_initial(n).positions.tolist()): 1.0}
    for step in range(n):
        following: Distribution = {}
        for key, weight in current.items():
            for target, p in parallel_distribution(InterlacingArray(n, key), schedule, None, step).items():
                following[target] = following.get(target, 0.0) + weight * p
        current = following
    return current


# Projections


def project_row(a: InterlacingArray, which: RowSide | str) -> list[int]:
    """
    Project row.

    `(x_1^1, ..., x_1^n)` for the leftmost row, a TASEP, or
    `(x_1^1, ..., x_n^n)` for the rightmost row, a PushASEP.
    """
    side = RowSide(which)
    if side is RowSide.LEFTMOST:
        return [int(a.level(m)[0]) for m in range(1, a.n + 1)]
    return [int(a.level(m)[-1]) for m in range(1, a.n + 1)]


@njit
def _tasep_events(positions: IntArray, particles: IntArray) -> None:
    for e in range(particles.shape[0]):
        j = particles[e]
        if j == 0 or positions[j] + 1 != positions[j - 1]:
            positions[j] += 1


def tasep_reference(n: int, t: float, rng: RngLike) -> list[int]:
    """
    Tasep reference.

    A direct TASEP simulation with `n` particles started at `-1, ..., -n`.
    Particle `m` jumps right at rate 1 unless particle `m - 1` occupies the
    target site. Independent of the array code, so it can serve as an oracle
    for the leftmost row.

    Raises
    ------
    InvalidArgumentException
        Raised when `n < 1` or `t < 0`.
    """
    if n < 1:
        raise InvalidArgumentException(f"particle count must be at least 1, got {n}")
    if not t >= 0.0:
        raise InvalidArgumentException(f"time must be nonnegative, got {t}")
    positions = -np.arange(1, n + 1, dtype=np.int64)
    if t == 0.0:
        return positions.tolist()
    generator = as_generator(rng)
    remaining = int(generator.poisson(n * t))
    while remaining > 0:
        size = min(remaining, EVENT_CHUNK)
        _tasep_events(positions, generator.integers(0, n, size=size, dtype=np.int64))
        remaining -= size
    return positions.tolist()


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
