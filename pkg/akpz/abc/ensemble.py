"""
Ensemble ABCs.

Specifications and reports of Monte Carlo ensembles.
"""

from __future__ import annotations

import msgspec

from akpz.abc.bases import PayloadBase
from akpz.errors import InvalidArgumentException

__all__ = ("EnsembleSpec", "QueryStatistics", "EnsembleReport")


class EnsembleSpec(PayloadBase, frozen=True):
    """
    Ensemble spec.

    Every replica starts packed with `n` levels and is observed at each of
    `times`; at each time the height is read at every `(x, n)` query.
    """

    n: int
    """The level count."""
    times: tuple[float, ...]
    """Observation times, nondecreasing."""
    query_points: tuple[tuple[int, int], ...]
    """Height queries `(x, level)`."""
    replicas: int
    """The replica count, at least 2."""
    seed: int
    """The 64-bit base seed."""

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidArgumentException(f"level count must be at least 1, got {self.n}")
        if self.replicas < 2:
            raise InvalidArgumentException(f"at least 2 replicas are required, got {self.replicas}")
        if not self.times:
            raise InvalidArgumentException("at least one observation time is required")
        if any(later < earlier for earlier, later in zip(self.times, self.times[1:])):
            raise InvalidArgumentException(f"times must be nondecreasing, got {self.times}")
        if self.times[0] < 0.0:
            raise InvalidArgumentException("times must be nonnegative")
        for _, level in self.query_points:
            if not 1 <= level <= self.n:
                raise InvalidArgumentException(f"query level {level} outside 1..{self.n}")


class QueryStatistics(PayloadBase, frozen=True):
    """
    Query statistics.

    Sample moments of one height observable.
    """

    x: int
    """The position."""
    n: int
    """The level."""
    t: float
    """The time."""
    mean: float
    """Sample mean."""
    variance: float
    """Unbiased sample variance."""
    stderr: float
    """Standard error of the mean, `std / √replicas`."""


class EnsembleReport(PayloadBase, frozen=True):
    """
    Ensemble report.

    Observables are ordered time-major: every query at the first time, then
    every query at the second, and so on. `covariance` uses the same order.
    """

    spec: EnsembleSpec
    """The spec that produced the report."""
    queries: list[QueryStatistics]
    """One entry per (time, query)."""
    covariance: list[list[float]]
    """Unbiased sample covariance between observables."""
    replicas: int
    """Replicas that completed."""
    complete: bool = True
    """False when the run stopped early at its deadline."""
    wall_time: float = 0.0
    """Wall seconds spent."""
    seeds: list[int] = msgspec.field(default_factory=list)
    """The replica indices that contributed, in reduction order."""


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
