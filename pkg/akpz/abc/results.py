"""
Result ABCs.

Values returned by the numerical checks, kernels and suites.
"""

from __future__ import annotations

import msgspec

from akpz.abc.bases import PayloadBase
from akpz.enums import LozengeType
from akpz.errors import InvalidArgumentException

__all__ = (
    "ContourSpec",
    "KernelValue",
    "ValidationReport",
    "Estimate",
    "CheckResult",
    "SuiteReport",
    "FrequencyRow",
    "FrequencyReport",
    "LozengeTile",
)


class ContourSpec(PayloadBase, frozen=True):
    """
    Contour spec.

    A positively oriented circle discretised with `nodes` trapezoid nodes.
    """

    center: float
    """The center, on the real axis."""
    radius: float
    """The radius."""
    nodes: int = 64
    """The node count, positive and even."""

    def __post_init__(self) -> None:
        if not self.radius > 0.0:
            raise InvalidArgumentException(f"radius must be positive, got {self.radius}")
        if self.nodes < 2 or self.nodes % 2:
            raise InvalidArgumentException(f"node count must be positive and even, got {self.nodes}")

    def encloses(self, point: complex) -> bool:
        """Whether `point` lies strictly inside the circle."""
        return abs(point - self.center) < self.radius

    def disjoint_from(self, other: ContourSpec) -> bool:
        """Whether neither circle meets the other."""
        distance = abs(self.center - other.center)
        return distance > self.radius + other.radius or distance < abs(self.radius - other.radius)


class KernelValue(PayloadBase, frozen=True):
    """
    Kernel value.

    A kernel evaluation with its error estimate.
    """

    value: float
    """The real kernel value."""
    est_error: float
    """Nonnegative error estimate."""
    repr: str
    """The representation that produced the value."""


class ValidationReport(PayloadBase, frozen=True):
    """
    Validation report.

    The verdict of an interlacing check. When not ok, `k` and `m` locate the
    first violation found, scanning levels upward and particles left to right.
    """

    ok: bool
    """Whether every invariant holds."""
    k: int | None = None
    """Particle index of the first violation."""
    m: int | None = None
    """Level of the first violation."""
    reason: str | None = None
    """What failed."""


class Estimate(PayloadBase, frozen=True):
    """
    Estimate.

    A Monte Carlo estimate with its standard error and confidence interval.
    """

    name: str
    """The estimated quantity."""
    value: float
    """The point estimate."""
    stderr: float
    """The standard error."""
    ci_low: float | None = None
    """Lower end of the confidence interval."""
    ci_high: float | None = None
    """Upper end of the confidence interval."""
    target: float | None = None
    """The value the estimate is compared against, if any."""

    @property
    def z_score(self) -> float | None:
        """Distance to `target` in standard errors."""
        if self.target is None:
            return None
        if self.stderr == 0.0:
            return 0.0 if self.value == self.target else float("inf")
        return (self.value - self.target) / self.stderr


class CheckResult(PayloadBase, frozen=True):
    """
    Check result.

    One named acceptance check.
    """

    name: str
    """The check."""
    value: float
    """The measured residual, error or z-score."""
    tolerance: float
    """The bound `value` must stay within."""
    passed: bool
    """Whether the check passed."""
    elapsed: float = 0.0
    """Wall seconds spent."""
    detail: str | None = None
    """Free text, for failures."""


class SuiteReport(PayloadBase, frozen=True):
    """
    Suite report.

    The machine readable verdict of a suite run.
    """

    name: str
    """The suite."""
    checks: list[CheckResult] = msgspec.field(default_factory=list)
    """Every check that ran."""
    passed: bool = True
    """Whether every check passed."""
    elapsed: float = 0.0
    """Wall seconds spent."""


class FrequencyRow(PayloadBase, frozen=True):
    """
    Frequency row.

    One event compared against its determinant.
    """

    event: str
    """A readable description of the event."""
    frequency: float
    """The empirical frequency."""
    determinant: float
    """The determinant probability."""
    stderr: float
    """The binomial standard error at `determinant`."""
    z: float
    """The z-score."""


class FrequencyReport(PayloadBase, frozen=True):
    """
    Frequency report.

    Empirical event frequencies against correlation determinants.
    """

    replicas: int
    """The replica count."""
    rows: list[FrequencyRow]
    """One row per tested event."""
    max_z: float
    """The largest `|z|` over all rows."""


class LozengeTile(PayloadBase, frozen=True):
    """
    Lozenge tile.

    The lozenge covering the white triangle at `(x, n)`.
    """

    x: int
    """The position."""
    n: int
    """The level."""
    type: LozengeType
    """The lozenge type."""


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
