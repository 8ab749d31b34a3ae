"""
Point ABCs.

Microscopic and macroscopic coordinates.
"""

from __future__ import annotations

import math

from akpz.abc.bases import PayloadBase
from akpz.errors import InvalidArgumentException

__all__ = ("SpaceTimePoint", "MacroPoint")


class SpaceTimePoint(PayloadBase, frozen=True):
    """
    Space-time point.

    An `(x, n, t)` argument of the correlation kernel, in the original
    coordinates where level `n` particles start at `-n, ..., -1`.
    """

    x: int
    """The position."""
    n: int
    """The level, at least 1."""
    t: float
    """The time, nonnegative."""

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidArgumentException(f"level must be at least 1, got {self.n}")
        if not self.t >= 0.0:
            raise InvalidArgumentException(f"time must be nonnegative, got {self.t}")

    @classmethod
    def parse(cls, text: str) -> SpaceTimePoint:
        """
        Parse.

        Build a point from `"x,n,t"`.

        Raises
        ------
        InvalidArgumentException
            Raised when the text is not three comma separated numbers.
        """
        parts = [part.strip() for part in text.split(",")]
        if len(parts) != 3:
            raise InvalidArgumentException(f"expected 'x,n,t', got {text!r}")
        try:
            return cls(x=int(parts[0]), n=int(parts[1]), t=float(parts[2]))
        except ValueError as e:
            raise InvalidArgumentException(f"expected 'x,n,t', got {text!r}") from e


class MacroPoint(PayloadBase, frozen=True):
    """
    Macro point.

    Macroscopic coordinates `(ν, η, τ)`. The point is in the curved region
    when `√ν`, `√η` and `√τ` form a nondegenerate triangle.
    """

    nu: float
    """Horizontal coordinate `ν`."""
    eta: float
    """Level coordinate `η`."""
    tau: float
    """Time coordinate `τ`."""

    def __post_init__(self) -> None:
        for name, value in (("nu", self.nu), ("eta", self.eta), ("tau", self.tau)):
            if not value > 0.0:
                raise InvalidArgumentException(f"{name} must be positive, got {value}")

    @property
    def in_domain(self) -> bool:
        """Whether `(√η - √τ)² < ν < (√η + √τ)²`."""
        root_eta, root_tau = math.sqrt(self.eta), math.sqrt(self.tau)
        return (root_eta - root_tau) ** 2 < self.nu < (root_eta + root_tau) ** 2

    @property
    def in_domain_by_circles(self) -> bool:
        """Whether the circles `|w|² = η/τ` and `|1-w|² = ν/τ` cross in two points."""
        r0 = math.sqrt(self.eta / self.tau)
        r1 = math.sqrt(self.nu / self.tau)
        return abs(r0 - r1) < 1.0 < r0 + r1

    def scaled(self, scale: float) -> tuple[int, int, float]:
        """
        Scaled.

        The microscopic point `([(ν-η)L], [ηL], τL)`.

        Parameters
        ----------
        scale
            The large parameter `L`.
        """
        return (
            math.floor((self.nu - self.eta) * scale),
            math.floor(self.eta * scale),
            self.tau * scale,
        )


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
