"""
Law ABCs.

Step laws of the discrete chains, and reproducible random streams.
"""

from __future__ import annotations

import typing

import numpy as np

from akpz.abc.bases import PayloadBase
from akpz.enums import StepFamily
from akpz.errors import InvalidArgumentException

if typing.TYPE_CHECKING:
    from akpz.internal.types import RngLike

__all__ = ("StepLaw", "RngStream", "as_generator")


class StepLaw(PayloadBase, frozen=True):
    """
    Step law.

    One of the four Toeplitz step families, with its parameter and the per
    level weights `α_1, ..., α_n`.
    """

    family: StepFamily
    """The step family."""
    parameter: float
    """`β⁺`, `β⁻`, `γ⁺` or `γ⁻`, depending on the family."""
    alphas: tuple[float, ...]
    """The level weights, all positive."""

    def __post_init__(self) -> None:
        if not self.alphas:
            raise InvalidArgumentException("at least one level weight is required")
        if any(not alpha > 0.0 for alpha in self.alphas):
            raise InvalidArgumentException(f"level weights must be positive, got {self.alphas}")
        if not self.parameter > 0.0:
            raise InvalidArgumentException(f"step parameter must be positive, got {self.parameter}")
        if self.family is StepFamily.GEOMETRIC_LEFT and not self.parameter < min(self.alphas):
            raise InvalidArgumentException(
                f"γ⁺ = {self.parameter} must be below min α = {min(self.alphas)}"
            )
        if self.family is StepFamily.GEOMETRIC_RIGHT and not self.parameter * max(self.alphas) < 1.0:
            raise InvalidArgumentException(
                f"γ⁻ = {self.parameter} must be below min 1/α = {1.0 / max(self.alphas)}"
            )

    @property
    def n(self) -> int:
        """The number of levels the law covers."""
        return len(self.alphas)

    @classmethod
    def uniform(cls, family: StepFamily, parameter: float, n: int, alpha: float = 1.0) -> StepLaw:
        """Build a law with the same weight on all `n` levels."""
        return cls(family=family, parameter=parameter, alphas=(alpha,) * n)

    def ratio(self, level: int) -> float:
        """
        Ratio.

        The geometric ratio `r` of the conditional law of a level `level`
        particle: its new position `y` has weight proportional to `r^y` on the
        conditioning segment.
        """
        alpha = self.alphas[level - 1]
        match self.family:
            case StepFamily.BERNOULLI_LEFT | StepFamily.GEOMETRIC_LEFT:
                return alpha / self.parameter
            case StepFamily.BERNOULLI_RIGHT | StepFamily.GEOMETRIC_RIGHT:
                return alpha * self.parameter


class RngStream(PayloadBase, frozen=True):
    """
    Rng stream.

    A `(seed, replica)` pair. The same pair always yields the same PCG64
    stream, derived with `numpy.random.SeedSequence(seed, spawn_key=(replica,))`.
    """

    seed: int
    """The 64-bit seed."""
    replica: int = 0
    """The replica index."""

    def __post_init__(self) -> None:
        if self.seed < 0 or self.seed >= 1 << 64:
            raise InvalidArgumentException(f"seed must fit in 64 unsigned bits, got {self.seed}")
        if self.replica < 0:
            raise InvalidArgumentException(f"replica index must be nonnegative, got {self.replica}")

    def generator(self) -> np.random.Generator:
        """A fresh generator positioned at the start of this stream."""
        sequence = np.random.SeedSequence(self.seed, spawn_key=(self.replica,))
        return np.random.Generator(np.random.PCG64(sequence))


def as_generator(rng: RngLike) -> np.random.Generator:
    """Return `rng` itself if it is a generator, else the start of its stream."""
    if isinstance(rng, np.random.Generator):
        return rng
    return rng.generator()


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
