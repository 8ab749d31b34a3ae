"""
Enums.

All of the enums for the entire library.
"""

from __future__ import annotations

import enum

__all__ = (
    "LozengeType",
    "StepFamily",
    "SymbolKind",
    "ChainType",
    "KernelRepr",
    "RowSide",
    "SuiteName",
    "StatsMode",
    "TilingFormat",
)


class LozengeType(str, enum.Enum):
    """
    Lozenge type.

    The lozenge covering a white triangle. The asymptotic proportions of the
    types are `π_η/π`, `π_τ/π` and `π_ν/π` respectively.
    """

    I = "I"  # noqa: E741
    """A particle sits at the site."""
    II = "II"
    """No particle, and the height jumps between the level and the one below."""
    III = "III"
    """No particle, and the height agrees with the level below."""


class StepFamily(str, enum.Enum):
    """
    Step family.

    The four one-step symbols `F(z)` of the discrete time chains.
    """

    BERNOULLI_LEFT = "bernoulli-left"
    """`F(z) = 1 + β⁺z`, particles step left by at most one."""
    BERNOULLI_RIGHT = "bernoulli-right"
    """`F(z) = 1 + β⁻/z`, particles step right by at most one."""
    GEOMETRIC_LEFT = "geometric-left"
    """`F(z) = (1 - γ⁺z)⁻¹`, geometric jumps to the left."""
    GEOMETRIC_RIGHT = "geometric-right"
    """`F(z) = (1 - γ⁻/z)⁻¹`, geometric jumps to the right."""

    @property
    def moves_right(self) -> bool:
        """Whether particles move to the right under this family."""
        return self in (StepFamily.BERNOULLI_RIGHT, StepFamily.GEOMETRIC_RIGHT)


class SymbolKind(str, enum.Enum):
    """
    Symbol kind.

    Every Toeplitz symbol the transfer matrices are built from.
    """

    BERNOULLI_LEFT = "bernoulli-left"
    """`1 + pz`."""
    BERNOULLI_RIGHT = "bernoulli-right"
    """`1 + p/z`."""
    GEOMETRIC_LEFT = "geometric-left"
    """`(1 - qz)⁻¹`."""
    GEOMETRIC_RIGHT = "geometric-right"
    """`(1 - q/z)⁻¹`."""
    MIXED_LEFT = "mixed-left"
    """`p + qz(1 - qz)⁻¹`."""
    MIXED_RIGHT = "mixed-right"
    """`p + (q/z)(1 - q/z)⁻¹`."""
    PRODUCT = "product"
    """A product of two symbols."""


class ChainType(str, enum.Enum):
    """
    Chain type.

    The dynamics the simulate command can run.
    """

    CTMC = "ctmc"
    """Continuous time blocking and pushing."""
    SEQ = "seq"
    """Sequential discrete time update."""
    PARALLEL = "parallel"
    """Parallel discrete time update."""
    AZTEC = "aztec"
    """Aztec diamond shuffling."""


class KernelRepr(str, enum.Enum):
    """
    Kernel representation.

    How `kernel_spacetime` evaluates the kernel.
    """

    AUTO = "auto"
    """Charlier when both points share `(n, t)`, contour otherwise."""
    CONTOUR = "contour"
    """Double contour quadrature."""
    CHARLIER = "charlier"
    """Christoffel-Darboux formula with Charlier functions."""


class RowSide(str, enum.Enum):
    """
    Row side.

    Which edge of the array `project_row` reads.
    """

    LEFTMOST = "leftmost"
    """`x_1^m` on each level, a TASEP."""
    RIGHTMOST = "rightmost"
    """`x_m^m` on each level, a PushASEP."""


class SuiteName(str, enum.Enum):
    """
    Suite name.

    The acceptance bundles the suite command can run.
    """

    ORACLE = "oracle"
    """Transfer matrix identities."""
    KERNEL = "kernel"
    """Kernel representation and spectral identities."""
    GEOMETRY = "geometry"
    """Closed form derivative checks."""
    STATS_FAST = "stats-fast"
    """Monte Carlo checks that run in minutes."""
    STATS_SLOW = "stats-slow"
    """Long Monte Carlo checks."""


class StatsMode(str, enum.Enum):
    """
    Stats mode.

    The estimators the stats command can run.
    """

    VARIANCE = "variance"
    """Log-variance regression."""
    SHAPE = "shape"
    """Limit shape relative error."""
    COVARIANCE = "covariance"
    """Two-point height covariance."""
    FREQ = "freq"
    """Event frequencies against determinants."""


class TilingFormat(str, enum.Enum):
    """
    Tiling format.

    The output format of the tiling command.
    """

    SVG = "svg"
    """An SVG drawing."""
    JSON = "json"
    """A JSON list of lozenges."""


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
