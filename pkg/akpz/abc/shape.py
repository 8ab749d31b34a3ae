"""
Shape ABCs.

Closed form values of the macroscopic layer.
"""

from __future__ import annotations

from akpz.abc.bases import PayloadBase

__all__ = ("TriangleAngles", "OmegaValue", "LimitShapeValue")


class TriangleAngles(PayloadBase, frozen=True):
    """
    Triangle angles.

    The angles of the triangle with sides `√ν`, `√η`, `√τ`, each opposite its
    namesake side. They sum to `π`.
    """

    pi_nu: float
    """Angle opposite `√ν`."""
    pi_eta: float
    """Angle opposite `√η`."""
    pi_tau: float
    """Angle opposite `√τ`."""


class OmegaValue(PayloadBase, frozen=True):
    """
    Omega value.

    The point `Ω` of the upper half plane with `|Ω|² = η/τ` and `|1-Ω|² = ν/τ`.
    """

    real: float
    """`Re Ω`."""
    imag: float
    """`Im Ω`, positive."""

    @property
    def omega(self) -> complex:
        """`Ω` as a complex number."""
        return complex(self.real, self.imag)


class LimitShapeValue(PayloadBase, frozen=True):
    """
    Limit shape value.

    The limit shape and its first derivatives at a point.
    """

    h: float
    """The limit shape."""
    h_nu: float
    """`∂h/∂ν`."""
    h_eta: float
    """`∂h/∂η`."""
    h_tau: float
    """`∂h/∂τ`, the growth speed."""
    gamma: float
    """`Im G(Ω)`."""
    kappa: float
    """`2τ Im Ω`."""


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
