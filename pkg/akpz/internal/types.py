"""
Types.

Array and value aliases shared across akpz.
"""

from __future__ import annotations

import typing

import numpy as np
import numpy.typing as npt

__all__ = ("IntArray", "FloatArray", "ComplexArray", "Position", "RngLike")

IntArray: typing.TypeAlias = npt.NDArray[np.int64]
FloatArray: typing.TypeAlias = npt.NDArray[np.float64]
ComplexArray: typing.TypeAlias = npt.NDArray[np.complex128]

Position: typing.TypeAlias = tuple[int, ...]
"""A strictly increasing tuple of lattice positions."""

if typing.TYPE_CHECKING:
    from akpz.abc.laws import RngStream

RngLike: typing.TypeAlias = "RngStream | np.random.Generator"
"""Anything the samplers accept as a source of randomness."""


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
