"""
Jit.

Optional numba acceleration for the event loops.

When numba is not installed, `njit` is an identity decorator and the loops run
as plain Python. Both paths consume the same pre-drawn randomness, so a fixed
seed gives identical trajectories either way.
"""

from __future__ import annotations

import typing

from akpz.internal.logger import TRACE_LEVEL
from akpz.internal.logger import logger

__all__ = ("njit", "HAVE_NUMBA")

_logger = logger.getChild("jit")

_F = typing.TypeVar("_F", bound=typing.Callable[..., typing.Any])

HAVE_NUMBA: bool
"""Whether numba compiled the event loops."""

try:
    import numba

    HAVE_NUMBA = True

    def njit(func: _F) -> _F:
        """Compile `func` in nopython mode with caching."""
        return typing.cast(_F, numba.njit(cache=True)(func))

except ModuleNotFoundError:
    HAVE_NUMBA = False

    def njit(func: _F) -> _F:
        """Return `func` unchanged."""
        return func


_logger.log(TRACE_LEVEL, f"numba acceleration available: {HAVE_NUMBA}")


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
