"""
Interlacing.

Interlacing integer arrays, the state of every dynamics in akpz.

Level `m` holds `m` strictly increasing positions `x_1^m < ... < x_m^m` and
consecutive levels interlace, `x_k^{m+1} < x_k^m <= x_{k+1}^{m+1}`. Levels
are stored back to back in one int64 array, level `m` starting at offset
`m(m-1)/2`.
"""

from __future__ import annotations

import typing

import numpy as np

from akpz.abc.bases import PayloadBase
from akpz.abc.results import ValidationReport
from akpz.enums import LozengeType
from akpz.errors import ConfigException
from akpz.errors import InvalidArgumentException
from akpz.internal.logger import logger

if typing.TYPE_CHECKING:
    from akpz.internal.types import IntArray

__all__ = (
    "LOZENGE_RULE_SWAPPED",
    "InterlacingArray",
    "InterlacingPayload",
    "level_offset",
    "packed_initial",
    "validate",
    "height",
    "classify_lozenge",
    "lozenge_row",
)

_logger = logger.getChild("interlacing")

LOZENGE_RULE_SWAPPED: typing.Final[bool] = False
"""
Flip the II/III assignment of unoccupied sites.

With the default, an empty site is III when the height agrees with the level
below and II when it jumps. Setting this swaps the two.
"""


def level_offset(m: int) -> int:
    """The storage offset of level `m`."""
    return m * (m - 1) // 2


class InterlacingPayload(PayloadBase):
    """
    Interlacing payload.

    The JSON form of an array, `{"n": N, "levels": [[...], ...]}`.
    """

    n: int
    """The level count."""
    levels: list[list[int]]
    """Positions per level, bottom level first."""


class InterlacingArray:
    """
    Interlacing array.

    A triangular array of particle positions with `n` levels.

    !!! note
        Construction only checks the shape. Use `validate` for the ordering
        invariants.

    Parameters
    ----------
    n
        The level count.
    positions
        The flat positions, `n(n+1)/2` of them, level by level.
    """

    __slots__ = ("_n", "_positions")

    def __init__(self, n: int, positions: IntArray | typing.Sequence[int]) -> None:
        if n < 1:
            raise InvalidArgumentException(f"level count must be at least 1, got {n}")
        flat = np.array(positions, dtype=np.int64)
        if flat.shape != (level_offset(n + 1),):
            raise InvalidArgumentException(
                f"{n} levels need {level_offset(n + 1)} positions, got {flat.size}"
            )
        self._n = n
        self._positions: IntArray = flat

    @classmethod
    def from_levels(cls, levels: typing.Sequence[typing.Sequence[int]]) -> InterlacingArray:
        """
        From levels.

        Build an array from one position list per level.

        Raises
        ------
        InvalidArgumentException
            Raised when level `m` does not hold exactly `m` positions.
        """
        for m, level in enumerate(levels, start=1):
            if len(level) != m:
                raise InvalidArgumentException(f"level {m} must hold {m} positions, got {len(level)}")
        return cls(len(levels), [x for level in levels for x in level])

    @classmethod
    def from_json(cls, payload: str | bytes) -> InterlacingArray:
        """
        From JSON.

        Raises
        ------
        ConfigException
            Raised when the payload is not a valid array document.
        """
        try:
            decoded = InterlacingPayload._from_payload(payload)
        except Exception as e:
            raise ConfigException(f"malformed interlacing array JSON: {e}") from e
        if decoded.n != len(decoded.levels):
            raise ConfigException(f"n = {decoded.n} but {len(decoded.levels)} levels were given")
        try:
            return cls.from_levels(decoded.levels)
        except InvalidArgumentException as e:
            raise ConfigException(e.reason) from e

    @property
    def n(self) -> int:
        """The level count."""
        return self._n

    @property
    def positions(self) -> IntArray:
        """The flat positions. Mutating it mutates the array."""
        return self._positions

    @property
    def levels(self) -> list[list[int]]:
        """Positions per level, as plain lists."""
        return [self.level(m).tolist() for m in range(1, self._n + 1)]

    def level(self, m: int) -> IntArray:
        """A view of the positions of level `m`."""
        if not 1 <= m <= self._n:
            raise InvalidArgumentException(f"level {m} outside 1..{self._n}")
        start = level_offset(m)
        return self._positions[start : start + m]

    def position(self, k: int, m: int) -> int:
        """The position `x_k^m`."""
        if not 1 <= k <= m:
            raise InvalidArgumentException(f"particle {k} outside 1..{m}")
        return int(self.level(m)[k - 1])

    def copy(self) -> InterlacingArray:
        """An independent copy."""
        return InterlacingArray(self._n, self._positions.copy())

    def restrict(self, n: int) -> InterlacingArray:
        """The first `n` levels, as a new array."""
        if not 1 <= n <= self._n:
            raise InvalidArgumentException(f"cannot restrict {self._n} levels to {n}")
        return InterlacingArray(n, self._positions[: level_offset(n + 1)].copy())

    def to_payload(self) -> InterlacingPayload:
        """The JSON payload struct."""
        return InterlacingPayload(n=self._n, levels=self.levels)

    def to_json(self) -> str:
        """The JSON form `{"n": N, "levels": [...]}`."""
        return self.to_payload()._to_payload

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, InterlacingArray):
            return NotImplemented
        return self._n == other._n and bool(np.array_equal(self._positions, other._positions))

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"InterlacingArray(n={self._n}, levels={self.levels})"


def packed_initial(n: int) -> InterlacingArray:
    """
    Packed initial.

    The fully packed array `x_k^m = k - m - 1`, so level `m` is `-m, ..., -1`.

    Parameters
    ----------
    n
        The level count.

    Raises
    ------
    InvalidArgumentException
        Raised when `n < 1`.
    """
    if n < 1:
        raise InvalidArgumentException(f"level count must be at least 1, got {n}")
    return InterlacingArray(n, np.concatenate([np.arange(-m, 0, dtype=np.int64) for m in range(1, n + 1)]))


def validate(a: InterlacingArray, *, relaxed: bool = False) -> ValidationReport:
    """
    Validate.

    Check strict increase within levels, and interlacing between them.

    Violations are reported at the particle of the upper level that breaks
    the inequality, scanning levels bottom up and particles left to right.

    Parameters
    ----------
    a
        The array.
    relaxed
        Check the parallel update space instead, where the right inequality
        loosens to `x_k^m <= x_{k+1}^{m+1} + 1`.

    Returns
    -------
    ValidationReport
        The verdict.
    """
    slack = 1 if relaxed else 0
    below: IntArray | None = None
    for m in range(1, a.n + 1):
        level = a.level(m)
        gaps = np.diff(level)
        bad = np.flatnonzero(gaps <= 0)
        if bad.size:
            k = int(bad[0]) + 2
            return ValidationReport(
                ok=False, k=k, m=m, reason=f"x_{k - 1}^{m} < x_{k}^{m} fails"
            )
        if below is not None:
            # x_k^m < x_k^{m-1} for k < m, and x_{k-1}^{m-1} <= x_k^m + slack for k > 1
            left = np.flatnonzero(level[:-1] >= below)
            right = np.flatnonzero(below > level[1:] + slack)
            first_left = int(left[0]) + 1 if left.size else m + 1
            first_right = int(right[0]) + 2 if right.size else m + 1
            if first_left <= m or first_right <= m:
                if first_left <= first_right:
                    k = first_left
                    reason = f"x_{k}^{m} < x_{k}^{m - 1} fails"
                else:
                    k = first_right
                    reason = f"x_{k - 1}^{m - 1} <= x_{k}^{m}{' + 1' if relaxed else ''} fails"
                return ValidationReport(ok=False, k=k, m=m, reason=reason)
        below = level
    return ValidationReport(ok=True)


def _height(a: InterlacingArray, x: int, n: int) -> int:
    if n == 0:
        return 0
    level = a.level(n)
    return n - int(np.searchsorted(level, x, side="right"))


def height(a: InterlacingArray, x: int, n: int) -> int:
    """
    Height.

    The number of level `n` particles strictly to the right of `x`.

    Parameters
    ----------
    a
        The array.
    x
        The position.
    n
        The level.

    Raises
    ------
    InvalidArgumentException
        Raised when `n` is outside `1..a.n`.
    """
    if not 1 <= n <= a.n:
        raise InvalidArgumentException(f"level {n} outside 1..{a.n}")
    return _height(a, x, n)


def classify_lozenge(a: InterlacingArray, x: int, n: int) -> LozengeType:
    """
    Classify lozenge.

    The lozenge covering the white triangle at `(x, n)`: type I when a
    particle sits there, otherwise II or III from the height step against
    level `n - 1` (level 0 has height 0 everywhere).

    Parameters
    ----------
    a
        The array.
    x
        The position.
    n
        The level.

    Raises
    ------
    InvalidArgumentException
        Raised when `n` is outside `1..a.n`.
    """
    if not 1 <= n <= a.n:
        raise InvalidArgumentException(f"level {n} outside 1..{a.n}")
    level = a.level(n)
    index = int(np.searchsorted(level, x))
    if index < n and level[index] == x:
        return LozengeType.I
    steps = _height(a, x, n) != _height(a, x, n - 1)
    if steps != LOZENGE_RULE_SWAPPED:
        return LozengeType.II
    return LozengeType.III


def lozenge_row(a: InterlacingArray, n: int, xs: IntArray | typing.Sequence[int]) -> list[LozengeType]:
    """
    Lozenge row.

    Classify every site of `xs` on level `n` at once.
    """
    if not 1 <= n <= a.n:
        raise InvalidArgumentException(f"level {n} outside 1..{a.n}")
    sites = np.asarray(xs, dtype=np.int64)
    level = a.level(n)
    occupied = np.isin(sites, level)
    here = n - np.searchsorted(level, sites, side="right")
    if n > 1:
        below = (n - 1) - np.searchsorted(a.level(n - 1), sites, side="right")
    else:
        below = np.zeros_like(sites)
    steps = (here != below) != LOZENGE_RULE_SWAPPED
    out: list[LozengeType] = []
    for occ, step in zip(occupied.tolist(), steps.tolist()):
        if occ:
            out.append(LozengeType.I)
        elif step:
            out.append(LozengeType.II)
        else:
            out.append(LozengeType.III)
    return out


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
