"""
Tiling.

Lozenge tilings read off an interlacing array, and their SVG and JSON forms.

Level `n` is drawn as a row of white triangles at height `n`. The row is
sheared half a unit per level so that `(x, n)` sits at
`(x + n/2, n √3/2)`, x pointing right and n pointing up.
"""

from __future__ import annotations

import math
import typing

import msgspec
import numpy as np

from akpz.abc.results import LozengeTile
from akpz.enums import LozengeType
from akpz.enums import TilingFormat
from akpz.errors import InvalidArgumentException
from akpz.interlacing import lozenge_row
from akpz.interlacing import validate
from akpz.internal.logger import logger

if typing.TYPE_CHECKING:
    from akpz.interlacing import InterlacingArray

__all__ = (
    "TILING_MARGIN",
    "LOZENGE_FILLS",
    "tiling_window",
    "tile_listing",
    "tiles_to_json",
    "tiles_from_json",
    "tiles_to_svg",
    "tiling_export",
)

_logger = logger.getChild("tiling")

TILING_MARGIN: typing.Final[int] = 2
"""Sites drawn beyond the outermost particles on each side."""
SVG_UNIT: typing.Final[float] = 20.0
"""Pixels per lattice unit."""
_ROW: typing.Final[float] = math.sqrt(3.0) / 2.0

LOZENGE_FILLS: typing.Final[typing.Mapping[LozengeType, str]] = {
    LozengeType.I: "#d95f02",
    LozengeType.II: "#1b9e77",
    LozengeType.III: "#7570b3",
}
"""The SVG fill of each lozenge type."""


def tiling_window(a: InterlacingArray, margin: int = TILING_MARGIN) -> tuple[int, int]:
    """
    Tiling window.

    The inclusive x range drawn on every level.

    Raises
    ------
    InvalidArgumentException
        Raised when `margin` is negative.
    """
    if margin < 0:
        raise InvalidArgumentException(f"margin must be nonnegative, got {margin}")
    return int(np.min(a.positions)) - margin, int(np.max(a.positions)) + margin


def tile_listing(a: InterlacingArray, margin: int = TILING_MARGIN) -> list[LozengeTile]:
    """
    Tile listing.

    Every lozenge of the drawn window, level by level from the bottom and
    left to right on each level.

    Raises
    ------
    InvalidArgumentException
        Raised when the array breaks interlacing.
    """
    report = validate(a)
    if not report.ok:
        raise InvalidArgumentException(f"cannot tile an invalid array: {report.reason}")
    low, high = tiling_window(a, margin)
    xs = np.arange(low, high + 1, dtype=np.int64)
    tiles: list[LozengeTile] = []
    for n in range(1, a.n + 1):
        for x, kind in zip(xs.tolist(), lozenge_row(a, n, xs)):
            tiles.append(LozengeTile(x=x, n=n, type=kind))
    _logger.debug(f"{len(tiles)} lozenges on {a.n} levels, x in [{low}, {high}]")
    return tiles


def tiles_to_json(tiles: typing.Sequence[LozengeTile]) -> bytes:
    """The JSON list `[{"x": ..., "n": ..., "type": ...}, ...]`."""
    return msgspec.json.encode(list(tiles))


def tiles_from_json(payload: str | bytes) -> list[LozengeTile]:
    """Decode a list written by `tiles_to_json`."""
    return msgspec.json.decode(payload, type=list[LozengeTile])


def _vertices(tile: LozengeTile) -> list[tuple[float, float]]:
    cx = tile.x + tile.n / 2.0
    base, mid, top = (tile.n - 1) * _ROW, tile.n * _ROW, (tile.n + 1) * _ROW
    if tile.type is LozengeType.I:
        return [(cx, base), (cx + 0.5, mid), (cx, top), (cx - 0.5, mid)]
    if tile.type is LozengeType.III:
        return [(cx - 1.0, base), (cx, base), (cx + 0.5, mid), (cx - 0.5, mid)]
    return [(cx - 0.5, mid), (cx + 0.5, mid), (cx + 1.0, base), (cx, base)]


def tiles_to_svg(tiles: typing.Sequence[LozengeTile]) -> str:
    """
    Tiles to SVG.

    An SVG drawing with one filled polygon per lozenge. Coordinates are
    printed with three decimals so equal input gives byte-identical output.

    Raises
    ------
    InvalidArgumentException
        Raised when there is nothing to draw.
    """
    if not tiles:
        raise InvalidArgumentException("no lozenges to draw")
    shapes = [(tile, _vertices(tile)) for tile in tiles]
    xs = [x for _, vertices in shapes for x, _ in vertices]
    ys = [y for _, vertices in shapes for _, y in vertices]
    left, right = min(xs), max(xs)
    bottom, top = min(ys), max(ys)
    width = (right - left) * SVG_UNIT
    height = (top - bottom) * SVG_UNIT

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.3f}" height="{height:.3f}" '
        f'viewBox="0 0 {width:.3f} {height:.3f}">',
    ]
    for tile, vertices in shapes:
        # svg y grows downwards
        points = " ".join(f"{(x - left) * SVG_UNIT:.3f},{(top - y) * SVG_UNIT:.3f}" for x, y in vertices)
        lines.append(
            f'<polygon points="{points}" fill="{LOZENGE_FILLS[tile.type]}" stroke="#222222" '
            f'stroke-width="0.5" data-x="{tile.x}" data-n="{tile.n}" data-type="{tile.type.value}"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def tiling_export(
    a: InterlacingArray, fmt: TilingFormat | str = TilingFormat.SVG, *, margin: int = TILING_MARGIN
) -> bytes:
    """
    Tiling export.

    The lozenge tiling of `a` in the requested format.

    Parameters
    ----------
    a
        A valid array.
    fmt
        `svg` or `json`.
    margin
        Sites drawn beyond the outermost particles.

    Raises
    ------
    InvalidArgumentException
        Raised for an unknown format or an invalid array.
    """
    try:
        fmt = TilingFormat(fmt)
    except ValueError as e:
        raise InvalidArgumentException(f"unknown tiling format {fmt!r}") from e
    tiles = tile_listing(a, margin)
    if fmt is TilingFormat.JSON:
        return tiles_to_json(tiles)
    return tiles_to_svg(tiles).encode("utf-8")


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
