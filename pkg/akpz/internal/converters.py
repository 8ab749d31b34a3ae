"""
Converters.

JSON helpers for free-form reports and trace lines.
"""

from __future__ import annotations

import typing

__all__ = ("json_dumps", "json_loads", "HAVE_ORJSON")

json_dumps: typing.Callable[
    [typing.Sequence[typing.Any] | typing.Mapping[str, typing.Any]], bytes
]
"""The json dumper. Keys keep insertion order."""

json_loads: typing.Callable[
    [str | bytes], typing.Sequence[typing.Any] | typing.Mapping[str, typing.Any]
]
"""The json loader."""

HAVE_ORJSON: bool
"""Whether orjson is backing the converters."""

try:
    import orjson

    def _orjson_dumps(
        obj: typing.Sequence[typing.Any] | typing.Mapping[str, typing.Any],
    ) -> bytes:
        return orjson.dumps(obj, option=orjson.OPT_SERIALIZE_NUMPY)

    json_dumps = _orjson_dumps
    json_loads = orjson.loads
    HAVE_ORJSON = True

except ModuleNotFoundError:
    import json

    def basic_json_dumps(
        obj: typing.Sequence[typing.Any] | typing.Mapping[str, typing.Any],
    ) -> bytes:
        """Encode a JSON object to bytes."""
        return json.dumps(obj, separators=(",", ":")).encode("utf-8")

    json_dumps = basic_json_dumps
    json_loads = json.loads
    HAVE_ORJSON = False


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
