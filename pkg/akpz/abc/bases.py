"""
Base's ABCs.

The base for all payload structs.
"""

from __future__ import annotations

import typing

import msgspec
import numpy as np

if typing.TYPE_CHECKING:
    from typing_extensions import Self

__all__ = ("PayloadBase",)


class PayloadBase(msgspec.Struct):
    """
    Payload base.

    The base class for every value that is written to, or read from, JSON.
    """

    @classmethod
    def _from_payload(cls, payload: str | bytes) -> Self:
        """From payload.

        Takes a string or bytes, and converts it to the class.
        """
        return msgspec.json.decode(payload, type=cls, strict=False)

    @property
    def _to_payload(self) -> str:
        """
        To payload.

        Takes itself, and converts it to a string.
        """
        return msgspec.json.encode(self, enc_hook=self._encode_hook).decode()

    @classmethod
    def _encode_hook(cls, obj: typing.Any) -> typing.Any:
        if isinstance(obj, np.integer):
            return int(typing.cast(int, obj))
        if isinstance(obj, np.floating):
            return float(typing.cast(float, obj))
        if isinstance(obj, np.ndarray):
            return typing.cast(typing.Any, obj).tolist()
        raise NotImplementedError(f"Cannot encode objects of type {type(obj)}")


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
