"""
Errors.

All of the akpz errors.
"""

from __future__ import annotations

import attrs

__all__ = (
    "AKPZException",
    "InvalidArgumentException",
    "DomainException",
    "SingularInputException",
    "QuadratureException",
    "InternalInvariantException",
    "InsufficientSamplesException",
    "ConfigException",
)


@attrs.define
class AKPZException(Exception):
    """The base akpz exception."""


# Arguments:


@attrs.define
class InvalidArgumentException(AKPZException):
    """Raised when an argument violates the documented preconditions."""

    reason: str
    """The reason the argument was rejected."""


@attrs.define
class DomainException(InvalidArgumentException):
    """Raised when a macroscopic point or slope lies outside the open domain."""


@attrs.define
class SingularInputException(InvalidArgumentException):
    """Raised when the input sits on a singularity, such as coincident points."""


# Numerics:


@attrs.define
class QuadratureException(AKPZException):
    """Raised when a contour quadrature does not converge."""

    reason: str
    """Why the quadrature was abandoned."""
    nodes: int
    """The node count reached."""
    value: float
    """Magnitude of the last value computed."""
    change: float
    """The last refinement change, or the rounding bound."""


@attrs.define
class InternalInvariantException(AKPZException):
    """Raised when an internal invariant breaks, such as an empty conditioning segment."""

    reason: str
    """The invariant that failed."""


# Statistics:


@attrs.define
class InsufficientSamplesException(AKPZException):
    """Raised when there are too few replicas to form an estimate with a confidence interval."""

    reason: str
    """What was missing."""


# Others:


@attrs.define
class ConfigException(AKPZException):
    """Raised when a config or state file cannot be parsed."""

    reason: str
    """The reason the file was rejected."""


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
