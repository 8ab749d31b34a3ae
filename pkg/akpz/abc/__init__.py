"""
Abstract classes.

All of the payload structs used across akpz.
"""

from __future__ import annotations

from akpz.abc.bases import PayloadBase
from akpz.abc.ensemble import EnsembleReport
from akpz.abc.ensemble import EnsembleSpec
from akpz.abc.ensemble import QueryStatistics
from akpz.abc.laws import RngStream
from akpz.abc.laws import StepLaw
from akpz.abc.points import MacroPoint
from akpz.abc.points import SpaceTimePoint
from akpz.abc.results import CheckResult
from akpz.abc.results import ContourSpec
from akpz.abc.results import Estimate
from akpz.abc.results import FrequencyReport
from akpz.abc.results import FrequencyRow
from akpz.abc.results import KernelValue
from akpz.abc.results import LozengeTile
from akpz.abc.results import SuiteReport
from akpz.abc.results import ValidationReport
from akpz.abc.shape import LimitShapeValue
from akpz.abc.shape import OmegaValue
from akpz.abc.shape import TriangleAngles

__all__ = (
    # .bases
    "PayloadBase",
    # .ensemble
    "EnsembleSpec",
    "EnsembleReport",
    "QueryStatistics",
    # .laws
    "StepLaw",
    "RngStream",
    # .points
    "SpaceTimePoint",
    "MacroPoint",
    # .results
    "ContourSpec",
    "KernelValue",
    "ValidationReport",
    "Estimate",
    "CheckResult",
    "SuiteReport",
    "FrequencyRow",
    "FrequencyReport",
    "LozengeTile",
    # .shape
    "TriangleAngles",
    "OmegaValue",
    "LimitShapeValue",
)


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
