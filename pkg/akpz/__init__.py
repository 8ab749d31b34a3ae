"""
Anisotropic KPZ growth in 2+1 dimensions.

Interlacing particle dynamics, their correlation kernel, the macroscopic
limit shape and a Monte Carlo harness tying the three together.

GitHub:
https://github.com/akpz-dev/akpz
"""

from __future__ import annotations

import logging

from akpz.internal.logger import TRACE_LEVEL
from akpz.internal.logger import TRACE_NAME

logging.addLevelName(TRACE_LEVEL, TRACE_NAME)


from akpz.abc.ensemble import EnsembleReport
from akpz.abc.ensemble import EnsembleSpec
from akpz.abc.laws import RngStream
from akpz.abc.laws import StepLaw
from akpz.abc.points import MacroPoint
from akpz.abc.points import SpaceTimePoint
from akpz.abc.results import Estimate
from akpz.abc.results import KernelValue
from akpz.config import RunConfig
from akpz.enums import ChainType
from akpz.enums import KernelRepr
from akpz.enums import LozengeType
from akpz.enums import RowSide
from akpz.enums import StepFamily
from akpz.errors import AKPZException
from akpz.errors import ConfigException
from akpz.errors import DomainException
from akpz.errors import InsufficientSamplesException
from akpz.errors import InternalInvariantException
from akpz.errors import InvalidArgumentException
from akpz.errors import QuadratureException
from akpz.errors import SingularInputException
from akpz.interlacing import InterlacingArray
from akpz.interlacing import classify_lozenge
from akpz.interlacing import height
from akpz.interlacing import packed_initial
from akpz.interlacing import validate
from akpz.internal.about import __author__
from akpz.internal.about import __author_email__
from akpz.internal.about import __license__
from akpz.internal.about import __maintainer__
from akpz.internal.about import __url__
from akpz.internal.about import __version__

__all__ = (
    # .about
    "__author__",
    "__author_email__",
    "__maintainer__",
    "__license__",
    "__url__",
    "__version__",
    # .abc
    "EnsembleSpec",
    "EnsembleReport",
    "RngStream",
    "StepLaw",
    "SpaceTimePoint",
    "MacroPoint",
    "Estimate",
    "KernelValue",
    # .config
    "RunConfig",
    # .enums
    "ChainType",
    "KernelRepr",
    "LozengeType",
    "RowSide",
    "StepFamily",
    # .errors
    "AKPZException",
    "InvalidArgumentException",
    "DomainException",
    "SingularInputException",
    "QuadratureException",
    "InternalInvariantException",
    "InsufficientSamplesException",
    "ConfigException",
    # .interlacing
    "InterlacingArray",
    "packed_initial",
    "validate",
    "height",
    "classify_lozenge",
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
