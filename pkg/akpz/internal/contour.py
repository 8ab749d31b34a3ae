"""
Contour.

Trapezoidal quadrature on circles, for single and double contour integrals.

Every integral here is normalised as `(1/2πi)∮ f(z) dz`. On a circle the
trapezoid rule is spectrally accurate for integrands analytic in an annulus
around the contour, so the only real enemy is cancellation: the error of a
double precision sum is about `eps * Σ|terms|`. The helpers report that
bound, and callers can re-run the same sums in mpmath when it is too large.
"""

from __future__ import annotations

import math
import typing

import mpmath
import numpy as np

from akpz.abc.results import ContourSpec
from akpz.errors import QuadratureException
from akpz.internal.logger import TRACE_LEVEL
from akpz.internal.logger import logger

if typing.TYPE_CHECKING:
    from akpz.internal.types import ComplexArray

__all__ = (
    "Ops",
    "NUMPY_OPS",
    "MPMATH_OPS",
    "Integrand",
    "QuadratureResult",
    "circle_nodes",
    "single_integral",
    "double_integral",
    "adaptive_integral",
    "log_peak_modulus",
)

_logger = logger.getChild("internal.contour")

MACHINE_EPS: typing.Final[float] = float(np.finfo(np.float64).eps)


class Ops:
    """
    Ops.

    The elementary functions an integrand may use, for one arithmetic backend.
    """

    __slots__ = ("name", "exp", "log")

    def __init__(
        self,
        name: str,
        exp: typing.Callable[[typing.Any], typing.Any],
        log: typing.Callable[[typing.Any], typing.Any],
    ) -> None:
        self.name = name
        self.exp = exp
        self.log = log


NUMPY_OPS: typing.Final[Ops] = Ops("numpy", np.exp, np.log)
"""Vectorised complex128 arithmetic."""
MPMATH_OPS: typing.Final[Ops] = Ops("mpmath", mpmath.exp, mpmath.log)
"""Scalar arbitrary precision arithmetic, at the current `mpmath.mp.dps`."""

Integrand = typing.Callable[[typing.Any, Ops], typing.Any]
"""`f(z, ops)`: evaluated on a complex array with NUMPY_OPS, or on an mpc with MPMATH_OPS."""


class QuadratureResult(typing.NamedTuple):
    """The outcome of a quadrature."""

    value: complex
    """The integral value."""
    change: float
    """Absolute change against the previous node count."""
    abs_sum: float
    """Sum of the absolute quadrature terms (the cancellation scale)."""
    nodes: int
    """The node count of the accepted value."""
    backend: str
    """Which arithmetic produced the value."""

    @property
    def est_error(self) -> float:
        """The larger of the refinement change and the rounding bound."""
        rounding = MACHINE_EPS * self.abs_sum if self.backend == "numpy" else 0.0
        return max(self.change, rounding)


def circle_nodes(spec: ContourSpec, nodes: int | None = None) -> tuple[ComplexArray, ComplexArray]:
    """
    Circle nodes.

    Nodes and weights such that `Σ f(z_j) w_j ≈ (1/2πi)∮ f(z) dz`.

    Parameters
    ----------
    spec
        The circle.
    nodes
        Override for the node count of `spec`.

    Returns
    -------
    tuple[numpy.ndarray, numpy.ndarray]
        The nodes and weights.
    """
    count = spec.nodes if nodes is None else nodes
    # half-step offset keeps nodes off the real axis
    theta = 2.0 * np.pi * (np.arange(count) + 0.5) / count
    offsets = spec.radius * np.exp(1j * theta)
    return spec.center + offsets, offsets / count


def _mp_circle_nodes(spec: ContourSpec, count: int) -> list[tuple[typing.Any, typing.Any]]:
    out: list[tuple[typing.Any, typing.Any]] = []
    for j in range(count):
        theta = 2 * mpmath.pi * (j + mpmath.mpf(0.5)) / count
        offset = spec.radius * mpmath.expj(theta)
        out.append((spec.center + offset, offset / count))
    return out


def single_integral(f: Integrand, spec: ContourSpec, nodes: int, *, backend: str = "numpy") -> tuple[complex, float]:
    """
    Single integral.

    Parameters
    ----------
    f
        The integrand.
    spec
        The contour.
    nodes
        The node count.
    backend
        `numpy` or `mpmath`.

    Returns
    -------
    tuple[complex, float]
        The trapezoid value and the sum of absolute terms.
    """
    if backend == "numpy":
        z, weights = circle_nodes(spec, nodes)
        terms = f(z, NUMPY_OPS) * weights
        return complex(np.sum(terms)), float(np.sum(np.abs(terms)))

    total = mpmath.mpc(0)
    abs_total = mpmath.mpf(0)
    for z, weight in _mp_circle_nodes(spec, nodes):
        term = f(z, MPMATH_OPS) * weight
        total += term
        abs_total += abs(term)
    return complex(total), float(abs_total)


_CHUNK: typing.Final[int] = 1 << 20


def double_integral(
    f_outer: Integrand,
    spec_outer: ContourSpec,
    g_inner: Integrand,
    spec_inner: ContourSpec,
    nodes: int,
    *,
    backend: str = "numpy",
) -> tuple[complex, float]:
    """
    Double integral.

    Evaluates `(1/2πi)^2 ∮ dz ∮ dw f(z) g(w) / (w - z)` with `z` on the outer
    spec and `w` on the inner spec. The two circles must be disjoint.

    Parameters
    ----------
    f_outer
        The `z` factor.
    spec_outer
        The `z` contour.
    g_inner
        The `w` factor.
    spec_inner
        The `w` contour.
    nodes
        The node count, used on both circles.
    backend
        `numpy` or `mpmath`.

    Returns
    -------
    tuple[complex, float]
        The trapezoid value and the sum of absolute terms.
    """
    if backend == "numpy":
        z, wz = circle_nodes(spec_outer, nodes)
        w, ww = circle_nodes(spec_inner, nodes)
        fz = f_outer(z, NUMPY_OPS) * wz
        gw = g_inner(w, NUMPY_OPS) * ww
        total = 0.0 + 0.0j
        abs_total = 0.0
        rows = max(1, _CHUNK // nodes)
        for start in range(0, nodes, rows):
            block = fz[start : start + rows, None] * gw[None, :] / (w[None, :] - z[start : start + rows, None])
            total += complex(np.sum(block))
            abs_total += float(np.sum(np.abs(block)))
        return total, abs_total

    z_nodes = _mp_circle_nodes(spec_outer, nodes)
    w_nodes = _mp_circle_nodes(spec_inner, nodes)
    fz_mp = [(z, f_outer(z, MPMATH_OPS) * weight) for z, weight in z_nodes]
    gw_mp = [(w, g_inner(w, MPMATH_OPS) * weight) for w, weight in w_nodes]
    total_mp = mpmath.mpc(0)
    abs_mp = mpmath.mpf(0)
    for z, fval in fz_mp:
        terms = [fval * gval / (w - z) for w, gval in gw_mp]
        total_mp += mpmath.fsum(terms)
        abs_mp += mpmath.fsum(abs(term) for term in terms)
    return complex(total_mp), float(abs_mp)


def adaptive_integral(
    evaluate: typing.Callable[[int, str], tuple[complex, float]],
    *,
    atol: float,
    rtol: float = 1e-12,
    min_nodes: int = 64,
    max_nodes: int = 1 << 16,
    max_dps: int = 200,
) -> QuadratureResult:
    """
    Adaptive integral.

    Doubles the node count until two successive values differ by less than
    `rtol * max(1, |value|)`. When the double precision rounding bound
    `eps * Σ|terms|` exceeds `atol`, the same sums are redone in mpmath at a
    working precision large enough to bring the bound under `atol`.

    Parameters
    ----------
    evaluate
        `evaluate(nodes, backend) -> (value, abs_sum)`.
    atol
        The absolute error the caller can tolerate.
    rtol
        The relative refinement tolerance.
    min_nodes
        The first node count.
    max_nodes
        The node cap.
    max_dps
        The cap on mpmath decimal digits.

    Returns
    -------
    QuadratureResult
        The accepted value, with diagnostics.

    Raises
    ------
    QuadratureException
        Raised when the node cap is reached without convergence.
    """
    nodes = min_nodes
    previous, abs_sum = evaluate(nodes, "numpy")
    change = math.inf
    while nodes < max_nodes:
        nodes *= 2
        value, abs_sum = evaluate(nodes, "numpy")
        change = abs(value - previous)
        noise = 10.0 * MACHINE_EPS * abs_sum
        previous = value
        if change <= max(rtol * max(1.0, abs(value)), noise):
            break
    else:
        raise QuadratureException(
            "node cap reached without convergence", nodes, abs(previous), change
        )

    rounding = MACHINE_EPS * abs_sum
    if rounding <= atol:
        _logger.log(TRACE_LEVEL, f"numpy quadrature converged at {nodes} nodes")
        return QuadratureResult(previous, change, abs_sum, nodes, "numpy")

    # 17 digits plus the ones cancellation eats, plus a guard.
    dps = 20 + math.ceil(math.log10(rounding / max(atol, 1e-300)))
    if dps > max_dps:
        raise QuadratureException(
            f"required precision of {dps} digits exceeds the cap of {max_dps}",
            nodes,
            abs(previous),
            rounding,
        )

    _logger.log(TRACE_LEVEL, f"escalating quadrature to mpmath at {dps} digits, {nodes} nodes")
    with mpmath.workdps(dps):
        previous, _ = evaluate(nodes, "mpmath")
        change = math.inf
        while True:
            if nodes * 2 > max_nodes:
                raise QuadratureException(
                    "node cap reached without convergence in extended precision",
                    nodes,
                    abs(previous),
                    change,
                )
            nodes *= 2
            value, _ = evaluate(nodes, "mpmath")
            change = abs(value - previous)
            previous = value
            if change <= max(atol, rtol * max(1.0, abs(value))):
                break
    return QuadratureResult(previous, change, abs_sum, nodes, "mpmath")


def log_peak_modulus(f: Integrand, spec: ContourSpec, samples: int = 64) -> float:
    """Log of the largest `|f|` over `samples` points of the circle."""
    z, _ = circle_nodes(spec, samples)
    with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
        values = np.abs(f(z, NUMPY_OPS))
        peak = float(np.max(values))
    if not math.isfinite(peak) or peak <= 0.0:
        return math.inf
    return math.log(peak)


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
