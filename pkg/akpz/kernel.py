"""
Kernel.

The correlation kernel of the packed continuous time dynamics, in every
representation akpz uses.

Two coordinate systems appear. The original kernel `𝒦(x1, n1, t1; x2, n2, t2)`
lives where level `n` particles start at `-n, ..., -1`. The shifted kernel
`K` moves level `n` right by `n` and conjugates by `(-1)^{n1-n2}`, so that

    𝒦(x1, n1, t1; x2, n2, t2) = (-1)^{n1-n2} K(x1+n1, n1, t1; x2+n2, n2, t2).

At a fixed `(n, t)` the shifted kernel is conjugate to the Christoffel-Darboux
kernel `K_{n,t}` of the orthonormal Charlier functions `q_k(x, t)`; everywhere
else it is evaluated as a double contour integral.
"""

from __future__ import annotations

import math
import typing

import numpy as np
from scipy import special

from akpz.abc.points import SpaceTimePoint
from akpz.abc.results import ContourSpec
from akpz.abc.results import KernelValue
from akpz.enums import KernelRepr
from akpz.enums import LozengeType
from akpz.enums import StepFamily
from akpz.errors import InvalidArgumentException
from akpz.internal.contour import MACHINE_EPS
from akpz.internal.contour import NUMPY_OPS
from akpz.internal.contour import Ops
from akpz.internal.contour import adaptive_integral
from akpz.internal.contour import double_integral
from akpz.internal.contour import log_peak_modulus
from akpz.internal.contour import single_integral
from akpz.internal.logger import TRACE_LEVEL
from akpz.internal.logger import logger
from akpz.transfer import Symbol

if typing.TYPE_CHECKING:
    from akpz.abc.laws import StepLaw
    from akpz.abc.points import MacroPoint
    from akpz.internal.types import FloatArray
    from akpz.internal.types import IntArray

__all__ = (
    "KERNEL_ATOL",
    "charlier",
    "charlier_contour",
    "q_fn",
    "q_table",
    "support_bound",
    "kernel_fixed",
    "fixed_kernel_matrix",
    "precedes",
    "shifted_kernel",
    "kernel_spacetime",
    "kernel_series",
    "black_triangle",
    "triangle_kernel",
    "lozenge_kernel",
    "white_residue",
    "black_residue",
    "corr_det",
    "flux_derivative_check",
    "kernel_general",
    "exact_height_mean",
    "exact_height_variance",
    "bulk_density",
)

_logger = logger.getChild("kernel")

KERNEL_ATOL: typing.Final[float] = 1e-10
"""The absolute error contour evaluations aim for."""
FIXED_RADIUS: typing.Final[float] = 0.4
"""Radius of both contour circles unless rounding would cost more than the error target."""
RADIUS_CANDIDATES: typing.Final[int] = 18
"""How many circle radii the contour search tries per circle."""
_RESCALE: typing.Final[float] = 1e150


# Charlier functions:


def charlier(k: int, x: float, t: float) -> float:
    """
    Charlier.

    The Charlier polynomial `C_k(x, t)` from the three term recurrence
    `t C_{j+1} = (j + t - x) C_j - j C_{j-1}`, `C_0 = 1`, `C_1 = 1 - x/t`.

    Parameters
    ----------
    k
        The degree.
    x
        The argument. Any real is accepted, the polynomial is evaluated as is.
    t
        The time, positive.

    Raises
    ------
    InvalidArgumentException
        Raised when `k < 0` or `t <= 0`.
    """
    if k < 0:
        raise InvalidArgumentException(f"degree must be nonnegative, got {k}")
    if not t > 0.0:
        raise InvalidArgumentException(f"charlier polynomials need t > 0, got {t}")
    previous, current = 0.0, 1.0
    for j in range(k):
        previous, current = current, ((j + t - x) * current - j * previous) / t
    return current


def _best_radius(
    f: typing.Callable[[typing.Any, Ops], typing.Any],
    center: float,
    radii: FloatArray,
) -> float:
    peaks = [log_peak_modulus(f, ContourSpec(center=center, radius=float(r))) for r in radii]
    return float(radii[int(np.argmin(peaks))])


def charlier_contour(k: int, x: int, t: float, *, atol: float = KERNEL_ATOL) -> KernelValue:
    """
    Charlier contour.

    `C_k(x, t)` from its defining contour integral
    `(k!/t^k) (1/2πi) ∮ (1-w)^x e^{wt} w^{-k-1} dw` around 0. Only used to
    validate the recurrence of `charlier`.

    Parameters
    ----------
    k
        The degree.
    x
        The argument.
    t
        The time, positive.
    atol
        The absolute error target of the contour integral.

    Raises
    ------
    InvalidArgumentException
        Raised when `k < 0` or `t <= 0`.
    QuadratureException
        Raised when the quadrature does not converge.
    """
    if k < 0:
        raise InvalidArgumentException(f"degree must be nonnegative, got {k}")
    if not t > 0.0:
        raise InvalidArgumentException(f"charlier polynomials need t > 0, got {t}")

    def integrand(w: typing.Any, ops: Ops) -> typing.Any:
        return ops.exp(x * ops.log(1 - w) + t * w - (k + 1) * ops.log(w))

    # (1-w)^x has a pole at 1 when x < 0
    top = 20.0 if x >= 0 else 0.9
    radius = _best_radius(integrand, 0.0, np.geomspace(0.02, top, 2 * RADIUS_CANDIDATES))
    spec = ContourSpec(center=0.0, radius=radius)
    scale = math.exp(special.gammaln(k + 1) - k * math.log(t))
    result = adaptive_integral(
        lambda nodes, backend: single_integral(integrand, spec, nodes, backend=backend),
        atol=atol / max(scale, 1.0),
    )
    return KernelValue(value=scale * result.value.real, est_error=scale * result.est_error, repr=KernelRepr.CONTOUR.value)


def q_table(kmax: int, xs: IntArray | typing.Sequence[int], t: float) -> FloatArray:
    """
    Q table.

    The orthonormal Charlier functions
    `q_k(x, t) = w_t(x)^{1/2} t^{k/2} k!^{-1/2} C_k(x, t)` for `k = 0..kmax`,
    with `w_t(x) = e^{-t} t^x / x!`.

    The recurrence runs on the normalised form
    `sqrt((k+1)t) q_{k+1} = (k + t - x) q_k - sqrt(kt) q_{k-1}` with a per
    column log scale, so neither the Poisson weight nor the polynomial
    overflows for `x, k, t` up to `10^4`.

    Parameters
    ----------
    kmax
        The largest degree.
    xs
        The arguments, nonnegative integers.
    t
        The time, positive.

    Returns
    -------
    numpy.ndarray
        Shape `(kmax + 1, len(xs))`.

    Raises
    ------
    InvalidArgumentException
        Raised when `kmax < 0`, `t <= 0` or some `x < 0`.
    """
    if kmax < 0:
        raise InvalidArgumentException(f"degree must be nonnegative, got {kmax}")
    if not t > 0.0:
        raise InvalidArgumentException(f"charlier functions need t > 0, got {t}")
    x = np.asarray(xs, dtype=np.int64)
    if x.size and int(x.min()) < 0:
        raise InvalidArgumentException(f"charlier functions live on x >= 0, got {int(x.min())}")

    xf = x.astype(np.float64)
    scale = 0.5 * (-t + special.xlogy(xf, t) - special.gammaln(xf + 1.0))
    out = np.empty((kmax + 1, x.size), dtype=np.float64)
    previous = np.zeros(x.size)
    current = np.ones(x.size)
    with np.errstate(under="ignore"):
        out[0] = np.exp(scale)
    for k in range(kmax):
        upcoming = ((k + t - xf) * current - math.sqrt(k * t) * previous) / math.sqrt((k + 1) * t)
        previous, current = current, upcoming
        big = np.maximum(np.abs(previous), np.abs(current))
        rescale = big > _RESCALE
        if np.any(rescale):
            previous[rescale] /= big[rescale]
            current[rescale] /= big[rescale]
            scale[rescale] += np.log(big[rescale])
        with np.errstate(under="ignore", divide="ignore"):
            out[k + 1] = np.sign(current) * np.exp(scale + np.log(np.abs(current)))
    return out


def q_fn(k: int, x: int, t: float) -> float:
    """The orthonormal Charlier function `q_k(x, t)`."""
    return float(q_table(k, [x], t)[k, 0])


def support_bound(n: int, t: float) -> int:
    """
    Support bound.

    A shifted position beyond which `K_{n,t}` is negligible in double
    precision. The bulk of level `n` sits in `[(√t-√n)², (√t+√n)²]` and the
    Poisson tails beyond decay faster than exponentially.
    """
    edge = (math.sqrt(t) + math.sqrt(n)) ** 2
    return math.ceil(edge + 15.0 * math.sqrt(edge) + 40.0)


def _cd_matrix(n: int, t: float, xs: IntArray, ys: IntArray) -> tuple[FloatArray, FloatArray]:
    points = np.union1d(xs, ys)
    table = q_table(n, points, t)
    ix = np.searchsorted(points, xs)
    iy = np.searchsorted(points, ys)
    qx_low, qx = table[n - 1, ix][:, None], table[n, ix][:, None]
    qy_low, qy = table[n - 1, iy][None, :], table[n, iy][None, :]
    root = math.sqrt(n * t)
    first = root * qx_low * qy
    second = root * qx * qy_low
    diff = (xs[:, None] - ys[None, :]).astype(np.float64)
    same = diff == 0.0
    with np.errstate(divide="ignore", invalid="ignore"):
        values = np.where(same, 0.0, (first - second) / np.where(same, 1.0, diff))
        errors = np.where(same, 0.0, MACHINE_EPS * (np.abs(first) + np.abs(second)) / np.where(same, 1.0, np.abs(diff)))
    if np.any(same):
        # x = y: the partial sum of q_k(x)^2, never a limit of the ratio.
        diagonal = np.sum(table[:n, ix] ** 2, axis=0)
        rows, cols = np.nonzero(same)
        values[rows, cols] = diagonal[rows]
        errors[rows, cols] = MACHINE_EPS * n * diagonal[rows]
    return values, errors


def fixed_kernel_matrix(n: int, t: float, xs: IntArray | typing.Sequence[int], ys: IntArray | typing.Sequence[int]) -> FloatArray:
    """
    Fixed kernel matrix.

    `K_{n,t}(x, y)` for every `x` in `xs` and `y` in `ys`, in shifted
    coordinates.

    Raises
    ------
    InvalidArgumentException
        Raised when `n < 1`, `t <= 0` or a position is negative.
    """
    if n < 1:
        raise InvalidArgumentException(f"level must be at least 1, got {n}")
    values, _ = _cd_matrix(n, t, np.asarray(xs, dtype=np.int64), np.asarray(ys, dtype=np.int64))
    return values


def kernel_fixed(n: int, t: float, x: int, y: int) -> KernelValue:
    """
    Kernel fixed.

    The symmetric kernel `K_{n,t}(x, y) = Σ_{k<n} q_k(x) q_k(y)`, by the
    Christoffel-Darboux formula
    `sqrt(nt) (q_{n-1}(x) q_n(y) - q_n(x) q_{n-1}(y)) / (x - y)` off the
    diagonal.

    Parameters
    ----------
    n
        The level, at least 1.
    t
        The time, positive.
    x, y
        Shifted positions, nonnegative.

    Returns
    -------
    KernelValue
        The value, with a rounding error estimate.
    """
    if n < 1:
        raise InvalidArgumentException(f"level must be at least 1, got {n}")
    values, errors = _cd_matrix(n, t, np.array([x], dtype=np.int64), np.array([y], dtype=np.int64))
    return KernelValue(value=float(values[0, 0]), est_error=float(errors[0, 0]), repr=KernelRepr.CHARLIER.value)


# Space-time kernel:


def precedes(n1: int, t1: float, n2: int, t2: float) -> bool:
    """Whether `(n1, t1) ≺ (n2, t2)`: `n1 <= n2`, `t1 >= t2` and the pairs differ."""
    return n1 <= n2 and t1 >= t2 and (n1, t1) != (n2, t2)


def _coefficient_sequence(kmax: int, m: float, s: float) -> FloatArray:
    # [u^k] (1-u)^m e^{su} for k = 0..kmax
    out = np.empty(kmax + 1, dtype=np.float64)
    out[0] = 1.0
    if kmax >= 1:
        out[1] = s - m
    for k in range(1, kmax):
        out[k + 1] = ((k + s - m) * out[k] - s * out[k - 1]) / (k + 1)
    return out


def _precedence_term(x1: int, n1: int, t1: float, x2: int, n2: int, t2: float) -> float:
    # Residue at z = 1 of z^{n1-n2} e^{(t2-t1)(z-1)} (1-z)^{x2-x1-1}.
    p = x1 - x2
    if p < 0:
        return 0.0
    return -float(_coefficient_sequence(p, n1 - n2, t1 - t2)[p])


def _check_time(t: float) -> None:
    if not t > 0.0:
        raise InvalidArgumentException(f"the kernel is evaluated at t > 0 only, got {t}")


def _circle_pair(
    f: typing.Callable[[typing.Any, Ops], typing.Any],
    g: typing.Callable[[typing.Any, Ops], typing.Any],
    atol: float = KERNEL_ATOL,
) -> tuple[ContourSpec, ContourSpec]:
    # Γ1 about 1 and Γ0 about 0, disjoint.
    gamma_one = ContourSpec(center=1.0, radius=FIXED_RADIUS)
    gamma_zero = ContourSpec(center=0.0, radius=FIXED_RADIUS)
    fixed_peak = log_peak_modulus(f, gamma_one) + log_peak_modulus(g, gamma_zero) - math.log(1.0 - 2.0 * FIXED_RADIUS)
    if fixed_peak + math.log(MACHINE_EPS) <= math.log(atol):
        return gamma_one, gamma_zero

    # Otherwise search for the pair with the lowest peak moduli.
    _logger.log(TRACE_LEVEL, f"fixed contour radius loses {fixed_peak:.1f} nats to rounding, searching")
    radii = np.linspace(0.05, 0.9, RADIUS_CANDIDATES)
    peak_f = np.array([log_peak_modulus(f, ContourSpec(center=1.0, radius=float(r))) for r in radii])
    peak_g = np.array([log_peak_modulus(g, ContourSpec(center=0.0, radius=float(r))) for r in radii])
    best = (math.inf, FIXED_RADIUS, FIXED_RADIUS)
    for i, r1 in enumerate(radii):
        for j, r0 in enumerate(radii):
            gap = 1.0 - r1 - r0
            if gap < 0.05:
                continue
            score = peak_f[i] + peak_g[j] - math.log(gap)
            if score < best[0]:
                best = (score, float(r1), float(r0))
    _, r1, r0 = best
    return ContourSpec(center=1.0, radius=r1), ContourSpec(center=0.0, radius=r0)


def _contour_kernel(x1: int, n1: int, t1: float, x2: int, n2: int, t2: float, atol: float) -> KernelValue:
    residue = _precedence_term(x1, n1, t1, x2, n2, t2) if precedes(n1, t1, n2, t2) else 0.0
    # no pole at z = 1, or none at w = 0: the double integral vanishes
    if x1 < 0 or n2 < 1:
        return KernelValue(value=residue, est_error=0.0, repr=KernelRepr.CONTOUR.value)

    def outer(z: typing.Any, ops: Ops) -> typing.Any:
        return ops.exp(n1 * ops.log(z) + t1 * (1 - z) - (x1 + 1) * ops.log(1 - z))

    def inner(w: typing.Any, ops: Ops) -> typing.Any:
        return ops.exp(x2 * ops.log(1 - w) - t2 * (1 - w) - n2 * ops.log(w))

    gamma_one, gamma_zero = _circle_pair(outer, inner, atol)
    result = adaptive_integral(
        lambda nodes, backend: double_integral(outer, gamma_one, inner, gamma_zero, nodes, backend=backend),
        atol=atol,
    )
    _logger.log(
        TRACE_LEVEL,
        f"contour kernel ({x1},{n1},{t1};{x2},{n2},{t2}) with {result.nodes} nodes via {result.backend}",
    )
    if result.est_error > atol:
        _logger.warning(f"kernel error estimate {result.est_error:.2e} exceeds {atol:.2e}")
    return KernelValue(
        value=residue + result.value.real,
        est_error=result.est_error,
        repr=KernelRepr.CONTOUR.value,
    )


def shifted_kernel(
    x1: int,
    n1: int,
    t1: float,
    x2: int,
    n2: int,
    t2: float,
    *,
    repr: KernelRepr = KernelRepr.AUTO,
    atol: float = KERNEL_ATOL,
) -> KernelValue:
    """
    Shifted kernel.

    The shifted and conjugated kernel `K(x1, n1, t1; x2, n2, t2)`.

    The contour form is the double integral
    `e^{t1-t2} (1/2πi)^2 ∮_{Γ1} dz ∮_{Γ0} dw z^{n1} e^{-t1 z} (1-z)^{-x1-1}
    e^{t2 w} (1-w)^{x2} w^{-n2} / (w - z)`, plus, when `(n1, t1) ≺ (n2, t2)`,
    the residue at `w = z`. That residue is a finite Charlier sum and is
    evaluated in closed form.

    Parameters
    ----------
    x1, n1, t1
        The first point, `n1 >= 0`.
    x2, n2, t2
        The second point, `n2 >= 0`.
    repr
        The representation. Charlier requires equal `(n, t)` and nonnegative
        positions; auto uses it exactly then.
    atol
        The absolute error target of the contour form.

    Raises
    ------
    InvalidArgumentException
        Raised for a negative level or time, or a Charlier request it cannot serve.
    QuadratureException
        Raised when the contour quadrature does not converge.
    """
    if n1 < 0 or n2 < 0:
        raise InvalidArgumentException(f"levels must be nonnegative, got {n1} and {n2}")
    _check_time(t1)
    _check_time(t2)

    fixed = n1 == n2 and t1 == t2
    if repr is KernelRepr.CHARLIER and not (fixed and x2 >= 0 and (x1 >= 0 or n1 == 0)):
        raise InvalidArgumentException("the charlier representation needs equal (n, t) and x >= 0")
    if fixed and repr is not KernelRepr.CONTOUR and x2 >= 0:
        if x1 < 0 or n1 == 0:
            return KernelValue(value=0.0, est_error=0.0, repr=KernelRepr.CHARLIER.value)
        base = kernel_fixed(n1, t1, x1, x2)
        # K(x, n, t; y, n, t) = sqrt(w_t(x) / w_t(y)) K_{n,t}(x, y)
        ratio = math.exp(
            0.5 * ((x1 - x2) * math.log(t1) - special.gammaln(x1 + 1) + special.gammaln(x2 + 1))
        )
        return KernelValue(value=ratio * base.value, est_error=ratio * base.est_error, repr=base.repr)
    return _contour_kernel(x1, n1, t1, x2, n2, t2, atol)


def kernel_spacetime(
    p1: SpaceTimePoint,
    p2: SpaceTimePoint,
    *,
    repr: KernelRepr = KernelRepr.AUTO,
    atol: float = KERNEL_ATOL,
) -> KernelValue:
    """
    Kernel spacetime.

    The correlation kernel `𝒦(p1; p2)` in original coordinates.

    Parameters
    ----------
    p1, p2
        The two points, at positive times.
    repr
        The representation, see `shifted_kernel`.
    atol
        The absolute error target of the contour form.

    Raises
    ------
    InvalidArgumentException
        Raised when a time is not positive.
    QuadratureException
        Raised when the contour quadrature does not converge.
    """
    shifted = shifted_kernel(p1.x + p1.n, p1.n, p1.t, p2.x + p2.n, p2.n, p2.t, repr=repr, atol=atol)
    if (p1.n - p2.n) % 2:
        return KernelValue(value=-shifted.value, est_error=shifted.est_error, repr=shifted.repr)
    return shifted


def _psi(k: int, x: int, t: float, atol: float) -> float:
    # (1/2πi) ∮ e^{tw} (1-w)^k w^{-x-1} dw around both 0 and 1
    if k >= 0:
        if x < 0:
            return 0.0
        return _psi_polynomial(k, x, t)

    def integrand(w: typing.Any, ops: Ops) -> typing.Any:
        return ops.exp(t * w + k * ops.log(1 - w) - (x + 1) * ops.log(w))

    spec = ContourSpec(center=0.5, radius=1.0)
    result = adaptive_integral(
        lambda nodes, backend: single_integral(integrand, spec, nodes, backend=backend), atol=atol
    )
    return result.value.real


def _psi_polynomial(k: int, x: int, t: float) -> float:
    # [w^x] e^{tw} (1-w)^k
    return float(_coefficient_sequence(x, k, t)[x])


def kernel_series(
    x1: int, n1: int, t1: float, x2: int, n2: int, t2: float, *, atol: float = KERNEL_ATOL
) -> float:
    """
    Kernel series.

    The shifted kernel as the finite sum
    `Σ_{k=1}^{n2} Ψ^{t1}_{n1-k}(x1) Φ^{t2}_{n2-k}(x2)` with
    `Ψ^t_j(x) = (1/2πi)∮ e^{tw} (1-w)^j w^{-x-1} dw` around 0 and 1 and
    `Φ^t_j(x) = e^{-t} [w^j] (1-w)^x e^{tw}`. It is an independent check of
    `shifted_kernel` and is only valid when `(n1, t1)` does not precede
    `(n2, t2)`.

    Raises
    ------
    InvalidArgumentException
        Raised when `(n1, t1) ≺ (n2, t2)`, where the sum does not terminate.
    """
    if precedes(n1, t1, n2, t2):
        raise InvalidArgumentException("the finite series needs (n1, t1) not preceding (n2, t2)")
    _check_time(t1)
    _check_time(t2)
    phi = _coefficient_sequence(max(n2 - 1, 0), x2, t2) * math.exp(-t2)
    total = 0.0
    for k in range(1, n2 + 1):
        total += _psi(n1 - k, x1, t1, atol) * float(phi[n2 - k])
    return total


# Lozenges:


def black_triangle(x: int, n: int, kind: LozengeType) -> tuple[int, int]:
    """
    Black triangle.

    The black triangle of the lozenge of type `kind` whose white triangle
    sits at `(x, n)`.
    """
    match kind:
        case LozengeType.I:
            return x, n
        case LozengeType.II:
            return x + 1, n - 1
        case LozengeType.III:
            return x, n - 1


def triangle_kernel(
    black: tuple[int, int, float],
    white: tuple[int, int, float],
    *,
    atol: float = KERNEL_ATOL,
) -> float:
    """
    Triangle kernel.

    `𝒦̃(black; white) = (-1)^{x-x'+n-n'} 𝒦(x, n, t; x', n', t')` for a black
    triangle `(x, n, t)`, `n >= 0`, and a white one `(x', n', t')`, `n' >= 1`.
    """
    return _triangle_value(black, white, atol).value


def _triangle_value(black: tuple[int, int, float], white: tuple[int, int, float], atol: float) -> KernelValue:
    bx, bn, bt = black
    wx, wn, wt = white
    if wn < 1:
        raise InvalidArgumentException(f"white triangles live on levels >= 1, got {wn}")
    entry = shifted_kernel(bx + bn, bn, bt, wx + wn, wn, wt, atol=atol)
    if (bx - wx) % 2:
        return KernelValue(value=-entry.value, est_error=entry.est_error, repr=entry.repr)
    return entry


def lozenge_kernel(
    p1: SpaceTimePoint,
    theta1: LozengeType,
    p2: SpaceTimePoint,
    theta2: LozengeType,
    *,
    atol: float = KERNEL_ATOL,
) -> KernelValue:
    """
    Lozenge kernel.

    The kernel whose determinants give lozenge probabilities. A lozenge is
    named by its white triangle `(x, n)` and its type; the entry pairs the
    black triangle of the first lozenge with the white triangle of the
    second, so `theta2` does not enter. Up to a conjugation that leaves
    determinants unchanged, the three cases read `K(x+n, n; ...)` for I,
    `-K(x+n, n-1; ...)` for II and `K(x+n-1, n-1; ...)` for III.

    Parameters
    ----------
    p1, theta1
        The first lozenge.
    p2, theta2
        The second lozenge.
    atol
        The absolute error target of the contour form.
    """
    del theta2
    bx, bn = black_triangle(p1.x, p1.n, theta1)
    return _triangle_value((bx, bn, p1.t), (p2.x, p2.n, p2.t), atol)


def white_residue(x: int, n: int, t: float, white: tuple[int, int, float]) -> float:
    """
    White residue.

    With the white triangle `(x, n)` fixed, the sum of `𝒦̃` over its three
    possible black partners, paired with `white`. It equals 1 when `white` is
    `(x, n, t)` and 0 otherwise.
    """
    blacks = [black_triangle(x, n, kind) for kind in LozengeType]
    return sum(triangle_kernel((bx, bn, t), white) for bx, bn in blacks)


def black_residue(black: tuple[int, int, float], x: int, n: int, t: float) -> float:
    """
    Black residue.

    With the black triangle `(x, n)`, `n >= 1`, fixed, the sum of `𝒦̃`
    from `black` over its three possible white partners
    `(x, n)`, `(x, n+1)` and `(x-1, n+1)`. It equals 1 when `black` is
    `(x, n, t)` and 0 otherwise.
    """
    if n < 1:
        raise InvalidArgumentException(f"the black residue identity needs an interior triangle, got n = {n}")
    whites = [(x, n), (x, n + 1), (x - 1, n + 1)]
    return sum(triangle_kernel(black, (wx, wn, t)) for wx, wn in whites)


def _space_like(points: typing.Sequence[SpaceTimePoint]) -> list[int]:
    order = sorted(range(len(points)), key=lambda i: (points[i].t, -points[i].n))
    for a, b in zip(order, order[1:]):
        if points[a].t < points[b].t and points[a].n < points[b].n:
            raise InvalidArgumentException(
                f"points {points[a]} and {points[b]} are not space-like ordered"
            )
    return order


def corr_det(
    points: typing.Sequence[SpaceTimePoint],
    types: typing.Sequence[LozengeType] | None = None,
) -> float:
    """
    Corr det.

    The determinant `det[𝒦(p_i; p_j)]`: the probability that every point
    carries a particle, or with `types`, that every white triangle is covered
    by a lozenge of the given type.

    The points are reordered by increasing time and decreasing level; the
    determinant does not depend on the order.

    Parameters
    ----------
    points
        The points. An empty list has probability 1.
    types
        Optional lozenge types, one per point.

    Raises
    ------
    InvalidArgumentException
        Raised when the points are not space-like (an earlier time with a
        lower level than a later one), or `types` has the wrong length.
    """
    if types is not None and len(types) != len(points):
        raise InvalidArgumentException(f"{len(points)} points but {len(types)} lozenge types")
    if not points:
        return 1.0
    order = _space_like(points)
    size = len(order)
    matrix = np.empty((size, size), dtype=np.float64)
    for row, i in enumerate(order):
        for col, j in enumerate(order):
            if types is None:
                matrix[row, col] = kernel_spacetime(points[i], points[j]).value
            else:
                matrix[row, col] = lozenge_kernel(points[i], types[i], points[j], types[j]).value
    _logger.debug(f"correlation determinant of size {size}")
    return float(np.linalg.det(matrix))


def flux_derivative_check(p1: SpaceTimePoint, p2: SpaceTimePoint, h: float = 1e-4) -> float:
    """
    Flux derivative check.

    Compares a finite difference of the shifted kernel in `t2` with the
    identity `-∂_{t2} K(...; x2, n2, t2) = K(...; x2 + 1, n2, t2)`.

    The kernel jumps in `t2` where the precedence of the two points changes.
    The central difference is used when its stencil stays inside the branch
    of `t2`, otherwise a one-sided second order stencil on the side that
    shares it.

    Returns
    -------
    float
        `|lhs - rhs| / |rhs|`.
    """
    if not h > 0.0:
        raise InvalidArgumentException(f"step must be positive, got {h}")
    x1, x2 = p1.x + p1.n, p2.x + p2.n
    n1, n2, t1, t2 = p1.n, p2.n, p1.t, p2.t

    def value(time: float, shift: int = 0) -> float:
        return shifted_kernel(x1, n1, t1, x2 + shift, n2, time).value

    branch = precedes(n1, t1, n2, t2)

    def same(*times: float) -> bool:
        return all(time > 0.0 and precedes(n1, t1, n2, time) == branch for time in times)

    if same(t2 - h, t2 + h):
        derivative = (value(t2 + h) - value(t2 - h)) / (2.0 * h)
    elif same(t2 + h, t2 + 2 * h):
        derivative = (-3.0 * value(t2) + 4.0 * value(t2 + h) - value(t2 + 2 * h)) / (2.0 * h)
    else:
        derivative = (3.0 * value(t2) - 4.0 * value(t2 - h) + value(t2 - 2 * h)) / (2.0 * h)
    rhs = value(t2, 1)
    return abs(-derivative - rhs) / max(abs(rhs), np.finfo(np.float64).tiny)


# General weights:


def _law_bounds(law: StepLaw | None) -> tuple[float, float]:
    # Γ0 must hold the γ⁻ pole; Γα must stay left of 1/γ⁺.
    if law is None:
        return 0.0, math.inf
    if law.family is StepFamily.GEOMETRIC_RIGHT:
        return law.parameter, math.inf
    if law.family is StepFamily.GEOMETRIC_LEFT:
        return 0.0, 1.0 / law.parameter
    return 0.0, math.inf


def _log_levels(z: typing.Any, alphas: typing.Sequence[float], ops: Ops) -> typing.Any:
    # log Π (1 - α_l z)
    if not alphas:
        return 0.0 * z
    if ops is NUMPY_OPS:
        return np.sum(np.log(1.0 - np.multiply.outer(z, np.asarray(alphas))), axis=-1)
    return sum(ops.log(1 - alpha * z) for alpha in alphas)


def kernel_general(
    p1: SpaceTimePoint,
    p2: SpaceTimePoint,
    alphas: typing.Sequence[float],
    law: StepLaw | None = None,
    *,
    atol: float = KERNEL_ATOL,
) -> KernelValue:
    """
    Kernel general.

    The correlation kernel of the packed chain with level weights `alphas`,
    in original coordinates. Without `law` this is the continuous time chain
    (time factors `e^{t/w}`), with it the sequential chain that applies `law`
    at every integer time step (factors `F(w)^t`).

    `Γ0` is a circle about 0 holding the `γ⁻` pole of a right geometric law
    and no `1/α_l`; `Γα` is a circle holding every `1/α_l` and neither 0 nor
    the negative Bernoulli poles.

    Parameters
    ----------
    p1, p2
        The points. Levels must not exceed `len(alphas)`; with a law, times
        must be integers.
    alphas
        The level weights, positive.
    law
        The step law of the discrete chain, or None for continuous time.
    atol
        The absolute error target.

    Raises
    ------
    InvalidArgumentException
        Raised for nonpositive weights, levels above `len(alphas)` or
        fractional discrete times.
    QuadratureException
        Raised when a quadrature does not converge.
    """
    weights = [float(alpha) for alpha in alphas]
    if not weights or any(not alpha > 0.0 for alpha in weights):
        raise InvalidArgumentException(f"level weights must be positive, got {alphas}")
    for point in (p1, p2):
        if point.n > len(weights):
            raise InvalidArgumentException(f"level {point.n} exceeds the {len(weights)} weights")
        if law is not None and not float(point.t).is_integer():
            raise InvalidArgumentException(f"the discrete chain runs at integer times, got {point.t}")

    y1, m1, t1 = p1.x, p1.n, p1.t
    y2, m2, t2 = p2.x, p2.n, p2.t
    symbol = Symbol.from_law(law) if law is not None else None

    def log_time(w: typing.Any, time: float, ops: Ops) -> typing.Any:
        if symbol is None:
            return time / w
        return int(time) * ops.log(symbol(w))

    inverse = [1.0 / alpha for alpha in weights]
    low, high = _law_bounds(law)
    gap = min(inverse) - low
    r0 = low + gap / 3.0
    left = low + 2.0 * gap / 3.0
    right = max(inverse) + min(gap / 3.0, (high - max(inverse)) / 3.0)
    gamma_zero = ContourSpec(center=0.0, radius=r0)
    gamma_alpha = ContourSpec(center=0.5 * (left + right), radius=0.5 * (right - left))

    def outer(z: typing.Any, ops: Ops) -> typing.Any:
        return ops.exp(-log_time(z, t2, ops) - _log_levels(z, weights[:m2], ops) - (y2 + 1) * ops.log(z))

    def inner(w: typing.Any, ops: Ops) -> typing.Any:
        return ops.exp(log_time(w, t1, ops) + _log_levels(w, weights[:m1], ops) + y1 * ops.log(w))

    result = adaptive_integral(
        lambda nodes, backend: double_integral(outer, gamma_alpha, inner, gamma_zero, nodes, backend=backend),
        atol=atol,
    )
    value = result.value.real
    error = result.est_error

    if precedes(m1, t1, m2, t2):
        levels = weights[m1:m2]

        def single(w: typing.Any, ops: Ops) -> typing.Any:
            return ops.exp(
                log_time(w, t1 - t2, ops) - _log_levels(w, levels, ops) + (y1 - y2 - 1) * ops.log(w)
            )

        residue = adaptive_integral(
            lambda nodes, backend: single_integral(single, gamma_zero, nodes, backend=backend), atol=atol
        )
        value -= residue.value.real
        error += residue.est_error
    return KernelValue(value=value, est_error=error, repr=KernelRepr.CONTOUR.value)


# Heights:


def _check_fixed(n: int, t: float) -> None:
    if n < 1:
        raise InvalidArgumentException(f"level must be at least 1, got {n}")
    _check_time(t)


def exact_height_mean(x: int, n: int, t: float) -> float:
    """
    Exact height mean.

    `E h(x, n, t) = Σ_{x' > x} ρ_1(x', n, t)`, from the Charlier kernel.
    """
    _check_fixed(n, t)
    m = x + n
    if m < 0:
        return float(n)
    top = max(support_bound(n, t), m + 1)
    sites = np.arange(m + 1, top + 1, dtype=np.int64)
    table = q_table(n - 1, sites, t)
    return float(np.sum(table**2))


def exact_height_variance(x: int, n: int, t: float) -> float:
    """
    Exact height variance.

    Since `K_{n,t}` is a projection,
    `Var h(x, n, t) = Σ_{x' > m} Σ_{0 <= y <= m} K_{n,t}(x', y)^2` with the
    shifted `m = x + n`.

    Parameters
    ----------
    x
        The position, original coordinates.
    n
        The level.
    t
        The time, positive.
    """
    _check_fixed(n, t)
    m = x + n
    top = support_bound(n, t)
    if m < 0 or m >= top:
        return 0.0
    right = np.arange(m + 1, top + 1, dtype=np.int64)
    left = np.arange(0, m + 1, dtype=np.int64)
    matrix = fixed_kernel_matrix(n, t, right, left)
    return float(np.sum(matrix**2))


def bulk_density(point: MacroPoint, scale: float) -> float:
    """
    Bulk density.

    The one point density `ρ_1` at the microscopic image
    `([(ν-η)L], [ηL], τL)` of a macroscopic point.
    """
    x, n, t = point.scaled(scale)
    _check_fixed(n, t)
    shifted = x + n
    if shifted < 0:
        return 0.0
    return kernel_fixed(n, t, shifted, shifted).value


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
