"""
Geometry.

The macroscopic layer: the curved region, the map `Ω`, the limit shape,
its slopes and growth velocity, and the Gaussian free field covariance.

Everything follows from one triangle. A point `(ν, η, τ)` is in the curved
region when `√ν`, `√η` and `√τ` are the sides of a nondegenerate triangle;
`Ω` is the apex of that triangle drawn over the segment `[0, 1]` after
scaling by `1/√τ`, so `|Ω|² = η/τ` and `|1 - Ω|² = ν/τ`.
"""

from __future__ import annotations

import cmath
import math
import typing

from akpz.abc.points import MacroPoint
from akpz.abc.shape import LimitShapeValue
from akpz.abc.shape import OmegaValue
from akpz.abc.shape import TriangleAngles
from akpz.errors import DomainException
from akpz.errors import SingularInputException
from akpz.internal.logger import logger

__all__ = (
    "omega",
    "angles",
    "density",
    "limit_shape",
    "limit_shape_extended",
    "growth_velocity",
    "growth_speed",
    "velocity_hessian",
    "hessian_det",
    "g_function",
    "g_prime",
    "g_second",
    "omega_derivatives",
    "burgers_check",
    "green_covariance",
    "green_pair",
)

_logger = logger.getChild("geometry")


def _require_domain(p: MacroPoint) -> None:
    if not p.in_domain:
        raise DomainException(f"({p.nu}, {p.eta}, {p.tau}) is outside the curved region")


def omega(p: MacroPoint) -> OmegaValue:
    """
    Omega.

    `Re Ω = (η + τ - ν) / 2τ` and `Im Ω = sqrt(4ητ - (η + τ - ν)²) / 2τ`,
    the critical point of `G` in the upper half plane.

    Raises
    ------
    DomainException
        Raised when `p` is outside the curved region.
    """
    _require_domain(p)
    shift = p.eta + p.tau - p.nu
    discriminant = 4.0 * p.eta * p.tau - shift * shift
    return OmegaValue(real=shift / (2.0 * p.tau), imag=math.sqrt(discriminant) / (2.0 * p.tau))


def angles(p: MacroPoint) -> TriangleAngles:
    """
    Angles.

    The triangle angles, read off `π_ν = arg Ω` and `π_η = -arg(1 - Ω)`
    rather than from the cosine rule, which loses accuracy near flat
    triangles.

    Raises
    ------
    DomainException
        Raised when `p` is outside the curved region.
    """
    value = omega(p)
    pi_nu = math.atan2(value.imag, value.real)
    pi_eta = math.atan2(value.imag, 1.0 - value.real)
    return TriangleAngles(pi_nu=pi_nu, pi_eta=pi_eta, pi_tau=math.pi - pi_nu - pi_eta)


def density(p: MacroPoint) -> float:
    """The asymptotic particle density `π_η / π`."""
    return angles(p).pi_eta / math.pi


def limit_shape(p: MacroPoint) -> LimitShapeValue:
    """
    Limit shape.

    `h = (1/π)(-ν π_η + η(π - π_ν) + τ sin π_ν sin π_η / sin π_τ)`, with the
    slopes `h_ν = -π_η/π`, `h_η = 1 - π_ν/π` and `h_τ = Im Ω / π`.

    Parameters
    ----------
    p
        A point of the curved region.

    Returns
    -------
    LimitShapeValue
        The value, its gradient, `Im G(Ω)` and `κ = 2τ Im Ω`.

    Raises
    ------
    DomainException
        Raised when `p` is outside the curved region.
    """
    value = omega(p)
    tri = angles(p)
    # τ Im Ω = τ sin π_ν sin π_η / sin π_τ by the sine rule
    curved = p.tau * value.imag
    h = (-p.nu * tri.pi_eta + p.eta * (math.pi - tri.pi_nu) + curved) / math.pi
    return LimitShapeValue(
        h=h,
        h_nu=-tri.pi_eta / math.pi,
        h_eta=1.0 - tri.pi_nu / math.pi,
        h_tau=value.imag / math.pi,
        gamma=curved - p.nu * tri.pi_eta - p.eta * tri.pi_nu,
        kappa=2.0 * curved,
    )


def limit_shape_extended(p: MacroPoint) -> tuple[float, float]:
    """
    Limit shape extended.

    The density and the limit shape at any positive point, facets included.
    Right of the curved region the level is empty; left of it the level is
    either still packed (`η > τ`) or already gone.

    Returns
    -------
    tuple[float, float]
        `(ρ, h)`.
    """
    if p.in_domain:
        return density(p), limit_shape(p).h
    root_eta, root_tau = math.sqrt(p.eta), math.sqrt(p.tau)
    if p.nu >= (root_eta + root_tau) ** 2:
        return 0.0, 0.0
    if p.eta > p.tau:
        return 1.0, p.eta - p.nu
    return 0.0, p.eta


def _check_slopes(h_nu: float, h_eta: float) -> None:
    for name, value in (("h_nu", h_nu), ("h_eta", h_eta), ("h_nu + h_eta", h_nu + h_eta)):
        if not 0.0 < value < 1.0:
            raise DomainException(f"{name} = {value} is outside (0, 1)")


def growth_velocity(h_nu: float, h_eta: float) -> float:
    """
    Growth velocity.

    `v = -(1/π) sin(π h_ν) sin(π h_η) / sin(π(h_ν + h_η))` on the slope domain
    `h_ν, h_η, h_ν + h_η ∈ (0, 1)`.

    !!! note
        The slope domain here is the one of the lozenge densities, so at
        `(π_η/π, π_ν/π)` this returns `-h_τ`. Use `growth_speed` for the
        nonnegative `∂h/∂τ` at a point.

    Raises
    ------
    DomainException
        Raised when a slope is outside its open domain.
    """
    _check_slopes(h_nu, h_eta)
    return -math.sin(math.pi * h_nu) * math.sin(math.pi * h_eta) / (math.pi * math.sin(math.pi * (h_nu + h_eta)))


def growth_speed(p: MacroPoint) -> float:
    """The growth speed `∂h/∂τ = Im Ω / π`, nonnegative."""
    return limit_shape(p).h_tau


def velocity_hessian(h_nu: float, h_eta: float) -> tuple[tuple[float, float], tuple[float, float]]:
    """
    Velocity hessian.

    The Hessian of `growth_velocity` in closed form. With `a = π h_ν`,
    `b = π h_η` and `S = cot a + cot b`, the second derivatives of
    `sin a sin b / sin(a + b)` are `2 csc²a (1 - cot a cot b) / S³` and
    `2 csc²a csc²b / S³`.
    """
    _check_slopes(h_nu, h_eta)
    a, b = math.pi * h_nu, math.pi * h_eta
    csc_a, csc_b = 1.0 / math.sin(a), 1.0 / math.sin(b)
    cot_a, cot_b = math.cos(a) * csc_a, math.cos(b) * csc_b
    cube = (cot_a + cot_b) ** 3
    # v = -f/π and each h derivative brings π
    factor = -math.pi
    aa = factor * 2.0 * csc_a**2 * (1.0 - cot_a * cot_b) / cube
    bb = factor * 2.0 * csc_b**2 * (1.0 - cot_a * cot_b) / cube
    ab = factor * 2.0 * csc_a**2 * csc_b**2 / cube
    return (aa, ab), (ab, bb)


def hessian_det(h_nu: float, h_eta: float) -> float:
    """
    Hessian det.

    `-4π² sin²(π h_ν) sin²(π h_η) / sin⁴(π(h_ν + h_η))`, negative on the whole
    slope domain: the growth is anisotropic KPZ.

    Raises
    ------
    DomainException
        Raised when a slope is outside its open domain.
    """
    _check_slopes(h_nu, h_eta)
    a, b = math.pi * h_nu, math.pi * h_eta
    return -4.0 * math.pi**2 * math.sin(a) ** 2 * math.sin(b) ** 2 / math.sin(a + b) ** 4


def g_function(w: complex, p: MacroPoint) -> complex:
    """`G(w) = τw + ν ln(1 - w) - η ln w`, principal branches."""
    return p.tau * w + p.nu * cmath.log(1.0 - w) - p.eta * cmath.log(w)


def g_prime(w: complex, p: MacroPoint) -> complex:
    """`G'(w) = τ - ν/(1 - w) - η/w`."""
    return p.tau - p.nu / (1.0 - w) - p.eta / w


def g_second(w: complex, p: MacroPoint) -> complex:
    """`G''(w) = η/w² - ν/(1 - w)²`."""
    return p.eta / w**2 - p.nu / (1.0 - w) ** 2


def omega_derivatives(p: MacroPoint) -> tuple[complex, complex, complex]:
    """
    Omega derivatives.

    `(∂_ν Ω, ∂_η Ω, ∂_τ Ω) = (iΩ/κ, i(1 - Ω)/κ, -iΩ(1 - Ω)/κ)` with
    `κ = 2τ Im Ω`.
    """
    value = omega(p).omega
    kappa = 2.0 * p.tau * value.imag
    return 1j * value / kappa, 1j * (1.0 - value) / kappa, -1j * value * (1.0 - value) / kappa


def burgers_check(p: MacroPoint, step: float = 1e-5) -> float:
    """
    Burgers check.

    Compares central differences of `Ω` and `Im G(Ω)` with their closed
    forms, and checks the complex Burgers relations
    `(1 - Ω)∂_ν Ω = Ω ∂_η Ω = -∂_τ Ω` and `G''(Ω) = -iκ / (Ω(1 - Ω))`.

    Parameters
    ----------
    p
        A point of the curved region, at least `10 * step` inside it.
    step
        The difference step.

    Returns
    -------
    float
        The largest residual.

    Raises
    ------
    DomainException
        Raised when a stencil point leaves the curved region.
    """

    def at(nu: float, eta: float, tau: float) -> MacroPoint:
        return MacroPoint(nu=nu, eta=eta, tau=tau)

    def central(fn: typing.Callable[[MacroPoint], typing.Any], axis: int) -> typing.Any:
        coords = [p.nu, p.eta, p.tau]
        high, low = list(coords), list(coords)
        high[axis] += step
        low[axis] -= step
        return (fn(at(*high)) - fn(at(*low))) / (2.0 * step)

    value = omega(p).omega
    closed = omega_derivatives(p)
    shape = limit_shape(p)
    tri = angles(p)

    def omega_of(q: MacroPoint) -> complex:
        return omega(q).omega

    def gamma_of(q: MacroPoint) -> float:
        return limit_shape(q).gamma

    residuals = [abs(central(omega_of, axis) - closed[axis]) for axis in range(3)]
    residuals.append(abs(central(gamma_of, 0) + tri.pi_eta))
    residuals.append(abs(central(gamma_of, 1) + tri.pi_nu))
    residuals.append(abs((1.0 - value) * closed[0] - value * closed[1]))
    residuals.append(abs(value * closed[1] + closed[2]))
    residuals.append(abs(g_prime(value, p)))
    residuals.append(abs(g_second(value, p) + 1j * shape.kappa / (value * (1.0 - value))))
    residual = max(residuals)
    _logger.debug(f"burgers residual {residual:.2e} at ({p.nu}, {p.eta}, {p.tau})")
    return residual


def _check_upper(w: complex) -> None:
    if not w.imag > 0.0:
        raise DomainException(f"{w} is not in the open upper half plane")


def green_covariance(w1: complex, w2: complex) -> float:
    """
    Green covariance.

    The Dirichlet Green function of the upper half plane,
    `𝒢(w1, w2) = -(1/2π) ln |(w1 - w2) / (w1 - conj(w2))|`.

    Raises
    ------
    DomainException
        Raised when a point is not in the open upper half plane.
    SingularInputException
        Raised when the points coincide.
    """
    _check_upper(w1)
    _check_upper(w2)
    if w1 == w2:
        raise SingularInputException(f"the green function is singular at w1 = w2 = {w1}")
    return -math.log(abs((w1 - w2) / (w1 - w2.conjugate()))) / (2.0 * math.pi)


def green_pair(omega1: complex, omega2: complex) -> float:
    """
    Green pair.

    The limiting height covariance of two macroscopic points with images
    `omega1` and `omega2`:
    `(1/(2πi)²) ∫_{conj Ω1}^{Ω1} ∫_{conj Ω2}^{Ω2} dz1 dz2 / (z1 - z2)²`, summed
    as its four logarithms. It equals `green_covariance(omega1, omega2) / π`.

    Raises
    ------
    DomainException
        Raised when a point is not in the open upper half plane.
    SingularInputException
        Raised when the points coincide.
    """
    _check_upper(omega1)
    _check_upper(omega2)
    if omega1 == omega2:
        raise SingularInputException(f"the pair covariance is singular at {omega1}")
    bar1, bar2 = omega1.conjugate(), omega2.conjugate()
    total = (
        cmath.log(omega1 - omega2)
        - cmath.log(omega1 - bar2)
        - cmath.log(bar1 - omega2)
        + cmath.log(bar1 - bar2)
    )
    return -total.real / (4.0 * math.pi**2)


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
