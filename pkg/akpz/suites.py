"""
Suites.

Named acceptance bundles. Each bundle is a list of checks; every check
measures one residual, error or z-score against its declared tolerance, and
the bundle passes when every check does.
"""

from __future__ import annotations

import fractions
import math
import time
import typing

import numpy as np

from akpz.abc.ensemble import EnsembleSpec
from akpz.abc.laws import RngStream
from akpz.abc.laws import StepLaw
from akpz.abc.points import MacroPoint
from akpz.abc.points import SpaceTimePoint
from akpz.abc.results import CheckResult
from akpz.abc.results import SuiteReport
from akpz.dynamics import ctmc_run
from akpz.dynamics import project_row
from akpz.dynamics import tasep_reference
from akpz.enums import KernelRepr
from akpz.enums import LozengeType
from akpz.enums import RowSide
from akpz.enums import StepFamily
from akpz.enums import SuiteName
from akpz.enums import SymbolKind
from akpz.errors import AKPZException
from akpz.geometry import angles
from akpz.geometry import burgers_check
from akpz.geometry import density
from akpz.geometry import green_covariance
from akpz.geometry import green_pair
from akpz.geometry import growth_velocity
from akpz.geometry import hessian_det
from akpz.geometry import limit_shape
from akpz.geometry import omega
from akpz.geometry import velocity_hessian
from akpz.interlacing import packed_initial
from akpz.internal.logger import logger
from akpz.kernel import black_residue
from akpz.kernel import bulk_density
from akpz.kernel import charlier
from akpz.kernel import charlier_contour
from akpz.kernel import exact_height_mean
from akpz.kernel import exact_height_variance
from akpz.kernel import fixed_kernel_matrix
from akpz.kernel import flux_derivative_check
from akpz.kernel import kernel_general
from akpz.kernel import kernel_series
from akpz.kernel import kernel_spacetime
from akpz.kernel import precedes
from akpz.kernel import q_table
from akpz.kernel import shifted_kernel
from akpz.kernel import support_bound
from akpz.kernel import white_residue
from akpz.stats import covariance_pair
from akpz.stats import ensemble_samples
from akpz.stats import frequency_vs_determinant
from akpz.stats import run_ensemble
from akpz.stats import shape_error
from akpz.stats import variance_slope
from akpz.transfer import Symbol
from akpz.transfer import Window
from akpz.transfer import commutation_check
from akpz.transfer import fourier_coeffs
from akpz.transfer import intertwining_check
from akpz.transfer import minor_det_closed
from akpz.transfer import minor_det_direct
from akpz.transfer import semigroup_check

__all__ = ("Outcome", "SUITES", "run_suite", "run_check")

_logger = logger.getChild("suites")

Z_BOUND: typing.Final[float] = 4.0
"""Largest accepted |z| for Monte Carlo comparisons."""
ORACLE_INSTANCES: typing.Final[int] = 1000
"""Random instances of the determinant lemmas."""
FREQUENCY_REPLICAS: typing.Final[int] = 100_000
"""Replicas behind the fast frequency checks."""
TRANSFER_ALPHAS: typing.Final[tuple[float, ...]] = (1.0, 0.8, 0.6)
"""Distinct level weights for the transfer identities."""


class Outcome(typing.NamedTuple):
    """What one check measured."""

    value: float
    """The residual, error or z-score."""
    tolerance: float
    """The bound."""
    passed: bool | None = None
    """The verdict, `value <= tolerance` when None."""
    detail: str | None = None
    """Free text."""


Check = typing.Callable[[int, int], Outcome]


def run_check(name: str, check: Check, *, seed: int = 0, jobs: int = 1) -> CheckResult:
    """
    Run check.

    Run one check, timing it. An akpz error fails the check instead of
    escaping.
    """
    start = time.perf_counter()
    try:
        outcome = check(seed, jobs)
    except AKPZException as e:
        elapsed = time.perf_counter() - start
        _logger.warning(f"check {name} raised {type(e).__name__}")
        return CheckResult(
            name=name,
            value=math.nan,
            tolerance=math.nan,
            passed=False,
            elapsed=elapsed,
            detail=f"{type(e).__name__}: {getattr(e, 'reason', e)}",
        )
    elapsed = time.perf_counter() - start
    passed = outcome.value <= outcome.tolerance if outcome.passed is None else outcome.passed
    _logger.debug(f"check {name}: {outcome.value:.3e} against {outcome.tolerance:.3e} in {elapsed:.2f}s")
    return CheckResult(
        name=name,
        value=float(outcome.value),
        tolerance=float(outcome.tolerance),
        passed=bool(passed),
        elapsed=elapsed,
        detail=outcome.detail,
    )


# Oracle:


def _increasing(generator: np.random.Generator, size: int, lo: int = -6, hi: int = 6) -> tuple[int, ...]:
    return tuple(sorted(int(v) for v in generator.choice(np.arange(lo, hi + 1), size=size, replace=False)))


def _exact_symbols() -> list[Symbol]:
    p, q = fractions.Fraction(1, 3), fractions.Fraction(2, 5)
    return [
        Symbol.bernoulli_left(p),
        Symbol.bernoulli_right(p),
        Symbol.geometric_left(q),
        Symbol.geometric_right(q),
        Symbol.mixed_left(fractions.Fraction(1, 4), q),
        Symbol.mixed_right(fractions.Fraction(1, 4), q),
    ]


def _check_determinant_lemmas(seed: int, jobs: int) -> Outcome:
    del jobs
    generator = RngStream(seed=seed).generator()
    symbols = _exact_symbols()
    virtuals = [s for s in symbols if s.kind in (SymbolKind.GEOMETRIC_LEFT, SymbolKind.MIXED_LEFT)]
    mismatches = 0
    for i in range(ORACLE_INSTANCES):
        n = int(generator.integers(1, 5))
        x = _increasing(generator, n)
        if i % 4 == 3 and n >= 2:
            symbol = virtuals[int(generator.integers(len(virtuals)))]
            y = _increasing(generator, n - 1)
            direct = minor_det_direct(fourier_coeffs(symbol), x, y, virtual=symbol.q)
            closed = minor_det_closed(symbol, x, y, virtual=symbol.q)
        else:
            symbol = symbols[int(generator.integers(len(symbols)))]
            y = _increasing(generator, n)
            direct = minor_det_direct(fourier_coeffs(symbol), x, y)
            closed = minor_det_closed(symbol, x, y)
        if direct != closed:
            mismatches += 1
            _logger.warning(f"lemma mismatch for {symbol.kind.value}, x = {x}, y = {y}: {direct} != {closed}")
    return Outcome(value=mismatches, tolerance=0, detail=f"{ORACLE_INSTANCES} exact instances")


def _float_symbols() -> list[Symbol]:
    return [
        Symbol.bernoulli_left(0.3),
        Symbol.bernoulli_right(0.4),
        Symbol.geometric_left(0.3),
        Symbol.geometric_right(0.3),
    ]


def _check_commutation(seed: int, jobs: int) -> Outcome:
    del seed, jobs
    worst = 0.0
    for n in (2, 3):
        window = Window(lo=-4, hi=4, n=n)
        for symbol in _float_symbols():
            worst = max(worst, commutation_check(n, TRANSFER_ALPHAS[:n], symbol, window))
    return Outcome(value=worst, tolerance=1e-9, detail="n in {2, 3}, four step families")


def _check_semigroup(seed: int, jobs: int) -> Outcome:
    del seed, jobs
    window = Window(lo=-4, hi=4, n=2)
    worst = 0.0
    for first in (Symbol.bernoulli_left(0.3), Symbol.bernoulli_right(0.4)):
        for second in _float_symbols():
            worst = max(worst, semigroup_check(2, TRANSFER_ALPHAS[:2], first, second, window))
    return Outcome(value=worst, tolerance=1e-10)


def _check_intertwining(seed: int, jobs: int) -> Outcome:
    del seed, jobs
    worst = 0.0
    for family, parameter in ((StepFamily.BERNOULLI_RIGHT, 0.4), (StepFamily.BERNOULLI_LEFT, 0.3)):
        law = StepLaw(family=family, parameter=parameter, alphas=TRANSFER_ALPHAS[:2])
        worst = max(worst, intertwining_check(law, (0, 2)))
    return Outcome(value=worst, tolerance=1e-9)


# Kernel:


def _representation_gap(levels: typing.Iterable[int], times: typing.Iterable[float], sites: typing.Sequence[int]) -> float:
    worst = 0.0
    for n in levels:
        for t in times:
            for x in sites:
                for y in sites:
                    contour = shifted_kernel(x, n, t, y, n, t, repr=KernelRepr.CONTOUR).value
                    cd = shifted_kernel(x, n, t, y, n, t, repr=KernelRepr.CHARLIER).value
                    worst = max(worst, abs(contour - cd) / max(1.0, abs(cd)))
    return worst


def _check_representations(seed: int, jobs: int) -> Outcome:
    del seed, jobs
    worst = _representation_gap((2, 10), (1.0, 10.0), (0, 12, 30, 60))
    return Outcome(value=worst, tolerance=1e-8, detail="contour against Christoffel-Darboux, sparse grid")


def _check_representation_grid(seed: int, jobs: int) -> Outcome:
    del seed, jobs
    worst = _representation_gap((1, 2, 5, 10), (1.0, 5.0, 10.0), range(0, 61, 6))
    return Outcome(value=worst, tolerance=1e-8, detail="contour against Christoffel-Darboux, full grid")


def _check_bulk_density(seed: int, jobs: int) -> Outcome:
    del seed, jobs
    point = MacroPoint(nu=1.0, eta=1.0, tau=1.0)
    target = density(point)
    scales = (50.0, 100.0, 200.0)
    errors = [abs(bulk_density(point, scale) - target) for scale in scales]
    shrinking = all(later < earlier for earlier, later in zip(errors, errors[1:]))
    # the correction is O(1/L) with an oscillating factor
    envelope = max(scale * error for scale, error in zip(scales, errors))
    return Outcome(
        value=envelope,
        tolerance=1.0,
        passed=shrinking and envelope <= 1.0,
        detail=", ".join(f"L = {scale:g}: {error:.2e}" for scale, error in zip(scales, errors)),
    )


def _check_orthogonality(seed: int, jobs: int) -> Outcome:
    del seed, jobs
    kmax, t = 20, 10.0
    xs = np.arange(0, support_bound(kmax + 1, t) + 1)
    table = q_table(kmax, xs, t)
    gram = table @ table.T
    return Outcome(value=float(np.max(np.abs(gram - np.eye(kmax + 1)))), tolerance=1e-8)


def _check_projection(seed: int, jobs: int) -> Outcome:
    del seed, jobs
    worst = 0.0
    for n, t in ((3, 1.0), (5, 5.0), (10, 10.0)):
        xs = np.arange(0, support_bound(n, t) + 1)
        matrix = fixed_kernel_matrix(n, t, xs, xs)
        worst = max(worst, abs(float(np.trace(matrix)) - n) / n)
        worst = max(worst, float(np.max(np.abs(matrix @ matrix - matrix))))
    return Outcome(value=worst, tolerance=1e-8, detail="trace and K² = K on the truncated support")


def _check_charlier(seed: int, jobs: int) -> Outcome:
    del seed, jobs
    worst = 0.0
    for t in (1.0, 5.0):
        for k in range(9):
            for x in range(11):
                exact = charlier(k, x, t)
                worst = max(worst, abs(charlier_contour(k, x, t).value - exact) / max(1.0, abs(exact)))
    return Outcome(value=worst, tolerance=1e-8)


def _check_series(seed: int, jobs: int) -> Outcome:
    generator = RngStream(seed=seed, replica=1).generator()
    del jobs
    worst = 0.0
    tried = 0
    while tried < 20:
        n1, n2 = (int(v) for v in generator.integers(1, 5, size=2))
        t1, t2 = (float(v) for v in np.round(generator.uniform(0.5, 3.0, size=2), 3))
        if precedes(n1, t1, n2, t2):
            continue
        x1, x2 = (int(v) for v in generator.integers(0, 8, size=2))
        series = kernel_series(x1, n1, t1, x2, n2, t2)
        contour = shifted_kernel(x1, n1, t1, x2, n2, t2, repr=KernelRepr.CONTOUR).value
        worst = max(worst, abs(series - contour) / max(1.0, abs(series)))
        tried += 1
    return Outcome(value=worst, tolerance=1e-8)


def _check_general(seed: int, jobs: int) -> Outcome:
    del seed, jobs
    worst = 0.0
    points = [SpaceTimePoint(x=x, n=n, t=t) for x, n, t in ((-1, 1, 1.0), (-2, 2, 1.5), (0, 3, 2.0), (-1, 2, 0.7))]
    for p1 in points:
        for p2 in points:
            general = kernel_general(p1, p2, (1.0, 1.0, 1.0)).value
            reference = kernel_spacetime(p1, p2, repr=KernelRepr.CONTOUR).value
            worst = max(worst, abs(general - reference))
    return Outcome(value=worst, tolerance=1e-8, detail="unit weights against the packed kernel")


def _check_residues(seed: int, jobs: int) -> Outcome:
    generator = RngStream(seed=seed, replica=2).generator()
    del jobs
    worst = 0.0
    for _ in range(20):
        n = int(generator.integers(1, 4))
        x = int(generator.integers(-n, 3))
        t = float(np.round(generator.uniform(0.5, 3.0), 3))
        dx, dn = (int(v) for v in generator.integers(-1, 2, size=2))
        other_n = max(1, n + dn)
        worst = max(worst, abs(white_residue(x, n, t, (x, n, t)) - 1.0))
        if (dx, other_n) != (0, n):
            worst = max(worst, abs(white_residue(x, n, t, (x + dx, other_n, t))))
        worst = max(worst, abs(black_residue((x, n, t), x, n, t) - 1.0))
        if (dx, dn) != (0, 0):
            worst = max(worst, abs(black_residue((x + dx, n + dn, t), x, n, t)))
    return Outcome(value=worst, tolerance=1e-6)


def _check_flux(seed: int, jobs: int) -> Outcome:
    generator = RngStream(seed=seed, replica=3).generator()
    del jobs
    worst = 0.0
    accepted = 0
    for _ in range(200):
        if accepted == 20:
            break
        n1, n2 = (int(v) for v in generator.integers(1, 5, size=2))
        t1, t2 = (float(v) for v in np.round(generator.uniform(1.0, 3.0, size=2), 3))
        x1 = int(generator.integers(-n1, 3))
        x2 = int(generator.integers(-n2, 3))
        p1 = SpaceTimePoint(x=x1, n=n1, t=t1)
        p2 = SpaceTimePoint(x=x2, n=n2, t=t2)
        # relative residuals of tiny entries are noise
        if abs(shifted_kernel(x1 + n1, n1, t1, x2 + n2 + 1, n2, t2).value) < 1e-3:
            continue
        worst = max(worst, flux_derivative_check(p1, p2))
        accepted += 1
    return Outcome(value=worst, tolerance=1e-6, passed=accepted == 20 and worst <= 1e-6, detail=f"{accepted} configurations")


# Geometry:

_GEOMETRY_POINTS: typing.Final[tuple[tuple[float, float, float], ...]] = (
    (1.0, 1.0, 1.0),
    (1.5, 0.8, 1.0),
    (0.6, 1.2, 1.0),
    (2.0, 1.0, 1.5),
    (0.5, 0.4, 0.7),
)


def _check_burgers(seed: int, jobs: int) -> Outcome:
    del seed, jobs
    worst = max(burgers_check(MacroPoint(nu=nu, eta=eta, tau=tau)) for nu, eta, tau in _GEOMETRY_POINTS)
    return Outcome(value=worst, tolerance=1e-6)


def _check_slopes(seed: int, jobs: int) -> Outcome:
    del seed, jobs
    step = 1e-5
    worst = 0.0
    for coords in _GEOMETRY_POINTS:
        point = MacroPoint(*coords)
        shape = limit_shape(point)
        for axis, closed in enumerate((shape.h_nu, shape.h_eta, shape.h_tau)):
            high, low = list(coords), list(coords)
            high[axis] += step
            low[axis] -= step
            fd = (limit_shape(MacroPoint(*high)).h - limit_shape(MacroPoint(*low)).h) / (2.0 * step)
            worst = max(worst, abs(fd - closed))
        # h is homogeneous of degree one
        euler = point.nu * shape.h_nu + point.eta * shape.h_eta + point.tau * shape.h_tau
        worst = max(worst, abs(euler - shape.h))
        tri = angles(point)
        worst = max(worst, abs(growth_velocity(tri.pi_eta / math.pi, tri.pi_nu / math.pi) + shape.h_tau))
    return Outcome(value=worst, tolerance=1e-6, detail="slopes, Euler relation and growth speed")


def _second_difference(fn: typing.Callable[[float], float], x: float, step: float) -> float:
    # fourth order five point stencil
    return (-fn(x + 2 * step) + 16.0 * fn(x + step) - 30.0 * fn(x) + 16.0 * fn(x - step) - fn(x - 2 * step)) / (
        12.0 * step**2
    )


def _mixed_difference(fn: typing.Callable[[float, float], float], a: float, b: float, step: float) -> float:
    def cross(h: float) -> float:
        return (fn(a + h, b + h) - fn(a + h, b - h) - fn(a - h, b + h) + fn(a - h, b - h)) / (4.0 * h**2)

    # Richardson step on the four point stencil
    return (4.0 * cross(step) - cross(2.0 * step)) / 3.0


def _check_hessian(seed: int, jobs: int) -> Outcome:
    del seed, jobs
    step = 1e-3
    grid = np.linspace(0.1, 0.8, 8)
    worst_fd = 0.0
    largest_det = -math.inf
    v = growth_velocity
    for a in grid:
        for b in grid:
            if a + b >= 0.95:
                continue
            largest_det = max(largest_det, hessian_det(a, b))
            (aa, ab), (_, bb) = velocity_hessian(a, b)
            fd_aa = _second_difference(lambda s: v(s, b), a, step)
            fd_bb = _second_difference(lambda s: v(a, s), b, step)
            fd_ab = _mixed_difference(v, a, b, step)
            scale = max(1.0, abs(aa), abs(bb), abs(ab))
            worst_fd = max(worst_fd, abs(fd_aa - aa) / scale, abs(fd_bb - bb) / scale, abs(fd_ab - ab) / scale)
            worst_fd = max(worst_fd, abs(aa * bb - ab * ab - hessian_det(a, b)) / scale**2)
    return Outcome(
        value=worst_fd,
        tolerance=1e-6,
        passed=worst_fd <= 1e-6 and largest_det < 0.0,
        detail=f"largest determinant {largest_det:.3e}",
    )


def _check_green(seed: int, jobs: int) -> Outcome:
    del seed, jobs
    worst = 0.0
    images = [omega(MacroPoint(*coords)).omega for coords in _GEOMETRY_POINTS]
    for i, w1 in enumerate(images):
        for w2 in images[i + 1 :]:
            worst = max(worst, abs(math.pi * green_pair(w1, w2) - green_covariance(w1, w2)))
    return Outcome(value=worst, tolerance=1e-12)


# Stats:


def _z_outcome(value: float, target: float, stderr: float, detail: str | None = None) -> Outcome:
    z = abs(value - target) / stderr if stderr > 0.0 else (0.0 if value == target else math.inf)
    return Outcome(value=z, tolerance=Z_BOUND, detail=detail)


def _check_poisson_mean(seed: int, jobs: int) -> Outcome:
    spec = EnsembleSpec(n=1, times=(1.0,), query_points=((-1, 1),), replicas=4000, seed=seed)
    query = run_ensemble(spec, jobs=jobs).queries[0]
    return _z_outcome(query.mean, 1.0 - math.exp(-1.0), query.stderr, "n = 1 height at t = 1")


def _check_height_mean(seed: int, jobs: int) -> Outcome:
    spec = EnsembleSpec(n=2, times=(1.0,), query_points=((-1, 2),), replicas=4000, seed=seed)
    query = run_ensemble(spec, jobs=jobs).queries[0]
    return _z_outcome(query.mean, exact_height_mean(-1, 2, 1.0), query.stderr, "(x, n, t) = (-1, 2, 1)")


def _check_one_point(seed: int, jobs: int) -> Outcome:
    report = frequency_vs_determinant([SpaceTimePoint(x=-1, n=2, t=1.0)], None, FREQUENCY_REPLICAS, seed, jobs=jobs)
    return Outcome(value=report.max_z, tolerance=Z_BOUND, detail=f"{report.replicas} replicas")


def _check_two_point(seed: int, jobs: int) -> Outcome:
    points = [SpaceTimePoint(x=-1, n=2, t=1.0), SpaceTimePoint(x=-2, n=3, t=1.0)]
    report = frequency_vs_determinant(points, None, FREQUENCY_REPLICAS, seed, jobs=jobs)
    return Outcome(value=report.max_z, tolerance=Z_BOUND, detail=f"{report.replicas} replicas")


def _check_space_like(seed: int, jobs: int) -> Outcome:
    points = [SpaceTimePoint(x=-1, n=3, t=1.0), SpaceTimePoint(x=0, n=2, t=2.0)]
    report = frequency_vs_determinant(points, None, FREQUENCY_REPLICAS, seed, jobs=jobs)
    return Outcome(value=report.max_z, tolerance=Z_BOUND, detail="two times, decreasing level")


def _check_lozenge_frequency(seed: int, jobs: int) -> Outcome:
    cases = (
        (SpaceTimePoint(x=-1, n=2, t=1.5), LozengeType.I),
        (SpaceTimePoint(x=-1, n=2, t=1.5), LozengeType.II),
        (SpaceTimePoint(x=-1, n=2, t=1.5), LozengeType.III),
        (SpaceTimePoint(x=0, n=1, t=1.0), LozengeType.II),
        (SpaceTimePoint(x=0, n=1, t=1.0), LozengeType.III),
    )
    worst = 0.0
    for point, kind in cases:
        report = frequency_vs_determinant([point], [kind], FREQUENCY_REPLICAS, seed, jobs=jobs)
        worst = max(worst, report.max_z)
    return Outcome(value=worst, tolerance=Z_BOUND, detail=f"{len(cases)} typed lozenges")


def _check_tasep(seed: int, jobs: int) -> Outcome:
    del jobs
    n, t, replicas = 4, 3.0, 4000
    rows = np.empty((replicas, n), dtype=np.int64)
    reference = np.empty((replicas, n), dtype=np.int64)
    for replica in range(replicas):
        state = ctmc_run(packed_initial(n), t, RngStream(seed=seed, replica=replica).generator())
        rows[replica] = project_row(state, RowSide.LEFTMOST)
        reference[replica] = tasep_reference(n, t, RngStream(seed=seed + 1, replica=replica).generator())
    worst = 0.0
    low = int(min(rows.min(), reference.min()))
    high = int(max(rows.max(), reference.max()))
    for site in range(low, high + 1):
        first = float(np.mean(np.any(rows == site, axis=1)))
        second = float(np.mean(np.any(reference == site, axis=1)))
        pooled = 0.5 * (first + second)
        if pooled in (0.0, 1.0):
            continue
        stderr = math.sqrt(2.0 * pooled * (1.0 - pooled) / replicas)
        worst = max(worst, abs(first - second) / stderr)
    return Outcome(value=worst, tolerance=Z_BOUND, detail="leftmost row against a direct TASEP, per site")


def _check_limit_shape(seed: int, jobs: int) -> Outcome:
    estimate = shape_error(MacroPoint(nu=1.0, eta=1.0, tau=1.0), 200.0, 200, seed, jobs=jobs)
    return Outcome(value=estimate.value, tolerance=0.02, detail="(1, 1, 1), L = 200")


def _check_exact_variance(seed: int, jobs: int) -> Outcome:
    replicas = 400
    spec = EnsembleSpec(n=50, times=(50.0,), query_points=((0, 50),), replicas=replicas, seed=seed)
    samples, _, _ = ensemble_samples(spec, jobs=jobs)
    variance = float(np.var(samples[:, 0], ddof=1))
    exact = exact_height_variance(0, 50, 50.0)
    # normal approximation to the spread of a sample variance
    stderr = exact * math.sqrt(2.0 / (replicas - 1))
    return _z_outcome(variance, exact, stderr, "Var h(0, 50, 50)")


def _variance_outcome(times: tuple[float, ...], replicas: int, seed: int, jobs: int) -> Outcome:
    estimate = variance_slope(1.0, 1.0, times, replicas, seed, jobs=jobs)
    assert estimate.target is not None
    error = abs(estimate.value - estimate.target)
    bound = max(0.2 * estimate.target, 3.0 * estimate.stderr)
    return Outcome(
        value=error,
        tolerance=bound,
        detail=f"slope {estimate.value:.4f}, CI [{estimate.ci_low:.4f}, {estimate.ci_high:.4f}]",
    )


def _check_variance_fast(seed: int, jobs: int) -> Outcome:
    return _variance_outcome((25.0, 50.0, 100.0, 200.0), 300, seed, jobs)


def _check_variance_slow(seed: int, jobs: int) -> Outcome:
    return _variance_outcome((50.0, 100.0, 200.0, 400.0, 800.0), 2000, seed, jobs)


def _check_covariance(seed: int, jobs: int) -> Outcome:
    p1 = MacroPoint(nu=1.0, eta=1.0, tau=1.0)
    p2 = MacroPoint(nu=1.5, eta=0.8, tau=1.0)
    estimate = covariance_pair(p1, p2, 300.0, 5000, seed, jobs=jobs)
    assert estimate.target is not None
    bound = max(0.25 * abs(estimate.target), 3.0 * estimate.stderr)
    return Outcome(
        value=abs(estimate.value - estimate.target),
        tolerance=bound,
        detail=f"estimate {estimate.value:.4f} against {estimate.target:.4f}",
    )


SUITES: typing.Final[typing.Mapping[SuiteName, tuple[tuple[str, Check], ...]]] = {
    SuiteName.ORACLE: (
        ("determinant_lemmas", _check_determinant_lemmas),
        ("commutation", _check_commutation),
        ("semigroup", _check_semigroup),
        ("intertwining", _check_intertwining),
    ),
    SuiteName.KERNEL: (
        ("representation_equivalence", _check_representations),
        ("charlier_orthogonality", _check_orthogonality),
        ("trace_and_projection", _check_projection),
        ("charlier_contour", _check_charlier),
        ("series_form", _check_series),
        ("general_weights", _check_general),
        ("lozenge_residues", _check_residues),
        ("flux_identity", _check_flux),
        ("bulk_density_trend", _check_bulk_density),
    ),
    SuiteName.GEOMETRY: (
        ("burgers", _check_burgers),
        ("slopes", _check_slopes),
        ("hessian", _check_hessian),
        ("green_pair", _check_green),
    ),
    SuiteName.STATS_FAST: (
        ("poisson_mean", _check_poisson_mean),
        ("height_mean", _check_height_mean),
        ("one_point_frequency", _check_one_point),
        ("two_point_frequency", _check_two_point),
        ("space_like_frequency", _check_space_like),
        ("lozenge_frequency", _check_lozenge_frequency),
        ("tasep_projection", _check_tasep),
        ("limit_shape", _check_limit_shape),
        ("exact_variance", _check_exact_variance),
        ("variance_slope", _check_variance_fast),
    ),
    SuiteName.STATS_SLOW: (
        ("variance_slope", _check_variance_slow),
        ("green_covariance", _check_covariance),
        ("representation_grid", _check_representation_grid),
    ),
}
"""Every bundle, by name."""


def run_suite(name: SuiteName | str, *, seed: int = 0, jobs: int = 1) -> SuiteReport:
    """
    Run suite.

    Run every check of the named bundle, in order.

    Parameters
    ----------
    name
        The bundle.
    seed
        The base seed of the Monte Carlo and randomised checks.
    jobs
        Worker count for replica parallelism.

    Raises
    ------
    ValueError
        Raised for an unknown bundle name.
    """
    suite = SuiteName(name)
    _logger.info(f"running suite {suite.value}")
    start = time.perf_counter()
    checks = [run_check(check_name, check, seed=seed, jobs=jobs) for check_name, check in SUITES[suite]]
    elapsed = time.perf_counter() - start
    passed = all(check.passed for check in checks)
    _logger.info(f"suite {suite.value} {'passed' if passed else 'failed'} in {elapsed:.1f}s")
    return SuiteReport(name=suite.value, checks=checks, passed=passed, elapsed=elapsed)


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
