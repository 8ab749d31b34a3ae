# ruff: noqa: D100, D101, D102

import math
import unittest

import numpy as np

from akpz import kernel
from akpz.abc.points import MacroPoint
from akpz.abc.points import SpaceTimePoint
from akpz.enums import KernelRepr
from akpz.enums import LozengeType
from akpz.errors import InvalidArgumentException
from akpz.geometry import density


def _poisson(k: int, t: float) -> float:
    return math.exp(-t) * t**k / math.factorial(k)


class TestCharlier(unittest.TestCase):
    def test_low_degrees(self):
        assert kernel.charlier(0, 3.0, 2.0) == 1.0
        assert math.isclose(kernel.charlier(1, 3.0, 2.0), -0.5)
        # t C_2 = (1 + t - x) C_1 - C_0
        assert math.isclose(kernel.charlier(2, 3.0, 2.0), ((1.0 + 2.0 - 3.0) * -0.5 - 1.0) / 2.0)

    def test_at_zero(self):
        for k in range(12):
            assert math.isclose(kernel.charlier(k, 0.0, 1.7), 1.0, rel_tol=1e-12)

    def test_contour_agrees(self):
        for k in range(5):
            for x in range(6):
                exact = kernel.charlier(k, x, 2.0)
                value = kernel.charlier_contour(k, x, 2.0).value
                assert abs(value - exact) <= 1e-8 * max(1.0, abs(exact))

    def test_rejects(self):
        with self.assertRaises(InvalidArgumentException):
            kernel.charlier(-1, 0.0, 1.0)

        with self.assertRaises(InvalidArgumentException):
            kernel.charlier(1, 0.0, 0.0)


class TestOrthonormalFunctions(unittest.TestCase):
    def test_ground_state(self):
        for x in range(6):
            assert math.isclose(kernel.q_fn(0, x, 1.5) ** 2, _poisson(x, 1.5), rel_tol=1e-12)

    def test_orthonormal(self):
        kmax, t = 10, 4.0
        xs = np.arange(0, kernel.support_bound(kmax + 1, t) + 1)
        table = kernel.q_table(kmax, xs, t)

        assert np.max(np.abs(table @ table.T - np.eye(kmax + 1))) < 1e-9

    def test_large_arguments_finite(self):
        table = kernel.q_table(200, np.array([0, 500, 5000]), 1000.0)

        assert np.all(np.isfinite(table))

    def test_rejects_negative_position(self):
        with self.assertRaises(InvalidArgumentException):
            kernel.q_table(2, [-1, 0], 1.0)


class TestFixedKernel(unittest.TestCase):
    def test_projection(self):
        n, t = 4, 3.0
        xs = np.arange(0, kernel.support_bound(n, t) + 1)
        matrix = kernel.fixed_kernel_matrix(n, t, xs, xs)

        assert math.isclose(float(np.trace(matrix)), n, rel_tol=1e-10)
        assert np.max(np.abs(matrix @ matrix - matrix)) < 1e-9

    def test_symmetric(self):
        assert math.isclose(kernel.kernel_fixed(3, 2.0, 1, 4).value, kernel.kernel_fixed(3, 2.0, 4, 1).value, rel_tol=1e-12)

    def test_diagonal_is_partial_sum(self):
        table = kernel.q_table(2, [5], 2.5)
        expected = float(np.sum(table[:3, 0] ** 2))

        assert math.isclose(kernel.kernel_fixed(3, 2.5, 5, 5).value, expected, rel_tol=1e-12)


class TestSpaceTimeKernel(unittest.TestCase):
    def test_precedes(self):
        assert kernel.precedes(1, 2.0, 2, 1.0)
        assert kernel.precedes(1, 1.0, 2, 1.0)
        assert not kernel.precedes(1, 1.0, 1, 1.0)
        assert not kernel.precedes(2, 1.0, 1, 2.0)

    def test_single_particle_density(self):
        # x_1^1 + 1 is Poisson(t)
        point = SpaceTimePoint(x=0, n=1, t=1.5)

        for repr in (KernelRepr.AUTO, KernelRepr.CONTOUR):
            value = kernel.kernel_spacetime(point, point, repr=repr).value
            assert math.isclose(value, _poisson(1, 1.5), rel_tol=1e-8)

    def test_representations_agree(self):
        for x1, x2 in ((0, 0), (1, 3), (4, 2)):
            contour = kernel.shifted_kernel(x1, 3, 2.0, x2, 3, 2.0, repr=KernelRepr.CONTOUR).value
            charlier = kernel.shifted_kernel(x1, 3, 2.0, x2, 3, 2.0, repr=KernelRepr.CHARLIER).value
            assert abs(contour - charlier) <= 1e-8 * max(1.0, abs(charlier))

    def test_series_agrees(self):
        series = kernel.kernel_series(2, 2, 1.0, 3, 1, 2.0)
        contour = kernel.shifted_kernel(2, 2, 1.0, 3, 1, 2.0, repr=KernelRepr.CONTOUR).value

        assert abs(series - contour) <= 1e-8 * max(1.0, abs(series))

    def test_series_rejects_preceding(self):
        with self.assertRaises(InvalidArgumentException):
            kernel.kernel_series(0, 1, 2.0, 0, 2, 1.0)

    def test_charlier_needs_fixed_slice(self):
        with self.assertRaises(InvalidArgumentException):
            kernel.shifted_kernel(0, 1, 1.0, 0, 2, 1.0, repr=KernelRepr.CHARLIER)

    def test_rejects_zero_time(self):
        with self.assertRaises(InvalidArgumentException):
            kernel.shifted_kernel(0, 1, 0.0, 0, 1, 1.0)

    def test_general_weights_reduce(self):
        p1 = SpaceTimePoint(x=-1, n=1, t=1.0)
        p2 = SpaceTimePoint(x=-2, n=2, t=1.5)

        general = kernel.kernel_general(p1, p2, (1.0, 1.0)).value
        reference = kernel.kernel_spacetime(p1, p2, repr=KernelRepr.CONTOUR).value
        assert abs(general - reference) < 1e-8

    def test_general_rejects_levels(self):
        point = SpaceTimePoint(x=0, n=3, t=1.0)

        with self.assertRaises(InvalidArgumentException):
            kernel.kernel_general(point, point, (1.0, 1.0))

    def test_flux(self):
        point = SpaceTimePoint(x=0, n=1, t=2.0)

        assert kernel.flux_derivative_check(point, point) < 1e-5


class TestLozenges(unittest.TestCase):
    def test_black_triangle(self):
        assert kernel.black_triangle(2, 3, LozengeType.I) == (2, 3)
        assert kernel.black_triangle(2, 3, LozengeType.II) == (3, 2)
        assert kernel.black_triangle(2, 3, LozengeType.III) == (2, 2)

    def test_white_residue(self):
        assert abs(kernel.white_residue(0, 1, 1.0, (0, 1, 1.0)) - 1.0) < 1e-6
        assert abs(kernel.white_residue(0, 1, 1.0, (1, 2, 1.0))) < 1e-6

    def test_black_residue(self):
        assert abs(kernel.black_residue((-1, 2, 1.5), -1, 2, 1.5) - 1.0) < 1e-6

    def test_types_sum_to_one(self):
        point = SpaceTimePoint(x=-1, n=2, t=1.2)
        total = sum(kernel.corr_det([point], [kind]) for kind in LozengeType)

        assert abs(total - 1.0) < 1e-6

    def test_lozenge_error_is_propagated(self):
        point = SpaceTimePoint(x=-1, n=2, t=1.5)
        # the type II black triangle of (-1, 2) is (0, 1)
        direct = kernel.shifted_kernel(1, 1, 1.5, 1, 2, 1.5)
        entry = kernel.lozenge_kernel(point, LozengeType.II, point, LozengeType.II)

        assert entry.value == -direct.value
        assert entry.est_error == direct.est_error
        assert entry.est_error <= kernel.KERNEL_ATOL

    def test_lozenge_on_fixed_slice_is_exact_form(self):
        point = SpaceTimePoint(x=-1, n=2, t=1.5)
        entry = kernel.lozenge_kernel(point, LozengeType.I, point, LozengeType.I)

        assert entry.repr == KernelRepr.CHARLIER.value
        assert entry.est_error < 1e-12

    def test_type_one_is_occupation(self):
        point = SpaceTimePoint(x=-1, n=2, t=1.2)

        assert abs(kernel.corr_det([point], [LozengeType.I]) - kernel.corr_det([point])) < 1e-8


class TestContourCircles(unittest.TestCase):
    def test_fixed_radius_by_default(self):
        gamma_one, gamma_zero = kernel._circle_pair(lambda z, ops: z * 0.0 + 1.0, lambda w, ops: w * 0.0 + 1.0)

        assert gamma_one.center == 1.0
        assert gamma_zero.center == 0.0
        assert gamma_one.radius == gamma_zero.radius == kernel.FIXED_RADIUS

    def test_search_when_rounding_dominates(self):
        # |(1 - z)^-60| is e^55 on the fixed circle about 1
        gamma_one, gamma_zero = kernel._circle_pair(
            lambda z, ops: ops.exp(-60.0 * ops.log(1.0 - z)), lambda w, ops: w * 0.0 + 1.0
        )

        assert gamma_one.radius > kernel.FIXED_RADIUS
        assert gamma_one.radius + gamma_zero.radius < 1.0


class TestCorrelationDeterminant(unittest.TestCase):
    def test_empty(self):
        assert kernel.corr_det([]) == 1.0

    def test_single_particle_excludes_pairs(self):
        points = [SpaceTimePoint(x=0, n=1, t=1.0), SpaceTimePoint(x=1, n=1, t=1.0)]

        assert abs(kernel.corr_det(points)) < 1e-12

    def test_order_does_not_matter(self):
        points = [SpaceTimePoint(x=-1, n=2, t=1.0), SpaceTimePoint(x=0, n=1, t=1.5)]

        assert math.isclose(kernel.corr_det(points), kernel.corr_det(points[::-1]), rel_tol=1e-12, abs_tol=1e-14)

    def test_rejects_time_like(self):
        points = [SpaceTimePoint(x=0, n=1, t=1.0), SpaceTimePoint(x=0, n=2, t=2.0)]

        with self.assertRaises(InvalidArgumentException):
            kernel.corr_det(points)

    def test_rejects_type_count(self):
        with self.assertRaises(InvalidArgumentException):
            kernel.corr_det([SpaceTimePoint(x=0, n=1, t=1.0)], [])


class TestHeights(unittest.TestCase):
    def test_single_level_mean(self):
        # h(0, 1, t) is the indicator of x_1^1 > 0
        p = 1.0 - _poisson(0, 2.0) - _poisson(1, 2.0)

        assert math.isclose(kernel.exact_height_mean(0, 1, 2.0), p, rel_tol=1e-12)
        assert math.isclose(kernel.exact_height_variance(0, 1, 2.0), p * (1.0 - p), rel_tol=1e-10)

    def test_packed_facet(self):
        assert kernel.exact_height_mean(-10, 3, 1.0) == 3.0
        assert kernel.exact_height_variance(-10, 3, 1.0) == 0.0

    def test_bulk_density(self):
        value = kernel.bulk_density(MacroPoint(nu=1.0, eta=1.0, tau=1.0), 40.0)

        assert 0.0 < value < 1.0
        assert abs(value - 1.0 / 3.0) < 0.05

    def test_bulk_density_converges(self):
        point = MacroPoint(nu=1.0, eta=1.0, tau=1.0)
        target = density(point)
        errors = [abs(kernel.bulk_density(point, scale) - target) for scale in (50.0, 100.0, 200.0)]

        assert errors[0] > errors[1] > errors[2]
        assert errors[2] < 5e-4
