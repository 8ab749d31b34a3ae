# ruff: noqa: D100, D101, D102

import math
import unittest

from akpz import geometry
from akpz.abc.points import MacroPoint
from akpz.errors import DomainException
from akpz.errors import SingularInputException

CENTRE = MacroPoint(nu=1.0, eta=1.0, tau=1.0)


class TestOmega(unittest.TestCase):
    def test_centre(self):
        value = geometry.omega(CENTRE)

        assert math.isclose(value.real, 0.5)
        assert math.isclose(value.imag, math.sqrt(3.0) / 2.0)
        assert value.omega == complex(value.real, value.imag)

    def test_critical_point(self):
        for coords in ((1.5, 0.8, 1.0), (0.6, 1.2, 1.0), (0.5, 0.4, 0.7)):
            point = MacroPoint(*coords)
            assert abs(geometry.g_prime(geometry.omega(point).omega, point)) < 1e-12

    def test_outside(self):
        with self.assertRaises(DomainException):
            geometry.omega(MacroPoint(nu=5.0, eta=1.0, tau=1.0))


class TestAngles(unittest.TestCase):
    def test_centre(self):
        tri = geometry.angles(CENTRE)

        assert math.isclose(tri.pi_nu, math.pi / 3.0)
        assert math.isclose(tri.pi_eta, math.pi / 3.0)
        assert math.isclose(tri.pi_tau, math.pi / 3.0)

    def test_sum(self):
        tri = geometry.angles(MacroPoint(nu=2.0, eta=1.0, tau=1.5))

        assert math.isclose(tri.pi_nu + tri.pi_eta + tri.pi_tau, math.pi)
        assert min(tri.pi_nu, tri.pi_eta, tri.pi_tau) > 0.0

    def test_density(self):
        assert math.isclose(geometry.density(CENTRE), 1.0 / 3.0)


class TestLimitShape(unittest.TestCase):
    def test_centre(self):
        shape = geometry.limit_shape(CENTRE)

        assert math.isclose(shape.h, 1.0 / 3.0 + math.sqrt(3.0) / (2.0 * math.pi))
        assert math.isclose(shape.h_nu, -1.0 / 3.0)
        assert math.isclose(shape.h_eta, 2.0 / 3.0)
        assert math.isclose(shape.h_tau, math.sqrt(3.0) / (2.0 * math.pi))
        assert math.isclose(shape.kappa, math.sqrt(3.0))

    def test_homogeneous(self):
        point = MacroPoint(nu=1.5, eta=0.8, tau=1.0)
        doubled = MacroPoint(nu=3.0, eta=1.6, tau=2.0)

        assert math.isclose(geometry.limit_shape(doubled).h, 2.0 * geometry.limit_shape(point).h)

    def test_gradient(self):
        point = MacroPoint(nu=1.5, eta=0.8, tau=1.0)
        shape = geometry.limit_shape(point)
        step = 1e-6
        fd = (
            geometry.limit_shape(MacroPoint(nu=1.5 + step, eta=0.8, tau=1.0)).h
            - geometry.limit_shape(MacroPoint(nu=1.5 - step, eta=0.8, tau=1.0)).h
        ) / (2.0 * step)

        assert abs(fd - shape.h_nu) < 1e-6

    def test_extended_facets(self):
        assert geometry.limit_shape_extended(MacroPoint(nu=5.0, eta=1.0, tau=1.0)) == (0.0, 0.0)

        rho, h = geometry.limit_shape_extended(MacroPoint(nu=0.01, eta=4.0, tau=1.0))
        assert rho == 1.0
        assert math.isclose(h, 3.99)

        assert geometry.limit_shape_extended(MacroPoint(nu=0.01, eta=1.0, tau=4.0)) == (0.0, 1.0)

    def test_extended_inside(self):
        rho, h = geometry.limit_shape_extended(CENTRE)

        assert math.isclose(rho, 1.0 / 3.0)
        assert math.isclose(h, geometry.limit_shape(CENTRE).h)

    def test_growth_speed(self):
        assert math.isclose(geometry.growth_speed(CENTRE), math.sqrt(3.0) / (2.0 * math.pi))


class TestVelocity(unittest.TestCase):
    def test_velocity_matches_growth(self):
        tri = geometry.angles(MacroPoint(nu=0.6, eta=1.2, tau=1.0))
        speed = geometry.growth_speed(MacroPoint(nu=0.6, eta=1.2, tau=1.0))

        assert math.isclose(geometry.growth_velocity(tri.pi_eta / math.pi, tri.pi_nu / math.pi), -speed)

    def test_hessian_determinant(self):
        for a, b in ((1.0 / 3.0, 1.0 / 3.0), (0.2, 0.5), (0.1, 0.8)):
            (aa, ab), (ba, bb) = geometry.velocity_hessian(a, b)
            det = geometry.hessian_det(a, b)

            assert ab == ba
            assert det < 0.0
            assert math.isclose(aa * bb - ab * ab, det, rel_tol=1e-9)

    def test_hessian_centre(self):
        assert math.isclose(geometry.hessian_det(1.0 / 3.0, 1.0 / 3.0), -4.0 * math.pi**2)

    def test_slope_domain(self):
        with self.assertRaises(DomainException):
            geometry.growth_velocity(0.6, 0.5)

        with self.assertRaises(DomainException):
            geometry.hessian_det(0.0, 0.5)


class TestBurgers(unittest.TestCase):
    def test_residual(self):
        for coords in ((1.0, 1.0, 1.0), (2.0, 1.0, 1.5), (0.5, 0.4, 0.7)):
            assert geometry.burgers_check(MacroPoint(*coords)) < 1e-6

    def test_derivative_relations(self):
        d_nu, d_eta, d_tau = geometry.omega_derivatives(CENTRE)
        value = geometry.omega(CENTRE).omega

        assert abs((1.0 - value) * d_nu - value * d_eta) < 1e-12
        assert abs(value * d_eta + d_tau) < 1e-12


class TestGreen(unittest.TestCase):
    def test_symmetric_and_positive(self):
        w1, w2 = 0.3 + 0.8j, -0.5 + 1.4j

        assert geometry.green_covariance(w1, w2) > 0.0
        assert math.isclose(geometry.green_covariance(w1, w2), geometry.green_covariance(w2, w1))

    def test_pair(self):
        w1, w2 = 0.3 + 0.8j, -0.5 + 1.4j

        assert math.isclose(math.pi * geometry.green_pair(w1, w2), geometry.green_covariance(w1, w2), rel_tol=1e-10)

    def test_decays(self):
        near = geometry.green_covariance(1j, 0.1 + 1j)
        far = geometry.green_covariance(1j, 5.0 + 1j)

        assert near > far > 0.0

    def test_singular(self):
        with self.assertRaises(SingularInputException):
            geometry.green_covariance(1j, 1j)

    def test_lower_half_plane(self):
        with self.assertRaises(DomainException):
            geometry.green_covariance(1j, 0.5 - 1j)
