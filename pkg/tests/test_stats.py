# ruff: noqa: D100, D101, D102

import math
import unittest

import numpy as np

from akpz import kernel
from akpz import stats
from akpz.abc.ensemble import EnsembleSpec
from akpz.abc.points import MacroPoint
from akpz.abc.points import SpaceTimePoint
from akpz.enums import LozengeType
from akpz.errors import DomainException
from akpz.errors import InsufficientSamplesException
from akpz.errors import InvalidArgumentException
from akpz.geometry import limit_shape
from tests import SLOW_TESTS


class TestOls(unittest.TestCase):
    def test_slope(self):
        assert math.isclose(stats.ols_slope([0.0, 1.0, 2.0], [1.0, 3.0, 5.0]), 2.0)

    def test_ignores_offset(self):
        xs = np.log([10.0, 20.0, 40.0, 80.0])

        assert math.isclose(stats.ols_slope(xs, 0.5 * xs + 7.0), 0.5)


class TestEnsemble(unittest.TestCase):
    def test_report(self):
        spec = EnsembleSpec(n=3, times=(1.0, 2.0), query_points=((-1, 3), (0, 1)), replicas=12, seed=5)
        report = stats.run_ensemble(spec)

        assert report.replicas == 12
        assert report.complete
        assert report.seeds == list(range(12))
        assert [(q.t, q.x, q.n) for q in report.queries] == [(1.0, -1, 3), (1.0, 0, 1), (2.0, -1, 3), (2.0, 0, 1)]
        assert len(report.covariance) == 4
        assert all(len(row) == 4 for row in report.covariance)
        for i, query in enumerate(report.queries):
            assert math.isclose(report.covariance[i][i], query.variance, rel_tol=1e-12, abs_tol=1e-15)

    def test_time_zero_is_packed(self):
        spec = EnsembleSpec(n=3, times=(0.0,), query_points=((-2, 3), (-5, 3)), replicas=4, seed=0)
        report = stats.run_ensemble(spec)

        assert [q.mean for q in report.queries] == [1.0, 3.0]
        assert all(q.variance == 0.0 for q in report.queries)

    def test_reproducible(self):
        spec = EnsembleSpec(n=4, times=(3.0,), query_points=((0, 4),), replicas=10, seed=9)

        first, _, _ = stats.ensemble_samples(spec)
        second, _, _ = stats.ensemble_samples(spec)

        assert np.array_equal(first, second)

    def test_job_count_does_not_change_samples(self):
        spec = EnsembleSpec(n=3, times=(2.0,), query_points=((0, 3),), replicas=20, seed=4)

        serial, _, _ = stats.ensemble_samples(spec, jobs=1)
        parallel, _, _ = stats.ensemble_samples(spec, jobs=2)

        assert np.array_equal(serial, parallel)

    def test_deadline(self):
        spec = EnsembleSpec(n=2, times=(1.0,), query_points=((0, 1),), replicas=10, seed=0)
        samples, complete, _ = stats.ensemble_samples(spec, deadline=-1.0)

        assert not complete
        assert samples.shape == (0, 1)

        with self.assertRaises(InsufficientSamplesException):
            stats.run_ensemble(spec, deadline=-1.0)

    def test_mean_matches_kernel(self):
        spec = EnsembleSpec(n=2, times=(1.5,), query_points=((-1, 2),), replicas=1000, seed=13)
        query = stats.run_ensemble(spec).queries[0]

        assert abs(query.mean - kernel.exact_height_mean(-1, 2, 1.5)) <= 5.0 * query.stderr


class TestVarianceSlope(unittest.TestCase):
    def test_outside(self):
        with self.assertRaises(DomainException):
            stats.variance_slope(5.0, 1.0, [4.0, 8.0, 16.0], 10, 0)

    def test_times(self):
        with self.assertRaises(InvalidArgumentException):
            stats.variance_slope(1.0, 1.0, [4.0, 8.0], 10, 0)

        with self.assertRaises(InvalidArgumentException):
            stats.variance_slope(1.0, 1.0, [4.0, 16.0, 8.0], 10, 0)

    def test_replicas(self):
        with self.assertRaises(InsufficientSamplesException):
            stats.variance_slope(1.0, 1.0, [4.0, 8.0, 16.0], 1, 0)

    def test_small_run(self):
        estimate = stats.variance_slope(1.0, 1.0, [4.0, 8.0, 16.0], 20, 3, resamples=20)

        assert estimate.name == "variance_slope"
        assert estimate.target == stats.VARIANCE_TARGET
        assert math.isfinite(estimate.value)
        assert estimate.ci_low is not None
        assert estimate.ci_high is not None
        assert estimate.ci_low <= estimate.ci_high
        assert estimate.stderr >= 0.0

    @unittest.skipUnless(SLOW_TESTS, "set AKPZ_SLOW_TESTS=1")
    def test_slope(self):
        estimate = stats.variance_slope(1.0, 1.0, [25.0, 50.0, 100.0, 200.0], 400, 0, jobs=-1)

        assert abs(estimate.value - stats.VARIANCE_TARGET) <= max(0.2 * stats.VARIANCE_TARGET, 3.0 * estimate.stderr)


class TestShape(unittest.TestCase):
    def test_mean_height_ratio(self):
        point = MacroPoint(nu=1.0, eta=1.0, tau=1.0)
        estimate = stats.mean_height_ratio(point, 10.0, 20, 1)

        assert estimate.target is not None
        assert math.isclose(estimate.target, limit_shape(point).h)
        assert estimate.ci_low is not None and estimate.ci_high is not None
        assert estimate.ci_low <= estimate.value <= estimate.ci_high

    def test_facet_target(self):
        estimate = stats.mean_height_ratio(MacroPoint(nu=0.05, eta=2.0, tau=0.5), 10.0, 5, 1)

        assert estimate.target is not None
        assert math.isclose(estimate.target, 1.95)

    def test_shape_error(self):
        estimate = stats.shape_error(MacroPoint(nu=1.0, eta=1.0, tau=1.0), 10.0, 20, 2)

        assert estimate.target is None
        assert estimate.value >= 0.0
        assert estimate.ci_low is not None and estimate.ci_low >= 0.0

    def test_shape_error_outside(self):
        with self.assertRaises(DomainException):
            stats.shape_error(MacroPoint(nu=5.0, eta=1.0, tau=1.0), 10.0, 20, 2)

    def test_replicas(self):
        with self.assertRaises(InsufficientSamplesException):
            stats.mean_height_ratio(MacroPoint(nu=1.0, eta=1.0, tau=1.0), 10.0, 1, 0)

    @unittest.skipUnless(SLOW_TESTS, "set AKPZ_SLOW_TESTS=1")
    def test_limit_shape(self):
        estimate = stats.shape_error(MacroPoint(nu=1.0, eta=1.0, tau=1.0), 200.0, 200, 0, jobs=-1)

        assert estimate.value < 0.02


class TestCovariance(unittest.TestCase):
    def test_time_like(self):
        with self.assertRaises(InvalidArgumentException):
            stats.covariance_pair(
                MacroPoint(nu=1.0, eta=1.0, tau=1.0), MacroPoint(nu=1.2, eta=1.2, tau=1.2), 10.0, 10, 0
            )

    def test_replicas(self):
        point = MacroPoint(nu=1.0, eta=1.0, tau=1.0)

        with self.assertRaises(InsufficientSamplesException):
            stats.covariance_pair(point, point, 10.0, 2, 0)

    def test_same_point_is_variance(self):
        point = MacroPoint(nu=1.0, eta=1.0, tau=1.0)
        estimate = stats.covariance_pair(point, point, 10.0, 30, 6)

        assert estimate.target is None
        assert estimate.value >= 0.0

    def test_symmetric(self):
        p1 = MacroPoint(nu=1.0, eta=1.0, tau=1.0)
        p2 = MacroPoint(nu=1.5, eta=0.75, tau=1.0)

        forward = stats.covariance_pair(p1, p2, 10.0, 30, 8)
        backward = stats.covariance_pair(p2, p1, 10.0, 30, 8)

        assert forward.target is not None
        assert math.isclose(forward.value, backward.value, rel_tol=1e-12, abs_tol=1e-12)
        assert backward.target is not None
        assert math.isclose(forward.target, backward.target, rel_tol=1e-12)


class TestFrequencies(unittest.TestCase):
    def test_single_point(self):
        report = stats.frequency_vs_determinant([SpaceTimePoint(x=0, n=1, t=1.0)], None, 2000, 3)

        assert report.replicas == 2000
        assert len(report.rows) == 1
        assert report.max_z < 5.0
        assert math.isclose(report.rows[0].determinant, math.exp(-1.0), rel_tol=1e-8)

    def test_pair_adds_joint_event(self):
        points = [SpaceTimePoint(x=-1, n=2, t=1.0), SpaceTimePoint(x=0, n=1, t=1.0)]
        report = stats.frequency_vs_determinant(points, None, 500, 3)

        assert len(report.rows) == 3
        assert report.rows[-1].event == "(-1,2,1) & (0,1,1)"

    def test_typed_single_level(self):
        # one walker from -1: II when it is right of 0, III when it is still at -1
        point = SpaceTimePoint(x=0, n=1, t=1.0)
        second = stats.frequency_vs_determinant([point], [LozengeType.II], 4000, 5)
        third = stats.frequency_vs_determinant([point], [LozengeType.III], 4000, 5)

        assert math.isclose(second.rows[0].determinant, 1.0 - 2.0 * math.exp(-1.0), rel_tol=1e-8)
        assert math.isclose(third.rows[0].determinant, math.exp(-1.0), rel_tol=1e-8)
        assert second.rows[0].event == "II@(0,1,1)"
        assert second.max_z < 5.0
        assert third.max_z < 5.0

    def test_typed_frequencies_match(self):
        point = SpaceTimePoint(x=-1, n=2, t=1.5)

        for kind in LozengeType:
            report = stats.frequency_vs_determinant([point], [kind], 4000, 11)
            assert report.max_z < 5.0, (kind, report.rows)

    def test_empty(self):
        with self.assertRaises(InvalidArgumentException):
            stats.frequency_vs_determinant([], None, 100, 0)

    def test_time_like(self):
        points = [SpaceTimePoint(x=0, n=1, t=1.0), SpaceTimePoint(x=0, n=2, t=2.0)]

        with self.assertRaises(InvalidArgumentException):
            stats.frequency_vs_determinant(points, None, 100, 0)
