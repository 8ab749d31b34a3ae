# ruff: noqa: D100, D101, D102

import json
import math
import unittest

from akpz.abc.results import CheckResult
from akpz.abc.results import ContourSpec
from akpz.abc.results import Estimate
from akpz.abc.results import KernelValue
from akpz.abc.results import LozengeTile
from akpz.abc.results import ValidationReport
from akpz.enums import LozengeType
from akpz.errors import InvalidArgumentException
from tests import payload


class TestContourSpec(unittest.TestCase):
    def test_to_payload(self):
        contour = ContourSpec._from_payload(payload.convert(payload.CONTOUR_SPEC))

        assert json.loads(contour._to_payload) == payload.CONTOUR_SPEC

    def test_encloses(self):
        contour = ContourSpec(center=0.0, radius=0.5)

        assert contour.encloses(0.25j)
        assert not contour.encloses(1.0)

    def test_disjoint(self):
        inner = ContourSpec(center=0.0, radius=0.5)

        assert inner.disjoint_from(ContourSpec(center=0.0, radius=2.0))
        assert inner.disjoint_from(ContourSpec(center=3.0, radius=1.0))
        assert not inner.disjoint_from(ContourSpec(center=1.0, radius=1.0))

    def test_rejects_odd_nodes(self):
        with self.assertRaises(InvalidArgumentException):
            ContourSpec(center=0.0, radius=1.0, nodes=63)

    def test_rejects_radius(self):
        with self.assertRaises(InvalidArgumentException):
            ContourSpec(center=0.0, radius=0.0)


class TestKernelValue(unittest.TestCase):
    def test_to_payload(self):
        value = KernelValue._from_payload(payload.convert(payload.KERNEL_VALUE))

        assert value.repr == "charlier"
        assert json.loads(value._to_payload) == payload.KERNEL_VALUE


class TestEstimate(unittest.TestCase):
    def test_to_payload(self):
        estimate = Estimate._from_payload(payload.convert(payload.ESTIMATE))

        assert json.loads(estimate._to_payload) == payload.ESTIMATE

    def test_z_score(self):
        estimate = Estimate(name="e", value=1.2, stderr=0.1, target=1.0)

        assert estimate.z_score is not None
        assert math.isclose(estimate.z_score, 2.0)

    def test_z_score_without_target(self):
        assert Estimate(name="e", value=1.0, stderr=0.1).z_score is None

    def test_z_score_zero_stderr(self):
        assert Estimate(name="e", value=1.0, stderr=0.0, target=1.0).z_score == 0.0
        assert Estimate(name="e", value=1.5, stderr=0.0, target=1.0).z_score == math.inf


class TestCheckResult(unittest.TestCase):
    def test_to_payload(self):
        result = CheckResult._from_payload(payload.convert(payload.CHECK_RESULT))

        assert result.passed
        assert json.loads(result._to_payload) == payload.CHECK_RESULT


class TestValidationReport(unittest.TestCase):
    def test_defaults(self):
        report = ValidationReport(ok=True)

        assert report.k is None
        assert report.m is None
        assert report.reason is None


class TestLozengeTile(unittest.TestCase):
    def test_from_payload(self):
        tile = LozengeTile._from_payload(payload.convert(payload.LOZENGE_TILE))

        assert tile == LozengeTile(x=-1, n=1, type=LozengeType.I)

    def test_to_payload(self):
        tile = LozengeTile(x=-1, n=1, type=LozengeType.I)

        assert json.loads(tile._to_payload) == payload.LOZENGE_TILE
