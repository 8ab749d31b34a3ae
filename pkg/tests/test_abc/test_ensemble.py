# ruff: noqa: D100, D101, D102

import json
import unittest

from akpz.abc.ensemble import EnsembleSpec
from akpz.errors import InvalidArgumentException
from tests import payload


class TestEnsembleSpec(unittest.TestCase):
    def test_from_payload(self):
        spec = EnsembleSpec._from_payload(payload.convert(payload.ENSEMBLE_SPEC))

        assert spec.n == 2
        assert spec.times == (1.0, 2.0)
        assert spec.query_points == ((-1, 2), (0, 1))
        assert spec.replicas == 10
        assert spec.seed == 5

    def test_to_payload(self):
        spec = EnsembleSpec._from_payload(payload.convert(payload.ENSEMBLE_SPEC))

        assert json.loads(spec._to_payload) == payload.ENSEMBLE_SPEC

    def test_rejects_single_replica(self):
        with self.assertRaises(InvalidArgumentException):
            EnsembleSpec(n=2, times=(1.0,), query_points=((0, 1),), replicas=1, seed=0)

    def test_rejects_decreasing_times(self):
        with self.assertRaises(InvalidArgumentException):
            EnsembleSpec(n=2, times=(2.0, 1.0), query_points=((0, 1),), replicas=4, seed=0)

    def test_rejects_level_outside(self):
        with self.assertRaises(InvalidArgumentException):
            EnsembleSpec(n=2, times=(1.0,), query_points=((0, 3),), replicas=4, seed=0)
