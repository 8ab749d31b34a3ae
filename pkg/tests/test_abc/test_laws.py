# ruff: noqa: D100, D101, D102

import json
import unittest

import numpy as np

from akpz.abc.laws import RngStream
from akpz.abc.laws import StepLaw
from akpz.abc.laws import as_generator
from akpz.enums import StepFamily
from akpz.errors import InvalidArgumentException
from tests import payload


class TestStepLaw(unittest.TestCase):
    def test_from_payload(self):
        law = StepLaw._from_payload(payload.convert(payload.STEP_LAW))

        assert law.family is StepFamily.BERNOULLI_RIGHT
        assert law.parameter == 0.5
        assert law.alphas == (1.0, 0.8)
        assert law.n == 2

    def test_to_payload(self):
        law = StepLaw._from_payload(payload.convert(payload.STEP_LAW))

        assert json.loads(law._to_payload) == payload.STEP_LAW

    def test_uniform(self):
        law = StepLaw.uniform(StepFamily.GEOMETRIC_LEFT, 0.2, 3)

        assert law.alphas == (1.0, 1.0, 1.0)

    def test_ratio(self):
        assert StepLaw.uniform(StepFamily.BERNOULLI_RIGHT, 0.5, 2, alpha=2.0).ratio(1) == 1.0
        assert StepLaw.uniform(StepFamily.BERNOULLI_LEFT, 0.5, 2, alpha=2.0).ratio(2) == 4.0

    def test_geometric_bounds(self):
        with self.assertRaises(InvalidArgumentException):
            StepLaw.uniform(StepFamily.GEOMETRIC_LEFT, 1.0, 2)

        with self.assertRaises(InvalidArgumentException):
            StepLaw(family=StepFamily.GEOMETRIC_RIGHT, parameter=0.6, alphas=(1.0, 2.0))

    def test_rejects_empty_weights(self):
        with self.assertRaises(InvalidArgumentException):
            StepLaw(family=StepFamily.BERNOULLI_LEFT, parameter=0.5, alphas=())


class TestRngStream(unittest.TestCase):
    def test_to_payload(self):
        stream = RngStream._from_payload(payload.convert(payload.RNG_STREAM))

        assert json.loads(stream._to_payload) == payload.RNG_STREAM

    def test_reproducible(self):
        first = RngStream(seed=7, replica=3).generator().random(5)
        second = RngStream(seed=7, replica=3).generator().random(5)

        assert np.array_equal(first, second)

    def test_replicas_differ(self):
        first = RngStream(seed=7, replica=0).generator().random(5)
        second = RngStream(seed=7, replica=1).generator().random(5)

        assert not np.array_equal(first, second)

    def test_as_generator(self):
        generator = np.random.default_rng(1)

        assert as_generator(generator) is generator
        assert isinstance(as_generator(RngStream(seed=1)), np.random.Generator)

    def test_rejects_wide_seed(self):
        with self.assertRaises(InvalidArgumentException):
            RngStream(seed=1 << 64)
