# ruff: noqa: D100, D101, D102

import json
import unittest

import numpy as np

from akpz import interlacing
from akpz.enums import LozengeType
from akpz.errors import ConfigException
from akpz.errors import InvalidArgumentException
from akpz.interlacing import InterlacingArray
from tests import payload


class TestInterlacingArray(unittest.TestCase):
    def test_from_levels(self):
        a = InterlacingArray.from_levels(payload.PACKED_3["levels"])

        assert a.n == 3
        assert a.levels == payload.PACKED_3["levels"]
        assert a.positions.tolist() == [-1, -2, -1, -3, -2, -1]

    def test_level_and_position(self):
        a = InterlacingArray.from_levels(payload.MOVED_3["levels"])

        assert a.level(2).tolist() == [-2, 1]
        assert a.position(3, 3) == 2

    def test_level_is_view(self):
        a = interlacing.packed_initial(2)
        a.level(1)[0] = 4

        assert a.position(1, 1) == 4

    def test_bad_shape(self):
        with self.assertRaises(InvalidArgumentException):
            InterlacingArray(2, [0, 1])

        with self.assertRaises(InvalidArgumentException):
            InterlacingArray.from_levels([[0], [1]])

    def test_json(self):
        a = InterlacingArray.from_json(payload.convert(payload.MOVED_3))

        assert json.loads(a.to_json()) == payload.MOVED_3

    def test_json_malformed(self):
        with self.assertRaises(ConfigException):
            InterlacingArray.from_json("{not json")

        with self.assertRaises(ConfigException):
            InterlacingArray.from_json(payload.convert({"n": 3, "levels": [[0], [1, 2]]}))

        with self.assertRaises(ConfigException):
            InterlacingArray.from_json(payload.convert({"n": 2, "levels": [[0], [1]]}))

    def test_copy_is_independent(self):
        a = interlacing.packed_initial(3)
        b = a.copy()
        b.positions[0] = 7

        assert a != b
        assert a.position(1, 1) == -1

    def test_restrict(self):
        a = InterlacingArray.from_levels(payload.MOVED_3["levels"])

        assert a.restrict(2).levels == [[0], [-2, 1]]

        with self.assertRaises(InvalidArgumentException):
            a.restrict(4)

    def test_equality(self):
        assert interlacing.packed_initial(3) == InterlacingArray.from_levels(payload.PACKED_3["levels"])
        assert interlacing.packed_initial(2) != interlacing.packed_initial(3)


class TestPackedInitial(unittest.TestCase):
    def test_levels(self):
        assert interlacing.packed_initial(3).levels == payload.PACKED_3["levels"]

    def test_valid(self):
        for n in range(1, 8):
            assert interlacing.validate(interlacing.packed_initial(n)).ok

    def test_rejects_zero(self):
        with self.assertRaises(InvalidArgumentException):
            interlacing.packed_initial(0)


class TestValidate(unittest.TestCase):
    def test_valid(self):
        assert interlacing.validate(InterlacingArray.from_levels(payload.MOVED_3["levels"])).ok

    def test_left_violation(self):
        report = interlacing.validate(InterlacingArray.from_levels(payload.BROKEN_2["levels"]))

        assert not report.ok
        assert report.m == 2
        assert report.k == 1

    def test_within_level(self):
        report = interlacing.validate(InterlacingArray.from_levels([[0], [-1, 2], [-3, 1, 1]]))

        assert not report.ok
        assert report.m == 3
        assert report.k == 3

    def test_right_violation_relaxed(self):
        a = InterlacingArray.from_levels([[0], [-2, -1]])

        strict = interlacing.validate(a)
        assert not strict.ok
        assert strict.m == 2
        assert strict.k == 2

        assert interlacing.validate(a, relaxed=True).ok


class TestHeight(unittest.TestCase):
    def test_packed(self):
        a = interlacing.packed_initial(3)

        assert interlacing.height(a, -4, 3) == 3
        assert interlacing.height(a, -2, 3) == 1
        assert interlacing.height(a, -1, 3) == 0
        assert interlacing.height(a, 5, 1) == 0

    def test_monotone(self):
        a = InterlacingArray.from_levels(payload.MOVED_3["levels"])
        heights = [interlacing.height(a, x, 3) for x in range(-5, 5)]

        assert heights == sorted(heights, reverse=True)

    def test_level_outside(self):
        with self.assertRaises(InvalidArgumentException):
            interlacing.height(interlacing.packed_initial(2), 0, 3)


class TestLozenges(unittest.TestCase):
    def test_classify_packed(self):
        a = interlacing.packed_initial(2)

        assert interlacing.classify_lozenge(a, -1, 1) is LozengeType.I
        assert interlacing.classify_lozenge(a, -2, 1) is LozengeType.II
        assert interlacing.classify_lozenge(a, 0, 1) is LozengeType.III
        assert interlacing.classify_lozenge(a, -3, 2) is LozengeType.II
        assert interlacing.classify_lozenge(a, 0, 2) is LozengeType.III

    def test_classify_spread(self):
        # level 1 at 1, level 2 at -1 and 3
        a = InterlacingArray.from_levels([[1], [-1, 3]])
        expected = {
            (0, 1): LozengeType.II,
            (1, 1): LozengeType.I,
            (2, 1): LozengeType.III,
            (-2, 2): LozengeType.II,
            (-1, 2): LozengeType.I,
            (0, 2): LozengeType.III,
            (2, 2): LozengeType.II,
            (3, 2): LozengeType.I,
            (4, 2): LozengeType.III,
        }

        for (x, n), kind in expected.items():
            assert interlacing.classify_lozenge(a, x, n) is kind, (x, n)

    def test_classify_rejects_level(self):
        with self.assertRaises(InvalidArgumentException):
            interlacing.classify_lozenge(interlacing.packed_initial(2), 0, 3)

    def test_row_matches_classify(self):
        a = InterlacingArray.from_levels(payload.MOVED_3["levels"])
        xs = np.arange(-6, 6)

        for n in range(1, 4):
            row = interlacing.lozenge_row(a, n, xs)
            assert row == [interlacing.classify_lozenge(a, int(x), n) for x in xs]

    def test_one_particle_per_level_is_type_one(self):
        a = InterlacingArray.from_levels(payload.MOVED_3["levels"])
        xs = np.arange(-6, 6)

        for n in range(1, 4):
            assert interlacing.lozenge_row(a, n, xs).count(LozengeType.I) == n
