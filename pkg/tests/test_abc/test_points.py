# ruff: noqa: D100, D101, D102

import json
import unittest

from akpz.abc.points import MacroPoint
from akpz.abc.points import SpaceTimePoint
from akpz.errors import InvalidArgumentException
from tests import payload


class TestSpaceTimePoint(unittest.TestCase):
    def test_base(self):
        point = SpaceTimePoint(x=-1, n=2, t=1.0)

        assert point.x == -1
        assert point.n == 2
        assert point.t == 1.0

    def test_from_payload(self):
        point = SpaceTimePoint._from_payload(payload.convert(payload.SPACE_TIME_POINT))

        assert point == SpaceTimePoint(x=-1, n=2, t=1.0)

    def test_to_payload(self):
        point = SpaceTimePoint._from_payload(payload.convert(payload.SPACE_TIME_POINT))

        assert json.loads(point._to_payload) == payload.SPACE_TIME_POINT

    def test_parse(self):
        assert SpaceTimePoint.parse(" 3, 4 ,2.5") == SpaceTimePoint(x=3, n=4, t=2.5)

    def test_parse_malformed(self):
        with self.assertRaises(InvalidArgumentException):
            SpaceTimePoint.parse("1,2")

        with self.assertRaises(InvalidArgumentException):
            SpaceTimePoint.parse("a,2,3")

    def test_rejects_level_zero(self):
        with self.assertRaises(InvalidArgumentException):
            SpaceTimePoint(x=0, n=0, t=1.0)

    def test_rejects_negative_time(self):
        with self.assertRaises(InvalidArgumentException):
            SpaceTimePoint(x=0, n=1, t=-0.5)


class TestMacroPoint(unittest.TestCase):
    def test_from_payload(self):
        point = MacroPoint._from_payload(payload.convert(payload.MACRO_POINT))

        assert point.nu == 1.0
        assert point.eta == 1.0
        assert point.tau == 1.0

    def test_to_payload(self):
        point = MacroPoint._from_payload(payload.convert(payload.MACRO_POINT))

        assert json.loads(point._to_payload) == payload.MACRO_POINT

    def test_domain(self):
        assert MacroPoint(nu=1.0, eta=1.0, tau=1.0).in_domain
        assert not MacroPoint(nu=4.5, eta=1.0, tau=1.0).in_domain
        # the degenerate triangle is not in the open region
        assert not MacroPoint(nu=4.0, eta=1.0, tau=1.0).in_domain

    def test_domain_by_circles_agrees(self):
        for nu in (0.01, 0.2, 1.0, 2.0, 3.9, 4.1, 6.0):
            for eta in (0.3, 1.0, 2.5):
                point = MacroPoint(nu=nu, eta=eta, tau=1.0)
                assert point.in_domain == point.in_domain_by_circles

    def test_scaled(self):
        assert MacroPoint(nu=1.5, eta=0.75, tau=1.0).scaled(10.0) == (7, 7, 10.0)

    def test_rejects_nonpositive(self):
        with self.assertRaises(InvalidArgumentException):
            MacroPoint(nu=0.0, eta=1.0, tau=1.0)
