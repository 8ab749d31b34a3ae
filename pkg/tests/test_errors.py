# ruff: noqa: D100, D101, D102

import unittest

from akpz import errors


class TestErrors(unittest.TestCase):
    def test_invalid_argument(self):
        error = errors.InvalidArgumentException("bad level")

        assert error.reason == "bad level"
        assert isinstance(error, errors.AKPZException)

    def test_domain_is_invalid_argument(self):
        with self.assertRaises(errors.InvalidArgumentException):
            raise errors.DomainException("outside")

    def test_singular_is_invalid_argument(self):
        assert issubclass(errors.SingularInputException, errors.InvalidArgumentException)

    def test_quadrature(self):
        error = errors.QuadratureException("no convergence", 4096, 1e12, 0.5)

        assert error.nodes == 4096
        assert error.value == 1e12
        assert error.change == 0.5

    def test_config(self):
        error = errors.ConfigException("line 1: empty key")

        assert error.reason == "line 1: empty key"
        assert not isinstance(error, errors.InvalidArgumentException)
