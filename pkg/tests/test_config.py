# ruff: noqa: D100, D101, D102

import os
import pathlib
import tempfile
import unittest

from akpz import config
from akpz.errors import ConfigException
from akpz.errors import InvalidArgumentException


class TestParse(unittest.TestCase):
    def test_lines(self):
        text = "# run\nseed = 12\n\nlog-level = debug  # noisy\nalphas=1.0,0.8\n"

        assert config.parse_config_text(text) == {"seed": "12", "log_level": "debug", "alphas": "1.0,0.8"}

    def test_missing_equals(self):
        with self.assertRaises(ConfigException):
            config.parse_config_text("seed 12\n")

    def test_empty_key(self):
        with self.assertRaises(ConfigException):
            config.parse_config_text(" = 12\n")

    def test_load_file(self):
        with tempfile.TemporaryDirectory() as directory:
            path = pathlib.Path(directory) / "run.conf"
            path.write_text("n = 4\n", encoding="utf-8")

            assert config.load_config_file(path) == {"n": "4"}

    def test_missing_file(self):
        with tempfile.TemporaryDirectory() as directory:
            with self.assertRaises(ConfigException):
                config.load_config_file(os.path.join(directory, "absent.conf"))

    def test_not_an_argument_error(self):
        assert not issubclass(ConfigException, InvalidArgumentException)


class TestEnvSeed(unittest.TestCase):
    def test_unset(self):
        assert config.env_seed({}) is None
        assert config.env_seed({config.SEED_ENV: "  "}) is None

    def test_bases(self):
        assert config.env_seed({config.SEED_ENV: "42"}) == 42
        assert config.env_seed({config.SEED_ENV: "0x10"}) == 16

    def test_garbage(self):
        with self.assertRaises(ConfigException):
            config.env_seed({config.SEED_ENV: "seven"})


class TestResolve(unittest.TestCase):
    def test_defaults(self):
        run = config.resolve_config("simulate", {}, ("n",), environ={})

        assert run.command == "simulate"
        assert run.seed == config.DEFAULT_SEED
        assert run.jobs == config.DEFAULT_JOBS
        assert run.log_level == config.DEFAULT_LOG_LEVEL
        assert run.out is None
        assert run.params == {}

    def test_precedence(self):
        environ = {config.SEED_ENV: "3"}
        file_values = {"seed": "2", "n": "5"}

        assert config.resolve_config("simulate", {"seed": 1}, ("n",), environ=environ).seed == 1
        assert config.resolve_config("simulate", {"seed": 1}, ("n",), file_values=file_values, environ=environ).seed == 1
        assert config.resolve_config("simulate", {}, ("n",), file_values=file_values, environ=environ).seed == 2
        assert config.resolve_config("simulate", {}, ("n",), environ=environ).seed == 3

    def test_flag_beats_file(self):
        run = config.resolve_config(
            "simulate", {"n": 7, "t": None}, ("n", "t"), file_values={"n": "5", "t": "2.5"}, environ={}
        )

        assert run.params == {"n": "7", "t": "2.5"}
        assert run.get_int("n") == 7
        assert run.get_float("t") == 2.5

    def test_flag_text(self):
        run = config.resolve_config(
            "kernel", {"det": True, "alphas": [1.0, 0.5], "fixed": False}, ("det", "alphas", "fixed"), environ={}
        )

        assert run.get_bool("det")
        assert not run.get_bool("fixed")
        assert run.get_list("alphas", float) == [1.0, 0.5]

    def test_unknown_file_key(self):
        with self.assertLogs("akpz", level="WARNING"):
            run = config.resolve_config("simulate", {}, ("n",), file_values={"colour": "red"}, environ={})

        assert "colour" not in run.params

    def test_log_level(self):
        run = config.resolve_config("info", {"log_level": "debug"}, (), environ={})

        assert run.log_level == "DEBUG"

    def test_bad_seed(self):
        with self.assertRaises(ConfigException):
            config.resolve_config("simulate", {"seed": "x"}, (), environ={})

        with self.assertRaises(ConfigException):
            config.resolve_config("simulate", {"seed": 1 << 64}, (), environ={})

        with self.assertRaises(ConfigException):
            config.resolve_config("simulate", {"seed": -1}, (), environ={})

    def test_zero_jobs(self):
        with self.assertRaises(ConfigException):
            config.resolve_config("simulate", {"jobs": 0}, (), environ={})


class TestGetters(unittest.TestCase):
    def test_bad_values(self):
        run = config.RunConfig(command="simulate", params={"n": "four", "alphas": "1,b"})

        with self.assertRaises(ConfigException):
            run.get_int("n")

        with self.assertRaises(ConfigException):
            run.get_list("alphas", float)

    def test_missing(self):
        run = config.RunConfig(command="simulate")

        assert run.get_int("n") is None
        assert run.get_float("t", 1.5) == 1.5
        assert run.get_str("family", "bernoulli-right") == "bernoulli-right"
        assert run.get_list("alphas", float) is None
