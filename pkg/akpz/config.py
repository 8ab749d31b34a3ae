"""
Config.

Run configuration for the command line: flags, a flat `key = value` file and
the `AKPZ_SEED` environment variable.

Precedence is flag, then file, then environment (seed only), then the
documented default.
"""

from __future__ import annotations

import os
import pathlib
import typing

import msgspec

from akpz.abc.bases import PayloadBase
from akpz.errors import ConfigException
from akpz.internal.logger import logger

__all__ = (
    "DEFAULT_SEED",
    "DEFAULT_JOBS",
    "DEFAULT_LOG_LEVEL",
    "SEED_ENV",
    "RunConfig",
    "parse_config_text",
    "load_config_file",
    "env_seed",
    "resolve_config",
)

_logger = logger.getChild("config")

DEFAULT_SEED: typing.Final[int] = 0
"""Seed used when no flag, file entry or environment value gives one."""
DEFAULT_JOBS: typing.Final[int] = 1
"""Worker count used when none is given."""
DEFAULT_LOG_LEVEL: typing.Final[str] = "WARNING"
"""Log level used when none is given."""
SEED_ENV: typing.Final[str] = "AKPZ_SEED"
"""The environment variable holding the default seed."""

_GLOBAL_KEYS: typing.Final[frozenset[str]] = frozenset({"seed", "out", "jobs", "log_level"})

T = typing.TypeVar("T")


class RunConfig(PayloadBase, frozen=True):
    """
    Run config.

    The resolved parameters of one command.
    """

    command: str
    """The subcommand."""
    seed: int = DEFAULT_SEED
    """The 64-bit base seed."""
    out: str | None = None
    """The output path, or None for stdout."""
    jobs: int = DEFAULT_JOBS
    """Worker count for replica parallelism."""
    log_level: str = DEFAULT_LOG_LEVEL
    """The logging level name."""
    params: dict[str, str] = msgspec.field(default_factory=dict)
    """Subcommand options, as strings."""

    def _get(self, key: str, default: T | None, convert: typing.Callable[[str], T]) -> T | None:
        raw = self.params.get(key)
        if raw is None:
            return default
        try:
            return convert(raw)
        except ValueError as e:
            raise ConfigException(f"{key} = {raw!r} is not a valid {getattr(convert, '__name__', 'value')}") from e

    @typing.overload
    def get_int(self, key: str, default: int) -> int: ...
    @typing.overload
    def get_int(self, key: str, default: None = None) -> int | None: ...
    def get_int(self, key: str, default: int | None = None) -> int | None:
        """The option `key` as an int."""
        return self._get(key, default, int)

    @typing.overload
    def get_float(self, key: str, default: float) -> float: ...
    @typing.overload
    def get_float(self, key: str, default: None = None) -> float | None: ...
    def get_float(self, key: str, default: float | None = None) -> float | None:
        """The option `key` as a float."""
        return self._get(key, default, float)

    @typing.overload
    def get_str(self, key: str, default: str) -> str: ...
    @typing.overload
    def get_str(self, key: str, default: None = None) -> str | None: ...
    def get_str(self, key: str, default: str | None = None) -> str | None:
        """The option `key` as a string."""
        return self.params.get(key, default)

    def get_bool(self, key: str, default: bool = False) -> bool:
        """The option `key` as a flag; `1`, `true`, `yes` and `on` are true."""
        raw = self.params.get(key)
        if raw is None:
            return default
        return raw.strip().lower() in ("1", "true", "yes", "on")

    def get_list(self, key: str, convert: typing.Callable[[str], T]) -> list[T] | None:
        """The option `key` as a comma separated list."""
        raw = self.params.get(key)
        if raw is None:
            return None
        try:
            return [convert(part.strip()) for part in raw.split(",") if part.strip()]
        except ValueError as e:
            raise ConfigException(f"{key} = {raw!r} is not a comma separated list") from e


def parse_config_text(text: str) -> dict[str, str]:
    """
    Parse config text.

    Parse flat `key = value` lines. `#` starts a comment, blank lines are
    skipped, and dashes in keys become underscores so `log-level` and
    `log_level` are the same key.

    Raises
    ------
    ConfigException
        Raised when a line has no `=` or an empty key.
    """
    values: dict[str, str] = {}
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        if "=" not in stripped:
            raise ConfigException(f"line {number}: expected 'key = value', got {line.strip()!r}")
        key, value = stripped.split("=", 1)
        key = key.strip().replace("-", "_")
        if not key:
            raise ConfigException(f"line {number}: empty key")
        values[key] = value.strip()
    return values


def load_config_file(path: str | os.PathLike[str]) -> dict[str, str]:
    """
    Load config file.

    Raises
    ------
    ConfigException
        Raised when the file cannot be read or parsed.
    """
    try:
        text = pathlib.Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigException(f"cannot read config file {os.fspath(path)!r}: {e}") from e
    return parse_config_text(text)


def env_seed(environ: typing.Mapping[str, str] | None = None) -> int | None:
    """
    Env seed.

    The seed held by `AKPZ_SEED`, or None when it is unset or blank.

    Raises
    ------
    ConfigException
        Raised when the variable is not an integer.
    """
    raw = (os.environ if environ is None else environ).get(SEED_ENV, "").strip()
    if not raw:
        return None
    try:
        return int(raw, 0)
    except ValueError as e:
        raise ConfigException(f"{SEED_ENV} = {raw!r} is not an integer") from e


def resolve_config(
    command: str,
    flags: typing.Mapping[str, typing.Any],
    known: typing.Collection[str],
    *,
    file_values: typing.Mapping[str, str] | None = None,
    environ: typing.Mapping[str, str] | None = None,
) -> RunConfig:
    """
    Resolve config.

    Merge flags, file values and the environment into a RunConfig.

    Parameters
    ----------
    command
        The subcommand.
    flags
        Parsed flag values; None means the flag was not given.
    known
        The option names the subcommand understands, besides `seed`, `out`,
        `jobs` and `log_level`. Other file keys are ignored with a warning.
    file_values
        Values read from a config file.
    environ
        The environment, `os.environ` by default.

    Raises
    ------
    ConfigException
        Raised when a seed or job count is not an integer.
    """
    file_values = file_values or {}
    allowed = _GLOBAL_KEYS | set(known)
    for key in file_values:
        if key not in allowed:
            _logger.warning(f"ignoring unknown config key {key!r} for {command}")

    merged: dict[str, str] = {}
    for key in allowed:
        flag = flags.get(key)
        if flag is not None and flag is not False:
            merged[key] = flag if isinstance(flag, str) else _flag_text(flag)
        elif key in file_values:
            merged[key] = file_values[key]

    try:
        seed = int(merged.pop("seed"), 0) if "seed" in merged else None
        jobs = int(merged.pop("jobs")) if "jobs" in merged else DEFAULT_JOBS
    except ValueError as e:
        raise ConfigException(f"seed and jobs must be integers: {e}") from e
    if seed is None:
        seed = env_seed(environ)
    if seed is None:
        seed = DEFAULT_SEED
    if not 0 <= seed < 1 << 64:
        raise ConfigException(f"seed must fit in 64 bits, got {seed}")
    if jobs == 0:
        raise ConfigException("jobs must be positive, or negative to count back from every core")

    return RunConfig(
        command=command,
        seed=seed,
        out=merged.pop("out", None),
        jobs=jobs,
        log_level=merged.pop("log_level", DEFAULT_LOG_LEVEL).upper(),
        params=dict(sorted(merged.items())),
    )


def _flag_text(value: typing.Any) -> str:
    if value is True:
        return "true"
    if isinstance(value, (list, tuple)):
        return ",".join(str(item) for item in typing.cast(typing.Sequence[typing.Any], value))
    return str(value)


# MIT License

# Copyright (c) 2024 The akpz developers

# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:

# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.

# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.
