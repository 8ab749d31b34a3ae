"""
CLI.

The `akpz` command line: simulations, kernel queries, limit shape tables,
estimators, tiling export, acceptance suites and quick transfer checks.

Exit codes are 0 on success, 1 on a runtime or acceptance failure (a JSON
error object goes to stderr) and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import logging
import os
import pathlib
import platform
import sys
import typing

import msgspec
import numpy as np

from akpz.abc.ensemble import EnsembleSpec
from akpz.abc.laws import RngStream
from akpz.abc.laws import StepLaw
from akpz.abc.points import MacroPoint
from akpz.abc.points import SpaceTimePoint
from akpz.config import RunConfig
from akpz.config import load_config_file
from akpz.config import resolve_config
from akpz.dynamics import aztec_shuffle
from akpz.dynamics import ctmc_run
from akpz.dynamics import parallel_update
from akpz.dynamics import seq_update
from akpz.enums import ChainType
from akpz.enums import KernelRepr
from akpz.enums import LozengeType
from akpz.enums import StatsMode
from akpz.enums import StepFamily
from akpz.enums import SuiteName
from akpz.enums import TilingFormat
from akpz.errors import AKPZException
from akpz.geometry import limit_shape_extended
from akpz.geometry import omega
from akpz.interlacing import InterlacingArray
from akpz.interlacing import packed_initial
from akpz.internal import about
from akpz.internal.converters import HAVE_ORJSON
from akpz.internal.converters import json_dumps
from akpz.internal.jit import HAVE_NUMBA
from akpz.internal.logger import logger
from akpz.kernel import corr_det
from akpz.kernel import kernel_spacetime
from akpz.stats import covariance_pair
from akpz.stats import frequency_vs_determinant
from akpz.stats import run_ensemble
from akpz.stats import shape_error
from akpz.stats import variance_slope
from akpz.suites import run_suite
from akpz.tiling import TILING_MARGIN
from akpz.tiling import tiling_export
from akpz.transfer import Symbol
from akpz.transfer import Window
from akpz.transfer import commutation_check
from akpz.transfer import semigroup_check

if typing.TYPE_CHECKING:
    from akpz.abc.results import Estimate

__all__ = ("main", "build_parser")

_logger = logger.getChild("cli")

EXIT_OK: typing.Final[int] = 0
EXIT_FAILURE: typing.Final[int] = 1
EXIT_USAGE: typing.Final[int] = 2

DEFAULT_REPLICAS: typing.Final[int] = 200
"""Replicas used by `stats` when none are given."""
DEFAULT_SCALE: typing.Final[float] = 100.0
"""The scale `L` used by `stats` when none is given."""
DEFAULT_PARAMETER: typing.Final[float] = 0.5
"""The step parameter of the discrete chains when none is given."""


class UsageError(Exception):
    """Raised by a command whose options are missing or malformed."""


# Option parsing:


def _points(raw: str) -> list[SpaceTimePoint]:
    return [SpaceTimePoint.parse(part) for part in raw.split(";") if part.strip()]


def _macro(raw: str) -> MacroPoint:
    parts = [part.strip() for part in raw.split(",")]
    if len(parts) != 3:
        raise UsageError(f"expected 'nu,eta,tau', got {raw!r}")
    try:
        return MacroPoint(nu=float(parts[0]), eta=float(parts[1]), tau=float(parts[2]))
    except ValueError as e:
        raise UsageError(f"expected 'nu,eta,tau', got {raw!r}") from e


def _kernel_points(config: RunConfig) -> list[SpaceTimePoint]:
    first = config.get_str("p1")
    second = config.get_str("p2")
    raw = config.get_str("points")
    if first is None and second is None:
        if raw is None:
            raise UsageError("kernel needs --p1 and --p2, or --points")
        return _points(raw)
    if first is None or second is None:
        raise UsageError("kernel needs both --p1 and --p2")
    if raw is not None:
        raise UsageError("give either --p1 and --p2 or --points, not both")
    return [SpaceTimePoint.parse(first), SpaceTimePoint.parse(second)]


def _require(config: RunConfig, key: str) -> str:
    value = config.get_str(key)
    if value is None:
        raise UsageError(f"{config.command} needs --{key.replace('_', '-')}")
    return value


def _enum(kind: type[typing.Any], raw: str, key: str) -> typing.Any:
    try:
        return kind(raw)
    except ValueError as e:
        choices = ", ".join(member.value for member in kind)
        raise UsageError(f"--{key} must be one of {choices}, got {raw!r}") from e


def _write(config: RunConfig, payload: bytes) -> None:
    if config.out is None:
        sys.stdout.buffer.write(payload)
        if not payload.endswith(b"\n"):
            sys.stdout.buffer.write(b"\n")
        sys.stdout.flush()
        return
    pathlib.Path(config.out).write_bytes(payload)
    _logger.info(f"wrote {len(payload)} bytes to {config.out}")


def _estimate_payload(estimate: Estimate) -> dict[str, typing.Any]:
    return {
        "name": estimate.name,
        "value": estimate.value,
        "stderr": estimate.stderr,
        "ci_low": estimate.ci_low,
        "ci_high": estimate.ci_high,
        "target": estimate.target,
    }


# Commands:


def cmd_simulate(config: RunConfig) -> int:
    """Run one chain from the packed start and write the final array."""
    n = config.get_int("n")
    if n is None:
        raise UsageError("simulate needs --n")
    t = config.get_float("t", 0.0)
    chain = _enum(ChainType, config.get_str("chain", ChainType.CTMC.value), "chain")
    alphas = config.get_list("alphas", float)
    generator = RngStream(seed=config.seed).generator()
    trace_path = config.get_str("trace")
    if trace_path is not None and chain is not ChainType.CTMC:
        _logger.warning("--trace is only written by the ctmc chain")

    state = packed_initial(n)
    if chain is ChainType.CTMC:
        if trace_path is None:
            state = ctmc_run(state, t, generator, alphas=alphas)
        else:
            with open(trace_path, "wb") as trace:
                state = ctmc_run(state, t, generator, alphas=alphas, trace=trace)
    else:
        parameter = config.get_float("parameter", DEFAULT_PARAMETER)
        steps = int(t)
        if steps != t:
            raise UsageError(f"discrete chains run whole steps, got --t {t}")
        if chain is ChainType.SEQ:
            family = _enum(StepFamily, config.get_str("family", StepFamily.BERNOULLI_RIGHT.value), "family")
            weights = tuple(alphas) if alphas is not None else (1.0,) * n
            law = StepLaw(family=family, parameter=parameter, alphas=weights)
            for _ in range(steps):
                state = seq_update(state, law, generator)
        elif chain is ChainType.PARALLEL:
            schedule = (parameter,) * (steps + n)
            for step in range(steps):
                state = parallel_update(state, schedule, alphas, step, generator)
        else:
            state = aztec_shuffle(n, parameter, generator)
    _write(config, state.to_json().encode("utf-8"))
    return EXIT_OK


def cmd_kernel(config: RunConfig) -> int:
    """Evaluate the kernel at two points, or a correlation determinant."""
    points = _kernel_points(config)
    repr_ = _enum(KernelRepr, config.get_str("repr", KernelRepr.AUTO.value), "repr")
    raw_types = config.get_list("types", str)
    types = [_enum(LozengeType, value, "types") for value in raw_types] if raw_types is not None else None
    if config.get_bool("det") or types is not None:
        payload = {
            "points": [[p.x, p.n, p.t] for p in points],
            "types": [kind.value for kind in types] if types is not None else None,
            "probability": corr_det(points, types),
        }
        _write(config, json_dumps(payload))
        return EXIT_OK
    if len(points) != 2:
        raise UsageError(f"kernel needs exactly two points without --det, got {len(points)}")
    value = kernel_spacetime(points[0], points[1], repr=repr_)
    _write(config, value._to_payload.encode("utf-8"))
    return EXIT_OK


def cmd_limit_shape(config: RunConfig) -> int:
    """Tabulate the limit shape along a line of `ν` as CSV."""
    eta = config.get_float("eta", 1.0)
    tau = config.get_float("tau", 1.0)
    nu_min = config.get_float("nu_min", 0.05)
    nu_max = config.get_float("nu_max", 4.0)
    steps = config.get_int("steps", 80)
    if steps < 2 or not 0.0 < nu_min < nu_max:
        raise UsageError("limit-shape needs 0 < --nu-min < --nu-max and --steps >= 2")
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["nu", "eta", "tau", "density", "height", "omega_re", "omega_im"])
    for nu in np.linspace(nu_min, nu_max, steps):
        point = MacroPoint(nu=float(nu), eta=eta, tau=tau)
        rho, h = limit_shape_extended(point)
        if point.in_domain:
            value = omega(point)
            re, im = f"{value.real:.10g}", f"{value.imag:.10g}"
        else:
            re = im = ""
        writer.writerow([f"{nu:.10g}", f"{eta:.10g}", f"{tau:.10g}", f"{rho:.10g}", f"{h:.10g}", re, im])
    _write(config, buffer.getvalue().encode("utf-8"))
    return EXIT_OK


def _stats_payload(config: RunConfig, mode: StatsMode, estimates: list[Estimate], passed: bool) -> bytes:
    spec = {key: value for key, value in config.params.items() if key != "mode"}
    spec.update({"mode": mode.value, "seed": config.seed})
    return json_dumps({"spec": spec, "estimates": [_estimate_payload(e) for e in estimates], "pass": passed})


def cmd_stats(config: RunConfig) -> int:
    """Run one estimator and report it with a pass verdict."""
    mode = _enum(StatsMode, _require(config, "mode"), "mode")
    replicas = config.get_int("replicas", DEFAULT_REPLICAS)
    scale = config.get_float("scale", DEFAULT_SCALE)
    if mode is StatsMode.VARIANCE:
        times = config.get_list("times", float) or [25.0, 50.0, 100.0, 200.0]
        estimate = variance_slope(
            config.get_float("lam", 1.0), config.get_float("c", 1.0), times, replicas, config.seed, jobs=config.jobs
        )
        assert estimate.target is not None
        passed = abs(estimate.value - estimate.target) <= max(0.2 * estimate.target, 3.0 * estimate.stderr)
        estimates = [estimate]
    elif mode is StatsMode.SHAPE:
        point = _macro(config.get_str("point", "1,1,1"))
        estimate = shape_error(point, scale, replicas, config.seed, jobs=config.jobs)
        passed = estimate.value <= config.get_float("tolerance", 0.02)
        estimates = [estimate]
    elif mode is StatsMode.COVARIANCE:
        p1 = _macro(_require(config, "point"))
        p2 = _macro(_require(config, "point2"))
        estimate = covariance_pair(p1, p2, scale, replicas, config.seed, jobs=config.jobs)
        if estimate.target is None:
            passed = True
        else:
            passed = abs(estimate.value - estimate.target) <= max(0.25 * abs(estimate.target), 3.0 * estimate.stderr)
        estimates = [estimate]
    elif mode is StatsMode.FREQ:
        points = _points(_require(config, "points"))
        raw_types = config.get_list("types", str)
        types = [_enum(LozengeType, value, "types") for value in raw_types] if raw_types is not None else None
        report = frequency_vs_determinant(points, types, replicas, config.seed, jobs=config.jobs)
        passed = report.max_z < 4.0
        payload = {"spec": {"mode": mode.value, "seed": config.seed}, **msgspec.to_builtins(report), "pass": passed}
        _write(config, json_dumps(payload))
        return EXIT_OK if passed else EXIT_FAILURE
    else:
        raise UsageError(f"unsupported mode {mode.value}")

    _write(config, _stats_payload(config, mode, estimates, passed))
    return EXIT_OK if passed else EXIT_FAILURE


def cmd_ensemble(config: RunConfig) -> int:
    """Run a raw height ensemble and write its report."""
    n = config.get_int("n")
    if n is None:
        raise UsageError("ensemble needs --n")
    times = config.get_list("times", float)
    raw_queries = config.get_str("queries")
    if not times or raw_queries is None:
        raise UsageError("ensemble needs --times and --queries")
    queries: list[tuple[int, int]] = []
    for part in raw_queries.split(";"):
        if not part.strip():
            continue
        try:
            x, level = (int(v) for v in part.split(","))
        except ValueError as e:
            raise UsageError(f"expected 'x,level' queries, got {part!r}") from e
        queries.append((x, level))
    spec = EnsembleSpec(
        n=n,
        times=tuple(times),
        query_points=tuple(queries),
        replicas=config.get_int("replicas", DEFAULT_REPLICAS),
        seed=config.seed,
    )
    report = run_ensemble(spec, jobs=config.jobs, deadline=config.get_float("deadline"))
    _write(config, report._to_payload.encode("utf-8"))
    return EXIT_OK


def cmd_tiling(config: RunConfig) -> int:
    """Export the lozenge tiling of a saved array."""
    path = _require(config, "state")
    fmt = _enum(TilingFormat, config.get_str("format", TilingFormat.SVG.value), "format")
    try:
        payload = pathlib.Path(path).read_bytes()
    except OSError as e:
        raise UsageError(f"cannot read state file {path!r}: {e}") from e
    state = InterlacingArray.from_json(payload)
    _write(config, tiling_export(state, fmt, margin=config.get_int("margin", TILING_MARGIN)))
    return EXIT_OK


def cmd_suite(config: RunConfig) -> int:
    """Run an acceptance bundle."""
    name = _enum(SuiteName, _require(config, "name"), "name")
    report = run_suite(name, seed=config.seed, jobs=config.jobs)
    _write(config, report._to_payload.encode("utf-8"))
    return EXIT_OK if report.passed else EXIT_FAILURE


def _symbol(family: StepFamily, parameter: float) -> Symbol:
    match family:
        case StepFamily.BERNOULLI_LEFT:
            return Symbol.bernoulli_left(parameter)
        case StepFamily.BERNOULLI_RIGHT:
            return Symbol.bernoulli_right(parameter)
        case StepFamily.GEOMETRIC_LEFT:
            return Symbol.geometric_left(parameter)
        case StepFamily.GEOMETRIC_RIGHT:
            return Symbol.geometric_right(parameter)


def cmd_oracle(config: RunConfig) -> int:
    """Evaluate the commutation and semigroup residuals for one symbol."""
    n = config.get_int("n", 2)
    family = _enum(StepFamily, config.get_str("family", StepFamily.BERNOULLI_RIGHT.value), "family")
    parameter = config.get_float("parameter", 0.3)
    alphas = config.get_list("alphas", float) or [1.0 - 0.2 * m for m in range(n)]
    lo = config.get_int("lo", -4)
    hi = config.get_int("hi", 4)
    symbol = _symbol(family, parameter)
    window = Window(lo=lo, hi=hi, n=n)
    commutation = commutation_check(n, alphas, symbol, window)
    semigroup = semigroup_check(n, alphas, Symbol.bernoulli_left(0.3), symbol, window)
    tolerance = config.get_float("tolerance", 1e-9)
    passed = commutation <= tolerance and semigroup <= tolerance
    payload = {
        "n": n,
        "family": family.value,
        "parameter": parameter,
        "alphas": list(alphas),
        "commutation": commutation,
        "semigroup": semigroup,
        "pass": passed,
    }
    _write(config, json_dumps(payload))
    return EXIT_OK if passed else EXIT_FAILURE


def cmd_info(config: RunConfig) -> int:
    """Print version and environment information."""
    payload = {
        "akpz": about.__version__,
        "python": platform.python_version(),
        "numpy": np.__version__,
        "orjson": HAVE_ORJSON,
        "numba": HAVE_NUMBA,
        "install_path": os.path.abspath(os.path.dirname(__file__)),
    }
    _write(config, json_dumps(payload))
    return EXIT_OK


_COMMANDS: typing.Final[typing.Mapping[str, tuple[typing.Callable[[RunConfig], int], tuple[str, ...]]]] = {
    "simulate": (cmd_simulate, ("n", "t", "chain", "family", "parameter", "alphas", "trace")),
    "kernel": (cmd_kernel, ("p1", "p2", "points", "repr", "types", "det")),
    "limit-shape": (cmd_limit_shape, ("eta", "tau", "nu_min", "nu_max", "steps")),
    "stats": (
        cmd_stats,
        ("mode", "replicas", "scale", "lam", "c", "times", "point", "point2", "points", "types", "tolerance"),
    ),
    "ensemble": (cmd_ensemble, ("n", "times", "queries", "replicas", "deadline")),
    "tiling": (cmd_tiling, ("state", "format", "margin")),
    "suite": (cmd_suite, ("name",)),
    "oracle": (cmd_oracle, ("n", "family", "parameter", "alphas", "lo", "hi", "tolerance")),
    "info": (cmd_info, ()),
}


def build_parser() -> argparse.ArgumentParser:
    """
    Build parser.

    Every option defaults to None so that config file values can fill the
    gaps; the documented defaults are applied by the commands.
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=str, default=None, help="flat key = value config file")
    common.add_argument("--seed", type=int, default=None, help="64-bit base seed (default: $AKPZ_SEED or 0)")
    common.add_argument("--out", "-o", type=str, default=None, help="output path (default: stdout)")
    common.add_argument("--jobs", "-j", type=int, default=None, help="worker count, -1 for every core (default: 1)")
    common.add_argument("--log-level", dest="log_level", type=str, default=None, help="logging level (default: WARNING)")

    parser = argparse.ArgumentParser(prog="akpz", description="Anisotropic KPZ growth in 2+1 dimensions.")
    sub = parser.add_subparsers(dest="command", required=True)

    simulate = sub.add_parser("simulate", parents=[common], help="run a chain from the packed start")
    simulate.add_argument("--n", type=int, default=None, help="level count")
    simulate.add_argument("--t", type=float, default=None, help="time, or whole steps for discrete chains (default: 0)")
    simulate.add_argument("--chain", choices=[c.value for c in ChainType], default=None, help="dynamics (default: ctmc)")
    simulate.add_argument("--family", choices=[f.value for f in StepFamily], default=None, help="seq step family")
    simulate.add_argument("--parameter", type=float, default=None, help="step parameter, or β (default: 0.5)")
    simulate.add_argument("--alphas", type=str, default=None, help="comma separated level rates")
    simulate.add_argument("--trace", type=str, default=None, help="ctmc event log path")

    kernel = sub.add_parser("kernel", parents=[common], help="kernel values and correlation determinants")
    kernel.add_argument("--p1", type=str, default=None, help="first point, 'x,n,t'")
    kernel.add_argument("--p2", type=str, default=None, help="second point, 'x,n,t'")
    kernel.add_argument("--points", type=str, default=None, help="'x,n,t;x,n,t;...'")
    kernel.add_argument("--repr", choices=[r.value for r in KernelRepr], default=None, help="representation")
    kernel.add_argument("--types", type=str, default=None, help="comma separated lozenge types")
    kernel.add_argument("--det", action="store_true", default=None, help="print the correlation determinant")

    shape = sub.add_parser("limit-shape", parents=[common], help="limit shape table as CSV")
    shape.add_argument("--eta", type=float, default=None, help="η (default: 1)")
    shape.add_argument("--tau", type=float, default=None, help="τ (default: 1)")
    shape.add_argument("--nu-min", dest="nu_min", type=float, default=None, help="first ν (default: 0.05)")
    shape.add_argument("--nu-max", dest="nu_max", type=float, default=None, help="last ν (default: 4)")
    shape.add_argument("--steps", type=int, default=None, help="rows (default: 80)")

    stats = sub.add_parser("stats", parents=[common], help="Monte Carlo estimators")
    stats.add_argument("--mode", choices=[m.value for m in StatsMode], default=None, help="estimator")
    stats.add_argument("--replicas", type=int, default=None, help=f"replica count (default: {DEFAULT_REPLICAS})")
    stats.add_argument("--scale", "-L", type=float, default=None, help=f"scale L (default: {DEFAULT_SCALE:g})")
    stats.add_argument("--lam", type=float, default=None, help="ν/τ for variance (default: 1)")
    stats.add_argument("--c", type=float, default=None, help="η/τ for variance (default: 1)")
    stats.add_argument("--times", type=str, default=None, help="comma separated times for variance")
    stats.add_argument("--point", type=str, default=None, help="'nu,eta,tau'")
    stats.add_argument("--point2", type=str, default=None, help="second 'nu,eta,tau' for covariance")
    stats.add_argument("--points", type=str, default=None, help="'x,n,t;...' for freq")
    stats.add_argument("--types", type=str, default=None, help="comma separated lozenge types for freq")
    stats.add_argument("--tolerance", type=float, default=None, help="shape error bound (default: 0.02)")

    ensemble = sub.add_parser("ensemble", parents=[common], help="raw height ensemble report")
    ensemble.add_argument("--n", type=int, default=None, help="level count")
    ensemble.add_argument("--times", type=str, default=None, help="comma separated times")
    ensemble.add_argument("--queries", type=str, default=None, help="'x,level;...'")
    ensemble.add_argument("--replicas", type=int, default=None, help=f"replica count (default: {DEFAULT_REPLICAS})")
    ensemble.add_argument("--deadline", type=float, default=None, help="wall clock budget in seconds")

    tiling = sub.add_parser("tiling", parents=[common], help="lozenge tiling of a saved array")
    tiling.add_argument("--state", type=str, default=None, help="array JSON written by simulate")
    tiling.add_argument("--format", choices=[f.value for f in TilingFormat], default=None, help="svg or json")
    tiling.add_argument("--margin", type=int, default=None, help=f"sites beyond the particles (default: {TILING_MARGIN})")

    suite = sub.add_parser("suite", parents=[common], help="run an acceptance bundle")
    suite.add_argument("name", choices=[s.value for s in SuiteName], help="bundle")

    oracle = sub.add_parser("oracle", parents=[common], help="transfer identity residuals for one symbol")
    oracle.add_argument("--n", type=int, default=None, help="top level (default: 2)")
    oracle.add_argument("--family", choices=[f.value for f in StepFamily], default=None, help="step family")
    oracle.add_argument("--parameter", type=float, default=None, help="symbol parameter (default: 0.3)")
    oracle.add_argument("--alphas", type=str, default=None, help="comma separated distinct level weights")
    oracle.add_argument("--lo", type=int, default=None, help="window start (default: -4)")
    oracle.add_argument("--hi", type=int, default=None, help="window end (default: 4)")
    oracle.add_argument("--tolerance", type=float, default=None, help="residual bound (default: 1e-9)")

    sub.add_parser("info", parents=[common], help="version and environment")
    return parser


def _fail(error: AKPZException) -> int:
    reason = getattr(error, "reason", None)
    if reason is None:
        reason = str(error)
    sys.stderr.buffer.write(json_dumps({"error": type(error).__name__, "reason": reason}))
    sys.stderr.buffer.write(b"\n")
    sys.stderr.flush()
    return EXIT_FAILURE


def main(argv: typing.Sequence[str] | None = None) -> int:
    """
    Main.

    Parse `argv` and run the command.

    Returns
    -------
    int
        The exit code.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    command, known = _COMMANDS[args.command]
    flags = {key: value for key, value in vars(args).items() if key not in ("command", "config")}

    try:
        file_values = load_config_file(args.config) if args.config is not None else None
        config = resolve_config(args.command, flags, known, file_values=file_values)
    except AKPZException as e:
        return _fail(e)

    level = logging.getLevelName(config.log_level)
    if not isinstance(level, int):
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"akpz: error: unknown log level {config.log_level!r}\n")
        return EXIT_USAGE
    logging.basicConfig(level=level, format="%(asctime)s %(levelname)s %(name)s: %(message)s")

    try:
        return command(config)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"akpz {args.command}: error: {e}\n")
        return EXIT_USAGE
    except AKPZException as e:
        return _fail(e)


if __name__ == "__main__":
    sys.exit(main())


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
