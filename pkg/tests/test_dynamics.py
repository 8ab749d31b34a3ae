# ruff: noqa: D100, D101, D102

import io
import json
import math
import unittest

import numpy as np

from akpz import dynamics
from akpz import interlacing
from akpz import transfer
from akpz.abc.laws import RngStream
from akpz.abc.laws import StepLaw
from akpz.enums import RowSide
from akpz.enums import StepFamily
from akpz.errors import InvalidArgumentException
from akpz.interlacing import InterlacingArray
from tests import payload


def _frequencies(samples: list[tuple[int, ...]]) -> dict[tuple[int, ...], float]:
    out: dict[tuple[int, ...], float] = {}
    for key in samples:
        out[key] = out.get(key, 0.0) + 1.0 / len(samples)
    return out


def _assert_matches(empirical: dict[tuple[int, ...], float], exact: dict[tuple[int, ...], float], draws: int) -> None:
    assert set(empirical) <= set(exact)
    for key, p in exact.items():
        bound = 5.0 * math.sqrt(p * (1.0 - p) / draws) + 1e-12
        assert abs(empirical.get(key, 0.0) - p) <= bound, (key, empirical.get(key, 0.0), p)


def _sequential_from_transfer(a: InterlacingArray, b: InterlacingArray, law: StepLaw) -> float:
    # P((x, x*) -> (y, y*)) = P(x, y) P*(x*, y*) Λ(y*, y) / Δ(x*, y)
    symbol = transfer.Symbol.from_law(law)
    lower = transfer.t_entry(law.alphas[:1], symbol, tuple(a.level(1).tolist()), tuple(b.level(1).tolist()))
    if lower == 0.0:
        return 0.0
    top = transfer.conditional_ratio(
        tuple(a.level(2).tolist()), tuple(b.level(1).tolist()), tuple(b.level(2).tolist()), law
    )
    return lower * top


def _two_sample_z(first: list[tuple[int, ...]], second: list[tuple[int, ...]]) -> float:
    worst = 0.0
    left, right = _frequencies(first), _frequencies(second)
    for key in set(left) | set(right):
        p, q = left.get(key, 0.0), right.get(key, 0.0)
        pooled = (p * len(first) + q * len(second)) / (len(first) + len(second))
        stderr = math.sqrt(pooled * (1.0 - pooled) * (1.0 / len(first) + 1.0 / len(second)))
        if stderr > 0.0:
            worst = max(worst, abs(p - q) / stderr)
    return worst


class TestCtmc(unittest.TestCase):
    def test_zero_duration(self):
        a = InterlacingArray.from_levels(payload.MOVED_3["levels"])
        b = dynamics.ctmc_run(a, 0.0, RngStream(seed=1))

        assert b == a
        assert b is not a

    def test_stays_valid(self):
        a = interlacing.packed_initial(6)

        for replica in range(20):
            b = dynamics.ctmc_run(a, 3.0, RngStream(seed=11, replica=replica))
            assert interlacing.validate(b).ok

    def test_does_not_modify_input(self):
        a = interlacing.packed_initial(4)
        dynamics.ctmc_run(a, 5.0, RngStream(seed=2))

        assert a == interlacing.packed_initial(4)

    def test_reproducible(self):
        a = interlacing.packed_initial(5)

        first = dynamics.ctmc_run(a, 4.0, RngStream(seed=9, replica=4))
        second = dynamics.ctmc_run(a, 4.0, RngStream(seed=9, replica=4))

        assert first == second

    def test_particles_only_move_right(self):
        a = interlacing.packed_initial(5)
        b = dynamics.ctmc_run(a, 4.0, RngStream(seed=3))

        assert np.all(b.positions >= a.positions)

    def test_trace(self):
        sink = io.BytesIO()
        a = interlacing.packed_initial(3)
        traced = dynamics.ctmc_run(a, 2.0, RngStream(seed=5), trace=sink)

        events = [json.loads(line) for line in sink.getvalue().splitlines()]
        assert events
        times = [event["t"] for event in events]
        assert times == sorted(times)
        for event in events:
            assert 0.0 <= event["t"] <= 2.0
            assert 1 <= event["k"] <= event["m"] <= 3
            assert event["c"] >= 0

        # the trace does not alter the trajectory
        assert traced == dynamics.ctmc_run(a, 2.0, RngStream(seed=5))

    def test_first_particle_is_poisson(self):
        a = interlacing.packed_initial(3)
        replicas = 2000
        values = [
            dynamics.ctmc_run(a, 2.0, RngStream(seed=21, replica=r)).position(1, 1) for r in range(replicas)
        ]

        # x_1^1 is never blocked, so x_1^1 + 1 is Poisson(t)
        assert abs(np.mean(values) - 1.0) < 5.0 * math.sqrt(2.0 / replicas)

    def test_lower_levels_do_not_see_upper_ones(self):
        replicas, t = 3000, 1.5
        small = interlacing.packed_initial(2)
        large = interlacing.packed_initial(5)

        first = [
            tuple(dynamics.ctmc_run(small, t, RngStream(seed=31, replica=r)).positions.tolist())
            for r in range(replicas)
        ]
        second = [
            tuple(dynamics.ctmc_run(large, t, RngStream(seed=32, replica=r)).restrict(2).positions.tolist())
            for r in range(replicas)
        ]

        assert _two_sample_z(first, second) < 5.0

    def test_rejects_negative_duration(self):
        with self.assertRaises(InvalidArgumentException):
            dynamics.ctmc_run(interlacing.packed_initial(2), -1.0, RngStream(seed=0))

    def test_rejects_invalid_array(self):
        with self.assertRaises(InvalidArgumentException):
            dynamics.ctmc_run(InterlacingArray.from_levels(payload.BROKEN_2["levels"]), 1.0, RngStream(seed=0))

    def test_rejects_bad_rates(self):
        with self.assertRaises(InvalidArgumentException):
            dynamics.ctmc_run(interlacing.packed_initial(2), 1.0, RngStream(seed=0), alphas=(1.0,))


class TestSequential(unittest.TestCase):
    def test_distribution_sums_to_one(self):
        for family in (StepFamily.BERNOULLI_LEFT, StepFamily.BERNOULLI_RIGHT):
            law = StepLaw.uniform(family, 0.7, 3)
            total = sum(dynamics.seq_distribution(interlacing.packed_initial(3), law).values())

            assert math.isclose(total, 1.0, rel_tol=1e-12)

    def test_transition_probability_matches_distribution(self):
        a = InterlacingArray.from_levels(payload.MOVED_3["levels"])
        law = StepLaw(family=StepFamily.BERNOULLI_RIGHT, parameter=0.4, alphas=(1.0, 0.8, 0.6))

        for key, p in dynamics.seq_distribution(a, law).items():
            b = InterlacingArray(3, key)
            assert math.isclose(dynamics.seq_transition_probability(a, b, law), p, rel_tol=1e-12)

    def test_sampler_matches_distribution(self):
        a = interlacing.packed_initial(2)
        law = StepLaw.uniform(StepFamily.BERNOULLI_RIGHT, 0.5, 2)
        generator = np.random.default_rng(4)
        draws = 4000

        samples = [tuple(dynamics.seq_update(a, law, generator).positions.tolist()) for _ in range(draws)]

        _assert_matches(_frequencies(samples), dynamics.seq_distribution(a, law), draws)

    def test_geometric_stays_valid(self):
        a = interlacing.packed_initial(4)
        generator = np.random.default_rng(8)

        for family in (StepFamily.GEOMETRIC_LEFT, StepFamily.GEOMETRIC_RIGHT):
            state = a
            law = StepLaw.uniform(family, 0.4, 4)
            for _ in range(10):
                state = dynamics.seq_update(state, law, generator)
                assert interlacing.validate(state).ok

    def test_rejects_short_law(self):
        with self.assertRaises(InvalidArgumentException):
            dynamics.seq_update(
                interlacing.packed_initial(3), StepLaw.uniform(StepFamily.BERNOULLI_LEFT, 0.5, 2), RngStream(seed=0)
            )

    def test_distribution_rejects_geometric(self):
        with self.assertRaises(InvalidArgumentException):
            dynamics.seq_distribution(
                interlacing.packed_initial(2), StepLaw.uniform(StepFamily.GEOMETRIC_LEFT, 0.5, 2)
            )


class TestSequentialAgainstTransfer(unittest.TestCase):
    def test_one_step_law(self):
        starts = (interlacing.packed_initial(2), InterlacingArray.from_levels([[0], [-1, 2]]))
        laws = (
            StepLaw(family=StepFamily.BERNOULLI_RIGHT, parameter=0.4, alphas=(1.0, 0.8)),
            StepLaw(family=StepFamily.BERNOULLI_LEFT, parameter=0.3, alphas=(1.0, 0.8)),
            StepLaw.uniform(StepFamily.BERNOULLI_RIGHT, 0.5, 2),
        )

        for a in starts:
            for law in laws:
                exact = dynamics.seq_distribution(a, law)
                total = 0.0
                for key, p in exact.items():
                    q = _sequential_from_transfer(a, InterlacingArray(2, key), law)
                    assert math.isclose(p, q, rel_tol=1e-9, abs_tol=1e-12), (key, p, q)
                    total += q
                assert math.isclose(total, 1.0, rel_tol=1e-9)

    def test_sampler_matches_transfer(self):
        a = InterlacingArray.from_levels([[0], [-1, 2]])
        law = StepLaw(family=StepFamily.BERNOULLI_RIGHT, parameter=0.4, alphas=(1.0, 0.8))
        generator = np.random.default_rng(14)
        draws = 4000

        samples = [tuple(dynamics.seq_update(a, law, generator).positions.tolist()) for _ in range(draws)]
        exact = {
            key: _sequential_from_transfer(a, InterlacingArray(2, key), law)
            for key in dynamics.seq_distribution(a, law)
        }

        _assert_matches(_frequencies(samples), exact, draws)

    def test_top_level_follows_transition_matrix(self):
        a = interlacing.packed_initial(2)
        law = StepLaw.uniform(StepFamily.BERNOULLI_RIGHT, 0.5, 2)
        matrix = transfer.build_T(2, law.alphas, transfer.Symbol.from_law(law), transfer.Window(lo=-3, hi=2, n=2))

        top: dict[tuple[int, ...], float] = {}
        for key, p in dynamics.seq_distribution(a, law).items():
            top[key[1:]] = top.get(key[1:], 0.0) + p

        for state in matrix.cols:
            assert math.isclose(top.get(state, 0.0), matrix[((-2, -1), state)], rel_tol=1e-9, abs_tol=1e-12)


class TestParallel(unittest.TestCase):
    def test_distribution_sums_to_one(self):
        a = interlacing.packed_initial(3)
        total = sum(dynamics.parallel_distribution(a, (0.5, 1.0, 2.0, 1.5), None, 1).values())

        assert math.isclose(total, 1.0, rel_tol=1e-12)

    def test_transition_probability_matches_distribution(self):
        a = interlacing.packed_initial(3)
        schedule = (0.5, 1.0, 2.0, 1.5)
        alphas = (1.0, 0.5, 2.0)

        for key, p in dynamics.parallel_distribution(a, schedule, alphas, 0).items():
            b = InterlacingArray(3, key)
            assert math.isclose(dynamics.parallel_transition_probability(a, b, schedule, alphas, 0), p, rel_tol=1e-12)

    def test_stays_relaxed_valid(self):
        state = interlacing.packed_initial(5)
        generator = np.random.default_rng(12)
        schedule = (1.0,) * 30

        for step in range(20):
            state = dynamics.parallel_update(state, schedule, None, step, generator)
            assert interlacing.validate(state, relaxed=True).ok

    def test_zero_weight_freezes_level(self):
        a = interlacing.packed_initial(2)
        # level 2 reads schedule[0], level 1 reads schedule[1]
        b = dynamics.parallel_update(a, (0.0, 1.0), None, 0, RngStream(seed=3))

        assert b.level(2).tolist() == [-2, -1]

    def test_rejects_short_schedule(self):
        with self.assertRaises(InvalidArgumentException):
            dynamics.parallel_update(interlacing.packed_initial(3), (1.0, 1.0, 1.0), None, 1, RngStream(seed=0))


class TestAztec(unittest.TestCase):
    def test_schedule(self):
        assert dynamics.aztec_schedule(3, 2.0) == (0.0, 0.0, 2.0, 2.0, 2.0)

    def test_distribution(self):
        law = dynamics.aztec_distribution(2, 1.0)

        assert math.isclose(sum(law.values()), 1.0, rel_tol=1e-12)
        for key in law:
            assert interlacing.validate(InterlacingArray(2, key), relaxed=True).ok

    def test_sampler_matches_distribution(self):
        generator = np.random.default_rng(6)
        draws = 4000

        samples = [tuple(dynamics.aztec_shuffle(2, 1.5, generator).positions.tolist()) for _ in range(draws)]

        _assert_matches(_frequencies(samples), dynamics.aztec_distribution(2, 1.5), draws)

    def test_levels_follow_transition_matrices(self):
        beta = 1.5
        symbol = transfer.Symbol.bernoulli_right(beta)
        matrix = transfer.build_T(2, (1.0, 1.0), symbol, transfer.Window(lo=-3, hi=2, n=2))
        law = dynamics.aztec_distribution(2, beta)

        top: dict[tuple[int, ...], float] = {}
        bottom: dict[int, float] = {}
        for key, p in law.items():
            top[key[1:]] = top.get(key[1:], 0.0) + p
            bottom[key[0]] = bottom.get(key[0], 0.0) + p

        # the top level moves once, the bottom one twice
        for state in matrix.cols:
            assert math.isclose(top.get(state, 0.0), matrix[((-2, -1), state)], rel_tol=1e-9, abs_tol=1e-12)
        for y in range(-1, 2):
            two_steps = sum(
                transfer.t_entry((1.0,), symbol, (-1,), (z,)) * transfer.t_entry((1.0,), symbol, (z,), (y,))
                for z in range(-1, 2)
            )
            assert math.isclose(bottom.get(y, 0.0), two_steps, rel_tol=1e-9)

    def test_sampler_top_level_matches_transition_matrix(self):
        beta = 1.5
        matrix = transfer.build_T(2, (1.0, 1.0), transfer.Symbol.bernoulli_right(beta), transfer.Window(lo=-3, hi=2, n=2))
        generator = np.random.default_rng(16)
        draws = 4000

        samples = [tuple(dynamics.aztec_shuffle(2, beta, generator).level(2).tolist()) for _ in range(draws)]
        exact = {state: matrix[((-2, -1), state)] for state in matrix.cols if matrix[((-2, -1), state)] > 0.0}

        _assert_matches(_frequencies(samples), exact, draws)

    def test_rejects_weight(self):
        with self.assertRaises(InvalidArgumentException):
            dynamics.aztec_shuffle(3, 0.0, RngStream(seed=0))


class TestProjections(unittest.TestCase):
    def test_project_row(self):
        a = InterlacingArray.from_levels(payload.MOVED_3["levels"])

        assert dynamics.project_row(a, RowSide.LEFTMOST) == [0, -2, -3]
        assert dynamics.project_row(a, "rightmost") == [0, 1, 2]

    def test_tasep_start(self):
        assert dynamics.tasep_reference(4, 0.0, RngStream(seed=0)) == [-1, -2, -3, -4]

    def test_tasep_exclusion(self):
        for replica in range(20):
            row = dynamics.tasep_reference(6, 5.0, RngStream(seed=1, replica=replica))
            assert all(left > right for left, right in zip(row, row[1:]))

    def test_leftmost_row_matches_tasep_in_mean(self):
        replicas = 1500
        a = interlacing.packed_initial(3)
        array_rows = np.array(
            [dynamics.project_row(dynamics.ctmc_run(a, 2.0, RngStream(seed=31, replica=r)), RowSide.LEFTMOST) for r in range(replicas)]
        )
        tasep_rows = np.array([dynamics.tasep_reference(3, 2.0, RngStream(seed=32, replica=r)) for r in range(replicas)])

        for column in range(3):
            spread = math.sqrt((array_rows[:, column].var() + tasep_rows[:, column].var()) / replicas)
            assert abs(array_rows[:, column].mean() - tasep_rows[:, column].mean()) <= 5.0 * spread + 1e-9
