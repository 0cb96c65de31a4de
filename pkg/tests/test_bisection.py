import numpy as np
import pytest

from conftest import LSHAPE, PENTAGON, SQUARE, TRIANGLE
from taxitomo.bisection import StepSchedule, bisect_exact, bisect_stochastic, sign_step
from taxitomo.distmean import coordinate_xray, distmean_gradient
from taxitomo.geometry import InvalidInput, SeededRng, halfplane_area, polygon_area, sample_uniform


def test_schedule():
    s = StepSchedule()
    assert s(1) == 1.0 and s(4) == 0.25
    assert s.check_prefix(1000)
    assert not StepSchedule(lambda k: k).check_prefix(5)


def test_sign_step():
    assert list(sign_step((1, 1), (0, 1))) == [1, 0]
    assert list(sign_step((0, 0), (1, -1))) == [-1, 1]


@pytest.mark.parametrize("p, expected", [
    (SQUARE, (0.5, 0.5)),
    (TRIANGLE, (1 - 2 ** -0.5, 1 - 2 ** -0.5)),
    (LSHAPE, (0.75, 0.75)),
])
def test_exact(p, expected):
    assert np.allclose(bisect_exact(p), expected, atol=1e-9)


@pytest.mark.parametrize("p", [SQUARE, TRIANGLE, LSHAPE, PENTAGON])
def test_exact_halves_area_and_zeroes_gradient(p):
    pt = bisect_exact(p)
    area = polygon_area(p)
    for axis in (0, 1):
        assert abs(halfplane_area(p, axis, pt[axis]) - area / 2) <= 1e-9 * area
    grad = distmean_gradient(coordinate_xray(p, 1), coordinate_xray(p, 2), pt)
    assert np.all(np.abs(grad) <= 1e-8 * area)


def test_exact_rejects_bad_tol():
    with pytest.raises(InvalidInput):
        bisect_exact(SQUARE, tol=0)


def test_stochastic_replays_recursion():
    run = bisect_stochastic(TRIANGLE, 50, SeededRng(9))
    samples = sample_uniform(TRIANGLE, 51, SeededRng(9))
    x = samples[0].copy()
    assert np.array_equal(run.trajectory[0], x)
    for k in range(1, 51):
        x = x - (1.0 / k) * np.sign(x - samples[k])
        assert np.allclose(run.trajectory[k], x, rtol=0, atol=1e-15)


def test_stochastic_deterministic():
    a = bisect_stochastic(LSHAPE, 1000, SeededRng(3))
    b = bisect_stochastic(LSHAPE, 1000, SeededRng(3))
    assert np.array_equal(a.trajectory, b.trajectory)
    assert a.trajectory.shape == (1001, 2)


def test_stochastic_custom_start():
    run = bisect_stochastic(SQUARE, 10, SeededRng(1), start=(5.0, -5.0))
    assert tuple(run.trajectory[0]) == (5.0, -5.0)
    # the sample stream does not depend on the start
    other = bisect_stochastic(SQUARE, 10, SeededRng(1))
    assert np.array_equal(np.sign(run.trajectory[1] - run.trajectory[0]), [-1, 1])
    assert other.trajectory.shape == run.trajectory.shape


def test_stochastic_single_run_near_centre():
    run = bisect_stochastic(SQUARE, 100_000, SeededRng(1))
    assert np.linalg.norm(run.final_point - (0.5, 0.5)) < 0.1


def test_stochastic_rejects_zero_iterations():
    with pytest.raises(InvalidInput):
        bisect_stochastic(SQUARE, 0, SeededRng(1))
