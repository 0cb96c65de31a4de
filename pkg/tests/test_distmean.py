import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate

from conftest import LSHAPE, SQUARE, TRIANGLE
from taxitomo.distmean import (
    PiecewiseLinearProfile,
    coordinate_xray,
    cumulative_area,
    distmean_eval,
    distmean_gradient,
    read_profile_csv,
    write_profile_csv,
)
from taxitomo.geometry import Polygon, polygon_area


def xrays(p):
    return coordinate_xray(p, 1), coordinate_xray(p, 2)


def closed_form_square(x):
    return (x[0] - 0.5) ** 2 + (x[1] - 0.5) ** 2 + 0.5


def rect_distmean_quad(x, x0, x1, y0, y1):
    val, _ = integrate.dblquad(lambda y, xx: abs(x[0] - xx) + abs(x[1] - y), x0, x1, y0, y1,
                               epsabs=1e-11, epsrel=1e-11)
    return val


def triangle_distmean_quad(x):
    val, _ = integrate.dblquad(lambda y, xx: abs(x[0] - xx) + abs(x[1] - y), 0, 1, 0, lambda xx: 1 - xx,
                               epsabs=1e-11, epsrel=1e-11)
    return val


def test_square_profile():
    prof = coordinate_xray(SQUARE, 1)
    assert list(prof.breakpoints) == [0, 1]
    assert prof(0.3) == 1 and prof(-0.1) == 0 and prof(1.2) == 0


def test_triangle_profile():
    prof = coordinate_xray(TRIANGLE, 1)
    ts = np.linspace(0, 1, 11)
    assert np.allclose(prof(ts), 1 - ts, atol=1e-15)


def test_lshape_profile():
    prof = coordinate_xray(LSHAPE, 1)
    assert list(prof.breakpoints) == [0, 1, 2]
    assert prof(0.5) == 2 and prof(1.5) == 1
    assert coordinate_xray(LSHAPE, 2)(0.5) == 2


@pytest.mark.parametrize("p", [SQUARE, TRIANGLE, LSHAPE, Polygon([(1, 0), (2, 1), (1.5, 2), (0.5, 2), (0, 1)])])
def test_profile_integral_is_area(p):
    for axis in (1, 2):
        assert coordinate_xray(p, axis).integral() == pytest.approx(polygon_area(p), rel=1e-9)


@pytest.mark.parametrize("x, expected", [((0.5, 0.5), 0.5), ((0.25, 0.75), 0.625), ((0, 0), 1.0)])
def test_square_values(x, expected):
    assert distmean_eval(*xrays(SQUARE), x) == pytest.approx(expected, abs=1e-14)


@pytest.mark.parametrize("x", [(0.3, 1.7), (1.5, 0.2), (-0.5, 2.5), (1.0, 1.0)])
def test_lshape_against_quadrature(x):
    expected = rect_distmean_quad(x, 0, 2, 0, 1) + rect_distmean_quad(x, 0, 1, 1, 2)
    assert distmean_eval(*xrays(LSHAPE), x) == pytest.approx(expected, abs=1e-8)


@pytest.mark.parametrize("x", [(0.2, 0.2), (0.7, 0.1), (1.5, -1.0)])
def test_triangle_against_quadrature(x):
    assert distmean_eval(*xrays(TRIANGLE), x) == pytest.approx(triangle_distmean_quad(x), abs=1e-8)


def test_cumulative_area():
    sq = coordinate_xray(SQUARE, 1)
    assert cumulative_area(sq, 0.5) == 0.5
    assert cumulative_area(sq, -1) == 0
    assert cumulative_area(sq, 5) == 1
    assert cumulative_area(coordinate_xray(LSHAPE, 1), 1.5) == pytest.approx(2.5)


@pytest.mark.parametrize("x, g", [((0.5, 0.5), (0, 0)), ((0.75, 0.5), (0.5, 0)), ((-1, 0.5), (-1, 0))])
def test_square_gradient(x, g):
    assert np.allclose(distmean_gradient(*xrays(SQUARE), x), g, atol=1e-15)


@settings(max_examples=100, deadline=None)
@given(st.floats(-1, 3), st.floats(-1, 3), st.floats(-1, 3), st.floats(-1, 3), st.floats(0, 1))
def test_convexity(a, b, c, d, lam):
    prof = xrays(LSHAPE)
    x = np.array([a, b])
    y = np.array([c, d])
    f = lambda z: distmean_eval(*prof, z)
    assert f(lam * x + (1 - lam) * y) <= lam * f(x) + (1 - lam) * f(y) + 1e-9


@settings(max_examples=50, deadline=None)
@given(st.floats(-2, 3), st.floats(-2, 3))
def test_monotone_in_domain(a, b):
    small = xrays(SQUARE)
    big = xrays(Polygon([(-0.5, -0.5), (1.5, -0.5), (1.5, 1.5), (-0.5, 1.5)]))
    assert distmean_eval(*small, (a, b)) <= distmean_eval(*big, (a, b)) + 1e-12


def test_profile_csv_roundtrip(tmp_path):
    prof = coordinate_xray(LSHAPE, 1)
    f = tmp_path / "x.csv"
    write_profile_csv(prof, f)
    lines = f.read_text().splitlines()
    assert lines[0] == "t,value"
    assert len(lines) == 5  # jump at t=1 is written as two rows
    back = read_profile_csv(f)
    assert np.array_equal(back.breakpoints, prof.breakpoints)
    assert np.array_equal(back.left, prof.left) and np.array_equal(back.right, prof.right)


def test_profile_rejects_negative():
    with pytest.raises(ValueError):
        PiecewiseLinearProfile([0, 1], [-1], [0])
