import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate

from taxitomo.distmean import coordinate_xray, distmean_eval
from taxitomo.geometry import InvalidInput, Polygon
from taxitomo.gridrecon import (
    ControlGrid,
    GridSet,
    StepXRay,
    bounding_box,
    constraint_holds,
    exhaustive_optimum,
    gridset_distmean,
    greedy_reconstruct,
    is_connected,
    is_hv_convex,
    read_step_xray,
    target_values,
    write_step_xray,
)

UNIT = (StepXRay([0, 1], [1]), StepXRay([0, 1], [1]))


def rect_quad(x, x0, x1, y0, y1):
    val, _ = integrate.dblquad(lambda y, xx: abs(x[0] - xx) + abs(x[1] - y), x0, x1, y0, y1,
                               epsabs=1e-11, epsrel=1e-11)
    return val


def test_step_xray_validation():
    with pytest.raises(InvalidInput):
        StepXRay([0, 1, 1], [1, 1])
    with pytest.raises(InvalidInput):
        StepXRay([0, 1], [-1])
    with pytest.raises(InvalidInput):
        StepXRay([0, 1], [0]).support()


def test_bounding_box():
    assert bounding_box(StepXRay([0, 1], [2]), StepXRay([0, 2], [1])) == (0, 1, 0, 2)
    assert bounding_box(*UNIT) == (0, 1, 0, 1)
    lx = StepXRay([0, 1, 2], [2, 1])
    assert bounding_box(lx, lx) == (0, 2, 0, 2)
    # zero values at the ends do not widen the box
    assert bounding_box(StepXRay([-1, 0, 1, 3], [0, 1, 0]), StepXRay([0, 1], [1])) == (0, 1, 0, 1)


def test_control_grid_layout():
    g = ControlGrid((0, 2, 0, 4), 2)
    assert g.cell(0, 0) == (0, 1, 2, 4)
    assert g.cell(1, 1) == (1, 2, 0, 2)
    assert np.allclose(g.centers()[0, 1], (1.5, 3.0))


def test_target_values_unit_square():
    assert target_values(*UNIT, ControlGrid((0, 1, 0, 1), 1))[0, 0] == pytest.approx(0.5, abs=1e-14)
    t = target_values(*UNIT, ControlGrid((0, 1, 0, 1), 2))
    assert t[0, 0] == pytest.approx(0.625, abs=1e-14)  # centre (0.25, 0.75)
    assert np.allclose(t, 0.625)


def test_target_values_match_polygon_distmean():
    L = Polygon([(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)])
    x1 = StepXRay([0, 1, 2], [2, 1])
    grid = ControlGrid(bounding_box(x1, x1), 3)
    t = target_values(x1, x1, grid)
    prof = coordinate_xray(L, 1), coordinate_xray(L, 2)
    for (r, c) in [(0, 0), (1, 2), (2, 1)]:
        assert t[r, c] == pytest.approx(distmean_eval(*prof, grid.centers()[r, c]), abs=1e-12)


def test_gridset_distmean():
    assert gridset_distmean(GridSet.full(1), ControlGrid((0, 1, 0, 1), 1), (0.5, 0.5)) == pytest.approx(0.5)
    assert gridset_distmean(GridSet(np.zeros((2, 2), bool)), ControlGrid((0, 1, 0, 1), 2), (0.5, 0.5)) == 0
    # two stacked unit cells fill the box [0,1]x[0,2]
    stacked = gridset_distmean(GridSet.full(2), ControlGrid((0, 1, 0, 2), 2), (0.5, 1.0))
    assert stacked == pytest.approx(rect_quad((0.5, 1.0), 0, 1, 0, 2), abs=1e-9)
    assert stacked == pytest.approx(1.5, abs=1e-12)


def test_gridset_distmean_two_cells_of_four():
    g = ControlGrid((0, 1, 0, 2), 2)
    L = GridSet.from_rows(["10", "10"])
    x = (0.7, 1.3)
    assert gridset_distmean(L, g, x) == pytest.approx(rect_quad(x, 0, 0.5, 0, 2), abs=1e-9)


def test_convexity_and_connectivity():
    full = GridSet.full(3)
    assert is_hv_convex(full) and is_connected(full)
    diag = GridSet.from_rows(["10", "01"])
    assert is_hv_convex(diag) and not is_connected(diag)
    assert not is_hv_convex(GridSet.from_rows(["101", "000", "000"]))


def test_gridset_xrays():
    g = ControlGrid((0, 2, 0, 2), 2)
    x1, x2 = GridSet.from_rows(["10", "11"]).xrays(g)
    assert list(x1.values) == [2, 1] and list(x2.values) == [2, 1]


@pytest.mark.parametrize("n", [1, 2, 3, 5])
@pytest.mark.parametrize("mode", ["greedy", "antigreedy"])
def test_full_box_is_kept(n, mode):
    res = greedy_reconstruct(StepXRay([0, 3], [2]), StepXRay([0, 2], [3]), n, mode)
    assert res.gridset.occupancy.all()
    assert res.deleted == []


def test_left_half_square_fills_its_own_box():
    # the box is the product of the supports, so K fills it
    res = greedy_reconstruct(StepXRay([0, 0.5, 1], [1, 0]), StepXRay([0, 1], [0.5]), 2)
    assert res.grid.box == (0, 0.5, 0, 1)
    assert res.gridset.occupancy.all()


def staircase(n, k):
    """Full n x n grid minus the top-right k x k block."""
    occ = np.ones((n, n), bool)
    occ[:k, n - k:] = False
    return GridSet(occ)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_greedy_result_is_feasible(n):
    K = staircase(n, 1)
    grid = ControlGrid((0, 1, 0, 1), n)
    x1, x2 = K.xrays(grid)
    for mode in ("greedy", "antigreedy"):
        res = greedy_reconstruct(x1, x2, n, mode)
        L = res.gridset
        assert is_hv_convex(L) and is_connected(L)
        assert constraint_holds(L, res.grid, res.targets)
        # every deletion lowers f_L, so the objective decreases in both modes
        assert np.all(np.diff(res.objective_history) < 0)


@pytest.mark.parametrize("n", [2, 3])
def test_exhaustive_recovers_staircase(n):
    K = staircase(n, 1)
    grid = ControlGrid((0, 1, 0, 1), n)
    best, obj = exhaustive_optimum(*K.xrays(grid), n)
    assert np.array_equal(best.occupancy, K.occupancy)
    assert obj == pytest.approx(0, abs=1e-12)


def test_greedy_objective_never_below_exhaustive():
    K = staircase(3, 1)
    grid = ControlGrid((0, 1, 0, 1), 3)
    x1, x2 = K.xrays(grid)
    _, best = exhaustive_optimum(x1, x2, 3)
    assert greedy_reconstruct(x1, x2, 3).objective >= best - 1e-12


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 5), st.floats(0.2, 3), st.floats(0.2, 3))
def test_rectangles_recovered(n, w, h):
    x1 = StepXRay([0, w], [h])
    x2 = StepXRay([0, h], [w])
    res = greedy_reconstruct(x1, x2, n)
    assert res.gridset.occupancy.all()


def test_invalid_mode_and_empty():
    with pytest.raises(InvalidInput):
        greedy_reconstruct(*UNIT, 2, "sideways")
    with pytest.raises(InvalidInput):
        greedy_reconstruct(StepXRay([0, 1], [0]), UNIT[1], 2)


def test_step_xray_io(tmp_path):
    f = tmp_path / "x.csv"
    xr = StepXRay([0, 1, 2.5], [2, 0.5])
    write_step_xray(xr, f)
    back = read_step_xray(f)
    assert np.array_equal(back.breakpoints, xr.breakpoints) and np.array_equal(back.values, xr.values)
    f.write_text("0,1,1\n2,3,1\n")
    with pytest.raises(InvalidInput):
        read_step_xray(f)
    f.write_text("")
    with pytest.raises(InvalidInput):
        read_step_xray(f)
