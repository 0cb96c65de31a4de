"""Grid-resolution reconstruction of hv-convex planar sets from two coordinate X-rays.

The candidate sets are unions of cells of an n x n subdivision of the bounding
box. Starting from the full box, cells are deleted one at a time while the set
stays hv-convex, 4-connected and satisfies f_L >= f_K at every cell centre.

Cell layout follows image order: ``occupancy[row, col]`` is the cell
``[a + col*w, a + (col+1)*w] x [d - (row+1)*h, d - row*h]``, so row 0 is the top
strip of the box.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from scipy import ndimage

from taxitomo.distmean import PiecewiseLinearProfile, abs_moment
from taxitomo.geometry import InvalidInput

SLACK = 1e-9


@dataclass(frozen=True)
class StepXRay:
    """Piecewise constant X-ray: ``values[k]`` on ``[breakpoints[k], breakpoints[k+1]]``."""

    breakpoints: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        bp = np.asarray(self.breakpoints, dtype=float)
        v = np.asarray(self.values, dtype=float)
        if bp.ndim != 1 or len(bp) < 2 or v.shape != (len(bp) - 1,):
            raise InvalidInput("step X-ray needs k+1 breakpoints and k values")
        if np.any(np.diff(bp) <= 0):
            raise InvalidInput("step X-ray breakpoints must be strictly increasing")
        if np.any(v < 0):
            raise InvalidInput("step X-ray values must be nonnegative")
        object.__setattr__(self, "breakpoints", bp)
        object.__setattr__(self, "values", v)

    def integral(self) -> float:
        return float(np.sum(np.diff(self.breakpoints) * self.values))

    def support(self) -> tuple[float, float]:
        nz = np.flatnonzero(self.values > 0)
        if len(nz) == 0:
            raise InvalidInput("X-ray has empty support")
        return float(self.breakpoints[nz[0]]), float(self.breakpoints[nz[-1] + 1])

    def as_profile(self) -> PiecewiseLinearProfile:
        return PiecewiseLinearProfile.from_steps(self.breakpoints, self.values)

    def mean_on(self, lo: float, hi: float) -> float:
        """Average value over ``[lo, hi]``."""
        bp = self.breakpoints
        a = np.clip(bp[:-1], lo, hi)
        b = np.clip(bp[1:], lo, hi)
        return float(np.sum((b - a) * self.values) / (hi - lo))


def bounding_box(x1: StepXRay, x2: StepXRay) -> tuple[float, float, float, float]:
    """``(a, b, c, d)`` with ``[a, b] x [c, d]`` the product of the two supports."""
    a, b = x1.support()
    c, d = x2.support()
    return a, b, c, d


@dataclass(frozen=True)
class ControlGrid:
    box: tuple[float, float, float, float]
    n: int

    def __post_init__(self):
        if int(self.n) < 1:
            raise InvalidInput(f"resolution must be positive, got {self.n}")
        a, b, c, d = self.box
        if not (b > a and d > c):
            raise InvalidInput(f"degenerate box {self.box}")

    @property
    def cell_width(self) -> float:
        a, b, _, _ = self.box
        return (b - a) / self.n

    @property
    def cell_height(self) -> float:
        _, _, c, d = self.box
        return (d - c) / self.n

    def xticks(self) -> np.ndarray:
        """t^1_i = a + i (b - a) / n, i = 0..n."""
        a, b, _, _ = self.box
        return a + np.arange(self.n + 1) * (b - a) / self.n

    def yticks(self) -> np.ndarray:
        """t^2_j = d - j (d - c) / n, j = 0..n (top to bottom)."""
        _, _, c, d = self.box
        return d - np.arange(self.n + 1) * (d - c) / self.n

    def cell(self, row: int, col: int) -> tuple[float, float, float, float]:
        xt, yt = self.xticks(), self.yticks()
        return xt[col], xt[col + 1], yt[row + 1], yt[row]

    def centers(self) -> np.ndarray:
        """Control points as an ``(n, n, 2)`` array indexed ``[row, col]``."""
        xt, yt = self.xticks(), self.yticks()
        cx = 0.5 * (xt[:-1] + xt[1:])
        cy = 0.5 * (yt[:-1] + yt[1:])
        return np.stack(np.meshgrid(cx, cy), axis=-1)


@dataclass
class GridSet:
    occupancy: np.ndarray

    def __post_init__(self):
        occ = np.asarray(self.occupancy, dtype=bool)
        if occ.ndim != 2 or occ.shape[0] != occ.shape[1]:
            raise InvalidInput("grid set occupancy must be a square 2D array")
        self.occupancy = occ

    @classmethod
    def full(cls, n: int) -> "GridSet":
        return cls(np.ones((n, n), dtype=bool))

    @classmethod
    def from_rows(cls, rows) -> "GridSet":
        return cls(np.array([[c == "1" for c in r.replace(" ", "")] for r in rows]))

    @property
    def n(self) -> int:
        return self.occupancy.shape[0]

    def rows(self) -> list[str]:
        return ["".join("1" if v else "0" for v in row) for row in self.occupancy]

    def xrays(self, grid: ControlGrid) -> tuple[StepXRay, StepXRay]:
        """Exact step X-rays of the union of occupied cells."""
        occ = self.occupancy
        x1 = StepXRay(grid.xticks(), occ.sum(axis=0) * grid.cell_height)
        # yticks run top-down; StepXRay wants increasing breakpoints
        x2 = StepXRay(grid.yticks()[::-1], occ.sum(axis=1)[::-1] * grid.cell_width)
        return x1, x2


def _runs_contiguous(lines: np.ndarray) -> bool:
    for line in lines:
        idx = np.flatnonzero(line)
        if len(idx) and idx[-1] - idx[0] + 1 != len(idx):
            return False
    return True


def is_hv_convex(L: GridSet) -> bool:
    return _runs_contiguous(L.occupancy) and _runs_contiguous(L.occupancy.T)


def is_connected(L: GridSet) -> bool:
    """True if the occupied cells form exactly one 4-connected component."""
    _, count = ndimage.label(L.occupancy)
    return count == 1


def _interval_abs_integral(x: np.ndarray, lo: float, hi: float) -> np.ndarray:
    """Integral of |x - t| over [lo, hi], vectorised in x."""
    mid = 0.5 * (lo + hi)
    w = hi - lo
    inside = 0.5 * ((x - lo) ** 2 + (hi - x) ** 2)
    return np.where(x <= lo, w * (mid - x), np.where(x >= hi, w * (x - mid), inside))


def cell_contributions(grid: ControlGrid, points: np.ndarray) -> np.ndarray:
    """Distance mean of each single cell at each point.

    Returns an ``(n, n, P)`` array: entry ``[row, col, p]`` is the integral of
    the taxicab distance from ``points[p]`` over cell ``(row, col)``.
    """
    xt, yt = grid.xticks(), grid.yticks()
    w, h = grid.cell_width, grid.cell_height
    px, py = points[:, 0], points[:, 1]
    colpart = np.stack([_interval_abs_integral(px, xt[c], xt[c + 1]) for c in range(grid.n)])
    rowpart = np.stack([_interval_abs_integral(py, yt[r + 1], yt[r]) for r in range(grid.n)])
    return h * colpart[None, :, :] + w * rowpart[:, None, :]


def gridset_distmean(L: GridSet, grid: ControlGrid, x) -> float:
    """f_L at ``x`` as a sum of exact rectangle integrals over occupied cells."""
    if L.n != grid.n:
        raise InvalidInput("grid set and control grid resolutions differ")
    contrib = cell_contributions(grid, np.asarray(x, dtype=float).reshape(1, 2))[:, :, 0]
    return float(contrib[L.occupancy].sum())


def target_values(x1: StepXRay, x2: StepXRay, grid: ControlGrid) -> np.ndarray:
    """f_K at the control points, indexed ``[row, col]``."""
    pts = grid.centers()
    out = np.empty((grid.n, grid.n))
    for axis_idx, xr in enumerate((x1, x2)):
        bp = xr.breakpoints
        for r in range(grid.n):
            for c in range(grid.n):
                if axis_idx == 0:
                    out[r, c] = 0.0
                out[r, c] += float(np.sum(abs_moment(bp[:-1], bp[1:], xr.values, xr.values, pts[r, c, axis_idx])))
    return out


@dataclass
class GreedyResult:
    gridset: GridSet
    grid: ControlGrid
    targets: np.ndarray
    values: np.ndarray
    deleted: list[tuple[int, int]]
    objective_history: list[float]

    @property
    def objective(self) -> float:
        return self.objective_history[-1]


def greedy_reconstruct(x1: StepXRay, x2: StepXRay, n: int, mode: str = "greedy") -> GreedyResult:
    """Delete cells from the full box while the set stays feasible.

    Each step removes the feasible cell with the largest (``greedy``) or
    smallest (``antigreedy``) drop of the mean of f_L over the control points;
    ties go to the smallest ``(row, col)``. Stops when no cell can be deleted.
    """
    if mode not in ("greedy", "antigreedy"):
        raise InvalidInput(f"mode must be 'greedy' or 'antigreedy', got {mode!r}")
    grid = ControlGrid(bounding_box(x1, x2), n)
    targets = target_values(x1, x2, grid)
    pts = grid.centers().reshape(-1, 2)
    contrib = cell_contributions(grid, pts).reshape(n * n, n * n)
    L = GridSet.full(n)
    fL = contrib.sum(axis=0)
    fK = targets.ravel()
    tol = SLACK * max(1.0, float(np.abs(fK).max()))
    descent = contrib.sum(axis=1) / n**2
    scale = float(descent.max())
    # quantise so that descents equal up to roundoff tie and fall back to (row, col)
    key = np.round(descent / scale, 9)
    order = np.lexsort((np.arange(n * n), -key if mode == "greedy" else key))
    deleted: list[tuple[int, int]] = []
    history = [float(np.sum(fL - fK) / n**2)]

    while True:
        occ = L.occupancy.ravel()
        feasible = occ & np.all(fL[None, :] - contrib >= fK[None, :] - tol, axis=1)
        choice = None
        for idx in order:
            if not feasible[idx]:
                continue
            trial = L.occupancy.copy()
            trial.ravel()[idx] = False
            cand = GridSet(trial)
            if trial.any() and is_hv_convex(cand) and is_connected(cand):
                choice = idx
                break
        if choice is None:
            break
        L.occupancy.ravel()[choice] = False
        fL = fL - contrib[choice]
        deleted.append(divmod(int(choice), n))
        history.append(float(np.sum(fL - fK) / n**2))
    return GreedyResult(L, grid, targets, fL.reshape(n, n), deleted, history)


def constraint_holds(L: GridSet, grid: ControlGrid, targets: np.ndarray, slack: float = SLACK) -> bool:
    """f_L >= f_K - slack at every control point."""
    pts = grid.centers().reshape(-1, 2)
    contrib = cell_contributions(grid, pts).reshape(grid.n * grid.n, -1)
    fL = contrib[L.occupancy.ravel()].sum(axis=0)
    return bool(np.all(fL >= targets.ravel() - slack * max(1.0, float(np.abs(targets).max()))))


# -- file formats -----------------------------------------------------------------

def read_step_xray(path) -> StepXRay:
    """Parse ``t_start,t_end,value`` rows; intervals must be contiguous and increasing."""
    rows = []
    with open(Path(path), newline="") as fh:
        for lineno, row in enumerate(csv.reader(fh), start=1):
            if not row or row[0].strip().startswith("#"):
                continue
            if lineno == 1 and row[0].strip() == "t_start":
                continue
            try:
                rows.append(tuple(float(v) for v in row[:3]))
            except ValueError as exc:
                raise InvalidInput(f"{path}:{lineno}: bad X-ray row {row!r}") from exc
            if len(row) < 3:
                raise InvalidInput(f"{path}:{lineno}: expected t_start,t_end,value")
    if not rows:
        raise InvalidInput(f"{path}: empty X-ray file")
    bp = [rows[0][0]]
    vals = []
    for k, (t0, t1, v) in enumerate(rows):
        if t0 != bp[-1]:
            raise InvalidInput(f"{path}: interval {k + 1} starts at {t0}, expected {bp[-1]}")
        bp.append(t1)
        vals.append(v)
    xr = StepXRay(np.array(bp), np.array(vals))
    xr.support()
    return xr


def write_step_xray(xr: StepXRay, path) -> None:
    with open(Path(path), "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["t_start", "t_end", "value"])
        bp = xr.breakpoints
        for k, v in enumerate(xr.values):
            w.writerow([repr(float(bp[k])), repr(float(bp[k + 1])), repr(float(v))])


def exhaustive_optimum(x1: StepXRay, x2: StepXRay, n: int) -> tuple[GridSet, float]:
    """Best feasible grid set by enumerating all 2^(n*n) cell subsets (n <= 4).

    Test oracle for the greedy heuristic; returns the feasible hv-convex,
    connected set with the smallest objective, ties to the smallest code.
    """
    if n > 4:
        raise InvalidInput("exhaustive search limited to n <= 4")
    grid = ControlGrid(bounding_box(x1, x2), n)
    fK = target_values(x1, x2, grid).ravel()
    contrib = cell_contributions(grid, grid.centers().reshape(-1, 2)).reshape(n * n, -1)
    codes = np.arange(1, 2 ** (n * n), dtype=np.int64)
    bits = ((codes[:, None] >> np.arange(n * n)) & 1).astype(float)
    fL = bits @ contrib
    tol = SLACK * max(1.0, float(np.abs(fK).max()))
    feasible = np.all(fL >= fK - tol, axis=1)
    objective = (fL - fK).sum(axis=1) / n**2
    for idx in np.argsort(objective, kind="stable"):
        if not feasible[idx]:
            continue
        L = GridSet(bits[idx].reshape(n, n).astype(bool))
        if is_hv_convex(L) and is_connected(L):
            return L, float(objective[idx])
    raise InvalidInput("no feasible grid set")  # pragma: no cover - the full box is always feasible
