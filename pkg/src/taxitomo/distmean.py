"""Coordinate X-rays of polygons and the taxicab distance mean function.

For a planar body K the function

    f_K(x) = integral over K of |x1 - y1| + |x2 - y2| dy

depends on K only through its two coordinate X-rays (slice lengths along
each axis), so everything here works on piecewise linear profiles. Values are
not normalised by the area of K.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from taxitomo.geometry import InvalidInput, Polygon

AXES = (1, 2)


@dataclass(frozen=True)
class PiecewiseLinearProfile:
    """Compactly supported profile, linear on each segment between breakpoints.

    ``left[k]`` and ``right[k]`` are the values at the two ends of segment
    ``[breakpoints[k], breakpoints[k+1]]``. Keeping both ends per segment lets
    the profile jump at a breakpoint, which happens for polygons with edges
    orthogonal to the axis (the L-shape drops from 2 to 1 at t = 1).
    """

    breakpoints: np.ndarray
    left: np.ndarray
    right: np.ndarray

    def __post_init__(self):
        bp = np.asarray(self.breakpoints, dtype=float)
        lv = np.asarray(self.left, dtype=float)
        rv = np.asarray(self.right, dtype=float)
        if bp.ndim != 1 or len(bp) < 2:
            raise InvalidInput("profile needs at least two breakpoints")
        if np.any(np.diff(bp) <= 0):
            raise InvalidInput("profile breakpoints must be strictly increasing")
        if lv.shape != (len(bp) - 1,) or rv.shape != lv.shape:
            raise InvalidInput("profile needs one (left, right) value pair per segment")
        if np.any(lv < 0) or np.any(rv < 0):
            raise InvalidInput("profile values must be nonnegative")
        object.__setattr__(self, "breakpoints", bp)
        object.__setattr__(self, "left", lv)
        object.__setattr__(self, "right", rv)

    @classmethod
    def from_steps(cls, breakpoints, values) -> "PiecewiseLinearProfile":
        v = np.asarray(values, dtype=float)
        return cls(np.asarray(breakpoints, dtype=float), v, v.copy())

    @property
    def support(self) -> tuple[float, float]:
        return float(self.breakpoints[0]), float(self.breakpoints[-1])

    def integral(self) -> float:
        widths = np.diff(self.breakpoints)
        return float(np.sum(0.5 * widths * (self.left + self.right)))

    def __call__(self, t):
        """Evaluate the profile; right-continuous at jumps, zero off the support."""
        t = np.asarray(t, dtype=float)
        bp = self.breakpoints
        k = np.searchsorted(bp, t, side="right") - 1
        inside = (k >= 0) & (k < len(bp) - 1)
        kk = np.clip(k, 0, len(bp) - 2)
        a, b = bp[kk], bp[kk + 1]
        s = (t - a) / (b - a)
        val = self.left[kk] + s * (self.right[kk] - self.left[kk])
        # the last breakpoint closes the final segment
        at_end = t == bp[-1]
        val = np.where(at_end, self.right[-1], val)
        out = np.where(inside | at_end, val, 0.0)
        return float(out) if out.ndim == 0 else out


def _slice_length(vertices, axis_idx: int, t: float) -> float:
    other = 1 - axis_idx
    crossings = []
    n = len(vertices)
    for k in range(n):
        p = vertices[k]
        q = vertices[(k + 1) % n]
        if (p[axis_idx] - t) * (q[axis_idx] - t) < 0:
            s = (t - p[axis_idx]) / (q[axis_idx] - p[axis_idx])
            crossings.append(p[other] + s * (q[other] - p[other]))
    crossings.sort()
    return float(sum(crossings[k + 1] - crossings[k] for k in range(0, len(crossings) - 1, 2)))


def coordinate_xray(p: Polygon, axis: int) -> PiecewiseLinearProfile:
    """Slice-length profile of ``p`` orthogonal to coordinate ``axis`` (1 or 2).

    Between consecutive vertex coordinates the slice length is affine, so it is
    sampled at the quarter points of each segment and extended to both ends.
    """
    if axis not in AXES:
        raise InvalidInput(f"axis must be 1 or 2, got {axis}")
    ai = axis - 1
    bp = np.array(sorted({v[ai] for v in p.vertices}))
    left = np.empty(len(bp) - 1)
    right = np.empty(len(bp) - 1)
    for k in range(len(bp) - 1):
        a, b = bp[k], bp[k + 1]
        h = b - a
        l1 = _slice_length(p.vertices, ai, a + 0.25 * h)
        l2 = _slice_length(p.vertices, ai, a + 0.75 * h)
        left[k] = max(l1 - 0.5 * (l2 - l1), 0.0)
        right[k] = max(l2 + 0.5 * (l2 - l1), 0.0)
    return PiecewiseLinearProfile(bp, left, right)


def abs_moment(a, b, ga, gb, x: float):
    """Exact value of the integral of |x - t| g(t) over [a, b], g affine from ga to gb.

    Vectorised over segments. The interval is split at ``t = x``; on each part
    the integrand is a quadratic polynomial, which Simpson's rule integrates
    exactly.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    ga = np.asarray(ga, dtype=float)
    gb = np.asarray(gb, dtype=float)
    w = b - a
    slope = np.divide(gb - ga, w, out=np.zeros_like(w), where=w > 0)

    def g(t):
        return ga + slope * (t - a)

    def simpson(lo, hi):
        m = 0.5 * (lo + hi)
        f = lambda t: np.abs(x - t) * g(t)
        return np.where(hi > lo, (hi - lo) / 6.0 * (f(lo) + 4.0 * f(m) + f(hi)), 0.0)

    lo_hi = np.minimum(b, np.maximum(a, x))
    return simpson(a, lo_hi) + simpson(lo_hi, b)


def _axis_moment(profile: PiecewiseLinearProfile, x: float) -> float:
    bp = profile.breakpoints
    return float(np.sum(abs_moment(bp[:-1], bp[1:], profile.left, profile.right, x)))


def distmean_eval(x1ray: PiecewiseLinearProfile, x2ray: PiecewiseLinearProfile, x) -> float:
    return _axis_moment(x1ray, float(x[0])) + _axis_moment(x2ray, float(x[1]))


def cumulative_area(profile: PiecewiseLinearProfile, t: float) -> float:
    """Integral of the profile over (-inf, t]."""
    bp = profile.breakpoints
    a, b = bp[:-1], bp[1:]
    hi = np.clip(t, a, b)
    slope = (profile.right - profile.left) / (b - a)
    # trapezoid over [a, hi]
    v_hi = profile.left + slope * (hi - a)
    return float(np.sum(0.5 * (hi - a) * (profile.left + v_hi)))


def distmean_gradient(x1ray: PiecewiseLinearProfile, x2ray: PiecewiseLinearProfile, x) -> np.ndarray:
    """Gradient of f_K: area on the low side minus area on the high side, per axis."""
    out = np.empty(2)
    for k, prof in enumerate((x1ray, x2ray)):
        below = cumulative_area(prof, float(x[k]))
        out[k] = below - (prof.integral() - below)
    return out


def write_profile_csv(profile: PiecewiseLinearProfile, path) -> None:
    """Write ``t,value`` rows; a jump appears as two rows with the same ``t``."""
    rows: list[tuple[float, float]] = []
    bp = profile.breakpoints
    for k in range(len(bp) - 1):
        start = (bp[k], profile.left[k])
        if not rows or rows[-1] != start:
            rows.append(start)
        rows.append((bp[k + 1], profile.right[k]))
    with open(Path(path), "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["t", "value"])
        for t, v in rows:
            w.writerow([repr(float(t)), repr(float(v))])


def read_profile_csv(path) -> PiecewiseLinearProfile:
    with open(Path(path), newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [h.strip() for h in header] != ["t", "value"]:
            raise InvalidInput(f"{path}: expected header 't,value'")
        rows = []
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            try:
                rows.append((float(row[0]), float(row[1])))
            except (ValueError, IndexError) as exc:
                raise InvalidInput(f"{path}:{lineno}: bad profile row {row!r}") from exc
    if len(rows) < 2:
        raise InvalidInput(f"{path}: profile needs at least two rows")
    bp, left, right = [rows[0][0]], [], []
    cur_t, cur_v = rows[0]
    for t, v in rows[1:]:
        if t < cur_t:
            raise InvalidInput(f"{path}: breakpoints must be nondecreasing")
        if t == cur_t:
            cur_v = v  # jump
            continue
        left.append(cur_v)
        right.append(v)
        bp.append(t)
        cur_t, cur_v = t, v
    return PiecewiseLinearProfile(np.array(bp), np.array(left), np.array(right))
