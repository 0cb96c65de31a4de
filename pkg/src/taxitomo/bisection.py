"""Locate the minimiser of f_K, the point whose axis-parallel lines halve K's area.

Two routes: a stochastic sign-gradient recursion driven by uniform samples
from K, and a deterministic per-axis root finder on the cumulative area.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from taxitomo.distmean import PiecewiseLinearProfile, coordinate_xray, cumulative_area
from taxitomo.geometry import InvalidInput, Polygon, SeededRng, sample_uniform, triangulate


def harmonic(k: int) -> float:
    return 1.0 / k


@dataclass(frozen=True)
class StepSchedule:
    """Step sizes t_k for k = 1, 2, ...; the default is t_k = 1/k."""

    rule: Callable[[int], float] = harmonic

    def __call__(self, k: int) -> float:
        return float(self.rule(k))

    def prefix(self, n: int) -> np.ndarray:
        return np.array([self(k) for k in range(1, n + 1)])

    def check_prefix(self, n: int) -> bool:
        """True if the first ``n`` steps are positive and nonincreasing."""
        t = self.prefix(n)
        return bool(np.all(t > 0) and np.all(np.diff(t) <= 0))


@dataclass
class BisectionRun:
    trajectory: np.ndarray
    seed: int
    iterations: int
    steps: np.ndarray = field(repr=False)

    @property
    def final_point(self) -> np.ndarray:
        return self.trajectory[-1]


def sign_step(x, p_sample) -> np.ndarray:
    """Componentwise sign of ``x - p_sample`` with sgn(0) = 0."""
    return np.sign(np.asarray(x, dtype=float) - np.asarray(p_sample, dtype=float))


def bisect_stochastic(p: Polygon, iterations: int, rng: SeededRng,
                      schedule: StepSchedule | None = None, start=None) -> BisectionRun:
    """Run X_k = X_{k-1} - t_k * sgn(X_{k-1} - P_k) with uniform samples P_k from ``p``.

    ``iterations + 1`` samples are drawn; the first one is the starting point
    unless ``start`` is given (in which case it is still drawn, keeping the
    sample stream independent of the start). Iterates are not projected back
    into ``p``.
    """
    if int(iterations) < 1:
        raise InvalidInput(f"iterations must be positive, got {iterations}")
    schedule = schedule or StepSchedule()
    n = int(iterations)
    samples = sample_uniform(p, n + 1, rng, triangulate(p))
    steps = schedule.prefix(n)

    traj = np.empty((n + 1, 2))
    x0, y0 = samples[0] if start is None else (float(start[0]), float(start[1]))
    traj[0] = x0, y0
    px = samples[:, 0].tolist()
    py = samples[:, 1].tolist()
    ts = steps.tolist()
    xs = [0.0] * n
    ys = [0.0] * n
    x, y = x0, y0
    # plain-float loop: ~10x faster than per-step numpy for this recursion
    for k in range(n):
        dx = x - px[k + 1]
        dy = y - py[k + 1]
        t = ts[k]
        if dx > 0:
            x -= t
        elif dx < 0:
            x += t
        if dy > 0:
            y -= t
        elif dy < 0:
            y += t
        xs[k] = x
        ys[k] = y
    traj[1:, 0] = xs
    traj[1:, 1] = ys
    return BisectionRun(traj, rng.seed, n, steps)


def _median_of_profile(prof: PiecewiseLinearProfile, tol: float) -> float:
    total = prof.integral()
    half = 0.5 * total
    lo, hi = prof.support
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        c = cumulative_area(prof, mid)
        if abs(c - half) <= tol * total:
            return mid
        if c < half:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def bisect_exact(p: Polygon, tol: float = 1e-10) -> np.ndarray:
    """Per-axis area median of ``p`` by bisection on the cumulative area."""
    if tol <= 0:
        raise InvalidInput("tol must be positive")
    return np.array([_median_of_profile(coordinate_xray(p, axis), tol) for axis in (1, 2)])
