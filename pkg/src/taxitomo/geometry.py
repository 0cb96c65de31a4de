"""Simple polygons, ear-clipping triangulation and uniform sampling."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

AREA_EPS = 1e-12


class InvalidInput(ValueError):
    """Raised for malformed geometric or combinatorial input."""


def _cross(o, a, b) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _on_segment(p, a, b) -> bool:
    if _cross(a, b, p) != 0.0:
        return False
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def segments_intersect(p1, p2, q1, q2) -> bool:
    """Closed segment intersection test (touching counts)."""
    d1 = _cross(q1, q2, p1)
    d2 = _cross(q1, q2, p2)
    d3 = _cross(p1, p2, q1)
    d4 = _cross(p1, p2, q2)
    if ((d1 > 0 > d2) or (d1 < 0 < d2)) and ((d3 > 0 > d4) or (d3 < 0 < d4)):
        return True
    return (_on_segment(p1, q1, q2) or _on_segment(p2, q1, q2)
            or _on_segment(q1, p1, p2) or _on_segment(q2, p1, p2))


def signed_area(vertices: Sequence[Sequence[float]]) -> float:
    s = 0.0
    n = len(vertices)
    for k in range(n):
        x0, y0 = vertices[k]
        x1, y1 = vertices[(k + 1) % n]
        s += x0 * y1 - x1 * y0
    return 0.5 * s


def _is_simple(vs) -> bool:
    n = len(vs)
    edges = [(vs[k], vs[(k + 1) % n]) for k in range(n)]
    for a in range(n):
        for b in range(a + 1, n):
            p1, p2 = edges[a]
            q1, q2 = edges[b]
            if b == a + 1 or (a == 0 and b == n - 1):
                # adjacent edges share one endpoint; they may only overlap if collinear and folding back
                shared = p2 if b == a + 1 else p1
                other_p = p1 if b == a + 1 else p2
                other_q = q2 if b == a + 1 else q1
                if _cross(shared, other_p, other_q) == 0.0:
                    dp = (other_p[0] - shared[0], other_p[1] - shared[1])
                    dq = (other_q[0] - shared[0], other_q[1] - shared[1])
                    if dp[0] * dq[0] + dp[1] * dq[1] > 0:
                        return False
                continue
            if segments_intersect(p1, p2, q1, q2):
                return False
    return True


@dataclass(frozen=True)
class Polygon:
    """Simple polygon with counterclockwise vertex order.

    Construction validates the vertex list and raises :class:`InvalidInput`
    for fewer than three vertices, repeated consecutive vertices, a
    self-intersecting boundary, clockwise orientation or zero area.
    """

    vertices: tuple[tuple[float, float], ...]

    def __post_init__(self):
        vs = tuple((float(x), float(y)) for x, y in self.vertices)
        object.__setattr__(self, "vertices", vs)
        n = len(vs)
        if n < 3:
            raise InvalidInput(f"polygon needs at least 3 vertices, got {n}")
        for k in range(n):
            if vs[k] == vs[(k + 1) % n]:
                raise InvalidInput(f"consecutive vertices {k} and {(k + 1) % n} coincide")
        if not all(np.isfinite(c) for v in vs for c in v):
            raise InvalidInput("non-finite vertex coordinate")
        if not _is_simple(vs):
            raise InvalidInput("polygon boundary is self-intersecting")
        a = signed_area(vs)
        if abs(a) <= AREA_EPS:
            raise InvalidInput(f"degenerate polygon (area {a:g})")
        if a < 0:
            raise InvalidInput("polygon vertices are clockwise; counterclockwise order is required")

    def __len__(self):
        return len(self.vertices)

    def as_array(self) -> np.ndarray:
        return np.array(self.vertices, dtype=float)

    def bounds(self) -> tuple[float, float, float, float]:
        xs = [v[0] for v in self.vertices]
        ys = [v[1] for v in self.vertices]
        return min(xs), max(xs), min(ys), max(ys)


@dataclass(frozen=True)
class Triangulation:
    polygon: Polygon
    triangles: tuple[tuple[int, int, int], ...]

    def areas(self) -> np.ndarray:
        vs = self.polygon.vertices
        return np.array([abs(signed_area([vs[i], vs[j], vs[k]])) for i, j, k in self.triangles])


@dataclass
class SeededRng:
    """Deterministic 64-bit generator (PCG64 via numpy).

    Uniform reals in [0, 1) use the 53-bit mantissa construction of
    ``numpy.random.Generator.random``, so a given seed yields a bit-identical
    stream on every platform numpy supports.
    """

    seed: int
    _gen: np.random.Generator = field(init=False, repr=False)

    def __post_init__(self):
        if not 0 <= int(self.seed) < 2**64:
            raise InvalidInput(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        self.seed = int(self.seed)
        self._gen = np.random.Generator(np.random.PCG64(self.seed))

    def random(self, size=None):
        return self._gen.random(size)


def polygon_area(p: Polygon) -> float:
    a = signed_area(p.vertices)
    if a <= AREA_EPS:
        raise InvalidInput(f"degenerate polygon (area {a:g})")
    return a


def _point_in_closed_triangle(p, a, b, c) -> bool:
    return _cross(a, b, p) >= 0 and _cross(b, c, p) >= 0 and _cross(c, a, p) >= 0


def triangulate(p: Polygon) -> Triangulation:
    """Ear clipping in O(n^2) ear tests; yields n - 2 triangles.

    Vertices collinear with both neighbours are clipped as zero-area ears only
    when no proper ear is left.
    """
    vs = p.vertices
    if not _is_simple(vs):
        raise InvalidInput("polygon boundary is self-intersecting")
    idx = list(range(len(vs)))
    tris: list[tuple[int, int, int]] = []

    def is_ear(k: int) -> bool:
        i0, i1, i2 = idx[k - 1], idx[k], idx[(k + 1) % len(idx)]
        a, b, c = vs[i0], vs[i1], vs[i2]
        if _cross(a, b, c) <= 0:
            return False
        for other in idx:
            if other in (i0, i1, i2):
                continue
            if _point_in_closed_triangle(vs[other], a, b, c):
                return False
        return True

    while len(idx) > 3:
        for k in range(len(idx)):
            if is_ear(k):
                break
        else:
            # only collinear (zero-area) ears remain
            for k in range(len(idx)):
                if _cross(vs[idx[k - 1]], vs[idx[k]], vs[idx[(k + 1) % len(idx)]]) == 0:
                    break
            else:  # pragma: no cover - unreachable for a valid simple polygon
                raise InvalidInput("ear clipping failed; polygon is not simple")
        tris.append((idx[k - 1], idx[k], idx[(k + 1) % len(idx)]))
        del idx[k]
    tris.append((idx[0], idx[1], idx[2]))
    return Triangulation(p, tuple(tris))


def point_in_polygon(p: Polygon, x) -> bool:
    """Closed point-in-polygon test; boundary points count as inside."""
    px, py = float(x[0]), float(x[1])
    vs = p.vertices
    n = len(vs)
    inside = False
    for k in range(n):
        a = vs[k]
        b = vs[(k + 1) % n]
        if _on_segment((px, py), a, b):
            return True
        if (a[1] > py) != (b[1] > py):
            xint = a[0] + (py - a[1]) * (b[0] - a[0]) / (b[1] - a[1])
            if px < xint:
                inside = not inside
    return inside


def sample_uniform(p: Polygon, count: int, rng: SeededRng, tri: Triangulation | None = None) -> np.ndarray:
    """Uniform random points in ``p`` as a ``(count, 2)`` array.

    Each point consumes three uniforms in order: the area threshold, then the
    triangle coordinates ``u`` and ``v``. The triangle is the first one whose
    cumulative area reaches the threshold; ``u + v > 1`` is folded back by
    ``(u, v) -> (1 - u, 1 - v)``.
    """
    if int(count) < 1:
        raise InvalidInput(f"count must be positive, got {count}")
    tri = tri or triangulate(p)
    areas = tri.areas()
    cum = np.cumsum(areas)
    total = cum[-1]
    verts = p.as_array()
    T = np.array(tri.triangles)

    draws = rng.random((int(count), 3))
    x = draws[:, 0] * total
    u = draws[:, 1].copy()
    v = draws[:, 2].copy()
    # smallest k with x <= cum[k]; same result as a linear scan over cum
    k = np.minimum(np.searchsorted(cum, x, side="left"), len(cum) - 1)
    fold = u + v > 1.0
    u[fold] = 1.0 - u[fold]
    v[fold] = 1.0 - v[fold]
    P = verts[T[k, 0]]
    Q = verts[T[k, 1]]
    R = verts[T[k, 2]]
    return P + u[:, None] * (Q - P) + v[:, None] * (R - P)


def clip_halfplane(vertices: Sequence[Sequence[float]], axis: int, t: float, keep_below: bool = True) -> list:
    """Sutherland-Hodgman clip of a polygon against ``y[axis] <= t`` (or ``>= t``)."""
    def inside(q):
        return q[axis] <= t if keep_below else q[axis] >= t

    out = []
    n = len(vertices)
    for k in range(n):
        cur = vertices[k]
        nxt = vertices[(k + 1) % n]
        ci, ni = inside(cur), inside(nxt)
        if ci:
            out.append(tuple(cur))
        if ci != ni:
            s = (t - cur[axis]) / (nxt[axis] - cur[axis])
            out.append((cur[0] + s * (nxt[0] - cur[0]), cur[1] + s * (nxt[1] - cur[1])))
    return out


def halfplane_area(p: Polygon, axis: int, t: float) -> float:
    """Area of the part of ``p`` with ``y[axis] <= t``."""
    clipped = clip_halfplane(p.vertices, axis, t)
    if len(clipped) < 3:
        return 0.0
    return abs(signed_area(clipped))


def read_polygon(path) -> Polygon:
    """Read ``x y`` vertex lines (``#`` starts a comment) into a :class:`Polygon`."""
    verts = []
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.replace(",", " ").split()
            try:
                if len(parts) != 2:
                    raise ValueError
                verts.append((float(parts[0]), float(parts[1])))
            except ValueError:
                raise InvalidInput(f"{path}:{lineno}: expected 'x y', got {raw.rstrip()!r}") from None
    return Polygon(tuple(verts))


def write_polygon(p: Polygon, path) -> None:
    with open(path, "w") as fh:
        for x, y in p.vertices:
            fh.write(f"{x!r} {y!r}\n")
