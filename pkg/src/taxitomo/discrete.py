"""Discrete taxicab distance sums and binary matrix reconstruction from row/column sums.

Matrix/lattice convention: the 0-based matrix cell ``(i, j)`` of an ``m x n``
matrix is the lattice point ``(j + 1, m - i)``; row ``i`` is the horizontal
lattice line at height ``m - i``. :func:`cell_to_lattice` and
:func:`lattice_to_cell` are the only places that know this.
"""

from __future__ import annotations

import itertools
from collections import Counter, deque
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from taxitomo.geometry import InvalidInput

Cell = tuple[int, int]


# -- lattice sets and their X-rays -------------------------------------------

def cell_to_lattice(i: int, j: int, m: int) -> tuple[int, int]:
    return j + 1, m - i


def lattice_to_cell(x: int, y: int, m: int) -> Cell:
    return m - y, x - 1


def lattice_from_matrix(A: "BinaryMatrix") -> frozenset:
    m = A.m
    return frozenset(cell_to_lattice(int(i), int(j), m) for i, j in zip(*np.nonzero(A.entries)))


def matrix_from_lattice(F: Iterable[tuple[int, int]], m: int, n: int) -> "BinaryMatrix":
    a = np.zeros((m, n), dtype=np.uint8)
    for x, y in F:
        i, j = lattice_to_cell(x, y, m)
        if not (0 <= i < m and 0 <= j < n):
            raise InvalidInput(f"lattice point {(x, y)} outside the {n}x{m} picture region")
        a[i, j] = 1
    return BinaryMatrix(a)


def discrete_distance_sum(F: Iterable[Sequence[float]], x) -> float:
    pts = list(F)
    if not pts:
        raise InvalidInput("lattice set must be nonempty")
    return sum(abs(x[0] - p[0]) + abs(x[1] - p[1]) for p in pts)


def discrete_xrays(F: Iterable[Sequence[int]]) -> tuple[Counter, Counter]:
    """Point counts on each vertical line (axis 1) and horizontal line (axis 2)."""
    pts = list(F)
    if not pts:
        raise InvalidInput("lattice set must be nonempty")
    return Counter(p[0] for p in pts), Counter(p[1] for p in pts)


def distance_sum_via_xrays(xrays: tuple[Counter, Counter], x) -> float:
    x1, x2 = xrays
    return (sum(c * abs(x[0] - t) for t, c in x1.items())
            + sum(c * abs(x[1] - t) for t, c in x2.items()))


def one_sided_partials(F: Iterable[Sequence[int]], x, axis: int) -> tuple[int, int]:
    """Right and left partial derivatives of the distance sum along ``axis`` (1 or 2)."""
    if axis not in (1, 2):
        raise InvalidInput(f"axis must be 1 or 2, got {axis}")
    coords = [p[axis - 1] for p in F]
    if not coords:
        raise InvalidInput("lattice set must be nonempty")
    t = x[axis - 1]
    le = sum(c <= t for c in coords)
    lt = sum(c < t for c in coords)
    n = len(coords)
    return le - (n - le), lt - (n - lt)


# -- Problem data ---------------------------------------------------------------

@dataclass(frozen=True)
class SumVectors:
    R: tuple[int, ...]
    S: tuple[int, ...]

    def __post_init__(self):
        R = tuple(int(r) for r in self.R)
        S = tuple(int(s) for s in self.S)
        if not R or not S:
            raise InvalidInput("row and column sum vectors must be nonempty")
        if any(v < 0 for v in R + S):
            raise InvalidInput("row and column sums must be nonnegative")
        object.__setattr__(self, "R", R)
        object.__setattr__(self, "S", S)

    @property
    def m(self) -> int:
        return len(self.R)

    @property
    def n(self) -> int:
        return len(self.S)

    @property
    def total(self) -> int:
        return sum(self.R)

    @property
    def in_bounds(self) -> bool:
        return all(r <= self.n for r in self.R) and all(s <= self.m for s in self.S)

    @property
    def compatible(self) -> bool:
        return self.in_bounds and sum(self.R) == sum(self.S)

    def require_compatible(self) -> None:
        if not self.in_bounds:
            raise InvalidInput(f"sums out of range for a {self.m}x{self.n} matrix")
        if sum(self.R) != sum(self.S):
            raise InvalidInput(f"incompatible sums: sum(R)={sum(self.R)} != sum(S)={sum(self.S)}")


class BinaryMatrix:
    """m x n 0/1 matrix that keeps its row and column sums up to date."""

    def __init__(self, entries):
        a = np.array(entries, dtype=np.uint8)
        if a.ndim != 2 or np.any(a > 1):
            raise InvalidInput("binary matrix must be a 2D array of 0/1")
        self.entries = a
        self.row_sums = a.sum(axis=1).astype(int)
        self.col_sums = a.sum(axis=0).astype(int)

    @classmethod
    def zeros(cls, m: int, n: int) -> "BinaryMatrix":
        return cls(np.zeros((m, n), dtype=np.uint8))

    @classmethod
    def from_rows(cls, rows: Iterable[str]) -> "BinaryMatrix":
        return cls([[int(c) for c in r.replace(" ", "")] for r in rows])

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    @property
    def m(self) -> int:
        return self.entries.shape[0]

    @property
    def n(self) -> int:
        return self.entries.shape[1]

    def __getitem__(self, ij: Cell) -> int:
        return int(self.entries[ij])

    def set(self, i: int, j: int, value: int) -> None:
        old = self.entries[i, j]
        if old == value:
            return
        d = int(value) - int(old)
        self.entries[i, j] = value
        self.row_sums[i] += d
        self.col_sums[j] += d

    def flip(self, i: int, j: int) -> None:
        self.set(i, j, 1 - self.entries[i, j])

    def copy(self) -> "BinaryMatrix":
        return BinaryMatrix(self.entries.copy())

    def sums_consistent(self) -> bool:
        return (np.array_equal(self.row_sums, self.entries.sum(axis=1))
                and np.array_equal(self.col_sums, self.entries.sum(axis=0)))

    def has_marginals(self, sums: SumVectors) -> bool:
        return tuple(self.row_sums.tolist()) == sums.R and tuple(self.col_sums.tolist()) == sums.S

    def rows(self) -> list[str]:
        return ["".join(str(int(v)) for v in row) for row in self.entries]

    def __eq__(self, other) -> bool:
        return isinstance(other, BinaryMatrix) and np.array_equal(self.entries, other.entries)

    def __hash__(self):
        return hash(self.entries.tobytes() + bytes(self.shape))

    def __repr__(self) -> str:
        return f"BinaryMatrix({'/'.join(self.rows())})"


# -- least average value initialisation ----------------------------------------

def distance_sum_matrix(sums: SumVectors) -> np.ndarray:
    """Distance sum at every picture point, laid out like the matrix.

    Entry ``(k, l)`` is ``sum_j s_j |l - j| + sum_i r_i |k - i|``.
    """
    r = np.asarray(sums.R, dtype=np.int64)
    s = np.asarray(sums.S, dtype=np.int64)
    rows = np.arange(sums.m)
    cols = np.arange(sums.n)
    row_part = np.abs(rows[:, None] - rows[None, :]) @ r
    col_part = np.abs(cols[:, None] - cols[None, :]) @ s
    return row_part[:, None] + col_part[None, :]


@dataclass
class TraceEvent:
    """One step of the LAV fill: the rule that fired, the lines or cell it touched,
    and snapshots of the matrix and visited mask afterwards."""

    rule: str
    where: tuple
    matrix: np.ndarray
    visited: np.ndarray

    def describe(self) -> str:
        if self.rule in ("switch", "visit"):
            i, j = self.where
            loc = f"entry ({i + 1},{j + 1})"
        elif self.rule == "init":
            loc = ""
        else:
            kind = "rows" if self.rule.endswith("rows") else "columns"
            loc = f"{kind} " + ",".join(str(k + 1) for k in self.where)
        return f"{self.rule} {loc}".strip()


def preference_list(sums: SumVectors) -> list[Cell]:
    """Cells by increasing distance sum, ties broken row-major."""
    M = distance_sum_matrix(sums)
    return sorted(((i, j) for i in range(sums.m) for j in range(sums.n)),
                  key=lambda c: (M[c], c[0], c[1]))


def lav_fill(sums: SumVectors, trace: list | None = None) -> tuple[BinaryMatrix, np.ndarray]:
    """Greedy fill of the zero matrix along the least-average-value preference list.

    After the initial state and after every visited entry, both accelerations
    run to a fixed point in the order: saturated rows, saturated columns,
    forced rows, saturated rows, saturated columns, forced columns. If
    ``trace`` is a list, a :class:`TraceEvent` is appended for every change.
    """
    sums.require_compatible()
    m, n = sums.m, sums.n
    r = np.asarray(sums.R)
    s = np.asarray(sums.S)
    A = BinaryMatrix.zeros(m, n)
    visited = np.zeros((m, n), dtype=bool)

    def record(rule, where=()):
        if trace is not None:
            trace.append(TraceEvent(rule, tuple(where), A.entries.copy(), visited.copy()))

    def mark_saturated():
        changed = False
        rows = [i for i in range(m) if A.row_sums[i] == r[i] and not visited[i].all()]
        for i in rows:
            visited[i] = True
        if rows:
            record("accel1-rows", rows)
        cols = [j for j in range(n) if A.col_sums[j] == s[j] and not visited[:, j].all()]
        for j in cols:
            visited[:, j] = True
        if cols:
            record("accel1-cols", cols)
        return bool(rows or cols)

    def force_rows():
        hit = []
        for i in range(m):
            unv = np.flatnonzero(~visited[i])
            if len(unv) and r[i] - A.row_sums[i] == len(unv):
                for j in unv:
                    if A.col_sums[j] < s[j]:
                        A.set(i, j, 1)
                visited[i, unv] = True
                hit.append(i)
        if hit:
            record("accel2-rows", hit)
        return bool(hit)

    def force_cols():
        hit = []
        for j in range(n):
            unv = np.flatnonzero(~visited[:, j])
            if len(unv) and s[j] - A.col_sums[j] == len(unv):
                for i in unv:
                    if A.row_sums[i] < r[i]:
                        A.set(i, j, 1)
                visited[unv, j] = True
                hit.append(j)
        if hit:
            record("accel2-cols", hit)
        return bool(hit)

    def accelerate():
        while True:
            changed = mark_saturated()
            changed |= force_rows()
            changed |= mark_saturated()
            changed |= force_cols()
            if not changed:
                return

    record("init")
    accelerate()
    for i, j in preference_list(sums):
        if visited[i, j]:
            continue
        visited[i, j] = True
        if A.row_sums[i] < r[i] and A.col_sums[j] < s[j]:
            A.set(i, j, 1)
            record("switch", (i, j))
        else:
            record("visit", (i, j))
        accelerate()
    return A, visited


# -- network flow -----------------------------------------------------------------

class FlowNetwork:
    """Bipartite tomography network s -> v_i -> w_j -> t.

    Edges are stored in the order e_s1..e_sm, e_11..e_mn (row-major),
    e_1t..e_nt; ``cap`` and ``flow`` are integer arrays aligned with ``edges``.
    """

    def __init__(self, sums: SumVectors, flow: np.ndarray | None = None):
        self.sums = sums
        m, n = sums.m, sums.n
        self.m, self.n = m, n
        edges = [("s", ("v", i)) for i in range(m)]
        edges += [(("v", i), ("w", j)) for i in range(m) for j in range(n)]
        edges += [(("w", j), "t") for j in range(n)]
        self.edges = edges
        self.cap = np.array(list(sums.R) + [1] * (m * n) + list(sums.S), dtype=np.int64)
        self.flow = np.zeros(len(edges), dtype=np.int64) if flow is None else np.array(flow, dtype=np.int64)
        self.augmentations = 0
        self.size_history: list[int] = []

    # edge index helpers
    def e_s(self, i: int) -> int:
        return i

    def e_mid(self, i: int, j: int) -> int:
        return self.m + i * self.n + j

    def e_t(self, j: int) -> int:
        return self.m + self.m * self.n + j

    @property
    def vertices(self) -> list:
        return ["s", "t"] + [("v", i) for i in range(self.m)] + [("w", j) for j in range(self.n)]

    def size(self) -> int:
        return int(self.flow[: self.m].sum())

    def sink_inflow(self) -> int:
        return int(self.flow[self.e_t(0):].sum())

    def matrix(self) -> BinaryMatrix:
        mid = self.flow[self.m: self.m + self.m * self.n].reshape(self.m, self.n)
        return BinaryMatrix(mid)

    def copy(self) -> "FlowNetwork":
        net = FlowNetwork(self.sums, self.flow.copy())
        net.augmentations = self.augmentations
        net.size_history = list(self.size_history)
        return net

    def is_valid(self) -> bool:
        """Capacity bounds and conservation at every inner vertex."""
        if np.any(self.flow < 0) or np.any(self.flow > self.cap):
            return False
        bal = Counter()
        for (u, v), y in zip(self.edges, self.flow):
            bal[u] -= int(y)
            bal[v] += int(y)
        return all(bal[v] == 0 for v in self.vertices if v not in ("s", "t"))


def build_network(sums: SumVectors, seed: BinaryMatrix | None = None) -> FlowNetwork:
    """Network for ``sums``, with zero flow or the flow corresponding to ``seed``."""
    if not sums.in_bounds:
        raise InvalidInput(f"sums out of range for a {sums.m}x{sums.n} matrix")
    net = FlowNetwork(sums)
    if seed is not None:
        if seed.shape != (sums.m, sums.n):
            raise InvalidInput(f"seed matrix shape {seed.shape} != {(sums.m, sums.n)}")
        if np.any(seed.row_sums > np.asarray(sums.R)) or np.any(seed.col_sums > np.asarray(sums.S)):
            raise InvalidInput("seed matrix exceeds a prescribed row or column sum")
        net.flow[: sums.m] = seed.row_sums
        net.flow[sums.m: sums.m + sums.m * sums.n] = seed.entries.ravel()
        net.flow[net.e_t(0):] = seed.col_sums
    return net


def _augmenting_path(net: FlowNetwork) -> list[tuple[int, int]] | None:
    """Shortest augmenting path by BFS over the residual network.

    Returns ``[(edge, +1 forward | -1 backward), ...]`` from s to t, or None.
    """
    adj: dict = {v: [] for v in net.vertices}
    for e, (u, v) in enumerate(net.edges):
        adj[u].append((e, v, +1))
        adj[v].append((e, u, -1))
    parent: dict = {"s": None}
    queue = deque(["s"])
    while queue:
        u = queue.popleft()
        for e, v, d in adj[u]:
            if v in parent:
                continue
            if (d > 0 and net.flow[e] < net.cap[e]) or (d < 0 and net.flow[e] > 0):
                parent[v] = (u, e, d)
                if v == "t":
                    path = []
                    while parent[v] is not None:
                        u0, e0, d0 = parent[v]
                        path.append((e0, d0))
                        v = u0
                    return path[::-1]
                queue.append(v)
    return None


def max_flow(net: FlowNetwork) -> FlowNetwork:
    """Augment along shortest paths until none is left; returns a new network.

    ``augmentations`` counts the paths used and ``size_history`` records the
    flow size before the first and after every augmentation.
    """
    out = net.copy()
    out.size_history.append(out.size())
    while (path := _augmenting_path(out)) is not None:
        delta = min(int(out.cap[e] - out.flow[e]) if d > 0 else int(out.flow[e]) for e, d in path)
        for e, d in path:
            out.flow[e] += d * delta
        out.augmentations += 1
        out.size_history.append(out.size())
    return out


# -- switching chains -------------------------------------------------------------

def find_switching_chain(A: BinaryMatrix, i: int, j: int) -> list[Cell] | None:
    """Shortest switching chain starting at the 1-entry ``(i, j)``, by breadth-first labelling.

    Even labels sit on 1-entries and spread along rows to unlabelled zeros;
    odd labels sit on 0-entries and spread along columns to unlabelled ones.
    Rows are scanned top to bottom and columns left to right; among the
    zeros reached in column ``j`` at the first successful level, the smallest
    row wins. Returns None when the labelling dies out.
    """
    a = A.entries
    m, n = a.shape
    if a[i, j] != 1:
        raise InvalidInput(f"chain must start at a 1-entry, a[{i},{j}] = {a[i, j]}")
    parent: dict[Cell, Cell | None] = {(i, j): None}
    frontier = [(i, j)]
    done_rows: set[int] = set()
    done_cols: set[int] = set()
    level = 0
    while frontier:
        new: list[Cell] = []
        for (r, c) in frontier:
            if level % 2 == 0:
                if r in done_rows:
                    continue
                done_rows.add(r)
                cand = [(r, cc) for cc in range(n) if a[r, cc] == 0]
            else:
                if c in done_cols:
                    continue
                done_cols.add(c)
                cand = [(rr, c) for rr in range(m) if a[rr, c] == 1]
            for cell in cand:
                if cell not in parent:
                    parent[cell] = (r, c)
                    new.append(cell)
        level += 1
        frontier = sorted(new)
        if level % 2 == 1:
            ends = [cell for cell in frontier if cell[1] == j]
            if ends:
                cell = min(ends)
                chain = []
                while cell is not None:
                    chain.append(cell)
                    cell = parent[cell]
                return chain[::-1]
    return None


def is_switching_chain(A: BinaryMatrix, chain: Sequence[Cell], i: int | None = None, j: int | None = None) -> bool:
    """Check the eight defining conditions of a switching chain in ``A``."""
    a = A.entries
    m, n = a.shape
    if not chain:
        return False
    l = len(chain) - 1
    if l % 2 != 1:
        return False
    if i is not None and (chain[0][0] != i or chain[0][1] != j):
        return False
    if any(not (0 <= r < m and 0 <= c < n) for r, c in chain):
        return False
    for k in range(l):
        (r0, c0), (r1, c1) = chain[k], chain[k + 1]
        if k % 2 == 0 and not (r0 == r1 and c0 != c1):
            return False
        if k % 2 == 1 and not (c0 == c1 and r0 != r1):
            return False
    if not (chain[l][1] == chain[0][1] and chain[l][0] != chain[0][0]):
        return False
    if a[chain[0]] != 1:
        return False
    for k in range(1, l + 1):
        if a[chain[k]] != (1 if k % 2 == 0 else 0):
            return False
    return len(set(chain)) == len(chain)


def apply_switching_chain(A: BinaryMatrix, chain: Sequence[Cell]) -> BinaryMatrix:
    """Swap zeros and ones along ``chain``; marginals are unchanged.

    ``chain`` may also be a chain that was already swapped (its entries then
    read 0, 1, 0, ...), so applying the same chain twice restores ``A``.
    """
    if any(not (0 <= r < A.m and 0 <= c < A.n) for r, c in chain):
        raise InvalidInput(f"chain leaves the {A.m}x{A.n} matrix: {list(chain)}")
    out = A.copy()
    for cell in chain:
        out.flip(*cell)
    if not (is_switching_chain(A, chain) or is_switching_chain(out, chain)):
        raise InvalidInput(f"not a switching chain of the matrix: {list(chain)}")
    return out


# -- reconstruction ---------------------------------------------------------------

@dataclass
class Reconstruction:
    sums: SumVectors
    matrix: BinaryMatrix | None
    flow_size: int
    augmentations: int
    deficiency: list[int] = field(default_factory=list)
    initial: BinaryMatrix | None = None

    @property
    def feasible(self) -> bool:
        return self.matrix is not None


def _augment_by_chains(A: BinaryMatrix, sums: SumVectors) -> tuple[BinaryMatrix, int, list[int]]:
    r = np.asarray(sums.R)
    s = np.asarray(sums.S)
    A = A.copy()
    steps = 0
    deficiency = [sums.total - int(A.row_sums.sum())]
    while deficiency[-1] > 0:
        rows = np.flatnonzero(A.row_sums < r)
        cols = np.flatnonzero(A.col_sums < s)
        progressed = False
        free = [(i, j) for i in rows for j in cols if A[i, j] == 0]
        if free:
            A.set(*free[0], 1)
            progressed = True
        else:
            for i in rows:
                for j in cols:
                    chain = find_switching_chain(A, int(i), int(j))
                    if chain is not None:
                        A = apply_switching_chain(A, chain)
                        A.set(int(i), int(j), 1)
                        progressed = True
                        break
                if progressed:
                    break
        if not progressed:
            break
        steps += 1
        deficiency.append(sums.total - int(A.row_sums.sum()))
    return A, steps, deficiency


def reconstruct(sums: SumVectors, init: str = "lav", method: str = "flow") -> Reconstruction:
    """Binary matrix with marginals ``sums``, or an infeasible verdict.

    ``init`` is ``"lav"`` (least average value fill) or ``"zero"``; ``method``
    is ``"flow"`` (shortest augmenting paths in the network) or ``"chains"``
    (switching chains on the matrix). Feasibility is decided by whether the
    maximal flow saturates every source edge.
    """
    sums.require_compatible()
    if init == "lav":
        start, _ = lav_fill(sums)
    elif init == "zero":
        start = BinaryMatrix.zeros(sums.m, sums.n)
    else:
        raise InvalidInput(f"unknown init {init!r}")

    if method == "flow":
        net = max_flow(build_network(sums, start))
        size = net.size()
        deficiency = [sums.total - v for v in net.size_history]
        A = net.matrix()
        steps = net.augmentations
    elif method == "chains":
        A, steps, deficiency = _augment_by_chains(start, sums)
        size = int(A.row_sums.sum())
    else:
        raise InvalidInput(f"unknown method {method!r}")
    matrix = A if size == sums.total else None
    return Reconstruction(sums, matrix, size, steps, deficiency, start)


# -- oracles ----------------------------------------------------------------------

def brute_force_solutions(sums: SumVectors) -> list[BinaryMatrix]:
    """All binary matrices with the given marginals, by enumerating every 0/1 matrix."""
    m, n = sums.m, sums.n
    if m * n > 16:
        raise InvalidInput(f"brute force limited to m*n <= 16, got {m * n}")
    codes = np.arange(2 ** (m * n), dtype=np.int64)
    bits = ((codes[:, None] >> np.arange(m * n)) & 1).astype(np.uint8).reshape(-1, m, n)
    ok = (np.all(bits.sum(axis=2) == np.asarray(sums.R), axis=1)
          & np.all(bits.sum(axis=1) == np.asarray(sums.S), axis=1))
    return [BinaryMatrix(b) for b in bits[ok]]


def mirsky_feasible(sums: SumVectors) -> bool:
    """Check |I||J| >= sum_{I} r_i - sum_{not J} s_j for every row set I and column set J."""
    m, n = sums.m, sums.n
    if m > 12 or n > 12:
        raise InvalidInput("subset enumeration limited to m, n <= 12")
    if sum(sums.R) != sum(sums.S):
        return False
    r = np.asarray(sums.R, dtype=np.int64)
    s = np.asarray(sums.S, dtype=np.int64)
    Jmask = (np.arange(2 ** n)[:, None] >> np.arange(n)) & 1
    Jsize = Jmask.sum(axis=1)
    s_out = ((1 - Jmask) * s).sum(axis=1)
    for I in itertools.product((0, 1), repeat=m):
        Iv = np.asarray(I)
        if np.any(Iv.sum() * Jsize < (Iv * r).sum() - s_out):
            return False
    return True


# -- file formats -----------------------------------------------------------------

def read_sums(path) -> SumVectors:
    """Parse a two-line ``R: ...`` / ``S: ...`` file."""
    found: dict[str, tuple[int, ...]] = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        key = key.strip().upper()
        if not sep or key not in ("R", "S") or key in found:
            raise InvalidInput(f"{path}:{lineno}: expected 'R: ...' or 'S: ...', got {raw!r}")
        try:
            found[key] = tuple(int(v) for v in rest.split())
        except ValueError as exc:
            raise InvalidInput(f"{path}:{lineno}: non-integer sum in {raw!r}") from exc
    if set(found) != {"R", "S"}:
        raise InvalidInput(f"{path}: both 'R:' and 'S:' lines are required")
    return SumVectors(found["R"], found["S"])


def format_matrix(a) -> str:
    a = a.entries if isinstance(a, BinaryMatrix) else np.asarray(a)
    return "\n".join(" ".join(str(int(v)) for v in row) for row in a) + "\n"


def format_pgm(A: BinaryMatrix) -> str:
    """Plain PGM (P2); ones are black."""
    lines = ["P2", f"{A.n} {A.m}", "1"]
    lines += [" ".join(str(1 - int(v)) for v in row) for row in A.entries]
    return "\n".join(lines) + "\n"


def format_trace(events: Sequence[TraceEvent]) -> str:
    """Human-readable trace; visited zeros/ones are marked with a trailing ``*``."""
    out = []
    for k, ev in enumerate(events):
        out.append(f"# step {k}: {ev.describe()}")
        for row, vis in zip(ev.matrix, ev.visited):
            out.append(" ".join(f"{int(v)}{'*' if w else ' '}" for v, w in zip(row, vis)).rstrip())
        out.append("")
    return "\n".join(out)
